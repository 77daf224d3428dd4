#include "gstab/cz_table.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>

namespace gstab {

Eigen::Vector4cd two_qubit_state(const CzKey &key) {
    Eigen::Vector4cd psi = Eigen::Vector4cd::Constant(0.5);
    if (key.edge) {
        psi(3) = -psi(3);
    }
    const auto ca = clifford_matrix(key.vop_a);
    const auto cb = clifford_matrix(key.vop_b);
    Eigen::Vector4cd out = Eigen::Vector4cd::Zero();
    // Index bit 0 is vertex a, bit 1 is vertex b.
    for (int in = 0; in < 4; ++in) {
        for (int out_idx = 0; out_idx < 4; ++out_idx) {
            out(out_idx) += ca(out_idx & 1, in & 1) * cb(out_idx >> 1, in >> 1) * psi(in);
        }
    }
    return out;
}

CzKey CzTable::key_at(std::size_t s) {
    constexpr std::size_t n = LocalClifford::kCount;
    return {s >= n * n, LocalClifford::from_index(static_cast<unsigned>((s % (n * n)) / n)),
            LocalClifford::from_index(static_cast<unsigned>(s % n))};
}

CzTable CzTable::build() {
    std::array<Eigen::Vector4cd, kSize> states;
    for (std::size_t s = 0; s < kSize; ++s) {
        states[s] = two_qubit_state(key_at(s));
    }

    CzTable table;
    for (std::size_t s = 0; s < kSize; ++s) {
        const CzKey key = key_at(s);
        Eigen::Vector4cd target = states[s];
        target(3) = -target(3);
        // Slots are ordered by (edge, a, b), so the first admissible match wins.
        std::optional<CzEntry> chosen;
        for (std::size_t c = 0; c < kSize && !chosen; ++c) {
            const CzKey candidate = key_at(c);
            if (commutes_with_cz(key.vop_a) && !commutes_with_cz(candidate.vop_a)) {
                continue;
            }
            if (commutes_with_cz(key.vop_b) && !commutes_with_cz(candidate.vop_b)) {
                continue;
            }
            if (equal_up_to_phase(states[c], target, 1e-10)) {
                chosen = candidate;
            }
        }
        if (!chosen) {
            throw std::logic_error("CZ table: no admissible representation for key slot " + std::to_string(s));
        }
        table.entries_[s] = *chosen;
    }
    return table;
}

void CzTable::dump(std::ostream &out) const {
    for (std::size_t s = 0; s < kSize; ++s) {
        const CzKey key = key_at(s);
        const CzEntry &e = entries_[s];
        out << int(key.edge) << ' ' << int(key.vop_a.index()) << ' ' << int(key.vop_b.index()) << " -> "
            << int(e.edge) << ' ' << int(e.vop_a.index()) << ' ' << int(e.vop_b.index()) << '\n';
    }
}

std::shared_ptr<const CzTable> default_cz_table() {
    static const auto table = std::make_shared<const CzTable>(CzTable::build());
    return table;
}

}  // namespace gstab
