#include "gstab/local_clifford.hpp"

#include <deque>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gstab {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

std::ostream &operator<<(std::ostream &out, const SignedPauli &p) {
    return out << (p.negative ? '-' : '+') << pauli_char(p.letter);
}

LocalClifford LocalClifford::from_index(unsigned index) {
    if (index >= kCount) {
        throw std::out_of_range("local Clifford index " + std::to_string(index) + " is not below 24");
    }
    return LocalClifford(static_cast<std::uint8_t>(index));
}

std::string to_string(const GeneratorWord &word) {
    if (word.empty()) {
        return "I";
    }
    std::string out;
    for (std::size_t k = 0; k < word.factors.size(); ++k) {
        if (k) {
            out += ' ';
        }
        out += word.factors[k] == Generator::SqrtMinusIX ? "sqrt(-iX)" : "sqrt(iZ)";
    }
    return out;
}

int CliffordTables::find(const Matrix2c<double> &m) const {
    for (unsigned k = 0; k < LocalClifford::kCount; ++k) {
        if (equal_up_to_phase(matrix[k], m)) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

namespace {

using M2 = Matrix2c<double>;
using M4 = Eigen::Matrix<std::complex<double>, 4, 4>;

int find_in(const std::vector<M2> &found, const M2 &m) {
    for (std::size_t k = 0; k < found.size(); ++k) {
        if (equal_up_to_phase(found[k], m)) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

M4 kron(const M2 &a, const M2 &b) {
    M4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

M4 cz_matrix() {
    M4 m = M4::Identity();
    m(3, 3) = -1;
    return m;
}

std::uint8_t checked_index(int k, const char *what) {
    if (k < 0) {
        throw std::logic_error(std::string("local Clifford table construction: ") + what +
                               " is not a group element");
    }
    return static_cast<std::uint8_t>(k);
}

}  // namespace

CliffordTables build_clifford_tables() {
    CliffordTables t{};

    // Enumerate: Paulis pinned at 0..3, the rest by breadth-first search
    // over right products with H then S.
    std::vector<M2> found = {matrices::identity(), matrices::pauli(Pauli::X), matrices::pauli(Pauli::Y),
                             matrices::pauli(Pauli::Z)};
    std::vector<std::string> words = {"I", "X", "Y", "Z"};
    const std::array<std::pair<M2, const char *>, 2> gens = {
        std::pair{matrices::hadamard(), "H"}, std::pair{matrices::phase(), "S"}};
    for (std::size_t head = 0; head < found.size(); ++head) {
        for (const auto &[g, g_name] : gens) {
            M2 next = found[head] * g;
            if (find_in(found, next) < 0) {
                found.push_back(next);
                words.push_back(head == 0 ? std::string(g_name) : words[head] + g_name);
            }
        }
    }
    if (found.size() != LocalClifford::kCount) {
        throw std::logic_error("local Clifford enumeration found " + std::to_string(found.size()) +
                               " elements instead of 24");
    }
    for (unsigned k = 0; k < LocalClifford::kCount; ++k) {
        t.matrix[k] = found[k];
        t.name[k] = words[k];
    }

    for (unsigned a = 0; a < LocalClifford::kCount; ++a) {
        for (unsigned b = 0; b < LocalClifford::kCount; ++b) {
            t.product[a][b] = checked_index(t.find(t.matrix[a] * t.matrix[b]), "product");
        }
        t.adjoint[a] = checked_index(t.find(t.matrix[a].adjoint()), "adjoint");
    }

    constexpr std::array<Pauli, 4> letters = {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y};
    for (unsigned c = 0; c < LocalClifford::kCount; ++c) {
        for (Pauli p : letters) {
            const M2 image = t.matrix[c].adjoint() * matrices::pauli(p) * t.matrix[c];
            bool matched = false;
            for (Pauli q : letters) {
                const M2 target = matrices::pauli(q);
                if ((image - target).cwiseAbs().maxCoeff() < 1e-12) {
                    t.conjugation[c][static_cast<unsigned>(p)] = {q, false};
                    matched = true;
                } else if ((image + target).cwiseAbs().maxCoeff() < 1e-12) {
                    t.conjugation[c][static_cast<unsigned>(p)] = {q, true};
                    matched = true;
                }
            }
            if (!matched) {
                throw std::logic_error("Pauli conjugation left the signed Pauli group");
            }
        }
    }

    // Shortest words over {sqrt(-iX), sqrt(iZ)}; appending in generator order
    // keeps the first word found for each element lexicographically least.
    std::array<bool, LocalClifford::kCount> reached{};
    std::deque<std::uint8_t> queue;
    reached[lc::kIdentity] = true;
    queue.push_back(lc::kIdentity);
    while (!queue.empty()) {
        const std::uint8_t head = queue.front();
        queue.pop_front();
        for (Generator g : {Generator::SqrtMinusIX, Generator::SqrtIZ}) {
            const int k = t.find(t.matrix[head] * matrices::generator(g));
            const auto next = checked_index(k, "generator product");
            if (!reached[next]) {
                reached[next] = true;
                t.decomposition[next] = t.decomposition[head];
                t.decomposition[next].factors.push_back(g);
                queue.push_back(next);
            }
        }
    }
    for (unsigned c = 0; c < LocalClifford::kCount; ++c) {
        if (!reached[c] || t.decomposition[c].size() > 5) {
            throw std::logic_error("local Clifford " + std::to_string(c) + " has no generator word of length <= 5");
        }
    }

    const M4 cz = cz_matrix();
    for (unsigned c = 0; c < LocalClifford::kCount; ++c) {
        const M4 local = kron(t.matrix[c], M2::Identity());
        t.cz_commuting[c] = equal_up_to_phase(local * cz * local.adjoint(), cz);
    }
    return t;
}

const CliffordTables &clifford_tables() {
    static const CliffordTables tables = build_clifford_tables();
    return tables;
}

void dump_clifford_tables(std::ostream &out, const CliffordTables &t) {
    out << "# index name adjoint cz_commuting conj(X) conj(Y) conj(Z) decomposition\n";
    for (unsigned c = 0; c < LocalClifford::kCount; ++c) {
        out << c << ' ' << t.name[c] << ' ' << int(t.adjoint[c]) << ' ' << (t.cz_commuting[c] ? 1 : 0) << ' '
            << t.conjugation[c][static_cast<unsigned>(Pauli::X)] << ' '
            << t.conjugation[c][static_cast<unsigned>(Pauli::Y)] << ' '
            << t.conjugation[c][static_cast<unsigned>(Pauli::Z)] << ' ' << to_string(t.decomposition[c]) << '\n';
    }
    out << "# product a b -> a*b\n";
    for (unsigned a = 0; a < LocalClifford::kCount; ++a) {
        for (unsigned b = 0; b < LocalClifford::kCount; ++b) {
            out << "product " << a << ' ' << b << ' ' << int(t.product[a][b]) << '\n';
        }
    }
}

std::ostream &operator<<(std::ostream &out, LocalClifford c) { return out << name(c); }

namespace lc {

namespace {
LocalClifford lookup(const M2 &m) {
    return LocalClifford::from_index(checked_index(clifford_tables().find(m), "named operator"));
}
}  // namespace

LocalClifford I() { return LocalClifford::from_index(kIdentity); }
LocalClifford X() { return LocalClifford::from_index(kX); }
LocalClifford Y() { return LocalClifford::from_index(kY); }
LocalClifford Z() { return LocalClifford::from_index(kZ); }
LocalClifford H() {
    static const LocalClifford c = lookup(matrices::hadamard());
    return c;
}
LocalClifford S() {
    static const LocalClifford c = lookup(matrices::phase());
    return c;
}
LocalClifford S_dag() {
    static const LocalClifford c = lookup(matrices::phase().adjoint());
    return c;
}
LocalClifford sqrt_iX() {
    static const LocalClifford c = lookup(matrices::sqrt_pauli(Pauli::X, +1));
    return c;
}
LocalClifford sqrt_minus_iX() {
    static const LocalClifford c = lookup(matrices::sqrt_pauli(Pauli::X, -1));
    return c;
}
LocalClifford sqrt_iY() {
    static const LocalClifford c = lookup(matrices::sqrt_pauli(Pauli::Y, +1));
    return c;
}
LocalClifford sqrt_minus_iY() {
    static const LocalClifford c = lookup(matrices::sqrt_pauli(Pauli::Y, -1));
    return c;
}
LocalClifford sqrt_iZ() {
    static const LocalClifford c = lookup(matrices::sqrt_pauli(Pauli::Z, +1));
    return c;
}
LocalClifford sqrt_minus_iZ() {
    static const LocalClifford c = lookup(matrices::sqrt_pauli(Pauli::Z, -1));
    return c;
}
LocalClifford pauli(Pauli p) {
    switch (p) {
        case Pauli::I: return I();
        case Pauli::X: return X();
        case Pauli::Y: return Y();
        case Pauli::Z: return Z();
    }
    return I();
}

}  // namespace lc

}  // namespace gstab
