#include "gstab/tableau.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gstab/errors.hpp"

namespace gstab {

Tableau Tableau::from_strings(const std::vector<std::string> &rows) {
    Tableau t;
    t.n = rows.size();
    for (const auto &text : rows) {
        t.rows.push_back(PauliString::parse(text));
        if (t.rows.back().size() != t.n) {
            throw std::invalid_argument("tableau row '" + text + "' does not have " + std::to_string(t.n) + " letters");
        }
    }
    return t;
}

namespace {

bool column_bit(const PauliString &row, std::size_t n, std::size_t col) {
    return col < n ? row.x(col) : row.z(col - n);
}

// Row-reduces in place; returns the rank. Throws if a product comes out
// non-Hermitian, which means two rows anticommute.
std::size_t row_reduce(std::vector<PauliString> &rows, std::size_t n) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !column_bit(rows[pivot], n, col)) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != rank && column_bit(rows[i], n, col)) {
                if (rows[i].multiply_right(rows[rank]) != 0) {
                    throw std::invalid_argument("tableau rows do not commute");
                }
            }
        }
        ++rank;
    }
    return rank;
}

bool pairwise_commuting(const std::vector<PauliString> &rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (!rows[i].commutes_with(rows[j])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

bool Tableau::is_valid() const {
    if (rows.size() != n || !pairwise_commuting(rows)) {
        return false;
    }
    for (const auto &row : rows) {
        if (row.size() != n) {
            return false;
        }
    }
    std::vector<PauliString> copy = rows;
    return row_reduce(copy, n) == n;
}

std::string Tableau::to_text() const {
    std::string out;
    for (const auto &row : rows) {
        out += row.to_string();
        out += '\n';
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const Tableau &t) { return out << t.to_text(); }

Tableau canonicalize(const Tableau &t) {
    if (t.rows.size() != t.n) {
        throw std::invalid_argument("tableau needs exactly n rows");
    }
    if (!pairwise_commuting(t.rows)) {
        throw std::invalid_argument("tableau rows do not commute");
    }
    Tableau out = t;
    if (row_reduce(out.rows, out.n) != out.n) {
        throw std::invalid_argument("tableau rows are dependent");
    }
    return out;
}

Tableau tableau_from_graphreg(const GraphRegister &reg) {
    Tableau t;
    t.n = reg.size();
    t.rows.reserve(t.n);
    for (Vertex a = 0; a < t.n; ++a) {
        PauliString row(t.n);
        const SignedPauli center = transform_pauli(reg.vop(a), Pauli::X);
        row.set(a, center.letter);
        bool negative = center.negative;
        for (Vertex b : reg.neighbors(a)) {
            const SignedPauli image = transform_pauli(reg.vop(b), Pauli::Z);
            row.set(b, image.letter);
            negative ^= image.negative;
        }
        row.set_negative(negative);
        t.rows.push_back(std::move(row));
    }
    return t;
}

TableauSimulator::TableauSimulator(std::size_t n, std::uint64_t seed) : n_(n), rows_(2 * n, PauliString(n)), rng_(seed) {
    if (n == 0) {
        throw std::invalid_argument("a register needs at least one qubit");
    }
    for (std::size_t q = 0; q < n; ++q) {
        rows_[q].set(q, Pauli::X);
        rows_[n + q].set(q, Pauli::Z);
    }
}

void TableauSimulator::check(Vertex q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
    }
}

void TableauSimulator::check_pair(Vertex a, Vertex b) const {
    check(a);
    check(b);
    if (a == b) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
}

void TableauSimulator::hadamard(Vertex q) {
    check(q);
    for (auto &row : rows_) {
        const bool x = row.x(q), z = row.z(q);
        row.set_negative(row.negative() ^ (x && z));
        if (x != z) {
            row.flip_x(q);
            row.flip_z(q);
        }
    }
}

void TableauSimulator::s_gate(Vertex q) {
    check(q);
    for (auto &row : rows_) {
        const bool x = row.x(q), z = row.z(q);
        row.set_negative(row.negative() ^ (x && z));
        if (x) {
            row.flip_z(q);
        }
    }
}

void TableauSimulator::s_dagger(Vertex q) {
    check(q);
    for (auto &row : rows_) {
        const bool x = row.x(q), z = row.z(q);
        row.set_negative(row.negative() ^ (x && !z));
        if (x) {
            row.flip_z(q);
        }
    }
}

void TableauSimulator::x(Vertex q) {
    check(q);
    for (auto &row : rows_) {
        row.set_negative(row.negative() ^ row.z(q));
    }
}

void TableauSimulator::y(Vertex q) {
    check(q);
    for (auto &row : rows_) {
        row.set_negative(row.negative() ^ (row.x(q) != row.z(q)));
    }
}

void TableauSimulator::z(Vertex q) {
    check(q);
    for (auto &row : rows_) {
        row.set_negative(row.negative() ^ row.x(q));
    }
}

void TableauSimulator::cnot(Vertex c, Vertex t) {
    check_pair(c, t);
    for (auto &row : rows_) {
        const bool xc = row.x(c), zc = row.z(c), xt = row.x(t), zt = row.z(t);
        row.set_negative(row.negative() ^ (xc && zt && (xt == zc)));
        if (xc) {
            row.flip_x(t);
        }
        if (zt) {
            row.flip_z(c);
        }
    }
}

void TableauSimulator::cphase(Vertex a, Vertex b) {
    check_pair(a, b);
    for (auto &row : rows_) {
        const bool xa = row.x(a), za = row.z(a), xb = row.x(b), zb = row.z(b);
        row.set_negative(row.negative() ^ (xa && xb && (za != zb)));
        if (xb) {
            row.flip_z(a);
        }
        if (xa) {
            row.flip_z(b);
        }
    }
}

MeasurementRecord TableauSimulator::measure(Vertex q, std::optional<bool> forced) {
    check(q);
    MeasurementRecord record{q, false, false};
    std::size_t p = n_;
    while (p < 2 * n_ && !rows_[p].x(q)) {
        ++p;
    }
    if (p < 2 * n_) {
        record.outcome = forced ? *forced : rng_.next_bit();
        for (std::size_t i = 0; i < 2 * n_; ++i) {
            if (i != p && rows_[i].x(q)) {
                // Destabilizer phases are irrelevant, so a leftover i is dropped.
                rows_[i].multiply_right(rows_[p]);
            }
        }
        rows_[p - n_] = rows_[p];
        PauliString collapsed(n_);
        collapsed.set(q, Pauli::Z);
        collapsed.set_negative(record.outcome);
        rows_[p] = std::move(collapsed);
        return record;
    }

    PauliString scratch(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows_[i].x(q)) {
            scratch.multiply_right(rows_[i + n_]);
        }
    }
    record.deterministic = true;
    record.outcome = scratch.negative();
    if (forced && *forced != record.outcome) {
        throw ForcedOutcomeError("qubit " + std::to_string(q) + " deterministically measures " +
                                 std::to_string(int(record.outcome)) + ", cannot force " + std::to_string(int(*forced)));
    }
    return record;
}

Tableau TableauSimulator::stabilizers() const {
    Tableau t;
    t.n = n_;
    t.rows.assign(rows_.begin() + static_cast<std::ptrdiff_t>(n_), rows_.end());
    return t;
}

}  // namespace gstab
