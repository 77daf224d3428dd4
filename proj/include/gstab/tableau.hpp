#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gstab/graph_register.hpp"
#include "gstab/measurement.hpp"
#include "gstab/pauli_string.hpp"
#include "gstab/rng.hpp"

namespace gstab {

/// A list of n stabilizer generators on n qubits.
struct Tableau {
    std::size_t n = 0;
    std::vector<PauliString> rows;

    /// Rows from `+ZZXI` style strings.
    static Tableau from_strings(const std::vector<std::string> &rows);

    /// Pairwise commuting and independent over GF(2).
    bool is_valid() const;

    /// One generator per line, e.g. `+ZZXI`.
    std::string to_text() const;

    friend bool operator==(const Tableau &, const Tableau &) = default;
};

std::ostream &operator<<(std::ostream &out, const Tableau &t);

/// Reduced row echelon form of the generator list, pivoting over the X
/// columns first and then the Z columns, with signs carried through the
/// row products. Two generator lists span the same stabilizer group iff
/// their canonical forms are identical. Throws std::invalid_argument for
/// dependent or non-commuting rows.
Tableau canonicalize(const Tableau &t);

/// Generators K_a = X_a prod_{b ~ a} Z_b pushed through the vertex
/// operators: C K C^dagger.
Tableau tableau_from_graphreg(const GraphRegister &reg);

/// Stabilizer/destabilizer tableau simulator in the style of CHP.
class TableauSimulator {
  public:
    TableauSimulator(std::size_t n, std::uint64_t seed);

    std::size_t size() const { return n_; }

    void hadamard(Vertex q);
    void s_gate(Vertex q);
    void s_dagger(Vertex q);
    void x(Vertex q);
    void y(Vertex q);
    void z(Vertex q);
    void cnot(Vertex control, Vertex target);
    void cphase(Vertex a, Vertex b);

    /// Forcing the complement of a deterministic outcome throws
    /// ForcedOutcomeError.
    MeasurementRecord measure(Vertex q, std::optional<bool> forced = std::nullopt);

    Tableau stabilizers() const;

  private:
    void check(Vertex q) const;
    void check_pair(Vertex a, Vertex b) const;

    std::size_t n_;
    // Rows 0..n-1 destabilizers, n..2n-1 stabilizers.
    std::vector<PauliString> rows_;
    OutcomeRng rng_;
};

}  // namespace gstab
