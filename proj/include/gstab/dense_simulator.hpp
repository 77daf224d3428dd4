#pragma once

#include <cstdint>
#include <optional>

#include "gstab/dense_state.hpp"
#include "gstab/graph_register.hpp"
#include "gstab/measurement.hpp"
#include "gstab/pauli_string.hpp"
#include "gstab/rng.hpp"

namespace gstab {

/// Exact state-vector engine with the same gate and measurement surface as
/// GraphRegister. Limited to DenseState::kMaxQubits qubits.
class DenseSimulator {
  public:
    DenseSimulator(std::size_t n, std::uint64_t seed) : state_(n), rng_(seed) {}

    std::size_t size() const { return state_.qubits(); }
    const DenseState &state() const { return state_; }

    void apply_local(Vertex q, LocalClifford c) { state_.apply(q, clifford_matrix(c)); }
    void hadamard(Vertex q) { state_.apply(q, matrices::hadamard()); }
    void s_gate(Vertex q) { state_.apply(q, matrices::phase()); }
    void s_dagger(Vertex q) { state_.apply(q, matrices::phase().adjoint().eval()); }
    void x(Vertex q) { state_.apply(q, matrices::pauli(Pauli::X)); }
    void y(Vertex q) { state_.apply(q, matrices::pauli(Pauli::Y)); }
    void z(Vertex q) { state_.apply(q, matrices::pauli(Pauli::Z)); }
    void cphase(Vertex a, Vertex b) { state_.apply_cz(a, b); }
    void cnot(Vertex control, Vertex target) { state_.apply_cnot(control, target); }

    /// Outcomes with probability 0 or 1 are deterministic; anything else
    /// must be an even split and consumes one random bit unless forced.
    /// Forcing an impossible outcome throws ForcedOutcomeError.
    MeasurementRecord measure(Vertex q, std::optional<bool> forced = std::nullopt);

  private:
    DenseState state_;
    OutcomeRng rng_;
};

/// |+>^n, then CZ on every edge, then each vertex operator.
DenseState dense_from_graphreg(const GraphRegister &reg);

/// Applies the Pauli string (including its sign) to a state.
DenseState apply_pauli_string(const DenseState &state, const PauliString &p);

}  // namespace gstab
