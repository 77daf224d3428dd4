#include "gstab/dense_simulator.hpp"

#include <cmath>

#include "gstab/errors.hpp"
#include "gstab/pauli_string.hpp"

namespace gstab {

MeasurementRecord DenseSimulator::measure(Vertex q, std::optional<bool> forced) {
    const double p1 = state_.probability_one(q);
    MeasurementRecord record{q, false, false};
    constexpr double eps = 1e-9;
    if (p1 < eps || p1 > 1 - eps) {
        record.deterministic = true;
        record.outcome = p1 > 0.5;
        if (forced && *forced != record.outcome) {
            throw ForcedOutcomeError("qubit " + std::to_string(q) + " deterministically measures " +
                                     std::to_string(int(record.outcome)) + ", cannot force " +
                                     std::to_string(int(*forced)));
        }
    } else {
        if (std::abs(p1 - 0.5) > 1e-6) {
            throw std::logic_error("dense state is not a stabilizer state: P(1) = " + std::to_string(p1));
        }
        record.outcome = forced ? *forced : rng_.next_bit();
    }
    state_.project(q, record.outcome);
    return record;
}

DenseState dense_from_graphreg(const GraphRegister &reg) {
    const std::size_t n = reg.size();
    DenseState state(n);
    state.amplitudes().setConstant(std::pow(2.0, -0.5 * double(n)));
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b : reg.neighbors(a)) {
            if (a < b) {
                state.apply_cz(a, b);
            }
        }
    }
    for (Vertex a = 0; a < n; ++a) {
        state.apply(a, clifford_matrix(reg.vop(a)));
    }
    return state;
}

DenseState apply_pauli_string(const DenseState &state, const PauliString &p) {
    if (p.size() != state.qubits()) {
        throw std::invalid_argument("Pauli string length does not match state");
    }
    DenseState out = state;
    for (std::size_t q = 0; q < p.size(); ++q) {
        if (p.get(q) != Pauli::I) {
            out.apply(q, matrices::pauli(p.get(q)));
        }
    }
    if (p.negative()) {
        out.amplitudes() = -out.amplitudes();
    }
    return out;
}

}  // namespace gstab
