#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include "gstab/circuit.hpp"
#include "gstab/cz_table.hpp"

namespace gstab {

/// Relative frequency of each instruction kind, indexed by Op.
struct GateWeights {
    std::array<unsigned, 9> weight = {
        2,  // h
        2,  // s
        1,  // sdg
        1,  // x
        1,  // y
        1,  // z
        3,  // cz
        3,  // cnot
        2,  // measure
    };

    unsigned &operator[](Op op) { return weight[static_cast<std::size_t>(op)]; }
    unsigned operator[](Op op) const { return weight[static_cast<std::size_t>(op)]; }
};

struct FuzzConfig {
    std::uint64_t seed = 0;
    std::size_t min_qubits = 1;
    std::size_t max_qubits = 8;
    /// Circuit lengths are drawn uniformly from [1, max_length].
    std::size_t max_length = 40;
    std::size_t iterations = 100;
    GateWeights weights;
    /// Canonical tableau comparison cadence, in instructions; the end of
    /// every circuit is always compared.
    std::size_t tableau_every = 1000;
    /// Circuits up to this many qubits also run against the dense engine,
    /// with a full state comparison after every instruction.
    std::size_t dense_max_qubits = 8;
    /// Table used by the graph engine; null means the default one.
    std::shared_ptr<const CzTable> cz_table;
};

struct Divergence {
    std::uint64_t seed = 0;
    std::size_t iteration = 0;
    /// Index of the offending instruction, or the circuit length when the
    /// mismatch was found by the end-of-circuit comparison.
    std::size_t instruction = 0;
    std::string message;
    Circuit circuit;
};

struct FuzzReport {
    std::size_t iterations = 0;
    std::size_t instructions = 0;
    std::size_t measurements = 0;
    std::size_t deterministic_measurements = 0;
    std::size_t dense_comparisons = 0;
    std::size_t tableau_comparisons = 0;
    std::optional<Divergence> divergence;

    bool passed() const { return !divergence.has_value(); }
    std::string summary() const;
};

Circuit random_circuit(std::mt19937_64 &rng, std::size_t n, std::size_t length, const GateWeights &weights);

/// Runs every circuit on the graph engine with the tableau engine (and, for
/// small n, the dense engine) in lockstep. Random outcomes picked by the
/// graph engine are forced into the shadows; deterministic outcomes and
/// determinism flags must agree exactly. Stops at the first divergence.
/// Iteration i depends only on (seed, i).
FuzzReport fuzz(const FuzzConfig &config);

}  // namespace gstab
