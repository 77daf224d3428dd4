#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gstab/measurement.hpp"
#include "gstab/tableau.hpp"

namespace gstab {

enum class Op : std::uint8_t { H, S, Sdg, X, Y, Z, CZ, CNOT, Measure };

std::string_view mnemonic(Op op);
inline bool is_two_qubit(Op op) { return op == Op::CZ || op == Op::CNOT; }

struct Instruction {
    Op op = Op::H;
    std::array<Vertex, 2> qubits{};
    /// Only meaningful for Op::Measure.
    std::optional<bool> forced;

    friend bool operator==(const Instruction &, const Instruction &) = default;
};

struct Circuit {
    std::size_t n = 0;
    std::vector<Instruction> instructions;

    /// Throws std::invalid_argument on out-of-range or repeated operands.
    void validate() const;
    /// Renders in the same line format parse_circuit reads.
    std::string to_text() const;
};

/// Line-oriented format:
///   qubits <n>
///   h|s|sdg|x|y|z <q>
///   cz|cnot <q1> <q2>
///   measure <q> [0|1]
/// `#` starts a comment; mnemonics are case-insensitive. Throws ParseError
/// carrying the 1-based line number.
Circuit parse_circuit(std::string_view text);

enum class EngineKind { Graph, Tableau, Dense };

std::optional<EngineKind> parse_engine(std::string_view name);

/// Applies one instruction to any engine exposing the common gate surface.
/// `forced` overrides the instruction's own forced value when set.
template <typename Engine>
std::optional<MeasurementRecord> execute(Engine &engine, const Instruction &ins,
                                         std::optional<bool> forced = std::nullopt) {
    const Vertex a = ins.qubits[0];
    const Vertex b = ins.qubits[1];
    switch (ins.op) {
        case Op::H: engine.hadamard(a); break;
        case Op::S: engine.s_gate(a); break;
        case Op::Sdg: engine.s_dagger(a); break;
        case Op::X: engine.x(a); break;
        case Op::Y: engine.y(a); break;
        case Op::Z: engine.z(a); break;
        case Op::CZ: engine.cphase(a, b); break;
        case Op::CNOT: engine.cnot(a, b); break;
        case Op::Measure: return engine.measure(a, forced ? forced : ins.forced);
    }
    return std::nullopt;
}

struct RunResult {
    std::vector<MeasurementRecord> records;
    /// Canonical final tableau, when requested from an engine that has one.
    std::optional<Tableau> tableau;
};

/// Executes the circuit on the chosen engine. The dense engine caps n at
/// DenseState::kMaxQubits; asking it for a tableau throws
/// std::invalid_argument.
RunResult run(const Circuit &circuit, std::uint64_t seed, EngineKind engine, bool want_tableau = false);

/// `m <qubit> <0|1> <det|rand>`.
std::string format_record(const MeasurementRecord &record);
std::string format_transcript(const std::vector<MeasurementRecord> &records);

}  // namespace gstab
