#include "gstab/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "gstab/dense_simulator.hpp"
#include "gstab/errors.hpp"
#include "gstab/graph_register.hpp"

namespace gstab {

std::string_view mnemonic(Op op) {
    switch (op) {
        case Op::H: return "h";
        case Op::S: return "s";
        case Op::Sdg: return "sdg";
        case Op::X: return "x";
        case Op::Y: return "y";
        case Op::Z: return "z";
        case Op::CZ: return "cz";
        case Op::CNOT: return "cnot";
        case Op::Measure: return "measure";
    }
    return "?";
}

void Circuit::validate() const {
    if (n == 0) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
    for (std::size_t k = 0; k < instructions.size(); ++k) {
        const auto &ins = instructions[k];
        const std::size_t arity = is_two_qubit(ins.op) ? 2 : 1;
        for (std::size_t j = 0; j < arity; ++j) {
            if (ins.qubits[j] >= n) {
                throw std::invalid_argument("instruction " + std::to_string(k) + ": qubit " +
                                            std::to_string(ins.qubits[j]) + " out of range");
            }
        }
        if (arity == 2 && ins.qubits[0] == ins.qubits[1]) {
            throw std::invalid_argument("instruction " + std::to_string(k) + ": identical operands");
        }
    }
}

std::string Circuit::to_text() const {
    std::ostringstream out;
    out << "qubits " << n << '\n';
    for (const auto &ins : instructions) {
        out << mnemonic(ins.op) << ' ' << ins.qubits[0];
        if (is_two_qubit(ins.op)) {
            out << ' ' << ins.qubits[1];
        }
        if (ins.op == Op::Measure && ins.forced) {
            out << ' ' << int(*ins.forced);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

std::optional<Op> op_from_name(const std::string &name) {
    static const std::array<std::pair<std::string_view, Op>, 9> table = {{{"h", Op::H},
                                                                         {"s", Op::S},
                                                                         {"sdg", Op::Sdg},
                                                                         {"x", Op::X},
                                                                         {"y", Op::Y},
                                                                         {"z", Op::Z},
                                                                         {"cz", Op::CZ},
                                                                         {"cnot", Op::CNOT},
                                                                         {"measure", Op::Measure}}};
    for (const auto &[text, op] : table) {
        if (name == text) {
            return op;
        }
    }
    return std::nullopt;
}

bool is_non_clifford(const std::string &name) {
    static const std::array<std::string_view, 12> names = {"t",  "tdg", "rx", "ry",  "rz",      "u",
                                                           "u1", "u2",  "u3", "ccx", "toffoli", "ccz"};
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::size_t parse_number(const std::string &token, std::size_t line, const char *what) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
    }
    return value;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    bool have_header = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) {
            tokens.push_back(tok);
        }
        if (tokens.empty()) {
            continue;
        }
        std::string name = tokens[0];
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });

        if (name == "qubits") {
            if (have_header) {
                throw ParseError(line_no, "duplicate qubits header");
            }
            if (tokens.size() != 2) {
                throw ParseError(line_no, "expected `qubits <n>`");
            }
            circuit.n = parse_number(tokens[1], line_no, "qubit count");
            if (circuit.n == 0) {
                throw ParseError(line_no, "qubit count must be positive");
            }
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw ParseError(line_no, "missing `qubits <n>` header before first instruction");
        }
        const auto op = op_from_name(name);
        if (!op) {
            if (is_non_clifford(name)) {
                throw ParseError(line_no, "non-Clifford gate '" + tokens[0] + "' is not supported");
            }
            throw ParseError(line_no, "unknown mnemonic '" + tokens[0] + "'");
        }
        Instruction ins;
        ins.op = *op;
        const std::size_t arity = is_two_qubit(*op) ? 2 : 1;
        const std::size_t max_args = *op == Op::Measure ? 2 : arity;
        if (tokens.size() - 1 < arity || tokens.size() - 1 > max_args) {
            throw ParseError(line_no, "'" + name + "' takes " +
                                          (*op == Op::Measure ? std::string("a qubit and an optional forced bit")
                                                              : std::to_string(arity) + " qubit(s)"));
        }
        for (std::size_t j = 0; j < arity; ++j) {
            ins.qubits[j] = parse_number(tokens[1 + j], line_no, "qubit index");
            if (ins.qubits[j] >= circuit.n) {
                throw ParseError(line_no, "qubit " + tokens[1 + j] + " out of range for " +
                                              std::to_string(circuit.n) + " qubits");
            }
        }
        if (arity == 2 && ins.qubits[0] == ins.qubits[1]) {
            throw ParseError(line_no, "identical operands for '" + name + "'");
        }
        if (*op == Op::Measure && tokens.size() == 3) {
            if (tokens[2] != "0" && tokens[2] != "1") {
                throw ParseError(line_no, "forced outcome must be 0 or 1, got '" + tokens[2] + "'");
            }
            ins.forced = tokens[2] == "1";
        }
        circuit.instructions.push_back(ins);
    }
    if (!have_header) {
        throw ParseError(std::max<std::size_t>(line_no, 1), "missing `qubits <n>` header");
    }
    return circuit;
}

std::optional<EngineKind> parse_engine(std::string_view name) {
    if (name == "graph") return EngineKind::Graph;
    if (name == "tableau") return EngineKind::Tableau;
    if (name == "dense") return EngineKind::Dense;
    return std::nullopt;
}

namespace {

template <typename Engine>
void run_all(Engine &engine, const Circuit &circuit, RunResult &result) {
    for (const auto &ins : circuit.instructions) {
        if (auto record = execute(engine, ins)) {
            result.records.push_back(*record);
        }
    }
}

}  // namespace

RunResult run(const Circuit &circuit, std::uint64_t seed, EngineKind engine, bool want_tableau) {
    circuit.validate();
    RunResult result;
    switch (engine) {
        case EngineKind::Graph: {
            GraphRegister reg(circuit.n, seed);
            run_all(reg, circuit, result);
            if (want_tableau) {
                result.tableau = canonicalize(tableau_from_graphreg(reg));
            }
            break;
        }
        case EngineKind::Tableau: {
            TableauSimulator sim(circuit.n, seed);
            run_all(sim, circuit, result);
            if (want_tableau) {
                result.tableau = canonicalize(sim.stabilizers());
            }
            break;
        }
        case EngineKind::Dense: {
            if (want_tableau) {
                throw std::invalid_argument("the dense engine cannot report a tableau");
            }
            DenseSimulator sim(circuit.n, seed);
            run_all(sim, circuit, result);
            break;
        }
    }
    return result;
}

std::string format_record(const MeasurementRecord &record) {
    return "m " + std::to_string(record.qubit) + ' ' + (record.outcome ? '1' : '0') + ' ' +
           (record.deterministic ? "det" : "rand");
}

std::string format_transcript(const std::vector<MeasurementRecord> &records) {
    std::string out;
    for (const auto &r : records) {
        out += format_record(r);
        out += '\n';
    }
    return out;
}

}  // namespace gstab
