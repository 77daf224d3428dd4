#include "gstab/fuzz.hpp"

#include <sstream>

#include "gstab/dense_simulator.hpp"
#include "gstab/graph_register.hpp"
#include "gstab/tableau.hpp"

namespace gstab {

std::string FuzzReport::summary() const {
    std::ostringstream out;
    out << (passed() ? "PASS" : "FAIL") << ": " << iterations << " circuits, " << instructions << " instructions, "
        << measurements << " measurements (" << deterministic_measurements << " deterministic), "
        << dense_comparisons << " dense comparisons, " << tableau_comparisons << " tableau comparisons\n";
    if (divergence) {
        out << "divergence: seed " << divergence->seed << " iteration " << divergence->iteration << " instruction "
            << divergence->instruction << ": " << divergence->message << '\n'
            << "circuit:\n"
            << divergence->circuit.to_text();
    }
    return out.str();
}

Circuit random_circuit(std::mt19937_64 &rng, std::size_t n, std::size_t length, const GateWeights &weights) {
    GateWeights usable = weights;
    if (n < 2) {
        usable[Op::CZ] = 0;
        usable[Op::CNOT] = 0;
    }
    std::discrete_distribution<int> pick_op(usable.weight.begin(), usable.weight.end());
    std::uniform_int_distribution<Vertex> pick_qubit(0, n - 1);
    Circuit circuit;
    circuit.n = n;
    circuit.instructions.reserve(length);
    for (std::size_t k = 0; k < length; ++k) {
        Instruction ins;
        ins.op = static_cast<Op>(pick_op(rng));
        ins.qubits[0] = pick_qubit(rng);
        if (is_two_qubit(ins.op)) {
            do {
                ins.qubits[1] = pick_qubit(rng);
            } while (ins.qubits[1] == ins.qubits[0]);
        }
        circuit.instructions.push_back(ins);
    }
    return circuit;
}

namespace {

std::string describe(const MeasurementRecord &r) { return format_record(r); }

// Returns an error message, or nothing when the circuit ran clean.
std::optional<std::pair<std::size_t, std::string>> shadow_run(const Circuit &circuit, std::uint64_t engine_seed,
                                                              const FuzzConfig &config, FuzzReport &report) {
    const auto table = config.cz_table ? config.cz_table : default_cz_table();
    GraphRegister graph(circuit.n, engine_seed, table);
    TableauSimulator tableau(circuit.n, engine_seed);
    std::optional<DenseSimulator> dense;
    if (circuit.n <= config.dense_max_qubits) {
        dense.emplace(circuit.n, engine_seed);
    }

    const auto compare_tableaus = [&]() -> std::optional<std::string> {
        ++report.tableau_comparisons;
        const Tableau from_graph = canonicalize(tableau_from_graphreg(graph));
        const Tableau reference = canonicalize(tableau.stabilizers());
        if (!(from_graph == reference)) {
            return "canonical tableaus differ\ngraph:\n" + from_graph.to_text() + "tableau:\n" + reference.to_text();
        }
        return std::nullopt;
    };

    const std::size_t every = config.tableau_every ? config.tableau_every : circuit.instructions.size() + 1;
    for (std::size_t k = 0; k < circuit.instructions.size(); ++k) {
        const Instruction &ins = circuit.instructions[k];
        try {
            const auto g = execute(graph, ins);
            const std::optional<bool> force =
                g && !g->deterministic ? std::optional<bool>(g->outcome) : std::optional<bool>();
            const auto t = execute(tableau, ins, force);
            std::optional<MeasurementRecord> d;
            if (dense) {
                d = execute(*dense, ins, force);
            }
            ++report.instructions;
            if (g) {
                ++report.measurements;
                report.deterministic_measurements += g->deterministic ? 1 : 0;
                if (!(*g == *t)) {
                    return std::pair{k, "graph " + describe(*g) + " vs tableau " + describe(*t)};
                }
                if (d && !(*g == *d)) {
                    return std::pair{k, "graph " + describe(*g) + " vs dense " + describe(*d)};
                }
            }
            if (dense) {
                ++report.dense_comparisons;
                if (!states_equal_up_to_phase(dense_from_graphreg(graph), dense->state())) {
                    return std::pair{k, "graph state differs from dense state\n" + graph.to_text()};
                }
            }
            if ((k + 1) % every == 0) {
                if (auto msg = compare_tableaus()) {
                    return std::pair{k, *msg};
                }
            }
        } catch (const std::exception &e) {
            return std::pair{k, std::string("exception: ") + e.what()};
        }
    }
    if (!graph.representation_valid()) {
        return std::pair{circuit.instructions.size(), std::string("adjacency is not symmetric")};
    }
    if (auto msg = compare_tableaus()) {
        return std::pair{circuit.instructions.size(), *msg};
    }
    return std::nullopt;
}

}  // namespace

FuzzReport fuzz(const FuzzConfig &config) {
    if (config.min_qubits == 0 || config.min_qubits > config.max_qubits) {
        throw std::invalid_argument("fuzz: need 1 <= min_qubits <= max_qubits");
    }
    if (config.max_length == 0) {
        throw std::invalid_argument("fuzz: max_length must be positive");
    }
    FuzzReport report;
    for (std::size_t it = 0; it < config.iterations; ++it) {
        std::mt19937_64 rng(derive_seed(config.seed, it));
        const std::size_t n = std::uniform_int_distribution<std::size_t>(config.min_qubits, config.max_qubits)(rng);
        const std::size_t length = std::uniform_int_distribution<std::size_t>(1, config.max_length)(rng);
        Circuit circuit = random_circuit(rng, n, length, config.weights);
        const std::uint64_t engine_seed = rng();
        ++report.iterations;
        if (auto failure = shadow_run(circuit, engine_seed, config, report)) {
            report.divergence = Divergence{config.seed, it, failure->first, failure->second, std::move(circuit)};
            break;
        }
    }
    return report;
}

}  // namespace gstab
