#include "gstab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gstab/bench.hpp"
#include "gstab/circuit.hpp"
#include "gstab/cz_table.hpp"
#include "gstab/dense_state.hpp"
#include "gstab/errors.hpp"
#include "gstab/fuzz.hpp"
#include "gstab/selftest.hpp"
#include "gstab/version.hpp"

namespace gstab {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::vector<std::size_t> parse_sizes(const std::string &csv) {
    std::vector<std::size_t> sizes;
    std::stringstream in(csv);
    for (std::string item; std::getline(in, item, ',');) {
        std::size_t pos = 0;
        const unsigned long long value = std::stoull(item, &pos);
        if (pos != item.size()) {
            throw std::invalid_argument("bad size '" + item + "'");
        }
        sizes.push_back(static_cast<std::size_t>(value));
    }
    if (sizes.empty()) {
        throw std::invalid_argument("empty size list");
    }
    return sizes;
}

int cmd_run(const std::string &path, const std::string &engine_name, std::uint64_t seed, bool want_tableau,
            std::ostream &out, std::ostream &err) {
    const auto engine = parse_engine(engine_name);
    if (!engine) {
        err << "unknown engine '" << engine_name << "' (graph, tableau or dense)\n";
        return kUsage;
    }
    std::ifstream file(path);
    if (!file) {
        err << "cannot open " << path << '\n';
        return kUsage;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    Circuit circuit;
    try {
        circuit = parse_circuit(buffer.str());
    } catch (const ParseError &e) {
        err << path << ':' << e.what() << '\n';
        return kUsage;
    }
    if (*engine == EngineKind::Dense && want_tableau) {
        err << "--tableau is not available with the dense engine\n";
        return kUsage;
    }
    if (*engine == EngineKind::Dense && circuit.n > DenseState::kMaxQubits) {
        err << "the dense engine supports at most " << DenseState::kMaxQubits << " qubits\n";
        return kUsage;
    }
    try {
        const RunResult result = run(circuit, seed, *engine, want_tableau);
        out << format_transcript(result.records);
        if (result.tableau) {
            out << result.tableau->to_text();
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kOk;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Stabilizer circuit simulator on graph states with local Clifford vertex operators"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string run_file;
    std::string engine_name = "graph";
    std::uint64_t seed = 0;
    bool want_tableau = false;
    auto *run_cmd = app.add_subcommand("run", "Execute a circuit file and print measurement records");
    run_cmd->add_option("file", run_file, "Circuit file")->required();
    run_cmd->add_option("--engine", engine_name, "graph, tableau or dense")->capture_default_str();
    run_cmd->add_option("--seed", seed, "Seed for random outcomes")->capture_default_str();
    run_cmd->add_flag("--tableau", want_tableau, "Print the final canonical stabilizer tableau");

    FuzzConfig fuzz_config;
    auto *fuzz_cmd = app.add_subcommand("fuzz", "Differential test against the tableau and dense engines");
    fuzz_cmd->add_option("--seed", fuzz_config.seed)->capture_default_str();
    fuzz_cmd->add_option("--iters", fuzz_config.iterations, "Number of random circuits")->capture_default_str();
    fuzz_cmd->add_option("--min-qubits", fuzz_config.min_qubits)->capture_default_str();
    fuzz_cmd->add_option("--max-qubits", fuzz_config.max_qubits)->capture_default_str();
    fuzz_cmd->add_option("--max-length", fuzz_config.max_length, "Instructions per circuit")->capture_default_str();
    fuzz_cmd->add_option("--tableau-every", fuzz_config.tableau_every)->capture_default_str();
    fuzz_cmd->add_option("--dense-max", fuzz_config.dense_max_qubits, "Largest n shadowed densely")
        ->capture_default_str();

    std::string workload_text = "linear_cluster";
    std::string sizes_text;
    std::size_t reps = 1;
    std::uint64_t bench_seed = 1;
    auto *bench_cmd = app.add_subcommand("bench", "Time a workload and print CSV");
    bench_cmd->add_option("--workload", workload_text, "linear_cluster or random_dense")->capture_default_str();
    bench_cmd->add_option("--sizes", sizes_text, "Comma-separated register sizes");
    bench_cmd->add_option("--reps", reps, "Runs per size; the fastest is kept")->capture_default_str();
    bench_cmd->add_option("--seed", bench_seed)->capture_default_str();

    auto *selftest_cmd = app.add_subcommand("selftest", "Exhaustively check the lookup tables");

    bool dump_cz = false;
    auto *tables_cmd = app.add_subcommand("tables", "Dump the lookup tables as text");
    tables_cmd->add_flag("--cz", dump_cz, "Dump the CZ table instead of the local Clifford tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (*run_cmd) {
        return cmd_run(run_file, engine_name, seed, want_tableau, out, err);
    }
    if (*fuzz_cmd) {
        try {
            const FuzzReport report = fuzz(fuzz_config);
            out << report.summary();
            return report.passed() ? kOk : kFailure;
        } catch (const std::invalid_argument &e) {
            err << "error: " << e.what() << '\n';
            return kUsage;
        }
    }
    if (*bench_cmd) {
        const auto workload = parse_workload(workload_text);
        if (!workload) {
            err << "unknown workload '" << workload_text << "'\n";
            return kUsage;
        }
        if (sizes_text.empty()) {
            sizes_text = *workload == Workload::LinearCluster ? "1000,10000,100000" : "100,200,500";
        }
        try {
            out << bench(*workload, parse_sizes(sizes_text), reps, bench_seed).to_csv();
        } catch (const std::invalid_argument &e) {
            err << "error: " << e.what() << '\n';
            return kUsage;
        }
        return kOk;
    }
    if (*selftest_cmd) {
        const auto checks = selftest();
        print_checks(out, checks);
        for (const auto &c : checks) {
            if (!c.passed()) {
                return kFailure;
            }
        }
        return kOk;
    }
    if (*tables_cmd) {
        if (dump_cz) {
            default_cz_table()->dump(out);
        } else {
            dump_clifford_tables(out);
        }
        return kOk;
    }
    return kUsage;
}

}  // namespace gstab
