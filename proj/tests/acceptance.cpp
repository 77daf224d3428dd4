// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1).

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gstab/bench.hpp"
#include "gstab/circuit.hpp"
#include "gstab/errors.hpp"
#include "gstab/fuzz.hpp"
#include "gstab/graph_register.hpp"
#include "gstab/selftest.hpp"
#include "gstab/tableau.hpp"
#include "oracle.hpp"

using namespace gstab;

namespace {

// Pinned limits.
constexpr double kSelftestSeconds = 10.0;
constexpr double kFuzzSeconds = 300.0;
constexpr std::size_t kDenseCircuits = 10000;
constexpr std::size_t kTableauCircuits = 1000;
constexpr double kOverlapTolerance = 1e-10;
constexpr std::size_t kLargeN = 1000000;
constexpr std::size_t kSmallN = 10000;
constexpr double kConstructionSeconds = 60.0;
constexpr double kFlatnessRatio = 3.0;
constexpr std::size_t kCompareN = 500;
constexpr double kDenseSlowdown = 5.0;
constexpr std::size_t kVopSamplesPerGraph = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(const std::string &label, const std::function<Verdict()> &check) {
    Verdict v;
    const auto start = Clock::now();
    try {
        v = check();
    } catch (const std::exception &e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << seconds_since(start);
    std::cout << (v.pass ? "PASS " : "FAIL ") << label << " (" << t.str() << " s): " << v.detail << std::endl;
    if (!v.pass) ++failures;
}

Verdict table_exhaustives() {
    const auto start = Clock::now();
    const auto checks = selftest();
    const double elapsed = seconds_since(start);
    std::size_t checked = 0, failed = 0;
    std::string first;
    for (const auto &c : checks) {
        checked += c.checked;
        failed += c.failures;
        if (!c.passed() && first.empty()) first = c.name + ": " + c.first_failure;
    }
    std::ostringstream d;
    d << checks.size() << " checks, " << checked << " comparisons, " << failed << " failures, " << elapsed << " s";
    if (!first.empty()) d << "; first: " << first;
    return {failed == 0 && elapsed < kSelftestSeconds, d.str()};
}

Verdict fuzz_verdict(const FuzzConfig &config, std::size_t required) {
    const auto start = Clock::now();
    const FuzzReport r = fuzz(config);
    const double elapsed = seconds_since(start);
    std::string s = r.summary();
    while (!s.empty() && s.back() == '\n') s.pop_back();
    std::ostringstream d;
    d << s << "; " << elapsed << " s";
    return {r.passed() && r.iterations >= required && elapsed < kFuzzSeconds, d.str()};
}

Verdict dense_fuzz() {
    FuzzConfig c;
    c.seed = 20240601;
    c.iterations = kDenseCircuits;
    c.min_qubits = 1;
    c.max_qubits = 8;
    c.max_length = 40;
    c.dense_max_qubits = 8;
    return fuzz_verdict(c, kDenseCircuits);
}

Verdict tableau_fuzz() {
    FuzzConfig c;
    c.seed = 20240602;
    c.iterations = kTableauCircuits;
    c.min_qubits = 24;
    c.max_qubits = 64;
    c.max_length = 500;
    c.tableau_every = 1000;
    c.dense_max_qubits = 0;
    return fuzz_verdict(c, kTableauCircuits);
}

Verdict regressions() {
    GraphRegister fig(4, 0);
    fig.add_edge(0, 1);
    fig.add_edge(0, 2);
    fig.add_edge(1, 2);
    fig.add_edge(2, 3);
    fig.set_vop(0, lc::H());
    fig.set_vop(1, lc::I());
    fig.set_vop(2, lc::H() * lc::S());
    fig.set_vop(3, lc::S());
    const Tableau got = canonicalize(tableau_from_graphreg(fig));
    const Tableau want = canonicalize(Tableau::from_strings({"+ZZXI", "+XXXI", "-XZYZ", "+IIXY"}));
    const bool fig_ok = got == want;

    std::ifstream in(GSTAB_CIRCUIT_DIR "/steane.qc");
    std::stringstream text;
    text << in.rdbuf();
    const auto records = run(parse_circuit(text.str()), 0, EngineKind::Graph).records;
    const bool steane_ok = records.size() == 1 && records[0].qubit == 7 && !records[0].outcome &&
                           records[0].deterministic;
    std::ostringstream d;
    d << "four-vertex register " << (fig_ok ? "matches" : "differs") << " (got " << got.to_text().size()
      << " chars:";
    for (const auto &r : got.rows) d << ' ' << r.to_string();
    d << "); Steane parity transcript: " << (records.empty() ? std::string("none") : format_record(records[0]));
    return {fig_ok && steane_ok, d.str()};
}

Verdict scaling() {
    const auto start = Clock::now();
    const BenchRow large = run_workload(Workload::LinearCluster, kLargeN, 1);
    const double construction = seconds_since(start);
    const BenchRow small = bench(Workload::LinearCluster, {kSmallN}, 5).rows.at(0);
    const BenchRow cluster = bench(Workload::LinearCluster, {kCompareN}, 5).rows.at(0);
    const BenchRow dense = bench(Workload::RandomDense, {kCompareN}, 3).rows.at(0);

    const double edges_per_vertex = double(large.edges) / double(kLargeN);
    const double flatness = large.seconds_per_op / small.seconds_per_op;
    const double slowdown = dense.seconds_per_op / cluster.seconds_per_op;
    const bool ok = construction < kConstructionSeconds && large.max_degree <= 2 && edges_per_vertex > 0.5 &&
                    edges_per_vertex <= 1.0 && flatness < kFlatnessRatio && flatness > 1.0 / kFlatnessRatio &&
                    slowdown >= kDenseSlowdown;
    std::ostringstream d;
    d << std::setprecision(3) << "linear_cluster N=" << kLargeN << ": " << construction << " s, max degree "
      << large.max_degree << ", edges/N " << edges_per_vertex << "; per-op " << large.seconds_per_op << " vs "
      << small.seconds_per_op << " at N=" << kSmallN << " (ratio " << flatness << "); random_dense/linear_cluster at N="
      << kCompareN << ": " << slowdown << "x";
    return {ok, d.str()};
}

// Every labelled graph on up to four vertices, every vertex, axis and
// outcome, with random vertex operators: the rewritten register must equal
// the projected dense state. Also checks measure() against Born
// probabilities on the same registers.
Verdict measurement_arbitration() {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<unsigned> pick(0, 23);
    std::size_t cases = 0, fails = 0, graphs = 0;
    std::string first;
    auto fail = [&](const std::string &what) {
        if (fails++ == 0) first = what;
    };
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
            ++graphs;
            GraphRegister base(n, 0);
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (mask >> k & 1) base.add_edge(pairs[k].first, pairs[k].second);
            for (std::size_t sample = 0; sample < kVopSamplesPerGraph; ++sample) {
                GraphRegister reg = base;
                for (Vertex u = 0; u < n; ++u) reg.set_vop(u, LocalClifford::from_index(pick(rng)));
                GraphRegister bare = reg;
                for (Vertex u = 0; u < n; ++u) bare.set_vop(u, lc::I());
                const auto bare_state = oracle::graph_state(bare);
                const auto state = oracle::graph_state(reg);
                for (Vertex v = 0; v < n; ++v) {
                    for (Pauli axis : {Pauli::X, Pauli::Y, Pauli::Z}) {
                        for (bool outcome : {false, true}) {
                            ++cases;
                            std::ostringstream tag;
                            tag << "n=" << n << " edges=" << mask << " v=" << v << " axis=" << pauli_char(axis)
                                << " outcome=" << outcome << " vops:";
                            for (Vertex u = 0; u < n; ++u) tag << ' ' << int(reg.vop(u).index());
                            GraphRegister work = reg;
                            if (axis == Pauli::X && base.neighbors(v).empty() && outcome) {
                                try {
                                    work.graph_measure(v, axis, outcome);
                                    fail(tag.str() + ": expected a contract violation");
                                } catch (const ContractViolation &) {
                                }
                                continue;
                            }
                            auto expect = bare_state;
                            if (oracle::project(expect, v, axis, outcome) < 1e-6) {
                                fail(tag.str() + ": oracle outcome has zero probability");
                                continue;
                            }
                            for (Vertex u = 0; u < n; ++u)
                                oracle::apply_1q(expect, u, clifford_matrix(reg.vop(u)));
                            expect.normalize();
                            work.graph_measure(v, axis, outcome);
                            if (!work.representation_valid() || !work.neighbors(v).empty() ||
                                oracle::overlap(oracle::graph_state(work), expect) <= 1 - kOverlapTolerance) {
                                fail(tag.str() + ": state mismatch");
                            }
                        }
                    }
                    // Full measurement with the computational-basis observable.
                    ++cases;
                    auto zero = state;
                    const double p0 = oracle::project(zero, v, Pauli::Z, false);
                    for (bool forced : {false, true}) {
                        GraphRegister work = reg;
                        const bool possible = forced ? p0 < 1 - 1e-9 : p0 > 1e-9;
                        try {
                            const auto r = work.measure(v, forced);
                            const bool det = std::abs(p0 - 0.5) > 1e-9;
                            auto expect = state;
                            oracle::project(expect, v, Pauli::Z, forced);
                            expect.normalize();
                            if (!possible || r.outcome != forced || r.deterministic != det ||
                                oracle::overlap(oracle::graph_state(work), expect) <= 1 - kOverlapTolerance) {
                                fail("measure " + std::to_string(v) + " forced " + std::to_string(forced) +
                                     " on n=" + std::to_string(n) + " edges=" + std::to_string(mask));
                            }
                        } catch (const ForcedOutcomeError &) {
                            if (possible) fail("measure rejected a possible outcome");
                        }
                    }
                }
            }
        }
    }
    std::ostringstream d;
    d << graphs << " graphs, " << cases << " cases, " << fails << " failures";
    if (!first.empty()) d << "; first: " << first;
    return {fails == 0, d.str()};
}

}  // namespace

int main() {
    report("[1] table exhaustives", table_exhaustives);
    report("[2] dense differential fuzz", dense_fuzz);
    report("[3] tableau differential fuzz", tableau_fuzz);
    report("[4] regressions: four-vertex register and Steane parity", regressions);
    report("[5] scaling", scaling);
    report("[6] measurement arbitration", measurement_arbitration);
    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
