#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gstab {

/// linear_cluster: n Hadamards, CZ along a chain, then a Z measurement on
/// every tenth vertex. Degrees stay at most 2, standing in for the
/// bounded-degree circuits typical of error correction and purification.
///
/// random_dense: n Hadamards followed by 4n rounds of (Hadamard on a random
/// operand, CZ on a uniformly random pair). Degrees grow toward O(n).
enum class Workload { LinearCluster, RandomDense };

std::optional<Workload> parse_workload(std::string_view name);
std::string_view workload_name(Workload w);

struct BenchRow {
    std::string workload;
    std::size_t n = 0;
    std::size_t ops = 0;
    double total_seconds = 0;
    double seconds_per_op = 0;
    std::size_t edges = 0;
    std::size_t max_degree = 0;
    double mean_degree = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;

    /// Comment header, then
    /// `workload,N,ops,total_seconds,seconds_per_op,edges,max_degree,mean_degree`.
    std::string to_csv() const;
};

/// One timed run; graph statistics are taken after the last operation.
BenchRow run_workload(Workload workload, std::size_t n, std::uint64_t seed);

/// For each n, in ascending order, keeps the fastest of `reps` runs.
BenchReport bench(Workload workload, const std::vector<std::size_t> &sizes, std::size_t reps, std::uint64_t seed = 1);

}  // namespace gstab
