#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gstab/cz_table.hpp"
#include "gstab/local_clifford.hpp"
#include "gstab/measurement.hpp"
#include "gstab/rng.hpp"

namespace gstab {

/// Stabilizer state stored as a graph state with one local Clifford per
/// vertex: |G; C_1..C_n> = (C_1 (x) ... (x) C_n) |G>.
///
/// Adjacency is kept as per-vertex hash sets, symmetric and without self
/// loops. Single-qubit gates are a table lookup; CZ and measurements cost
/// O(d^2) in the largest vertex degree d they touch.
class GraphRegister {
  public:
    using Neighborhood = std::unordered_set<Vertex>;

    /// |0...0>: no edges, every vertex operator H. Throws
    /// std::invalid_argument for n == 0.
    GraphRegister(std::size_t n, std::uint64_t seed, std::shared_ptr<const CzTable> cz = default_cz_table());

    std::size_t size() const { return vops_.size(); }
    std::size_t edge_count() const { return edges_; }
    const Neighborhood &neighbors(Vertex v) const { return adjacency_.at(v); }
    LocalClifford vop(Vertex v) const { return vops_.at(v); }
    bool has_edge(Vertex a, Vertex b) const;

    /// C_v <- c * C_v.
    void apply_local(Vertex v, LocalClifford c);
    void hadamard(Vertex v) { apply_local(v, lc::H()); }
    void s_gate(Vertex v) { apply_local(v, lc::S()); }
    void s_dagger(Vertex v) { apply_local(v, lc::S_dag()); }
    void x(Vertex v) { apply_local(v, lc::X()); }
    void y(Vertex v) { apply_local(v, lc::Y()); }
    void z(Vertex v) { apply_local(v, lc::Z()); }

    /// Toggles all edges inside ngbh(v) and right-multiplies sqrt(iX) onto
    /// C_v and sqrt(-iZ) onto each neighbor. The represented state is
    /// unchanged.
    void local_complementation(Vertex v);

    /// Brings C_a to the identity by local complementations, leaving the
    /// state unchanged. The swapping partner is the smallest neighbor other
    /// than `avoid`, falling back to `avoid`. Throws ContractViolation if a
    /// is isolated.
    void reduce_vop(Vertex a, Vertex avoid);

    void cphase(Vertex a, Vertex b);
    void cnot(Vertex control, Vertex target);

    /// Computational-basis measurement. `forced` replaces a random outcome;
    /// forcing the complement of a deterministic outcome throws
    /// ForcedOutcomeError.
    MeasurementRecord measure(Vertex v, std::optional<bool> forced = std::nullopt);

    /// Projects the underlying graph state onto the `outcome` eigenspace of
    /// `axis` at v ((I + (-1)^outcome P_v) / 2) and rewrites the graph and
    /// vertex operators accordingly. Throws ContractViolation for outcome 1
    /// of an X measurement on an isolated vertex.
    void graph_measure(Vertex v, Pauli axis, bool outcome);

    // Raw representation edits; these change the represented state.
    void set_vop(Vertex v, LocalClifford c);
    void add_edge(Vertex a, Vertex b);
    void remove_edge(Vertex a, Vertex b);
    void toggle_edge(Vertex a, Vertex b);

    std::size_t max_degree() const;
    /// Number of local complementations performed so far.
    std::uint64_t complementation_count() const { return complementations_; }

    /// One vertex per line: `id vop n1 n2 ...`, neighbors ascending.
    std::string to_text() const;
    static GraphRegister from_text(const std::string &text, std::uint64_t seed = 0);

    /// Symmetric, irreflexive adjacency with a consistent edge count.
    bool representation_valid() const;

  private:
    void check_vertex(Vertex v) const;
    bool has_other_neighbor(Vertex a, Vertex b) const;
    void measure_z(Vertex v, bool outcome);
    void measure_y(Vertex v, bool outcome);
    void measure_x(Vertex v, bool outcome);

    std::vector<Neighborhood> adjacency_;
    std::vector<LocalClifford> vops_;
    std::shared_ptr<const CzTable> cz_;
    OutcomeRng rng_;
    std::size_t edges_ = 0;
    std::uint64_t complementations_ = 0;
};

std::ostream &operator<<(std::ostream &out, const GraphRegister &reg);

}  // namespace gstab
