#include "gstab/graph_register.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "gstab/errors.hpp"

namespace gstab {

namespace {

std::vector<Vertex> as_vector(const GraphRegister::Neighborhood &set) { return {set.begin(), set.end()}; }

}  // namespace

GraphRegister::GraphRegister(std::size_t n, std::uint64_t seed, std::shared_ptr<const CzTable> cz)
    : adjacency_(n), vops_(n, lc::H()), cz_(std::move(cz)), rng_(seed) {
    if (n == 0) {
        throw std::invalid_argument("a register needs at least one qubit");
    }
    if (!cz_) {
        throw std::invalid_argument("null CZ table");
    }
}

void GraphRegister::check_vertex(Vertex v) const {
    if (v >= vops_.size()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for " + std::to_string(vops_.size()) +
                                " qubits");
    }
}

bool GraphRegister::has_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    return adjacency_[a].contains(b);
}

void GraphRegister::set_vop(Vertex v, LocalClifford c) {
    check_vertex(v);
    vops_[v] = c;
}

void GraphRegister::add_edge(Vertex a, Vertex b) {
    if (!has_edge(a, b)) {
        toggle_edge(a, b);
    }
}

void GraphRegister::remove_edge(Vertex a, Vertex b) {
    if (has_edge(a, b)) {
        toggle_edge(a, b);
    }
}

void GraphRegister::toggle_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) {
        throw std::invalid_argument("self loops are not allowed");
    }
    if (adjacency_[a].erase(b)) {
        adjacency_[b].erase(a);
        --edges_;
    } else {
        adjacency_[a].insert(b);
        adjacency_[b].insert(a);
        ++edges_;
    }
}

void GraphRegister::apply_local(Vertex v, LocalClifford c) {
    check_vertex(v);
    vops_[v] = c * vops_[v];
}

void GraphRegister::local_complementation(Vertex v) {
    check_vertex(v);
    const std::vector<Vertex> nb = as_vector(adjacency_[v]);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            toggle_edge(nb[i], nb[j]);
        }
    }
    const LocalClifford on_center = lc::sqrt_iX();
    const LocalClifford on_neighbor = lc::sqrt_minus_iZ();
    vops_[v] = vops_[v] * on_center;
    for (Vertex b : nb) {
        vops_[b] = vops_[b] * on_neighbor;
    }
    ++complementations_;
}

void GraphRegister::reduce_vop(Vertex a, Vertex avoid) {
    check_vertex(a);
    if (adjacency_[a].empty()) {
        throw ContractViolation("reduce_vop on isolated vertex " + std::to_string(a));
    }
    Vertex partner = avoid;
    bool found = false;
    for (Vertex c : adjacency_[a]) {
        if (c != avoid && (!found || c < partner)) {
            partner = c;
            found = true;
        }
    }
    // Neither kind of complementation touches the edge a-partner, so the
    // partner stays valid for the whole word.
    const GeneratorWord word = decompose(vops_[a]);
    for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) {
        if (*it == Generator::SqrtMinusIX) {
            local_complementation(a);
        } else {
            local_complementation(partner);
        }
    }
    if (vops_[a] != lc::I()) {
        throw std::logic_error("reduce_vop left a non-identity vertex operator");
    }
}

bool GraphRegister::has_other_neighbor(Vertex a, Vertex b) const {
    const auto &nb = adjacency_[a];
    return nb.size() > (nb.contains(b) ? 1u : 0u);
}

void GraphRegister::cphase(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) {
        throw std::invalid_argument("cphase needs two distinct qubits");
    }
    if (has_other_neighbor(a, b)) {
        reduce_vop(a, b);
    }
    if (has_other_neighbor(b, a)) {
        reduce_vop(b, a);
    }
    // Reducing b can hand a new non-operand neighbors; check a again.
    if (has_other_neighbor(a, b)) {
        reduce_vop(a, b);
    }
    // Now each operand is either free of non-operand neighbors or carries an
    // operator commuting with CZ, so the two-qubit table applies.
    const bool edge = adjacency_[a].contains(b);
    const CzEntry &entry = cz_->lookup({edge, vops_[a], vops_[b]});
    if (entry.edge != edge) {
        toggle_edge(a, b);
    }
    vops_[a] = entry.vop_a;
    vops_[b] = entry.vop_b;
}

void GraphRegister::cnot(Vertex control, Vertex target) {
    if (control == target) {
        throw std::invalid_argument("cnot needs two distinct qubits");
    }
    hadamard(target);
    cphase(control, target);
    hadamard(target);
}

MeasurementRecord GraphRegister::measure(Vertex v, std::optional<bool> forced) {
    check_vertex(v);
    const SignedPauli observable = conjugate_pauli(vops_[v], Pauli::Z);
    MeasurementRecord record{v, false, false};
    bool graph_outcome = false;
    if (observable.letter == Pauli::X && adjacency_[v].empty()) {
        record.deterministic = true;
        record.outcome = observable.negative;
        if (forced && *forced != record.outcome) {
            throw ForcedOutcomeError("qubit " + std::to_string(v) + " deterministically measures " +
                                     std::to_string(int(record.outcome)) + ", cannot force " +
                                     std::to_string(int(*forced)));
        }
    } else {
        record.outcome = forced ? *forced : rng_.next_bit();
        graph_outcome = record.outcome != observable.negative;
    }
    graph_measure(v, observable.letter, graph_outcome);
    return record;
}

void GraphRegister::graph_measure(Vertex v, Pauli axis, bool outcome) {
    check_vertex(v);
    switch (axis) {
        case Pauli::Z: measure_z(v, outcome); break;
        case Pauli::Y: measure_y(v, outcome); break;
        case Pauli::X: measure_x(v, outcome); break;
        case Pauli::I: throw std::invalid_argument("measurement axis must be X, Y or Z");
    }
}

void GraphRegister::measure_z(Vertex v, bool outcome) {
    const std::vector<Vertex> nb = as_vector(adjacency_[v]);
    for (Vertex b : nb) {
        toggle_edge(v, b);
        if (outcome) {
            vops_[b] = vops_[b] * lc::Z();
        }
    }
    vops_[v] = vops_[v] * (outcome ? lc::X() * lc::H() : lc::H());
}

void GraphRegister::measure_y(Vertex v, bool outcome) {
    // Complementing over the closed neighborhood is local complementation
    // at v followed by cutting v loose.
    std::vector<Vertex> closed = as_vector(adjacency_[v]);
    closed.push_back(v);
    const LocalClifford factor = outcome ? lc::sqrt_iZ() : lc::sqrt_minus_iZ();
    for (Vertex c : closed) {
        vops_[c] = vops_[c] * factor;
    }
    for (std::size_t i = 0; i < closed.size(); ++i) {
        for (std::size_t j = i + 1; j < closed.size(); ++j) {
            toggle_edge(closed[i], closed[j]);
        }
    }
}

void GraphRegister::measure_x(Vertex v, bool outcome) {
    if (adjacency_[v].empty()) {
        if (outcome) {
            throw ContractViolation("X measurement of isolated vertex " + std::to_string(v) +
                                    " cannot yield outcome 1");
        }
        return;
    }
    const Vertex b = *std::min_element(adjacency_[v].begin(), adjacency_[v].end());
    const Neighborhood na = adjacency_[v];
    const Neighborhood nb = adjacency_[b];

    // Vertex operators, from the neighborhoods before any edge changes.
    if (outcome) {
        vops_[v] = vops_[v] * lc::Z();
        vops_[b] = vops_[b] * lc::sqrt_minus_iY();
        for (Vertex c : nb) {
            if (c != v && !na.contains(c)) {
                vops_[c] = vops_[c] * lc::Z();
            }
        }
    } else {
        vops_[b] = vops_[b] * lc::sqrt_iY();
        for (Vertex c : na) {
            if (c != b && !nb.contains(c)) {
                vops_[c] = vops_[c] * lc::Z();
            }
        }
    }

    // E <- E ^ {{c,d} | c in N(b), d in N(v)} ^ {{c,d} | c,d in N(b) & N(v)}
    //       ^ {{b,d} | d in N(v) \ {b}}, self pairs dropped.
    // Walking ordered pairs (c, d) visits a pair with both ends in the
    // intersection twice, which is exactly the cancellation the second term
    // provides, so the first two terms collapse into this double loop.
    for (Vertex c : nb) {
        for (Vertex d : na) {
            if (c != d) {
                toggle_edge(c, d);
            }
        }
    }
    for (Vertex d : na) {
        if (d != b) {
            toggle_edge(b, d);
        }
    }
}

std::size_t GraphRegister::max_degree() const {
    std::size_t best = 0;
    for (const auto &nb : adjacency_) {
        best = std::max(best, nb.size());
    }
    return best;
}

std::string GraphRegister::to_text() const {
    std::ostringstream out;
    for (Vertex v = 0; v < size(); ++v) {
        std::vector<Vertex> nb = as_vector(adjacency_[v]);
        std::sort(nb.begin(), nb.end());
        out << v << ' ' << int(vops_[v].index());
        for (Vertex b : nb) {
            out << ' ' << b;
        }
        out << '\n';
    }
    return out.str();
}

GraphRegister GraphRegister::from_text(const std::string &text, std::uint64_t seed) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::vector<std::size_t> numbers;
        std::size_t value = 0;
        while (fields >> value) {
            numbers.push_back(value);
        }
        if (!fields.eof()) {
            throw std::invalid_argument("register text: malformed line '" + line + "'");
        }
        if (numbers.empty()) {
            continue;
        }
        if (numbers.size() < 2 || numbers[0] != rows.size()) {
            throw std::invalid_argument("register text: expected `id vop neighbors...` with ids in order");
        }
        rows.emplace_back(numbers[1], std::vector<std::size_t>(numbers.begin() + 2, numbers.end()));
    }
    GraphRegister reg(rows.size(), seed);
    for (Vertex v = 0; v < rows.size(); ++v) {
        reg.set_vop(v, LocalClifford::from_index(static_cast<unsigned>(rows[v].first)));
    }
    for (Vertex v = 0; v < rows.size(); ++v) {
        for (Vertex b : rows[v].second) {
            reg.add_edge(v, b);
        }
    }
    if (!reg.representation_valid()) {
        throw std::invalid_argument("register text: adjacency lists are not symmetric");
    }
    for (Vertex v = 0; v < rows.size(); ++v) {
        if (reg.neighbors(v).size() != rows[v].second.size()) {
            throw std::invalid_argument("register text: adjacency of vertex " + std::to_string(v) +
                                        " is not symmetric");
        }
    }
    return reg;
}

bool GraphRegister::representation_valid() const {
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < size(); ++v) {
        for (Vertex b : adjacency_[v]) {
            if (b == v || b >= size() || !adjacency_[b].contains(v)) {
                return false;
            }
        }
        degree_sum += adjacency_[v].size();
    }
    return degree_sum == 2 * edges_;
}

std::ostream &operator<<(std::ostream &out, const GraphRegister &reg) { return out << reg.to_text(); }

}  // namespace gstab
