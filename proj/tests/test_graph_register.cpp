#include <gtest/gtest.h>

#include <random>

#include "gstab/errors.hpp"
#include "gstab/graph_register.hpp"
#include "oracle.hpp"

using namespace gstab;

namespace {

constexpr double kTol = 1e-10;

GraphRegister random_register(std::mt19937_64 &rng, std::size_t n, double edge_probability = 0.5) {
    GraphRegister reg(n, 0);
    std::bernoulli_distribution coin(edge_probability);
    std::uniform_int_distribution<unsigned> vop(0, 23);
    for (Vertex a = 0; a < n; ++a) {
        reg.set_vop(a, LocalClifford::from_index(vop(rng)));
        for (Vertex b = a + 1; b < n; ++b) {
            if (coin(rng)) reg.add_edge(a, b);
        }
    }
    return reg;
}

bool same_state(const GraphRegister &a, const oracle::Amplitudes &b) {
    return oracle::overlap(oracle::graph_state(a), b) > 1 - kTol;
}

}  // namespace

TEST(GraphRegister, FreshRegister) {
    GraphRegister reg(3, 1);
    EXPECT_EQ(reg.size(), 3u);
    EXPECT_EQ(reg.edge_count(), 0u);
    for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(reg.vop(v), lc::H());
    GraphRegister one(1, 1);
    const auto psi = oracle::graph_state(one);
    EXPECT_NEAR(std::abs(psi(0)), 1.0, kTol);
    EXPECT_NEAR(std::abs(psi(1)), 0.0, kTol);
    EXPECT_THROW(GraphRegister(0, 1), std::invalid_argument);
    EXPECT_TRUE(reg.representation_valid());
}

TEST(GraphRegister, LocalGates) {
    GraphRegister reg(2, 1);
    reg.apply_local(0, lc::I());
    EXPECT_EQ(reg.vop(0), lc::H());
    reg.x(0);
    EXPECT_EQ(reg.vop(0), lc::X() * lc::H());
    const auto r = reg.measure(0);
    EXPECT_TRUE(r.outcome);
    EXPECT_TRUE(r.deterministic);
    EXPECT_THROW(reg.hadamard(2), std::out_of_range);
}

TEST(GraphRegister, LocalComplementationPreservesState) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 6;
        GraphRegister reg = random_register(rng, n);
        const auto before = oracle::graph_state(reg);
        const Vertex v = rng() % n;
        const auto count = reg.complementation_count();
        reg.local_complementation(v);
        EXPECT_EQ(reg.complementation_count(), count + 1);
        EXPECT_TRUE(same_state(reg, before)) << reg.to_text();
        EXPECT_TRUE(reg.representation_valid());
    }
}

TEST(GraphRegister, LocalComplementationTogglesNeighborhood) {
    GraphRegister reg(4, 0);
    for (Vertex v = 0; v < 4; ++v) reg.set_vop(v, lc::I());
    reg.add_edge(0, 1);
    reg.add_edge(0, 2);
    reg.add_edge(0, 3);
    reg.add_edge(1, 2);
    reg.local_complementation(0);
    EXPECT_FALSE(reg.has_edge(1, 2));
    EXPECT_TRUE(reg.has_edge(1, 3));
    EXPECT_TRUE(reg.has_edge(2, 3));
    EXPECT_EQ(reg.edge_count(), 5u);
}

TEST(GraphRegister, ReduceVopPreservesStateAndClearsOperator) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + trial % 5;
        GraphRegister reg = random_register(rng, n, 0.6);
        const Vertex a = rng() % n;
        if (reg.neighbors(a).empty()) {
            EXPECT_THROW(reg.reduce_vop(a, (a + 1) % n), ContractViolation);
            continue;
        }
        const Vertex avoid = *reg.neighbors(a).begin();
        const auto before = oracle::graph_state(reg);
        const auto count = reg.complementation_count();
        const auto word = decompose(reg.vop(a)).size();
        reg.reduce_vop(a, avoid);
        EXPECT_EQ(reg.vop(a), lc::I());
        EXPECT_EQ(reg.complementation_count() - count, word);
        EXPECT_TRUE(same_state(reg, before));
    }
}

TEST(GraphRegister, ReduceIdentityIsNoOp) {
    GraphRegister reg(2, 0);
    reg.set_vop(0, lc::I());
    reg.add_edge(0, 1);
    const auto text = reg.to_text();
    reg.reduce_vop(0, 1);
    EXPECT_EQ(reg.to_text(), text);
    EXPECT_EQ(reg.complementation_count(), 0u);
}

TEST(GraphRegister, CphaseOnPlusStatesAddsEdge) {
    GraphRegister reg(2, 0);
    reg.hadamard(0);
    reg.hadamard(1);
    reg.cphase(0, 1);
    EXPECT_TRUE(reg.has_edge(0, 1));
    EXPECT_EQ(reg.vop(0), lc::I());
    EXPECT_EQ(reg.vop(1), lc::I());
    EXPECT_THROW(reg.cphase(1, 1), std::invalid_argument);
}

TEST(GraphRegister, CphaseMatchesOracle) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + trial % 5;
        GraphRegister reg = random_register(rng, n);
        const Vertex a = rng() % n;
        Vertex b = rng() % (n - 1);
        if (b >= a) ++b;
        auto expect = oracle::graph_state(reg);
        for (Eigen::Index i = 0; i < expect.size(); ++i) {
            if (((i >> a) & 1) && ((i >> b) & 1)) expect(i) = -expect(i);
        }
        reg.cphase(a, b);
        EXPECT_TRUE(same_state(reg, expect)) << trial;
        EXPECT_TRUE(reg.representation_valid());
    }
}

TEST(GraphRegister, CnotBasics) {
    GraphRegister reg(2, 0);
    reg.cnot(0, 1);
    EXPECT_FALSE(reg.measure(1).outcome);
    GraphRegister flipped(2, 0);
    flipped.x(0);
    flipped.cnot(0, 1);
    EXPECT_TRUE(flipped.measure(0).outcome);
    EXPECT_TRUE(flipped.measure(1).outcome);
    EXPECT_THROW(flipped.cnot(0, 0), std::invalid_argument);
}

TEST(GraphRegister, MeasurementExamples) {
    GraphRegister reg(1, 5);
    auto r = reg.measure(0);
    EXPECT_FALSE(r.outcome);
    EXPECT_TRUE(r.deterministic);
    EXPECT_THROW(reg.measure(0, true), ForcedOutcomeError);

    GraphRegister plus(1, 5);
    plus.hadamard(0);
    r = plus.measure(0, true);
    EXPECT_TRUE(r.outcome);
    EXPECT_FALSE(r.deterministic);
    r = plus.measure(0);
    EXPECT_TRUE(r.outcome);
    EXPECT_TRUE(r.deterministic);
}

TEST(GraphRegister, RandomOutcomesAreSeeded) {
    auto transcript = [](std::uint64_t seed) {
        GraphRegister reg(16, seed);
        std::string bits;
        for (Vertex v = 0; v < 16; ++v) {
            reg.hadamard(v);
            bits += reg.measure(v).outcome ? '1' : '0';
        }
        return bits;
    };
    EXPECT_EQ(transcript(3), transcript(3));
    EXPECT_NE(transcript(3), transcript(4));
}

TEST(GraphRegister, YMeasurementOnTwoVertexGraph) {
    // |G> on one edge; measuring Y on vertex 0 with outcome 0 projects onto
    // the +1 eigenspace of Y_0.
    for (bool outcome : {false, true}) {
        GraphRegister reg(2, 0);
        reg.set_vop(0, lc::I());
        reg.set_vop(1, lc::I());
        reg.add_edge(0, 1);
        auto expect = oracle::graph_state(reg);
        oracle::project(expect, 0, Pauli::Y, outcome);
        expect.normalize();
        reg.graph_measure(0, Pauli::Y, outcome);
        EXPECT_FALSE(reg.has_edge(0, 1));
        EXPECT_TRUE(same_state(reg, expect));
    }
}

TEST(GraphRegister, ZMeasurementCutsVertex) {
    GraphRegister reg(3, 0);
    for (Vertex v = 0; v < 3; ++v) reg.set_vop(v, lc::I());
    reg.add_edge(0, 1);
    reg.add_edge(0, 2);
    reg.graph_measure(0, Pauli::Z, true);
    EXPECT_EQ(reg.edge_count(), 0u);
    EXPECT_EQ(reg.vop(0), lc::X() * lc::H());
    EXPECT_EQ(reg.vop(1), lc::Z());
    EXPECT_EQ(reg.vop(2), lc::Z());
}

TEST(GraphRegister, IsolatedXOutcomeOneIsAContractViolation) {
    GraphRegister reg(2, 0);
    EXPECT_NO_THROW(reg.graph_measure(0, Pauli::X, false));
    EXPECT_THROW(reg.graph_measure(0, Pauli::X, true), ContractViolation);
    EXPECT_THROW(reg.graph_measure(0, Pauli::I, false), std::invalid_argument);
}

TEST(GraphRegister, GraphMeasureMatchesProjection) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 600; ++trial) {
        const std::size_t n = 1 + trial % 5;
        GraphRegister reg = random_register(rng, n);
        const Vertex v = rng() % n;
        const Pauli axis = std::array{Pauli::X, Pauli::Y, Pauli::Z}[trial % 3];
        const bool outcome = (trial / 3) % 2;
        if (axis == Pauli::X && reg.neighbors(v).empty() && outcome) continue;
        // The projector acts on the bare graph state, before vertex operators.
        GraphRegister bare = reg;
        for (Vertex u = 0; u < n; ++u) bare.set_vop(u, lc::I());
        auto expect = oracle::graph_state(bare);
        ASSERT_GT(oracle::project(expect, v, axis, outcome), 1e-6);
        for (Vertex u = 0; u < n; ++u) oracle::apply_1q(expect, u, clifford_matrix(reg.vop(u)));
        expect.normalize();
        reg.graph_measure(v, axis, outcome);
        EXPECT_TRUE(same_state(reg, expect)) << trial;
        EXPECT_TRUE(reg.neighbors(v).empty()) << trial;
        EXPECT_TRUE(reg.representation_valid());
    }
}

TEST(GraphRegister, MeasureMatchesOracleProbabilities) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + trial % 5;
        GraphRegister reg = random_register(rng, n);
        const Vertex v = rng() % n;
        auto psi = oracle::graph_state(reg);
        auto zero = psi;
        const double p0 = oracle::project(zero, v, Pauli::Z, false);
        const auto r = reg.measure(v);
        if (r.deterministic) {
            EXPECT_NEAR(p0, r.outcome ? 0.0 : 1.0, 1e-9);
        } else {
            EXPECT_NEAR(p0, 0.5, 1e-9);
        }
        oracle::project(psi, v, Pauli::Z, r.outcome);
        psi.normalize();
        EXPECT_TRUE(same_state(reg, psi));
    }
}

TEST(GraphRegister, TextRoundTrip) {
    std::mt19937_64 rng(16);
    const GraphRegister reg = random_register(rng, 6);
    const auto copy = GraphRegister::from_text(reg.to_text());
    EXPECT_EQ(copy.to_text(), reg.to_text());
    EXPECT_EQ(copy.edge_count(), reg.edge_count());
    EXPECT_EQ(GraphRegister(2, 0).to_text(), "0 4\n1 4\n");
    EXPECT_THROW(GraphRegister::from_text("0 0 1\n1 0\n"), std::invalid_argument);
    EXPECT_THROW(GraphRegister::from_text("0 x\n"), std::invalid_argument);
}

TEST(GraphRegister, RawEdits) {
    GraphRegister reg(3, 0);
    reg.add_edge(0, 1);
    reg.add_edge(1, 0);
    EXPECT_EQ(reg.edge_count(), 1u);
    reg.toggle_edge(1, 2);
    EXPECT_EQ(reg.max_degree(), 2u);
    reg.remove_edge(0, 1);
    reg.remove_edge(0, 1);
    EXPECT_EQ(reg.edge_count(), 1u);
    EXPECT_THROW(reg.toggle_edge(2, 2), std::invalid_argument);
    EXPECT_TRUE(reg.representation_valid());
}
