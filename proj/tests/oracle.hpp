#pragma once

// Test-side reference computations, written without the library's own
// dense or tableau code paths.

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gstab/graph_register.hpp"
#include "gstab/local_clifford.hpp"

namespace oracle {

using Amplitudes = Eigen::VectorXcd;

inline void apply_1q(Amplitudes &psi, std::size_t q, const Eigen::Matrix2cd &m) {
    const std::size_t bit = std::size_t{1} << q;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const auto a0 = psi(i);
        const auto a1 = psi(i | bit);
        psi(i) = m(0, 0) * a0 + m(0, 1) * a1;
        psi(i | bit) = m(1, 0) * a0 + m(1, 1) * a1;
    }
}

/// Graph state amplitudes from the sign formula, then the vertex operators.
inline Amplitudes graph_state(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges,
                              const std::vector<gstab::LocalClifford> &vops) {
    const std::size_t dim = std::size_t{1} << n;
    Amplitudes psi(static_cast<Eigen::Index>(dim));
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t x = 0; x < dim; ++x) {
        int parity = 0;
        for (const auto &[a, b] : edges) {
            parity ^= static_cast<int>(((x >> a) & 1u) & ((x >> b) & 1u));
        }
        psi(static_cast<Eigen::Index>(x)) = parity ? -norm : norm;
    }
    for (std::size_t v = 0; v < n; ++v) {
        apply_1q(psi, v, gstab::clifford_matrix(vops[v]));
    }
    return psi;
}

inline Amplitudes graph_state(const gstab::GraphRegister &reg) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<gstab::LocalClifford> vops;
    for (std::size_t a = 0; a < reg.size(); ++a) {
        vops.push_back(reg.vop(a));
        for (auto b : reg.neighbors(a)) {
            if (a < b) {
                edges.emplace_back(a, b);
            }
        }
    }
    return graph_state(reg.size(), edges, vops);
}

inline double overlap(const Amplitudes &a, const Amplitudes &b) { return std::abs(a.dot(b)); }

/// (I + (-1)^outcome P_q)/2 applied to psi; returns the squared norm after
/// projection. Not renormalized.
inline double project(Amplitudes &psi, std::size_t q, gstab::Pauli p, bool outcome) {
    Amplitudes image = psi;
    apply_1q(image, q, gstab::matrices::pauli(p));
    psi = 0.5 * (psi + (outcome ? -1.0 : 1.0) * image);
    return psi.squaredNorm();
}

/// Sign and letter of a Pauli string as a full matrix acting on a vector:
/// a string over IXYZ with an optional leading sign.
inline Amplitudes apply_pauli_text(const Amplitudes &psi, const std::string &text) {
    Amplitudes out = psi;
    std::size_t start = 0;
    double sign = 1.0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        sign = text[0] == '-' ? -1.0 : 1.0;
        start = 1;
    }
    for (std::size_t q = 0; start + q < text.size(); ++q) {
        const char c = text[start + q];
        gstab::Pauli p = gstab::Pauli::I;
        if (c == 'X') p = gstab::Pauli::X;
        if (c == 'Y') p = gstab::Pauli::Y;
        if (c == 'Z') p = gstab::Pauli::Z;
        apply_1q(out, q, gstab::matrices::pauli(p));
    }
    return sign * out;
}

/// True when every row of the tableau text fixes psi exactly.
inline bool stabilizes(const Amplitudes &psi, const std::vector<std::string> &rows, double tol = 1e-10) {
    for (const auto &row : rows) {
        if ((apply_pauli_text(psi, row) - psi).norm() > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace oracle
