#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "gstab/local_clifford.hpp"

namespace gstab {

/// State vector over n qubits. Qubit q is bit q of the amplitude index.
template <typename Scalar = double>
class BasicDenseState {
  public:
    using Complex = std::complex<Scalar>;
    using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

    static constexpr std::size_t kMaxQubits = 14;

    /// |0...0>.
    explicit BasicDenseState(std::size_t n) : n_(n) {
        check_size(n);
        amplitudes_ = Vector::Zero(Eigen::Index(1) << n);
        amplitudes_(0) = Complex(1);
    }

    BasicDenseState(std::size_t n, Vector amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
        check_size(n);
        if (amplitudes_.size() != (Eigen::Index(1) << n)) {
            throw std::invalid_argument("amplitude vector length does not match qubit count");
        }
    }

    std::size_t qubits() const { return n_; }
    const Vector &amplitudes() const { return amplitudes_; }
    Vector &amplitudes() { return amplitudes_; }

    void apply(std::size_t q, const Matrix2c<Scalar> &m) {
        check_qubit(q);
        const Eigen::Index bit = Eigen::Index(1) << q;
        for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
            if (!(i & bit)) {
                const Complex a0 = amplitudes_(i);
                const Complex a1 = amplitudes_(i | bit);
                amplitudes_(i) = m(0, 0) * a0 + m(0, 1) * a1;
                amplitudes_(i | bit) = m(1, 0) * a0 + m(1, 1) * a1;
            }
        }
    }

    void apply_cz(std::size_t a, std::size_t b) {
        check_pair(a, b);
        const Eigen::Index mask = (Eigen::Index(1) << a) | (Eigen::Index(1) << b);
        for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
            if ((i & mask) == mask) {
                amplitudes_(i) = -amplitudes_(i);
            }
        }
    }

    void apply_cnot(std::size_t control, std::size_t target) {
        check_pair(control, target);
        const Eigen::Index c = Eigen::Index(1) << control;
        const Eigen::Index t = Eigen::Index(1) << target;
        for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
            if ((i & c) && !(i & t)) {
                std::swap(amplitudes_(i), amplitudes_(i | t));
            }
        }
    }

    Scalar probability_one(std::size_t q) const {
        check_qubit(q);
        const Eigen::Index bit = Eigen::Index(1) << q;
        Scalar p = 0;
        for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
            if (i & bit) {
                p += std::norm(amplitudes_(i));
            }
        }
        return p;
    }

    /// Projects qubit q onto |bit> and renormalizes. Throws if the
    /// projection vanishes.
    void project(std::size_t q, bool bit) {
        check_qubit(q);
        const Eigen::Index mask = Eigen::Index(1) << q;
        for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
            if (bool(i & mask) != bit) {
                amplitudes_(i) = Complex(0);
            }
        }
        const Scalar norm = amplitudes_.norm();
        if (norm < Scalar(1e-12)) {
            throw std::domain_error("projection onto a zero-probability outcome");
        }
        amplitudes_ /= norm;
    }

    Scalar norm() const { return amplitudes_.norm(); }

  private:
    static void check_size(std::size_t n) {
        if (n == 0 || n > kMaxQubits) {
            throw std::invalid_argument("dense states support 1.." + std::to_string(kMaxQubits) + " qubits, got " +
                                        std::to_string(n));
        }
    }
    void check_qubit(std::size_t q) const {
        if (q >= n_) {
            throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
        }
    }
    void check_pair(std::size_t a, std::size_t b) const {
        check_qubit(a);
        check_qubit(b);
        if (a == b) {
            throw std::invalid_argument("two-qubit gate needs distinct qubits");
        }
    }

    std::size_t n_;
    Vector amplitudes_;
};

using DenseState = BasicDenseState<double>;

/// |<a|b>| > 1 - tolerance. Throws std::invalid_argument on size mismatch.
template <typename Scalar>
bool states_equal_up_to_phase(const BasicDenseState<Scalar> &a, const BasicDenseState<Scalar> &b,
                              double tolerance = 1e-10) {
    if (a.qubits() != b.qubits()) {
        throw std::invalid_argument("cannot compare states of different sizes");
    }
    return std::abs(a.amplitudes().dot(b.amplitudes())) > 1 - tolerance;
}

}  // namespace gstab
