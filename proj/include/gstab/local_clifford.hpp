#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace gstab {

/// Single-qubit Pauli letter. The numeric values match the (x, z) bit pair
/// encoding used by the tableau code: X = x, Z = z, Y = x|z.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli p);

/// A Pauli letter with a real sign. Conjugating a Hermitian Pauli by a
/// Clifford never produces an imaginary phase.
struct SignedPauli {
    Pauli letter = Pauli::I;
    bool negative = false;

    friend bool operator==(const SignedPauli &, const SignedPauli &) = default;
};

std::ostream &operator<<(std::ostream &out, const SignedPauli &p);

/// One of the 24 single-qubit Clifford operators, identified up to global
/// phase. The index is a position in the canonical enumeration held by
/// `CliffordTables`.
class LocalClifford {
  public:
    static constexpr std::uint8_t kCount = 24;

    constexpr LocalClifford() = default;
    static LocalClifford from_index(unsigned index);

    constexpr std::uint8_t index() const { return index_; }

    friend constexpr bool operator==(LocalClifford, LocalClifford) = default;
    friend constexpr auto operator<=>(LocalClifford, LocalClifford) = default;

  private:
    constexpr explicit LocalClifford(std::uint8_t index) : index_(index) {}
    std::uint8_t index_ = 0;
};

/// The two generators the decomposition table is written in.
enum class Generator : std::uint8_t { SqrtMinusIX = 0, SqrtIZ = 1 };

/// Ordered product of generators; `factors[0]` is the leftmost matrix.
struct GeneratorWord {
    std::vector<Generator> factors;

    std::size_t size() const { return factors.size(); }
    bool empty() const { return factors.empty(); }
    friend bool operator==(const GeneratorWord &, const GeneratorWord &) = default;
};

std::string to_string(const GeneratorWord &word);

template <typename Scalar>
using Matrix2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

/// Exact 2x2 matrices of the named operators. The square roots follow
/// sqrt(+-iP) = (I +- iP)/sqrt(2) = exp(+-i pi/4 P).
namespace matrices {

template <typename Scalar = double>
Matrix2c<Scalar> identity() {
    return Matrix2c<Scalar>::Identity();
}

template <typename Scalar = double>
Matrix2c<Scalar> pauli(Pauli p) {
    using C = std::complex<Scalar>;
    Matrix2c<Scalar> m;
    switch (p) {
        case Pauli::I: m << C(1), C(0), C(0), C(1); break;
        case Pauli::X: m << C(0), C(1), C(1), C(0); break;
        case Pauli::Y: m << C(0), C(0, -1), C(0, 1), C(0); break;
        case Pauli::Z: m << C(1), C(0), C(0), C(-1); break;
    }
    return m;
}

template <typename Scalar = double>
Matrix2c<Scalar> hadamard() {
    const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
    Matrix2c<Scalar> m;
    m << r, r, r, -r;
    return m;
}

template <typename Scalar = double>
Matrix2c<Scalar> phase() {
    Matrix2c<Scalar> m;
    m << Scalar(1), Scalar(0), Scalar(0), std::complex<Scalar>(0, 1);
    return m;
}

/// (I + sign * i P) / sqrt(2) for sign in {+1, -1}.
template <typename Scalar = double>
Matrix2c<Scalar> sqrt_pauli(Pauli p, int sign) {
    const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
    const std::complex<Scalar> coeff(0, sign > 0 ? r : -r);
    return (r * identity<Scalar>() + coeff * pauli<Scalar>(p)).eval();
}

template <typename Scalar = double>
Matrix2c<Scalar> generator(Generator g) {
    return g == Generator::SqrtMinusIX ? sqrt_pauli<Scalar>(Pauli::X, -1)
                                       : sqrt_pauli<Scalar>(Pauli::Z, +1);
}

}  // namespace matrices

/// True iff `a` and `b` differ by a global phase. Normalizes both by the
/// phase of the first entry of `a` whose magnitude is non-negligible.
template <typename DerivedA, typename DerivedB>
bool equal_up_to_phase(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b,
                       double tolerance = 1e-12) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        const auto pa = a.reshaped()(k);
        if (std::abs(pa) > 1e-9) {
            const auto pb = b.reshaped()(k);
            if (std::abs(std::abs(pa) - std::abs(pb)) > tolerance) {
                return false;
            }
            const auto rotation = (pb / std::abs(pb)) / (pa / std::abs(pa));
            return ((a * rotation) - b).cwiseAbs().maxCoeff() <= tolerance;
        }
    }
    return b.cwiseAbs().maxCoeff() <= tolerance;
}

/// Immutable lookup tables for the local Clifford group. Built once by
/// brute force over explicit 2x2 matrices.
struct CliffordTables {
    std::array<Matrix2c<double>, LocalClifford::kCount> matrix;
    std::array<std::array<std::uint8_t, LocalClifford::kCount>, LocalClifford::kCount> product;
    std::array<std::uint8_t, LocalClifford::kCount> adjoint;
    /// conjugation[c][p] = c^dagger p c, indexed by the Pauli enum value.
    std::array<std::array<SignedPauli, 4>, LocalClifford::kCount> conjugation;
    std::array<GeneratorWord, LocalClifford::kCount> decomposition;
    std::array<bool, LocalClifford::kCount> cz_commuting;
    std::array<std::string, LocalClifford::kCount> name;

    /// Index of the element whose matrix equals `m` up to phase, or -1.
    int find(const Matrix2c<double> &m) const;
};

/// Runs the enumeration. Throws std::logic_error on an internal
/// inconsistency (wrong group order, missing decomposition).
CliffordTables build_clifford_tables();

/// Process-wide tables, built on first use.
const CliffordTables &clifford_tables();

void dump_clifford_tables(std::ostream &out, const CliffordTables &tables = clifford_tables());

namespace lc {
// The Pauli group occupies indices 0..3; everything else is in breadth-first
// order over {H, S}.
inline constexpr unsigned kIdentity = 0;
inline constexpr unsigned kX = 1;
inline constexpr unsigned kY = 2;
inline constexpr unsigned kZ = 3;

LocalClifford I();
LocalClifford X();
LocalClifford Y();
LocalClifford Z();
LocalClifford H();
LocalClifford S();
LocalClifford S_dag();
LocalClifford sqrt_iX();
LocalClifford sqrt_minus_iX();
LocalClifford sqrt_iY();
LocalClifford sqrt_minus_iY();
LocalClifford sqrt_iZ();
LocalClifford sqrt_minus_iZ();
LocalClifford pauli(Pauli p);
}  // namespace lc

/// Matrix product a*b, up to phase.
inline LocalClifford multiply(LocalClifford a, LocalClifford b) {
    return LocalClifford::from_index(clifford_tables().product[a.index()][b.index()]);
}

inline LocalClifford operator*(LocalClifford a, LocalClifford b) { return multiply(a, b); }

inline LocalClifford adjoint(LocalClifford a) {
    return LocalClifford::from_index(clifford_tables().adjoint[a.index()]);
}

/// c^dagger p c.
inline SignedPauli conjugate_pauli(LocalClifford c, Pauli p) {
    return clifford_tables().conjugation[c.index()][static_cast<unsigned>(p)];
}

/// c p c^dagger, the image of p under the unitary c.
inline SignedPauli transform_pauli(LocalClifford c, Pauli p) { return conjugate_pauli(adjoint(c), p); }

inline const GeneratorWord &decompose(LocalClifford c) { return clifford_tables().decomposition[c.index()]; }

/// Membership in {I, Z, S, S^dagger}, the operators commuting with CZ.
inline bool commutes_with_cz(LocalClifford c) { return clifford_tables().cz_commuting[c.index()]; }

template <typename Scalar = double>
Matrix2c<Scalar> clifford_matrix(LocalClifford c) {
    return clifford_tables().matrix[c.index()].template cast<std::complex<Scalar>>();
}

inline const std::string &name(LocalClifford c) { return clifford_tables().name[c.index()]; }

std::ostream &operator<<(std::ostream &out, LocalClifford c);

}  // namespace gstab
