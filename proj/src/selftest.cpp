#include "gstab/selftest.hpp"

#include <ostream>
#include <sstream>

#include <Eigen/Core>

namespace gstab {

namespace {

using M2 = Matrix2c<double>;
using M4 = Eigen::Matrix<std::complex<double>, 4, 4>;

class Check {
  public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::string &what) {
        ++result_.checked;
        if (!ok) {
            if (result_.failures == 0) {
                result_.first_failure = what;
            }
            ++result_.failures;
        }
    }

    CheckResult done() { return std::move(result_); }

  private:
    CheckResult result_;
};

M4 kron(const M2 &high, const M2 &low) {
    M4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = high(i, j) * low;
        }
    }
    return out;
}

M4 cz4() {
    M4 m = M4::Identity();
    m(3, 3) = -1;
    return m;
}

// (C_a (x) C_b) CZ^edge |++> with vertex a as the low bit, via Kronecker
// products rather than the table builder's index loop.
Eigen::Vector4cd pair_state(const CzKey &key) {
    Eigen::Vector4cd plus = Eigen::Vector4cd::Constant(0.5);
    if (key.edge) {
        plus = cz4() * plus;
    }
    return kron(clifford_matrix(key.vop_b), clifford_matrix(key.vop_a)) * plus;
}

std::string idx(unsigned v) { return std::to_string(v); }

}  // namespace

std::vector<CheckResult> selftest(const CzTable &cz) {
    const CliffordTables &t = clifford_tables();
    constexpr unsigned N = LocalClifford::kCount;
    std::vector<CheckResult> out;

    {
        Check c("group elements distinct (24)");
        for (unsigned a = 0; a < N; ++a) {
            for (unsigned b = a + 1; b < N; ++b) {
                c.expect(!equal_up_to_phase(t.matrix[a], t.matrix[b]), idx(a) + " == " + idx(b));
            }
        }
        c.expect(equal_up_to_phase(t.matrix[lc::kIdentity], M2::Identity()), "index 0 is not I");
        c.expect(equal_up_to_phase(t.matrix[lc::kY], matrices::pauli(Pauli::Y)), "index 2 is not Y");
        out.push_back(c.done());
    }
    {
        Check c("multiplication table (24x24)");
        for (unsigned a = 0; a < N; ++a) {
            for (unsigned b = 0; b < N; ++b) {
                c.expect(equal_up_to_phase(t.matrix[a] * t.matrix[b], t.matrix[t.product[a][b]]),
                         idx(a) + "*" + idx(b));
            }
        }
        out.push_back(c.done());
    }
    {
        Check c("group axioms (associativity, identity, inverses)");
        for (unsigned a = 0; a < N; ++a) {
            c.expect(t.product[lc::kIdentity][a] == a && t.product[a][lc::kIdentity] == a, "identity " + idx(a));
            c.expect(t.product[a][t.adjoint[a]] == lc::kIdentity && t.product[t.adjoint[a]][a] == lc::kIdentity,
                     "inverse " + idx(a));
            for (unsigned b = 0; b < N; ++b) {
                for (unsigned d = 0; d < N; ++d) {
                    c.expect(t.product[t.product[a][b]][d] == t.product[a][t.product[b][d]],
                             "associativity " + idx(a) + "," + idx(b) + "," + idx(d));
                }
            }
        }
        out.push_back(c.done());
    }
    {
        Check c("Pauli conjugation (24x3)");
        for (unsigned k = 0; k < N; ++k) {
            for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
                const SignedPauli image = t.conjugation[k][static_cast<unsigned>(p)];
                const M2 expected = t.matrix[k].adjoint() * matrices::pauli(p) * t.matrix[k];
                const M2 got = (image.negative ? -1.0 : 1.0) * matrices::pauli(image.letter);
                c.expect((expected - got).cwiseAbs().maxCoeff() < 1e-12,
                         idx(k) + " conj " + std::string(1, pauli_char(p)));
            }
        }
        out.push_back(c.done());
    }
    {
        Check c("decompositions (24, length <= 5, minimal)");
        for (unsigned k = 0; k < N; ++k) {
            const GeneratorWord &w = t.decomposition[k];
            M2 product = M2::Identity();
            for (Generator g : w.factors) {
                product = product * matrices::generator(g);
            }
            c.expect(w.size() <= 5, idx(k) + " word too long");
            c.expect(equal_up_to_phase(product, t.matrix[k]), idx(k) + " word product mismatch");
            // No shorter word reaches the same element.
            bool shorter = false;
            for (std::size_t len = 0; len < w.size() && !shorter; ++len) {
                for (unsigned bits = 0; bits < (1u << len) && !shorter; ++bits) {
                    M2 m = M2::Identity();
                    for (std::size_t j = 0; j < len; ++j) {
                        m = m * matrices::generator((bits >> j) & 1u ? Generator::SqrtIZ : Generator::SqrtMinusIX);
                    }
                    shorter = equal_up_to_phase(m, t.matrix[k]);
                }
            }
            c.expect(!shorter, idx(k) + " has a shorter word");
        }
        out.push_back(c.done());
    }
    {
        Check c("CZ-commuting set is exactly {I, Z, S, S^dagger}");
        const std::array<M2, 4> expected = {M2::Identity(), matrices::pauli(Pauli::Z), matrices::phase(),
                                            matrices::phase().adjoint()};
        const M4 cz_m = cz4();
        for (unsigned k = 0; k < N; ++k) {
            bool in_set = false;
            for (const auto &m : expected) {
                in_set = in_set || equal_up_to_phase(m, t.matrix[k]);
            }
            const M4 local = kron(M2::Identity(), t.matrix[k]);
            const bool commutes = equal_up_to_phase(local * cz_m * local.adjoint(), cz_m);
            c.expect(t.cz_commuting[k] == in_set && commutes == in_set, "element " + idx(k));
        }
        out.push_back(c.done());
    }
    {
        Check c("CZ table (1152 entries, dense oracle + constraint)");
        const M4 cz_m = cz4();
        for (std::size_t s = 0; s < CzTable::kSize; ++s) {
            const CzKey key = CzTable::key_at(s);
            const CzEntry &entry = cz.lookup(key);
            const std::string label = "key " + std::to_string(int(key.edge)) + " " + idx(key.vop_a.index()) + " " +
                                      idx(key.vop_b.index());
            c.expect(equal_up_to_phase(pair_state(entry), (cz_m * pair_state(key)).eval(), 1e-10),
                     label + ": wrong state");
            const bool ok_a = !commutes_with_cz(key.vop_a) || commutes_with_cz(entry.vop_a);
            const bool ok_b = !commutes_with_cz(key.vop_b) || commutes_with_cz(entry.vop_b);
            c.expect(ok_a && ok_b, label + ": leaves the CZ-commuting set");
        }
        out.push_back(c.done());
    }
    return out;
}

void print_checks(std::ostream &out, const std::vector<CheckResult> &checks) {
    for (const auto &c : checks) {
        out << (c.passed() ? "PASS " : "FAIL ") << c.name << ": " << c.checked << " checks, " << c.failures
            << " failures";
        if (!c.passed()) {
            out << " (first: " << c.first_failure << ")";
        }
        out << '\n';
    }
}

}  // namespace gstab
