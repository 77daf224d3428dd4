#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gstab/local_clifford.hpp"

namespace gstab {

/// Bit-packed n-qubit Pauli operator with a sign. Letter encoding per
/// qubit is (x, z): I=(0,0) X=(1,0) Z=(0,1) Y=(1,1), where (1,1) means Y
/// itself rather than XZ.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::size_t n);

    /// Parses `+XZ_Y` style text: optional sign, then one of IXYZ_ per qubit.
    static PauliString parse(std::string_view text);

    std::size_t size() const { return n_; }
    bool negative() const { return negative_; }
    void set_negative(bool negative) { negative_ = negative; }

    Pauli get(std::size_t q) const;
    void set(std::size_t q, Pauli p);
    bool x(std::size_t q) const { return (xs_[q / 64] >> (q % 64)) & 1u; }
    bool z(std::size_t q) const { return (zs_[q / 64] >> (q % 64)) & 1u; }
    void flip_x(std::size_t q) { xs_[q / 64] ^= std::uint64_t{1} << (q % 64); }
    void flip_z(std::size_t q) { zs_[q / 64] ^= std::uint64_t{1} << (q % 64); }

    std::vector<std::uint64_t> &x_words() { return xs_; }
    std::vector<std::uint64_t> &z_words() { return zs_; }
    const std::vector<std::uint64_t> &x_words() const { return xs_; }
    const std::vector<std::uint64_t> &z_words() const { return zs_; }

    /// this <- this * rhs, folding any real sign into this string. Returns 1
    /// when an extra factor of i is left over (the factors anticommute),
    /// 0 otherwise.
    unsigned multiply_right(const PauliString &rhs);

    bool commutes_with(const PauliString &other) const;
    bool is_identity() const;

    std::string to_string() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::size_t n_ = 0;
    bool negative_ = false;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
};

}  // namespace gstab
