#include "gstab/pauli_string.hpp"

#include <bit>
#include <stdexcept>

namespace gstab {

PauliString::PauliString(std::size_t n) : n_(n), xs_((n + 63) / 64, 0), zs_((n + 63) / 64, 0) {}

PauliString PauliString::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    PauliString out(text.size());
    out.negative_ = negative;
    for (std::size_t q = 0; q < text.size(); ++q) {
        switch (text[q]) {
            case 'I':
            case '_': break;
            case 'X': out.set(q, Pauli::X); break;
            case 'Y': out.set(q, Pauli::Y); break;
            case 'Z': out.set(q, Pauli::Z); break;
            default: throw std::invalid_argument("bad Pauli letter '" + std::string(1, text[q]) + "'");
        }
    }
    return out;
}

Pauli PauliString::get(std::size_t q) const {
    return static_cast<Pauli>((x(q) ? 1u : 0u) | (z(q) ? 2u : 0u));
}

void PauliString::set(std::size_t q, Pauli p) {
    const auto bits = static_cast<unsigned>(p);
    if (x(q) != bool(bits & 1u)) {
        flip_x(q);
    }
    if (z(q) != bool(bits & 2u)) {
        flip_z(q);
    }
}

unsigned PauliString::multiply_right(const PauliString &rhs) {
    if (rhs.n_ != n_) {
        throw std::invalid_argument("Pauli strings of different lengths");
    }
    // Two-bit counters per position accumulate the +-i picked up where the
    // factors anticommute; the popcounts then sum them mod 4.
    std::uint64_t cnt1 = 0;
    std::uint64_t cnt2 = 0;
    for (std::size_t w = 0; w < xs_.size(); ++w) {
        const std::uint64_t x1 = xs_[w];
        const std::uint64_t z1 = zs_[w];
        const std::uint64_t x2 = rhs.xs_[w];
        const std::uint64_t z2 = rhs.zs_[w];
        xs_[w] ^= x2;
        zs_[w] ^= z2;
        const std::uint64_t x1z2 = x1 & z2;
        const std::uint64_t anti = (x2 & z1) ^ x1z2;
        cnt2 ^= (cnt1 ^ xs_[w] ^ zs_[w] ^ x1z2) & anti;
        cnt1 ^= anti;
    }
    unsigned log_i = static_cast<unsigned>(std::popcount(cnt1));
    log_i ^= static_cast<unsigned>(std::popcount(cnt2)) << 1;
    log_i += (negative_ ? 2u : 0u) + (rhs.negative_ ? 2u : 0u);
    log_i &= 3u;
    negative_ = (log_i & 2u) != 0;
    return log_i & 1u;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("Pauli strings of different lengths");
    }
    unsigned parity = 0;
    for (std::size_t w = 0; w < xs_.size(); ++w) {
        parity ^= static_cast<unsigned>(std::popcount((xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w])));
    }
    return (parity & 1u) == 0;
}

bool PauliString::is_identity() const {
    for (std::size_t w = 0; w < xs_.size(); ++w) {
        if (xs_[w] || zs_[w]) {
            return false;
        }
    }
    return true;
}

std::string PauliString::to_string() const {
    std::string out(1, negative_ ? '-' : '+');
    for (std::size_t q = 0; q < n_; ++q) {
        out += pauli_char(get(q));
    }
    return out;
}

}  // namespace gstab
