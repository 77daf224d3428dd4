#pragma once

#include <array>
#include <cstdint>
#include <random>

namespace gstab {

/// Source of random measurement outcomes shared by every engine. Each
/// random outcome consumes exactly one draw; forced outcomes consume none,
/// so engines fed the same seed agree outcome for outcome.
class OutcomeRng {
  public:
    explicit OutcomeRng(std::uint64_t seed) : engine_(seed) {}

    bool next_bit() { return (engine_() >> 63) != 0; }

  private:
    std::mt19937_64 engine_;
};

/// Independent stream for (seed, index), used to derive per-iteration seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (std::uint64_t{out[0]} << 32) | out[1];
}

}  // namespace gstab
