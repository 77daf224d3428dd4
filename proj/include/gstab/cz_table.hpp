#pragma once

#include <array>
#include <iosfwd>
#include <memory>

#include "gstab/local_clifford.hpp"

namespace gstab {

/// A two-vertex graph state with vertex operators: (edge?, C_a, C_b).
struct CzKey {
    bool edge = false;
    LocalClifford vop_a;
    LocalClifford vop_b;

    friend bool operator==(const CzKey &, const CzKey &) = default;
};

using CzEntry = CzKey;

/// Amplitudes of (C_a (x) C_b) CZ^edge |++>, with vertex a as the low bit.
Eigen::Vector4cd two_qubit_state(const CzKey &key);

/// Function table of CZ restricted to two-qubit stabilizer states. Every
/// entry keeps a vertex operator inside {I, Z, S, S^dagger} whenever the
/// key's operator for that vertex was inside that set.
class CzTable {
  public:
    static constexpr std::size_t kSize = 2 * LocalClifford::kCount * LocalClifford::kCount;

    /// Brute-force construction against the dense two-qubit oracle. Among
    /// valid representations the least (edge, a, b) triple is kept. Throws
    /// std::logic_error if some key has no admissible entry.
    static CzTable build();

    const CzEntry &lookup(const CzKey &key) const { return entries_[slot(key)]; }

    /// Replaces one entry; exists for fault-injection tests.
    void override_entry(const CzKey &key, const CzEntry &entry) { entries_[slot(key)] = entry; }

    /// One line per key: `edge a b -> edge' a' b'` with operator indices.
    void dump(std::ostream &out) const;

    static CzKey key_at(std::size_t slot);

  private:
    static std::size_t slot(const CzKey &key) {
        return (key.edge ? LocalClifford::kCount * LocalClifford::kCount : 0) +
               key.vop_a.index() * LocalClifford::kCount + key.vop_b.index();
    }

    std::array<CzEntry, kSize> entries_{};
};

/// The shared table, built on first use.
std::shared_ptr<const CzTable> default_cz_table();

inline const CzEntry &cz_lookup(const CzKey &key) { return default_cz_table()->lookup(key); }

}  // namespace gstab
