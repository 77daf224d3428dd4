#pragma once

#include <cstddef>

namespace gstab {

using Vertex = std::size_t;

struct MeasurementRecord {
    Vertex qubit = 0;
    bool outcome = false;
    /// Set when the outcome did not depend on the random source.
    bool deterministic = false;

    friend bool operator==(const MeasurementRecord &, const MeasurementRecord &) = default;
};

}  // namespace gstab
