#pragma once

namespace gstab {

inline constexpr const char *kVersion = "0.1.0";

}  // namespace gstab
