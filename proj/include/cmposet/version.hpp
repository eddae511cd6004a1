#pragma once

namespace cmposet {

/// Stamped into reports and cache keys; bump when constructions change.
inline constexpr const char* library_version = "0.3.0";

}  // namespace cmposet
