#pragma once

namespace rmtlab {

inline constexpr const char* kVersion = "0.1.0";

// Bumped whenever the table builder changes in a way that invalidates
// cached distribution tables.
inline constexpr const char* kTableBuilderVersion = "1";

}  // namespace rmtlab
