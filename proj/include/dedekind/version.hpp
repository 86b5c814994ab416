#pragma once

namespace dedekind {

// Bumped whenever a change could alter computed values; cache entries from
// other versions are ignored.
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace dedekind
