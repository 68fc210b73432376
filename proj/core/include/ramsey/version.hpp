#pragma once

namespace ramsey {

inline constexpr const char* kEngineVersion = "ramsey-core/0.1.0";

/// Pinned pseudorandom generator for every stochastic operation; the
/// algorithm is fixed by the C++ standard, so seeded runs reproduce
/// bit-identically across platforms.
inline constexpr const char* kRngName = "std::mt19937_64";

}  // namespace ramsey
