#ifndef FLOORLOG_CONFIG_HPP
#define FLOORLOG_CONFIG_HPP

namespace floorlog {

// Cap on terms a single brute-force enumeration may touch.
// Default 2^24; FLOORLOG_BUDGET overrides.
long long summation_budget();

// Bit cap for certifying floors of decimal-interval inputs.
inline constexpr unsigned kIntervalPrecisionCap = 4096;

inline constexpr const char* kToolVersion = "floorlog 0.1.0";

} // namespace floorlog

#endif
