#pragma once

/// @file version.hpp
/// Tool identity embedded in reports.

namespace polarity {

inline constexpr const char* kToolName = "polarity";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace polarity
