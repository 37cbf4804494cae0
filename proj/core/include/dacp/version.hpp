#pragma once

namespace dacp {

inline constexpr const char* kVersion = "0.1.0";

// Bumped whenever an on-disk format (model files, manifests) changes shape.
inline constexpr int kFormatVersion = 1;

}  // namespace dacp
