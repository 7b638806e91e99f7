#pragma once

namespace ngonstar {

// Semantic version of the library and the command-line tool.
inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "ngonstar";

}  // namespace ngonstar
