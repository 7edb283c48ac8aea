#pragma once

#include <string>

namespace minorforge {

/// Size limits for the exponential searches. Exceeding one raises
/// SizeLimitError. The CLI reads overrides from MINORFORGE_LIMITS.
struct Limits {
  int chromatic = 16;      // vertices, chromatic_number
  int zig = 8;             // vertices, zig
  int cd = 12;             // ground elements, cd
  int odd_minor = 8;       // vertices, odd_clique_minor_number
  int minor = 8;           // vertices, clique_minor_number
};

/// Parse a JSON object such as {"zig": 9, "cd": 14} over the defaults.
/// Unknown keys or non-positive values raise InputError.
Limits parse_limits(const std::string& json_text, Limits base = {});

/// Defaults overridden by the MINORFORGE_LIMITS environment variable.
Limits limits_from_env();

void check_limit(const char* what, int size, int limit);

}  // namespace minorforge
