#include "minorforge/limits.hpp"

#include "minorforge/core.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>

namespace minorforge {

Limits parse_limits(const std::string& json_text, Limits base) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("limits: ") + e.what());
  }
  if (!j.is_object())
    throw InputError("limits must be a JSON object");
  for (auto& [key, value] : j.items()) {
    if (!value.is_number_integer() || value.get<int>() < 1)
      throw InputError("limit '" + key + "' must be a positive integer");
    int v = value.get<int>();
    if (key == "chromatic" || key == "chi")
      base.chromatic = v;
    else if (key == "zig")
      base.zig = v;
    else if (key == "cd")
      base.cd = v;
    else if (key == "odd_minor")
      base.odd_minor = v;
    else if (key == "minor")
      base.minor = v;
    else
      throw InputError("unknown limit '" + key + "'");
  }
  return base;
}

Limits limits_from_env() {
  const char* env = std::getenv("MINORFORGE_LIMITS");
  if (env == nullptr || *env == '\0')
    return {};
  return parse_limits(env);
}

void check_limit(const char* what, int size, int limit) {
  // Bitmask searches cap out at 64 elements regardless of configuration.
  if (size > limit || size > 64)
    throw SizeLimitError(std::string(what) + ": size " + std::to_string(size) +
                         " exceeds limit " + std::to_string(std::min(limit, 64)));
}

}  // namespace minorforge
