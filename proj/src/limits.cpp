#include "stirlingb/limits.hpp"

#include <cstdlib>
#include <string>

#include "stirlingb/errors.hpp"

namespace stirlingb {

SizeGuard SizeGuard::from_environment() {
  SizeGuard guard;
  if (const char* raw = std::getenv("STIRLINGB_MAX_OBJECTS"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const double value = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(value >= 0))
      throw ValidationError("STIRLINGB_MAX_OBJECTS must be a nonnegative number, got '" +
                            std::string(raw) + "'");
    guard.max_objects = value;
  }
  return guard;
}

bool SizeGuard::allows(int n, int default_max_n, double object_count) const {
  if (max_objects) return object_count <= *max_objects;
  return n <= default_max_n;
}

void enforce_size_guard(std::string_view what, int n, int default_max_n,
                        double object_count) {
  if (n < 0) throw DomainError(std::string(what) + ": n must be nonnegative");
  const auto guard = SizeGuard::from_environment();
  if (!guard.allows(n, default_max_n, object_count)) {
    std::string msg = std::string(what) + ": n=" + std::to_string(n) + " exceeds the size guard";
    msg += guard.max_objects ? " (STIRLINGB_MAX_OBJECTS)" : " (max n=" + std::to_string(default_max_n) + ")";
    throw SizeLimitError(msg);
  }
}

}  // namespace stirlingb
