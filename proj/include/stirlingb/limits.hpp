#pragma once

#include <optional>
#include <string_view>

namespace stirlingb {

/// Guard against accidentally huge exhaustive runs. By default each
/// enumeration has a maximum n; setting STIRLINGB_MAX_OBJECTS replaces that
/// rule with a cap on the number of objects the enumeration would visit.
struct SizeGuard {
  std::optional<double> max_objects;

  static SizeGuard from_environment();

  bool allows(int n, int default_max_n, double object_count) const;
};

/// Throws SizeLimitError (or DomainError for n < 0) when `what` at size n is
/// not permitted by the current guard.
void enforce_size_guard(std::string_view what, int n, int default_max_n,
                        double object_count);

}  // namespace stirlingb
