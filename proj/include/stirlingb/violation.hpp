#pragma once

#include <string>

namespace stirlingb {

/// A failed word condition: `condition` names the clause of the word's
/// definition ("1", "2", "2b", "3a", "3b", or "alphabet" / "unique" for the
/// well-formedness checks), `position` is 1-based.
struct Violation {
  std::string condition;
  int position = 0;

  std::string to_string() const {
    return "condition (" + condition + ") violated at position " + std::to_string(position);
  }

  friend bool operator==(const Violation&, const Violation&) = default;
};

}  // namespace stirlingb
