#pragma once

#include <string>
#include <vector>

#include "stirlingb/combinat.hpp"

namespace stirlingb {

/// One cycle unit of the Sagan-Swanson standard form. A split pair c, -c is
/// one unit whose first half is the piece containing -m (written ending in
/// -m) and whose second half is its negation (ending in m). A non-split cycle
/// is written ending in -m and cut into its two halves.
struct SSUnit {
  std::vector<int> first_half;
  std::vector<int> second_half;
  CycleKind kind = CycleKind::Split;

  int min_abs() const;

  friend bool operator==(const SSUnit&, const SSUnit&) = default;
};

struct SSForm {
  std::vector<SSUnit> units;

  friend bool operator==(const SSForm&, const SSForm&) = default;
};

SSForm ss_standard_form(const SignedPermutation& p);
/// Throws ValidationError on a malformed form.
SignedPermutation ss_to_perm(const SSForm& form);

/// The 2n-letter word obtained by dropping parentheses.
std::vector<int> ss_word(const SSForm& form);
std::vector<int> ss_word(const SignedPermutation& p);

/// #{(i,j) : i < j, w_i > |w_j|}
int ss_inv(const SignedPermutation& p);
int ss_inv(const SSForm& form);

/// σ: the first half of each unit, in order.
std::vector<int> shortened_form(const SSForm& form);
std::vector<int> shortened_form(const SignedPermutation& p);
std::vector<int> abs_form(const std::vector<int>& sigma);

/// Counts over index pairs i < j of σ, "same" meaning same unit:
/// A: |σ_i| > |σ_j|, different units; B: same, |σ_i| > |σ_j|, σ_i > 0;
/// C: same, |σ_i| > |σ_j|, σ_i < 0; D: same, σ_i < σ_j, |σ_i| < |σ_j|.
struct FlagParts {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;

  /// 2(p_A + p_B) + p_C + p_D
  int weighted() const noexcept { return 2 * (a + b) + c + d; }

  friend bool operator==(const FlagParts&, const FlagParts&) = default;
};

FlagParts flag_parts(const SSForm& form);
FlagParts flag_parts(const SignedPermutation& p);

/// "(7,-1)(-7,1)(5,-4,9,2,-5,4,-9,-2)(-8,3,8,-3)(6,-6)"
std::string to_string(const SSForm& form);

}  // namespace stirlingb
