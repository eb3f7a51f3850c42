#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stirlingb/combinat.hpp"
#include "stirlingb/qpoly.hpp"
#include "stirlingb/violation.hpp"

namespace stirlingb {

/// Restricted growth word of type B of the second kind. Letters come from
/// {0, ±1, ..., ±n}; a nonzero letter ±b says that ±j lies in representative
/// block b, 0 puts j in the zero block.
struct RGWord2 {
  std::vector<int> letters;

  int size() const noexcept { return static_cast<int>(letters.size()); }
  /// Largest letter, which equals the number of non-zero blocks.
  int max_letter() const noexcept;

  friend bool operator==(const RGWord2&, const RGWord2&) = default;
};

/// Checks the growth rule. With M the largest absolute value among the
/// earlier letters, position t (t ≥ 2) admits {0, ±1, ..., ±M, M+1}; the
/// first letter must be 0 or 1. A letter -(M+1) is reported as (2b), a letter
/// of absolute value above M+1 as (2).
std::optional<Violation> validate_rg2(std::span<const int> letters);

/// Validating constructor; throws ValidationError naming the condition.
RGWord2 make_rg2(std::vector<int> letters);

RGWord2 partition_to_rg2(const SignedSetPartition& p);
SignedSetPartition rg2_to_partition(const RGWord2& w);

/// Exponent e of wt(w) = q^e. Zeros and first occurrences cost nothing; a
/// repeated letter -b costs 2b-1 and a repeated letter b costs 2b.
int weight_exponent(const RGWord2& w);

/// S^B_q(n,k) by the recursion S(n,k) = S(n-1,k-1) + [2k+1]_q S(n-1,k) with
/// S(n,0) = S(n,n) = 1. Throws DomainError unless 0 ≤ k ≤ n.
QPoly stirling2_q(int n, int k);

/// S^B_q(n,k) as the weight sum over all words of length n with max letter k.
QPoly stirling2_q_enum(int n, int k);

/// S^B_q(n,k,r) by the same recursion with S(r,r,r) = 1 and zero whenever
/// k < r, k > n or n < r.
QPoly stirling2_q_r(int n, int k, int r);

/// S^B_q(n,k,r) summed over the words whose first r letters are 1, 2, ..., r.
QPoly stirling2_q_r_enum(int n, int k, int r);

/// Whole row [S^B_q(n,k,r)]_{k=0..n} by the recursion.
std::vector<QPoly> stirling2_q_r_row(int n, int r);

/// Whole row [S^B_q(n,k,r)]_{k=0..n} by enumeration. Words are generated left
/// to right; the shard splits the work by the first two letters. Throws
/// SizeLimitError beyond the guard (n ≤ 10 by default).
std::vector<QPoly> stirling2_q_r_enum_row(int n, int r, Shard shard = {});

/// "1,0,-1,2,-2,2"
std::string to_string(const RGWord2& w);
/// Parses and validates the comma-separated form.
RGWord2 parse_rg2(std::string_view text);

}  // namespace stirlingb
