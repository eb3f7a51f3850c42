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

/// Letter (i, j) of a first-kind RG-word: element t sits in cycle |i| at
/// location |j|. In type B a negative i marks a non-split cycle and a
/// negative j records that -t (not t) appears first in the representative.
struct RGPair {
  int i = 1;
  int j = 1;

  friend bool operator==(const RGPair&, const RGPair&) = default;
};

/// Restricted growth word of type A of the first kind.
struct RGWordA1 {
  std::vector<RGPair> pairs;

  int size() const noexcept { return static_cast<int>(pairs.size()); }
  /// Number of cycles (the largest i).
  int cycle_count() const noexcept;

  friend bool operator==(const RGWordA1&, const RGWordA1&) = default;
};

/// Restricted growth word of type B of the first kind.
struct RGWordB1 {
  std::vector<RGPair> pairs;

  int size() const noexcept { return static_cast<int>(pairs.size()); }

  friend bool operator==(const RGWordB1&, const RGWordB1&) = default;
};

/// Conditions: (1) first pair (1,1); (2) i_t ≤ M+1 for the prefix maximum M;
/// (3a) i_t = M+1 forces j_t = 1; (3b) otherwise (i_t, j_t - 1) occurs in the
/// word. "alphabet" flags entries outside 1..n, "unique" a repeated pair.
std::optional<Violation> validate_rgA(std::span<const RGPair> pairs);

/// Type-B analogue: first pair (±1,1); growth measured on |i|; for (3b) the
/// word must contain (i_t, ±(|j_t| - 1)). "unique" flags two pairs sharing
/// (i, |j|).
std::optional<Violation> validate_rgB(std::span<const RGPair> pairs);

RGWordA1 make_rgA(std::vector<RGPair> pairs);
RGWordB1 make_rgB(std::vector<RGPair> pairs);

/// ω_t = (c, location of t in cycle c), cycles in standard form.
RGWordA1 phiA(const PlainPermutation& p);
PlainPermutation phiA_inverse(const RGWordA1& w);

/// ω_t = (±c, ±location), the first sign negative for non-split cycles and
/// the second the sign of the first appearance of ±t in the representative.
RGWordB1 phiB(const SignedPermutation& p);
SignedPermutation phiB_inverse(const RGWordB1& w);

/// Pairs a < b with ω_b strictly lexicographically smaller than ω_a.
int inv_A(const RGWordA1& w);

struct FirstKindStats {
  int inv_B = 0;
  int neg = 0;
  int nl = 0;
  int finv = 0;
  int sfinv = 0;
  /// Number of non-split cycles: pairs opening a cycle (j = 1) with i < 0.
  int k = 0;

  friend bool operator==(const FirstKindStats&, const FirstKindStats&) = default;
};

/// inv_B compares (|i|, |j|) lexicographically; finv = 2 inv_B + neg and
/// sfinv = finv + nl.
FirstKindStats first_kind_stats(const RGWordB1& w);

// q-Stirling numbers of type A, first kind ------------------------------------

/// s^A_q(n,k) = s^A_q(n-1,k-1) + [n-1]_q s^A_q(n-1,k), s^A_q(0,k) = δ_0k.
QPoly stirlingA_q(int n, int k);
QPoly stirlingA_q_enum(int n, int k);
QPoly stirlingA_q_r(int n, int k, int r);
QPoly stirlingA_q_r_enum(int n, int k, int r);
std::vector<QPoly> stirlingA_q_r_row(int n, int r);
/// Σ q^inv_A over Φ^A(S_n) restricted to words starting (1,1)(2,1)...(r,1).
std::vector<QPoly> stirlingA_q_r_enum_row(int n, int r, Shard shard = {});

// q-Stirling numbers of type B, first kind ------------------------------------

/// s^B_q(n,0) = Σ_ℓ s^A_{q²}(n,ℓ)·(1+q)^(n-ℓ) for n ≥ 1 (1 for n = 0).
QPoly split_only_boundary(int n);

/// s^B_q(n,k) = s^B_q(n-1,k-1) + (1 + [2n-2]_q) s^B_q(n-1,k) with the split-only
/// boundary above. Throws DomainError unless 0 ≤ k ≤ n.
QPoly stirlingB1_q(int n, int k);
QPoly stirlingB1_q_enum(int n, int k);
QPoly stirlingB1_q_r(int n, int k, int r);
QPoly stirlingB1_q_r_enum(int n, int k, int r);
std::vector<QPoly> stirlingB1_q_r_row(int n, int r);

/// ss^B_q(n,k) = ss^B_q(n-1,k-1) + [2n-1]_q ss^B_q(n-1,k) with
/// ss^B_q(n,0) = [1]_q [3]_q ... [2n-1]_q.
QPoly sstirlingB1_q(int n, int k);
QPoly sstirlingB1_q_enum(int n, int k);
std::vector<QPoly> sstirlingB1_q_row(int n);

/// Σ q^finv and Σ q^sfinv over Φ^B(B_n), bucketed by k, restricted to words
/// starting (-1,1)(-2,1)...(-r,1). Throws SizeLimitError for n > 8 by default.
struct FirstKindEnumRows {
  std::vector<QPoly> finv;
  std::vector<QPoly> sfinv;
};
FirstKindEnumRows first_kind_enum_rows(int n, int r, Shard shard = {});

/// (t+1)(t+1+[2]_q)...(t+1+[2n-2]_q)
TPoly product_first_kind(int n);
/// (t+1+[2r]_q)(t+1+[2r+2]_q)...(t+1+[2n-2]_q)
TPoly product_first_kind_qr(int n, int r);
/// (t+1)(t+[3]_q)...(t+[2n-1]_q)
TPoly product_shifted(int n);

/// "(1,1)(-2,1)(-3,1)"
std::string to_string(const RGWordA1& w);
std::string to_string(const RGWordB1& w);
RGWordA1 parse_rgA(std::string_view text);
RGWordB1 parse_rgB(std::string_view text);

}  // namespace stirlingb
