#pragma once

// Reference computations used only by the tests. They deliberately avoid the
// library's algorithms: plain integer vectors, brute-force generation and
// direct formula evaluation.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <set>
#include <vector>

#include "stirlingb/qpoly.hpp"

namespace oracle {

using Coeffs = std::vector<std::int64_t>;

inline Coeffs trim(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline Coeffs convolve(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(out);
}

inline Coeffs add(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return trim(a);
}

inline Coeffs bracket(int n) { return Coeffs(static_cast<std::size_t>(n), 1); }

inline Coeffs monomial(std::size_t e) {
  Coeffs c(e + 1, 0);
  c[e] = 1;
  return c;
}

inline Coeffs of(const stirlingb::QPoly& p) { return Coeffs(p.coeffs().begin(), p.coeffs().end()); }

/// Histogram of exponents as a coefficient list.
inline Coeffs from_exponents(const std::vector<int>& exps) {
  Coeffs c;
  for (int e : exps) {
    if (c.size() <= static_cast<std::size_t>(e)) c.resize(static_cast<std::size_t>(e) + 1, 0);
    ++c[static_cast<std::size_t>(e)];
  }
  return trim(c);
}

/// q = 1 type-B second kind, S(n,k) = S(n-1,k-1) + (2k+1) S(n-1,k).
inline std::int64_t stirling2_B_q1(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n == 0) return 1;
  return stirling2_B_q1(n - 1, k - 1) + (2 * k + 1) * stirling2_B_q1(n - 1, k);
}

/// q = 1 type-B first kind, s(n,k) = s(n-1,k-1) + (2n-1) s(n-1,k).
inline std::int64_t stirling1_B_q1(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n == 0) return 1;
  return stirling1_B_q1(n - 1, k - 1) + (2 * n - 1) * stirling1_B_q1(n - 1, k);
}

/// Classical unsigned first kind, c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k).
inline std::int64_t stirling1_A_q1(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n == 0) return 1;
  return stirling1_A_q1(n - 1, k - 1) + (n - 1) * stirling1_A_q1(n - 1, k);
}

/// All set partitions of {0..m-1} as block-label vectors (restricted growth).
inline void for_each_set_partition(int m, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> label(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == m) {
      f(label);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

/// Elementary symmetric polynomial by summing over k-subsets.
inline Coeffs elementary(const std::vector<Coeffs>& xs, int k) {
  Coeffs sum;
  const int n = static_cast<int>(xs.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Coeffs prod{1};
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) prod = convolve(prod, xs[static_cast<std::size_t>(i)]);
    sum = add(sum, prod);
  }
  return sum;
}

/// Complete homogeneous polynomial by summing over k-multisets.
inline Coeffs homogeneous(const std::vector<Coeffs>& xs, int k) {
  Coeffs sum;
  const int n = static_cast<int>(xs.size());
  std::function<void(int, int, Coeffs)> rec = [&](int from, int left, Coeffs prod) {
    if (left == 0) {
      sum = add(sum, prod);
      return;
    }
    for (int i = from; i < n; ++i) rec(i, left - 1, convolve(prod, xs[static_cast<std::size_t>(i)]));
  };
  rec(0, k, Coeffs{1});
  return sum;
}

inline std::vector<Coeffs> odd_brackets(int n) {
  std::vector<Coeffs> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(bracket(2 * i - 1));
  return xs;
}

}  // namespace oracle
