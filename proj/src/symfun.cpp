#include "stirlingb/symfun.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "stirlingb/errors.hpp"
#include "stirlingb/rg1.hpp"
#include "stirlingb/rg2.hpp"

namespace stirlingb {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(std::string(what) + ": argument out of range");
}

// ss^B_q(n, k) with k < 0 read as zero.
QPoly ss_or_zero(const std::vector<QPoly>& ss_row, int k) {
  return k < 0 ? QPoly{} : ss_row[idx(k)];
}

// Σ_{j=j0}^m (-1)^j w(j) ss(n,n-j) S(base+m-j, base) with w(j) = 1 or j.
QPoly theorem_sum(int n, int m, int base, bool weighted) {
  const auto ss_row = sstirlingB1_q_row(n);
  QPoly sum;
  for (int j = weighted ? 1 : 0; j <= m; ++j) {
    QPoly term = ss_or_zero(ss_row, n - j) * stirling2_q(base + m - j, base);
    if (weighted) term = static_cast<std::int64_t>(j) * term;
    if ((j % 2 == 1) != weighted) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace

std::vector<QPoly> odd_specialization(int n) {
  require(n >= 0, "odd_specialization");
  std::vector<QPoly> xs;
  for (int i = 0; i < n; ++i) xs.push_back(q_bracket(2 * i + 1));
  return xs;
}

QPoly elementary_spec(int n, int k) {
  require(n >= 0 && k >= 0, "elementary_spec");
  if (k > n) return {};
  // e[j] holds e_j over the first m variables.
  std::vector<QPoly> e(idx(k) + 1);
  e[0] = QPoly{1};
  const auto xs = odd_specialization(n);
  for (int m = 1; m <= n; ++m)
    for (int j = std::min(k, m); j >= 1; --j) e[idx(j)] += xs[idx(m - 1)] * e[idx(j - 1)];
  return e[idx(k)];
}

QPoly homogeneous_spec(int n, int k) {
  require(n >= 0 && k >= 0, "homogeneous_spec");
  // h[j] holds h_j over the first m variables; zero variables give δ_j0.
  std::vector<QPoly> h(idx(k) + 1);
  h[0] = QPoly{1};
  const auto xs = odd_specialization(n);
  for (int m = 1; m <= n; ++m)
    for (int j = 1; j <= k; ++j) h[idx(j)] += xs[idx(m - 1)] * h[idx(j - 1)];
  return h[idx(k)];
}

QPoly power_spec(int n, int m) {
  require(n >= 0 && m >= 1, "power_spec");
  QPoly sum;
  for (const auto& x : odd_specialization(n)) sum += pow(x, static_cast<unsigned>(m));
  return sum;
}

QPoly orthogonality_residual(int n, int m) {
  require(n >= 1 && m >= 1, "orthogonality_residual");
  return theorem_sum(n, m, n - 1, false);
}

QPoly power_sum_residual(int n, int m) {
  require(n >= 1 && m >= 1, "power_sum_residual");
  return theorem_sum(n, m, n - 1, true) - power_spec(n, m);
}

QPoly printed_orthogonality_residual(int n, int m) {
  require(n >= 1 && m >= 1, "printed_orthogonality_residual");
  return theorem_sum(n, m, n, false);
}

QPoly printed_power_sum_residual(int n, int m) {
  require(n >= 1 && m >= 1, "printed_power_sum_residual");
  return theorem_sum(n, m, n, true) - power_spec(n, m);
}

QPoly printed_homogeneous_residual(int n, int k) {
  require(n >= 0 && k >= 0, "printed_homogeneous_residual");
  return homogeneous_spec(n, k) - stirling2_q(n + k, n);
}

}  // namespace stirlingb
