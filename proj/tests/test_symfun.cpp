#include <doctest.h>

#include "oracles.hpp"
#include "stirlingb/errors.hpp"
#include "stirlingb/rg1.hpp"
#include "stirlingb/rg2.hpp"
#include "stirlingb/symfun.hpp"

using namespace stirlingb;

TEST_CASE("specialized elementary and homogeneous functions match brute force") {
  for (int n = 0; n <= 5; ++n) {
    const auto xs = oracle::odd_brackets(n);
    for (int k = 0; k <= n + 1; ++k) CHECK(oracle::of(elementary_spec(n, k)) == oracle::elementary(xs, k));
    for (int k = 0; k <= 4; ++k) CHECK(oracle::of(homogeneous_spec(n, k)) == oracle::homogeneous(xs, k));
  }
  CHECK(homogeneous_spec(0, 0) == QPoly{1});
  CHECK(homogeneous_spec(0, 2).is_zero());
  CHECK(elementary_spec(3, 4).is_zero());
}

TEST_CASE("power sums") {
  CHECK(power_spec(1, 3) == QPoly{1});
  CHECK(power_spec(2, 2) == QPoly{2, 2, 3, 2, 1});
  CHECK(power_spec(0, 1).is_zero());
  for (int n = 1; n <= 5; ++n) {
    oracle::Coeffs sum;
    for (const auto& x : oracle::odd_brackets(n)) sum = oracle::add(sum, oracle::convolve(x, x));
    CHECK(oracle::of(power_spec(n, 2)) == sum);
  }
  CHECK_THROWS_AS(power_spec(2, 0), DomainError);
}

TEST_CASE("elementary functions are the shifted first-kind numbers") {
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) CHECK(elementary_spec(n, k) == sstirlingB1_q(n, n - k));
}

TEST_CASE("homogeneous functions are second-kind numbers with a shifted index") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 6; ++k) CHECK(homogeneous_spec(n, k) == stirling2_q(n - 1 + k, n - 1));
}

TEST_CASE("E(-t) H(t) = 1") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 6; ++m) {
      QPoly sum;
      for (int j = 0; j <= m; ++j) {
        const QPoly term = elementary_spec(n, j) * homogeneous_spec(n, m - j);
        sum += (j % 2 == 0) ? term : -term;
      }
      CHECK(sum.is_zero());
    }
}

TEST_CASE("Newton identity m h_m = sum p_j h_{m-j}") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 6; ++m) {
      QPoly rhs;
      for (int j = 1; j <= m; ++j) rhs += power_spec(n, j) * homogeneous_spec(n, m - j);
      CHECK(static_cast<std::int64_t>(m) * homogeneous_spec(n, m) == rhs);
    }
}

TEST_CASE("residuals vanish with the shifted index") {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 6; ++m) {
      CHECK(orthogonality_residual(n, m).is_zero());
      CHECK(power_sum_residual(n, m).is_zero());
    }
}

TEST_CASE("literal index gives nonzero residuals") {
  CHECK(printed_orthogonality_residual(1, 1) == QPoly{1, 1, 1});
  CHECK(printed_homogeneous_residual(1, 1) == QPoly{-1, -1, -1});
  CHECK(printed_power_sum_residual(1, 1).is_zero());
  // h_1 in one variable is 1, S^B_q(2,1) is 2 + q + q^2.
  CHECK(printed_homogeneous_residual(1, 1) == homogeneous_spec(1, 1) - stirling2_q(2, 1));
  bool any_nonzero = false;
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) any_nonzero = any_nonzero || !printed_orthogonality_residual(n, m).is_zero();
  CHECK(any_nonzero);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(orthogonality_residual(0, 1), DomainError);
  CHECK_THROWS_AS(elementary_spec(-1, 0), DomainError);
}
