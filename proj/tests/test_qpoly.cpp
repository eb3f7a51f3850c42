#include <doctest.h>

#include <limits>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "stirlingb/errors.hpp"
#include "stirlingb/qpoly.hpp"

using namespace stirlingb;

namespace {

QPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<std::int64_t> coef(-9, 9);
  std::vector<std::int64_t> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = coef(rng);
  return QPoly(c);
}

}  // namespace

TEST_CASE("q_bracket") {
  CHECK(q_bracket(0).is_zero());
  CHECK(q_bracket(1) == QPoly{1});
  CHECK(q_bracket(3) == QPoly{1, 1, 1});
  for (int n = 1; n <= 20; ++n) CHECK(eval_at_one(q_bracket(n)) == n);
  CHECK_THROWS_AS(q_bracket(-1), DomainError);
}

TEST_CASE("normalization drops trailing zeros") {
  CHECK(QPoly({1, 2, 0, 0}).coeffs().size() == 2);
  CHECK(QPoly({0, 0}).is_zero());
  CHECK(QPoly{}.degree() == -1);
  CHECK((QPoly{1, 1} - QPoly{0, 1}) == QPoly{1});
  CHECK((QPoly{0, 0, 3} - QPoly{0, 0, 3}).is_zero());
}

TEST_CASE("arithmetic examples") {
  CHECK(QPoly{1, 1} * QPoly{1, 1} == QPoly{1, 2, 1});
  const QPoly p{4, 0, -2};
  CHECK(p + QPoly{} == p);
  CHECK(QPoly{1, 1, 1} * QPoly{2, 1, 1} == QPoly{2, 3, 4, 2, 1});
  CHECK(pow(QPoly{1, 1}, 0) == QPoly{1});
  CHECK(pow(QPoly{1, 1}, 3) == QPoly{1, 3, 3, 1});
  CHECK(3 * QPoly{1, -2} == QPoly{3, -6});
  CHECK(-QPoly{1, -2} == QPoly{-1, 2});
}

TEST_CASE("multiplication matches naive convolution on random inputs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const QPoly a = random_poly(rng, 6);
    const QPoly b = random_poly(rng, 6);
    CHECK(oracle::of(a * b) == oracle::convolve(oracle::of(a), oracle::of(b)));
    CHECK(oracle::of(a + b) == oracle::add(oracle::of(a), oracle::of(b)));
  }
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const QPoly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == QPoly{});
  }
}

TEST_CASE("overflow is reported, never wrapped") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(QPoly{big} + QPoly{1}, OverflowError);
  CHECK_THROWS_AS((QPoly{big, 1} * QPoly{2}), OverflowError);
  CHECK_THROWS_AS(-QPoly{std::numeric_limits<std::int64_t>::min()}, OverflowError);
  CHECK_THROWS_AS(eval_at_one((QPoly{big, big})), OverflowError);
  try {
    (void)(QPoly{big} * QPoly{big});
    FAIL("expected overflow");
  } catch (const OverflowError& e) {
    CHECK(std::string(e.what()).find("multiplication") != std::string::npos);
  }
}

TEST_CASE("substitute_q_power") {
  CHECK(substitute_q_power(QPoly{1, 1}, 2) == QPoly{1, 0, 1});
  const QPoly p{3, -1, 4};
  CHECK(substitute_q_power(p, 1) == p);
  CHECK(substitute_q_power(QPoly{1, 1, 1}, 2) == QPoly{1, 0, 1, 0, 1});
  CHECK_THROWS_AS(substitute_q_power(p, 0), DomainError);
  CHECK(substitute_q_power(QPoly{}, 5).is_zero());
}

TEST_CASE("eval_at_one") {
  CHECK(eval_at_one(QPoly{1, 1, 1}) == 3);
  CHECK(eval_at_one(QPoly{}) == 0);
  CHECK(eval_at_one(QPoly{2, 1, 1}) == 4);
}

TEST_CASE("text rendering") {
  CHECK(QPoly{}.to_string() == "0");
  CHECK(QPoly{2, 1, 1}.to_string() == "2 + q + q^2");
  CHECK(QPoly{1, -1}.to_string() == "1 - q");
  CHECK(QPoly{0, 0, 3}.to_string() == "3*q^2");
  CHECK(QPoly{-1}.to_string() == "-1");
  std::ostringstream os;
  os << QPoly{0, -2};
  CHECK(os.str() == "-2*q");
}

TEST_CASE("expand_linear_factors") {
  CHECK(expand_linear_factors({}) == TPoly::one());
  const std::vector<QPoly> two{QPoly{1}, QPoly{2, 1}};
  const TPoly p = expand_linear_factors(two);
  CHECK(p == TPoly({QPoly{2, 1}, QPoly{3, 1}, QPoly{1}}));
  CHECK(p.to_string() == "t^2 + (3 + q)*t + (2 + q)");
  const std::vector<QPoly> odd{QPoly{1}, QPoly{1, 1, 1}};
  CHECK(expand_linear_factors(odd) == TPoly({QPoly{1, 1, 1}, QPoly{2, 1, 1}, QPoly{1}}));
}

TEST_CASE("expand_linear_factors is multiplicative") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<QPoly> cs;
    const int m = static_cast<int>(rng() % 6);
    for (int i = 0; i < m; ++i) cs.push_back(random_poly(rng, 3));
    const std::size_t cut = cs.empty() ? 0 : rng() % (cs.size() + 1);
    const std::vector<QPoly> left(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(cut));
    const std::vector<QPoly> right(cs.begin() + static_cast<std::ptrdiff_t>(cut), cs.end());
    CHECK(expand_linear_factors(left) * expand_linear_factors(right) == expand_linear_factors(cs));
    TPoly stepwise = TPoly::one();
    for (const auto& c : cs) stepwise.mul_linear(c);
    CHECK(stepwise == expand_linear_factors(cs));
  }
}
