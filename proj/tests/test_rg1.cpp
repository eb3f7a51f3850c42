#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <set>

#include "oracles.hpp"
#include "stirlingb/errors.hpp"
#include "stirlingb/rg1.hpp"

using namespace stirlingb;

namespace {

using Pairs = std::vector<RGPair>;

const Pairs kWordA = {{1, 1}, {2, 1}, {3, 1}, {2, 3}, {2, 2}, {4, 1}, {1, 2}, {3, 2}, {2, 4}};
const Pairs kWordB = {{1, 1}, {-2, 1}, {-3, 1}, {-2, 3}, {-2, -2}, {-4, 1}, {1, -2}, {-3, 2}, {-2, -4}};

std::string key(const Pairs& p) { return to_string(RGWordB1{p}); }

// Every type-B word of length n accepted by validation. The search only
// bounds |i| by the prefix maximum; everything else is left to validation.
std::set<std::string> brute_force_B_words(int n) {
  std::set<std::string> out;
  Pairs w(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int pos, int max_abs) {
    if (pos == n) {
      if (!validate_rgB(w)) out.insert(key(w));
      return;
    }
    for (int i = -(max_abs + 1); i <= max_abs + 1; ++i) {
      if (i == 0) continue;
      for (int j = -n; j <= n; ++j) {
        if (j == 0) continue;
        w[static_cast<std::size_t>(pos)] = RGPair{i, j};
        rec(pos + 1, std::max(max_abs, std::abs(i)));
      }
    }
  };
  rec(0, 0);
  return out;
}

std::set<std::string> brute_force_A_words(int n) {
  std::set<std::string> out;
  Pairs w(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int pos, int max_i) {
    if (pos == n) {
      if (!validate_rgA(w)) out.insert(key(w));
      return;
    }
    for (int i = 1; i <= max_i + 1; ++i)
      for (int j = 1; j <= n; ++j) {
        w[static_cast<std::size_t>(pos)] = RGPair{i, j};
        rec(pos + 1, std::max(max_i, i));
      }
  };
  rec(0, 0);
  return out;
}

// Statistics by direct definition, independent of first_kind_stats.
int pair_scan_inv_B(const Pairs& w) {
  int c = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b) {
      const int ia = std::abs(w[a].i), ja = std::abs(w[a].j);
      const int ib = std::abs(w[b].i), jb = std::abs(w[b].j);
      if (ib < ia || (ib == ia && jb < ja)) ++c;
    }
  return c;
}

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("type-A validation") {
  CHECK_FALSE(validate_rgA(kWordA));
  CHECK(*validate_rgA(Pairs{{2, 1}}) == Violation{"1", 1});
  CHECK(*validate_rgA(Pairs{{1, 1}, {3, 1}, {1, 1}}) == Violation{"2", 2});
  CHECK(*validate_rgA(Pairs{{1, 1}, {2, 2}}) == Violation{"3a", 2});
  CHECK(*validate_rgA(Pairs{{1, 1}, {1, 3}, {2, 1}}) == Violation{"3b", 2});
  CHECK(*validate_rgA(Pairs{{1, 1}, {1, 2}, {1, 2}}) == Violation{"unique", 3});
  CHECK(*validate_rgA(Pairs{{1, 1}, {1, 0}}) == Violation{"alphabet", 2});
}

TEST_CASE("type-B validation") {
  CHECK_FALSE(validate_rgB(kWordB));
  CHECK_FALSE(validate_rgB(Pairs{{-1, 1}, {-1, -2}}));
  CHECK(*validate_rgB(Pairs{{2, 1}}) == Violation{"1", 1});
  CHECK(*validate_rgB(Pairs{{1, -1}}) == Violation{"1", 1});
  CHECK(*validate_rgB(Pairs{{1, 1}, {-3, 1}, {1, 2}}) == Violation{"2", 2});
  CHECK(*validate_rgB(Pairs{{1, 1}, {-2, -1}}) == Violation{"3a", 2});
  CHECK(*validate_rgB(Pairs{{1, 1}, {-1, 2}}) == Violation{"3b", 2});
  CHECK(*validate_rgB(Pairs{{1, 1}, {1, 2}, {1, -2}}) == Violation{"unique", 3});
  CHECK(*validate_rgB(Pairs{{1, 1}, {0, 1}}) == Violation{"alphabet", 2});
  CHECK_THROWS_AS(make_rgB({{1, 1}, {1, 3}}), ValidationError);
}

TEST_CASE("Phi^A examples") {
  const PlainPermutation p({7, 5, 8, 9, 4, 6, 1, 3, 2});  // (1,7)(2,5,4,9)(3,8)(6)
  const RGWordA1 w = phiA(p);
  CHECK(w.pairs == kWordA);
  CHECK(w.cycle_count() == 4);
  CHECK(phiA_inverse(w) == p);
  CHECK(phiA(PlainPermutation::identity(4)).pairs == Pairs{{1, 1}, {2, 1}, {3, 1}, {4, 1}});
}

TEST_CASE("Phi^A is a bijection onto the valid words") {
  for (int n = 0; n <= 5; ++n) {
    std::set<std::string> images;
    for (const auto& p : plain_permutations(n)) {
      const auto w = phiA(p);
      CHECK(phiA_inverse(w) == p);
      CHECK(w.cycle_count() == static_cast<int>(plain_cycles(p).size()));
      images.insert(key(w.pairs));
    }
    CHECK(static_cast<std::int64_t>(images.size()) == factorial(n));
    if (n <= 4) CHECK(images == brute_force_A_words(n));
  }
}

TEST_CASE("inv_A") {
  CHECK(inv_A(RGWordA1{kWordA}) == 12);
  CHECK(inv_A(phiA(PlainPermutation::identity(6))) == 0);
  // (1,2)(3): no pair a < b has ω_b lexicographically below ω_a.
  CHECK(inv_A(make_rgA({{1, 1}, {1, 2}, {2, 1}})) == 0);
}

TEST_CASE("Phi^B examples") {
  const auto p = parse_signed_permutation("(1,-7)(2,-5,4,-9)*(3,8)*(6)*");
  CHECK(phiB(p).pairs == kWordB);
  CHECK(phiB_inverse(RGWordB1{kWordB}) == p);
  CHECK(phiB(SignedPermutation::identity(3)).pairs == Pairs{{1, 1}, {2, 1}, {3, 1}});
  // (1,-1) is a single non-split cycle.
  CHECK(phiB(SignedPermutation({-1})).pairs == Pairs{{-1, 1}});
  CHECK_THROWS_AS(phiB_inverse(RGWordB1{Pairs{{1, 1}, {3, 1}}}), ValidationError);
}

TEST_CASE("Phi^B is a bijection onto the valid words") {
  for (int n = 0; n <= 5; ++n) {
    std::set<std::string> images;
    for (const auto& p : signed_permutations(n)) {
      const auto w = phiB(p);
      CHECK(phiB_inverse(w) == p);
      CHECK(first_kind_stats(w).k == static_cast<int>(cycle_decompose(p).nonsplit_count()));
      images.insert(key(w.pairs));
    }
    CHECK(static_cast<std::int64_t>(images.size()) == factorial(n) << n);
    if (n <= 3) CHECK(images == brute_force_B_words(n));
  }
}

TEST_CASE("first-kind statistics") {
  const auto s = first_kind_stats(RGWordB1{kWordB});
  CHECK(s == FirstKindStats{12, 3, 5, 27, 32, 3});
  CHECK(first_kind_stats(phiB(SignedPermutation::identity(5))) == FirstKindStats{});
  CHECK(first_kind_stats(make_rgB({{-1, 1}, {-1, -2}})) == FirstKindStats{0, 1, 1, 1, 2, 1});
  for (const auto& p : signed_permutations(4)) {
    const auto w = phiB(p);
    const auto st = first_kind_stats(w);
    CHECK(st.inv_B == pair_scan_inv_B(w.pairs));
    CHECK(st.finv == 2 * st.inv_B + st.neg);
    CHECK(st.sfinv == st.finv + st.nl);
    CHECK((st.finv - st.neg) % 2 == 0);
  }
}

TEST_CASE("type-A q-Stirling numbers") {
  for (int n = 0; n <= 6; ++n) CHECK(stirlingA_q(n, n) == QPoly{1});
  CHECK(stirlingA_q(2, 1) == QPoly{1});
  CHECK(stirlingA_q(3, 1) == QPoly{1, 1});
  CHECK(stirlingA_q(3, 0).is_zero());
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) CHECK(eval_at_one(stirlingA_q(n, k)) == oracle::stirling1_A_q1(n, k));
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(stirlingA_q_enum(n, k) == stirlingA_q(n, k));
      CHECK(stirlingA_q_r(n, k, 0) == stirlingA_q(n, k));
      for (int r = 0; r <= n; ++r) CHECK(stirlingA_q_r_enum(n, k, r) == stirlingA_q_r(n, k, r));
    }
  CHECK_THROWS_AS(stirlingA_q(1, 2), DomainError);
}

TEST_CASE("type-B q-Stirling numbers of the first kind") {
  CHECK(stirlingB1_q(2, 1) == QPoly{3, 1});
  CHECK(stirlingB1_q(2, 0) == QPoly{2, 1});
  for (int n = 0; n <= 6; ++n) CHECK(stirlingB1_q(n, n) == QPoly{1});
  // Brute force for (2,1): the four one-nonsplit-cycle elements of B_2.
  std::vector<int> exps;
  for (const auto& p : signed_permutations(2))
    if (cycle_decompose(p).nonsplit_count() == 1) exps.push_back(first_kind_stats(phiB(p)).finv);
  CHECK(oracle::of(stirlingB1_q(2, 1)) == oracle::from_exponents(exps));
  for (int n = 0; n <= 9; ++n) {
    std::int64_t total = 0;
    for (int k = 0; k <= n; ++k) {
      const auto v = eval_at_one(stirlingB1_q(n, k));
      CHECK(v == oracle::stirling1_B_q1(n, k));
      total += v;
    }
    CHECK(total == factorial(n) << n);
  }
  CHECK_THROWS_AS(stirlingB1_q(2, 3), DomainError);
}

TEST_CASE("type-B r-variant and the shifted numbers") {
  for (int r = 0; r <= 5; ++r) CHECK(stirlingB1_q_r(r, r, r) == QPoly{1});
  CHECK(stirlingB1_q_r(2, 1, 1) == QPoly{2, 1});
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) CHECK(stirlingB1_q_r(n, k, 0) == stirlingB1_q(n, k));
  CHECK(sstirlingB1_q(2, 0) == QPoly{1, 1, 1});
  CHECK(sstirlingB1_q(2, 1) == QPoly{2, 1, 1});
  for (int n = 0; n <= 6; ++n) CHECK(sstirlingB1_q(n, n) == QPoly{1});
  for (int n = 0; n <= 8; ++n) {
    QPoly odd{1};
    for (int i = 1; i <= n; ++i) odd *= q_bracket(2 * i - 1);
    CHECK(sstirlingB1_q(n, 0) == odd);
  }
}

TEST_CASE("enumeration routes agree with the recursions") {
  for (int n = 0; n <= 5; ++n) {
    const auto rows = first_kind_enum_rows(n, 0);
    for (int k = 0; k <= n; ++k) {
      CHECK(rows.finv[static_cast<std::size_t>(k)] == stirlingB1_q(n, k));
      CHECK(rows.sfinv[static_cast<std::size_t>(k)] == sstirlingB1_q(n, k));
    }
    for (int r = 0; r <= n; ++r)
      for (int k = 0; k <= n; ++k) CHECK(stirlingB1_q_r_enum(n, k, r) == stirlingB1_q_r(n, k, r));
  }
  CHECK(stirlingB1_q_enum(2, 1) == QPoly{3, 1});
  CHECK(sstirlingB1_q_enum(2, 1) == QPoly{2, 1, 1});
  CHECK_THROWS_AS(first_kind_enum_rows(9, 0), SizeLimitError);
}

TEST_CASE("product formulas") {
  CHECK(product_first_kind(0) == TPoly::one());
  CHECK(product_first_kind(2) == TPoly({QPoly{2, 1}, QPoly{3, 1}, QPoly{1}}));
  CHECK(product_shifted(2) == TPoly({QPoly{1, 1, 1}, QPoly{2, 1, 1}, QPoly{1}}));
  for (int n = 0; n <= 7; ++n) {
    const TPoly a = product_first_kind(n);
    const TPoly b = product_shifted(n);
    for (int k = 0; k <= n; ++k) {
      CHECK(a[static_cast<std::size_t>(k)] == stirlingB1_q(n, k));
      CHECK(b[static_cast<std::size_t>(k)] == sstirlingB1_q(n, k));
    }
    for (int r = 0; r <= n; ++r) {
      const TPoly c = product_first_kind_qr(n, r);
      for (int k = 0; k <= n - r; ++k) CHECK(c[static_cast<std::size_t>(k)] == stirlingB1_q_r(n, r + k, r));
    }
  }
  CHECK_THROWS_AS(product_first_kind_qr(2, 3), DomainError);
}

TEST_CASE("split-only boundary and its product form") {
  CHECK(split_only_boundary(0) == QPoly{1});
  CHECK(split_only_boundary(2) == QPoly{2, 1});
  for (int n = 0; n <= 8; ++n) {
    oracle::Coeffs product{1};
    for (int i = 0; i < n; ++i) product = oracle::convolve(product, oracle::add({1}, oracle::bracket(2 * i)));
    CHECK(oracle::of(split_only_boundary(n)) == product);
    CHECK(stirlingB1_q_r(n, 0, 0) == split_only_boundary(n));
  }
}

TEST_CASE("q=1 rising factorial identities") {
  for (int n = 0; n <= 8; ++n) {
    // t(t+1)...(t+n-1) by repeated integer multiplication.
    std::vector<std::int64_t> rising{1};
    for (int i = 0; i < n; ++i) {
      std::vector<std::int64_t> next(rising.size() + 1, 0);
      for (std::size_t d = 0; d < rising.size(); ++d) {
        next[d + 1] += rising[d];
        next[d] += i * rising[d];
      }
      rising = next;
    }
    for (int k = 0; k <= n; ++k) CHECK(eval_at_one(stirlingA_q(n, k)) == rising[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("text form") {
  CHECK(to_string(parse_rgB("(1,1)(-2,1)(-3,1)")) == "(1,1)(-2,1)(-3,1)");
  CHECK(to_string(parse_rgA("(1,1)(1,2)")) == "(1,1)(1,2)");
  CHECK_THROWS_AS(parse_rgB("(1,1)(-2,1"), ValidationError);
  CHECK_THROWS_AS(parse_rgA("(1,1)(3,1)"), ValidationError);
}
