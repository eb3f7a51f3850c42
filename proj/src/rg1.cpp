#include "stirlingb/rg1.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <utility>

#include "stirlingb/errors.hpp"
#include "stirlingb/limits.hpp"
#include "text.hpp"

namespace stirlingb {

namespace {

constexpr int kFirstKindEnumMaxN = 8;

void require_nonnegative(const char* what, int n, int k, int r = 0) {
  if (n < 0 || k < 0 || r < 0)
    throw DomainError(std::string(what) + ": arguments must be nonnegative");
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Histogram indexed by [k][exponent].
using Histograms = std::vector<std::vector<std::int64_t>>;

Histograms make_histograms(int n, int max_exponent) {
  return Histograms(idx(n) + 1, std::vector<std::int64_t>(idx(max_exponent) + 1, 0));
}

std::vector<QPoly> to_row(const Histograms& h) {
  std::vector<QPoly> out;
  out.reserve(h.size());
  for (const auto& e : h) out.emplace_back(e);
  return out;
}

template <class Word>
Word checked_word(std::vector<RGPair> pairs,
                  std::optional<Violation> (*validate)(std::span<const RGPair>),
                  const char* what) {
  if (auto v = validate(pairs))
    throw ValidationError(std::string("invalid ") + what + ": " + v->to_string());
  return Word{std::move(pairs)};
}

std::string render(std::span<const RGPair> pairs) {
  std::string out;
  for (const auto& p : pairs)
    out += "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
  return out;
}

std::vector<RGPair> parse_pairs(std::string_view text, const char* what) {
  detail::TextCursor cur(text, what);
  std::vector<RGPair> pairs;
  while (!cur.at_end()) {
    cur.expect('(');
    RGPair p;
    p.i = cur.integer();
    cur.expect(',');
    p.j = cur.integer();
    cur.expect(')');
    pairs.push_back(p);
  }
  return pairs;
}

QPoly row_entry(const std::vector<QPoly>& row, int k) {
  if (k < 0 || idx(k) >= row.size()) return {};
  return row[idx(k)];
}

}  // namespace

int RGWordA1::cycle_count() const noexcept {
  int m = 0;
  for (const auto& p : pairs) m = std::max(m, p.i);
  return m;
}

// Validation ------------------------------------------------------------------

std::optional<Violation> validate_rgA(std::span<const RGPair> pairs) {
  const int n = static_cast<int>(pairs.size());
  std::set<std::pair<int, int>> present;
  for (const auto& p : pairs) present.emplace(p.i, p.j);
  std::set<std::pair<int, int>> seen;
  int max_i = 0;
  for (int t = 0; t < n; ++t) {
    const RGPair& p = pairs[idx(t)];
    const int position = t + 1;
    if (t == 0) {
      if (p.i != 1 || p.j != 1) return Violation{"1", position};
    } else if (p.i < 1 || p.i > n || p.j < 1 || p.j > n) {
      return Violation{"alphabet", position};
    } else if (p.i > max_i + 1) {
      return Violation{"2", position};
    } else if (p.i == max_i + 1) {
      if (p.j != 1) return Violation{"3a", position};
    } else if (!present.count({p.i, p.j - 1})) {
      return Violation{"3b", position};
    }
    if (!seen.emplace(p.i, p.j).second) return Violation{"unique", position};
    max_i = std::max(max_i, p.i);
  }
  return std::nullopt;
}

std::optional<Violation> validate_rgB(std::span<const RGPair> pairs) {
  const int n = static_cast<int>(pairs.size());
  std::set<std::pair<int, int>> present;
  for (const auto& p : pairs) present.emplace(p.i, p.j);
  std::set<std::pair<int, int>> seen;
  int max_abs = 0;
  for (int t = 0; t < n; ++t) {
    const RGPair& p = pairs[idx(t)];
    const int position = t + 1;
    const int ai = std::abs(p.i);
    const int aj = std::abs(p.j);
    if (t == 0) {
      if (ai != 1 || p.j != 1) return Violation{"1", position};
    } else if (ai < 1 || ai > n || aj < 1 || aj > n) {
      return Violation{"alphabet", position};
    } else if (ai > max_abs + 1) {
      return Violation{"2", position};
    } else if (ai == max_abs + 1) {
      if (p.j != 1) return Violation{"3a", position};
    } else if (!present.count({p.i, aj - 1}) && !present.count({p.i, -(aj - 1)})) {
      return Violation{"3b", position};
    }
    if (!seen.emplace(p.i, aj).second) return Violation{"unique", position};
    max_abs = std::max(max_abs, ai);
  }
  return std::nullopt;
}

RGWordA1 make_rgA(std::vector<RGPair> pairs) {
  return checked_word<RGWordA1>(std::move(pairs), validate_rgA, "type-A first-kind RG-word");
}

RGWordB1 make_rgB(std::vector<RGPair> pairs) {
  return checked_word<RGWordB1>(std::move(pairs), validate_rgB, "type-B first-kind RG-word");
}

// Bijections ------------------------------------------------------------------

RGWordA1 phiA(const PlainPermutation& p) {
  RGWordA1 w;
  w.pairs.resize(idx(p.size()));
  const auto cycles = plain_cycles(p);
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (std::size_t loc = 0; loc < cycles[c].size(); ++loc)
      w.pairs[idx(cycles[c][loc] - 1)] = RGPair{static_cast<int>(c) + 1, static_cast<int>(loc) + 1};
  return w;
}

PlainPermutation phiA_inverse(const RGWordA1& w) {
  if (auto v = validate_rgA(w.pairs))
    throw ValidationError("invalid type-A first-kind RG-word: " + v->to_string());
  std::vector<std::vector<int>> cycles(idx(w.cycle_count()));
  for (int t = 1; t <= w.size(); ++t) {
    const RGPair& p = w.pairs[idx(t - 1)];
    auto& c = cycles[idx(p.i - 1)];
    if (c.size() < idx(p.j)) c.resize(idx(p.j), 0);
    c[idx(p.j - 1)] = t;
  }
  std::vector<int> window(idx(w.size()), 0);
  for (const auto& c : cycles)
    for (std::size_t l = 0; l < c.size(); ++l) window[idx(c[l] - 1)] = c[(l + 1) % c.size()];
  return PlainPermutation(std::move(window));
}

RGWordB1 phiB(const SignedPermutation& p) {
  RGWordB1 w;
  w.pairs.resize(idx(p.size()));
  const auto d = cycle_decompose(p);
  for (std::size_t c = 0; c < d.cycles.size(); ++c) {
    const auto& cyc = d.cycles[c];
    const int label = static_cast<int>(c) + 1;
    const int i = cyc.kind == CycleKind::NonSplit ? -label : label;
    for (std::size_t loc = 0; loc < cyc.elements.size(); ++loc) {
      const int e = cyc.elements[loc];
      const int j = static_cast<int>(loc) + 1;
      w.pairs[idx(std::abs(e) - 1)] = RGPair{i, e > 0 ? j : -j};
    }
  }
  return w;
}

SignedPermutation phiB_inverse(const RGWordB1& w) {
  if (auto v = validate_rgB(w.pairs))
    throw ValidationError("invalid type-B first-kind RG-word: " + v->to_string());
  CycleDecomposition d;
  for (int t = 1; t <= w.size(); ++t) {
    const RGPair& p = w.pairs[idx(t - 1)];
    const std::size_t c = idx(std::abs(p.i) - 1);
    if (d.cycles.size() <= c) d.cycles.resize(c + 1);
    auto& cyc = d.cycles[c];
    cyc.kind = p.i < 0 ? CycleKind::NonSplit : CycleKind::Split;
    const std::size_t loc = idx(std::abs(p.j) - 1);
    if (cyc.elements.size() <= loc) cyc.elements.resize(loc + 1, 0);
    cyc.elements[loc] = p.j > 0 ? t : -t;
  }
  return cycles_to_perm(d);
}

// Statistics ------------------------------------------------------------------

int inv_A(const RGWordA1& w) {
  int count = 0;
  for (std::size_t a = 0; a < w.pairs.size(); ++a)
    for (std::size_t b = a + 1; b < w.pairs.size(); ++b) {
      const auto& x = w.pairs[a];
      const auto& y = w.pairs[b];
      if (std::pair(y.i, y.j) < std::pair(x.i, x.j)) ++count;
    }
  return count;
}

FirstKindStats first_kind_stats(const RGWordB1& w) {
  FirstKindStats s;
  const auto& ps = w.pairs;
  for (std::size_t a = 0; a < ps.size(); ++a) {
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      if (std::pair(std::abs(ps[b].i), std::abs(ps[b].j)) <
          std::pair(std::abs(ps[a].i), std::abs(ps[a].j)))
        ++s.inv_B;
    }
    if (ps[a].j < 0) ++s.neg;
    if (ps[a].j != 1) ++s.nl;
    if (ps[a].j == 1 && ps[a].i < 0) ++s.k;
  }
  s.finv = 2 * s.inv_B + s.neg;
  s.sfinv = s.finv + s.nl;
  return s;
}

// Type A ----------------------------------------------------------------------

std::vector<QPoly> stirlingA_q_r_row(int n, int r) {
  require_nonnegative("stirlingA_q_r", n, 0, r);
  if (n < r) return std::vector<QPoly>(idx(n) + 1);
  std::vector<QPoly> cur(idx(r) + 1);
  cur[idx(r)] = QPoly{1};
  for (int m = r + 1; m <= n; ++m) {
    std::vector<QPoly> next(idx(m) + 1);
    const QPoly factor = q_bracket(m - 1);
    for (int k = r; k <= m; ++k) {
      QPoly v;
      if (k - 1 >= r) v += cur[idx(k - 1)];
      if (k <= m - 1) v += factor * cur[idx(k)];
      next[idx(k)] = std::move(v);
    }
    cur = std::move(next);
  }
  return cur;
}

QPoly stirlingA_q(int n, int k) {
  require_nonnegative("stirlingA_q", n, k);
  if (k > n) throw DomainError("stirlingA_q: k must not exceed n");
  return stirlingA_q_r_row(n, 0)[idx(k)];
}

QPoly stirlingA_q_r(int n, int k, int r) {
  require_nonnegative("stirlingA_q_r", n, k, r);
  if (k > n || k < r || n < r) return {};
  return stirlingA_q_r_row(n, r)[idx(k)];
}

std::vector<QPoly> stirlingA_q_r_enum_row(int n, int r, Shard shard) {
  require_nonnegative("stirlingA_q_r_enum", n, 0, r);
  PlainPermutationStream stream(n, shard);
  Histograms hist = make_histograms(n, n * (n - 1) / 2 + 1);
  if (r > n) return to_row(hist);
  while (stream.advance()) {
    const RGWordA1 w = phiA(stream.current());
    bool prefix = true;
    for (int t = 0; t < r && prefix; ++t) prefix = w.pairs[idx(t)] == RGPair{t + 1, 1};
    if (!prefix) continue;
    ++hist[idx(w.cycle_count())][idx(inv_A(w))];
  }
  return to_row(hist);
}

QPoly stirlingA_q_enum(int n, int k) {
  require_nonnegative("stirlingA_q_enum", n, k);
  if (k > n) throw DomainError("stirlingA_q_enum: k must not exceed n");
  return stirlingA_q_r_enum_row(n, 0)[idx(k)];
}

QPoly stirlingA_q_r_enum(int n, int k, int r) {
  require_nonnegative("stirlingA_q_r_enum", n, k, r);
  return row_entry(stirlingA_q_r_enum_row(n, r), k);
}

// Type B ----------------------------------------------------------------------

QPoly split_only_boundary(int n) {
  if (n < 0) throw DomainError("split_only_boundary: n must be nonnegative");
  if (n == 0) return QPoly{1};
  const auto row = stirlingA_q_r_row(n, 0);
  const QPoly one_plus_q{1, 1};
  QPoly sum;
  for (int l = 1; l <= n; ++l)
    sum += substitute_q_power(row[idx(l)], 2) * pow(one_plus_q, static_cast<unsigned>(n - l));
  return sum;
}

std::vector<QPoly> stirlingB1_q_r_row(int n, int r) {
  require_nonnegative("stirlingB1_q_r", n, 0, r);
  if (n < r) return std::vector<QPoly>(idx(n) + 1);
  std::vector<QPoly> cur(idx(r) + 1);
  cur[idx(r)] = QPoly{1};
  for (int m = r + 1; m <= n; ++m) {
    std::vector<QPoly> next(idx(m) + 1);
    const QPoly factor = QPoly{1} + q_bracket(2 * m - 2);
    for (int k = r; k <= m; ++k) {
      QPoly v;
      if (k - 1 >= r) v += cur[idx(k - 1)];
      if (k <= m - 1) v += factor * cur[idx(k)];
      next[idx(k)] = std::move(v);
    }
    cur = std::move(next);
  }
  return cur;
}

QPoly stirlingB1_q(int n, int k) {
  require_nonnegative("stirlingB1_q", n, k);
  if (k > n) throw DomainError("stirlingB1_q: k must not exceed n");
  // Column 0 comes from the split-only boundary, the rest from the recursion.
  std::vector<QPoly> row{QPoly{1}};
  for (int m = 1; m <= n; ++m) {
    std::vector<QPoly> next(idx(m) + 1);
    next[0] = split_only_boundary(m);
    const QPoly factor = QPoly{1} + q_bracket(2 * m - 2);
    for (int j = 1; j <= m; ++j) {
      QPoly v = row[idx(j - 1)];
      if (j <= m - 1) v += factor * row[idx(j)];
      next[idx(j)] = std::move(v);
    }
    row = std::move(next);
  }
  return row[idx(k)];
}

QPoly stirlingB1_q_r(int n, int k, int r) {
  require_nonnegative("stirlingB1_q_r", n, k, r);
  if (k > n || k < r || n < r) return {};
  return stirlingB1_q_r_row(n, r)[idx(k)];
}

std::vector<QPoly> sstirlingB1_q_row(int n) {
  require_nonnegative("sstirlingB1_q", n, 0);
  std::vector<QPoly> row{QPoly{1}};
  QPoly boundary{1};
  for (int m = 1; m <= n; ++m) {
    const QPoly factor = q_bracket(2 * m - 1);
    boundary *= factor;
    std::vector<QPoly> next(idx(m) + 1);
    next[0] = boundary;
    for (int j = 1; j <= m; ++j) {
      QPoly v = row[idx(j - 1)];
      if (j <= m - 1) v += factor * row[idx(j)];
      next[idx(j)] = std::move(v);
    }
    row = std::move(next);
  }
  return row;
}

QPoly sstirlingB1_q(int n, int k) {
  require_nonnegative("sstirlingB1_q", n, k);
  if (k > n) throw DomainError("sstirlingB1_q: k must not exceed n");
  return sstirlingB1_q_row(n)[idx(k)];
}

FirstKindEnumRows first_kind_enum_rows(int n, int r, Shard shard) {
  require_nonnegative("first-kind enumeration", n, 0, r);
  enforce_size_guard("first-kind RG-word enumeration", n, kFirstKindEnumMaxN,
                     signed_permutation_count(n));
  const int max_finv = n * n;
  Histograms finv = make_histograms(n, max_finv);
  Histograms sfinv = make_histograms(n, max_finv + n);
  if (r <= n) {
    SignedPermutationStream stream(n, shard);
    while (stream.advance()) {
      const RGWordB1 w = phiB(stream.current());
      bool prefix = true;
      for (int t = 0; t < r && prefix; ++t) prefix = w.pairs[idx(t)] == RGPair{-(t + 1), 1};
      if (!prefix) continue;
      const FirstKindStats s = first_kind_stats(w);
      ++finv[idx(s.k)][idx(s.finv)];
      ++sfinv[idx(s.k)][idx(s.sfinv)];
    }
  }
  return FirstKindEnumRows{to_row(finv), to_row(sfinv)};
}

QPoly stirlingB1_q_enum(int n, int k) {
  require_nonnegative("stirlingB1_q_enum", n, k);
  if (k > n) throw DomainError("stirlingB1_q_enum: k must not exceed n");
  return first_kind_enum_rows(n, 0).finv[idx(k)];
}

QPoly stirlingB1_q_r_enum(int n, int k, int r) {
  require_nonnegative("stirlingB1_q_r_enum", n, k, r);
  return row_entry(first_kind_enum_rows(n, r).finv, k);
}

QPoly sstirlingB1_q_enum(int n, int k) {
  require_nonnegative("sstirlingB1_q_enum", n, k);
  if (k > n) throw DomainError("sstirlingB1_q_enum: k must not exceed n");
  return first_kind_enum_rows(n, 0).sfinv[idx(k)];
}

// Products --------------------------------------------------------------------

TPoly product_first_kind(int n) { return product_first_kind_qr(n, 0); }

TPoly product_first_kind_qr(int n, int r) {
  if (n < 0 || r < 0 || r > n) throw DomainError("product_first_kind_qr: need 0 <= r <= n");
  std::vector<QPoly> constants;
  for (int i = r; i < n; ++i) constants.push_back(QPoly{1} + q_bracket(2 * i));
  return expand_linear_factors(constants);
}

TPoly product_shifted(int n) {
  if (n < 0) throw DomainError("product_shifted: n must be nonnegative");
  std::vector<QPoly> constants;
  for (int i = 1; i <= n; ++i) constants.push_back(q_bracket(2 * i - 1));
  return expand_linear_factors(constants);
}

// Text ------------------------------------------------------------------------

std::string to_string(const RGWordA1& w) { return render(w.pairs); }
std::string to_string(const RGWordB1& w) { return render(w.pairs); }

RGWordA1 parse_rgA(std::string_view text) {
  return make_rgA(parse_pairs(text, "type-A first-kind RG-word"));
}

RGWordB1 parse_rgB(std::string_view text) {
  return make_rgB(parse_pairs(text, "type-B first-kind RG-word"));
}

}  // namespace stirlingb
