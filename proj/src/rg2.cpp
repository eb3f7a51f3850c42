#include "stirlingb/rg2.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "stirlingb/errors.hpp"
#include "stirlingb/limits.hpp"
#include "text.hpp"

namespace stirlingb {

namespace {

constexpr int kEnumMaxN = 10;

void require_nonnegative(const char* what, int n, int k, int r = 0) {
  if (n < 0 || k < 0 || r < 0)
    throw DomainError(std::string(what) + ": arguments must be nonnegative");
}

// Histogram of weight exponents per max letter.
using Histograms = std::vector<std::vector<std::int64_t>>;

class WordWalker {
public:
  WordWalker(int n, int r, Shard shard) : n_(n), r_(r), shard_(shard) {
    // The largest exponent is below 2n per letter.
    hist_.assign(static_cast<std::size_t>(n) + 1,
                 std::vector<std::int64_t>(static_cast<std::size_t>(2 * n * n + 1), 0));
  }

  void run() { visit(0, 0, 0); }

  std::vector<QPoly> result() const {
    std::vector<QPoly> out;
    for (const auto& h : hist_) out.emplace_back(h);
    return out;
  }

private:
  void visit(int pos, int max_abs, int exponent) {
    if (pos == shard_depth()) {
      if (!shard_.contains(subtree_++)) return;
    }
    if (pos == n_) {
      ++hist_[static_cast<std::size_t>(max_abs)][static_cast<std::size_t>(exponent)];
      return;
    }
    if (pos < r_) {
      visit(pos + 1, max_abs + 1, exponent);
      return;
    }
    visit(pos + 1, max_abs, exponent);
    for (int b = 1; b <= max_abs; ++b) {
      visit(pos + 1, max_abs, exponent + 2 * b);
      visit(pos + 1, max_abs, exponent + 2 * b - 1);
    }
    visit(pos + 1, max_abs + 1, exponent);
  }

  int shard_depth() const noexcept { return std::min(2, n_); }

  int n_;
  int r_;
  Shard shard_;
  std::uint64_t subtree_ = 0;
  Histograms hist_;
};

}  // namespace

int RGWord2::max_letter() const noexcept {
  int m = 0;
  for (int x : letters) m = std::max(m, x);
  return m;
}

std::optional<Violation> validate_rg2(std::span<const int> letters) {
  int max_abs = 0;
  for (std::size_t t = 0; t < letters.size(); ++t) {
    const int x = letters[t];
    const int position = static_cast<int>(t) + 1;
    if (t == 0) {
      if (x != 0 && x != 1) return Violation{"1", position};
    } else if (std::abs(x) > max_abs + 1) {
      return Violation{"2", position};
    } else if (x == -(max_abs + 1)) {
      return Violation{"2b", position};
    }
    max_abs = std::max(max_abs, std::abs(x));
  }
  return std::nullopt;
}

RGWord2 make_rg2(std::vector<int> letters) {
  if (auto v = validate_rg2(letters))
    throw ValidationError("invalid second-kind RG-word: " + v->to_string());
  return RGWord2{std::move(letters)};
}

RGWord2 partition_to_rg2(const SignedSetPartition& p) {
  std::vector<int> letters(static_cast<std::size_t>(p.n), 0);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const int label = static_cast<int>(b) + 1;
    for (int e : p.blocks[b])
      letters[static_cast<std::size_t>(std::abs(e) - 1)] = e > 0 ? label : -label;
  }
  return RGWord2{std::move(letters)};
}

SignedSetPartition rg2_to_partition(const RGWord2& w) {
  if (auto v = validate_rg2(w.letters))
    throw ValidationError("invalid second-kind RG-word: " + v->to_string());
  SignedSetPartition p;
  p.n = w.size();
  p.blocks.resize(static_cast<std::size_t>(w.max_letter()));
  for (int j = 1; j <= w.size(); ++j) {
    const int x = w.letters[static_cast<std::size_t>(j - 1)];
    if (x == 0)
      p.zero_support.push_back(j);
    else
      p.blocks[static_cast<std::size_t>(std::abs(x) - 1)].push_back(x > 0 ? j : -j);
  }
  return p;
}

int weight_exponent(const RGWord2& w) {
  if (auto v = validate_rg2(w.letters))
    throw ValidationError("invalid second-kind RG-word: " + v->to_string());
  int exponent = 0;
  int max_abs = 0;
  for (int x : w.letters) {
    const int a = std::abs(x);
    if (x != 0 && a <= max_abs) exponent += x < 0 ? 2 * a - 1 : 2 * a;
    max_abs = std::max(max_abs, a);
  }
  return exponent;
}

QPoly stirling2_q(int n, int k) {
  require_nonnegative("stirling2_q", n, k);
  if (k > n) throw DomainError("stirling2_q: k must not exceed n");
  // Row-by-row; row m holds k = 0..m.
  std::vector<QPoly> row{QPoly{1}};
  for (int m = 1; m <= n; ++m) {
    std::vector<QPoly> next(static_cast<std::size_t>(m) + 1);
    next.front() = QPoly{1};
    next.back() = QPoly{1};
    for (int j = 1; j < m; ++j)
      next[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + q_bracket(2 * j + 1) * row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

std::vector<QPoly> stirling2_q_r_row(int n, int r) {
  require_nonnegative("stirling2_q_r", n, 0, r);
  std::vector<QPoly> row(static_cast<std::size_t>(n) + 1);
  if (n < r) return row;
  std::vector<QPoly> cur(static_cast<std::size_t>(r) + 1);
  cur[static_cast<std::size_t>(r)] = QPoly{1};
  for (int m = r + 1; m <= n; ++m) {
    std::vector<QPoly> next(static_cast<std::size_t>(m) + 1);
    for (int k = r; k <= m; ++k) {
      QPoly v;
      if (k - 1 >= r) v += cur[static_cast<std::size_t>(k - 1)];
      if (k <= m - 1) v += q_bracket(2 * k + 1) * cur[static_cast<std::size_t>(k)];
      next[static_cast<std::size_t>(k)] = std::move(v);
    }
    cur = std::move(next);
  }
  return cur;
}

QPoly stirling2_q_r(int n, int k, int r) {
  require_nonnegative("stirling2_q_r", n, k, r);
  if (k > n || k < r || n < r) return {};
  return stirling2_q_r_row(n, r)[static_cast<std::size_t>(k)];
}

std::vector<QPoly> stirling2_q_r_enum_row(int n, int r, Shard shard) {
  require_nonnegative("stirling2_q_r_enum", n, 0, r);
  enforce_size_guard("second-kind RG-word enumeration", n, kEnumMaxN, signed_partition_count(n));
  if (r > n) return std::vector<QPoly>(static_cast<std::size_t>(n) + 1);
  WordWalker walker(n, r, shard);
  walker.run();
  return walker.result();
}

QPoly stirling2_q_enum(int n, int k) {
  require_nonnegative("stirling2_q_enum", n, k);
  if (k > n) throw DomainError("stirling2_q_enum: k must not exceed n");
  return stirling2_q_r_enum_row(n, 0)[static_cast<std::size_t>(k)];
}

QPoly stirling2_q_r_enum(int n, int k, int r) {
  require_nonnegative("stirling2_q_r_enum", n, k, r);
  if (k > n) return {};
  return stirling2_q_r_enum_row(n, r)[static_cast<std::size_t>(k)];
}

std::string to_string(const RGWord2& w) { return detail::join_ints(w.letters); }

RGWord2 parse_rg2(std::string_view text) {
  detail::TextCursor cur(text, "second-kind RG-word");
  std::vector<int> letters;
  if (!cur.at_end()) {
    letters.push_back(cur.integer());
    while (cur.consume(',')) letters.push_back(cur.integer());
  }
  if (!cur.at_end()) cur.fail("trailing characters");
  return make_rg2(std::move(letters));
}

}  // namespace stirlingb
