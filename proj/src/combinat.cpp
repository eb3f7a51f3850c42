#include "stirlingb/combinat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "stirlingb/errors.hpp"
#include "stirlingb/limits.hpp"
#include "text.hpp"

namespace stirlingb {

namespace {

constexpr int kSignedPermutationMaxN = 12;
constexpr int kPlainPermutationMaxN = 10;
constexpr int kPartitionMaxN = 10;

void check_abs_bijection(std::span<const int> window, bool allow_negative, const char* what) {
  const auto n = window.size();
  std::vector<char> seen(n + 1, 0);
  for (int v : window) {
    if (v == 0 || (!allow_negative && v < 0))
      throw ValidationError(std::string(what) + ": invalid entry " + std::to_string(v));
    const auto a = static_cast<std::size_t>(std::abs(v));
    if (a > n || seen[a])
      throw ValidationError(std::string(what) + ": entries do not form a bijection of {1.." +
                            std::to_string(n) + "}");
    seen[a] = 1;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

PlainPermutation::PlainPermutation(std::vector<int> window) : window_(std::move(window)) {
  check_abs_bijection(window_, false, "plain permutation");
}

PlainPermutation PlainPermutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return PlainPermutation(std::move(w));
}

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  check_abs_bijection(window_, true, "signed permutation");
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

int CycleDecomposition::size() const noexcept {
  int total = 0;
  for (const auto& c : cycles) total += static_cast<int>(c.elements.size());
  return total;
}

std::size_t CycleDecomposition::nonsplit_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      cycles.begin(), cycles.end(), [](const SignedCycle& c) { return c.kind == CycleKind::NonSplit; }));
}

CycleDecomposition cycle_decompose(const SignedPermutation& p) {
  const int n = p.size();
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  CycleDecomposition d;
  for (int m = 1; m <= n; ++m) {
    if (visited[static_cast<std::size_t>(m)]) continue;
    SignedCycle cycle;
    cycle.elements.push_back(m);
    visited[static_cast<std::size_t>(m)] = 1;
    int y = p(m);
    while (y != m && y != -m) {
      cycle.elements.push_back(y);
      visited[static_cast<std::size_t>(std::abs(y))] = 1;
      y = p(y);
    }
    cycle.kind = (y == -m) ? CycleKind::NonSplit : CycleKind::Split;
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

SignedPermutation cycles_to_perm(const CycleDecomposition& d) {
  const int n = d.size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> window(static_cast<std::size_t>(n), 0);
  int previous_min = 0;
  for (const auto& cycle : d.cycles) {
    const auto& e = cycle.elements;
    if (e.empty()) throw ValidationError("cycle decomposition: empty cycle");
    if (e.front() <= 0)
      throw ValidationError("cycle decomposition: cycle must start with a positive element");
    for (int x : e) {
      const int a = std::abs(x);
      if (x == 0 || a > n || seen[static_cast<std::size_t>(a)])
        throw ValidationError("cycle decomposition: repeated or out-of-range value " +
                              std::to_string(x));
      seen[static_cast<std::size_t>(a)] = 1;
      if (a < e.front())
        throw ValidationError("cycle decomposition: cycle must start with its minimal absolute value");
    }
    if (e.front() <= previous_min)
      throw ValidationError("cycle decomposition: cycles not ordered by minimal absolute value");
    previous_min = e.front();

    const auto len = e.size();
    auto assign = [&](int from, int to) {
      if (from > 0)
        window[static_cast<std::size_t>(from - 1)] = to;
      else
        window[static_cast<std::size_t>(-from - 1)] = -to;
    };
    for (std::size_t i = 0; i + 1 < len; ++i) assign(e[i], e[i + 1]);
    assign(e[len - 1], cycle.kind == CycleKind::Split ? e[0] : -e[0]);
  }
  return SignedPermutation(std::move(window));
}

std::vector<std::vector<int>> plain_cycles(const PlainPermutation& p) {
  const int n = p.size();
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> out;
  for (int m = 1; m <= n; ++m) {
    if (visited[static_cast<std::size_t>(m)]) continue;
    std::vector<int> cycle;
    for (int x = m; !visited[static_cast<std::size_t>(x)]; x = p(x)) {
      visited[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

SignedSetPartition SignedSetPartition::make(int n, std::vector<int> zero_support,
                                            std::vector<std::vector<int>> blocks) {
  if (n < 0) throw ValidationError("signed set partition: negative n");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  auto mark = [&](int x) {
    const int a = std::abs(x);
    if (x == 0 || a > n || seen[static_cast<std::size_t>(a)])
      throw ValidationError("signed set partition: repeated or out-of-range value " +
                            std::to_string(x));
    seen[static_cast<std::size_t>(a)] = 1;
  };
  for (int& x : zero_support) {
    x = std::abs(x);
    mark(x);
  }
  for (auto& block : blocks) {
    if (block.empty()) throw ValidationError("signed set partition: empty block");
    for (int x : block) mark(x);
    std::sort(block.begin(), block.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
    if (block.front() < 0)
      for (int& x : block) x = -x;
  }
  for (int a = 1; a <= n; ++a)
    if (!seen[static_cast<std::size_t>(a)])
      throw ValidationError("signed set partition: value " + std::to_string(a) + " not covered");
  std::sort(zero_support.begin(), zero_support.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return SignedSetPartition{n, std::move(zero_support), std::move(blocks)};
}

// Streams -------------------------------------------------------------------

double signed_partition_count(int n) {
  // D(n) = Σ_k S^B(n,k) via the q = 1 recursion.
  std::vector<double> row{1.0};
  for (int m = 1; m <= n; ++m) {
    std::vector<double> next(static_cast<std::size_t>(m) + 1, 0.0);
    for (int k = 0; k <= m; ++k) {
      double v = 0;
      if (k >= 1) v += row[static_cast<std::size_t>(k - 1)];
      if (k < m) v += (2.0 * k + 1) * row[static_cast<std::size_t>(k)];
      next[static_cast<std::size_t>(k)] = v;
    }
    row = std::move(next);
  }
  return std::accumulate(row.begin(), row.end(), 0.0);
}

double signed_permutation_count(int n) {
  double c = 1;
  for (int i = 1; i <= n; ++i) c *= 2.0 * i;
  return c;
}

double plain_permutation_count(int n) {
  double c = 1;
  for (int i = 1; i <= n; ++i) c *= i;
  return c;
}

SignedPermutationStream::SignedPermutationStream(int n, Shard shard)
    : n_(n), shard_(shard) {
  enforce_size_guard("signed permutations", n, kSignedPermutationMaxN, signed_permutation_count(n));
  rank_.assign(static_cast<std::size_t>(n), 0);
  used_.assign(static_cast<std::size_t>(n) + 1, 0);
  current_.window_.assign(static_cast<std::size_t>(n), 0);
}

bool SignedPermutationStream::step() {
  const int width = 2 * n_;
  // Rank r in [0, 2n) stands for -n..-1 then 1..n.
  auto value = [this](int r) { return r < n_ ? r - n_ : r - n_ + 1; };
  auto fill_from = [&](int pos) {
    for (int p = pos; p < n_; ++p) {
      for (int r = 0; r < width; ++r) {
        const int a = std::abs(value(r));
        if (!used_[static_cast<std::size_t>(a)]) {
          used_[static_cast<std::size_t>(a)] = 1;
          rank_[static_cast<std::size_t>(p)] = r;
          break;
        }
      }
    }
  };
  if (!started_) {
    started_ = true;
    fill_from(0);
    return true;
  }
  for (int pos = n_ - 1; pos >= 0; --pos) {
    auto& r = rank_[static_cast<std::size_t>(pos)];
    used_[static_cast<std::size_t>(std::abs(value(r)))] = 0;
    for (int next = r + 1; next < width; ++next) {
      const int a = std::abs(value(next));
      if (!used_[static_cast<std::size_t>(a)]) {
        used_[static_cast<std::size_t>(a)] = 1;
        r = next;
        fill_from(pos + 1);
        return true;
      }
    }
  }
  return false;
}

bool SignedPermutationStream::advance() {
  while (!done_) {
    if (!step()) {
      done_ = true;
      break;
    }
    if (shard_.contains(position_++)) {
      for (int p = 0; p < n_; ++p) {
        const int r = rank_[static_cast<std::size_t>(p)];
        current_.window_[static_cast<std::size_t>(p)] = r < n_ ? r - n_ : r - n_ + 1;
      }
      return true;
    }
  }
  return false;
}

PlainPermutationStream::PlainPermutationStream(int n, Shard shard) : n_(n), shard_(shard) {
  enforce_size_guard("plain permutations", n, kPlainPermutationMaxN, plain_permutation_count(n));
  window_.resize(static_cast<std::size_t>(n));
  std::iota(window_.begin(), window_.end(), 1);
}

bool PlainPermutationStream::step() {
  if (!started_) {
    started_ = true;
    return true;
  }
  return std::next_permutation(window_.begin(), window_.end());
}

bool PlainPermutationStream::advance() {
  while (!done_) {
    if (!step()) {
      done_ = true;
      break;
    }
    if (shard_.contains(position_++)) {
      current_.window_ = window_;
      return true;
    }
  }
  return false;
}

SignedPartitionStream::SignedPartitionStream(int n, Shard shard) : n_(n), shard_(shard) {
  enforce_size_guard("signed set partitions", n, kPartitionMaxN, signed_partition_count(n));
  choice_.assign(static_cast<std::size_t>(n), 0);
  prefix_max_.assign(static_cast<std::size_t>(n), 0);
  labels_.assign(static_cast<std::size_t>(n), 0);
}

bool SignedPartitionStream::step() {
  if (!started_) {
    started_ = true;
    return true;
  }
  for (int pos = n_ - 1; pos >= 0; --pos) {
    const auto p = static_cast<std::size_t>(pos);
    // Options: zero block, +b / -b for each existing block b, new block.
    if (choice_[p] + 1 < 2 * prefix_max_[p] + 2) {
      ++choice_[p];
      const int blocks_after = prefix_max_[p] + (choice_[p] == 2 * prefix_max_[p] + 1 ? 1 : 0);
      for (auto q = p + 1; q < choice_.size(); ++q) {
        choice_[q] = 0;
        prefix_max_[q] = blocks_after;
      }
      return true;
    }
  }
  return false;
}

void SignedPartitionStream::rebuild() {
  current_.n = n_;
  current_.zero_support.clear();
  current_.blocks.clear();
  for (int j = 1; j <= n_; ++j) {
    const auto p = static_cast<std::size_t>(j - 1);
    const int c = choice_[p];
    const int m = prefix_max_[p];
    int label;
    if (c == 0)
      label = 0;
    else if (c == 2 * m + 1)
      label = m + 1;
    else
      label = (c % 2 == 1) ? (c + 1) / 2 : -(c / 2);
    labels_[p] = label;
    if (label == 0) {
      current_.zero_support.push_back(j);
      continue;
    }
    const auto b = static_cast<std::size_t>(std::abs(label));
    if (current_.blocks.size() < b) current_.blocks.resize(b);
    current_.blocks[b - 1].push_back(label > 0 ? j : -j);
  }
}

bool SignedPartitionStream::advance() {
  while (!done_) {
    if (!step()) {
      done_ = true;
      break;
    }
    if (shard_.contains(position_++)) {
      rebuild();
      return true;
    }
  }
  return false;
}

std::vector<SignedPermutation> signed_permutations(int n) {
  std::vector<SignedPermutation> out;
  SignedPermutationStream s(n);
  while (s.advance()) out.push_back(s.current());
  return out;
}

std::vector<PlainPermutation> plain_permutations(int n) {
  std::vector<PlainPermutation> out;
  PlainPermutationStream s(n);
  while (s.advance()) out.push_back(s.current());
  return out;
}

std::vector<SignedSetPartition> signed_partitions(int n) {
  std::vector<SignedSetPartition> out;
  SignedPartitionStream s(n);
  while (s.advance()) out.push_back(s.current());
  return out;
}

// Text forms ----------------------------------------------------------------

std::string to_string(const SignedPermutation& p) {
  return "[" + detail::join_ints({p.window().begin(), p.window().end()}) + "]";
}

std::string to_string(const PlainPermutation& p) {
  return "[" + detail::join_ints({p.window().begin(), p.window().end()}) + "]";
}

std::string to_string(const CycleDecomposition& d) {
  std::string out;
  for (const auto& c : d.cycles) {
    out += "(" + detail::join_ints(c.elements) + ")";
    if (c.kind == CycleKind::NonSplit) out += '*';
  }
  return out;
}

std::string to_string(const SignedSetPartition& p) {
  std::vector<std::string> parts;
  if (!p.zero_support.empty()) {
    std::vector<int> zero;
    for (int a : p.zero_support) {
      zero.push_back(a);
      zero.push_back(-a);
    }
    parts.push_back("{" + detail::join_ints(zero) + "}");
  }
  for (const auto& b : p.blocks) parts.push_back("{" + detail::join_ints(b) + "}");
  if (parts.empty()) return "{}";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "|" + parts[i];
  return out;
}

SignedPermutation parse_signed_window(std::string_view text) {
  detail::TextCursor cur(text, "signed permutation window");
  cur.expect('[');
  auto values = cur.integer_list(']');
  cur.expect(']');
  if (!cur.at_end()) cur.fail("trailing characters");
  return SignedPermutation(std::move(values));
}

PlainPermutation parse_plain_window(std::string_view text) {
  detail::TextCursor cur(text, "permutation window");
  cur.expect('[');
  auto values = cur.integer_list(']');
  cur.expect(']');
  if (!cur.at_end()) cur.fail("trailing characters");
  return PlainPermutation(std::move(values));
}

CycleDecomposition parse_cycles(std::string_view text) {
  detail::TextCursor cur(text, "cycle decomposition");
  CycleDecomposition d;
  while (!cur.at_end()) {
    cur.expect('(');
    SignedCycle c;
    c.elements = cur.integer_list(')');
    cur.expect(')');
    c.kind = cur.consume('*') ? CycleKind::NonSplit : CycleKind::Split;
    d.cycles.push_back(std::move(c));
  }
  return d;
}

SignedPermutation parse_signed_permutation(std::string_view text) {
  detail::TextCursor probe(text, "signed permutation");
  if (probe.peek('[')) return parse_signed_window(text);
  if (probe.peek('(')) return cycles_to_perm(parse_cycles(text));
  probe.fail("expected a window '[...]' or cycles '(...)'");
}

}  // namespace stirlingb
