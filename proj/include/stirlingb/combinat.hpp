#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stirlingb {

/// Positional shard of an enumeration: object number i (0-based, in stream
/// order) belongs to shard i % count.
struct Shard {
  std::size_t index = 0;
  std::size_t count = 1;

  bool contains(std::uint64_t position) const noexcept { return position % count == index; }
};

/// Permutation of {1..n} in window notation.
class PlainPermutation {
public:
  PlainPermutation() = default;
  /// Throws ValidationError unless the window is a bijection of {1..n}.
  explicit PlainPermutation(std::vector<int> window);

  static PlainPermutation identity(int n);

  int size() const noexcept { return static_cast<int>(window_.size()); }
  std::span<const int> window() const noexcept { return window_; }
  /// Image of i, 1 ≤ i ≤ n.
  int operator()(int i) const { return window_[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const PlainPermutation&, const PlainPermutation&) = default;

private:
  friend class PlainPermutationStream;

  std::vector<int> window_;
};

/// Element of B_n stored as the window [π(1), ..., π(n)]; π(-i) = -π(i).
class SignedPermutation {
public:
  SignedPermutation() = default;
  /// Throws ValidationError unless |window| is a bijection of {1..n}.
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);

  int size() const noexcept { return static_cast<int>(window_.size()); }
  std::span<const int> window() const noexcept { return window_; }
  /// Image of x for any x in {±1..±n}.
  int operator()(int x) const {
    return x > 0 ? window_[static_cast<std::size_t>(x - 1)]
                 : -window_[static_cast<std::size_t>(-x - 1)];
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

private:
  friend class SignedPermutationStream;

  std::vector<int> window_;
};

enum class CycleKind { Split, NonSplit };

/// Representative of a signed cycle. For a split pair C, -C this is C (the
/// cycle containing the minimal absolute value with positive sign); for a
/// non-split cycle it is the first half, the full cycle being
/// (e_1, ..., e_m, -e_1, ..., -e_m).
struct SignedCycle {
  std::vector<int> elements;
  CycleKind kind = CycleKind::Split;

  friend bool operator==(const SignedCycle&, const SignedCycle&) = default;
};

/// Standard form: cycles ordered by increasing minimal absolute value, each
/// starting with that minimum, positive.
struct CycleDecomposition {
  std::vector<SignedCycle> cycles;

  int size() const noexcept;
  std::size_t nonsplit_count() const noexcept;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

CycleDecomposition cycle_decompose(const SignedPermutation& p);

/// Inverse of cycle_decompose. Throws ValidationError on a decomposition that
/// is not in standard form or does not cover {1..n} exactly once.
SignedPermutation cycles_to_perm(const CycleDecomposition& d);

/// Cycles of a plain permutation in standard form (each cycle starts with its
/// minimum, cycles ordered by minimum).
std::vector<std::vector<int>> plain_cycles(const PlainPermutation& p);

/// Type-B set partition of [n] in standard presentation: the support of the
/// zero block (ascending) and the representative non-zero blocks ordered by
/// minimal absolute value. Each block starts with its minimal absolute value
/// (positive) and lists the rest in increasing absolute value.
struct SignedSetPartition {
  int n = 0;
  std::vector<int> zero_support;
  std::vector<std::vector<int>> blocks;

  /// Canonicalizes and validates arbitrary input; throws ValidationError.
  static SignedSetPartition make(int n, std::vector<int> zero_support,
                                 std::vector<std::vector<int>> blocks);

  friend bool operator==(const SignedSetPartition&, const SignedSetPartition&) = default;
};

/// Streams B_n in lexicographic order of windows over -n < ... < -1 < 1 < ... < n.
class SignedPermutationStream {
public:
  /// Throws SizeLimitError beyond the guard (n ≤ 12 by default).
  explicit SignedPermutationStream(int n, Shard shard = {});

  /// Moves to the next object of this shard; false when exhausted.
  bool advance();
  const SignedPermutation& current() const noexcept { return current_; }

private:
  bool step();

  int n_;
  Shard shard_;
  std::uint64_t position_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> rank_;
  std::vector<char> used_;
  SignedPermutation current_;
};

/// Streams S_n in lexicographic order.
class PlainPermutationStream {
public:
  /// Throws SizeLimitError beyond the guard (n ≤ 10 by default).
  explicit PlainPermutationStream(int n, Shard shard = {});

  bool advance();
  const PlainPermutation& current() const noexcept { return current_; }

private:
  bool step();

  int n_;
  Shard shard_;
  std::uint64_t position_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> window_;
  PlainPermutation current_;
};

/// Streams type-B set partitions of [n] by inserting 1, 2, ..., n in turn;
/// element m goes to the zero block, then to each existing block as +m and
/// -m, then to a new block.
class SignedPartitionStream {
public:
  /// Throws SizeLimitError beyond the guard (n ≤ 10 by default).
  explicit SignedPartitionStream(int n, Shard shard = {});

  bool advance();
  const SignedSetPartition& current() const noexcept { return current_; }
  /// Block label of each element in the current partition: 0 for the zero
  /// block, ±b when ±j lies in representative block b.
  std::span<const int> labels() const noexcept { return labels_; }

private:
  bool step();
  void rebuild();

  int n_;
  Shard shard_;
  std::uint64_t position_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> choice_;   // index into the insertion options for each element
  std::vector<int> prefix_max_;  // number of blocks before each element is placed
  std::vector<int> labels_;
  SignedSetPartition current_;
};

std::vector<SignedPermutation> signed_permutations(int n);
std::vector<PlainPermutation> plain_permutations(int n);
std::vector<SignedSetPartition> signed_partitions(int n);

/// 2^n·n!
double signed_permutation_count(int n);
double plain_permutation_count(int n);
/// Number of type-B set partitions of [n] (all block counts).
double signed_partition_count(int n);

// Text forms ---------------------------------------------------------------

/// "[-3,2,-1,5,-4]"
std::string to_string(const SignedPermutation& p);
std::string to_string(const PlainPermutation& p);
/// "(1,-3)(2)(4,5)*", a trailing '*' marking a non-split cycle.
std::string to_string(const CycleDecomposition& d);
/// "{2,-2}|{1,-3}|{4,-5,6}", the zero block first when present.
std::string to_string(const SignedSetPartition& p);

SignedPermutation parse_signed_window(std::string_view text);
PlainPermutation parse_plain_window(std::string_view text);
CycleDecomposition parse_cycles(std::string_view text);
/// Accepts either the window or the cycle text form.
SignedPermutation parse_signed_permutation(std::string_view text);

}  // namespace stirlingb
