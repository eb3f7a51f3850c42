#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json_io.hpp"
#include "stirlingb/combinat.hpp"
#include "stirlingb/qpoly.hpp"
#include "stirlingb/rg1.hpp"
#include "stirlingb/rg2.hpp"
#include "stirlingb/ssinv.hpp"
#include "stirlingb/symfun.hpp"

namespace stirlingb::cli {

namespace {

using json = nlohmann::ordered_json;

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Runs f(shard) for each of `jobs` positional shards on its own thread.
template <class R, class F>
std::vector<R> run_shards(int jobs, F f) {
  const std::size_t count = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<R> results(count);
  if (count == 1) {
    results[0] = f(Shard{0, 1});
    return results;
  }
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < count; ++i)
    threads.emplace_back([&, i] {
      try {
        results[i] = f(Shard{i, count});
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

void add_rows(std::vector<QPoly>& acc, const std::vector<QPoly>& part) {
  if (acc.size() < part.size()) acc.resize(part.size());
  for (std::size_t k = 0; k < part.size(); ++k) acc[k] += part[k];
}

std::vector<QPoly> merged(const std::vector<std::vector<QPoly>>& parts) {
  std::vector<QPoly> acc;
  for (const auto& p : parts) add_rows(acc, p);
  return acc;
}

FirstKindEnumRows first_kind_rows(int n, int r, int jobs) {
  auto parts = run_shards<FirstKindEnumRows>(jobs, [&](Shard s) { return first_kind_enum_rows(n, r, s); });
  FirstKindEnumRows out;
  for (const auto& p : parts) {
    add_rows(out.finv, p.finv);
    add_rows(out.sfinv, p.sfinv);
  }
  return out;
}

// Keeps the first mismatch seen; sweeps run in ascending parameter order.
class Checker {
public:
  bool failed() const noexcept { return ce_.has_value(); }

  template <class T>
  bool equal(json params, const T& expected, const T& actual) {
    if (failed()) return false;
    if (expected == actual) return true;
    ce_ = Counterexample{std::move(params), render(expected), render(actual)};
    return false;
  }

  void fail(json params, std::string expected, std::string actual) {
    if (!failed()) ce_ = Counterexample{std::move(params), std::move(expected), std::move(actual)};
  }

  void adopt(std::optional<Counterexample> ce) {
    if (!failed() && ce) ce_ = std::move(ce);
  }

  std::optional<Counterexample> take() { return std::move(ce_); }

private:
  static std::string render(const QPoly& p) { return p.to_string(); }
  static std::string render(const TPoly& p) { return p.to_string(); }
  template <class T>
  static std::string render(const T& v) {
    return std::to_string(v);
  }

  std::optional<Counterexample> ce_;
};

json span_of(int lo, int hi) { return json::array({lo, hi}); }

// Per-shard outcome of an exhaustive object sweep: objects seen and the
// earliest failure by stream position.
struct SweepPart {
  std::uint64_t count = 0;
  std::optional<std::pair<std::uint64_t, Counterexample>> failure;

  void record(std::uint64_t position, Counterexample ce) {
    if (!failure || position < failure->first) failure.emplace(position, std::move(ce));
  }
};

struct Sweep {
  std::uint64_t count = 0;
  std::optional<Counterexample> failure;
};

Sweep merge(std::vector<SweepPart> parts) {
  Sweep out;
  std::optional<std::pair<std::uint64_t, Counterexample>> first;
  for (auto& p : parts) {
    out.count += p.count;
    if (p.failure && (!first || p.failure->first < first->first)) first = std::move(p.failure);
  }
  if (first) out.failure = std::move(first->second);
  return out;
}

// Applies `check(object)` to every object of the stream; check returns an
// optional (expected, actual) pair describing a failure.
template <class Stream, class Check>
Sweep sweep(int n, int jobs, const char* object_key, Check check) {
  return merge(run_shards<SweepPart>(jobs, [&](Shard s) {
    SweepPart part;
    Stream stream(n, s);
    while (stream.advance()) {
      const std::uint64_t position = s.index + part.count * s.count;
      ++part.count;
      if (auto bad = check(stream.current()))
        part.record(position, Counterexample{json{{"n", n}, {object_key, bad->at(0)}}, bad->at(1), bad->at(2)});
    }
    return part;
  }));
}

using Failure = std::optional<std::vector<std::string>>;

// Constructing the stream runs its size guard, so an oversized request fails
// before any smaller n is swept.
template <class Stream>
void preflight(int max_n) {
  if (max_n >= 0) (void)Stream(max_n);
}

// Identity sweeps ---------------------------------------------------------------

void second_recursion(const VerifyOptions& o, Checker& c, json& range, bool with_r) {
  range = {{"n", span_of(0, o.max_n)}};
  if (with_r) range["r"] = "0..n";
  for (int n = 0; n <= o.max_n && !c.failed(); ++n)
    for (int r = 0; r <= (with_r ? n : 0) && !c.failed(); ++r) {
      const auto enumerated = merged(run_shards<std::vector<QPoly>>(
          o.jobs, [&](Shard s) { return stirling2_q_r_enum_row(n, r, s); }));
      for (int k = 0; k <= n; ++k) {
        const QPoly expected = with_r ? stirling2_q_r(n, k, r) : stirling2_q(n, k);
        json params{{"n", n}, {"k", k}};
        if (with_r) params["r"] = r;
        if (!c.equal(params, expected, enumerated[idx(k)])) break;
      }
    }
}

void first_A_recursion(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(0, o.max_n)}, {"r", "0..n"}};
  for (int n = 0; n <= o.max_n && !c.failed(); ++n)
    for (int r = 0; r <= n && !c.failed(); ++r) {
      const auto enumerated = merged(run_shards<std::vector<QPoly>>(
          o.jobs, [&](Shard s) { return stirlingA_q_r_enum_row(n, r, s); }));
      for (int k = 0; k <= n; ++k) {
        const QPoly expected = r == 0 ? stirlingA_q(n, k) : stirlingA_q_r(n, k, r);
        if (!c.equal(json{{"n", n}, {"k", k}, {"r", r}}, expected, enumerated[idx(k)])) break;
      }
    }
}

void first_B_recursion(const VerifyOptions& o, Checker& c, json& range, bool with_r) {
  range = {{"n", span_of(0, o.max_n)}};
  if (with_r) range["r"] = "0..n";
  for (int n = 0; n <= o.max_n && !c.failed(); ++n)
    for (int r = 0; r <= (with_r ? n : 0) && !c.failed(); ++r) {
      const auto rows = first_kind_rows(n, r, o.jobs);
      for (int k = 0; k <= n; ++k) {
        const QPoly expected = with_r ? stirlingB1_q_r(n, k, r) : stirlingB1_q(n, k);
        json params{{"n", n}, {"k", k}};
        if (with_r) params["r"] = r;
        if (!c.equal(params, expected, rows.finv[idx(k)])) break;
      }
    }
}

void sfinv_recursion(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(0, o.max_n)}};
  for (int n = 0; n <= o.max_n && !c.failed(); ++n) {
    const auto rows = first_kind_rows(n, 0, o.jobs);
    QPoly odd_product{1};
    for (int i = 1; i <= n; ++i) odd_product *= q_bracket(2 * i - 1);
    if (!c.equal(json{{"n", n}, {"k", 0}, {"check", "boundary"}}, odd_product, rows.sfinv[0])) break;
    for (int k = 0; k <= n; ++k)
      if (!c.equal(json{{"n", n}, {"k", k}}, sstirlingB1_q(n, k), rows.sfinv[idx(k)])) break;
  }
}

void product_first(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(0, o.max_n)}};
  for (int n = 0; n <= o.max_n && !c.failed(); ++n) {
    const TPoly p = product_first_kind(n);
    c.equal(json{{"n", n}, {"check", "degree"}}, static_cast<std::int64_t>(n), p.degree());
    for (int k = 0; k <= n; ++k)
      if (!c.equal(json{{"n", n}, {"k", k}}, stirlingB1_q(n, k), p[idx(k)])) break;
  }
}

void product_first_qr(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(0, o.max_n)}, {"r", "0..n"}};
  for (int n = 0; n <= o.max_n && !c.failed(); ++n)
    for (int r = 0; r <= n && !c.failed(); ++r) {
      const TPoly p = product_first_kind_qr(n, r);
      for (int k = 0; k <= n - r; ++k)
        if (!c.equal(json{{"n", n}, {"k", k}, {"r", r}}, stirlingB1_q_r(n, r + k, r), p[idx(k)])) break;
    }
}

void product_shifted_check(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(0, o.max_n)}};
  for (int n = 0; n <= o.max_n && !c.failed(); ++n) {
    const TPoly p = product_shifted(n);
    for (int k = 0; k <= n; ++k)
      if (!c.equal(json{{"n", n}, {"k", k}}, sstirlingB1_q(n, k), p[idx(k)])) break;
  }
}

void boundary_split(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(0, o.max_n)}};
  for (int n = 0; n <= o.max_n && !c.failed(); ++n) {
    const QPoly boundary = split_only_boundary(n);
    c.equal(json{{"n", n}, {"route", "recursion"}}, boundary, stirlingB1_q_r(n, 0, 0));
    c.equal(json{{"n", n}, {"route", "enumeration"}}, boundary, first_kind_rows(n, 0, o.jobs).finv[0]);
  }
}

void corollary_split_product(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(0, o.max_n)}};
  for (int n = 0; n <= o.max_n && !c.failed(); ++n) {
    QPoly product{1};
    for (int i = 0; i < n; ++i) product *= QPoly{1} + q_bracket(2 * i);
    c.equal(json{{"n", n}}, product, split_only_boundary(n));
  }
}

TPoly constant_tpoly(std::int64_t v) { return TPoly({QPoly::constant(v)}); }

void basis_second_q1(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(0, o.max_n)}};
  for (int n = 0; n <= o.max_n && !c.failed(); ++n) {
    std::vector<QPoly> zeros(idx(n));
    const TPoly t_power = expand_linear_factors(zeros);
    TPoly sum;
    std::vector<QPoly> roots;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) roots.push_back(QPoly::constant(-(2 * k - 1)));
      sum += constant_tpoly(eval_at_one(stirling2_q(n, k))) * expand_linear_factors(roots);
    }
    c.equal(json{{"n", n}}, t_power, sum);
  }
}

void classical_rising_q1(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(0, o.max_n)}};
  for (int n = 0; n <= o.max_n && !c.failed(); ++n) {
    std::vector<QPoly> a_roots;
    std::vector<QPoly> b_roots;
    for (int i = 0; i < n; ++i) {
      a_roots.push_back(QPoly::constant(i));
      b_roots.push_back(QPoly::constant(2 * i + 1));
    }
    const TPoly rising = expand_linear_factors(a_roots);
    const TPoly odd_rising = expand_linear_factors(b_roots);
    for (int k = 0; k <= n; ++k) {
      c.equal(json{{"n", n}, {"k", k}, {"type", "A"}}, eval_at_one(rising[idx(k)]),
              eval_at_one(stirlingA_q(n, k)));
      c.equal(json{{"n", n}, {"k", k}, {"type", "B"}}, eval_at_one(odd_rising[idx(k)]),
              eval_at_one(stirlingB1_q(n, k)));
    }
  }
}

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void bijection_roundtrips(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(0, o.max_n)}};
  auto count_check = [&](int n, const char* what, std::uint64_t expected, std::uint64_t actual) {
    c.equal(json{{"n", n}, {"count", what}}, expected, actual);
  };
  preflight<SignedPartitionStream>(o.max_n);
  preflight<PlainPermutationStream>(o.max_n);
  preflight<SignedPermutationStream>(o.max_n);
  for (int n = 0; n <= o.max_n && !c.failed(); ++n) {
    const Sweep partitions = sweep<SignedPartitionStream>(n, o.jobs, "partition", [](const SignedSetPartition& p) -> Failure {
      const RGWord2 w = partition_to_rg2(p);
      if (auto v = validate_rg2(w.letters)) return std::vector<std::string>{to_string(p), "valid word", v->to_string()};
      const SignedSetPartition back = rg2_to_partition(w);
      if (!(back == p)) return std::vector<std::string>{to_string(p), to_string(p), to_string(back)};
      return std::nullopt;
    });
    c.adopt(partitions.failure);
    std::int64_t blocks_total = 0;
    for (int k = 0; k <= n; ++k) blocks_total += eval_at_one(stirling2_q(n, k));
    count_check(n, "partitions", static_cast<std::uint64_t>(blocks_total), partitions.count);

    const Sweep plain = sweep<PlainPermutationStream>(n, o.jobs, "perm", [](const PlainPermutation& p) -> Failure {
      const RGWordA1 w = phiA(p);
      if (auto v = validate_rgA(w.pairs)) return std::vector<std::string>{to_string(p), "valid word", v->to_string()};
      const PlainPermutation back = phiA_inverse(w);
      if (!(back == p)) return std::vector<std::string>{to_string(p), to_string(p), to_string(back)};
      return std::nullopt;
    });
    c.adopt(plain.failure);
    count_check(n, "S_n", static_cast<std::uint64_t>(factorial(n)), plain.count);

    const Sweep signed_perms = sweep<SignedPermutationStream>(n, o.jobs, "perm", [](const SignedPermutation& p) -> Failure {
      const RGWordB1 w = phiB(p);
      if (auto v = validate_rgB(w.pairs)) return std::vector<std::string>{to_string(p), "valid word", v->to_string()};
      const SignedPermutation back = phiB_inverse(w);
      if (!(back == p)) return std::vector<std::string>{to_string(p), to_string(p), to_string(back)};
      const SignedPermutation rebuilt = ss_to_perm(ss_standard_form(p));
      if (!(rebuilt == p)) return std::vector<std::string>{to_string(p), to_string(p), to_string(rebuilt)};
      return std::nullopt;
    });
    c.adopt(signed_perms.failure);
    count_check(n, "B_n", static_cast<std::uint64_t>(factorial(n) * static_cast<double>(1ULL << n)),
                signed_perms.count);
  }
}

void flag_decomposition(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(1, o.max_n)}};
  preflight<SignedPermutationStream>(o.max_n);
  for (int n = 1; n <= o.max_n && !c.failed(); ++n) {
    const Sweep s = sweep<SignedPermutationStream>(n, o.jobs, "perm", [](const SignedPermutation& p) -> Failure {
      const SSForm form = ss_standard_form(p);
      const int inv = ss_inv(form);
      const int weighted = flag_parts(form).weighted();
      if (inv != weighted) return std::vector<std::string>{to_string(p), std::to_string(inv), std::to_string(weighted)};
      return std::nullopt;
    });
    c.adopt(s.failure);
  }
}

void e_lemma(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(0, o.max_n)}, {"k", "0..n"}};
  for (int n = 0; n <= o.max_n && !c.failed(); ++n)
    for (int k = 0; k <= n; ++k)
      if (!c.equal(json{{"n", n}, {"k", k}}, sstirlingB1_q(n, n - k), elementary_spec(n, k))) break;
}

void h_lemma_corrected(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(1, o.max_n)}, {"k", span_of(0, o.max_m)}};
  for (int n = 1; n <= o.max_n && !c.failed(); ++n)
    for (int k = 0; k <= o.max_m; ++k)
      if (!c.equal(json{{"n", n}, {"k", k}}, stirling2_q(n - 1 + k, n - 1), homogeneous_spec(n, k))) break;
}

void orthogonality(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(1, o.max_n)}, {"m", span_of(1, o.max_m)}};
  for (int n = 1; n <= o.max_n && !c.failed(); ++n)
    for (int m = 1; m <= o.max_m && !c.failed(); ++m) {
      QPoly convolution;
      for (int j = 0; j <= m; ++j) {
        const QPoly term = elementary_spec(n, j) * homogeneous_spec(n, m - j);
        convolution += j % 2 ? -term : term;
      }
      c.equal(json{{"n", n}, {"m", m}, {"route", "symmetric"}}, QPoly{}, convolution);
      c.equal(json{{"n", n}, {"m", m}, {"route", "stirling"}}, QPoly{}, orthogonality_residual(n, m));
    }
}

void power_sum(const VerifyOptions& o, Checker& c, json& range) {
  range = {{"n", span_of(1, o.max_n)}, {"m", span_of(1, o.max_m)}};
  for (int n = 1; n <= o.max_n && !c.failed(); ++n)
    for (int m = 1; m <= o.max_m && !c.failed(); ++m) {
      QPoly convolution;
      for (int j = 1; j <= m; ++j) {
        const QPoly term = static_cast<std::int64_t>(j) * (elementary_spec(n, j) * homogeneous_spec(n, m - j));
        convolution += j % 2 ? term : -term;
      }
      c.equal(json{{"n", n}, {"m", m}, {"route", "symmetric"}}, power_spec(n, m), convolution);
      c.equal(json{{"n", n}, {"m", m}, {"route", "stirling"}}, QPoly{}, power_sum_residual(n, m));
    }
}

// Pins the known failure of the uncorrected h-relation at n = k = 1.
void printed_h_lemma_fails(const VerifyOptions&, Checker& c, json& range) {
  range = {{"n", span_of(1, 1)}, {"k", span_of(1, 1)}};
  c.equal(json{{"n", 1}, {"k", 1}, {"form", "h-lemma"}}, q_bracket(3), -printed_homogeneous_residual(1, 1));
  c.equal(json{{"n", 1}, {"m", 1}, {"form", "orthogonality"}}, q_bracket(3), printed_orthogonality_residual(1, 1));
}

using Runner = std::function<void(const VerifyOptions&, Checker&, json&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"second-recursion", [](auto& o, auto& c, auto& r) { second_recursion(o, c, r, false); }},
      {"second-r-recursion", [](auto& o, auto& c, auto& r) { second_recursion(o, c, r, true); }},
      {"first-A-recursion", first_A_recursion},
      {"first-B-recursion", [](auto& o, auto& c, auto& r) { first_B_recursion(o, c, r, false); }},
      {"first-B-r-recursion", [](auto& o, auto& c, auto& r) { first_B_recursion(o, c, r, true); }},
      {"sfinv-recursion", sfinv_recursion},
      {"product-first", product_first},
      {"product-first-qr", product_first_qr},
      {"product-shifted", product_shifted_check},
      {"boundary-split", boundary_split},
      {"corollary-split-product", corollary_split_product},
      {"basis-second-q1", basis_second_q1},
      {"classical-rising-q1", classical_rising_q1},
      {"bijection-roundtrips", bijection_roundtrips},
      {"flag-decomposition", flag_decomposition},
      {"e-lemma", e_lemma},
      {"h-lemma-corrected", h_lemma_corrected},
      {"orthogonality", orthogonality},
      {"power-sum", power_sum},
      {"printed-h-lemma-fails", printed_h_lemma_fails},
  };
  return table;
}

}  // namespace

json VerifyReport::to_json() const {
  json j{{"identity", identity}, {"range", range}, {"status", passed() ? "pass" : "fail"}};
  if (counterexample)
    j["counterexample"] = json{{"params", counterexample->params},
                               {"expected", counterexample->expected},
                               {"actual", counterexample->actual}};
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, run] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool is_identity(const std::string& id) {
  const auto& ids = identity_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

VerifyReport run_identity(const std::string& id, const VerifyOptions& options) {
  const auto& table = registry();
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == id; });
  if (it == table.end()) throw std::invalid_argument("unknown identity '" + id + "'");
  const auto start = std::chrono::steady_clock::now();
  Checker checker;
  VerifyReport report;
  report.identity = id;
  it->second(options, checker, report.range);
  report.counterexample = checker.take();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace stirlingb::cli
