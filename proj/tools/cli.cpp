#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "stirlingb/errors.hpp"
#include "stirlingb/rg1.hpp"
#include "stirlingb/rg2.hpp"
#include "stirlingb/ssinv.hpp"
#include "verify.hpp"

namespace stirlingb::cli {

namespace {

using json = nlohmann::ordered_json;

struct TableArgs {
  std::string kind;
  int max_n = 0;
  std::optional<int> r;
  std::string format = "csv";
};

struct StatArgs {
  std::string kind;
  std::string text;
};

struct VerifyArgs {
  std::string id;
  int max_n = 0;
  std::optional<int> max_m;
  int jobs = 1;
};

std::vector<QPoly> table_row(const TableArgs& a, int n) {
  if (a.kind == "S") {
    if (a.r) return stirling2_q_r_row(n, *a.r);
    std::vector<QPoly> row;
    for (int k = 0; k <= n; ++k) row.push_back(stirling2_q(n, k));
    return row;
  }
  if (a.kind == "s") {
    if (a.r) return stirlingB1_q_r_row(n, *a.r);
    std::vector<QPoly> row;
    for (int k = 0; k <= n; ++k) row.push_back(stirlingB1_q(n, k));
    return row;
  }
  return sstirlingB1_q_row(n);
}

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  if (a.kind == "ss" && a.r) {
    err << "error: --r is not available for the ss table\n";
    return kUsage;
  }
  std::vector<std::vector<QPoly>> rows;
  for (int n = 0; n <= a.max_n; ++n) {
    auto row = table_row(a, n);
    row.resize(static_cast<std::size_t>(n) + 1);
    rows.push_back(std::move(row));
  }
  if (a.format == "json") {
    json j{{"kind", a.kind}, {"max_n", a.max_n}};
    if (a.r) j["r"] = *a.r;
    j["rows"] = rows;
    out << j.dump() << '\n';
  } else {
    out << "n,k,poly\n";
    for (std::size_t n = 0; n < rows.size(); ++n)
      for (std::size_t k = 0; k < rows[n].size(); ++k) out << n << ',' << k << ',' << rows[n][k] << '\n';
  }
  return kPass;
}

int cmd_stat(const StatArgs& a, std::ostream& out) {
  json j;
  if (a.kind == "perm") {
    const SignedPermutation p = parse_signed_permutation(a.text);
    const RGWordB1 w = phiB(p);
    const SSForm form = ss_standard_form(p);
    j = first_kind_stats(w);
    j["ss_inv"] = ss_inv(form);
    j["flag"] = flag_parts(form);
    j["word"] = to_string(w);
    j["ss_form"] = to_string(form);
  } else if (a.kind == "word1") {
    const RGWordB1 w = parse_rgB(a.text);
    j = first_kind_stats(w);
  } else {
    const RGWord2 w = parse_rg2(a.text);
    j = json{{"weight", weight_exponent(w)}, {"k", w.max_letter()}};
  }
  out << j.dump() << '\n';
  return kPass;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.id != "all" && !is_identity(a.id)) {
    err << "error: unknown identity '" << a.id << "'\n";
    return kUsage;
  }
  if (a.jobs < 1 || a.max_n < 0 || (a.max_m && *a.max_m < 1)) {
    err << "error: --max-n must be >= 0, --max-m and --jobs >= 1\n";
    return kUsage;
  }
  VerifyOptions options{a.max_n, a.max_m.value_or(std::max(1, a.max_n)), a.jobs};
  std::vector<std::string> ids = a.id == "all" ? identity_ids() : std::vector<std::string>{a.id};
  bool all_passed = true;
  for (const auto& id : ids) {
    const VerifyReport report = run_identity(id, options);
    all_passed = all_passed && report.passed();
    out << report.to_json().dump() << '\n' << std::flush;
  }
  return all_passed ? kPass : kIdentityFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-Stirling numbers of type B: tables, statistics, identity checks", "stirlingb"};
  app.require_subcommand(1);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Print a q-Stirling triangle");
  table_cmd->add_option("kind", table.kind, "S, s or ss")->required()->check(CLI::IsMember({"S", "s", "ss"}));
  table_cmd->add_option("--max-n", table.max_n, "Largest n")->required()->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--r", table.r, "Use the r-variant")->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--format", table.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  StatArgs stat;
  auto* stat_cmd = app.add_subcommand("stat", "Statistics of one object");
  stat_cmd->add_option("kind", stat.kind, "perm, word1 or word2")
      ->required()
      ->check(CLI::IsMember({"perm", "word1", "word2"}));
  stat_cmd->add_option("text", stat.text, "Object in text form")->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check identities exhaustively");
  verify_cmd->add_option("id", verify.id, "Identity id or 'all'")->required();
  verify_cmd->add_option("--max-n", verify.max_n, "Largest n")->required();
  verify_cmd->add_option("--max-m", verify.max_m, "Largest m (or k) for the symmetric-function checks");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads for enumerations");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*table_cmd) return cmd_table(table, out, err);
    if (*stat_cmd) return cmd_stat(stat, out);
    return cmd_verify(verify, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace stirlingb::cli
