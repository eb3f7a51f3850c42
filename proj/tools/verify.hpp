#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace stirlingb::cli {

struct VerifyOptions {
  int max_n = 0;
  int max_m = 0;
  int jobs = 1;
};

struct Counterexample {
  nlohmann::ordered_json params;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string identity;
  nlohmann::ordered_json range;
  std::optional<Counterexample> counterexample;
  double elapsed_ms = 0;

  bool passed() const noexcept { return !counterexample; }
  nlohmann::ordered_json to_json() const;
};

/// Stable identity ids in report order.
const std::vector<std::string>& identity_ids();
bool is_identity(const std::string& id);

/// Throws std::invalid_argument for an unknown id; library errors
/// (size limits, overflow) propagate.
VerifyReport run_identity(const std::string& id, const VerifyOptions& options);

}  // namespace stirlingb::cli
