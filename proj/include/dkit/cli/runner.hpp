#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dkit/cli/script.hpp"
#include "dkit/verify.hpp"
#include "json.hpp"

namespace dkit::script {

inline constexpr int kSchemaVersion = 1;

struct RunOptions {
  Bounds bounds;
  std::uint64_t seed = 1;
  /// Wall times make reports non-reproducible, so they are opt-in.
  bool timing = false;
};

struct Expectation {
  std::string key;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct Report {
  std::string command;
  Position pos;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::string verdict;
  nlohmann::ordered_json witness;  // null unless a witness exists
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  std::vector<HypothesisCheck> transcript;
  std::vector<Expectation> expectations;
  std::optional<std::string> error;
  std::optional<double> wall_ms;

  bool ok() const;
};

/// Executes the statements in order. Runtime errors become failed reports;
/// bindings produce a report only when they fail.
std::vector<Report> run(const Script& script, const RunOptions& options = {});

bool all_ok(const std::vector<Report>& reports);

nlohmann::ordered_json to_json(const Report& r);
/// The top-level document described by docs/report.schema.json.
nlohmann::ordered_json to_json(const std::vector<Report>& reports, const std::string& script_name,
                               const RunOptions& options);
std::string render_text(const std::vector<Report>& reports);

}  // namespace dkit::script
