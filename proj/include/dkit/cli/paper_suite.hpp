#pragma once

#include <string>
#include <vector>

#include "dkit/cli/runner.hpp"

namespace dkit::script {

struct SuiteEntry {
  std::string id;
  std::vector<std::string> aliases;
  std::string file;
  std::string text;
};

/// The golden scripts under paper/, embedded at build time.
const std::vector<SuiteEntry>& paper_suite();

/// Looks up an entry by id, alias or file stem; nullptr when unknown.
const SuiteEntry* find_entry(const std::string& key);

struct SuiteResult {
  const SuiteEntry* entry = nullptr;
  std::vector<Report> reports;
  std::optional<std::string> parse_error;

  bool ok() const { return !parse_error && all_ok(reports); }
};

SuiteResult run_entry(const SuiteEntry& entry, const RunOptions& options = {});

}  // namespace dkit::script
