#include "dkit/cli/paper_suite.hpp"

#include <map>

namespace dkit::script {

namespace {

struct Embedded {
  const char* file;
  const char* text;
};

const Embedded kEmbedded[] = {
#include "paper_scripts.inc"
};

struct Meta {
  const char* id;
  std::vector<std::string> aliases;
  const char* file;
};

const Meta kMeta[] = {
    {"5.4", {"expansion"}, "expansion.dk"},
    {"5.5", {"weighting"}, "weighting.dk"},
    {"6.4", {}, "example_6_4.dk"},
    {"7.2", {"Example-1"}, "example_7_2.dk"},
    {"7.4", {"Example-2", "7.3"}, "example_7_4.dk"},
    {"7.5", {"Example-3"}, "example_7_5.dk"},
    {"7.7", {"Example-4"}, "example_7_7.dk"},
    {"7.8", {"Example-5"}, "example_7_8.dk"},
};

}  // namespace

const std::vector<SuiteEntry>& paper_suite() {
  static const std::vector<SuiteEntry> suite = [] {
    std::map<std::string, std::string> texts;
    for (const auto& e : kEmbedded) texts[e.file] = e.text;
    std::vector<SuiteEntry> out;
    for (const auto& m : kMeta) out.push_back({m.id, m.aliases, m.file, texts.at(m.file)});
    return out;
  }();
  return suite;
}

const SuiteEntry* find_entry(const std::string& key) {
  for (const auto& e : paper_suite()) {
    if (e.id == key || e.file == key || e.file == key + ".dk") return &e;
    for (const auto& a : e.aliases)
      if (a == key) return &e;
  }
  return nullptr;
}

SuiteResult run_entry(const SuiteEntry& entry, const RunOptions& options) {
  SuiteResult r;
  r.entry = &entry;
  try {
    r.reports = run(parse_script(entry.text), options);
  } catch (const ParseError& e) {
    r.parse_error = e.what();
  }
  return r;
}

}  // namespace dkit::script
