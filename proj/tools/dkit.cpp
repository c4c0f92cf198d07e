#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dkit/cli/paper_suite.hpp"

namespace ds = dkit::script;

namespace {

void apply_bounds(ds::RunOptions& o, const std::optional<unsigned>& r, const std::optional<unsigned>& s,
                  const std::optional<unsigned>& n, const std::optional<unsigned>& k) {
  if (r) o.bounds.r_max = *r;
  if (s) o.bounds.s_max = *s;
  if (n) o.bounds.n_max = *n;
  if (k) o.bounds.k_max = *k;
}

int run_script(const std::string& path, bool as_json, const ds::RunOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "dkit: cannot read " << path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  ds::Script script;
  try {
    script = ds::parse_script(buf.str());
  } catch (const ds::ParseError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return 2;
  }
  auto reports = ds::run(script, opts);
  if (as_json)
    std::cout << ds::to_json(reports, path, opts).dump(2) << "\n";
  else
    std::cout << ds::render_text(reports);
  return ds::all_ok(reports) ? 0 : 1;
}

int reproduce(const std::optional<std::string>& only, bool as_json) {
  std::vector<const ds::SuiteEntry*> entries;
  if (only) {
    const auto* e = ds::find_entry(*only);
    if (!e) {
      std::cerr << "dkit: unknown suite item '" << *only << "'\n";
      return 2;
    }
    entries.push_back(e);
  } else {
    for (const auto& e : ds::paper_suite()) entries.push_back(&e);
  }
  ds::RunOptions opts;
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  std::size_t failed = 0;
  for (const auto* e : entries) {
    auto r = ds::run_entry(*e, opts);
    if (!r.ok()) ++failed;
    if (as_json) {
      auto doc = r.parse_error ? nlohmann::ordered_json{{"error", *r.parse_error}}
                               : ds::to_json(r.reports, "paper/" + e->file, opts);
      items.push_back({{"id", e->id}, {"ok", r.ok()}, {"document", doc}});
    } else {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << e->id << "  " << e->file << "\n";
      if (r.parse_error) std::cout << "     parse error: " << *r.parse_error << "\n";
      if (!r.ok() && !r.parse_error) std::cout << ds::render_text(r.reports);
    }
  }
  if (as_json)
    std::cout << nlohmann::ordered_json{{"schema_version", ds::kSchemaVersion},
                                        {"tool", "dkit"},
                                        {"items", items},
                                        {"summary", {{"items", entries.size()}, {"failed", failed}}}}
                     .dump(2)
              << "\n";
  else
    std::cout << entries.size() - failed << "/" << entries.size() << " items passed\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dkit: demotions of monomial ideals"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Execute a .dk script");
  std::string path;
  bool as_json = false, timing = false;
  std::uint64_t seed = 1;
  std::optional<unsigned> rmax, smax, nmax, kmax;
  run->add_option("script", path, "Script file")->required();
  run->add_flag("--json", as_json, "Emit the JSON report");
  run->add_option("--seed", seed, "Seed for property commands");
  run->add_option("--rmax", rmax, "Default r bound for demotion checks");
  run->add_option("--smax", smax, "Default s bound for demotion checks");
  run->add_option("--nmax", nmax, "Default n bound for reduction checks");
  run->add_option("--kmax", kmax, "Default k bound for NTF checks");
  run->add_flag("--timing", timing, "Record wall time per command");

  auto* rep = app.add_subcommand("reproduce-paper", "Run the embedded golden suite");
  std::optional<std::string> only;
  bool rep_json = false;
  rep->add_option("--only", only, "Run one item by id or alias");
  rep->add_flag("--json", rep_json, "Emit JSON");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    ds::RunOptions opts;
    opts.seed = seed;
    opts.timing = timing;
    apply_bounds(opts, rmax, smax, nmax, kmax);
    return run_script(path, as_json, opts);
  }
  return reproduce(only, rep_json);
}
