#include "transit/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "transit/document.hpp"
#include "transit/enumeration.hpp"
#include "transit/fixtures.hpp"
#include "transit/report.hpp"

namespace transit {
namespace {

struct Options {
  bool json = false;
  bool complete_singletons = false;
  std::string file;
  std::vector<std::string> tags;
  std::size_t n = 0;
  std::vector<std::string> filters;
  bool count_only = false;
  bool require_ground = false;
  bool show_census = false;
  bool long_run = false;
  int workers = 0;
  std::string claims_file;
  std::string export_dir;
  std::string fixture_dir;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string subject_of(const Document& doc, const std::string& path) { return doc.name.empty() ? path : doc.name; }

ExecutionPolicy policy_of(const Options& o) {
  return o.workers > 0 ? ExecutionPolicy::with_workers(o.workers) : ExecutionPolicy{};
}

void require_size(const Options& o, std::size_t limit) {
  if (o.n < 1 || o.n > limit) {
    throw Error(ErrorCode::kOutOfRange, "--n must lie in 1.." + std::to_string(limit));
  }
  if (o.n == limit && limit == kMaxEnumerationSize && !o.long_run) {
    throw Error(ErrorCode::kOutOfRange, "--n " + std::to_string(o.n) + " takes a while; pass --long-run");
  }
}

void emit_report(const Report& r, const Options& o, std::ostream& out) {
  if (o.json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << render_text(r);
  }
}

int run_check(const Options& o, std::ostream& out) {
  const Document doc = load_document(o.file, o.complete_singletons);
  for (const auto& t : o.tags) {
    if (!is_known_tag(t)) throw Error(ErrorCode::kUnknownTag, "unknown tag '" + t + "'");
  }
  const auto tags = o.tags.empty() ? default_tags(doc) : o.tags;
  const Report r = check_report(doc, subject_of(doc, o.file), tags);
  emit_report(r, o, out);
  return r.all_hold() ? kExitOk : kExitFailed;
}

int run_classify(const Options& o, std::ostream& out) {
  const Document doc = load_document(o.file, o.complete_singletons);
  emit_report(classify_report(doc, subject_of(doc, o.file)), o, out);
  return kExitOk;
}

int run_order(const Options& o, std::ostream& out) {
  const Document doc = load_document(o.file, o.complete_singletons);
  const Report r = order_report(doc, subject_of(doc, o.file));
  emit_report(r, o, out);
  return r.order && r.order->pre_pyramidal ? kExitOk : kExitFailed;
}

int run_closure(const Options& o, std::ostream& out) {
  const Document doc = load_document(o.file, o.complete_singletons);
  const SetSystem family = doc.transit ? transit_sets(*doc.transit) : *doc.system;
  const Document closed = make_document(union_closure(family), doc.name, doc.description);
  if (o.json) {
    out << emit_json(closed).dump(2) << '\n';
  } else {
    out << emit_text(closed);
  }
  return kExitOk;
}

int run_enumerate(const Options& o, std::ostream& out) {
  require_size(o, kMaxEnumerationSize);
  if (o.show_census) {
    const Census c = census(o.n, policy_of(o));
    if (o.json) {
      out << census_to_json(c).dump(2) << '\n';
    } else {
      out << render_census_text(c);
    }
    return kExitOk;
  }
  EnumerationSpec spec;
  spec.n = o.n;
  spec.require_ground = o.require_ground;
  for (const auto& t : o.filters) {
    const auto p = parse_system_predicate(t);
    if (!p) throw Error(ErrorCode::kUnknownTag, "unknown set-system predicate '" + t + "'");
    spec.filter.push_back(*p);
  }
  if (o.count_only) {
    const std::uint64_t count = count_systems(spec, policy_of(o));
    if (o.json) {
      out << nlohmann::json{{"schema_version", kReportSchemaVersion}, {"n", o.n}, {"count", count}}.dump(2) << '\n';
    } else {
      out << count << '\n';
    }
    return kExitOk;
  }
  const GroundSet& ground = *GroundSet::standard(o.n);
  nlohmann::json systems = nlohmann::json::array();
  std::uint64_t count = 0;
  enumerate_systems(spec, [&](const SetSystem& s) {
    ++count;
    if (o.json) {
      nlohmann::json sets = nlohmann::json::array();
      for (Subset c : s.clusters()) sets.push_back(labels_of(ground, c));
      systems.push_back(std::move(sets));
    } else {
      std::string line;
      for (Subset c : s.clusters()) {
        if (!line.empty()) line += ' ';
        line += ground.format(c);
      }
      out << line << '\n';
    }
  });
  if (o.json) {
    out << nlohmann::json{{"schema_version", kReportSchemaVersion},
                          {"n", o.n},
                          {"elements", ground.labels()},
                          {"count", count},
                          {"systems", systems}}
               .dump(2)
        << '\n';
  }
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out) {
  require_size(o, kMaxEnumerationSize);
  const auto claims = o.claims_file.empty() ? implication_battery() : parse_claims(read_file(o.claims_file));
  const auto reports = verify_implications(claims, o.n, policy_of(o));
  if (o.json) {
    out << implications_to_json(reports, o.n).dump(2) << '\n';
  } else {
    out << render_implications_text(reports, o.n);
  }
  for (const auto& r : reports) {
    if (r.outcome == Outcome::kContradicted) return kExitFailed;
  }
  return kExitOk;
}

int run_fixtures(const Options& o, std::ostream& out) {
  if (!o.export_dir.empty()) {
    export_fixtures(o.export_dir);
    out << "exported " << builtin_fixtures().size() << " fixtures to " << o.export_dir << '\n';
    return kExitOk;
  }
  std::vector<FixtureOutcome> outcomes;
  if (o.fixture_dir.empty()) {
    for (const auto& f : builtin_fixtures()) outcomes.push_back(run_fixture(f));
  } else {
    // Every "<id>.txt" with a sidecar "<id>.expected.json", by id.
    std::vector<std::filesystem::path> docs;
    for (const auto& entry : std::filesystem::directory_iterator(o.fixture_dir)) {
      if (entry.path().extension() == ".txt") docs.push_back(entry.path());
    }
    std::sort(docs.begin(), docs.end());
    for (const auto& path : docs) {
      auto sidecar = path;
      sidecar.replace_extension(".expected.json");
      if (!std::filesystem::exists(sidecar)) continue;
      const Document doc = load_document(path.string());
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(read_file(sidecar.string()));
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::kParse, sidecar.string() + ": " + e.what());
      }
      const auto [expected, order] = expected_from_json(j);
      outcomes.push_back(run_fixture(doc, path.stem().string(), expected, order));
    }
  }
  if (o.json) {
    out << outcomes_to_json(outcomes).dump(2) << '\n';
  } else {
    out << render_outcomes_text(outcomes);
  }
  for (const auto& oc : outcomes) {
    if (!oc.ok()) return kExitFailed;
  }
  return kExitOk;
}

int status_for(ErrorCode code) {
  // A well-formed input that merely lacks the structure a command needs is a
  // failed check, not a usage error.
  return code == ErrorCode::kNotTSystem || code == ErrorCode::kNoCover || code == ErrorCode::kNotUniqueMinimum
             ? kExitFailed
             : kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transit functions, set systems and their axioms", "transit"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Machine-readable output");
  };
  const auto add_file = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("file", o.file, "System or transit document (.json for the JSON form)")->required();
    sub->add_flag("--complete-singletons", o.complete_singletons, "Add every singleton to a parsed set system");
  };
  const auto add_sweep = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Ground set size")->required();
    sub->add_flag("--long-run", o.long_run, "Allow the largest supported size");
    sub->add_option("--workers", o.workers, "Worker threads (default: TRANSIT_WORKERS or all cores)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* check = app.add_subcommand("check", "Evaluate axioms and predicates");
  add_file(check);
  check->add_option("--axiom", o.tags, "Tag to evaluate (repeatable; default: all that apply)");
  auto* classify = app.add_subcommand("classify", "Ladder from hierarchies to weak hierarchies");
  add_file(classify);
  auto* order = app.add_subcommand("order", "Compatible order or obstruction");
  add_file(order);
  auto* closure = app.add_subcommand("closure", "Union closure as a system document");
  add_file(closure);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate set systems containing the singletons");
  add_common(enumerate);
  add_sweep(enumerate);
  enumerate->add_option("--filter", o.filters, "Set-system predicate to require (repeatable)");
  enumerate->add_flag("--count-only", o.count_only, "Print only the number of systems");
  enumerate->add_flag("--require-ground", o.require_ground, "Only systems containing X");
  enumerate->add_flag("--census", o.show_census, "Count monotone transit functions per property");

  auto* verify = app.add_subcommand("verify-implications", "Sweep the implication battery or a claims file");
  add_common(verify);
  add_sweep(verify);
  verify->add_option("--claims", o.claims_file, "Claims file, one claim per line");

  auto* fixtures = app.add_subcommand("fixtures", "Run the built-in worked examples");
  add_common(fixtures);
  auto* exp = fixtures->add_option("--export", o.export_dir, "Write documents and sidecars to a directory");
  fixtures->add_option("--dir", o.fixture_dir, "Run the documents and sidecars found in a directory")
      ->check(CLI::ExistingDirectory)
      ->excludes(exp);

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();  // program name
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return run_check(o, out);
    if (*classify) return run_classify(o, out);
    if (*order) return run_order(o, out);
    if (*closure) return run_closure(o, out);
    if (*enumerate) return run_enumerate(o, out);
    if (*verify) return run_verify(o, out);
    if (*fixtures) return run_fixtures(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return status_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace transit
