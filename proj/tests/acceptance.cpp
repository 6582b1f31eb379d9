// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "support.hpp"
#include "transit/enumeration.hpp"
#include "transit/fixtures.hpp"
#include "transit/pyramidal.hpp"
#include "transit/report.hpp"

using namespace transit;

namespace {

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<bool(std::ostringstream&)> run;
};

// --- 1 -----------------------------------------------------------------------

bool fixture_fidelity(std::ostringstream& log) {
  bool ok = true;
  for (const auto& f : builtin_fixtures()) {
    const auto outcome = run_fixture(f);
    if (!outcome.ok()) {
      log << " fixture " << f.id << " differs;";
      ok = false;
    }
  }
  const std::filesystem::path dir = std::filesystem::path(TRANSIT_SOURCE_DIR) / "fixtures";
  std::size_t sidecars = 0;
  for (const auto& f : builtin_fixtures()) {
    const auto doc = load_document((dir / (f.id + ".txt")).string());
    std::ifstream in(dir / (f.id + ".expected.json"));
    const auto [expected, order] = expected_from_json(nlohmann::json::parse(in));
    if (!run_fixture(doc, f.id, expected, order).ok()) {
      log << " sidecar " << f.id << " differs;";
      ok = false;
    }
    ++sidecars;
  }
  log << " " << builtin_fixtures().size() << " fixtures, " << sidecars << " sidecars";
  return ok;
}

// --- 2 -----------------------------------------------------------------------

bool implication_sweeps(std::ostringstream& log) {
  const char* claims =
      "monotone implies w => w2\nmonotone implies w2 => w\nmonotone implies w => w3\nmonotone implies w3 => w\n"
      "monotone implies w => mm & x'\nmonotone implies mm & x' => w\n"
      "monotone implies w => x'\nmonotone implies w => mm\nmonotone implies mm => a'\n"
      "monotone implies uc => k\nmonotone implies uc => u\n"
      "monotone implies x => u & x'\nmonotone implies u & x' => x\nmonotone implies uc => x\n"
      "monotone implies uc => w & wp\nmonotone implies wp => o'\nmonotone implies uc => py\n"
      "monotone implies pyramidal => o\n"
      "monotone implies Tsystem & K1 & K2 => K3\nmonotone implies MM => K3\nmonotone implies K3 => K1\n"
      "systems implies W' => weakHierarchy\nsystems implies weakHierarchy => W'\n";
  const auto parsed = parse_claims(claims);
  const auto reports = verify_implications(parsed, 4);
  bool ok = true;
  std::uint64_t instances = 0;
  for (const auto& r : reports) {
    instances += r.instances_checked;
    if (r.counterexample || r.outcome != Outcome::kAsExpected) {
      log << " counterexample to " << r.claim.name << ";";
      ok = false;
    }
  }
  // The canned battery, as a whole, shows no contradiction either.
  for (const auto& r : verify_implications(implication_battery(), 4)) {
    if (r.outcome == Outcome::kContradicted) {
      log << " battery contradicts " << r.claim.name << ";";
      ok = false;
    }
  }
  log << " " << reports.size() << " claims, " << instances << " instances";
  return ok;
}

// --- 3 -----------------------------------------------------------------------

bool non_implications(std::ostringstream& log) {
  struct Target {
    const char* claim;
    const char* fixture;
  };
  const Target targets[] = {
      {"monotone independent x' & m => w", "xprime-not-w"},
      {"monotone independent mm & m => w", "mm-not-w"},
      {"monotone independent u => uc", "u-not-uc"},
      {"monotone independent w => wp", "w-not-wp"},
      {"monotone independent wp => w", "triangle"},
      {"monotone independent o' => wp", "oprime-not-wp"},
      {"monotone independent o' & wp => o", "o-violation"},
      {"transit independent w => m", "w-not-monotone"},
  };
  bool ok = true;
  for (const auto& t : targets) {
    const auto claim = parse_claim(t.claim);
    const auto doc = builtin_fixture(t.fixture).document();
    const std::size_t reference = doc.ground->size();
    Counterexample stored;
    stored.n = reference;
    stored.transit = doc.transit ? *doc.transit : canonical_transit_function(*doc.system);
    stored.system = transit_sets(*stored.transit);
    const bool fixture_refutes = counterexample_reproduces(claim, stored);
    const auto r = verify_implication(claim, std::min<std::size_t>(reference, kMaxEnumerationSize));
    const bool found = r.counterexample && r.counterexample->n <= reference &&
                       counterexample_reproduces(claim, *r.counterexample);
    log << " [" << claim.name << ": fixture n=" << reference << ", found n="
        << (r.counterexample ? std::to_string(r.counterexample->n) : "-") << "]";
    ok = ok && fixture_refutes && found;
  }
  return ok;
}

// --- 4 -----------------------------------------------------------------------

// Interval masks over the candidate coordinates for every permutation: a
// family is pre-pyramidal iff it lies inside one of them.
std::vector<std::uint64_t> interval_masks(std::size_t n, const std::vector<Subset>& coords) {
  std::vector<std::size_t> seq(n);
  std::iota(seq.begin(), seq.end(), std::size_t{0});
  std::vector<std::uint64_t> masks;
  do {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const std::array<Subset, 1> one{coords[i]};
      if (is_interval_certificate(one, seq)) m |= std::uint64_t{1} << i;
    }
    masks.push_back(m);
  } while (std::next_permutation(seq.begin(), seq.end()));
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

bool order_oracle(std::ostringstream& log) {
  bool ok = true;
  // Every family of nonempty sets up to 4 elements: order search vs library brute force vs oracle.
  std::uint64_t small = 0;
  for (int n = 1; n <= 4; ++n) {
    oracle::all_families(n, false, [&](const oracle::Family& f) {
      ++small;
      const auto s = support::from_family(f);
      const auto fast = find_compatible_order(s);
      const auto slow = brute_force_order(s);
      const bool truth = oracle::pre_pyramidal(f);
      if (fast.pre_pyramidal != slow.pre_pyramidal || fast.pre_pyramidal != truth) ok = false;
      if (fast.order && !is_interval_certificate(s.clusters(), fast.order->sequence())) ok = false;
    });
  }

  // Every system over 5 elements that contains the singletons. X is an
  // interval under every order, so the 2^25 candidates with X fixed decide
  // all 2^26.
  const std::size_t n = 5;
  const auto coords = candidate_coordinates(n, true);
  const auto masks = interval_masks(n, coords);
  const std::uint64_t total = std::uint64_t{1} << coords.size();
  std::vector<Subset> clusters;
  std::uint64_t feasible = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    bool truth = false;
    for (auto m : masks) truth = truth || (idx & ~m) == 0;
    decode_candidate(n, coords, idx, true, clusters);
    const auto seq = find_compatible_sequence(clusters, n);
    if (seq.has_value() != truth || (seq && !is_interval_certificate(clusters, *seq))) {
      ok = false;
      break;
    }
    feasible += truth ? 1 : 0;
  }
  // Library brute force on the same space: infeasibility is inherited by
  // supersets, so walking feasible families and testing each one-coordinate
  // extension visits every feasible family and the whole infeasible frontier.
  std::uint64_t brute_feasible = 0;
  std::uint64_t brute_calls = 0;
  std::vector<std::pair<std::uint64_t, std::size_t>> stack = {{0, 0}};
  while (!stack.empty()) {
    const auto [idx, next] = stack.back();
    stack.pop_back();
    ++brute_feasible;
    for (std::size_t c = next; c < coords.size(); ++c) {
      const std::uint64_t child = idx | (std::uint64_t{1} << c);
      decode_candidate(n, coords, child, true, clusters);
      ++brute_calls;
      const bool b = brute_force_sequence(clusters, n).has_value();
      if (b != find_compatible_sequence(clusters, n).has_value()) ok = false;
      if (b) stack.emplace_back(child, c + 1);
    }
  }
  if (brute_feasible != feasible) ok = false;

  // Random systems on 6 and 7 elements.
  std::mt19937_64 rng(20240611);
  std::uint64_t random_feasible = 0;
  for (std::size_t m : {std::size_t{6}, std::size_t{7}}) {
    const auto g = GroundSet::standard(m);
    const std::uint64_t universe = (std::uint64_t{1} << m) - 1;
    for (int trial = 0; trial < 100000; ++trial) {
      std::vector<Subset> cs;
      const int count = static_cast<int>(rng() % 8) + 1;
      for (int i = 0; i < count; ++i) {
        // Short runs in a random relabelling keep a good share of the systems pre-pyramidal.
        std::uint64_t c = rng() & universe;
        if (rng() % 2 == 0) {
          const std::size_t len = 1 + rng() % (m - 1);
          const std::size_t start = rng() % (m - len + 1);
          c = ((std::uint64_t{1} << len) - 1) << start;
        }
        if (c != 0) cs.emplace_back(c);
      }
      const SetSystem s(g, cs);
      const auto fast = find_compatible_order(s);
      const auto slow = brute_force_order(s);
      if (fast.pre_pyramidal != slow.pre_pyramidal) ok = false;
      if (fast.order && !is_interval_certificate(s.clusters(), fast.order->sequence())) ok = false;
      random_feasible += fast.pre_pyramidal ? 1 : 0;
    }
  }
  log << " " << small << " families n<=4, " << total << " systems n=5 (" << feasible << " pre-pyramidal, "
      << brute_calls << " brute-force calls), 200000 random n=6,7 (" << random_feasible << " pre-pyramidal)";
  return ok;
}

// --- 5 -----------------------------------------------------------------------

bool bijection(std::ostringstream& log) {
  bool ok = true;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::uint64_t systems = 0;
    enumerate_systems({n, {SystemPredicate::kTSystem}, false}, [&](const SetSystem& s) {
      ++systems;
      if (transit_sets(canonical_transit_function(s)) != s) ok = false;
    });
    std::uint64_t monotone = 0;
    oracle::all_transit_functions(static_cast<int>(n), [&](const oracle::Table& t) {
      const auto r = support::from_table(t);
      if (!check_monotone(r).holds) return;
      ++monotone;
      const auto c = transit_sets(r);
      if (!check_system(c, SystemPredicate::kTSystem).holds || canonical_transit_function(c) != r) ok = false;
    });
    std::uint64_t streamed = 0;
    enumerate_monotone_tfs(n, [&](const TransitFunction&) { ++streamed; });
    if (systems != monotone || streamed != monotone) ok = false;
    log << " n=" << n << ":" << monotone;
  }
  const auto walked = t_system_indices(5).size();
  const auto scanned = count_systems({5, {SystemPredicate::kTSystem}, false});
  std::uint64_t streamed = 0;
  bool all_monotone = true;
  enumerate_monotone_tfs(5, [&](const TransitFunction& r) {
    ++streamed;
    if (streamed % 97 == 0) all_monotone = all_monotone && check_monotone(r).holds;
  });
  if (walked != scanned || streamed != scanned || !all_monotone) ok = false;
  log << " n=5:" << scanned;
  return ok;
}

// --- 6 -----------------------------------------------------------------------

bool nebesky(std::ostringstream& log) {
  bool ok = true;
  std::uint64_t triples = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto g = GroundSet::standard(n);
    const std::uint64_t top = std::uint64_t{1} << n;
    for (std::uint64_t a = 1; a < top; ++a)
      for (std::uint64_t b = 1; b < top; ++b)
        for (std::uint64_t c = 1; c < top; ++c) {
          ++triples;
          const bool test = nebesky_triple_test(Subset(a), Subset(b), Subset(c)).holds;
          const auto closure = union_closure(SetSystem(g, {Subset(a), Subset(b), Subset(c)}));
          if (test != find_compatible_order(closure).pre_pyramidal) ok = false;
        }
  }
  std::mt19937_64 rng(7);
  const auto g6 = GroundSet::standard(6);
  for (int i = 0; i < 100000; ++i) {
    Subset s[3];
    for (auto& x : s) {
      do x = Subset(rng() & 63U);
      while (x.empty());
    }
    ++triples;
    const bool test = nebesky_triple_test(s[0], s[1], s[2]).holds;
    const auto closure = union_closure(SetSystem(g6, {s[0], s[1], s[2]}));
    if (test != brute_force_order(closure).pre_pyramidal) ok = false;
  }
  log << " " << triples << " triples";
  return ok;
}

// --- 7 -----------------------------------------------------------------------

bool determinism(std::ostringstream& log) {
  const auto claims = implication_battery();
  const auto a = implications_to_json(verify_implications(claims, 4, ExecutionPolicy::with_workers(1)), 4).dump(2);
  const auto b = implications_to_json(verify_implications(claims, 4, ExecutionPolicy::with_workers(4)), 4).dump(2);
  const auto c = implications_to_json(verify_implications(claims, 4, ExecutionPolicy::serial()), 4).dump(2);
  const auto d = census_to_json(census(4, ExecutionPolicy::with_workers(1))).dump();
  const auto e = census_to_json(census(4, ExecutionPolicy::with_workers(4))).dump();
  log << " report " << a.size() << " bytes";
  return a == b && a == c && d == e;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "fixture fidelity", 1.0, fixture_fidelity},
      {2, "implication sweeps n<=4", 60.0, implication_sweeps},
      {3, "non-implications rediscovered", 60.0, non_implications},
      {4, "order search vs brute force", 600.0, order_oracle},
      {5, "bijection round trips and counts", 600.0, bijection},
      {6, "union-closure triple test vs order search", 600.0, nebesky},
      {7, "deterministic reports across worker counts", 600.0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log << " exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    if (!in_time) log << " over the " << c.budget_seconds << " s budget";
    const bool pass = ok && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s %d %s (%.2f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds, log.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
