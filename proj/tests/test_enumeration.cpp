#include "doctest.h"

#include <set>

#include "support.hpp"
#include "transit/enumeration.hpp"
#include "transit/fixtures.hpp"

using namespace transit;

namespace {

// T-systems among all families with singletons, by the oracle.
std::uint64_t oracle_t_system_count(int n) {
  std::uint64_t count = 0;
  oracle::all_families(n, true, [&](const oracle::Family& f) { count += oracle::t_system(f) ? 1 : 0; });
  return count;
}

std::uint64_t oracle_monotone_count(int n) {
  std::uint64_t count = 0;
  oracle::all_transit_functions(n, [&](const oracle::Table& t) { count += oracle::m(t) ? 1 : 0; });
  return count;
}

EnumerationSpec t_systems(std::size_t n) { return {n, {SystemPredicate::kTSystem}, false}; }

const ImplicationReport& find(const std::vector<ImplicationReport>& reports, const std::string& name) {
  for (const auto& r : reports)
    if (r.claim.name == name) return r;
  FAIL("no claim " << name);
  return reports.front();
}

}  // namespace

TEST_CASE("candidate space sizes") {
  CHECK(candidate_count({4, {}, false}) == 2048);
  CHECK(candidate_count({5, {}, false}) == (std::uint64_t{1} << 26));
  CHECK(candidate_count({3, {}, true}) == 8);
  CHECK(candidate_coordinates(3).size() == 4);
  CHECK(candidate_coordinates(3, true).size() == 3);
}

TEST_CASE("single element has exactly one T-system") {
  std::vector<SetSystem> seen;
  enumerate_systems(t_systems(1), [&](const SetSystem& s) { seen.push_back(s); });
  REQUIRE(seen.size() == 1);
  CHECK(seen[0] == SetSystem(GroundSet::standard(1), {Subset::singleton(0)}));
}

TEST_CASE("T-system counts match the oracle") {
  for (int n = 1; n <= 4; ++n) {
    const auto expected = oracle_t_system_count(n);
    CHECK(count_systems(t_systems(static_cast<std::size_t>(n))) == expected);
    CHECK(t_system_indices(static_cast<std::size_t>(n)).size() == expected);
    std::uint64_t streamed = 0;
    enumerate_monotone_tfs(static_cast<std::size_t>(n), [&](const TransitFunction&) { ++streamed; });
    CHECK(streamed == expected);
    CHECK(oracle_monotone_count(n) == expected);
  }
}

TEST_CASE("kernel and walker agree on the T-system indices") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::uint64_t> kernel;
    const auto coords = candidate_coordinates(n);
    std::vector<Subset> clusters;
    for (std::uint64_t i = 0; i < candidate_count({n, {}, false}); ++i) {
      decode_candidate(n, coords, i, false, clusters);
      if (is_t_system_kernel(clusters, n)) kernel.push_back(i);
    }
    CHECK(t_system_indices(n) == kernel);
  }
}

TEST_CASE("walker branches partition the T-systems of 5 elements") {
  const auto all = t_system_indices(5, ExecutionPolicy::serial());
  CHECK(all.size() == 163696);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(t_system_indices(5) == all);
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
  const auto run = [] {
    std::vector<SetSystem> out;
    enumerate_systems({4, {}, false}, [&](const SetSystem& s) { out.push_back(s); });
    return out;
  };
  const auto a = run();
  CHECK(a.size() == 2048);
  CHECK(a == run());
  std::set<std::vector<std::uint64_t>> distinct;
  for (const auto& s : a) {
    std::vector<std::uint64_t> bits;
    for (auto c : s.clusters()) bits.push_back(c.bits());
    distinct.insert(bits);
  }
  CHECK(distinct.size() == a.size());
}

TEST_CASE("filters and require_ground") {
  std::uint64_t with_x = 0;
  enumerate_systems({3, {SystemPredicate::kTSystem, SystemPredicate::kK1}, false}, [&](const SetSystem&) { ++with_x; });
  CHECK(count_systems({3, {SystemPredicate::kBinaryClustering}, false}) == with_x);
  CHECK(count_systems({3, {SystemPredicate::kTSystem}, true}) == with_x);
  CHECK(support::error_code([] { count_systems({6, {}, false}); }) == ErrorCode::kOutOfRange);
  CHECK(support::error_code([] { count_systems({0, {}, false}); }) == ErrorCode::kOutOfRange);
}

TEST_CASE("every enumerated function is monotone") {
  for (std::size_t n = 1; n <= 4; ++n)
    enumerate_monotone_tfs(n, [](const TransitFunction& r) { CHECK(check_monotone(r).holds); });
}

TEST_CASE("bijection round trips") {
  for (std::size_t n = 1; n <= 4; ++n) {
    enumerate_systems(t_systems(n), [](const SetSystem& s) {
      CHECK(transit_sets(canonical_transit_function(s)) == s);
    });
  }
  for (int n = 1; n <= 4; ++n) {
    oracle::all_transit_functions(n, [](const oracle::Table& t) {
      if (!oracle::m(t)) return;
      const auto r = support::from_table(t);
      const auto c = transit_sets(r);
      CHECK(oracle::t_system(support::to_family(c)));
      CHECK(canonical_transit_function(c) == r);
    });
  }
}

TEST_CASE("transit function decoding") {
  CHECK(transit_function_count(1) == 1);
  CHECK(transit_function_count(3) == 8);
  CHECK(transit_function_count(4) == 4096);
  std::uint64_t i = 0;
  enumerate_transit_functions(3, [&](const TransitFunction& r) { CHECK(decode_transit_function(3, i++) == r); });
  CHECK(i == 8);
  // The first pair is the least significant digit.
  const auto r = decode_transit_function(3, 1);
  CHECK(r.at(0, 1) == Subset::full(3));
  CHECK(r.at(0, 2) == Subset::pair(0, 2));
}

TEST_CASE("property masks agree with the oracle on every transit function up to 4 elements") {
  for (int n = 1; n <= 4; ++n) {
    oracle::all_transit_functions(n, [&](const oracle::Table& t) {
      const auto r = support::from_table(t);
      REQUIRE(evaluate_properties(r) == support::transit_mask(t));
    });
  }
}

TEST_CASE("lazy property masks only compute what is asked") {
  const auto r = support::from_table(support::to_table(decode_transit_function(4, 777)));
  const auto all = evaluate_properties(r);
  for (std::size_t i = 0; i < kPropertyCount; ++i) {
    const auto p = bit(static_cast<Property>(i));
    CHECK((evaluate_properties(r, p) & p) == (all & p));
    CHECK((evaluate_properties(r, p) & ~p) == 0);
  }
}

TEST_CASE("property tags") {
  for (std::size_t i = 0; i < kPropertyCount; ++i) {
    const auto p = static_cast<Property>(i);
    CHECK(parse_property(tag(p)) == p);
  }
  CHECK(format_mask(bit(Property::kUC) | bit(Property::kW)) == "w & uc");
  CHECK(format_mask(0) == "true");
}

TEST_CASE("claim parsing") {
  const auto c = parse_claim("monotone implies uc&m=>w & wp");
  CHECK(c.domain == Domain::kMonotone);
  CHECK(c.expected == Expectation::kImplies);
  CHECK(c.hypothesis == (bit(Property::kUC) | bit(Property::kM)));
  CHECK(c.conclusion == (bit(Property::kW) | bit(Property::kWP)));
  CHECK(parse_claim(format_claim(c)).hypothesis == c.hypothesis);
  CHECK(parse_claim("systems independent true => H").hypothesis == 0);
  CHECK(support::error_code([] { parse_claim("monotone implies w =>"); }) == ErrorCode::kParse);
  CHECK(support::error_code([] { parse_claim("monotone implies w => nope"); }) == ErrorCode::kUnknownTag);
  CHECK(support::error_code([] { parse_claim("galaxy implies w => w"); }) == ErrorCode::kParse);
  CHECK(support::error_code([] { parse_claim("systems implies w => UC"); }) == ErrorCode::kParse);
  CHECK(support::error_code([] { parse_claim("monotone implies w w => m"); }) == ErrorCode::kParse);
  const auto many = parse_claims("# comment\nmonotone implies w => w\n\ntransit independent w => m  # trailing\n");
  CHECK(many.size() == 2);
}

TEST_CASE("domain limits") {
  CHECK(domain_limit(Domain::kMonotone) == 5);
  CHECK(domain_limit(Domain::kTransit) == 4);
  CHECK(domain_limit(Domain::kSystems) == 4);
}

TEST_CASE("reflexive claim is confirmed") {
  const auto r = verify_implication(parse_claim("monotone implies w => w"), 3);
  CHECK(r.status == ImplicationStatus::kConfirmed);
  CHECK(r.outcome == Outcome::kAsExpected);
  CHECK(r.instances_checked == 1 + 1 + 8);
}

TEST_CASE("uc implies w and wp up to 4 elements") {
  const auto r = verify_implication(parse_claim("monotone implies uc => w & wp"), 4);
  CHECK(r.status == ImplicationStatus::kConfirmed);
  CHECK_FALSE(r.counterexample);
  CHECK(r.instances_checked == 1 + 1 + 8 + 400);
}

TEST_CASE("wp does not imply w, and the triangle is the first counterexample") {
  const auto claim = parse_claim("monotone independent wp => w");
  const auto r = verify_implication(claim, 4);
  CHECK(r.status == ImplicationStatus::kRefuted);
  CHECK(r.outcome == Outcome::kAsExpected);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->n == 3);
  CHECK(counterexample_reproduces(claim, *r.counterexample));
  const auto tri = builtin_fixture("triangle").document();
  CHECK(r.counterexample->transit->at(0, 1) == tri.transit->at(0, 1));
  CHECK(r.counterexample->transit->at(0, 2) == tri.transit->at(0, 2));
  CHECK(r.counterexample->transit->at(1, 2) == tri.transit->at(1, 2));
}

TEST_CASE("an implication that fails is contradicted") {
  const auto r = verify_implication(parse_claim("monotone implies wp => w"), 3);
  CHECK(r.status == ImplicationStatus::kRefuted);
  CHECK(r.outcome == Outcome::kContradicted);
  const auto open = verify_implication(parse_claim("monotone open w => w"), 3);
  CHECK(open.outcome == Outcome::kUnresolved);
}

TEST_CASE("battery at 4 elements") {
  const auto claims = implication_battery();
  const auto reports = verify_implications(claims, 4);
  REQUIRE(reports.size() == claims.size());
  for (const auto& r : reports) {
    CHECK_MESSAGE(r.outcome != Outcome::kContradicted, r.claim.name);
    if (r.claim.expected == Expectation::kImplies) CHECK_MESSAGE(!r.counterexample, r.claim.name);
    if (r.claim.expected == Expectation::kIndependent && r.claim.reference_size <= 4)
      CHECK_MESSAGE(r.outcome == Outcome::kAsExpected, r.claim.name);
    if (r.counterexample) CHECK(counterexample_reproduces(r.claim, *r.counterexample));
    CHECK(r.status == (r.counterexample ? ImplicationStatus::kRefuted : ImplicationStatus::kConfirmed));
  }
  CHECK(find(reports, "wp => w").counterexample->n == 3);
  // Independent claims backed by a fixture: the fixture itself refutes the implication.
  for (const auto& c : claims) {
    if (c.expected != Expectation::kIndependent) continue;
    const auto d = builtin_fixture(c.reference_fixture).document();
    CHECK(d.ground->size() == c.reference_size);
    Counterexample ce;
    ce.n = d.ground->size();
    if (d.transit) {
      ce.transit = *d.transit;
      ce.system = transit_sets(*d.transit);
    } else {
      ce.system = *d.system;
      if (c.domain != Domain::kSystems) ce.transit = canonical_transit_function(*d.system);
    }
    CHECK_MESSAGE(counterexample_reproduces(c, ce), c.name);
  }
}

TEST_CASE("battery is the same serially and in parallel") {
  const auto claims = implication_battery();
  const auto serial = verify_implications(claims, 4, ExecutionPolicy::serial());
  const auto parallel = verify_implications(claims, 4, ExecutionPolicy::with_workers(4));
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].instances_checked == parallel[i].instances_checked);
    CHECK(serial[i].hypothesis_instances == parallel[i].hypothesis_instances);
    CHECK(serial[i].counterexample.has_value() == parallel[i].counterexample.has_value());
    if (serial[i].counterexample) CHECK(serial[i].counterexample->index == parallel[i].counterexample->index);
  }
  CHECK(count_systems(t_systems(4), ExecutionPolicy::serial()) ==
        count_systems(t_systems(4), ExecutionPolicy::with_workers(3)));
}

TEST_CASE("census") {
  const auto one = census(1);
  CHECK(one.total == 1);
  for (const auto& row : one.rows) CHECK(row.count == 1);
  const auto three = census(3);
  CHECK(three.total == 8);
  const auto count = [&](const std::string& label) {
    for (const auto& row : three.rows)
      if (row.label == label) return row.count;
    FAIL("no row " << label);
    return std::uint64_t{0};
  };
  CHECK(count("w") <= count("mm"));
  CHECK(count("w") <= count("x'"));
  CHECK(count("uc") <= count("pyramidal"));
  // Rows agree with a direct count.
  for (const auto& row : three.rows) {
    std::uint64_t direct = 0;
    enumerate_monotone_tfs(3, [&](const TransitFunction& r) {
      direct += (evaluate_properties(r) & row.properties) == row.properties ? 1 : 0;
    });
    CHECK_MESSAGE(row.count == direct, row.label);
  }
  CHECK(census(4, ExecutionPolicy::serial()).rows.size() == census(4).rows.size());
}
