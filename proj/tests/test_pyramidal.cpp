#include "doctest.h"

#include <random>

#include "support.hpp"
#include "transit/fixtures.hpp"
#include "transit/pyramidal.hpp"

using namespace transit;

namespace {

SetSystem fixture_system(const std::string& id) {
  const auto d = builtin_fixture(id).document();
  return d.system ? *d.system : transit_sets(*d.transit);
}

std::vector<std::string> order_labels(const SetSystem& s, const OrderSearchResult& r) {
  REQUIRE(r.order);
  return labels_of(*s.ground(), r.order->sequence());
}

}  // namespace

TEST_CASE("path of edges has the natural order") {
  const auto s = fixture_system("path4");
  const auto r = find_compatible_order(s);
  CHECK(r.pre_pyramidal);
  CHECK(order_labels(s, r) == std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(is_pyramidal(s).holds);
}

TEST_CASE("three intervals keep their left-to-right order") {
  const auto s = fixture_system("three-intervals");
  const auto r = find_compatible_order(s);
  CHECK(order_labels(s, r) == std::vector<std::string>{"x", "u", "z", "v", "y", "w"});
  CHECK(is_pyramidal(s).holds);
}

TEST_CASE("four-cycle has no compatible order") {
  const auto s = fixture_system("four-cycle");
  for (const auto& r : {find_compatible_order(s), brute_force_order(s)}) {
    CHECK_FALSE(r.pre_pyramidal);
    CHECK_FALSE(r.order);
    CHECK(r.obstruction.size() == 4);
  }
  CHECK_FALSE(is_pyramidal(s).holds);
  CHECK(is_weakly_pyramidal(s).holds);
}

TEST_CASE("singletons and X alone fit any order") {
  const auto s = parse_system("elements: a b c\na\nb\nc\na b c\n");
  const auto r = find_compatible_order(s);
  CHECK(r.pre_pyramidal);
  CHECK(r.order->sequence() == std::vector<std::size_t>{0, 1, 2});
  CHECK(brute_force_order(parse_system("elements: a b\n")).pre_pyramidal);
}

TEST_CASE("weakly pyramidal needs WP") {
  CHECK_FALSE(is_weakly_pyramidal(fixture_system("w-not-wp")).holds);
}

TEST_CASE("brute force refuses large ground sets") {
  const auto s = SetSystem(GroundSet::standard(11), {});
  CHECK(support::error_code([&] { brute_force_order(s); }) == ErrorCode::kGroundSetTooLarge);
  CHECK(find_compatible_order(s).pre_pyramidal);
}

TEST_CASE("ladder examples") {
  const auto c1 = classify_ladder(fixture_system("ucb-not-paired"));
  CHECK(c1.union_closed_binary);
  CHECK_FALSE(c1.paired_hierarchy);
  const auto c2 = classify_ladder(fixture_system("paired-not-ucb"));
  CHECK(c2.paired_hierarchy);
  CHECK_FALSE(c2.union_closed_binary);
  const auto c3 = classify_ladder(fixture_system("ucb-path3"));
  CHECK(c3.union_closed_binary);
  CHECK_FALSE(c3.hierarchy);
  const auto three = classify_ladder(fixture_system("mm-not-w"));
  CHECK(three.binary_clustering);
  CHECK_FALSE(three.weak_hierarchy);
  CHECK(support::error_code([] { classify_ladder(parse_system("elements: a b\na b\n")); }) ==
        ErrorCode::kNotTSystem);
}

TEST_CASE("order search agrees with brute force and the oracle up to 4 elements") {
  for (int n = 1; n <= 4; ++n) {
    oracle::all_families(n, false, [&](const oracle::Family& f) {
      const auto s = support::from_family(f);
      const auto fast = find_compatible_order(s);
      const auto slow = brute_force_order(s);
      REQUIRE(fast.pre_pyramidal == slow.pre_pyramidal);
      REQUIRE(fast.pre_pyramidal == oracle::pre_pyramidal(f));
      CHECK(fast.pre_pyramidal == fast.order.has_value());
      if (fast.order) {
        const auto& seq = fast.order->sequence();
        CHECK(is_interval_certificate(s.clusters(), seq));
        std::vector<std::size_t> rev(seq.rbegin(), seq.rend());
        CHECK(seq <= rev);
        CHECK(fast.obstruction.empty());
      } else {
        // The obstruction admits no order, while dropping its last cluster does.
        CHECK_FALSE(find_compatible_sequence(fast.obstruction, s.n()));
        const std::span<const Subset> shorter(fast.obstruction.data(), fast.obstruction.size() - 1);
        CHECK(find_compatible_sequence(shorter, s.n()));
        CHECK(fast.obstruction == slow.obstruction);
      }
    });
  }
}

TEST_CASE("order search agrees with brute force on random systems of 6 and 7 elements") {
  std::mt19937_64 rng(12345);
  for (int n : {6, 7}) {
    const std::uint64_t universe = (std::uint64_t{1} << n) - 1;
    for (int trial = 0; trial < 2000; ++trial) {
      std::vector<Subset> clusters;
      const int m = static_cast<int>(rng() % 7) + 1;
      for (int i = 0; i < m; ++i) {
        const std::uint64_t c = rng() & universe;
        if (c != 0) clusters.emplace_back(c);
      }
      const SetSystem s(GroundSet::standard(static_cast<std::size_t>(n)), clusters);
      const auto fast = find_compatible_order(s);
      REQUIRE(fast.pre_pyramidal == brute_force_order(s).pre_pyramidal);
      if (fast.order) CHECK(is_interval_certificate(s.clusters(), fast.order->sequence()));
    }
  }
}

TEST_CASE("pre-pyramidal systems are weakly pyramidal") {
  oracle::all_families(4, true, [](const oracle::Family& f) {
    const auto s = support::from_family(f);
    if (find_compatible_order(s).pre_pyramidal) CHECK(is_weakly_pyramidal(s).holds);
  });
}

TEST_CASE("union-closed systems are pre-pyramidal exactly when weak hierarchies with WP") {
  oracle::all_families(4, true, [](const oracle::Family& f) {
    const auto s = support::from_family(f);
    if (!check_system(s, SystemPredicate::kUC).holds) return;
    const bool whp = check_weak_hierarchy(s).holds && check_system(s, SystemPredicate::kWP).holds;
    CHECK(find_compatible_order(s).pre_pyramidal == whp);
  });
}

TEST_CASE("transit sets of monotone functions: pre-pyramidal implies pyramidal") {
  for (std::size_t n = 1; n <= 4; ++n) {
    enumerate_monotone_tfs(n, [](const TransitFunction& r) {
      const auto s = transit_sets(r);
      if (find_compatible_order(s).pre_pyramidal) CHECK(is_pyramidal(s).holds);
      if (check_uc(r).holds) CHECK(find_compatible_order(s).pre_pyramidal);
      if (is_pyramidal(s).holds) CHECK(check_o_family(r, OVariant::kO).holds);
    });
  }
}

TEST_CASE("nebesky test decides pre-pyramidality of the closure for 4 elements") {
  const auto g = GroundSet::standard(4);
  for (std::uint64_t a = 1; a < 16; ++a)
    for (std::uint64_t b = 1; b < 16; ++b)
      for (std::uint64_t c = 1; c < 16; ++c) {
        const SetSystem closure = union_closure(SetSystem(g, {Subset(a), Subset(b), Subset(c)}));
        CHECK(nebesky_triple_test(Subset(a), Subset(b), Subset(c)).holds ==
              find_compatible_order(closure).pre_pyramidal);
      }
}
