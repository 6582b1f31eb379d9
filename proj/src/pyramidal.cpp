#include "transit/pyramidal.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "transit/system_predicates.hpp"

namespace transit {

namespace {

// Singletons and X are intervals under every order.
std::vector<Subset> constraining(std::span<const Subset> clusters, std::size_t n) {
  const Subset full = Subset::full(n);
  std::vector<Subset> out;
  out.reserve(clusters.size());
  for (Subset c : clusters) {
    if (c.size() >= 2 && c != full) out.push_back(c);
  }
  return out;
}

class OrderSearch {
 public:
  OrderSearch(std::span<const Subset> clusters, std::size_t n) : clusters_(clusters), n_(n), full_(Subset::full(n)) {
    if (n_ <= 12) failed_small_.assign(std::size_t{1} << n_, 0);
    sequence_.reserve(n_);
  }

  std::optional<std::vector<std::size_t>> run() {
    if (extend(Subset{})) return sequence_;
    return std::nullopt;
  }

 private:
  bool known_failure(Subset placed) const {
    if (!failed_small_.empty()) return failed_small_[placed.bits()] != 0;
    return failed_large_.count(placed.bits()) != 0;
  }

  void mark_failure(Subset placed) {
    if (!failed_small_.empty()) {
      failed_small_[placed.bits()] = 1;
    } else {
      failed_large_.insert(placed.bits());
    }
  }

  bool extend(Subset placed) {
    if (placed == full_) return true;
    if (known_failure(placed)) return false;
    Subset allowed = full_ - placed;
    for (Subset c : clusters_) {
      if (c.intersects(placed) && !c.subset_of(placed)) allowed &= c;
    }
    for (std::size_t e : allowed) {
      sequence_.push_back(e);
      if (extend(placed.with(e))) return true;
      sequence_.pop_back();
    }
    mark_failure(placed);
    return false;
  }

  std::span<const Subset> clusters_;
  std::size_t n_;
  Subset full_;
  std::vector<std::uint8_t> failed_small_;
  std::unordered_set<std::uint64_t> failed_large_;
  std::vector<std::size_t> sequence_;
};

template <class Decide>
std::vector<Subset> shortest_infeasible_prefix(const std::vector<Subset>& clusters, std::size_t n, Decide decide) {
  // Feasibility is monotone in the prefix length; binary search for the first failing length.
  std::size_t lo = 0;                // prefix of length lo is feasible
  std::size_t hi = clusters.size();  // prefix of length hi is infeasible
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (decide(std::span<const Subset>(clusters.data(), mid), n)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {clusters.begin(), clusters.begin() + static_cast<std::ptrdiff_t>(hi)};
}

template <class Decide>
OrderSearchResult search(const SetSystem& system, Decide decide) {
  const std::size_t n = system.n();
  const auto relevant = constraining(system.clusters(), n);
  OrderSearchResult result;
  if (auto seq = decide(relevant, n)) {
    result.pre_pyramidal = true;
    result.order = CompatibleOrder(std::move(*seq));
    return result;
  }
  result.obstruction = shortest_infeasible_prefix(relevant, n, [&](std::span<const Subset> prefix, std::size_t m) {
    return decide(prefix, m).has_value();
  });
  return result;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_compatible_sequence(std::span<const Subset> clusters, std::size_t n) {
  if (n == 0 || n > kMaxElements) throw Error(ErrorCode::kOutOfRange, "ground set size must be in 1..64");
  const auto relevant = constraining(clusters, n);
  return OrderSearch(relevant, n).run();
}

std::optional<std::vector<std::size_t>> brute_force_sequence(std::span<const Subset> clusters, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kOutOfRange, "ground set must be nonempty");
  if (n > 10) throw Error(ErrorCode::kGroundSetTooLarge, "brute-force order search is limited to 10 elements");
  std::array<std::size_t, 10> perm{};
  std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), std::size_t{0});
  const std::span<const std::size_t> view(perm.data(), n);
  do {
    if (is_interval_certificate(clusters, view)) return std::vector<std::size_t>(view.begin(), view.end());
  } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));
  return std::nullopt;
}

bool is_interval_certificate(std::span<const Subset> clusters, std::span<const std::size_t> sequence) {
  std::array<std::size_t, kMaxElements> position{};
  position.fill(kMaxElements);
  for (std::size_t i = 0; i < sequence.size() && i < kMaxElements; ++i) {
    if (sequence[i] >= kMaxElements) return false;
    position[sequence[i]] = i;
  }
  for (Subset c : clusters) {
    std::size_t lo = kMaxElements;
    std::size_t hi = 0;
    for (std::size_t e : c) {
      if (position[e] == kMaxElements) return false;
      lo = std::min(lo, position[e]);
      hi = std::max(hi, position[e]);
    }
    if (!c.empty() && hi - lo + 1 != c.size()) return false;
  }
  return true;
}

OrderSearchResult find_compatible_order(const SetSystem& system) {
  return search(system, [](std::span<const Subset> clusters, std::size_t n) { return find_compatible_sequence(clusters, n); });
}

OrderSearchResult brute_force_order(const SetSystem& system) {
  if (system.n() > 10) throw Error(ErrorCode::kGroundSetTooLarge, "brute-force order search is limited to 10 elements");
  return search(system, [](std::span<const Subset> clusters, std::size_t n) { return brute_force_sequence(clusters, n); });
}

Verdict is_pyramidal(const SetSystem& system) {
  auto search_result = find_compatible_order(system);
  if (!search_result.pre_pyramidal) {
    return Verdict::fail("pyramidal", {}, std::move(search_result.obstruction), "not pre-pyramidal");
  }
  Verdict closed = check_system(system, SystemPredicate::kK2);
  if (!closed.holds) return Verdict::fail("pyramidal", {}, std::move(closed.sets), "K2");
  return Verdict::pass("pyramidal");
}

Verdict is_weakly_pyramidal(const SetSystem& system) {
  for (SystemPredicate p : {SystemPredicate::kWeakHierarchy, SystemPredicate::kWP}) {
    Verdict v = check_system(system, p);
    if (!v.holds) return Verdict::fail("weaklyPyramidal", std::move(v.elements), std::move(v.sets), std::string(tag(p)));
  }
  return Verdict::pass("weaklyPyramidal");
}

LadderReport classify_ladder(const SetSystem& system) {
  Verdict t = check_system(system, SystemPredicate::kTSystem);
  if (!t.holds) {
    throw Error(ErrorCode::kNotTSystem, "not a T-system (" + t.note + " fails)", t.elements, t.sets);
  }
  LadderReport report;
  const auto holds = [&](SystemPredicate p) { return check_system(system, p).holds; };
  report.hierarchy = holds(SystemPredicate::kH);
  report.paired_hierarchy = holds(SystemPredicate::kPairedH);
  report.binary_clustering = holds(SystemPredicate::kK1);
  report.union_closed_binary = report.binary_clustering && holds(SystemPredicate::kUC);
  report.weak_hierarchy = holds(SystemPredicate::kWeakHierarchy);
  report.weakly_pyramidal = report.weak_hierarchy && holds(SystemPredicate::kWP);
  auto search_result = find_compatible_order(system);
  report.pre_pyramidal = search_result.pre_pyramidal;
  report.order = std::move(search_result.order);
  report.pyramidal = report.pre_pyramidal && holds(SystemPredicate::kK2);
  return report;
}

}  // namespace transit
