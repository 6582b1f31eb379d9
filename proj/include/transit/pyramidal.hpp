#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "transit/model.hpp"

namespace transit {

/// Result of searching for a total order under which every cluster is an interval.
struct OrderSearchResult {
  bool pre_pyramidal = false;
  std::optional<CompatibleOrder> order;
  /// Shortest prefix of the non-trivial clusters (canonical order; singletons
  /// and X skipped) that admits no compatible order. Empty when pre-pyramidal.
  std::vector<Subset> obstruction;

  bool operator==(const OrderSearchResult&) const = default;
};

/// Backtracking search that places elements left to right. A cluster that has
/// been entered but not finished must receive the next element. Failed
/// placement states (sets of placed elements) are memoized. Returns the
/// lexicographically smallest compatible sequence, which is never larger than
/// its own reverse.
std::optional<std::vector<std::size_t>> find_compatible_sequence(std::span<const Subset> clusters, std::size_t n);

/// Tries all n! permutations in lexicographic order. Throws kGroundSetTooLarge for n > 10.
std::optional<std::vector<std::size_t>> brute_force_sequence(std::span<const Subset> clusters, std::size_t n);

/// True when every cluster occupies consecutive positions of `sequence`.
bool is_interval_certificate(std::span<const Subset> clusters, std::span<const std::size_t> sequence);

OrderSearchResult find_compatible_order(const SetSystem& system);
OrderSearchResult brute_force_order(const SetSystem& system);

/// Pre-pyramidal and closed under nonempty intersection.
Verdict is_pyramidal(const SetSystem& system);
/// Weak hierarchy satisfying (WP).
Verdict is_weakly_pyramidal(const SetSystem& system);

struct LadderReport {
  bool hierarchy = false;
  bool paired_hierarchy = false;
  bool union_closed_binary = false;  // ucb
  bool pyramidal = false;
  bool pre_pyramidal = false;
  bool weakly_pyramidal = false;
  bool weak_hierarchy = false;
  bool binary_clustering = false;
  std::optional<CompatibleOrder> order;

  bool operator==(const LadderReport&) const = default;
};

/// Membership in each class from hierarchies up to weak hierarchies.
/// Throws kNotTSystem unless the system satisfies KS, KR and KC.
LadderReport classify_ladder(const SetSystem& system);

}  // namespace transit
