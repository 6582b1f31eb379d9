#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "transit/model.hpp"

namespace transit {

enum class SystemPredicate {
  kKS,  // all singletons
  kKR,  // every cluster is the least cluster containing some pair
  kKC,  // the clusters containing any p, q meet in a cluster
  kK1,  // X is a cluster
  kK2,  // closed under nonempty intersection
  kK3,  // intersecting clusters have a unique minimal common cover
  kMM,
  kUC,  // closed under union of intersecting clusters
  kH,   // hierarchy
  kPairedH,
  kWeakHierarchy,
  kWPrime,
  kWP,
  kTSystem,           // KS, KR, KC
  kBinaryClustering,  // T-system with K1
  kClusteringSystem,  // singletons and X
};

inline constexpr std::array<SystemPredicate, 16> kAllSystemPredicates = {
    SystemPredicate::kKS,      SystemPredicate::kKR,     SystemPredicate::kKC,
    SystemPredicate::kK1,      SystemPredicate::kK2,     SystemPredicate::kK3,
    SystemPredicate::kMM,      SystemPredicate::kUC,     SystemPredicate::kH,
    SystemPredicate::kPairedH, SystemPredicate::kWeakHierarchy, SystemPredicate::kWPrime,
    SystemPredicate::kWP,      SystemPredicate::kTSystem, SystemPredicate::kBinaryClustering,
    SystemPredicate::kClusteringSystem,
};

std::string_view tag(SystemPredicate predicate);
std::optional<SystemPredicate> parse_system_predicate(std::string_view tag);

/// Decides one predicate. Cluster witnesses are reported in canonical order;
/// the first violation in that order is returned.
///
/// Witness layouts: KS (x); KR (C); KC (p, q); K1 elements outside the largest
/// cluster, sets {largest}; K2/K3/MM/UC/H (C', C''); pairedH (C, D1, D2);
/// weakHierarchy/WP (A, B, C); W' the ordered triple (A, B, C). Compound
/// predicates report the first failing component, named in `note`.
Verdict check_system(const SetSystem& system, SystemPredicate predicate);

/// A n B n C is one of A n B, A n C, B n C for every triple of clusters.
Verdict check_weak_hierarchy(const SetSystem& system);

/// For all ordered triples: A meets B - C and C - B  =>  B n C inside A.
Verdict check_W_prime(const SetSystem& system);

/// The smallest family containing the clusters and all singletons that is
/// closed under union of intersecting members.
SetSystem union_closure(const SetSystem& system);

/// Both conditions characterizing when the union closure of {A, B, C} is
/// pre-pyramidal. Witness sets are the triple in the failing role order; note
/// is "W'" or "WP".
Verdict nebesky_triple_test(Subset a, Subset b, Subset c);

/// The least cluster containing `target`, if there is exactly one.
std::optional<Subset> unique_minimal_cover(std::span<const Subset> clusters, Subset target);

/// Re-checks a failing verdict against the predicate's definition at its witness.
bool witness_violates(const SetSystem& system, const Verdict& verdict);

}  // namespace transit
