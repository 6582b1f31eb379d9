#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "transit/model.hpp"
#include "transit/parallel.hpp"
#include "transit/system_predicates.hpp"
#include "transit/transit_axioms.hpp"

namespace transit {

// ---------------------------------------------------------------------------
// Exhaustive generators
// ---------------------------------------------------------------------------

inline constexpr std::size_t kMaxEnumerationSize = 5;
/// Enumerating every transit function (not only monotone ones) stops here.
inline constexpr std::size_t kMaxTransitEnumerationSize = 4;

struct EnumerationSpec {
  std::size_t n = 1;
  std::vector<SystemPredicate> filter;  // conjunction
  bool require_ground = false;          // X is always present
};

/// A candidate system is all singletons plus a selection of the subsets of
/// size >= 2 ("coordinates", canonical order); bit i of the candidate index
/// selects coordinate i. With `require_ground`, X is fixed in and not a coordinate.
std::vector<Subset> candidate_coordinates(std::size_t n, bool require_ground = false);
std::uint64_t candidate_count(const EnumerationSpec& spec);

/// Clusters of candidate `index` in canonical order (singletons first).
void decode_candidate(std::size_t n, std::span<const Subset> coordinates, std::uint64_t index, bool require_ground,
                      std::vector<Subset>& out);

/// KS, KR and KC together, via the pairwise minimal covers: every pair lies in
/// some cluster and the covers R(p,q) are exactly the clusters.
bool is_t_system_kernel(std::span<const Subset> clusters, std::size_t n);

/// Calls `visit` for every candidate passing the filter, in candidate order.
/// Throws kOutOfRange unless 1 <= n <= 5.
void enumerate_systems(const EnumerationSpec& spec, const std::function<void(const SetSystem&)>& visit);
std::uint64_t count_systems(const EnumerationSpec& spec, const ExecutionPolicy& policy = {});

/// Visits every T-system over n elements as (clusters in canonical order,
/// candidate index) without scanning the whole candidate space: the pairwise
/// covers R(p,q) are chosen pair by pair and pruned by monotonicity.
/// Branches partition the search; visiting order within a branch is fixed.
std::size_t t_system_branch_count(std::size_t n);
void walk_t_system_branch(std::size_t n, std::size_t branch,
                          const std::function<void(std::span<const Subset>, std::uint64_t)>& visit);
/// Candidate indices of all T-systems over n elements, ascending.
std::vector<std::uint64_t> t_system_indices(std::size_t n, const ExecutionPolicy& policy = {});

/// The canonical transit function of every T-system over n elements, in
/// candidate order; each monotone transit function appears exactly once.
void enumerate_monotone_tfs(std::size_t n, const std::function<void(const TransitFunction&)>& visit);

/// Every transit function over n <= 4 elements (monotone or not), ordered by
/// the extra members chosen for each pair in lexicographic pair order.
void enumerate_transit_functions(std::size_t n, const std::function<void(const TransitFunction&)>& visit);
std::uint64_t transit_function_count(std::size_t n);
TransitFunction decode_transit_function(std::size_t n, std::uint64_t index);

// ---------------------------------------------------------------------------
// Properties and implication claims
// ---------------------------------------------------------------------------

/// Everything a claim can mention. The first block mirrors TransitAxiom; the
/// rest are properties of a family of sets (for a transit function: of its
/// transit sets).
enum class Property : std::uint8_t {
  kM, kAPrime, kK, kW, kW1, kW2, kW3, kX, kXPrime, kU, kUC, kMM, kK3, kWP, kO, kOPrime,
  kW2Guarded,
  kHelly,            // pairwise intersecting triples share a point
  kPrePyramidal,     // "py"
  kPyramidal,
  kWeaklyPyramidal,
  kKS, kKR, kKC, kK1, kK2, kSysK3, kSysMM, kSysUC, kH, kPairedH, kWeakHierarchy, kWPrime, kSysWP,
  kTSystem, kBinaryClustering, kClusteringSystem,
  kCount_
};

inline constexpr std::size_t kPropertyCount = static_cast<std::size_t>(Property::kCount_);
using PropertyMask = std::uint64_t;

constexpr PropertyMask bit(Property p) { return PropertyMask{1} << static_cast<unsigned>(p); }
Property to_property(TransitAxiom axiom);
Property to_property(SystemPredicate predicate);
std::string_view tag(Property p);
std::optional<Property> parse_property(std::string_view tag);
/// True for properties defined on a transit function rather than a set family.
bool is_transit_only(Property p);
std::string format_mask(PropertyMask mask);  // "uc & w"

inline constexpr PropertyMask kAllProperties = (PropertyMask{1} << kPropertyCount) - 1;

/// Properties of `r` (set-family ones on its transit sets). Only the bits in
/// `wanted` are computed; the others are reported as 0.
PropertyMask evaluate_properties(const TransitFunction& r, PropertyMask wanted = kAllProperties);
/// Set-family properties only.
PropertyMask evaluate_set_properties(const SetSystem& system, PropertyMask wanted = kAllProperties);

enum class Domain {
  kMonotone,  // all monotone transit functions (equivalently: T-systems)
  kTransit,   // all transit functions, n <= 4
  kSystems,   // all set systems containing the singletons, n <= 4
};

/// Largest size a sweep over `d` reaches.
std::size_t domain_limit(Domain d);
std::string_view to_string(Domain d);

enum class Expectation { kImplies, kIndependent, kOpen };
std::string_view to_string(Expectation e);

struct ImplicationClaim {
  std::string name;
  Domain domain = Domain::kMonotone;
  PropertyMask hypothesis = 0;  // conjunction; 0 means "true"
  PropertyMask conclusion = 0;  // conjunction
  Expectation expected = Expectation::kImplies;
  /// For independence claims backed by a worked example: its fixture and size.
  std::string reference_fixture;
  std::size_t reference_size = 0;
};

enum class ImplicationStatus { kConfirmed, kRefuted };
std::string_view to_string(ImplicationStatus s);

/// How a report relates to the claim's expectation. A bounded sweep can
/// contradict an implication but never an independence claim: without a
/// counterexample at the sizes swept that claim stays unresolved.
enum class Outcome { kAsExpected, kContradicted, kUnresolved };
std::string_view to_string(Outcome o);

struct Counterexample {
  std::size_t n = 0;
  std::uint64_t index = 0;  // position in the domain's enumeration order at size n
  std::optional<TransitFunction> transit;
  std::optional<SetSystem> system;  // the system itself, or the transit sets
};

struct ImplicationReport {
  ImplicationClaim claim;
  std::size_t n_max = 0;                 // largest size actually swept
  std::uint64_t instances_checked = 0;   // all instances of the domain, sizes 1..n_max
  std::uint64_t hypothesis_instances = 0;
  std::optional<Counterexample> counterexample;  // smallest size, then first in order
  ImplicationStatus status = ImplicationStatus::kConfirmed;  // of the implication itself
  Outcome outcome = Outcome::kAsExpected;
};

/// Parses "monotone implies uc & m => w & wp"; throws kParse / kUnknownTag.
ImplicationClaim parse_claim(std::string_view line);
std::vector<ImplicationClaim> parse_claims(std::string_view text);
std::string format_claim(const ImplicationClaim& claim);

/// The implications and non-implications established for monotone transit
/// functions and their set systems, as a canned claim list.
std::vector<ImplicationClaim> implication_battery();

/// Sweeps every claim's domain for sizes 1..min(n_max, domain_limit) and
/// reports each claim. Throws kOutOfRange for n_max outside 1..5.
std::vector<ImplicationReport> verify_implications(std::span<const ImplicationClaim> claims, std::size_t n_max,
                                                   const ExecutionPolicy& policy = {});
ImplicationReport verify_implication(const ImplicationClaim& claim, std::size_t n_max, const ExecutionPolicy& policy = {});

/// Re-runs the checkers on a stored counterexample: hypothesis true, conclusion false.
bool counterexample_reproduces(const ImplicationClaim& claim, const Counterexample& ce);

struct CensusRow {
  std::string label;
  PropertyMask properties = 0;
  std::uint64_t count = 0;
};

struct Census {
  std::size_t n = 0;
  std::uint64_t total = 0;  // monotone transit functions (labelled, not up to isomorphism)
  std::vector<CensusRow> rows;
};

/// Number of monotone transit functions on n labelled elements satisfying each
/// entry of a fixed list of property combinations.
Census census(std::size_t n, const ExecutionPolicy& policy = {});

}  // namespace transit
