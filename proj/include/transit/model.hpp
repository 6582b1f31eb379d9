#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "transit/error.hpp"
#include "transit/subset.hpp"

namespace transit {

/// The ordered universe X. Element identity is the index of its label.
class GroundSet {
 public:
  /// Labels must be unique, nonempty, and free of whitespace, '#', ':', ',', braces.
  explicit GroundSet(std::vector<std::string> labels);

  /// Shared ground set labelled a, b, c, ... (then e27, e28, ... past z).
  static std::shared_ptr<const GroundSet> standard(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  Subset full() const { return Subset::full(size()); }

  /// "{a,b,c}" in element order.
  std::string format(Subset s) const;

  bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using GroundSetPtr = std::shared_ptr<const GroundSet>;

GroundSetPtr make_ground_set(std::vector<std::string> labels);

bool same_ground(const GroundSetPtr& a, const GroundSetPtr& b);

/// A duplicate-free family of nonempty clusters over one ground set, kept in
/// canonical order (by size, then lexicographically).
class SetSystem {
 public:
  /// Validates every cluster (nonempty, inside the ground set); merges duplicates.
  SetSystem(GroundSetPtr ground, std::vector<Subset> clusters);

  const GroundSetPtr& ground() const { return ground_; }
  std::size_t n() const { return ground_->size(); }
  std::span<const Subset> clusters() const { return clusters_; }
  std::size_t size() const { return clusters_.size(); }
  bool contains(Subset s) const;

  /// Copy with every singleton {x} added.
  SetSystem with_singletons() const;

  bool operator==(const SetSystem& other) const;

 private:
  GroundSetPtr ground_;
  std::vector<Subset> clusters_;
};

/// A symmetric map R: X x X -> 2^X with u, v in R(u,v) and R(u,u) = {u}.
class TransitFunction {
 public:
  /// `table` holds R(u,v) at u * n + v. Checks symmetry, (t1), and the
  /// diagonal; throws Error on violation.
  TransitFunction(GroundSetPtr ground, std::vector<Subset> table);

  const GroundSetPtr& ground() const { return ground_; }
  std::size_t n() const { return ground_->size(); }
  Subset at(std::size_t u, std::size_t v) const { return table_[u * n() + v]; }

  bool operator==(const TransitFunction& other) const;

 private:
  GroundSetPtr ground_;
  std::vector<Subset> table_;
};

struct PairAssignment {
  std::size_t u;
  std::size_t v;
  Subset members;
};

/// Builds R from one assignment per unordered pair u != v. R(u,u) = {u} is implied.
TransitFunction make_transit_function(GroundSetPtr ground, std::span<const PairAssignment> assignments);

/// R_C(x,y): intersection of every cluster containing both x and y.
/// Throws kNoCover (with the pair) when some pair lies in no cluster.
TransitFunction canonical_transit_function(const SetSystem& system);

/// C_R: all transit sets R(x,y), singletons included.
SetSystem transit_sets(const TransitFunction& r);

/// Unique inclusion-minimal cluster containing `target`.
/// Throws kNoCover, or kNotUniqueMinimum with the competing minimal clusters.
Subset minimal_cluster_containing(const SetSystem& system, Subset target);
Subset minimal_cluster_containing(const SetSystem& system, std::size_t x, std::size_t y);

/// A total order on the ground set, stored as the left-to-right sequence.
class CompatibleOrder {
 public:
  explicit CompatibleOrder(std::vector<std::size_t> sequence);

  const std::vector<std::size_t>& sequence() const { return sequence_; }
  std::size_t position(std::size_t e) const { return position_.at(e); }
  std::size_t size() const { return sequence_.size(); }

  /// True when the members of `s` occupy consecutive positions.
  bool is_interval(Subset s) const;

  bool operator==(const CompatibleOrder& other) const { return sequence_ == other.sequence_; }

 private:
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> position_;
};

/// Outcome of one axiom or predicate check.
///
/// A failing verdict always carries a witness (elements and/or clusters) whose
/// layout is documented per checker; `note` names the failing component of a
/// compound predicate or adds a short detail.
struct Verdict {
  std::string tag;
  bool holds = true;
  std::vector<std::size_t> elements;
  std::vector<Subset> sets;
  std::string note;

  static Verdict pass(std::string tag) { return Verdict{std::move(tag), true, {}, {}, {}}; }
  static Verdict fail(std::string tag, std::vector<std::size_t> elements, std::vector<Subset> sets = {},
                      std::string note = {}) {
    return Verdict{std::move(tag), false, std::move(elements), std::move(sets), std::move(note)};
  }

  bool has_witness() const { return !elements.empty() || !sets.empty(); }
  explicit operator bool() const { return holds; }
  bool operator==(const Verdict&) const = default;
};

}  // namespace transit
