#include "transit/model.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace transit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCapacityExceeded: return "capacity-exceeded";
    case ErrorCode::kEmptyGroundSet: return "empty-ground-set";
    case ErrorCode::kDuplicateLabel: return "duplicate-label";
    case ErrorCode::kInvalidLabel: return "invalid-label";
    case ErrorCode::kUnknownLabel: return "unknown-label";
    case ErrorCode::kElementOutOfRange: return "element-out-of-range";
    case ErrorCode::kEmptyCluster: return "empty-cluster";
    case ErrorCode::kGroundSetMismatch: return "ground-set-mismatch";
    case ErrorCode::kMissingPair: return "missing-pair";
    case ErrorCode::kDuplicatePair: return "duplicate-pair";
    case ErrorCode::kDiagonalEntry: return "diagonal-entry";
    case ErrorCode::kTransitAxiomViolated: return "t1-violated";
    case ErrorCode::kNoCover: return "no-cover";
    case ErrorCode::kNotUniqueMinimum: return "not-unique-minimum";
    case ErrorCode::kNotTSystem: return "not-t-system";
    case ErrorCode::kGroundSetTooLarge: return "ground-set-too-large";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kUnknownTag: return "unknown-tag";
  }
  return "unknown";
}

namespace {

bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#' || c == ':' || c == ',' || c == '{' ||
           c == '}';
  });
}

}  // namespace

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorCode::kEmptyGroundSet, "ground set must have at least one element");
  if (labels_.size() > kMaxElements) {
    throw Error(ErrorCode::kCapacityExceeded,
                "ground set has " + std::to_string(labels_.size()) + " elements; at most 64 are supported");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!valid_label(labels_[i])) throw Error(ErrorCode::kInvalidLabel, "invalid element label '" + labels_[i] + "'");
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorCode::kDuplicateLabel, "duplicate element label '" + labels_[i] + "'",
                  {index_.at(labels_[i]), i});
    }
  }
}

std::shared_ptr<const GroundSet> GroundSet::standard(std::size_t n) {
  static std::mutex mutex;
  static std::array<std::shared_ptr<const GroundSet>, kMaxElements + 1> cache;
  if (n == 0 || n > kMaxElements) {
    throw Error(ErrorCode::kCapacityExceeded, "standard ground set size must be in 1..64");
  }
  std::lock_guard lock(mutex);
  if (!cache[n]) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i + 1));
    }
    cache[n] = std::make_shared<const GroundSet>(std::move(labels));
  }
  return cache[n];
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t e : s) {
    if (!first) out += ',';
    first = false;
    out += e < size() ? labels_[e] : "#" + std::to_string(e);
  }
  out += '}';
  return out;
}

GroundSetPtr make_ground_set(std::vector<std::string> labels) {
  return std::make_shared<const GroundSet>(std::move(labels));
}

bool same_ground(const GroundSetPtr& a, const GroundSetPtr& b) { return a == b || (a && b && *a == *b); }

SetSystem::SetSystem(GroundSetPtr ground, std::vector<Subset> clusters)
    : ground_(std::move(ground)), clusters_(std::move(clusters)) {
  if (!ground_) throw Error(ErrorCode::kEmptyGroundSet, "set system needs a ground set");
  const Subset full = ground_->full();
  for (Subset c : clusters_) {
    if (c.empty()) throw Error(ErrorCode::kEmptyCluster, "the empty set is never a cluster");
    if (!c.subset_of(full)) {
      throw Error(ErrorCode::kElementOutOfRange, "cluster has elements outside the ground set", {}, {c});
    }
  }
  std::sort(clusters_.begin(), clusters_.end(), CanonicalLess{});
  clusters_.erase(std::unique(clusters_.begin(), clusters_.end()), clusters_.end());
}

bool SetSystem::contains(Subset s) const {
  return std::binary_search(clusters_.begin(), clusters_.end(), s, CanonicalLess{});
}

SetSystem SetSystem::with_singletons() const {
  std::vector<Subset> all(clusters_.begin(), clusters_.end());
  for (std::size_t e = 0; e < n(); ++e) all.push_back(Subset::singleton(e));
  return SetSystem(ground_, std::move(all));
}

bool SetSystem::operator==(const SetSystem& other) const {
  return same_ground(ground_, other.ground_) && clusters_ == other.clusters_;
}

TransitFunction::TransitFunction(GroundSetPtr ground, std::vector<Subset> table)
    : ground_(std::move(ground)), table_(std::move(table)) {
  if (!ground_) throw Error(ErrorCode::kEmptyGroundSet, "transit function needs a ground set");
  const std::size_t size = n();
  if (table_.size() != size * size) throw Error(ErrorCode::kMissingPair, "transit table has the wrong size");
  const Subset full = ground_->full();
  for (std::size_t u = 0; u < size; ++u) {
    if (at(u, u) != Subset::singleton(u)) {
      throw Error(ErrorCode::kDiagonalEntry, "R(u,u) must equal {u}", {u}, {at(u, u)});
    }
    for (std::size_t v = u + 1; v < size; ++v) {
      const Subset r = at(u, v);
      if (r != at(v, u)) throw Error(ErrorCode::kMissingPair, "transit table is not symmetric", {u, v});
      if (!r.subset_of(full)) throw Error(ErrorCode::kElementOutOfRange, "transit set leaves the ground set", {u, v}, {r});
      if (!r.contains(u) || !r.contains(v)) {
        throw Error(ErrorCode::kTransitAxiomViolated,
                    "R(" + ground_->label(u) + "," + ground_->label(v) + ") = " + ground_->format(r) +
                        " must contain both endpoints",
                    {u, v}, {r});
      }
    }
  }
}

bool TransitFunction::operator==(const TransitFunction& other) const {
  return same_ground(ground_, other.ground_) && table_ == other.table_;
}

TransitFunction make_transit_function(GroundSetPtr ground, std::span<const PairAssignment> assignments) {
  if (!ground) throw Error(ErrorCode::kEmptyGroundSet, "transit function needs a ground set");
  const std::size_t n = ground->size();
  std::vector<Subset> table(n * n);
  std::vector<bool> seen(n * n, false);
  for (std::size_t e = 0; e < n; ++e) table[e * n + e] = Subset::singleton(e);
  for (const PairAssignment& a : assignments) {
    if (a.u >= n || a.v >= n) throw Error(ErrorCode::kElementOutOfRange, "pair element outside the ground set");
    if (a.u == a.v) {
      throw Error(ErrorCode::kDiagonalEntry, "R(u,u) = {u} is implicit and must not be assigned", {a.u});
    }
    const std::size_t key = std::min(a.u, a.v) * n + std::max(a.u, a.v);
    if (seen[key]) {
      throw Error(ErrorCode::kDuplicatePair,
                  "pair {" + ground->label(a.u) + "," + ground->label(a.v) + "} assigned twice", {a.u, a.v});
    }
    seen[key] = true;
    if (!a.members.subset_of(ground->full())) {
      throw Error(ErrorCode::kGroundSetMismatch, "transit set is not over this ground set", {a.u, a.v}, {a.members});
    }
    table[a.u * n + a.v] = a.members;
    table[a.v * n + a.u] = a.members;
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!seen[u * n + v]) {
        throw Error(ErrorCode::kMissingPair, "no transit set given for {" + ground->label(u) + "," + ground->label(v) + "}",
                    {u, v});
      }
    }
  }
  return TransitFunction(std::move(ground), std::move(table));
}

TransitFunction canonical_transit_function(const SetSystem& system) {
  const std::size_t n = system.n();
  std::vector<Subset> table(n * n);
  for (std::size_t e = 0; e < n; ++e) table[e * n + e] = Subset::singleton(e);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const Subset target = Subset::pair(x, y);
      Subset meet = system.ground()->full();
      bool covered = false;
      for (Subset c : system.clusters()) {
        if (c.contains_all(target)) {
          meet &= c;
          covered = true;
        }
      }
      if (!covered) {
        const auto& g = *system.ground();
        throw Error(ErrorCode::kNoCover, "no cluster contains {" + g.label(x) + "," + g.label(y) + "}", {x, y});
      }
      table[x * n + y] = meet;
      table[y * n + x] = meet;
    }
  }
  return TransitFunction(system.ground(), std::move(table));
}

SetSystem transit_sets(const TransitFunction& r) {
  const std::size_t n = r.n();
  std::vector<Subset> sets;
  sets.reserve(n * (n + 1) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) sets.push_back(r.at(u, v));
  }
  return SetSystem(r.ground(), std::move(sets));
}

Subset minimal_cluster_containing(const SetSystem& system, Subset target) {
  std::vector<Subset> minimal;
  for (Subset c : system.clusters()) {
    if (!c.contains_all(target)) continue;
    bool dominated = false;
    for (Subset d : system.clusters()) {
      if (d != c && d.contains_all(target) && d.subset_of(c)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(c);
  }
  const auto& g = *system.ground();
  if (minimal.empty()) {
    throw Error(ErrorCode::kNoCover, "no cluster contains " + g.format(target), target.elements());
  }
  if (minimal.size() > 1) {
    std::string names;
    for (Subset m : minimal) names += (names.empty() ? "" : ", ") + g.format(m);
    throw Error(ErrorCode::kNotUniqueMinimum, "inclusion-minimal covers of " + g.format(target) + " are not unique: " + names,
                target.elements(), minimal);
  }
  return minimal.front();
}

Subset minimal_cluster_containing(const SetSystem& system, std::size_t x, std::size_t y) {
  if (x >= system.n() || y >= system.n()) throw Error(ErrorCode::kElementOutOfRange, "element outside the ground set");
  return minimal_cluster_containing(system, Subset::pair(x, y));
}

CompatibleOrder::CompatibleOrder(std::vector<std::size_t> sequence) : sequence_(std::move(sequence)) {
  position_.assign(sequence_.size(), sequence_.size());
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    const std::size_t e = sequence_[i];
    if (e >= sequence_.size() || position_[e] != sequence_.size()) {
      throw Error(ErrorCode::kOutOfRange, "order is not a permutation of the ground set");
    }
    position_[e] = i;
  }
}

bool CompatibleOrder::is_interval(Subset s) const {
  if (s.empty()) return true;
  std::size_t lo = sequence_.size();
  std::size_t hi = 0;
  for (std::size_t e : s) {
    if (e >= position_.size()) return false;
    lo = std::min(lo, position_[e]);
    hi = std::max(hi, position_[e]);
  }
  return hi - lo + 1 == s.size();
}

}  // namespace transit
