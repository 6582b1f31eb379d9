#include "transit/enumeration.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "transit/pyramidal.hpp"

namespace transit {

namespace {

constexpr std::uint64_t kChunk = 1U << 12;

void require_size(std::size_t n, std::size_t max, const char* what) {
  if (n < 1 || n > max) {
    throw Error(ErrorCode::kOutOfRange,
                std::string(what) + " supports 1 <= n <= " + std::to_string(max) + ", got " + std::to_string(n));
  }
}

bool passes_filter(const EnumerationSpec& spec, std::span<const Subset> clusters, const GroundSetPtr& ground) {
  std::optional<SetSystem> system;
  for (SystemPredicate p : spec.filter) {
    if (p == SystemPredicate::kTSystem) {
      if (!is_t_system_kernel(clusters, spec.n)) return false;
      continue;
    }
    if (!system) system.emplace(ground, std::vector<Subset>(clusters.begin(), clusters.end()));
    if (!check_system(*system, p).holds) return false;
  }
  return true;
}

struct PairIndex {
  std::size_t u;
  std::size_t v;
};

std::vector<PairIndex> lex_pairs(std::size_t n) {
  std::vector<PairIndex> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  return pairs;
}

bool helly(std::span<const Subset> c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!c[i].intersects(c[j])) continue;
      for (std::size_t k = j + 1; k < c.size(); ++k) {
        if (c[i].intersects(c[k]) && c[j].intersects(c[k]) && (c[i] & c[j] & c[k]).empty()) return false;
      }
    }
  }
  return true;
}

constexpr PropertyMask kTransitOnlyMask = (PropertyMask{1} << (static_cast<unsigned>(Property::kW2Guarded) + 1)) - 1;

}  // namespace

// --- generators -------------------------------------------------------------

std::vector<Subset> candidate_coordinates(std::size_t n, bool require_ground) {
  require_size(n, kMaxEnumerationSize, "set-system enumeration");
  const Subset full = Subset::full(n);
  std::vector<Subset> coords;
  for (std::uint64_t bits = 1; bits <= full.bits(); ++bits) {
    const Subset s(bits);
    if (s.size() >= 2 && !(require_ground && s == full)) coords.push_back(s);
  }
  std::sort(coords.begin(), coords.end(), CanonicalLess{});
  return coords;
}

std::uint64_t candidate_count(const EnumerationSpec& spec) {
  return std::uint64_t{1} << candidate_coordinates(spec.n, spec.require_ground).size();
}

void decode_candidate(std::size_t n, std::span<const Subset> coordinates, std::uint64_t index, bool require_ground,
                      std::vector<Subset>& out) {
  out.clear();
  for (std::size_t e = 0; e < n; ++e) out.push_back(Subset::singleton(e));
  for (std::size_t i : Subset(index)) out.push_back(coordinates[i]);
  if (require_ground && n >= 2) out.push_back(Subset::full(n));
}

bool is_t_system_kernel(std::span<const Subset> clusters, std::size_t n) {
  const Subset full = Subset::full(n);
  Subset singletons;
  for (Subset c : clusters) {
    if (c.size() == 1) singletons |= c;
  }
  if (singletons != full) return false;

  const auto member = [&](Subset s) { return std::find(clusters.begin(), clusters.end(), s) != clusters.end(); };
  std::vector<Subset> covers;
  covers.reserve(n * (n - 1) / 2);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const Subset pq = Subset::pair(p, q);
      Subset meet = full;
      bool covered = false;
      for (Subset c : clusters) {
        if (c.contains_all(pq)) {
          meet &= c;
          covered = true;
        }
      }
      if (!covered || !member(meet)) return false;
      covers.push_back(meet);
    }
  }
  for (Subset c : clusters) {
    if (c.size() >= 2 && std::find(covers.begin(), covers.end(), c) == covers.end()) return false;
  }
  return true;
}

void enumerate_systems(const EnumerationSpec& spec, const std::function<void(const SetSystem&)>& visit) {
  require_size(spec.n, kMaxEnumerationSize, "set-system enumeration");
  const auto coords = candidate_coordinates(spec.n, spec.require_ground);
  const auto ground = GroundSet::standard(spec.n);
  const std::uint64_t total = std::uint64_t{1} << coords.size();
  std::vector<Subset> clusters;
  for (std::uint64_t index = 0; index < total; ++index) {
    decode_candidate(spec.n, coords, index, spec.require_ground, clusters);
    if (passes_filter(spec, clusters, ground)) visit(SetSystem(ground, clusters));
  }
}

std::uint64_t count_systems(const EnumerationSpec& spec, const ExecutionPolicy& policy) {
  require_size(spec.n, kMaxEnumerationSize, "set-system enumeration");
  const auto coords = candidate_coordinates(spec.n, spec.require_ground);
  const auto ground = GroundSet::standard(spec.n);
  const std::uint64_t total = std::uint64_t{1} << coords.size();
  return reduce_chunks<std::uint64_t>(
      total, kChunk, policy, 0,
      [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<Subset> clusters;
        std::uint64_t count = 0;
        for (std::uint64_t index = lo; index < hi; ++index) {
          decode_candidate(spec.n, coords, index, spec.require_ground, clusters);
          if (passes_filter(spec, clusters, ground)) ++count;
        }
        return count;
      },
      [](std::uint64_t& acc, std::uint64_t part) { acc += part; });
}

namespace {

constexpr std::size_t kBranchPairs = 2;

// Monotone R chosen pair by pair: R(p,q) = {p,q} plus a subset of the other
// elements, rejected as soon as two assigned pairs contradict (m).
class MonotoneWalk {
 public:
  explicit MonotoneWalk(std::size_t n)
      : n_(n), pairs_(lex_pairs(n)), coords_(candidate_coordinates(n)), coord_index_(std::size_t{1} << n, 0),
        table_(pairs_.size()) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coord_index_[coords_[i].bits()] = i;
    for (const PairIndex& p : pairs_) extras_.push_back((Subset::full(n) - Subset::pair(p.u, p.v)).elements());
  }

  std::size_t choices() const { return std::size_t{1} << (n_ >= 2 ? n_ - 2 : 0); }
  std::size_t fixed_pairs() const { return std::min(kBranchPairs, pairs_.size()); }

  std::size_t branch_count() const {
    std::size_t count = 1;
    for (std::size_t k = 0; k < fixed_pairs(); ++k) count *= choices();
    return count;
  }

  template <class Visit>
  void walk(std::size_t branch, Visit& visit) {
    for (std::size_t k = 0; k < fixed_pairs(); ++k) {
      assign(k, branch % choices());
      branch /= choices();
      if (!consistent(k)) return;
    }
    descend(fixed_pairs(), visit);
  }

 private:
  void assign(std::size_t k, std::size_t choice) {
    Subset r = Subset::pair(pairs_[k].u, pairs_[k].v);
    for (std::size_t j : Subset(choice)) r = r.with(extras_[k][j]);
    table_[k] = r;
  }

  bool consistent(std::size_t k) const {
    const Subset mine = table_[k];
    const Subset my_pair = Subset::pair(pairs_[k].u, pairs_[k].v);
    for (std::size_t j = 0; j < k; ++j) {
      const Subset other = table_[j];
      if (other.contains_all(my_pair) && !mine.subset_of(other)) return false;
      if (mine.contains_all(Subset::pair(pairs_[j].u, pairs_[j].v)) && !other.subset_of(mine)) return false;
    }
    return true;
  }

  template <class Visit>
  void descend(std::size_t k, Visit& visit) {
    if (k == pairs_.size()) {
      std::uint64_t index = 0;
      for (Subset r : table_) index |= std::uint64_t{1} << coord_index_[r.bits()];
      decode_candidate(n_, coords_, index, false, clusters_);
      visit(std::span<const Subset>(clusters_), index);
      return;
    }
    for (std::size_t choice = 0; choice < choices(); ++choice) {
      assign(k, choice);
      if (consistent(k)) descend(k + 1, visit);
    }
  }

  std::size_t n_;
  std::vector<PairIndex> pairs_;
  std::vector<Subset> coords_;
  std::vector<std::size_t> coord_index_;
  std::vector<std::vector<std::size_t>> extras_;
  std::vector<Subset> table_;
  std::vector<Subset> clusters_;
};

}  // namespace

std::size_t t_system_branch_count(std::size_t n) {
  require_size(n, kMaxEnumerationSize, "T-system enumeration");
  return MonotoneWalk(n).branch_count();
}

void walk_t_system_branch(std::size_t n, std::size_t branch,
                          const std::function<void(std::span<const Subset>, std::uint64_t)>& visit) {
  require_size(n, kMaxEnumerationSize, "T-system enumeration");
  MonotoneWalk walk(n);
  if (branch >= walk.branch_count()) throw Error(ErrorCode::kOutOfRange, "branch index out of range");
  walk.walk(branch, visit);
}

std::vector<std::uint64_t> t_system_indices(std::size_t n, const ExecutionPolicy& policy) {
  require_size(n, kMaxEnumerationSize, "T-system enumeration");
  using Indices = std::vector<std::uint64_t>;
  Indices all = reduce_chunks<Indices>(
      t_system_branch_count(n), 1, policy, Indices{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        Indices found;
        MonotoneWalk walk(n);
        auto visit = [&](std::span<const Subset>, std::uint64_t index) { found.push_back(index); };
        for (std::uint64_t b = lo; b < hi; ++b) walk.walk(b, visit);
        return found;
      },
      [](Indices& acc, Indices&& part) { acc.insert(acc.end(), part.begin(), part.end()); });
  std::sort(all.begin(), all.end());
  return all;
}

void enumerate_monotone_tfs(std::size_t n, const std::function<void(const TransitFunction&)>& visit) {
  const auto coords = candidate_coordinates(n);
  const auto ground = GroundSet::standard(n);
  std::vector<Subset> clusters;
  for (std::uint64_t index : t_system_indices(n, ExecutionPolicy::serial())) {
    decode_candidate(n, coords, index, false, clusters);
    visit(canonical_transit_function(SetSystem(ground, clusters)));
  }
}

std::uint64_t transit_function_count(std::size_t n) {
  require_size(n, kMaxTransitEnumerationSize, "transit-function enumeration");
  if (n <= 2) return 1;
  return std::uint64_t{1} << ((n - 2) * n * (n - 1) / 2);
}

TransitFunction decode_transit_function(std::size_t n, std::uint64_t index) {
  require_size(n, kMaxTransitEnumerationSize, "transit-function enumeration");
  const auto ground = GroundSet::standard(n);
  std::vector<Subset> table(n * n);
  for (std::size_t e = 0; e < n; ++e) table[e * n + e] = Subset::singleton(e);
  const std::size_t digit_bits = n >= 2 ? n - 2 : 0;
  const std::uint64_t digit_mask = (std::uint64_t{1} << digit_bits) - 1;
  for (const PairIndex& p : lex_pairs(n)) {
    const std::uint64_t choice = index & digit_mask;
    index >>= digit_bits;
    const auto extras = (Subset::full(n) - Subset::pair(p.u, p.v)).elements();
    Subset r = Subset::pair(p.u, p.v);
    for (std::size_t j : Subset(choice)) r = r.with(extras[j]);
    table[p.u * n + p.v] = r;
    table[p.v * n + p.u] = r;
  }
  return TransitFunction(ground, std::move(table));
}

void enumerate_transit_functions(std::size_t n, const std::function<void(const TransitFunction&)>& visit) {
  const std::uint64_t total = transit_function_count(n);
  for (std::uint64_t index = 0; index < total; ++index) visit(decode_transit_function(n, index));
}

// --- properties -------------------------------------------------------------

Property to_property(TransitAxiom axiom) { return static_cast<Property>(static_cast<unsigned>(axiom)); }

Property to_property(SystemPredicate predicate) {
  return static_cast<Property>(static_cast<unsigned>(Property::kKS) + static_cast<unsigned>(predicate));
}

std::string_view tag(Property p) {
  const auto index = static_cast<unsigned>(p);
  if (p <= Property::kOPrime) return tag(static_cast<TransitAxiom>(index));
  if (p >= Property::kKS && p < Property::kCount_) {
    return tag(static_cast<SystemPredicate>(index - static_cast<unsigned>(Property::kKS)));
  }
  switch (p) {
    case Property::kW2Guarded: return "w2g";
    case Property::kHelly: return "helly";
    case Property::kPrePyramidal: return "py";
    case Property::kPyramidal: return "pyramidal";
    case Property::kWeaklyPyramidal: return "wpy";
    default: return "?";
  }
}

std::optional<Property> parse_property(std::string_view name) {
  for (std::size_t i = 0; i < kPropertyCount; ++i) {
    const auto p = static_cast<Property>(i);
    if (tag(p) == name) return p;
  }
  return std::nullopt;
}

bool is_transit_only(Property p) { return (bit(p) & kTransitOnlyMask) != 0; }

std::string format_mask(PropertyMask mask) {
  if (mask == 0) return "true";
  std::string out;
  for (std::size_t i = 0; i < kPropertyCount; ++i) {
    if ((mask >> i) & 1U) {
      if (!out.empty()) out += " & ";
      out += tag(static_cast<Property>(i));
    }
  }
  return out;
}

PropertyMask evaluate_set_properties(const SetSystem& system, PropertyMask wanted) {
  // derived properties pull in what they are built from
  if (wanted & bit(Property::kPyramidal)) wanted |= bit(Property::kPrePyramidal) | bit(Property::kK2);
  if (wanted & bit(Property::kWeaklyPyramidal)) wanted |= bit(Property::kWeakHierarchy) | bit(Property::kSysWP);
  PropertyMask mask = 0;
  const auto set = [&](Property p, bool value) {
    if (value) mask |= bit(p);
  };
  for (SystemPredicate p : kAllSystemPredicates) {
    if (wanted & bit(to_property(p))) set(to_property(p), check_system(system, p).holds);
  }
  if (wanted & bit(Property::kHelly)) set(Property::kHelly, helly(system.clusters()));
  if (wanted & bit(Property::kPrePyramidal)) {
    const bool py = find_compatible_sequence(system.clusters(), system.n()).has_value();
    set(Property::kPrePyramidal, py);
    set(Property::kPyramidal, py && (mask & bit(Property::kK2)) != 0);
  }
  set(Property::kWeaklyPyramidal, (mask & bit(Property::kWeakHierarchy)) && (mask & bit(Property::kSysWP)));
  return mask;
}

PropertyMask evaluate_properties(const TransitFunction& r, PropertyMask wanted) {
  PropertyMask mask = 0;
  if (wanted & ~kTransitOnlyMask) mask = evaluate_set_properties(transit_sets(r), wanted & ~kTransitOnlyMask);
  const PropertyMask asked = wanted & bit(Property::kW1) ? wanted | bit(Property::kW) : wanted;
  for (TransitAxiom a : kAllTransitAxioms) {
    if (a == TransitAxiom::kW1 || !(asked & bit(to_property(a)))) continue;
    if (check(r, a).holds) mask |= bit(to_property(a));
  }
  if (mask & bit(Property::kW)) mask |= bit(Property::kW1);
  if ((wanted & bit(Property::kW2Guarded)) && check_w2_guarded(r).holds) mask |= bit(Property::kW2Guarded);
  return mask & wanted;
}

// --- claims -----------------------------------------------------------------

std::string_view to_string(Domain d) {
  switch (d) {
    case Domain::kMonotone: return "monotone";
    case Domain::kTransit: return "transit";
    case Domain::kSystems: return "systems";
  }
  return "?";
}

std::size_t domain_limit(Domain d) {
  return d == Domain::kMonotone ? kMaxEnumerationSize : kMaxTransitEnumerationSize;
}

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::kImplies: return "implies";
    case Expectation::kIndependent: return "independent";
    case Expectation::kOpen: return "open";
  }
  return "?";
}

std::string_view to_string(ImplicationStatus s) { return s == ImplicationStatus::kConfirmed ? "confirmed" : "refuted"; }

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kAsExpected: return "as-expected";
    case Outcome::kContradicted: return "contradicted";
    case Outcome::kUnresolved: return "unresolved";
  }
  return "?";
}

namespace {

PropertyMask parse_conjunction(const std::vector<std::string>& tokens, std::string_view line) {
  PropertyMask mask = 0;
  bool expect_term = true;
  for (const auto& t : tokens) {
    if (t == "&") {
      if (expect_term) throw Error(ErrorCode::kParse, "misplaced '&' in claim: " + std::string(line));
      expect_term = true;
      continue;
    }
    if (!expect_term) throw Error(ErrorCode::kParse, "missing '&' before '" + t + "' in claim: " + std::string(line));
    expect_term = false;
    if (t == "true") continue;
    const auto p = parse_property(t);
    if (!p) throw Error(ErrorCode::kUnknownTag, "unknown property tag '" + t + "'");
    mask |= bit(*p);
  }
  if (expect_term) throw Error(ErrorCode::kParse, "incomplete conjunction in claim: " + std::string(line));
  return mask;
}

std::vector<std::string> claim_tokens(std::string_view line) {
  // '&' and "=>" may be written without surrounding spaces.
  std::string spaced;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '&') {
      spaced += " & ";
    } else if (line.substr(i, 2) == "=>") {
      spaced += " => ";
      ++i;
    } else {
      spaced += line[i];
    }
  }
  std::istringstream in(spaced);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

}  // namespace

ImplicationClaim parse_claim(std::string_view line) {
  const auto tokens = claim_tokens(line);
  if (tokens.size() < 5) throw Error(ErrorCode::kParse, "claim needs '<domain> <expectation> <hyp> => <concl>': " + std::string(line));
  ImplicationClaim claim;
  if (tokens[0] == "monotone") {
    claim.domain = Domain::kMonotone;
  } else if (tokens[0] == "transit") {
    claim.domain = Domain::kTransit;
  } else if (tokens[0] == "systems") {
    claim.domain = Domain::kSystems;
  } else {
    throw Error(ErrorCode::kParse, "unknown claim domain '" + tokens[0] + "'");
  }
  if (tokens[1] == "implies") {
    claim.expected = Expectation::kImplies;
  } else if (tokens[1] == "independent") {
    claim.expected = Expectation::kIndependent;
  } else if (tokens[1] == "open") {
    claim.expected = Expectation::kOpen;
  } else {
    throw Error(ErrorCode::kParse, "unknown claim expectation '" + tokens[1] + "'");
  }
  const auto arrow = std::find(tokens.begin() + 2, tokens.end(), "=>");
  if (arrow == tokens.end()) throw Error(ErrorCode::kParse, "claim is missing '=>': " + std::string(line));
  claim.hypothesis = parse_conjunction({tokens.begin() + 2, arrow}, line);
  claim.conclusion = parse_conjunction({arrow + 1, tokens.end()}, line);
  if (claim.conclusion == 0) throw Error(ErrorCode::kParse, "claim needs a conclusion: " + std::string(line));
  if (claim.domain == Domain::kSystems && ((claim.hypothesis | claim.conclusion) & kTransitOnlyMask) != 0) {
    throw Error(ErrorCode::kParse, "transit-function axioms are undefined on the systems domain: " + std::string(line));
  }
  claim.name = format_mask(claim.hypothesis) + " => " + format_mask(claim.conclusion);
  return claim;
}

std::vector<ImplicationClaim> parse_claims(std::string_view text) {
  std::vector<ImplicationClaim> claims;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) claims.push_back(parse_claim(line));
    start = end + 1;
  }
  return claims;
}

std::string format_claim(const ImplicationClaim& claim) {
  return std::string(to_string(claim.domain)) + " " + std::string(to_string(claim.expected)) + " " +
         format_mask(claim.hypothesis) + " => " + format_mask(claim.conclusion);
}

std::vector<ImplicationClaim> implication_battery() {
  struct Row {
    const char* text;
    const char* fixture;
    std::size_t size;
  };
  static const Row rows[] = {
      // weak hierarchies
      {"monotone implies w => w1", "", 0},
      {"monotone implies w1 => w", "", 0},
      {"monotone implies w => w2", "", 0},
      {"monotone implies w2 => w", "", 0},
      {"monotone implies w => w3", "", 0},
      {"monotone implies w3 => w", "", 0},
      {"monotone implies w2 => w2g", "", 0},
      {"monotone implies w2g => w2", "", 0},
      {"monotone implies w => weakHierarchy", "", 0},
      {"monotone implies weakHierarchy => w", "", 0},
      {"monotone implies w => k", "", 0},
      {"monotone implies w => x'", "", 0},
      {"systems implies W' => weakHierarchy", "", 0},
      {"systems implies weakHierarchy => W'", "", 0},
      // covering
      {"monotone implies w => mm", "", 0},
      {"monotone implies mm & x' => w", "", 0},
      {"monotone implies mm => a'", "", 0},
      {"monotone implies a' => K1", "", 0},
      {"monotone implies K1 => a'", "", 0},
      {"monotone implies mm => MM", "", 0},
      {"monotone implies MM => mm", "", 0},
      {"monotone implies k3 => K3", "", 0},
      {"monotone implies K3 => k3", "", 0},
      {"monotone implies k => K2", "", 0},
      {"monotone implies K2 => k", "", 0},
      {"monotone implies K1 & K2 => K3", "", 0},
      {"monotone implies MM => K3", "", 0},
      {"monotone implies K3 => K1", "", 0},
      // union closure and pyramids
      {"monotone implies uc => UC", "", 0},
      {"monotone implies UC => uc", "", 0},
      {"monotone implies uc => k", "", 0},
      {"monotone implies uc => helly", "", 0},
      {"monotone implies uc => u", "", 0},
      {"monotone implies x => u & x'", "", 0},
      {"monotone implies u & x' => x", "", 0},
      {"monotone implies uc => x", "", 0},
      {"monotone implies uc => w & wp", "", 0},
      {"monotone implies uc => py", "", 0},
      {"monotone implies wp => WP", "", 0},
      {"monotone implies WP => wp", "", 0},
      {"monotone implies UC & weakHierarchy & WP => py", "", 0},
      {"monotone implies py => wpy", "", 0},
      {"monotone implies py => pyramidal", "", 0},
      {"monotone implies py => o", "", 0},
      {"monotone implies u => o", "", 0},
      {"monotone implies o => o'", "", 0},
      {"monotone implies wp => o'", "", 0},
      {"systems implies H => UC", "", 0},
      // worked counterexamples
      {"transit independent w => m", "w-not-monotone", 5},
      {"monotone independent x' & m => w", "xprime-not-w", 4},
      {"monotone independent x' => mm", "xprime-not-w", 4},
      {"monotone independent mm & m => w", "mm-not-w", 5},
      {"monotone independent mm => x'", "mm-not-w", 5},
      {"monotone independent k3 => mm", "k3-not-mm", 5},
      {"monotone independent a' => k3", "k1-not-k3", 5},
      {"monotone independent py => uc", "path4", 4},
      {"monotone independent py => u", "three-intervals", 6},
      {"monotone independent u => uc", "u-not-uc", 4},
      {"monotone independent w & wp => py", "four-cycle", 4},
      {"monotone independent w & o' => o", "four-cycle", 4},
      {"monotone independent wp => x'", "wp-not-xprime", 4},
      {"monotone independent wp => mm", "wp-not-xprime", 4},
      {"monotone independent w => wp", "w-not-wp", 4},
      {"monotone independent wp => w", "triangle", 3},
      {"monotone independent o' => wp", "oprime-not-wp", 6},
      {"monotone independent o' & wp => o", "o-violation", 4},
      {"monotone independent w => o", "star", 4},
      {"monotone independent o => w", "triangle-plus-point", 4},
      // questions left open
      {"monotone open u & w => py", "", 0},
      {"monotone open u & w => wp", "", 0},
  };
  std::vector<ImplicationClaim> claims;
  for (const Row& row : rows) {
    auto claim = parse_claim(row.text);
    claim.reference_fixture = row.fixture;
    claim.reference_size = row.size;
    claims.push_back(std::move(claim));
  }
  return claims;
}

namespace {

struct ClaimTally {
  std::uint64_t hypothesis = 0;
  std::optional<std::uint64_t> first_counterexample;
};

struct SweepTally {
  std::uint64_t instances = 0;
  std::vector<ClaimTally> claims;
};

void merge_tally(SweepTally& acc, SweepTally&& part) {
  acc.instances += part.instances;
  if (acc.claims.size() < part.claims.size()) acc.claims.resize(part.claims.size());
  for (std::size_t i = 0; i < part.claims.size(); ++i) {
    acc.claims[i].hypothesis += part.claims[i].hypothesis;
    const auto& ce = part.claims[i].first_counterexample;
    auto& mine = acc.claims[i].first_counterexample;
    if (ce && (!mine || *ce < *mine)) mine = ce;
  }
}

void tally(SweepTally& t, std::span<const ImplicationClaim* const> claims, PropertyMask mask, std::uint64_t index) {
  ++t.instances;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const auto& c = *claims[i];
    if ((mask & c.hypothesis) != c.hypothesis) continue;
    ++t.claims[i].hypothesis;
    auto& ce = t.claims[i].first_counterexample;
    if ((mask & c.conclusion) != c.conclusion && (!ce || index < *ce)) ce = index;
  }
}

SweepTally sweep(Domain domain, std::size_t n, std::span<const ImplicationClaim* const> claims,
                 const ExecutionPolicy& policy) {
  const SweepTally empty{0, std::vector<ClaimTally>(claims.size())};
  PropertyMask wanted = 0;
  for (const ImplicationClaim* c : claims) wanted |= c->hypothesis | c->conclusion;
  if (domain == Domain::kTransit) {
    return reduce_chunks<SweepTally>(
        transit_function_count(n), kChunk, policy, empty,
        [&](std::uint64_t lo, std::uint64_t hi) {
          SweepTally t = empty;
          for (std::uint64_t index = lo; index < hi; ++index) {
            tally(t, claims, evaluate_properties(decode_transit_function(n, index), wanted), index);
          }
          return t;
        },
        merge_tally);
  }
  const auto ground = GroundSet::standard(n);
  if (domain == Domain::kMonotone) {
    return reduce_chunks<SweepTally>(
        t_system_branch_count(n), 1, policy, empty,
        [&](std::uint64_t lo, std::uint64_t hi) {
          SweepTally t = empty;
          MonotoneWalk walk(n);
          auto visit = [&](std::span<const Subset> clusters, std::uint64_t index) {
            const SetSystem system(ground, std::vector<Subset>(clusters.begin(), clusters.end()));
            tally(t, claims, evaluate_properties(canonical_transit_function(system), wanted), index);
          };
          for (std::uint64_t b = lo; b < hi; ++b) walk.walk(b, visit);
          return t;
        },
        merge_tally);
  }
  const auto coords = candidate_coordinates(n);
  return reduce_chunks<SweepTally>(
      std::uint64_t{1} << coords.size(), kChunk, policy, empty,
      [&](std::uint64_t lo, std::uint64_t hi) {
        SweepTally t = empty;
        std::vector<Subset> clusters;
        for (std::uint64_t index = lo; index < hi; ++index) {
          decode_candidate(n, coords, index, false, clusters);
          tally(t, claims, evaluate_set_properties(SetSystem(ground, clusters), wanted), index);
        }
        return t;
      },
      merge_tally);
}

Counterexample rebuild(Domain domain, std::size_t n, std::uint64_t index) {
  Counterexample ce;
  ce.n = n;
  ce.index = index;
  if (domain == Domain::kTransit) {
    ce.transit = decode_transit_function(n, index);
    ce.system = transit_sets(*ce.transit);
    return ce;
  }
  const auto coords = candidate_coordinates(n);
  std::vector<Subset> clusters;
  decode_candidate(n, coords, index, false, clusters);
  ce.system = SetSystem(GroundSet::standard(n), clusters);
  if (domain == Domain::kMonotone) ce.transit = canonical_transit_function(*ce.system);
  return ce;
}

std::size_t effective_max(Domain domain, std::size_t n_max) { return std::min(n_max, domain_limit(domain)); }

}  // namespace

std::vector<ImplicationReport> verify_implications(std::span<const ImplicationClaim> claims, std::size_t n_max,
                                                   const ExecutionPolicy& policy) {
  require_size(n_max, kMaxEnumerationSize, "implication sweep");
  std::vector<ImplicationReport> reports(claims.size());
  for (std::size_t i = 0; i < claims.size(); ++i) {
    reports[i].claim = claims[i];
    reports[i].n_max = effective_max(claims[i].domain, n_max);
  }
  for (Domain domain : {Domain::kMonotone, Domain::kTransit, Domain::kSystems}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < claims.size(); ++i) {
      if (claims[i].domain == domain) members.push_back(i);
    }
    if (members.empty()) continue;
    for (std::size_t n = 1; n <= effective_max(domain, n_max); ++n) {
      std::vector<const ImplicationClaim*> all;
      for (std::size_t i : members) all.push_back(&claims[i]);
      const SweepTally t = sweep(domain, n, all, policy);
      for (std::size_t k = 0; k < members.size(); ++k) {
        auto& report = reports[members[k]];
        report.instances_checked += t.instances;
        report.hypothesis_instances += t.claims[k].hypothesis;
        // a counterexample found at a smaller size is kept
        if (!report.counterexample && t.claims[k].first_counterexample) {
          report.counterexample = rebuild(domain, n, *t.claims[k].first_counterexample);
        }
      }
    }
  }
  for (auto& report : reports) {
    report.status = report.counterexample ? ImplicationStatus::kRefuted : ImplicationStatus::kConfirmed;
    switch (report.claim.expected) {
      case Expectation::kImplies:
        report.outcome = report.counterexample ? Outcome::kContradicted : Outcome::kAsExpected;
        break;
      case Expectation::kIndependent:
        report.outcome = report.counterexample ? Outcome::kAsExpected : Outcome::kUnresolved;
        break;
      case Expectation::kOpen: report.outcome = Outcome::kUnresolved; break;
    }
  }
  return reports;
}

ImplicationReport verify_implication(const ImplicationClaim& claim, std::size_t n_max, const ExecutionPolicy& policy) {
  return verify_implications(std::span<const ImplicationClaim>(&claim, 1), n_max, policy).front();
}

bool counterexample_reproduces(const ImplicationClaim& claim, const Counterexample& ce) {
  PropertyMask mask = 0;
  if (claim.domain == Domain::kSystems) {
    if (!ce.system) return false;
    mask = evaluate_set_properties(*ce.system);
  } else {
    if (!ce.transit) return false;
    mask = evaluate_properties(*ce.transit);
    if (claim.domain == Domain::kMonotone && !check_monotone(*ce.transit).holds) return false;
  }
  return (mask & claim.hypothesis) == claim.hypothesis && (mask & claim.conclusion) != claim.conclusion;
}

Census census(std::size_t n, const ExecutionPolicy& policy) {
  require_size(n, kMaxEnumerationSize, "census");
  std::vector<CensusRow> rows;
  const auto add = [&](const std::string& label, PropertyMask mask) { rows.push_back({label, mask, 0}); };
  for (TransitAxiom a : kAllTransitAxioms) add(std::string(tag(a)), bit(to_property(a)));
  for (Property p : {Property::kW2Guarded, Property::kHelly, Property::kPrePyramidal, Property::kPyramidal,
                     Property::kWeaklyPyramidal}) {
    add(std::string(tag(p)), bit(p));
  }
  for (const char* combo : {"mm & x'", "u & x'", "w & wp", "w & o'", "o' & wp", "u & w", "uc & py"}) {
    add(combo, parse_claim(std::string("monotone implies ") + combo + " => m").hypothesis);
  }

  PropertyMask wanted = 0;
  for (const CensusRow& row : rows) wanted |= row.properties;
  const auto ground = GroundSet::standard(n);
  using Counts = std::vector<std::uint64_t>;  // [0] = total, then one per row
  const Counts zero(rows.size() + 1, 0);
  const Counts counts = reduce_chunks<Counts>(
      t_system_branch_count(n), 1, policy, zero,
      [&](std::uint64_t lo, std::uint64_t hi) {
        Counts c = zero;
        MonotoneWalk walk(n);
        auto visit = [&](std::span<const Subset> clusters, std::uint64_t) {
          const SetSystem system(ground, std::vector<Subset>(clusters.begin(), clusters.end()));
          const PropertyMask mask = evaluate_properties(canonical_transit_function(system), wanted);
          ++c[0];
          for (std::size_t i = 0; i < rows.size(); ++i) {
            if ((mask & rows[i].properties) == rows[i].properties) ++c[i + 1];
          }
        };
        for (std::uint64_t b = lo; b < hi; ++b) walk.walk(b, visit);
        return c;
      },
      [](Counts& acc, Counts&& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
      });
  Census result{n, counts[0], std::move(rows)};
  for (std::size_t i = 0; i < result.rows.size(); ++i) result.rows[i].count = counts[i + 1];
  return result;
}

}  // namespace transit
