#include "transit/system_predicates.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

namespace transit {

namespace {

bool w_prime_ok(Subset a, Subset b, Subset c) {
  if (!a.intersects(b - c) || !a.intersects(c - b)) return true;
  return (b & c).subset_of(a);
}

bool weak_triple_ok(Subset a, Subset b, Subset c) {
  const Subset t = a & b & c;
  return t == (a & b) || t == (a & c) || t == (b & c);
}

bool wp_triple_ok(Subset a, Subset b, Subset c) {
  if (!a.intersects(b) || !a.intersects(c) || !b.intersects(c)) return true;
  return a.subset_of(b | c) || b.subset_of(a | c) || c.subset_of(a | b);
}

std::vector<Subset> minimal_covers(std::span<const Subset> clusters, Subset target) {
  std::vector<Subset> covers;
  for (Subset c : clusters) {
    if (c.contains_all(target)) covers.push_back(c);
  }
  std::vector<Subset> minimal;
  for (Subset c : covers) {
    const bool dominated = std::any_of(covers.begin(), covers.end(), [&](Subset d) { return d != c && d.subset_of(c); });
    if (!dominated) minimal.push_back(c);
  }
  return minimal;
}

Verdict check_ks(const SetSystem& s) {
  for (std::size_t x = 0; x < s.n(); ++x) {
    if (!s.contains(Subset::singleton(x))) return Verdict::fail("KS", {x});
  }
  return Verdict::pass("KS");
}

bool pins(std::span<const Subset> clusters, Subset c, std::size_t p, std::size_t q) {
  const Subset pq = Subset::pair(p, q);
  return std::all_of(clusters.begin(), clusters.end(), [&](Subset d) { return !d.contains_all(pq) || c.subset_of(d); });
}

Verdict check_kr(const SetSystem& s) {
  const auto clusters = s.clusters();
  for (Subset c : clusters) {
    bool pinned = false;
    for (std::size_t p : c) {
      for (std::size_t q : c) {
        if (q >= p && pins(clusters, c, p, q)) {
          pinned = true;
          break;
        }
      }
      if (pinned) break;
    }
    if (!pinned) return Verdict::fail("KR", {}, {c});
  }
  return Verdict::pass("KR");
}

Verdict check_kc(const SetSystem& s) {
  for (std::size_t p = 0; p < s.n(); ++p) {
    for (std::size_t q = p; q < s.n(); ++q) {
      const Subset pq = Subset::pair(p, q);
      Subset meet = s.ground()->full();
      bool covered = false;
      for (Subset c : s.clusters()) {
        if (c.contains_all(pq)) {
          meet &= c;
          covered = true;
        }
      }
      if (!covered) return Verdict::fail("KC", {p, q}, {}, "no cluster contains the pair");
      if (!s.contains(meet)) return Verdict::fail("KC", {p, q}, {meet}, "intersection of covers is not a cluster");
    }
  }
  return Verdict::pass("KC");
}

Verdict check_k1(const SetSystem& s) {
  const Subset full = s.ground()->full();
  if (s.contains(full)) return Verdict::pass("K1");
  const auto clusters = s.clusters();
  if (clusters.empty()) return Verdict::fail("K1", full.elements());
  // Canonical order sorts by size first, so the largest cluster is the first of maximal size.
  const std::size_t max_size = clusters.back().size();
  const auto largest = *std::find_if(clusters.begin(), clusters.end(), [&](Subset c) { return c.size() == max_size; });
  return Verdict::fail("K1", (full - largest).elements(), {largest});
}

template <class PairTest>
Verdict check_cluster_pairs(const SetSystem& s, std::string_view name, PairTest ok) {
  const auto c = s.clusters();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!ok(c[i], c[j])) return Verdict::fail(std::string(name), {}, {c[i], c[j]});
    }
  }
  return Verdict::pass(std::string(name));
}

bool k3_ok(std::span<const Subset> clusters, Subset a, Subset b) {
  return !a.intersects(b) || minimal_covers(clusters, a | b).size() == 1;
}

bool mm_ok(std::span<const Subset> clusters, Subset a, Subset b) {
  if (!a.intersects(b)) return true;
  const Subset u = a | b;
  for (std::size_t p : u) {
    for (std::size_t q : u) {
      if (q <= p) continue;
      const auto cover = unique_minimal_cover(clusters, Subset::pair(p, q));
      if (cover && u.subset_of(*cover)) return true;
    }
  }
  return false;
}

Verdict check_paired(const SetSystem& s) {
  const auto c = s.clusters();
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::optional<std::size_t> first;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j == i || !c[i].overlaps_properly(c[j])) continue;
      if (!first) {
        first = j;
      } else {
        return Verdict::fail("pairedH", {}, {c[i], c[*first], c[j]});
      }
    }
  }
  return Verdict::pass("pairedH");
}

Verdict check_wp(const SetSystem& s) {
  const auto c = s.clusters();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!c[i].intersects(c[j])) continue;
      for (std::size_t k = j + 1; k < c.size(); ++k) {
        if (!wp_triple_ok(c[i], c[j], c[k])) return Verdict::fail("WP", {}, {c[i], c[j], c[k]});
      }
    }
  }
  return Verdict::pass("WP");
}

Verdict conjunction(const SetSystem& s, std::string name, std::initializer_list<SystemPredicate> parts) {
  for (SystemPredicate p : parts) {
    Verdict v = check_system(s, p);
    if (!v.holds) {
      v.note = v.note.empty() ? std::string(tag(p)) : std::string(tag(p)) + ": " + v.note;
      v.tag = name;
      return v;
    }
  }
  return Verdict::pass(std::move(name));
}

}  // namespace

std::string_view tag(SystemPredicate predicate) {
  switch (predicate) {
    case SystemPredicate::kKS: return "KS";
    case SystemPredicate::kKR: return "KR";
    case SystemPredicate::kKC: return "KC";
    case SystemPredicate::kK1: return "K1";
    case SystemPredicate::kK2: return "K2";
    case SystemPredicate::kK3: return "K3";
    case SystemPredicate::kMM: return "MM";
    case SystemPredicate::kUC: return "UC";
    case SystemPredicate::kH: return "H";
    case SystemPredicate::kPairedH: return "pairedH";
    case SystemPredicate::kWeakHierarchy: return "weakHierarchy";
    case SystemPredicate::kWPrime: return "W'";
    case SystemPredicate::kWP: return "WP";
    case SystemPredicate::kTSystem: return "Tsystem";
    case SystemPredicate::kBinaryClustering: return "binaryClustering";
    case SystemPredicate::kClusteringSystem: return "clusteringSystem";
  }
  return "?";
}

std::optional<SystemPredicate> parse_system_predicate(std::string_view name) {
  for (SystemPredicate p : kAllSystemPredicates) {
    if (tag(p) == name) return p;
  }
  return std::nullopt;
}

std::optional<Subset> unique_minimal_cover(std::span<const Subset> clusters, Subset target) {
  auto minimal = minimal_covers(clusters, target);
  if (minimal.size() != 1) return std::nullopt;
  return minimal.front();
}

Verdict check_weak_hierarchy(const SetSystem& system) {
  const auto c = system.clusters();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      for (std::size_t k = j + 1; k < c.size(); ++k) {
        if (!weak_triple_ok(c[i], c[j], c[k])) return Verdict::fail("weakHierarchy", {}, {c[i], c[j], c[k]});
      }
    }
  }
  return Verdict::pass("weakHierarchy");
}

Verdict check_W_prime(const SetSystem& system) {
  const auto c = system.clusters();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k == i || k == j) continue;
        if (!w_prime_ok(c[i], c[j], c[k])) return Verdict::fail("W'", {}, {c[i], c[j], c[k]});
      }
    }
  }
  return Verdict::pass("W'");
}

Verdict check_system(const SetSystem& system, SystemPredicate predicate) {
  const auto clusters = system.clusters();
  switch (predicate) {
    case SystemPredicate::kKS: return check_ks(system);
    case SystemPredicate::kKR: return check_kr(system);
    case SystemPredicate::kKC: return check_kc(system);
    case SystemPredicate::kK1: return check_k1(system);
    case SystemPredicate::kK2:
      return check_cluster_pairs(system, "K2", [&](Subset a, Subset b) {
        return !a.intersects(b) || system.contains(a & b);
      });
    case SystemPredicate::kK3:
      return check_cluster_pairs(system, "K3", [&](Subset a, Subset b) { return k3_ok(clusters, a, b); });
    case SystemPredicate::kMM:
      return check_cluster_pairs(system, "MM", [&](Subset a, Subset b) { return mm_ok(clusters, a, b); });
    case SystemPredicate::kUC:
      return check_cluster_pairs(system, "UC", [&](Subset a, Subset b) {
        return !a.intersects(b) || system.contains(a | b);
      });
    case SystemPredicate::kH:
      return check_cluster_pairs(system, "H", [](Subset a, Subset b) { return !a.overlaps_properly(b); });
    case SystemPredicate::kPairedH: return check_paired(system);
    case SystemPredicate::kWeakHierarchy: return check_weak_hierarchy(system);
    case SystemPredicate::kWPrime: return check_W_prime(system);
    case SystemPredicate::kWP: return check_wp(system);
    case SystemPredicate::kTSystem:
      return conjunction(system, "Tsystem", {SystemPredicate::kKS, SystemPredicate::kKR, SystemPredicate::kKC});
    case SystemPredicate::kBinaryClustering:
      return conjunction(system, "binaryClustering", {SystemPredicate::kTSystem, SystemPredicate::kK1});
    case SystemPredicate::kClusteringSystem:
      return conjunction(system, "clusteringSystem", {SystemPredicate::kKS, SystemPredicate::kK1});
  }
  throw Error(ErrorCode::kUnknownTag, "unknown system predicate");
}

SetSystem union_closure(const SetSystem& system) {
  std::vector<Subset> members(system.clusters().begin(), system.clusters().end());
  for (std::size_t x = 0; x < system.n(); ++x) members.push_back(Subset::singleton(x));
  std::unordered_set<Subset, SubsetHash> present(members.begin(), members.end());
  members.assign(present.begin(), present.end());
  std::sort(members.begin(), members.end(), CanonicalLess{});

  // One pass adds the unions of all intersecting pairs seen so far; repeat
  // until a pass adds nothing.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        if (!members[i].intersects(members[j])) continue;
        const Subset u = members[i] | members[j];
        if (present.insert(u).second) {
          members.push_back(u);
          grew = true;
        }
      }
    }
  }
  return SetSystem(system.ground(), std::move(members));
}

Verdict nebesky_triple_test(Subset a, Subset b, Subset c) {
  if (!w_prime_ok(a, b, c)) return Verdict::fail("nebesky", {}, {a, b, c}, "W'");
  if (!w_prime_ok(b, a, c)) return Verdict::fail("nebesky", {}, {b, a, c}, "W'");
  if (!w_prime_ok(c, a, b)) return Verdict::fail("nebesky", {}, {c, a, b}, "W'");
  if (!wp_triple_ok(a, b, c)) return Verdict::fail("nebesky", {}, {a, b, c}, "WP");
  return Verdict::pass("nebesky");
}

bool witness_violates(const SetSystem& system, const Verdict& verdict) {
  if (verdict.holds) return false;
  const auto predicate = parse_system_predicate(verdict.tag);
  if (!predicate) return false;
  const auto& s = verdict.sets;
  const auto& e = verdict.elements;
  const auto clusters = system.clusters();
  const auto member = [&](std::size_t i) { return i < s.size() && system.contains(s[i]); };

  switch (*predicate) {
    case SystemPredicate::kKS:
      return e.size() == 1 && e[0] < system.n() && !system.contains(Subset::singleton(e[0]));
    case SystemPredicate::kKR: {
      if (!member(0)) return false;
      for (std::size_t p : s[0]) {
        for (std::size_t q : s[0]) {
          if (pins(clusters, s[0], p, q)) return false;
        }
      }
      return true;
    }
    case SystemPredicate::kKC: {
      if (e.size() != 2 || e[0] >= system.n() || e[1] >= system.n()) return false;
      const Subset pq = Subset::pair(e[0], e[1]);
      std::vector<Subset> covers;
      std::copy_if(clusters.begin(), clusters.end(), std::back_inserter(covers), [&](Subset c) { return c.contains_all(pq); });
      if (covers.empty()) return true;
      Subset meet = covers.front();
      for (Subset c : covers) meet &= c;
      return !system.contains(meet);
    }
    case SystemPredicate::kK1:
      return !system.contains(system.ground()->full());
    case SystemPredicate::kK2:
      return member(0) && member(1) && s[0].intersects(s[1]) && !system.contains(s[0] & s[1]);
    case SystemPredicate::kK3:
      return member(0) && member(1) && !k3_ok(clusters, s[0], s[1]);
    case SystemPredicate::kMM:
      return member(0) && member(1) && !mm_ok(clusters, s[0], s[1]);
    case SystemPredicate::kUC:
      return member(0) && member(1) && s[0].intersects(s[1]) && !system.contains(s[0] | s[1]);
    case SystemPredicate::kH:
      return member(0) && member(1) && s[0].overlaps_properly(s[1]);
    case SystemPredicate::kPairedH:
      return member(0) && member(1) && member(2) && s[1] != s[2] && s[0].overlaps_properly(s[1]) &&
             s[0].overlaps_properly(s[2]);
    case SystemPredicate::kWeakHierarchy:
      return member(0) && member(1) && member(2) && !weak_triple_ok(s[0], s[1], s[2]);
    case SystemPredicate::kWPrime:
      return member(0) && member(1) && member(2) && !w_prime_ok(s[0], s[1], s[2]);
    case SystemPredicate::kWP:
      return member(0) && member(1) && member(2) && !wp_triple_ok(s[0], s[1], s[2]);
    case SystemPredicate::kTSystem:
    case SystemPredicate::kBinaryClustering:
    case SystemPredicate::kClusteringSystem: {
      // Compound: the note names the component that failed.
      const std::string component = verdict.note.substr(0, verdict.note.find(':'));
      const auto part = parse_system_predicate(component);
      if (!part) return false;
      Verdict inner = verdict;
      inner.tag = std::string(tag(*part));
      inner.note = verdict.note.find(": ") == std::string::npos ? "" : verdict.note.substr(verdict.note.find(": ") + 2);
      return witness_violates(system, inner);
    }
  }
  return false;
}

}  // namespace transit
