#include "transit/transit_axioms.hpp"

#include <utility>
#include <vector>

namespace transit {

namespace {

struct Pair {
  std::size_t u;
  std::size_t v;
};

std::vector<Pair> pairs_of(std::size_t n) {
  std::vector<Pair> out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) out.push_back({u, v});
  }
  return out;
}

Subset at(const TransitFunction& r, Pair p) { return r.at(p.u, p.v); }

// Some p <= q inside `within` with R(p,q) == target.
bool attained_within(const TransitFunction& r, Subset target, Subset within) {
  for (std::size_t p : within) {
    for (std::size_t q : within) {
      if (q >= p && r.at(p, q) == target) return true;
    }
  }
  return false;
}

// Some p < q inside `within` with target inside R(p,q).
bool covered_within(const TransitFunction& r, Subset target, Subset within) {
  for (std::size_t p : within) {
    for (std::size_t q : within) {
      if (q > p && target.subset_of(r.at(p, q))) return true;
    }
  }
  return false;
}

bool k3_satisfied(const TransitFunction& r, Subset u) {
  const std::size_t n = r.n();
  Subset in_every_cover = r.ground()->full();
  bool any_cover = false;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (u.subset_of(r.at(p, q))) {
        in_every_cover &= r.at(p, q);
        any_cover = true;
      }
    }
  }
  if (!any_cover) return false;
  for (std::size_t p : in_every_cover) {
    for (std::size_t q : in_every_cover) {
      if (q > p && u.subset_of(r.at(p, q))) return true;
    }
  }
  return false;
}

bool o_pair_works(const TransitFunction& r, Subset s, std::size_t p, std::size_t q) {
  for (std::size_t z : s) {
    if ((r.at(p, z) | r.at(z, q)) != s) return false;
  }
  return true;
}

bool o_prime_point_works(const TransitFunction& r, Subset s, std::size_t z) {
  for (std::size_t p : s) {
    for (std::size_t q : s) {
      if (q >= p && (r.at(p, z) | r.at(z, q)) == s) return true;
    }
  }
  return false;
}

bool wp_ok(Subset a, Subset b, Subset c) {
  if (!a.intersects(b) || !a.intersects(c) || !b.intersects(c)) return true;
  return c.subset_of(a | b) || a.subset_of(c | b) || b.subset_of(a | c);
}

bool w2_ok(Subset a, Subset b, Subset c) {
  const Subset t = a & b & c;
  return t == (a & b) || t == (a & c) || t == (b & c);
}

}  // namespace

std::string_view tag(TransitAxiom axiom) {
  switch (axiom) {
    case TransitAxiom::kM: return "m";
    case TransitAxiom::kAPrime: return "a'";
    case TransitAxiom::kK: return "k";
    case TransitAxiom::kW: return "w";
    case TransitAxiom::kW1: return "w1";
    case TransitAxiom::kW2: return "w2";
    case TransitAxiom::kW3: return "w3";
    case TransitAxiom::kX: return "x";
    case TransitAxiom::kXPrime: return "x'";
    case TransitAxiom::kU: return "u";
    case TransitAxiom::kUC: return "uc";
    case TransitAxiom::kMM: return "mm";
    case TransitAxiom::kK3: return "k3";
    case TransitAxiom::kWP: return "wp";
    case TransitAxiom::kO: return "o";
    case TransitAxiom::kOPrime: return "o'";
  }
  return "?";
}

std::optional<TransitAxiom> parse_transit_axiom(std::string_view name) {
  for (TransitAxiom a : kAllTransitAxioms) {
    if (tag(a) == name) return a;
  }
  return std::nullopt;
}

Verdict check_monotone(const TransitFunction& r) {
  const std::string name(tag(TransitAxiom::kM));
  for (Pair uv : pairs_of(r.n())) {
    const Subset s = at(r, uv);
    for (std::size_t p : s) {
      for (std::size_t q : s) {
        if (q <= p) continue;
        if (!r.at(p, q).subset_of(s)) return Verdict::fail(name, {uv.u, uv.v, p, q});
      }
    }
  }
  return Verdict::pass(name);
}

Verdict check_attainment(const TransitFunction& r) {
  const std::string name(tag(TransitAxiom::kAPrime));
  if (r.n() == 1) return Verdict::pass(name);
  const Subset full = r.ground()->full();
  std::optional<Pair> largest;
  for (Pair uv : pairs_of(r.n())) {
    if (at(r, uv) == full) return Verdict::pass(name);
    if (!largest || at(r, uv).size() > at(r, *largest).size()) largest = uv;
  }
  return Verdict::fail(name, {largest->u, largest->v}, {}, "largest transit set is " + r.ground()->format(at(r, *largest)));
}

Verdict check_intersection_closure(const TransitFunction& r) {
  const std::string name(tag(TransitAxiom::kK));
  const auto pairs = pairs_of(r.n());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const Subset meet = at(r, pairs[i]) & at(r, pairs[j]);
      if (meet.empty() || attained_within(r, meet, meet)) continue;
      return Verdict::fail(name, {pairs[i].u, pairs[i].v, pairs[j].u, pairs[j].v});
    }
  }
  return Verdict::pass(name);
}

Verdict check_w_family(const TransitFunction& r, WVariant variant) {
  const std::size_t n = r.n();
  switch (variant) {
    case WVariant::kW:
    case WVariant::kW1: {
      const std::string name(tag(variant == WVariant::kW ? TransitAxiom::kW : TransitAxiom::kW1));
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
          for (std::size_t z = y + 1; z < n; ++z) {
            if (r.at(x, y).contains(z) || r.at(x, z).contains(y) || r.at(y, z).contains(x)) continue;
            return Verdict::fail(name, {x, y, z});
          }
        }
      }
      return Verdict::pass(name);
    }
    case WVariant::kW2: {
      const std::string name(tag(TransitAxiom::kW2));
      const auto pairs = pairs_of(n);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
          for (std::size_t k = j + 1; k < pairs.size(); ++k) {
            if (w2_ok(at(r, pairs[i]), at(r, pairs[j]), at(r, pairs[k]))) continue;
            return Verdict::fail(name, {pairs[i].u, pairs[i].v, pairs[j].u, pairs[j].v, pairs[k].u, pairs[k].v});
          }
        }
      }
      return Verdict::pass(name);
    }
    case WVariant::kW3: {
      const std::string name(tag(TransitAxiom::kW3));
      const auto pairs = pairs_of(n);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
          const Subset a = at(r, pairs[i]);
          const Subset b = at(r, pairs[j]);
          for (std::size_t x : a - b) {
            for (std::size_t y : a & b) {
              for (std::size_t z : b - a) {
                if (r.at(x, z).contains(y)) continue;
                return Verdict::fail(name, {pairs[i].u, pairs[i].v, pairs[j].u, pairs[j].v, x, y, z});
              }
            }
          }
        }
      }
      return Verdict::pass(name);
    }
  }
  return Verdict::pass("w");
}

Verdict check_w2_guarded(const TransitFunction& r) {
  const std::string name = "w2-guarded";
  const auto pairs = pairs_of(r.n());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      for (std::size_t k = j + 1; k < pairs.size(); ++k) {
        const Subset a = at(r, pairs[i]);
        const Subset b = at(r, pairs[j]);
        const Subset c = at(r, pairs[k]);
        if (!a.intersects(b) || !a.intersects(c) || !b.intersects(c) || w2_ok(a, b, c)) continue;
        return Verdict::fail(name, {pairs[i].u, pairs[i].v, pairs[j].u, pairs[j].v, pairs[k].u, pairs[k].v});
      }
    }
  }
  return Verdict::pass(name);
}

Verdict check_x_family(const TransitFunction& r, XVariant variant) {
  const std::string name(tag(variant == XVariant::kX ? TransitAxiom::kX : TransitAxiom::kXPrime));
  const std::size_t n = r.n();
  for (Pair xy : pairs_of(n)) {
    const Subset s = at(r, xy);
    for (std::size_t z = 0; z < n; ++z) {
      if (z == xy.u || z == xy.v) continue;
      if (variant == XVariant::kXPrime && s.contains(z)) continue;
      const Subset missing = s - (r.at(xy.u, z) | r.at(z, xy.v));
      if (!missing.empty()) return Verdict::fail(name, {xy.u, xy.v, z, missing.front()});
    }
  }
  return Verdict::pass(name);
}

Verdict check_u(const TransitFunction& r) {
  const std::string name(tag(TransitAxiom::kU));
  for (Pair uv : pairs_of(r.n())) {
    const Subset s = at(r, uv);
    for (std::size_t z : s) {
      if ((r.at(uv.u, z) | r.at(z, uv.v)) != s) return Verdict::fail(name, {uv.u, uv.v, z});
    }
  }
  return Verdict::pass(name);
}

Verdict check_uc(const TransitFunction& r) {
  const std::string name(tag(TransitAxiom::kUC));
  const auto pairs = pairs_of(r.n());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const Subset a = at(r, pairs[i]);
      const Subset b = at(r, pairs[j]);
      if (!a.intersects(b) || attained_within(r, a | b, a | b)) continue;
      return Verdict::fail(name, {pairs[i].u, pairs[i].v, pairs[j].u, pairs[j].v});
    }
  }
  return Verdict::pass(name);
}

Verdict check_mm(const TransitFunction& r) {
  const std::string name(tag(TransitAxiom::kMM));
  const auto pairs = pairs_of(r.n());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const Subset a = at(r, pairs[i]);
      const Subset b = at(r, pairs[j]);
      if (!a.intersects(b) || covered_within(r, a | b, a | b)) continue;
      return Verdict::fail(name, {pairs[i].u, pairs[i].v, pairs[j].u, pairs[j].v});
    }
  }
  return Verdict::pass(name);
}

Verdict check_k3(const TransitFunction& r) {
  const std::string name(tag(TransitAxiom::kK3));
  const auto pairs = pairs_of(r.n());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const Subset a = at(r, pairs[i]);
      const Subset b = at(r, pairs[j]);
      if (!a.intersects(b) || k3_satisfied(r, a | b)) continue;
      return Verdict::fail(name, {pairs[i].u, pairs[i].v, pairs[j].u, pairs[j].v});
    }
  }
  return Verdict::pass(name);
}

Verdict check_wp(const TransitFunction& r) {
  const std::string name(tag(TransitAxiom::kWP));
  const auto pairs = pairs_of(r.n());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      for (std::size_t k = j + 1; k < pairs.size(); ++k) {
        if (wp_ok(at(r, pairs[i]), at(r, pairs[j]), at(r, pairs[k]))) continue;
        return Verdict::fail(name, {pairs[i].u, pairs[i].v, pairs[j].u, pairs[j].v, pairs[k].u, pairs[k].v});
      }
    }
  }
  return Verdict::pass(name);
}

Verdict check_o_family(const TransitFunction& r, OVariant variant) {
  const std::string name(tag(variant == OVariant::kO ? TransitAxiom::kO : TransitAxiom::kOPrime));
  for (Pair uv : pairs_of(r.n())) {
    const Subset s = at(r, uv);
    if (variant == OVariant::kO) {
      bool found = false;
      for (std::size_t p : s) {
        for (std::size_t q : s) {
          if (q >= p && o_pair_works(r, s, p, q)) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return Verdict::fail(name, {uv.u, uv.v});
    } else {
      for (std::size_t z : s) {
        if (!o_prime_point_works(r, s, z)) return Verdict::fail(name, {uv.u, uv.v, z});
      }
    }
  }
  return Verdict::pass(name);
}

Verdict check(const TransitFunction& r, TransitAxiom axiom) {
  switch (axiom) {
    case TransitAxiom::kM: return check_monotone(r);
    case TransitAxiom::kAPrime: return check_attainment(r);
    case TransitAxiom::kK: return check_intersection_closure(r);
    case TransitAxiom::kW: return check_w_family(r, WVariant::kW);
    case TransitAxiom::kW1: return check_w_family(r, WVariant::kW1);
    case TransitAxiom::kW2: return check_w_family(r, WVariant::kW2);
    case TransitAxiom::kW3: return check_w_family(r, WVariant::kW3);
    case TransitAxiom::kX: return check_x_family(r, XVariant::kX);
    case TransitAxiom::kXPrime: return check_x_family(r, XVariant::kXPrime);
    case TransitAxiom::kU: return check_u(r);
    case TransitAxiom::kUC: return check_uc(r);
    case TransitAxiom::kMM: return check_mm(r);
    case TransitAxiom::kK3: return check_k3(r);
    case TransitAxiom::kWP: return check_wp(r);
    case TransitAxiom::kO: return check_o_family(r, OVariant::kO);
    case TransitAxiom::kOPrime: return check_o_family(r, OVariant::kOPrime);
  }
  throw Error(ErrorCode::kUnknownTag, "unknown transit axiom");
}

std::map<TransitAxiom, Verdict> classify_all(const TransitFunction& r) {
  std::map<TransitAxiom, Verdict> out;
  for (TransitAxiom a : kAllTransitAxioms) out.emplace(a, check(r, a));
  return out;
}

bool witness_violates(const TransitFunction& r, const Verdict& verdict) {
  if (verdict.holds) return false;
  const auto axiom = parse_transit_axiom(verdict.tag);
  const bool guarded_w2 = verdict.tag == "w2-guarded";
  if (!axiom && !guarded_w2) return false;
  const auto& e = verdict.elements;
  const std::size_t n = r.n();
  for (std::size_t x : e) {
    if (x >= n) return false;
  }
  const auto need = [&](std::size_t k) { return e.size() == k; };
  const Subset full = r.ground()->full();

  if (guarded_w2) {
    if (!need(6)) return false;
    const Subset a = r.at(e[0], e[1]), b = r.at(e[2], e[3]), c = r.at(e[4], e[5]);
    return a.intersects(b) && a.intersects(c) && b.intersects(c) && !w2_ok(a, b, c);
  }

  switch (*axiom) {
    case TransitAxiom::kM: {
      if (!need(4)) return false;
      const Subset s = r.at(e[0], e[1]);
      return s.contains(e[2]) && s.contains(e[3]) && !r.at(e[2], e[3]).subset_of(s);
    }
    case TransitAxiom::kAPrime: {
      // Existential axiom: the witness stands for "no pair attains X".
      if (!need(2)) return false;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u; v < n; ++v) {
          if (r.at(u, v) == full) return false;
        }
      }
      return true;
    }
    case TransitAxiom::kK: {
      if (!need(4)) return false;
      const Subset meet = r.at(e[0], e[1]) & r.at(e[2], e[3]);
      if (meet.empty()) return false;
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p; q < n; ++q) {
          if (r.at(p, q) == meet) return false;
        }
      }
      return true;
    }
    case TransitAxiom::kW:
    case TransitAxiom::kW1: {
      if (!need(3)) return false;
      const std::size_t x = e[0], y = e[1], z = e[2];
      if (x == y || y == z || x == z) return false;
      return !r.at(x, y).contains(z) && !r.at(x, z).contains(y) && !r.at(y, z).contains(x);
    }
    case TransitAxiom::kW2: {
      if (!need(6)) return false;
      return !w2_ok(r.at(e[0], e[1]), r.at(e[2], e[3]), r.at(e[4], e[5]));
    }
    case TransitAxiom::kW3: {
      if (!need(7)) return false;
      const Subset a = r.at(e[0], e[1]), b = r.at(e[2], e[3]);
      const std::size_t x = e[4], y = e[5], z = e[6];
      return a.contains(x) && !b.contains(x) && a.contains(y) && b.contains(y) && b.contains(z) && !a.contains(z) &&
             !r.at(x, z).contains(y);
    }
    case TransitAxiom::kX:
    case TransitAxiom::kXPrime: {
      if (!need(4)) return false;
      const Subset s = r.at(e[0], e[1]);
      if (*axiom == TransitAxiom::kXPrime && s.contains(e[2])) return false;
      return s.contains(e[3]) && !r.at(e[0], e[2]).contains(e[3]) && !r.at(e[2], e[1]).contains(e[3]);
    }
    case TransitAxiom::kU: {
      if (!need(3)) return false;
      const Subset s = r.at(e[0], e[1]);
      return s.contains(e[2]) && (r.at(e[0], e[2]) | r.at(e[2], e[1])) != s;
    }
    case TransitAxiom::kUC:
    case TransitAxiom::kMM:
    case TransitAxiom::kK3: {
      if (!need(4)) return false;
      const Subset a = r.at(e[0], e[1]), b = r.at(e[2], e[3]);
      if (!a.intersects(b)) return false;
      const Subset u = a | b;
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p; q < n; ++q) {
          const Subset c = r.at(p, q);
          if (*axiom == TransitAxiom::kUC && u.contains(p) && u.contains(q) && c == u) return false;
          if (*axiom == TransitAxiom::kMM && u.contains(p) && u.contains(q) && u.subset_of(c)) return false;
          if (*axiom == TransitAxiom::kK3 && u.subset_of(c)) {
            bool in_all = true;
            for (std::size_t p2 = 0; p2 < n && in_all; ++p2) {
              for (std::size_t q2 = p2; q2 < n; ++q2) {
                const Subset c2 = r.at(p2, q2);
                if (u.subset_of(c2) && !(c2.contains(p) && c2.contains(q))) {
                  in_all = false;
                  break;
                }
              }
            }
            if (in_all) return false;
          }
        }
      }
      return true;
    }
    case TransitAxiom::kWP: {
      if (!need(6)) return false;
      const Subset a = r.at(e[0], e[1]), b = r.at(e[2], e[3]), c = r.at(e[4], e[5]);
      return a.intersects(b) && a.intersects(c) && b.intersects(c) && !wp_ok(a, b, c);
    }
    case TransitAxiom::kO: {
      if (!need(2)) return false;
      const Subset s = r.at(e[0], e[1]);
      for (std::size_t p : s) {
        for (std::size_t q : s) {
          bool all = true;
          for (std::size_t z : s) all = all && (r.at(p, z) | r.at(z, q)) == s;
          if (all) return false;
        }
      }
      return true;
    }
    case TransitAxiom::kOPrime: {
      if (!need(3)) return false;
      const Subset s = r.at(e[0], e[1]);
      const std::size_t z = e[2];
      if (!s.contains(z)) return false;
      for (std::size_t p : s) {
        for (std::size_t q : s) {
          if ((r.at(p, z) | r.at(z, q)) == s) return false;
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace transit
