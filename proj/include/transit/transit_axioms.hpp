#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>

#include "transit/model.hpp"

namespace transit {

/// Betweenness axioms decided on a transit function.
enum class TransitAxiom {
  kM,       // monotone
  kAPrime,  // some pair attains X
  kK,       // intersections of transit sets are transit sets
  kW,
  kW1,  // alias of kW
  kW2,
  kW3,
  kX,
  kXPrime,
  kU,
  kUC,
  kMM,
  kK3,
  kWP,
  kO,
  kOPrime,
};

inline constexpr std::array<TransitAxiom, 16> kAllTransitAxioms = {
    TransitAxiom::kM,  TransitAxiom::kAPrime, TransitAxiom::kK,  TransitAxiom::kW,
    TransitAxiom::kW1, TransitAxiom::kW2,     TransitAxiom::kW3, TransitAxiom::kX,
    TransitAxiom::kXPrime, TransitAxiom::kU,  TransitAxiom::kUC, TransitAxiom::kMM,
    TransitAxiom::kK3, TransitAxiom::kWP,     TransitAxiom::kO,  TransitAxiom::kOPrime,
};

std::string_view tag(TransitAxiom axiom);
std::optional<TransitAxiom> parse_transit_axiom(std::string_view tag);

enum class WVariant { kW, kW1, kW2, kW3 };
enum class XVariant { kX, kXPrime };
enum class OVariant { kO, kOPrime };

// Every checker quantifies over unordered pairs u < v and distinct elements in
// lexicographic order and stops at the first violation, so the witness is the
// lexicographically smallest violating tuple. Existential pairs range over all
// p <= q, including p == q (R(p,p) = {p}).

/// (m). Witness (u, v, p, q): p, q in R(u,v) but R(p,q) not inside R(u,v).
Verdict check_monotone(const TransitFunction& r);
/// (a'). Witness (u, v): a pair with a largest transit set, which is still not X.
Verdict check_attainment(const TransitFunction& r);
/// (k). Witness (u, v, x, y): R(u,v) and R(x,y) meet, the meet is no R(p,q).
Verdict check_intersection_closure(const TransitFunction& r);
/// (w), (w1), (w2), (w3).
/// Witnesses: w/w1 (x, y, z); w2 (p, q, u, v, s, t); w3 (u, v, p, q, x, y, z)
/// with x in R(u,v) - R(p,q), y in both, z in R(p,q) - R(u,v), y not in R(x,z).
Verdict check_w_family(const TransitFunction& r, WVariant variant);
/// (w2) restricted to triples with pairwise nonempty intersections.
Verdict check_w2_guarded(const TransitFunction& r);
/// (x), (x'). Witness (x, y, z, m): m in R(x,y) but not in R(x,z) u R(z,y).
Verdict check_x_family(const TransitFunction& r, XVariant variant);
/// (u). Witness (u, v, z): z in R(u,v), R(u,z) u R(z,v) differs from R(u,v).
Verdict check_u(const TransitFunction& r);
/// (uc). Witness (x, y, u, v): intersecting transit sets whose union is no R(p,q).
Verdict check_uc(const TransitFunction& r);
/// (mm). Witness (x, y, u, v): no p, q in the union has R(p,q) covering it.
Verdict check_mm(const TransitFunction& r);
/// (k3). Witness (x, y, u, v): no pair both covers the union and lies in every cover.
Verdict check_k3(const TransitFunction& r);
/// (wp). Witness (u, v, x, y, p, q): pairwise intersecting, none inside the union of the others.
Verdict check_wp(const TransitFunction& r);
/// (o), (o'). Witness (u, v) for o, (u, v, z) for o'.
Verdict check_o_family(const TransitFunction& r, OVariant variant);

Verdict check(const TransitFunction& r, TransitAxiom axiom);

/// Every axiom, evaluated once.
std::map<TransitAxiom, Verdict> classify_all(const TransitFunction& r);

/// Re-evaluates the defining condition at a failing verdict's witness only.
/// True when the witness really violates the axiom named by `verdict.tag`.
bool witness_violates(const TransitFunction& r, const Verdict& verdict);

}  // namespace transit
