#pragma once

// Conversions between library values and the oracle's plain masks, plus the
// oracle's verdict for every Property.

#include <optional>
#include <string>

#include "oracle.hpp"
#include "transit/document.hpp"
#include "transit/enumeration.hpp"

namespace support {

using transit::Property;

inline oracle::Table to_table(const transit::TransitFunction& r) {
  const int n = static_cast<int>(r.n());
  oracle::Table t{n, std::vector<oracle::Mask>(static_cast<std::size_t>(n * n))};
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      t.t[static_cast<std::size_t>(u * n + v)] =
          r.at(static_cast<std::size_t>(u), static_cast<std::size_t>(v)).bits();
  return t;
}

inline transit::TransitFunction from_table(const oracle::Table& t) {
  std::vector<transit::Subset> table;
  for (auto m : t.t) table.emplace_back(m);
  return {transit::GroundSet::standard(static_cast<std::size_t>(t.n)), std::move(table)};
}

inline oracle::Family to_family(const transit::SetSystem& s) {
  oracle::Family f{static_cast<int>(s.n()), {}};
  for (auto c : s.clusters()) f.c.push_back(c.bits());
  return f;
}

inline transit::SetSystem from_family(const oracle::Family& f) {
  std::vector<transit::Subset> clusters;
  for (auto m : f.c) clusters.emplace_back(m);
  return {transit::GroundSet::standard(static_cast<std::size_t>(f.n)), std::move(clusters)};
}

inline bool family_property(const oracle::Family& f, Property p) {
  using namespace oracle;
  switch (p) {
    case Property::kHelly: return helly(f);
    case Property::kPrePyramidal: return pre_pyramidal(f);
    case Property::kPyramidal: return pre_pyramidal(f) && K2(f);
    case Property::kWeaklyPyramidal: return weak_hierarchy(f) && WP(f);
    case Property::kKS: return KS(f);
    case Property::kKR: return KR(f);
    case Property::kKC: return KC(f);
    case Property::kK1: return K1(f);
    case Property::kK2: return K2(f);
    case Property::kSysK3: return K3(f);
    case Property::kSysMM: return MM(f);
    case Property::kSysUC: return UC(f);
    case Property::kH: return H(f);
    case Property::kPairedH: return paired_hierarchy(f);
    case Property::kWeakHierarchy: return weak_hierarchy(f);
    case Property::kWPrime: return W_prime(f);
    case Property::kSysWP: return WP(f);
    case Property::kTSystem: return t_system(f);
    case Property::kBinaryClustering: return t_system(f) && K1(f);
    case Property::kClusteringSystem: return KS(f) && K1(f);
    default: return false;
  }
}

inline bool transit_property(const oracle::Table& r, Property p) {
  using namespace oracle;
  switch (p) {
    case Property::kM: return m(r);
    case Property::kAPrime: return a_prime(r);
    case Property::kK: return k(r);
    case Property::kW: return w(r);
    case Property::kW1: return w1(r);
    case Property::kW2: return w2(r, false);
    case Property::kW2Guarded: return w2(r, true);
    case Property::kW3: return w3(r);
    case Property::kX: return x_family(r, false);
    case Property::kXPrime: return x_family(r, true);
    case Property::kU: return u(r);
    case Property::kUC: return uc_mm(r, true);
    case Property::kMM: return uc_mm(r, false);
    case Property::kK3: return k3(r);
    case Property::kWP: return wp(r);
    case Property::kO: return o_family(r, false);
    case Property::kOPrime: return o_family(r, true);
    default: return family_property(transit_family(r), p);
  }
}

inline transit::PropertyMask family_mask(const oracle::Family& f) {
  transit::PropertyMask mask = 0;
  for (std::size_t i = 0; i < transit::kPropertyCount; ++i) {
    const auto p = static_cast<Property>(i);
    if (!transit::is_transit_only(p) && family_property(f, p)) mask |= transit::bit(p);
  }
  return mask;
}

inline transit::PropertyMask transit_mask(const oracle::Table& r) {
  transit::PropertyMask mask = 0;
  for (std::size_t i = 0; i < transit::kPropertyCount; ++i) {
    const auto p = static_cast<Property>(i);
    if (transit_property(r, p)) mask |= transit::bit(p);
  }
  return mask;
}

/// Code of the transit::Error thrown by `f`, or nullopt when nothing is thrown.
template <class F>
std::optional<transit::ErrorCode> error_code(F f) {
  try {
    f();
  } catch (const transit::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline transit::Document doc(const std::string& text) { return transit::parse_document(text); }

}  // namespace support
