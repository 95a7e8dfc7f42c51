#pragma once

// Invariants of the blow-up Y of P3 at a point, assembled from invariants of
// the blown quadric. Every curve counted on Y lies on one member of a pencil
// of (blown-up) quadrics; members carrying curves of class (a, d-a, k) are the
// (d-2a)^2 solutions of a division equation on the base elliptic curve, of
// which d-2a are real when d is odd.
//
//   complex:  N_Y(d, k)    = sum_{a < b, a + b = d} (d-2a)^2 N(a, b, k)
//   real:     W_Y(d, k, s) = sum_{a < b, a + b = d} (-1)^(a + k/2) (d-2a) W((a, b, k), s)
//
// The real formula needs d odd and k even; for d, k both positive and even
// the real invariant vanishes.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enumgeo/big_integer.hpp"
#include "enumgeo/errors.hpp"
#include "enumgeo/floor_diagram.hpp"
#include "enumgeo/lattice.hpp"
#include "enumgeo/wdvv.hpp"

namespace enumgeo {

using SurfaceInvariant = std::function<BigInt(const SurfaceClass&)>;

inline BigInt gw_threefold(const ThreefoldClass& c, const SurfaceInvariant& surface_gw) {
  if (c.d < 1) throw DomainError("threefold degree must be positive");
  if (c.k < 0 || c.k > c.d) throw DomainError("threefold class needs 0 <= k <= d");
  BigInt total = 0;
  // 2a < d: the a = d/2 quadrics never contain a counted curve.
  for (int a = 0; 2 * a < c.d; ++a) {
    const int m = c.d - 2 * a;
    total += BigInt(m) * m * surface_gw({a, c.d - a, c.k});
  }
  return total;
}

inline BigInt gw_threefold(const ThreefoldClass& c) {
  GromovWitten<BlownQuadric> engine;
  return gw_threefold(c, [&](const SurfaceClass& s) { return engine(s); });
}

namespace detail {
inline int mod2(int v) { return ((v % 2) + 2) % 2; }
}  // namespace detail

/// Spinor state of a real strict transform as stated for bidegree (a, b):
/// m + b + k/2 (mod 2), m the number of real isolated nodes.
inline int spinor_parity_closed_form(int m, int b, int k) {
  if (k % 2 != 0) throw DomainError("spinor parity needs even k");
  return detail::mod2(m + b + k / 2);
}

/// Spinor state after ordering the bidegree in the positive basis:
/// m + k/2 for even a, m + k/2 + 1 for odd a.
inline int spinor_parity_case_split(int a, int k, int m) {
  if (k % 2 != 0) throw DomainError("spinor parity needs even k");
  return detail::mod2(m + k / 2 + (detail::mod2(a) == 1 ? 1 : 0));
}

/// True when d, k are positive even with d >= k and 0 <= s <= d - k/2 - 1:
/// the real invariant is then zero.
inline bool vanishing_check(const ThreefoldClass& c, int s) {
  return c.d > 0 && c.k > 0 && c.d % 2 == 0 && c.k % 2 == 0 && c.d >= c.k && s >= 0 && s <= c.d - c.k / 2 - 1;
}

enum class ProvenanceKind { computed_tropical, ingested };

struct WelschingerEntry {
  BigInt value;
  ProvenanceKind provenance = ProvenanceKind::computed_tropical;
  std::string source;  // ingested only
};

/// W_{Q~}((a, b, k), s) values by class and number s of conjugate pairs.
class WelschingerTable {
 public:
  using Key = std::pair<SurfaceClass, int>;

  void insert_computed(const SurfaceClass& c, BigInt value) {
    check_class(c, 0);
    auto& slot = entries_[{c, 0}];
    slot = {std::move(value), ProvenanceKind::computed_tropical, {}};
  }

  /// Adds an external value. Never overrides: a value that differs from an
  /// existing entry, or from the floor-diagram count when s = 0, is an error.
  void ingest(const SurfaceClass& c, int s, BigInt value, std::string source,
              const SurfaceInvariant& real_s0 = count_welschinger_real) {
    check_class(c, s);
    if (s == 0 && tropical_applicable(c)) {
      const BigInt computed = real_s0(c);
      if (computed != value)
        throw FormatError("ingested W(" + to_string(c) + ", s=0) = " + to_decimal(value) +
                          " conflicts with computed value " + to_decimal(computed));
    }
    if (const auto it = entries_.find({c, s}); it != entries_.end()) {
      if (it->second.value != value)
        throw FormatError("ingested W(" + to_string(c) + ", s=" + std::to_string(s) + ") = " + to_decimal(value) +
                          " conflicts with existing value " + to_decimal(it->second.value));
      if (it->second.provenance == ProvenanceKind::ingested) return;
    }
    entries_[{c, s}] = {std::move(value), ProvenanceKind::ingested, std::move(source)};
  }

  const WelschingerEntry* find(const SurfaceClass& c, int s) const {
    const auto it = entries_.find({c, s});
    return it == entries_.end() ? nullptr : &it->second;
  }

  const std::map<Key, WelschingerEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  static void check_class(const SurfaceClass& c, int s) {
    if (!is_effective(c) || c.is_zero()) throw FormatError("class " + to_string(c) + " is not effective");
    if (s < 0 || 2 * s > point_count_surface(c))
      throw FormatError("s = " + std::to_string(s) + " out of range for class " + to_string(c));
  }

  std::map<Key, WelschingerEntry> entries_;
};

struct PipelineTerm {
  int a = 0;
  int b = 0;
  int coefficient = 0;
  std::optional<BigInt> value;  // empty when the table lacks the input
  std::string provenance;
};

struct MissingInput {
  SurfaceClass cls;
  int s = 0;
};

struct PipelineResult {
  std::optional<BigInt> value;
  std::vector<PipelineTerm> terms;
  std::vector<MissingInput> missing;
  std::optional<std::string> vanishing_certificate;

  bool complete() const { return value.has_value(); }
};

struct ResolvedValue {
  std::optional<BigInt> value;
  std::string provenance;
};

/// Table entry, then the floor-diagram count (s = 0), then the vanishing
/// rules; otherwise unresolved.
inline ResolvedValue resolve_welschinger(const SurfaceClass& c, int s, const WelschingerTable& table,
                                         const SurfaceInvariant& real_s0 = count_welschinger_real) {
  if (const auto* e = table.find(c, s)) {
    return {e->value, e->provenance == ProvenanceKind::ingested ? "ingested(" + e->source + ")"
                                                                : std::string("computed-tropical")};
  }
  if (!is_effective(c)) return {BigInt(0), "rule(non-effective)"};
  if ((c.a == 0 && c.b >= 2) || (c.b == 0 && c.a >= 2)) return {BigInt(0), "rule(multiple-fiber)"};
  if (s == 0 && tropical_applicable(c)) return {real_s0(c), "computed-tropical"};
  // (0,1,1) and (1,0,1) are (-1)-curves; any other class meeting one of them
  // negatively has it as a fixed component.
  if (c.k > std::min(c.a, c.b) && c != SurfaceClass{0, 1, 1} && c != SurfaceClass{1, 0, 1})
    return {BigInt(0), "rule(negative-exceptional-intersection)"};
  if (node_count(c) < 0) return {BigInt(0), "rule(negative-node-count)"};
  return {std::nullopt, "missing"};
}

inline PipelineResult welschinger_threefold(const ThreefoldClass& c, int s, const WelschingerTable& table,
                                            const SurfaceInvariant& real_s0 = count_welschinger_real) {
  PipelineResult result;
  if (vanishing_check(c, s)) {
    result.value = BigInt(0);
    result.vanishing_certificate = "d=" + std::to_string(c.d) + " and k=" + std::to_string(c.k) +
                                   " positive even, s=" + std::to_string(s) + " <= d-k/2-1: invariant vanishes";
    return result;
  }
  if (c.d < 1 || c.d % 2 == 0) throw DomainError("real formula needs odd positive d");
  if (c.k < 0 || c.k % 2 != 0) throw DomainError("real formula needs even k >= 0");
  if (c.d < c.k) throw DomainError("real formula needs d >= k");
  if (s < 0 || s > c.d - c.k / 2 - 1)
    throw DomainError("s must lie in 0.." + std::to_string(c.d - c.k / 2 - 1));

  BigInt total = 0;
  for (int a = 0; 2 * a < c.d; ++a) {
    const SurfaceClass cls{a, c.d - a, c.k};
    const int sign = (a + c.k / 2) % 2 == 0 ? 1 : -1;
    PipelineTerm term{a, c.d - a, sign * (c.d - 2 * a), std::nullopt, {}};
    auto resolved = resolve_welschinger(cls, s, table, real_s0);
    term.provenance = std::move(resolved.provenance);
    if (resolved.value) {
      total += BigInt(term.coefficient) * *resolved.value;
      term.value = std::move(resolved.value);
    } else {
      result.missing.push_back({cls, s});
    }
    result.terms.push_back(std::move(term));
  }
  if (result.missing.empty()) result.value = std::move(total);
  return result;
}

}  // namespace enumgeo
