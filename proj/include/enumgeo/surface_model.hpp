#pragma once

// The three rational surfaces the curve-counting engines understand. Each
// model is a stateless traits struct: class type, intersection form,
// anticanonical degree, effective cone and recursion seeds. The WDVV engine
// and the cache are templated on these.

#include <array>
#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enumgeo/errors.hpp"
#include "enumgeo/lattice.hpp"

namespace enumgeo {

enum class SurfaceId { projective_plane, quadric, blown_quadric };

inline std::string_view surface_name(SurfaceId id) {
  switch (id) {
    case SurfaceId::projective_plane: return "projective_plane";
    case SurfaceId::quadric: return "quadric";
    case SurfaceId::blown_quadric: return "blown_quadric";
  }
  return "?";
}

/// Accepts both "blown_quadric" and "blown-quadric" spellings.
inline SurfaceId parse_surface_id(std::string_view name) {
  std::string s(name);
  for (auto& ch : s)
    if (ch == '-') ch = '_';
  if (s == "projective_plane" || s == "plane") return SurfaceId::projective_plane;
  if (s == "quadric") return SurfaceId::quadric;
  if (s == "blown_quadric") return SurfaceId::blown_quadric;
  throw DomainError("unknown surface identifier '" + std::string(name) + "'");
}

template <class Class>
struct DivisorPair {
  Class first;
  Class second;
};

struct PlaneClass {
  int degree = 0;
  friend constexpr auto operator<=>(const PlaneClass&, const PlaneClass&) = default;
  friend std::ostream& operator<<(std::ostream& os, const PlaneClass& c) { return os << '(' << c.degree << ')'; }
};

inline std::string to_string(const PlaneClass& c) { return "(" + std::to_string(c.degree) + ")"; }

namespace detail {
inline void expect_arity(const std::vector<int>& coords, std::size_t n, std::string_view surface) {
  if (coords.size() != n)
    throw DomainError("class for " + std::string(surface) + " needs " + std::to_string(n) + " coordinates, got " +
                      std::to_string(coords.size()));
}
}  // namespace detail

struct ProjectivePlane {
  using Class = PlaneClass;
  static constexpr SurfaceId id = SurfaceId::projective_plane;

  static int intersect(const Class& x, const Class& y) { return x.degree * y.degree; }
  static int anticanonical_degree(const Class& c) { return 3 * c.degree; }
  static int point_count(const Class& c) { return anticanonical_degree(c) - 1; }
  static bool is_effective(const Class& c) { return c.degree >= 0; }
  static bool is_zero(const Class& c) { return c.degree == 0; }
  static Class canonical(const Class& c) { return c; }

  static std::vector<std::pair<Class, Class>> splittings(const Class& c) {
    std::vector<std::pair<Class, Class>> out;
    for (int d1 = 1; d1 < c.degree; ++d1) out.push_back({{d1}, {c.degree - d1}});
    return out;
  }

  static std::map<Class, int> base_cases() { return {{{1}, 1}}; }

  static std::array<DivisorPair<Class>, 3> divisor_pairs() { return {{{{1}, {1}}, {{2}, {1}}, {{1}, {3}}}}; }

  static std::vector<int> coords(const Class& c) { return {c.degree}; }
  static Class from_coords(const std::vector<int>& v) {
    detail::expect_arity(v, 1, surface_name(id));
    return {v[0]};
  }
};

/// P1 x P1 with classes (a, b, 0); the k slot must stay zero.
struct Quadric {
  using Class = SurfaceClass;
  static constexpr SurfaceId id = SurfaceId::quadric;

  static int intersect(const Class& x, const Class& y) { return x.a * y.b + y.a * x.b; }
  static int anticanonical_degree(const Class& c) { return 2 * c.a + 2 * c.b; }
  static int point_count(const Class& c) { return anticanonical_degree(c) - 1; }
  static bool is_effective(const Class& c) { return c.k == 0 && c.a >= 0 && c.b >= 0; }
  static bool is_zero(const Class& c) { return c.is_zero(); }
  static Class canonical(const Class& c) { return c.a <= c.b ? c : c.swapped(); }

  static std::vector<std::pair<Class, Class>> splittings(const Class& c) {
    std::vector<std::pair<Class, Class>> out;
    for (int a1 = 0; a1 <= c.a; ++a1) {
      for (int b1 = 0; b1 <= c.b; ++b1) {
        const Class first{a1, b1, 0};
        const Class second = c - first;
        if (first.is_zero() || second.is_zero()) continue;
        out.emplace_back(first, second);
      }
    }
    return out;
  }

  static std::map<Class, int> base_cases() { return {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}}; }

  static std::array<DivisorPair<Class>, 3> divisor_pairs() {
    return {{{{1, 0, 0}, {0, 1, 0}}, {{1, 1, 0}, {1, 0, 0}}, {{0, 1, 0}, {2, 1, 0}}}};
  }

  static std::vector<int> coords(const Class& c) { return {c.a, c.b}; }
  static Class from_coords(const std::vector<int>& v) {
    if (v.size() == 3 && v[2] == 0) return {v[0], v[1], 0};
    detail::expect_arity(v, 2, surface_name(id));
    return {v[0], v[1], 0};
  }
};

/// (P1 x P1) blown up at one point, classes (a, b, k) = a l1 + b l2 - k E.
struct BlownQuadric {
  using Class = SurfaceClass;
  static constexpr SurfaceId id = SurfaceId::blown_quadric;

  static int intersect(const Class& x, const Class& y) { return enumgeo::intersect(x, y); }
  static int anticanonical_degree(const Class& c) { return enumgeo::anticanonical_degree(c); }
  static int point_count(const Class& c) { return point_count_surface(c); }
  static bool is_effective(const Class& c) { return enumgeo::is_effective(c); }
  static bool is_zero(const Class& c) { return c.is_zero(); }
  static Class canonical(const Class& c) { return c.a <= c.b ? c : c.swapped(); }
  static std::vector<std::pair<Class, Class>> splittings(const Class& c) { return enumerate_splittings(c); }

  // Value 1 on E, l1, l2, l1 - E, l2 - E and l1 + l2 - E; every other
  // effective class with at most two point constraints is a multiple or a
  // reducible sum and carries 0.
  static std::map<Class, int> base_cases() {
    std::map<Class, int> out;
    for (int s = 0; s <= 3; ++s) {
      for (int a = 0; a <= s; ++a) {
        const int b = s - a;
        for (int k = 2 * s - 3; k <= s; ++k) {
          const Class c{a, b, k};
          if (c.is_zero() || !is_effective(c) || point_count(c) > 2) continue;
          out[c] = 0;
        }
      }
    }
    for (const Class& c : {Class{0, 0, -1}, Class{1, 0, 0}, Class{0, 1, 0}, Class{1, 0, 1}, Class{0, 1, 1},
                           Class{1, 1, 1}})
      out[c] = 1;
    return out;
  }

  static std::array<DivisorPair<Class>, 3> divisor_pairs() {
    return {{{kRuling1, kRuling2}, {{1, 1, 0}, kRuling1}, {kRuling1, {1, 1, 1}}}};
  }

  static std::vector<int> coords(const Class& c) { return {c.a, c.b, c.k}; }
  static Class from_coords(const std::vector<int>& v) {
    detail::expect_arity(v, 3, surface_name(id));
    return {v[0], v[1], v[2]};
  }
};

/// Runtime description of a surface: divisor basis, intersection matrix and
/// anticanonical class in that basis.
struct SurfaceModel {
  SurfaceId id;
  std::vector<std::string> basis;
  std::vector<std::vector<int>> intersection_matrix;
  std::vector<int> anticanonical;
};

inline SurfaceModel surface_model(SurfaceId id) {
  switch (id) {
    case SurfaceId::projective_plane: return {id, {"H"}, {{1}}, {3}};
    case SurfaceId::quadric: return {id, {"l1", "l2"}, {{0, 1}, {1, 0}}, {2, 2}};
    case SurfaceId::blown_quadric:
      return {id, {"l1", "l2", "E"}, {{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}, {2, 2, -1}};
  }
  throw DomainError("unknown surface identifier");
}

}  // namespace enumgeo
