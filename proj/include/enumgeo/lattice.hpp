#pragma once

// Picard-lattice arithmetic on the blown quadric Q~ = (P1 x P1) blown up at
// one point, and on the blown-up projective 3-space.
//
// A surface class (a, b, k) stands for a*l1 + b*l2 - k*E, where l1, l2 are the
// two rulings and E the exceptional curve. The pairing is
//   l1.l1 = l2.l2 = 0,  l1.l2 = 1,  E.E = -1,  l1.E = l2.E = 0,
// and the anticanonical class is 2*l1 + 2*l2 - E. Negative k encodes
// positive multiples of E, so one type covers every effective summand
// that appears in the WDVV splitting sum.

#include <algorithm>
#include <array>
#include <compare>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "enumgeo/errors.hpp"

namespace enumgeo {

struct SurfaceClass {
  int a = 0;
  int b = 0;
  int k = 0;

  friend constexpr auto operator<=>(const SurfaceClass&, const SurfaceClass&) = default;

  constexpr SurfaceClass operator+(const SurfaceClass& o) const { return {a + o.a, b + o.b, k + o.k}; }
  constexpr SurfaceClass operator-(const SurfaceClass& o) const { return {a - o.a, b - o.b, k - o.k}; }
  constexpr bool is_zero() const { return a == 0 && b == 0 && k == 0; }
  constexpr SurfaceClass swapped() const { return {b, a, k}; }

  friend std::ostream& operator<<(std::ostream& os, const SurfaceClass& c) {
    return os << '(' << c.a << ',' << c.b << ',' << c.k << ')';
  }
};

inline std::string to_string(const SurfaceClass& c) {
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + "," + std::to_string(c.k) + ")";
}

/// d[l] - k[e] on the blow-up of P3 at a point.
struct ThreefoldClass {
  int d = 1;
  int k = 0;

  friend constexpr auto operator<=>(const ThreefoldClass&, const ThreefoldClass&) = default;
};

inline constexpr SurfaceClass kRuling1{1, 0, 0};
inline constexpr SurfaceClass kRuling2{0, 1, 0};
inline constexpr SurfaceClass kExceptional{0, 0, -1};
inline constexpr SurfaceClass kAnticanonical{2, 2, 1};

constexpr int intersect(const SurfaceClass& x, const SurfaceClass& y) {
  return x.a * y.b + y.a * x.b - x.k * y.k;
}

constexpr int anticanonical_degree(const SurfaceClass& c) { return 2 * c.a + 2 * c.b - c.k; }

/// Number of point constraints cutting a finite set of rational curves.
constexpr int point_count_surface(const SurfaceClass& c) { return anticanonical_degree(c) - 1; }

inline int point_count_threefold(const ThreefoldClass& c) {
  if (c.d < c.k) throw DomainError("threefold class needs d >= k");
  return 2 * c.d - c.k;
}

/// Membership in the cone spanned by E, l1 - E and l2 - E.
constexpr bool is_effective(const SurfaceClass& c) { return c.a >= 0 && c.b >= 0 && c.a + c.b - c.k >= 0; }

/// Adjunction count (a-1)(b-1) - k(k-1)/2 of nodes of an immersed rational
/// curve in the class. Negative means no such curve exists.
constexpr int node_count(const SurfaceClass& c) { return (c.a - 1) * (c.b - 1) - c.k * (c.k - 1) / 2; }

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Newton polygon of a class: the a-by-b rectangle (b wide, a tall) with the
/// top-right corner chopped by a k-step diagonal.
class NewtonPolygon {
 public:
  explicit NewtonPolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {}

  const std::vector<LatticePoint>& vertices() const { return vertices_; }

  /// Number of boundary lattice points (= lattice length of the boundary).
  int boundary_points() const {
    int n = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const auto& p = vertices_[i];
      const auto& q = vertices_[(i + 1) % vertices_.size()];
      n += gcd_abs(q.x - p.x, q.y - p.y);
    }
    return n;
  }

  /// Width of the horizontal slice at integer height y.
  int width_at(int y) const {
    int lo = 0, hi = 0;
    bool first = true;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const auto& p = vertices_[i];
      const auto& q = vertices_[(i + 1) % vertices_.size()];
      if ((p.y - y) * (q.y - y) > 0) continue;
      if (p.y == q.y) {
        if (p.y != y) continue;
        update(lo, hi, first, p.x);
        update(lo, hi, first, q.x);
        continue;
      }
      // Edges of this polygon have unit or zero horizontal slope, so x is integral.
      const int x = p.x + (q.x - p.x) * (y - p.y) / (q.y - p.y);
      update(lo, hi, first, x);
    }
    return first ? 0 : hi - lo;
  }

  bool is_convex() const {
    const auto n = vertices_.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = vertices_[i];
      const auto& q = vertices_[(i + 1) % n];
      const auto& r = vertices_[(i + 2) % n];
      const long cross = static_cast<long>(q.x - p.x) * (r.y - q.y) - static_cast<long>(q.y - p.y) * (r.x - q.x);
      if (cross <= 0) return false;
    }
    return true;
  }

 private:
  static int gcd_abs(int x, int y) {
    x = x < 0 ? -x : x;
    y = y < 0 ? -y : y;
    while (y != 0) {
      const int t = x % y;
      x = y;
      y = t;
    }
    return x;
  }
  static void update(int& lo, int& hi, bool& first, int x) {
    if (first) {
      lo = hi = x;
      first = false;
    } else {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }

  std::vector<LatticePoint> vertices_;
};

inline NewtonPolygon polygon_for(const SurfaceClass& c) {
  if (c.a < 1 || c.b < 1 || c.k < 0 || c.k > std::min(c.a, c.b))
    throw PolygonDegenerateError("no chopped-rectangle polygon for class " + to_string(c));
  std::vector<LatticePoint> v{{0, 0}, {c.b, 0}, {c.b, c.a - c.k}, {c.b - c.k, c.a}, {0, c.a}};
  // k = 0, k = a or k = b collapse a corner
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.back() == v.front()) v.pop_back();
  return NewtonPolygon(std::move(v));
}

/// Ordered pairs (b1, b2) of nonzero effective classes with b1 + b2 = c.
/// Effective classes are nonnegative combinations of the basis
/// l2 - E, l1 - E, E, so this walks the box of generator coordinates.
inline std::vector<std::pair<SurfaceClass, SurfaceClass>> enumerate_splittings(const SurfaceClass& c) {
  std::vector<std::pair<SurfaceClass, SurfaceClass>> out;
  if (!is_effective(c)) return out;
  const int z = c.a + c.b - c.k;
  for (int a1 = 0; a1 <= c.a; ++a1) {
    for (int b1 = 0; b1 <= c.b; ++b1) {
      for (int z1 = 0; z1 <= z; ++z1) {
        const SurfaceClass first{a1, b1, a1 + b1 - z1};
        const SurfaceClass second = c - first;
        if (first.is_zero() || second.is_zero()) continue;
        out.emplace_back(first, second);
      }
    }
  }
  return out;
}

}  // namespace enumgeo
