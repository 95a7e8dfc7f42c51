#pragma once

// Desk model of the pencil-of-quadrics counts: a real elliptic curve is the
// torus R^2/Z^2 with the group law of the plane, the chosen point p at the
// origin, and Pic_d identified with the curve itself. Two real structures:
//
//   two-components: (x, y) -> (x, -y); real locus y = 0 (through p) and y = 1/2
//   connected:      (x, y) -> (y, x);  real locus x = y (rhombic lattice)
//
// All coordinates are exact rationals reduced into [0, 1).

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "enumgeo/errors.hpp"

namespace enumgeo {

using Rational = boost::rational<std::int64_t>;

inline Rational reduce_mod_one(const Rational& q) {
  std::int64_t fl = q.numerator() / q.denominator();
  if (q.numerator() < 0 && q.numerator() % q.denominator() != 0) --fl;
  return q - fl;
}

class PicElement {
 public:
  PicElement() = default;
  PicElement(Rational x, Rational y) : x_(reduce_mod_one(x)), y_(reduce_mod_one(y)) {}

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  PicElement operator+(const PicElement& o) const { return {x_ + o.x_, y_ + o.y_}; }
  PicElement operator-(const PicElement& o) const { return {x_ - o.x_, y_ - o.y_}; }
  PicElement operator*(std::int64_t m) const { return {x_ * m, y_ * m}; }

  friend bool operator==(const PicElement&, const PicElement&) = default;
  friend bool operator<(const PicElement& l, const PicElement& r) {
    return l.x_ != r.x_ ? l.x_ < r.x_ : l.y_ < r.y_;
  }
  friend std::ostream& operator<<(std::ostream& os, const PicElement& p) {
    return os << '(' << p.x_ << ", " << p.y_ << ')';
  }

 private:
  Rational x_{0};
  Rational y_{0};
};

enum class RealType { two_components, connected };

class RealEllipticModel {
 public:
  explicit RealEllipticModel(RealType type) : type_(type) {}

  RealType type() const { return type_; }

  PicElement conjugate(const PicElement& p) const {
    if (type_ == RealType::two_components) return {p.x(), -p.y()};
    return {p.y(), p.x()};
  }

  bool is_real(const PicElement& p) const { return conjugate(p) == p; }

  int component_count() const { return type_ == RealType::two_components ? 2 : 1; }

  /// 0 for the component through the origin, 1 for the other one; -1 if not real.
  int component_of(const PicElement& p) const {
    if (!is_real(p)) return -1;
    if (type_ == RealType::connected) return 0;
    return p.y() == Rational(0) ? 0 : 1;
  }

  /// A point on the given real component, parametrised by t in [0, 1).
  PicElement real_point(int component, const Rational& t) const {
    if (component < 0 || component >= component_count()) throw DomainError("no such real component");
    if (type_ == RealType::connected) return {t, t};
    return {t, component == 0 ? Rational(0) : Rational(1, 2)};
  }

 private:
  RealType type_;
};

/// All m^2 solutions of m * L = xi.
inline std::vector<PicElement> solve_division(int m, const PicElement& xi) {
  if (m < 1) throw DomainError("division order must be positive");
  std::vector<PicElement> out;
  out.reserve(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.emplace_back((xi.x() + i) / m, (xi.y() + j) / m);
  return out;
}

/// Real m-torsion points on one real component.
inline std::vector<PicElement> real_torsion_points(int m, const RealEllipticModel& model, int component) {
  if (m < 1) throw DomainError("torsion order must be positive");
  std::vector<PicElement> out;
  if (model.type() == RealType::connected || component == 0) {
    for (int i = 0; i < m; ++i) out.push_back(model.real_point(0, Rational(i, m)));
  } else if (m % 2 == 0) {
    // t + 1/2 is m-torsion in the y direction only when m is even.
    for (int i = 0; i < m; ++i) out.push_back(model.real_point(1, Rational(i, m)));
  }
  return out;
}

/// Number of order-m torsion points (points with m * P = 0) on a component.
inline int real_torsion_count(int m, const RealEllipticModel& model, int component) {
  if (m < 1) throw DomainError("torsion order must be positive");
  if (component < 0 || component >= model.component_count()) throw DomainError("no such real component");
  if (model.type() == RealType::connected || component == 0) return m;
  return m % 2 == 0 ? m : 0;
}

/// Real solutions of m * L = xi for odd m and real xi on the component of
/// the origin: one real solution translated by the real m-torsion there.
inline std::vector<PicElement> real_solutions(int m, const PicElement& xi, const RealEllipticModel& model) {
  if (m < 1 || m % 2 == 0) throw DomainError("real solution count is only defined for odd m");
  if (model.component_of(xi) != 0) throw DomainError("xi must be real and on the component of the origin");
  const PicElement base = model.type() == RealType::connected ? PicElement(xi.x() / m, xi.x() / m)
                                                              : PicElement(xi.x() / m, Rational(0));
  std::vector<PicElement> out;
  for (const auto& t : real_torsion_points(m, model, 0)) out.push_back(base + t);
  return out;
}

inline int real_solution_count(int m, const PicElement& xi, const RealEllipticModel& model) {
  return static_cast<int>(real_solutions(m, xi, model).size());
}

/// How the hyperplane class h sits relative to p on the real quartic curve.
enum class QuadricConfig { same_component, different_components, connected };

inline QuadricConfig parse_quadric_config(std::string_view tag) {
  if (tag == "same" || tag == "same_component" || tag == "same-component") return QuadricConfig::same_component;
  if (tag == "different" || tag == "different_components" || tag == "different-components")
    return QuadricConfig::different_components;
  if (tag == "connected") return QuadricConfig::connected;
  throw DomainError("unknown real configuration tag '" + std::string(tag) + "'");
}

inline std::string_view quadric_config_name(QuadricConfig c) {
  switch (c) {
    case QuadricConfig::same_component: return "same_component";
    case QuadricConfig::different_components: return "different_components";
    case QuadricConfig::connected: return "connected";
  }
  return "?";
}

/// Real singular members of the pencil. The double cover Pic_2 -> pencil
/// branches over the four L with 2L = h; a singular member is real exactly
/// when its branch point L is real. The same count holds for the blown-up
/// pencil.
inline int real_singular_quadric_count(QuadricConfig config) {
  const Rational t(2, 7);
  const RealEllipticModel model(config == QuadricConfig::connected ? RealType::connected : RealType::two_components);
  const PicElement h = model.real_point(config == QuadricConfig::different_components ? 1 : 0, t);
  int count = 0;
  for (const auto& branch : solve_division(2, h))
    if (model.is_real(branch)) ++count;
  return count;
}

}  // namespace enumgeo
