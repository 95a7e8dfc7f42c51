#include <gtest/gtest.h>

#include <random>
#include <set>

#include "enumgeo/pencil.hpp"

using namespace enumgeo;

namespace {

// All L on the grid (1/g)Z^2 with m L = xi, where xi has denominator dividing g/m.
std::set<PicElement> grid_solutions(int m, const PicElement& xi, int g) {
  std::set<PicElement> out;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      const PicElement p(Rational(i, g), Rational(j, g));
      if (p * m == xi) out.insert(p);
    }
  return out;
}

int brute_real_torsion(int m, const RealEllipticModel& model, int component) {
  int n = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const PicElement p(Rational(i, m), Rational(j, m));
      if (model.component_of(p) == component) ++n;
    }
  return n;
}

}  // namespace

TEST(Pencil, Reduction) {
  EXPECT_EQ(reduce_mod_one(Rational(7, 3)), Rational(1, 3));
  EXPECT_EQ(reduce_mod_one(Rational(-1, 3)), Rational(2, 3));
  EXPECT_EQ(reduce_mod_one(Rational(-2)), Rational(0));
  EXPECT_EQ(PicElement(Rational(1, 2), Rational(3, 2)), PicElement(Rational(-1, 2), Rational(1, 2)));
}

TEST(Pencil, SolveDivisionMatchesGrid) {
  EXPECT_EQ(solve_division(1, PicElement(Rational(1, 5), Rational(2, 7))).size(), 1u);
  EXPECT_EQ(solve_division(3, PicElement()).size(), 9u);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(0, 6);
  for (int m = 1; m <= 6; ++m) {
    const int den = 7;
    const PicElement xi(Rational(num(rng), den), Rational(num(rng), den));
    const auto sols = solve_division(m, xi);
    const std::set<PicElement> got(sols.begin(), sols.end());
    EXPECT_EQ(got.size(), static_cast<std::size_t>(m * m));
    EXPECT_EQ(got, grid_solutions(m, xi, m * den)) << m;
    // a coset of the m-torsion
    for (const auto& s : sols) EXPECT_EQ((s - sols.front()) * m, PicElement());
  }
  EXPECT_THROW(solve_division(0, PicElement()), DomainError);
}

TEST(Pencil, RealTorsion) {
  const RealEllipticModel two(RealType::two_components), conn(RealType::connected);
  EXPECT_EQ(real_torsion_count(4, two, 0), 4);
  EXPECT_EQ(real_torsion_count(4, two, 1), 4);
  EXPECT_EQ(real_torsion_count(3, two, 1), 0);
  EXPECT_EQ(real_torsion_count(3, conn, 0), 3);
  for (int m = 1; m <= 12; ++m) {
    for (int c = 0; c < 2; ++c) {
      EXPECT_EQ(real_torsion_count(m, two, c), brute_real_torsion(m, two, c)) << m;
      EXPECT_EQ(static_cast<int>(real_torsion_points(m, two, c).size()), real_torsion_count(m, two, c));
    }
    EXPECT_EQ(real_torsion_count(m, conn, 0), brute_real_torsion(m, conn, 0)) << m;
    EXPECT_EQ(real_torsion_count(m, two, 0) + real_torsion_count(m, two, 1), m % 2 ? m : 2 * m);
  }
  EXPECT_THROW(real_torsion_count(3, conn, 1), DomainError);
}

TEST(Pencil, RealSolutions) {
  for (RealType type : {RealType::two_components, RealType::connected}) {
    const RealEllipticModel model(type);
    for (int m = 1; m <= 9; m += 2) {
      const PicElement xi = model.real_point(0, Rational(5, 13));
      EXPECT_EQ(real_solution_count(m, xi, model), m);
      std::set<PicElement> filtered;
      for (const auto& s : solve_division(m, xi))
        if (model.is_real(s)) filtered.insert(s);
      const auto sols = real_solutions(m, xi, model);
      EXPECT_EQ(std::set<PicElement>(sols.begin(), sols.end()), filtered);
      EXPECT_EQ(real_solution_count(m, xi, model), real_torsion_count(m, model, 0));
    }
  }
  const RealEllipticModel two(RealType::two_components);
  EXPECT_THROW(real_solution_count(2, PicElement(), two), DomainError);
  EXPECT_THROW(real_solution_count(3, two.real_point(1, Rational(1, 3)), two), DomainError);
}

TEST(Pencil, SingularQuadrics) {
  EXPECT_EQ(real_singular_quadric_count(QuadricConfig::different_components), 0);
  EXPECT_EQ(real_singular_quadric_count(QuadricConfig::same_component), 4);
  EXPECT_EQ(real_singular_quadric_count(QuadricConfig::connected), 2);
  EXPECT_EQ(parse_quadric_config("same"), QuadricConfig::same_component);
  EXPECT_THROW(parse_quadric_config("none"), DomainError);
}
