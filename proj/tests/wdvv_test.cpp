#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "enumgeo/big_integer.hpp"
#include "enumgeo/wdvv.hpp"

using namespace enumgeo;

namespace {

// Kontsevich's recursion for plane curves, coded directly from the closed
// form with its own binomial helper.
std::vector<BigInt> kontsevich(int max_d) {
  auto choose = [](int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  std::vector<BigInt> n(max_d + 1, 0);
  n[1] = 1;
  for (int d = 2; d <= max_d; ++d) {
    BigInt sum = 0;
    for (int d1 = 1; d1 < d; ++d1) {
      const int d2 = d - d1;
      sum += n[d1] * n[d2] * d1 * d1 * d2 *
             (d2 * choose(3 * d - 4, 3 * d1 - 2) - d1 * choose(3 * d - 4, 3 * d1 - 1));
    }
    n[d] = sum;
  }
  return n;
}

}  // namespace

TEST(BigInteger, BinomialAndDecimal) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  const BigInt big = parse_decimal("-123456789012345678901234567890");
  EXPECT_EQ(to_decimal(big), "-123456789012345678901234567890");
  EXPECT_THROW(parse_decimal("12x"), FormatError);
  EXPECT_THROW(parse_decimal(""), FormatError);
}

TEST(Wdvv, PlaneMatchesKontsevich) {
  const auto oracle = kontsevich(9);
  GromovWitten<ProjectivePlane> gw;
  for (int d = 1; d <= 9; ++d) EXPECT_EQ(gw({d}), oracle[d]) << "degree " << d;
  EXPECT_EQ(gw({3}), 12);
  EXPECT_EQ(gw({5}), 87304);
}

TEST(Wdvv, BlownQuadricExamples) {
  EXPECT_EQ(gw_surface({0, 1, 0}), 1);
  EXPECT_EQ(gw_surface({1, 1, 0}), 1);
  EXPECT_EQ(gw_surface({1, 2, 2}), 0);
  EXPECT_EQ(gw_surface({1, 1, 2}), 0);
  EXPECT_EQ(gw_surface({1, 1, 1}), 1);
  EXPECT_EQ(gw_surface({0, 0, -1}), 1);
  EXPECT_EQ(gw_surface({0, 0, -2}), 0);
  EXPECT_EQ(gw_surface({2, 2, 0}), 12);
  EXPECT_EQ(gw_surface({3, 3, 0}), 3510);
  EXPECT_EQ(gw_surface({1, 0, 2}), 0);  // not effective
  EXPECT_EQ(gw_surface(SurfaceId::quadric, {2, 3}), 96);
  EXPECT_EQ(gw_surface(SurfaceId::quadric, {0, 1}), 1);
  EXPECT_THROW(gw_surface(SurfaceId::quadric, {0, 1, 2}), DomainError);
  EXPECT_THROW(gw_surface(SurfaceId::quadric, {1}), DomainError);
}

TEST(Wdvv, BaseCases) {
  const auto seeds = base_cases<BlownQuadric>();
  EXPECT_EQ(seeds.at({1, 1, 1}), 1);
  EXPECT_EQ(seeds.count({1, 1, 2}) ? seeds.at({1, 1, 2}) : 0, 0);
  for (const auto& [c, v] : seeds) EXPECT_LE(point_count_surface(c), 2) << c;
  EXPECT_EQ(base_cases<Quadric>().at({0, 1, 0}), 1);
}

// The blown quadric is the plane blown up at two points: class (a,b,k) has
// degree a+b-k and multiplicities a-k, b-k. Degree-d plane curves are (d,d,d).
TEST(Wdvv, PlaneEmbedsInBlownQuadric) {
  const auto oracle = kontsevich(6);
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(gw_surface({d, d, d}), oracle[d]) << d;
}

TEST(Wdvv, SymmetriesAndBlowupInvariance) {
  GromovWitten<BlownQuadric> blown;
  GromovWitten<Quadric> quadric;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 6; ++b) {
      EXPECT_EQ(blown({a, b, 0}), quadric({a, b, 0})) << a << "," << b;
      // one simple point at the blown-up point changes nothing
      EXPECT_EQ(blown({a, b, 1}), blown({a, b, 0})) << a << "," << b;
      for (int k = 0; k <= a + b; ++k) EXPECT_EQ(blown({a, b, k}), blown({b, a, k}));
    }
}

TEST(Wdvv, NegativeExceptionalIntersectionVanishes) {
  GromovWitten<BlownQuadric> blown;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 6; ++b)
      for (int k = std::min(a, b) + 1; k <= a + b; ++k) {
        const SurfaceClass c{a, b, k};
        if (c == SurfaceClass{0, 1, 1} || c == SurfaceClass{1, 0, 1}) {
          EXPECT_EQ(blown(c), 1);
          continue;
        }
        EXPECT_EQ(blown(c), 0) << c;
      }
}

TEST(Wdvv, NonNegative) {
  GromovWitten<BlownQuadric> blown;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 7; ++b)
      for (int k = -2; k <= a + b; ++k) EXPECT_GE(blown({a, b, k}), 0);
}

TEST(Wdvv, PairIndependence) {
  EXPECT_TRUE(verify_pair_independence<BlownQuadric>(5).empty());
  EXPECT_TRUE(verify_pair_independence<Quadric>(5).empty());
  EXPECT_TRUE(verify_pair_independence<ProjectivePlane>(6).empty());
}

TEST(Wdvv, RejectsOrthogonalPair) {
  EXPECT_THROW(GromovWitten<BlownQuadric>(std::make_shared<MemoTable>(), {kRuling1, kRuling1}), DomainError);
}

TEST(Wdvv, SharedMemoAcrossThreads) {
  GromovWitten<BlownQuadric> reference;
  auto memo = std::make_shared<MemoTable>();
  std::vector<std::thread> pool;
  std::vector<BigInt> results(4);
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      GromovWitten<BlownQuadric> engine(memo, BlownQuadric::divisor_pairs()[t % 3]);
      results[t] = engine({3 + t % 2, 4, 2});
    });
  for (auto& th : pool) th.join();
  for (int t = 0; t < 4; ++t) EXPECT_EQ(results[t], reference({3 + t % 2, 4, 2}));
  for (const auto& [key, value] : memo->snapshot())
    EXPECT_EQ(value, reference(BlownQuadric::from_coords(key.cls)));
}
