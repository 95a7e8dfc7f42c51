#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "enumgeo/floor_diagram.hpp"
#include "enumgeo/wdvv.hpp"

using namespace enumgeo;

namespace {

// Linear extensions counted by brute force over all orderings, divided by
// the symmetries of identical ends.
BigInt brute_markings(const FloorDiagram& d) {
  struct Item {
    int kind;  // 0 floor, 1 elevator, 2 bottom end, 3 top end
    int lo, hi;
  };
  std::vector<Item> items;
  for (int f = 0; f < d.floors; ++f) items.push_back({0, f, f});
  for (const auto& e : d.elevators) items.push_back({1, e.lower, e.upper});
  for (int f : d.bottom) items.push_back({2, f, f});
  for (int f : d.top) items.push_back({3, f, f});
  std::vector<int> order(items.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  long valid = 0;
  do {
    std::vector<int> pos(items.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    auto floor_pos = [&](int f) { return pos[f]; };
    bool ok = true;
    for (int f = 0; f + 1 < d.floors && ok; ++f) ok = floor_pos(f) < floor_pos(f + 1);
    for (std::size_t i = d.floors; i < items.size() && ok; ++i) {
      const auto& it = items[i];
      const int p = pos[i];
      if (it.kind == 1) ok = floor_pos(it.lo) < p && p < floor_pos(it.hi);
      if (it.kind == 2) ok = p < floor_pos(it.lo);
      if (it.kind == 3) ok = p > floor_pos(it.lo);
    }
    if (ok) ++valid;
  } while (std::next_permutation(order.begin(), order.end()));
  std::map<std::pair<int, int>, int> same;
  for (int f : d.bottom) ++same[{2, f}];
  for (int f : d.top) ++same[{3, f}];
  for (const auto& [_, n] : same)
    for (int i = 2; i <= n; ++i) valid /= i;
  return valid;
}

FloorDiagram with_weights(std::vector<int> weights) {
  FloorDiagram d;
  d.floors = static_cast<int>(weights.size()) + 1;
  d.divergence.assign(d.floors, 0);
  for (int i = 0; i + 1 < d.floors; ++i) d.elevators.push_back({i, i + 1, weights[i]});
  return d;
}

}  // namespace

TEST(FloorDiagram, Multiplicities) {
  EXPECT_EQ(complex_multiplicity(with_weights({1, 1})), 1);
  EXPECT_EQ(complex_multiplicity(with_weights({2})), 4);
  EXPECT_EQ(complex_multiplicity(with_weights({2, 3})), 36);
  EXPECT_EQ(welschinger_multiplicity(with_weights({1, 1})), 1);
  EXPECT_EQ(welschinger_multiplicity(with_weights({2})), 0);
  EXPECT_EQ(welschinger_multiplicity(with_weights({3})), 1);
  EXPECT_EQ(welschinger_multiplicity(with_weights({3, 5})), 1);
  EXPECT_EQ(welschinger_multiplicity(with_weights({3, 4})), 0);
}

TEST(FloorDiagram, Profiles) {
  const auto p = profile_for({2, 2, 1});
  EXPECT_EQ(p.floors, 2);
  EXPECT_EQ(p.bottom_ends, 2);
  EXPECT_EQ(p.top_ends, 1);
  EXPECT_EQ(p.divergences, (std::vector<int>{0, 1}));
  const auto q = profile_for({3, 2, 0});
  EXPECT_EQ(q.divergences, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(plane_profile(3).divergences, (std::vector<int>{1, 1, 1}));
  EXPECT_THROW(profile_for({1, 2, 2}), PolygonDegenerateError);
}

TEST(FloorDiagram, SmallEnumerations) {
  const auto one = enumerate_floor_diagrams(SurfaceClass{1, 1, 0});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].diagram.floors, 1);
  EXPECT_EQ(one[0].diagram.bottom.size(), 1u);
  EXPECT_EQ(one[0].diagram.top.size(), 1u);
  EXPECT_EQ(one[0].markings, 1);

  const auto blown = enumerate_floor_diagrams(SurfaceClass{1, 1, 1});
  ASSERT_EQ(blown.size(), 1u);
  EXPECT_EQ(blown[0].diagram.divergence, (std::vector<int>{1}));
  EXPECT_TRUE(blown[0].diagram.top.empty());
  EXPECT_EQ(blown[0].markings, 1);

  BigInt weighted = 0;
  for (const auto& c : enumerate_floor_diagrams(plane_profile(2))) {
    EXPECT_EQ(c.diagram.floors, 2);
    weighted += complex_multiplicity(c.diagram) * c.markings;
  }
  EXPECT_EQ(weighted, 1);
}

TEST(FloorDiagram, Counts) {
  EXPECT_EQ(count_complex({1, 1, 0}), 1);
  EXPECT_EQ(count_complex({1, 2, 0}), 1);
  EXPECT_EQ(count_welschinger_real({1, 2, 0}), 1);
  EXPECT_EQ(count_welschinger_real({1, 1, 1}), 1);
  EXPECT_EQ(count_complex({2, 2, 1}), 12);
  EXPECT_EQ(count_complex({3, 3, 1}), 3510);
  EXPECT_EQ(count_complex({0, 1, 1}), 1);
  EXPECT_EQ(count_complex({0, 2, 0}), 0);

  const auto plane3 = tropical_counts(plane_profile(3));
  EXPECT_EQ(plane3.complex, 12);
  EXPECT_EQ(plane3.real, 8);
}

// Classical Welschinger invariants of the plane with all points real.
TEST(FloorDiagram, PlaneWelschinger) {
  const std::vector<int> expected{1, 1, 8, 240, 18264};
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(tropical_counts(plane_profile(d)).real, expected[d - 1]) << d;
}

TEST(FloorDiagram, MarkingsMatchBruteForce) {
  for (const SurfaceClass c : {SurfaceClass{2, 2, 0}, SurfaceClass{2, 2, 1}, SurfaceClass{2, 2, 2},
                               SurfaceClass{3, 1, 1}, SurfaceClass{3, 2, 2}, SurfaceClass{2, 3, 1}}) {
    int checked = 0;
    detail::for_each_labelled_diagram(profile_for(c), [&](const FloorDiagram& d) {
      EXPECT_EQ(detail::count_markings(d), brute_markings(d)) << c;
      ++checked;
    });
    EXPECT_GT(checked, 0) << c;
  }
  detail::for_each_labelled_diagram(plane_profile(3), [&](const FloorDiagram& d) {
    EXPECT_EQ(detail::count_markings(d), brute_markings(d));
  });
}

TEST(FloorDiagram, AgreesWithWdvv) {
  GromovWitten<BlownQuadric> gw;
  for (int deg = 2; deg <= 5; ++deg)
    for (int a = 1; a < deg; ++a)
      for (int k = 0; k <= std::min(a, deg - a); ++k) {
        const SurfaceClass c{a, deg - a, k};
        EXPECT_EQ(count_complex(c), gw(c)) << c;
      }
  GromovWitten<ProjectivePlane> plane;
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(tropical_counts(plane_profile(d)).complex, plane({d}));
}

TEST(FloorDiagram, Structure) {
  for (const auto& c : enumerate_floor_diagrams(SurfaceClass{3, 3, 1})) {
    const auto& d = c.diagram;
    EXPECT_EQ(d.floors, 3);
    EXPECT_EQ(d.elevators.size(), 2u);
    EXPECT_EQ(d.bottom.size(), 3u);
    EXPECT_EQ(d.top.size(), 2u);
    for (const auto& e : d.elevators) EXPECT_GE(e.weight, 1);
    // balancing at every floor
    for (int f = 0; f < d.floors; ++f) {
      int in = 0, out = 0;
      for (int x : d.bottom) in += x == f;
      for (int x : d.top) out += x == f;
      for (const auto& e : d.elevators) {
        if (e.upper == f) in += e.weight;
        if (e.lower == f) out += e.weight;
      }
      EXPECT_EQ(in - out, d.divergence[f]);
    }
    EXPECT_GT(c.markings, 0);
  }
}

TEST(FloorDiagram, JsonDump) {
  const auto j = dump_diagrams(enumerate_floor_diagrams(plane_profile(3)));
  ASSERT_TRUE(j.is_array());
  BigInt total = 0;
  for (const auto& d : j) {
    EXPECT_EQ(d["floors"], 3);
    EXPECT_EQ(d["edges"].size(), 2u);
    BigInt mult = 1;
    for (const auto& e : d["edges"]) mult *= e[2].get<int>() * e[2].get<int>();
    total += mult * d["markings"].get<long>();
  }
  EXPECT_EQ(total, 12);
}
