#include <gtest/gtest.h>

#include "enumgeo/combine.hpp"
#include "enumgeo/workspace.hpp"

using namespace enumgeo;

TEST(Combine, ComplexThreefold) {
  EXPECT_EQ(gw_threefold({3, 0}), 1);
  EXPECT_EQ(gw_threefold({5, 0}), 105);
  EXPECT_EQ(gw_threefold({2, 2}), 0);
  EXPECT_EQ(gw_threefold({4, 0}), 4);
  const std::vector<int> p3{1, 0, 1, 4, 105, 2576};
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(gw_threefold({d, 0}), p3[d - 1]) << d;
  EXPECT_EQ(gw_threefold({3, 2}), 0);
  EXPECT_EQ(gw_threefold({2, 1}), 0);
  EXPECT_THROW(gw_threefold({2, 3}), DomainError);
  EXPECT_THROW(gw_threefold({0, 0}), DomainError);
}

// Passing once through the centre is one more point condition.
TEST(Combine, SimplePointAtCentre) {
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(gw_threefold({d, 1}), gw_threefold({d, 0})) << d;
}

TEST(Combine, SpinorParity) {
  EXPECT_EQ(spinor_parity_closed_form(0, 2, 2), 1);
  EXPECT_EQ(spinor_parity_case_split(0, 2, 0), 1);
  EXPECT_EQ(spinor_parity_case_split(1, 0, 0), 1);
  EXPECT_THROW(spinor_parity_closed_form(0, 1, 1), DomainError);
  // the two formulas agree exactly when a + b is even
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int k = 0; k <= 4; k += 2)
        for (int m = 0; m < 3; ++m)
          EXPECT_EQ(spinor_parity_closed_form(m, b, k) == spinor_parity_case_split(a, k, m), (a + b) % 2 == 0);
}

TEST(Combine, Vanishing) {
  EXPECT_TRUE(vanishing_check({2, 2}, 0));
  EXPECT_FALSE(vanishing_check({3, 2}, 0));
  EXPECT_FALSE(vanishing_check({4, 2}, 3));
  EXPECT_TRUE(vanishing_check({4, 2}, 2));
  EXPECT_FALSE(vanishing_check({4, 0}, 0));
  EXPECT_FALSE(vanishing_check({2, 4}, 0));
}

TEST(Combine, RealThreefold) {
  WelschingerTable table;
  auto r = welschinger_threefold({1, 0}, 0, table);
  ASSERT_TRUE(r.complete());
  EXPECT_EQ(*r.value, 1);

  r = welschinger_threefold({3, 0}, 0, table);
  ASSERT_TRUE(r.complete());
  EXPECT_EQ(*r.value, -1);
  ASSERT_EQ(r.terms.size(), 2u);
  EXPECT_EQ(r.terms[0].coefficient, 3);
  EXPECT_EQ(*r.terms[0].value, 0);
  EXPECT_EQ(r.terms[1].coefficient, -1);
  EXPECT_EQ(*r.terms[1].value, 1);

  for (int s : {0, 1}) {
    r = welschinger_threefold({3, 2}, s, table);
    ASSERT_TRUE(r.complete()) << s;
    EXPECT_EQ(*r.value, 0);
  }

  r = welschinger_threefold({4, 2}, 1, table);
  ASSERT_TRUE(r.vanishing_certificate.has_value());
  EXPECT_EQ(*r.value, 0);

  EXPECT_THROW(welschinger_threefold({4, 0}, 0, table), DomainError);
  EXPECT_THROW(welschinger_threefold({3, 1}, 0, table), DomainError);
  EXPECT_THROW(welschinger_threefold({3, 0}, 3, table), DomainError);
}

TEST(Combine, RealThreefoldMatchesParity) {
  Workspace ws;
  for (int d = 1; d <= 7; d += 2)
    for (int k = 0; k <= 4 && k <= d; k += 2) {
      const auto r = ws.welschinger_threefold({d, k}, 0);
      ASSERT_TRUE(r.complete()) << d << "," << k;
      const BigInt n = ws.gw_threefold({d, k});
      EXPECT_EQ((n - *r.value) % 2, 0);
      EXPECT_LE(abs(*r.value), n);
    }
}

TEST(Combine, MissingInputsAndIngestion) {
  WelschingerTable table;
  auto r = welschinger_threefold({3, 0}, 1, table);
  EXPECT_FALSE(r.complete());
  ASSERT_EQ(r.missing.size(), 1u);
  EXPECT_EQ(r.missing[0].cls, (SurfaceClass{1, 2, 0}));
  EXPECT_EQ(r.missing[0].s, 1);

  table.ingest({1, 2, 0}, 1, 1, "test");
  r = welschinger_threefold({3, 0}, 1, table);
  ASSERT_TRUE(r.complete());
  EXPECT_EQ(*r.value, -1);
  EXPECT_EQ(r.terms[1].provenance, "ingested(test)");

  EXPECT_THROW(table.ingest({1, 2, 0}, 0, 3, "bad"), FormatError);
  EXPECT_THROW(table.ingest({1, 2, 0}, 1, 5, "bad"), FormatError);
  EXPECT_THROW(table.ingest({1, 0, 2}, 0, 0, "bad"), FormatError);
  EXPECT_THROW(table.ingest({1, 2, 0}, 3, 0, "bad"), FormatError);
  table.ingest({1, 2, 0}, 0, 1, "agrees");  // matches the computed value
  EXPECT_EQ(table.find({1, 2, 0}, 0)->provenance, ProvenanceKind::ingested);
}

TEST(Combine, ResolutionRules) {
  WelschingerTable table;
  EXPECT_EQ(resolve_welschinger({0, 3, 0}, 2, table).provenance, "rule(multiple-fiber)");
  EXPECT_EQ(resolve_welschinger({1, 0, 3}, 1, table).provenance, "rule(non-effective)");
  EXPECT_EQ(resolve_welschinger({2, 2, 0}, 0, table).provenance, "computed-tropical");
  EXPECT_EQ(*resolve_welschinger({1, 2, 2}, 1, table).value, 0);
  EXPECT_EQ(*resolve_welschinger({3, 4, 4}, 0, table).value, 0);
  EXPECT_FALSE(resolve_welschinger({2, 2, 0}, 1, table).value.has_value());
}
