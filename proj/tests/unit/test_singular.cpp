#include <gtest/gtest.h>

#include <cmath>

#include "circweb/catalog.hpp"
#include "circweb/errors.hpp"
#include "circweb/singular.hpp"
#include "gen.hpp"

using namespace circweb;
using circweb::testing::Gen;

namespace {

double plane_value(const Plane4& n, const TetraPoint& p) {
  return n[0] * p.X + n[1] * p.Y + n[2] * p.Z + n[3] * p.U;
}

double dot4(const Plane4& a, const Plane4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

double norm4(const TetraPoint& p) { return std::sqrt(p.X * p.X + p.Y * p.Y + p.Z * p.Z + p.U * p.U); }

SingularReport check_entry(const std::string& id) {
  const auto b = build(id);
  EXPECT_EQ(b.polar_lines.size(), 3u) << id;
  return singular_circle_check(b.polar_lines[0], b.polar_lines[1], b.polar_lines[2]);
}

void expect_locus_invariants(const TangencyLocus& L, const PluckerLine& l1, const PluckerLine& l2) {
  EXPECT_LT(L.max_quadric_residual, 1e-10);
  EXPECT_LT(L.max_bisecant_pairing, 1e-10);
  for (const auto& s : L.samples) {
    EXPECT_LT(std::abs(s.point.quadric_value()) / (norm4(s.point) * norm4(s.point)), 1e-10);
    const double sc = s.bisecant.scale();
    EXPECT_LT(std::abs(pairing(s.bisecant, l1)) / (sc * l1.scale()), 1e-10);
    EXPECT_LT(std::abs(pairing(s.bisecant, l2)) / (sc * l2.scale()), 1e-10);
    EXPECT_LT(incidence_residual(s.bisecant, s.point), 1e-10);
  }
}

}  // namespace

TEST(TangencyLocus, ZAxisAndSkewLine) {
  for (const auto& [u, v] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {0.6, -0.8}, {2.0, 0.5}}) {
    const PluckerLine L1{0, 0, 1, 0, 0, 0}, L2{u, v, 0, -v, u, 1};
    const auto L = tangency_locus(L1, L2);
    ASSERT_FALSE(L.samples.empty());
    expect_locus_invariants(L, L1, L2);
    EXPECT_FALSE(L.intersecting);
    // z = v x - u y + 1
    for (const auto& s : L.samples) {
      const auto& p = s.point;
      EXPECT_NEAR(p.Z / p.U, v * p.X / p.U - u * p.Y / p.U + 1, 1e-9) << u << "," << v;
    }
    ASSERT_GE(L.components.size(), 1u);
    EXPECT_EQ(L.components[0].kind, LocusComponent::Kind::circle);
    EXPECT_LT(L.components[0].circularity_defect, 1e-8);
  }
}

TEST(TangencyLocus, TwoTangentLinesGiveBisectingCircles) {
  const TetraPoint north{0, 0, 1, 1}, south{0, 0, -1, 1};
  const auto T1 = line_through({1, 0, 0, 0}, north), T2 = line_through({0, 1, 0, 0}, south);
  const auto L = tangency_locus(T1, T2);
  expect_locus_invariants(L, T1, T2);
  ASSERT_EQ(L.components.size(), 2u);
  const auto axis = line_through(north, south);
  const Plane4 P1 = plane_through(axis, T1), P2 = plane_through(axis, T2);
  for (const auto& c : L.components) {
    EXPECT_EQ(c.kind, LocusComponent::Kind::circle);
    EXPECT_LT(c.circularity_defect, 1e-8);
    EXPECT_LT(std::abs(plane_value(c.plane, north)), 1e-8);
    EXPECT_LT(std::abs(plane_value(c.plane, south)), 1e-8);
    // equal angles with both planes through the common line
    EXPECT_LT(std::abs(std::abs(dot4(c.plane, P1)) - std::abs(dot4(c.plane, P2))), 1e-8);
  }
  EXPECT_LT(std::abs(dot4(L.components[0].plane, L.components[1].plane)), 1e-8);
}

TEST(TangencyLocus, IntersectingLinesAreFlagged) {
  const PluckerLine L1{0, 0, 1, 0, 0, 0}, L2{1, 0, 0, 0, 0, 0};
  const auto L = tangency_locus(L1, L2);
  EXPECT_TRUE(L.intersecting);
  ASSERT_TRUE(L.intersection.has_value());
  EXPECT_TRUE(projectively_equal(*L.intersection, {0, 0, 0, 1}));
  expect_locus_invariants(L, L1, L2);
}

TEST(TangencyLocus, CoincidentLines) {
  const PluckerLine L{0, 0, 1, 0, 0, 0}, M{0, 0, -2.5, 0, 0, 0};
  EXPECT_THROW(tangency_locus(L, M), DegenerateError);
}

TEST(TangencyLocus, PluckerPoles) {
  const Plane4 n{0, 0.6, 0.8, -0.5};
  const auto p = pole_of(n);
  // pole of a plane cutting the quadric lies outside it
  EXPECT_GT(p.quadric_value(), 0);
  EXPECT_TRUE(projectively_equal(p, {0, 0.6, 0.8, 0.5}));
  EXPECT_NEAR(point_line_distance({0, 0, 1, 0, 0, 0}, {0, 0, 0, 1}), 0, 1e-15);
  EXPECT_NEAR(point_line_distance({0, 0, 1, 0, 0, 0}, {1, 0, 0, 0}), 1, 1e-15);
}

TEST(SingularCheck, ThreePencilEntries) {
  for (const auto& id : catalog_ids()) {
    if (id.rfind("3p-", 0) != 0) continue;
    const auto r = check_entry(id);
    if (id == "3p-eee") {
      EXPECT_EQ(r.verdict, Verdict::not_verifiable);
      continue;
    }
    EXPECT_EQ(r.verdict, Verdict::pass) << id << " " << r.max_distance;
    EXPECT_LT(r.max_distance, kSingularTol) << id;
    EXPECT_EQ(r.pairs.size(), 3u) << id;
    for (const auto& p : r.pairs)
      for (const auto& c : p.circles) EXPECT_LT(c.circularity_defect, 1e-8) << id;
  }
}

TEST(SingularCheck, OrthogonalAxes) {
  const auto r = check_entry("3p-hhh");
  EXPECT_EQ(r.verdict, Verdict::pass);
  for (const auto& p : r.pairs) {
    EXPECT_EQ(p.status, PairCheck::Status::checked);
    ASSERT_EQ(p.circles.size(), 1u);
    EXPECT_FALSE(p.circles[0].trivial);
  }
}

TEST(SingularCheck, TiltedAxisFails) {
  const auto b = build("3p-hhh");
  const TetraPoint c{0, 0, 0, 1}, d{0, std::sin(0.1), std::cos(0.1), 0};
  const auto r = singular_circle_check(b.polar_lines[0], b.polar_lines[1], line_through(c, d));
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_GT(r.max_distance, 1e-2);
  EXPECT_EQ(check_entry("control-3p-hhh-tilted").verdict, Verdict::fail);
}

TEST(SingularCheck, DualPairsAreAccepted) {
  const auto r = check_entry("3p-hpp");
  int dual = 0;
  for (const auto& p : r.pairs) dual += p.status == PairCheck::Status::dual;
  EXPECT_EQ(dual, 1);
  EXPECT_EQ(r.verdict, Verdict::pass);
}

// Invariants

TEST(SingularProperties, RandomLinePairs) {
  Gen g(51);
  int loci = 0;
  for (int i = 0; i < 100; ++i) {
    const auto l1 = g.line(), l2 = g.line();
    TangencyLocus L;
    try {
      L = tangency_locus(l1, l2, 60);
    } catch (const NoRealTangentsError&) {
      continue;
    }
    expect_locus_invariants(L, l1, l2);
    for (const auto& c : L.components) {
      if (c.kind != LocusComponent::Kind::circle) continue;
      EXPECT_LT(c.circularity_defect, 1e-8);
      for (int k : c.samples) EXPECT_LT(std::abs(plane_value(c.plane, L.samples[k].point)) / norm4(L.samples[k].point), 1e-8);
    }
    ++loci;
  }
  EXPECT_GT(loci, 20);
}

TEST(SingularProperties, MoebiusTransportedTriple) {
  // the check commutes with Moebius maps: transported triples keep their verdicts
  Gen g(52);
  const auto b = build("3p-hhh");
  for (int i = 0; i < 10; ++i) {
    const auto m = group_matrix4(g.generator(), g.uniform(-0.5, 0.5));
    std::array<PluckerLine, 3> t;
    for (int k = 0; k < 3; ++k) {
      auto pts = points_on_line(b.polar_lines[k]);
      t[k] = line_through(transform_point(m, pts[0]), transform_point(m, pts[1]));
    }
    const auto r = singular_circle_check(t[0], t[1], t[2]);
    EXPECT_EQ(r.verdict, Verdict::pass) << i << " " << r.max_distance;
  }
}
