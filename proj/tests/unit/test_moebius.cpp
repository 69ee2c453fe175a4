#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "circweb/errors.hpp"
#include "circweb/moebius.hpp"
#include "checks.hpp"
#include "gen.hpp"

using namespace circweb;
using circweb::testing::Gen;
namespace gens = circweb::generators;
using circweb::testing::cross_ratio;
using circweb::testing::conjugate;

namespace {

void expect_point(const TetraPoint& got, const TetraPoint& want) {
  EXPECT_TRUE(projectively_equal(got, want)) << got.X << " " << got.Y << " " << got.Z << " " << got.U;
}

void expect_line(const PluckerLine& got, const PluckerLine& want) {
  EXPECT_TRUE(projectively_equal(got, want))
      << got.a << " " << got.b << " " << got.c << " " << got.f << " " << got.g << " " << got.h;
}

}  // namespace

TEST(Stereographic, Examples) {
  expect_point(stereo_to_sphere({0, 0}), {0, 0, 1, 1});
  expect_point(stereo_to_sphere({1, 0}), {1, 0, 0, 1});
  const auto q = stereo_to_sphere({1, 1});
  EXPECT_NEAR(q.X / q.U, 2.0 / 3, 1e-15);
  EXPECT_NEAR(q.Y / q.U, 2.0 / 3, 1e-15);
  EXPECT_NEAR(q.Z / q.U, -1.0 / 3, 1e-15);
}

TEST(Stereographic, SouthPole) { EXPECT_THROW(stereo_to_plane({0, 0, -1, 1}), SouthPoleError); }

TEST(Stereographic, RoundTrip) {
  Gen g(21);
  for (int i = 0; i < 200; ++i) {
    const auto p = g.planar(3);
    const auto q = stereo_to_sphere(p);
    EXPECT_LT(std::abs(q.quadric_value()) / (q.U * q.U), 1e-14);
    const auto back = stereo_to_plane(q);
    EXPECT_NEAR(back.x, p.x, 1e-12);
    EXPECT_NEAR(back.y, p.y, 1e-12);
  }
}

TEST(Polar, OfCircles) {
  expect_point(polar_of_circle({1, 0, 0, -1}), {0, 0, 1, 0});
  expect_point(polar_of_circle({0, 0, 1, 0}), {0, 1, 0, 0});
  const auto p = polar_of_circle({1, 0, 0, -2});
  expect_point(p, {0, 0, -3, 1});
  EXPECT_GT(p.quadric_value(), 0);
}

TEST(Polar, CircleOfPolar) {
  const auto unit = circle_of_polar({0, 0, 1, 0});
  EXPECT_EQ(unit.eps, 1);
  EXPECT_NEAR(unit.alpha, 0, 1e-15);
  EXPECT_NEAR(unit.beta, 0, 1e-15);
  EXPECT_NEAR(unit.gamma, -1, 1e-15);
  const auto c = circle_of_polar({2, 0, 1, 0});
  EXPECT_EQ(c.eps, 1);
  EXPECT_NEAR(c.alpha, -4, 1e-14);
  EXPECT_NEAR(c.beta, 0, 1e-14);
  EXPECT_NEAR(c.gamma, -1, 1e-14);
  EXPECT_THROW(circle_of_polar({0, 0, 1, 1}), OnQuadricError);
  EXPECT_THROW(circle_of_polar({0, 0, 0, 1}), InsideQuadricError);
}

TEST(Polar, RoundTripOutside) {
  Gen g(22);
  int n = 0;
  while (n < 300) {
    const auto p = g.point();
    if (p.quadric_value() < 1e-3 * p.scale() * p.scale()) continue;
    expect_point(polar_of_circle(circle_of_polar(p)), p);
    ++n;
  }
}

TEST(Lines, Through) {
  expect_line(line_through({0, 0, 1, 1}, {0, 0, -1, 1}), {0, 0, 1, 0, 0, 0});
  expect_line(line_through({1, 0, 0, 0}, {0, 1, 0, 0}), {0, 0, 0, 0, 0, 1});
  EXPECT_THROW(line_through({1, 2, 3, 4}, {1, 2, 3, 4}), CoincidentPointsError);
  EXPECT_THROW(line_through({1, 2, 3, 4}, {-2, -4, -6, -8}), CoincidentPointsError);
}

TEST(Lines, Dual) {
  expect_line(dual_line({0, 0, 1, 0, 0, 0}), {0, 0, 0, 0, 0, 1});
  expect_line(dual_line({0, -1, 0, 1, 0, 0}), {-1, 0, 0, 0, -1, 0});
}

TEST(Lines, Classify) {
  EXPECT_EQ(classify(gens::Rz).cls, LineClass::Hyperbolic);
  EXPECT_EQ(classify({1, 0, 0, 0, 1, 0}).cls, LineClass::Parabolic);
  EXPECT_EQ(classify({0, 0, 1, 0, 0, 1}).cls, LineClass::Loxodromic);
  EXPECT_EQ(classify(gens::Bz).cls, LineClass::Elliptic);
  EXPECT_EQ(describe(classify(gens::Rz).cls), "hyperbolic (rotation-conjugate)");
  EXPECT_THROW(classify({0, 0, 0, 0, 0, 0}), ZeroGeneratorError);
}

TEST(Lines, MarginalFlag) {
  EXPECT_FALSE(classify({1, 0, 0, 0, 1, 0}).marginal);
  EXPECT_TRUE(classify({1, 0, 0, 0, 1 + 3e-10, 0}).marginal);
}

TEST(Lines, ParseText) {
  expect_line(parse_generator("0:0:1:0:0:0"), gens::Rz);
  expect_point(parse_point("1:2:3:4"), {1, 2, 3, 4});
  EXPECT_THROW(parse_generator("0:0:1"), ParseError);
  EXPECT_THROW(parse_point("a:b:c:d"), ParseError);
}

TEST(Flow, Examples) {
  const auto o = flow(gens::Rz, 0.7, {0, 0});
  EXPECT_NEAR(o.x, 0, 1e-15);
  EXPECT_NEAR(o.y, 0, 1e-15);
  const auto r = flow(gens::Rz, std::numbers::pi / 2, {1, 0});
  EXPECT_NEAR(r.x, 0, 1e-12);
  EXPECT_NEAR(r.y, -1, 1e-12);
  const auto d = flow(gens::Bz, 1, {1, 0});
  EXPECT_NEAR(d.x, std::exp(-1.0), 1e-12);
  EXPECT_NEAR(d.y, 0, 1e-12);
}

TEST(Flow, GroupLaw) {
  Gen g(23);
  for (int i = 0; i < 200; ++i) {
    const auto gen = g.generator();
    const auto p = g.planar(1);
    const double s = g.uniform(-0.5, 0.5), t = g.uniform(-0.5, 0.5);
    try {
      const auto a = flow(gen, s, flow(gen, t, p));
      const auto b = flow(gen, s + t, p);
      const double sc = std::max(1.0, std::hypot(b.x, b.y));
      EXPECT_NEAR(a.x, b.x, 1e-10 * sc * sc);
      EXPECT_NEAR(a.y, b.y, 1e-10 * sc * sc);
      const auto z = flow(gen, 0, p);
      EXPECT_NEAR(z.x, p.x, 1e-14);
      EXPECT_NEAR(z.y, p.y, 1e-14);
    } catch (const InfinityError&) {
    }
  }
}

TEST(Tangency, Examples) {
  expect_point(tangency_point({-1, 0, 0, 0, 1, 0}), {0, 0, 1, 1});
  expect_point(tangency_point({0, -1, 0, 0, 0, 1}), {1, 0, 0, 1});
  EXPECT_THROW(tangency_point(gens::Rz), NotTangentError);
}

// Invariants

TEST(MoebiusProperties, PluckerRelation) {
  Gen g(24);
  for (int i = 0; i < 1000; ++i) {
    const auto p = g.point(), q = g.point();
    const auto l = line_through(p, q);
    EXPECT_LT(std::abs(l.plucker_relation()), 1e-12 * l.scale() * l.scale());
    EXPECT_LT(incidence_residual(l, p), 1e-12);
    EXPECT_LT(incidence_residual(l, q), 1e-12);
  }
}

TEST(MoebiusProperties, DualInvolutionSwapsClasses) {
  Gen g(25);
  for (int i = 0; i < 1000; ++i) {
    const auto l = g.line();
    const auto d = dual_line(l);
    expect_line(dual_line(d), l);
    const auto c = classify(l).cls, cd = classify(d).cls;
    if (c == LineClass::Hyperbolic) EXPECT_EQ(cd, LineClass::Elliptic);
    if (c == LineClass::Elliptic) EXPECT_EQ(cd, LineClass::Hyperbolic);
  }
  for (int i = 0; i < 100; ++i) {
    const auto l = g.generator_of(LineClass::Parabolic);
    EXPECT_EQ(classify(dual_line(l)).cls, LineClass::Parabolic);
  }
}

TEST(MoebiusProperties, ClassifyConjugationInvariant) {
  Gen g(26);
  const LineClass classes[] = {LineClass::Hyperbolic, LineClass::Elliptic, LineClass::Parabolic,
                               LineClass::Loxodromic};
  for (int i = 0; i < 500; ++i) {
    const auto c = classes[i % 4];
    const auto gen = g.generator_of(c);
    ASSERT_EQ(classify(gen).cls, c);
    const auto m = group_matrix4(g.generator(), g.uniform(-1, 1));
    EXPECT_EQ(classify(conjugate(m, gen)).cls, c) << i;
  }
}

TEST(MoebiusProperties, FieldPreservesQuadric) {
  Gen g(27);
  for (int i = 0; i < 200; ++i) {
    const auto f = field4(g.generator());
    const auto p = g.point();
    const double v[4] = {p.X, p.Y, p.Z, p.U};
    const double sgn[4] = {1, 1, 1, -1};
    double lie = 0, sc = 0;
    for (int r = 0; r < 4; ++r) {
      double fv = 0;
      for (int k = 0; k < 4; ++k) fv += f[r][k] * v[k];
      lie += 2 * sgn[r] * v[r] * fv;
      sc += std::abs(v[r] * fv);
    }
    EXPECT_LT(std::abs(lie), 1e-10 * std::max(1.0, sc));
  }
}

TEST(MoebiusProperties, FlowPreservesCrossRatio) {
  Gen g(28);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const auto gen = g.generator();
    const double t = g.uniform(-1, 1);
    std::array<PlanarPoint, 4> p, q;
    try {
      for (int k = 0; k < 4; ++k) {
        p[k] = g.planar(1.5);
        q[k] = flow(gen, t, p[k]);
      }
    } catch (const InfinityError&) {
      continue;
    }
    const double a = std::abs(cross_ratio(p)), b = std::abs(cross_ratio(q));
    EXPECT_LT(std::abs(a - b), 1e-9 * std::max(1.0, a)) << i;
    ++checked;
  }
  EXPECT_GT(checked, 250);
}

TEST(MoebiusProperties, FlowMapsCirclesToCircles) {
  Gen g(29);
  for (int i = 0; i < 200; ++i) {
    const auto gen = g.generator();
    const double cx = g.uniform(-1, 1), cy = g.uniform(-1, 1), r = g.uniform(0.2, 1), t = g.uniform(-1, 1);
    std::array<PlanarPoint, 4> q;
    try {
      for (int k = 0; k < 4; ++k) {
        const double a = g.uniform(0, 2 * std::numbers::pi);
        q[k] = flow(gen, t, {cx + r * std::cos(a), cy + r * std::sin(a)});
      }
    } catch (const InfinityError&) {
      continue;
    }
    // concyclic points have a real cross-ratio
    const auto cr = cross_ratio(q);
    EXPECT_LT(std::abs(cr.imag()), 1e-9 * std::max(1.0, std::abs(cr)));
  }
}

TEST(MoebiusProperties, TangencyPointRelations) {
  Gen g(30);
  for (int i = 0; i < 300; ++i) {
    auto l = g.generator_of(LineClass::Parabolic);
    const double n1 = std::hypot(l.a, l.b, l.c), n2 = std::hypot(l.f, l.g, l.h);
    l = {l.a / n1, l.b / n1, l.c / n1, l.f / n2, l.g / n2, l.h / n2};
    const auto p = tangency_point(l);
    const double x = p.X / p.U, y = p.Y / p.U, z = p.Z / p.U;
    EXPECT_NEAR(x, l.c * l.g - l.b * l.h, 1e-10);
    EXPECT_NEAR(y, l.a * l.h - l.c * l.f, 1e-10);
    EXPECT_NEAR(z, l.b * l.f - l.a * l.g, 1e-10);
    EXPECT_NEAR(l.a, l.h * y - l.g * z, 1e-10);
    EXPECT_NEAR(l.b, l.f * z - l.h * x, 1e-10);
    EXPECT_NEAR(l.c, l.g * x - l.f * y, 1e-10);
    EXPECT_LT(std::abs(p.quadric_value()) / (p.U * p.U), 1e-10);
    EXPECT_LT(incidence_residual(l, p), 1e-10);
  }
}
