#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "circweb/catalog.hpp"
#include "circweb/errors.hpp"
#include "circweb/symmetric.hpp"
#include "checks.hpp"
#include "gen.hpp"

using namespace circweb;
using circweb::testing::Gen;
using circweb::testing::k_along;
using circweb::testing::ode_scale;
using circweb::testing::Spread;
using J1 = Jet1<double>;

TEST(SymmetricOde, TangentIsAScaleSolution) {
  for (double u0 : {0.0, 0.4, -1.1}) {
    for (double u : {-0.3, 0.1, 0.5}) {
      const auto P = tan(J1::variable(u) - u0);
      EXPECT_LT(std::abs(ode_residual(SymmetryKind::dilatation, P).residual), 1e-14 * ode_scale(P));
      // straight-line case P' = P^2 + 1
      EXPECT_NEAR(P.d1, P.v * P.v + 1, 1e-14 * P.d1);
    }
  }
}

TEST(SymmetricOde, GeneralRotFourthIntegral) {
  const ClosedFormSlope c{SymmetryKind::rotation, 2, 0.3};
  auto [lo, hi] = c.domain();
  EXPECT_NEAR(hi - lo, 2 * std::atanh(0.5), 1e-15);
  for (int i = 0; i < 20; ++i) {
    const double v = lo + (hi - lo) * (i + 0.5) / 20;
    const auto o = ode_residual(SymmetryKind::rotation, c.at(v));
    EXPECT_LT(std::abs(o.residual), 1e-10);
    EXPECT_NEAR(o.first_integral, 4, 1e-10);
  }
  EXPECT_NEAR(c.at(0.3).v, 0, 1e-15);
}

TEST(SymmetricOde, ClosedFormsOnTheirDomains) {
  Gen g(61);
  for (int trial = 0; trial < 40; ++trial) {
    const bool rot = trial % 2;
    const double A = rot ? g.uniform(1.1, 4) * (g.below(2) ? 1 : -1) : g.uniform(-0.9, 3);
    const ClosedFormSlope c{rot ? SymmetryKind::rotation : SymmetryKind::dilatation, A, g.uniform(-1, 1)};
    const auto kind = c.kind;
    auto [lo, hi] = c.domain();
    ASSERT_LT(lo, hi);
    const double want = rot ? A * A : A;
    for (int i = 0; i < 20; ++i) {
      const double u = lo + (hi - lo) * (0.05 + 0.9 * i / 19);
      const auto P = c.at(u);
      const auto o = ode_residual(kind, P);
      EXPECT_LT(std::abs(o.residual), 1e-10 * ode_scale(P)) << trial << " u " << u;
      EXPECT_NEAR(o.first_integral, want, 1e-10 * std::max(1.0, std::abs(want))) << trial;
    }
    EXPECT_THROW(c.at(hi + 1e-3), DomainError);
  }
}

TEST(SymmetricOde, TranslationSolution) {
  const ClosedFormSlope c{SymmetryKind::translation, 1.5, 0.2};
  auto [lo, hi] = c.domain();
  EXPECT_NEAR(lo, 0.2 - 1 / 1.5, 1e-15);
  EXPECT_NEAR(hi, 0.2 + 1 / 1.5, 1e-15);
  for (double x : {-0.3, 0.0, 0.5, 0.8}) {
    const auto o = ode_residual(SymmetryKind::translation, c.at(x));
    EXPECT_LT(std::abs(o.residual), 1e-10);
    EXPECT_NEAR(o.first_integral, 1.5 * 1.5, 1e-10);
  }
}

TEST(SymmetricOde, EmptyDomains) {
  EXPECT_THROW((ClosedFormSlope{SymmetryKind::rotation, 0.5, 0}.at(0)), DomainError);
  EXPECT_THROW((ClosedFormSlope{SymmetryKind::dilatation, -1, 0}.at(0)), DomainError);
  EXPECT_THROW((ClosedFormSlope{SymmetryKind::loxodromic, 1, 0}.at(0)), DomainError);
}

TEST(SymmetricOde, LoxodromicIntegralIsConserved) {
  Gen g(62);
  for (int trial = 0; trial < 10; ++trial) {
    const double kappa = trial == 0 ? 1 : g.uniform(-2, 2);
    const OdeState start{0, g.uniform(-0.5, 0.5), g.uniform(-0.5, 0.5)};
    std::vector<OdeState> path;
    try {
      path = integrate_loxodromic(start, kappa, 1);
    } catch (const DomainError&) {
      continue;
    }
    ASSERT_EQ(path.size(), 1001u);
    auto fi = [&](const OdeState& s) {
      return ode_residual(SymmetryKind::loxodromic, {s.P, s.dP, 0}, kappa).first_integral;
    };
    const double f0 = fi(path.front());
    double drift = 0;
    for (const auto& s : path) drift = std::max(drift, std::abs(fi(s) - f0));
    EXPECT_LT(drift, 1e-7) << "kappa " << kappa;
  }
}

TEST(SymmetricOde, LoxodromicVariantDrifts) {
  const double kappa = 1;
  const auto path = integrate_loxodromic({0, 0.3, 0.4}, kappa, 1);
  auto var = [&](const OdeState& s) { return loxodromic_integral_variant({s.P, s.dP, 0}, kappa); };
  const double f0 = var(path.front());
  double drift = 0;
  for (const auto& s : path) drift = std::max(drift, std::abs(var(s) - f0));
  EXPECT_GT(drift, 1e-3);
}

TEST(SymmetricOde, LoxodromicIntegratorMatchesResidual) {
  // states along the integrated path satisfy the ODE with the stepper's acceleration
  const double kappa = 0.7;
  const auto path = integrate_loxodromic({0, 0.2, -0.1}, kappa, 0.5, 1e-3);
  for (std::size_t i = 1; i + 1 < path.size(); i += 50) {
    const double h = path[i + 1].t - path[i].t;
    const double d2 = (path[i + 1].dP - path[i - 1].dP) / (2 * h);
    EXPECT_LT(std::abs(ode_residual(SymmetryKind::loxodromic, {path[i].P, path[i].dP, d2}, kappa).residual), 1e-5);
  }
}

TEST(KInvariant, TranslationWebIsZero) {
  for (double x : {-0.8, -0.3, 0.2, 0.6, 0.9}) {
    const auto X = J1::variable(x);
    const auto P = -X / sqrt(1.0 - X * X);
    EXPECT_NEAR(k_invariant(P, -P, J1::constant(0)), 0, 1e-12);
  }
  EXPECT_THROW(k_invariant(J1::constant(1), J1::constant(1), J1::constant(0)), DegenerateWebError);
}

TEST(KInvariant, ConstantOnHexagonalSymmetricWebs) {
  for (const auto& id : {"T2", "D4", "D5", "R1"}) {
    const auto sp = k_along(id);
    EXPECT_GE(sp.n, 20) << id;
    EXPECT_LT(sp.width(), 1e-9) << id;
  }
  EXPECT_NEAR(k_along("T2").lo, 0, 1e-12);
  for (double rho : {0.3, 0.8, 2.0}) EXPECT_LT(k_along("D4", {{"rho", rho}}).width(), 1e-9) << rho;
}

TEST(KInvariant, VariesOnNonHexagonalSolutions) {
  // three dilatation-invariant circle foliations that do not form a hexagonal web
  const ClosedFormSlope P{SymmetryKind::dilatation, 0.5, 0}, Q{SymmetryKind::dilatation, 0, 0.3},
      R{SymmetryKind::dilatation, 2, -0.1};
  Spread sp;
  for (double u = 0; u <= 0.4; u += 0.05) sp.add(k_invariant(P.at(u), Q.at(u), R.at(u)));
  EXPECT_GT(sp.width(), 1e-2);
}

TEST(AdaptedCoords, Examples) {
  auto uv = adapted_coords(SymmetryKind::dilatation, {1, 0});
  EXPECT_EQ(uv[0], 0);
  EXPECT_EQ(uv[1], 0);
  EXPECT_THROW(adapted_coords(SymmetryKind::dilatation, {0, 0}), FixedLocusError);
  EXPECT_THROW(adapted_coords(SymmetryKind::rotation, {0, 0}), FixedLocusError);
  uv = adapted_coords(SymmetryKind::rotation, {0, 2});
  EXPECT_NEAR(uv[0], std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(uv[1], std::log(2.0), 1e-15);
  const auto st = adapted_coords(SymmetryKind::loxodromic, {0, 1}, 2);
  EXPECT_NEAR(st[0], -std::numbers::pi / 2, 1e-15);
  auto xy = adapted_coords(SymmetryKind::translation, {0.3, -0.4});
  EXPECT_EQ(xy[0], 0.3);
  EXPECT_EQ(xy[1], -0.4);
}

TEST(AdaptedCoords, FlowsAreTranslations) {
  Gen g(63);
  for (int i = 0; i < 10; ++i) {
    const PlanarPoint p = g.planar(2);
    const auto a = adapted_coords(SymmetryKind::rotation, p);
    const auto b = adapted_coords(SymmetryKind::rotation, flow(generators::Rz, 0.2, p), 0, a[0]);
    EXPECT_NEAR(b[0] - a[0], -0.2, 1e-12);
    EXPECT_NEAR(b[1] - a[1], 0, 1e-12);
    const auto c = adapted_coords(SymmetryKind::dilatation, flow(generators::Dilatation, 0.3, p), 0, a[0]);
    EXPECT_NEAR(c[0] - a[0], 0, 1e-12);
    EXPECT_NEAR(c[1] - a[1], 0.3, 1e-12);
  }
}

TEST(AdaptedCoords, BranchTracking) {
  // a full turn returns the angle shifted by a period when tracked continuously
  double hint = 0;
  const PlanarPoint p{1, 0};
  for (int k = 1; k <= 40; ++k) {
    const auto q = flow(generators::Rz, -2 * std::numbers::pi * k / 40, p);
    hint = adapted_coords(SymmetryKind::rotation, q, 0, hint)[0];
  }
  EXPECT_NEAR(hint, 2 * std::numbers::pi, 1e-12);
}

TEST(SymmetricProperties, StraightLineLeaves) {
  // leaves of P = tan(u - u0) in the dilatation chart are straight lines in the plane
  const double u0 = 0.3;
  const ClosedFormSlope c{SymmetryKind::dilatation, 0, u0};
  for (double v0 : {-0.5, 0.0, 0.7}) {
    // integrate dv/du = P(u) by Simpson's rule
    std::vector<PlanarPoint> pts;
    double v = v0;
    const double h = 1e-3;
    for (int i = 0; i <= 1000; ++i) {
      const double u = -0.5 + i * h;
      if (i % 200 == 0) pts.push_back({std::exp(v) * std::cos(u), std::exp(v) * std::sin(u)});
      v += h / 6 * (c.at(u).v + 4 * c.at(u + h / 2).v + c.at(u + h).v);
    }
    const double dx = pts.back().x - pts.front().x, dy = pts.back().y - pts.front().y;
    for (const auto& p : pts) {
      const double cross = (p.x - pts.front().x) * dy - (p.y - pts.front().y) * dx;
      EXPECT_LT(std::abs(cross) / std::hypot(dx, dy), 1e-9);
    }
  }
}

TEST(SymmetricProperties, OrbitFamilyIsInvariant) {
  // the orbit of a circle is carried to itself by the flow
  const auto fam = orbit_family(generators::Dilatation, {1, -2, 0, 0.75}, "orbit");
  Gen g(64);
  for (int i = 0; i < 10; ++i) {
    const double u = g.uniform(fam.pmin, fam.pmax);
    const auto m = group_matrix4(generators::Dilatation, g.uniform(-1, 1));
    const auto c = fam.at(u);
    const auto moved = flow_circle(m, {c[0], c[1], c[2], c[3]});
    const auto eq = CircleEq::normalized(moved[0], moved[1], moved[2], moved[3]);
    // the moved circle passes through the radial image of its own points, so it is a dilate
    const double cx = -0.5 * eq.alpha, cy = -0.5 * eq.beta, r = std::sqrt(eq.radius_squared());
    EXPECT_NEAR(r / std::hypot(cx, cy), 0.5, 1e-10);
    EXPECT_NEAR(cy, 0, 1e-10);
  }
  EXPECT_THROW(orbit_family(generators::Rz, {1, 0, 0, -1}, "fixed"), DegenerateError);
}
