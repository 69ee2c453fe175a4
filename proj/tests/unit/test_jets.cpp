#include <gtest/gtest.h>

#include <cmath>

#include "circweb/errors.hpp"
#include "circweb/jets.hpp"
#include "gen.hpp"

using namespace circweb;
using circweb::testing::entries;
using circweb::testing::Expr;
using circweb::testing::finite_differences;
using circweb::testing::Gen;

namespace {

using J = Jet2<double>;

void expect_jet(const J& j, std::array<double, 6> want, double tol = 1e-15) {
  auto got = entries(j);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(got[i], want[i], tol) << "entry " << i;
}

bool close(double got, long double want, double tol) {
  return std::abs(got - static_cast<double>(want)) <= tol * std::max(1.0L, std::abs(want));
}

}  // namespace

TEST(Jets, ProductOfCoordinates) {
  expect_jet(J::var_x(2) * J::var_y(3), {6, 3, 2, 0, 1, 0});
}

TEST(Jets, Reciprocal) {
  expect_jet(recip(J::var_x(2)), {0.5, -0.25, 0, 0.25, 0, 0});
}

TEST(Jets, RadiusMatchesFiniteDifferences) {
  auto f = [](auto x, auto y) {
    using std::sqrt;
    return sqrt(x * x + y * y);
  };
  const auto fd = finite_differences([&](long double x, long double y) { return f(x, y); }, 3, 4);
  const auto j = entries(f(J::var_x(3), J::var_y(4)));
  for (int i = 0; i < 6; ++i) EXPECT_TRUE(close(j[i], fd[i], 1e-6)) << i;
}

TEST(Jets, DomainErrors) {
  EXPECT_THROW(recip(J::var_x(0)), DomainError);
  EXPECT_THROW(sqrt(J::var_x(-1)), DomainError);
  EXPECT_THROW(log(J::var_x(0)), DomainError);
  EXPECT_THROW(J::var_x(1) / J::constant(0), DomainError);
  EXPECT_THROW(atan2(J::var_y(0), J::var_x(0)), DomainError);
}

TEST(Jets, Jet1ChainRule) {
  auto t = Jet1<double>::variable(0.3);
  auto s = sin(t) * t;
  EXPECT_NEAR(s.v, std::sin(0.3) * 0.3, 1e-16);
  EXPECT_NEAR(s.d1, std::cos(0.3) * 0.3 + std::sin(0.3), 1e-15);
  EXPECT_NEAR(s.d2, -std::sin(0.3) * 0.3 + 2 * std::cos(0.3), 1e-15);
}

TEST(ImplicitRoot, TypeFiveRoots) {
  const double c = 2;
  const J x = J::var_x(1), y = J::var_y(2);
  QuadraticU<double> q{J::constant(1 / c), 2.0 * y, x * x + y * y};
  auto r = implicit_roots(q);
  EXPECT_NEAR(r[0].v, -4 - std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(r[1].v, -4 + std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(implicit_root_jet(q, Branch::plus).v, -1.5505102572168219, 1e-12);
}

TEST(ImplicitRoot, TypeFiveEnvelopePoint) {
  const J x = J::var_x(1), y = J::var_y(1);
  QuadraticU<double> q{J::constant(0.5), 2.0 * y, x * x + y * y};
  EXPECT_THROW(implicit_roots(q), DiscriminantError);
}

TEST(ImplicitRoot, SquareRoot) {
  QuadraticU<double> q{J::constant(1), J::constant(0), -J::var_x(4)};
  const auto u = implicit_root_jet(q, Branch::plus);
  EXPECT_NEAR(u.v, 2, 1e-15);
  EXPECT_NEAR(u.dx, 0.25, 1e-15);
  EXPECT_NEAR(u.dxx, -1.0 / 32, 1e-15);
  EXPECT_NEAR(u.dy, 0, 1e-15);
}

TEST(ImplicitRoot, VanishingLeadingCoefficient) {
  QuadraticU<double> q{J::constant(0), J::var_y(1), J::var_x(1)};
  EXPECT_THROW(implicit_roots(q), DegenerateError);
}

TEST(JetProperties, CompositesMatchFiniteDifferences) {
  Gen g(11);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    auto e = Expr::random(g, 5);
    if (e->ops() < 3) continue;
    const double x = g.uniform(-1, 1), y = g.uniform(-1, 1);
    const auto j = entries(e->eval(J::var_x(x), J::var_y(y)));
    const auto fd = finite_differences([&](long double a, long double b) { return e->eval(a, b); }, x, y);
    for (int i = 0; i < 6; ++i) ASSERT_TRUE(close(j[i], fd[i], 1e-6)) << "trial " << trial << " entry " << i;
    ++checked;
  }
  EXPECT_GT(checked, 1000);
}

TEST(JetProperties, ImplicitRootsResubstitute) {
  Gen g(12);
  auto poly = [&](const J& x, const J& y) {
    return g.uniform(-1, 1) + g.uniform(-1, 1) * x + g.uniform(-1, 1) * y + g.uniform(-1, 1) * x * y +
           g.uniform(-1, 1) * x * x + g.uniform(-1, 1) * y * y;
  };
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const J x = J::var_x(g.uniform(-1, 1)), y = J::var_y(g.uniform(-1, 1));
    QuadraticU<double> q{poly(x, y), poly(x, y), poly(x, y)};
    std::array<J, 2> r;
    try {
      r = implicit_roots(q);
    } catch (const DomainError&) {
      continue;
    }
    auto absj = [](const J& j) {
      return J{std::abs(j.v), std::abs(j.dx), std::abs(j.dy), std::abs(j.dxx), std::abs(j.dxy), std::abs(j.dyy)};
    };
    for (const auto& u : r) {
      // entrywise bound on the magnitudes of the summed terms of a u^2 + b u + c
      const auto scale = entries(absj(q.a) * absj(u) * absj(u) + absj(q.b) * absj(u) + absj(q.c));
      const auto res = entries(q.eval(u));
      for (int i = 0; i < 6; ++i) EXPECT_LE(std::abs(res[i]), 1e-12 * scale[i]) << trial << " entry " << i;
    }
    EXPECT_LE(r[0].v, r[1].v);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}
