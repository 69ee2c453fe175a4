#pragma once

#include <array>
#include <cmath>

#include "circweb/jets.hpp"
#include "gen.hpp"

namespace circweb::testing {

struct Poly2 {
  using J = Jet2<double>;
  // c0 + c1 x + c2 y + c3 x^2 + c4 xy + c5 y^2 + c6 x^3 + c7 y^3
  std::array<double, 8> c{};
  J f(const J& x, const J& y) const {
    return c[0] + c[1] * x + c[2] * y + c[3] * x * x + c[4] * x * y + c[5] * y * y + c[6] * x * x * x +
           c[7] * y * y * y;
  }
  J fx(const J& x, const J& y) const { return c[1] + 2.0 * c[3] * x + c[4] * y + 3.0 * c[6] * x * x; }
  J fy(const J& x, const J& y) const { return c[2] + c[4] * x + 2.0 * c[5] * y + 3.0 * c[7] * y * y; }
};

inline Poly2 random_poly(Gen& g) {
  Poly2 p;
  for (auto& e : p.c) e = g.uniform(-1, 1);
  return p;
}

struct Triple {
  Jet2<double> P, Q, R;
  bool hexagonal;
};

// Level sets of f1, f2 and h1(f1) + h2(f2), with h(t) = t + k t^3; hexagonal by construction.
// The generic variant replaces the third function with an unrelated polynomial.
inline Triple random_triple(Gen& g, bool hexagonal) {
  using J = Jet2<double>;
  const double x0 = g.uniform(-0.5, 0.5), y0 = g.uniform(-0.5, 0.5);
  const J x = J::var_x(x0), y = J::var_y(y0);
  const auto f1 = random_poly(g), f2 = random_poly(g), f3 = random_poly(g);
  const double k1 = g.uniform(-1, 1), k2 = g.uniform(-1, 1);
  auto slope = [](const J& gx, const J& gy) { return -gx / gy; };
  Triple t;
  t.hexagonal = hexagonal;
  t.P = slope(f1.fx(x, y), f1.fy(x, y));
  t.Q = slope(f2.fx(x, y), f2.fy(x, y));
  if (hexagonal) {
    const J a = f1.f(x, y), b = f2.f(x, y);
    const J h1 = 1.0 + 3.0 * k1 * a * a, h2 = 1.0 + 3.0 * k2 * b * b;
    t.R = slope(h1 * f1.fx(x, y) + h2 * f2.fx(x, y), h1 * f1.fy(x, y) + h2 * f2.fy(x, y));
  } else {
    t.R = slope(f3.fx(x, y), f3.fy(x, y));
  }
  return t;
}

// directions pairwise transverse and away from the vertical, where slope coordinates degenerate
inline bool transverse(const Triple& t) {
  const double s[3] = {t.P.v, t.Q.v, t.R.v};
  for (int i = 0; i < 3; ++i) {
    if (std::abs(s[i]) > 10) return false;
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(s[i] - s[j]) / std::sqrt((1 + s[i] * s[i]) * (1 + s[j] * s[j])) < 0.1) return false;
  }
  return true;
}

}  // namespace circweb::testing
