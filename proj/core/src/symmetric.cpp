#include "circweb/symmetric.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "circweb/errors.hpp"

namespace circweb {

OdeCheck ode_residual(SymmetryKind kind, const Jet1<double>& P, double kappa) {
  const double p = P.v, p1 = P.d1, p2 = P.d2;
  const double s = p * p + 1;
  const double quad = 3 * p * p1 * p1 / s;
  const double fi0 = p1 * p1 / (s * s * s);
  double extra = 0, fi = fi0;
  switch (kind) {
    case SymmetryKind::translation: break;
    case SymmetryKind::dilatation:
      extra = -p * s;
      fi = fi0 - 1 / s;
      break;
    case SymmetryKind::rotation:
      extra = p * s;
      fi = fi0 + 1 / s;
      break;
    case SymmetryKind::loxodromic: {
      const double k2 = kappa * kappa + 1;
      extra = s * (kappa * p + 1) * (p - kappa) / (k2 * k2);
      fi = fi0 + (2 * kappa * p - kappa * kappa + 1) / (k2 * k2 * s);
      break;
    }
  }
  return {p2 - quad - extra, fi};
}

double loxodromic_integral_variant(const Jet1<double>& P, double kappa) {
  const double s = P.v * P.v + 1;
  const double k2 = kappa * kappa + 1;
  return P.d1 * P.d1 / (s * s * s) + (2 * kappa * P.v - kappa * kappa + 1) / (k2 * s);
}

Jet1<double> ClosedFormSlope::at(double arg) const {
  auto [lo, hi] = domain();
  if (!(arg > lo && arg < hi)) throw DomainError("argument outside the real domain of the solution");
  using J = Jet1<double>;
  J w = J::variable(arg) - shift;
  switch (kind) {
    case SymmetryKind::translation:
      if (A == 0) return J::constant(0.0);
      return A * w / sqrt(1.0 - A * A * w * w);
    case SymmetryKind::dilatation: {
      J t = tan(w);
      return std::sqrt(A + 1) * t / sqrt(1.0 - A * t * t);
    }
    case SymmetryKind::rotation: {
      J t = tanh(w);
      return std::sqrt(A * A - 1) * t / sqrt(1.0 - A * A * t * t);
    }
    case SymmetryKind::loxodromic: break;
  }
  throw DomainError("no closed form for loxodromic symmetry");
}

std::pair<double, double> ClosedFormSlope::domain() const {
  const double inf = std::numeric_limits<double>::infinity();
  double half = 0;
  switch (kind) {
    case SymmetryKind::translation: half = A == 0 ? inf : 1 / std::abs(A); break;
    case SymmetryKind::dilatation:
      if (A <= -1) return {0, 0};
      half = A <= 0 ? std::numbers::pi / 2 : std::atan(1 / std::sqrt(A));
      break;
    case SymmetryKind::rotation:
      if (A * A <= 1) return {0, 0};
      half = std::atanh(1 / std::abs(A));
      break;
    case SymmetryKind::loxodromic: return {0, 0};
  }
  return {shift - half, shift + half};
}

double k_invariant(const Jet1<double>& P, const Jet1<double>& Q, const Jet1<double>& R) {
  const double p = P.v, q = Q.v, r = R.v;
  auto sep = [](double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); };
  if (std::min({sep(p, q), sep(q, r), sep(r, p)}) < kSeparationTol) throw DegenerateWebError("slopes collide");
  return P.d1 / ((p - q) * (p - r)) + Q.d1 / ((q - p) * (q - r)) + R.d1 / ((r - p) * (r - q));
}

std::array<double, 2> adapted_coords(SymmetryKind kind, PlanarPoint p, double kappa,
                                     std::optional<double> angle_hint) {
  if (kind == SymmetryKind::translation) return {p.x, p.y};
  const double r2 = p.x * p.x + p.y * p.y;
  if (!(r2 > 0)) throw FixedLocusError("the origin is fixed by the symmetry");
  double u = std::atan2(p.y, p.x);
  if (angle_hint) {
    const double tau = 2 * std::numbers::pi;
    u += tau * std::round((*angle_hint - u) / tau);
  }
  const double v = 0.5 * std::log(r2);
  if (kind == SymmetryKind::loxodromic) return {kappa * v - u, kappa * u + v};
  return {u, v};
}

std::vector<OdeState> integrate_loxodromic(OdeState start, double kappa, double t_end, double step) {
  const double k2 = kappa * kappa + 1;
  auto accel = [&](double p, double dp) {
    const double s = p * p + 1;
    return 3 * p * dp * dp / s + s * (kappa * p + 1) * (p - kappa) / (k2 * k2);
  };
  std::vector<OdeState> out{start};
  const int n = static_cast<int>(std::ceil(std::abs(t_end - start.t) / step));
  const double h = (t_end - start.t) / n;
  OdeState s = start;
  for (int i = 0; i < n; ++i) {
    const double k1p = s.dP, k1v = accel(s.P, s.dP);
    const double k2p = s.dP + 0.5 * h * k1v, k2v = accel(s.P + 0.5 * h * k1p, s.dP + 0.5 * h * k1v);
    const double k3p = s.dP + 0.5 * h * k2v, k3v = accel(s.P + 0.5 * h * k2p, s.dP + 0.5 * h * k2v);
    const double k4p = s.dP + h * k3v, k4v = accel(s.P + h * k3p, s.dP + h * k3v);
    s.P += h / 6 * (k1p + 2 * k2p + 2 * k3p + k4p);
    s.dP += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
    s.t = start.t + (i + 1) * h;
    if (!std::isfinite(s.P) || !std::isfinite(s.dP)) throw DomainError("solution left the regular range");
    out.push_back(s);
  }
  return out;
}

namespace {

using Vec4 = std::array<double, 4>;

Vec4 moved(const Generator& gen, double t, const Vec4& polar) {
  return transform_point(group_matrix4(gen, t), {polar[0], polar[1], polar[2], polar[3]}).coords();
}

Generator scaled(const Generator& g, double k) { return {g.a * k, g.b * k, g.c * k, g.f * k, g.g * k, g.h * k}; }

}  // namespace

CircleFamily<double> orbit_family(const Generator& gen, const Coeffs<double>& circle, std::string name) {
  const Vec4 p0 = polar_coords(circle);
  {
    const Mat4 f = field4(gen);
    Vec4 v{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) v[i] += f[i][j] * p0[j];
    double pp = 0, pv = 0, vv = 0;
    for (int i = 0; i < 4; ++i) {
      pp += p0[i] * p0[i];
      pv += p0[i] * v[i];
      vv += v[i] * v[i];
    }
    // velocity along the polar point: the circle is fixed
    if (vv - pv * pv / pp <= 1e-24 * pp * std::max(vv, 1.0))
      throw DegenerateError("circle is invariant under the symmetry");
  }
  const double q1 = gen.a * gen.a + gen.b * gen.b + gen.c * gen.c;
  const double q2 = gen.f * gen.f + gen.g * gen.g + gen.h * gen.h;
  std::array<Vec4, 3> poly{};  // polar point as a polynomial in the family parameter
  CircleFamily<double> fam;
  fam.name = std::move(name);
  switch (classify(gen).cls) {
    case LineClass::Hyperbolic: {
      // period 2 pi after scaling; parameter s = tan(t/2)
      Generator g = scaled(gen, 1 / std::sqrt(q1 - q2));
      Vec4 a = p0, b = moved(g, std::numbers::pi, p0), m = moved(g, std::numbers::pi / 2, p0);
      for (int i = 0; i < 4; ++i) {
        poly[0][i] = a[i];
        poly[2][i] = b[i];
        poly[1][i] = 2 * (m[i] - 0.5 * (a[i] + b[i]));
      }
      fam.pmin = -4;
      fam.pmax = 4;
      break;
    }
    case LineClass::Elliptic: {
      // eigenvalues +-1 after scaling; parameter s = e^t, s p(t) = C0 + C1 s + C2 s^2
      Generator g = scaled(gen, 1 / std::sqrt(q2 - q1));
      const double l2 = std::log(2.0);
      Vec4 m0 = p0, mp = moved(g, l2, p0), mm = moved(g, -l2, p0);
      for (int i = 0; i < 4; ++i) {
        const double e1 = m0[i], e2 = 2 * mp[i], e3 = 0.5 * mm[i];
        // C0 + C1 + C2 = e1, C0 + 2 C1 + 4 C2 = e2, C0 + C1/2 + C2/4 = e3
        const double c2 = (2 * e2 - 6 * e1 + 4 * e3) / 3;
        const double c1 = e2 - e1 - 3 * c2;
        poly[2][i] = c2;
        poly[1][i] = c1;
        poly[0][i] = e1 - c1 - c2;
      }
      fam.pmin = 0.05;
      fam.pmax = 20;
      break;
    }
    case LineClass::Parabolic: {
      Vec4 m0 = p0, mp = moved(gen, 1, p0), mm = moved(gen, -1, p0);
      for (int i = 0; i < 4; ++i) {
        poly[0][i] = m0[i];
        poly[1][i] = 0.5 * (mp[i] - mm[i]);
        poly[2][i] = 0.5 * (mp[i] + mm[i]) - m0[i];
      }
      fam.pmin = -5;
      fam.pmax = 5;
      break;
    }
    case LineClass::Loxodromic: throw DomainError("loxodromic orbits are not circle families of degree 2");
  }
  for (const auto& p : poly) fam.by_power.push_back(coeffs_of_polar(p));
  auto t = fam.trimmed(1e-12);
  if (t.degree() == 0) throw DegenerateError("circle is invariant under the symmetry");
  return t;
}

std::array<Jet1<double>, 3> chart_slopes(const Web3<double>& web, double s, double t) {
  auto j = web_slopes(web, s, t);
  std::array<Jet1<double>, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = {j.slope[i].v, j.slope[i].dx, j.slope[i].dxx};
  return out;
}

}  // namespace circweb
