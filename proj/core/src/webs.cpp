#include "circweb/webs.hpp"

#include <algorithm>
#include <cmath>

#include "circweb/errors.hpp"

namespace circweb {

template <class T>
Coeffs<T> CircleFamily<T>::at(T u) const {
  Coeffs<T> out{};
  T p(1);
  for (const auto& c : by_power) {
    for (int i = 0; i < 4; ++i) out[i] += p * c[i];
    p *= u;
  }
  return out;
}

template <class T>
CircleFamily<T> CircleFamily<T>::trimmed(double tol) const {
  double s = 0;
  for (const auto& c : by_power)
    for (const auto& e : c) s = std::max(s, magnitude(e));
  auto zero = [&](const Coeffs<T>& c) {
    return std::all_of(c.begin(), c.end(), [&](const T& e) { return magnitude(e) <= tol * s; });
  };
  CircleFamily out = *this;
  while (out.by_power.size() > 2 && zero(out.by_power.back())) out.by_power.pop_back();
  while (out.by_power.size() > 2 && zero(out.by_power.front())) {
    // dividing by u keeps the same circles for u != 0
    out.by_power.erase(out.by_power.begin());
  }
  return out;
}

Chart::Embedding Chart::embed(double s, double t) const {
  using J = Jet2<double>;
  const J S = J::var_x(s), Tt = J::var_y(t);
  switch (kind) {
    case Kind::Rotation: {
      double c = std::cos(param), n = std::sin(param);
      return {c * S - n * Tt, n * S + c * Tt, J::constant(c), J::constant(-n), J::constant(n),
              J::constant(c)};
    }
    case Kind::DilatationPolar: {
      J x = exp(Tt) * cos(S), y = exp(Tt) * sin(S);
      return {x, y, -y, x, x, y};
    }
    case Kind::RotationPolar: {
      J x = exp(S) * cos(Tt), y = exp(S) * sin(Tt);
      return {x, y, x, -y, y, x};
    }
    case Kind::Loxodromic: {
      const double k = param, k2 = k * k + 1;
      J rho = (S + k * Tt) * (1.0 / k2);
      J th = (k * S - Tt) * (1.0 / k2);
      J x = exp(rho) * cos(th), y = exp(rho) * sin(th);
      return {x, y, (x - k * y) * (1.0 / k2), (k * x + y) * (1.0 / k2), (y + k * x) * (1.0 / k2),
              (k * y - x) * (1.0 / k2)};
    }
  }
  throw DomainError("unknown chart");
}

PlanarPoint Chart::to_plane(double s, double t) const {
  auto e = embed(s, t);
  return {e.x.v, e.y.v};
}

std::string Chart::name() const {
  switch (kind) {
    case Kind::Rotation: return param == 0 ? "cartesian" : "rotated(" + std::to_string(param) + ")";
    case Kind::DilatationPolar: return "dilatation-polar";
    case Kind::RotationPolar: return "rotation-polar";
    case Kind::Loxodromic: return "loxodromic(" + std::to_string(param) + ")";
  }
  return "unknown";
}

namespace {

template <class T>
struct Gradient {
  Jet2<T> s, t;
};

// Chart gradient of a single circle equation.
template <class T>
Gradient<T> circle_gradient(const Coeffs<T>& c, const Chart::Embedding& e) {
  Jet2<T> x = lift<T>(e.x), y = lift<T>(e.y);
  Jet2<T> gx = T(2) * c[0] * x + c[1];
  Jet2<T> gy = T(2) * c[0] * y + c[2];
  return {gx * lift<T>(e.xs) + gy * lift<T>(e.ys), gx * lift<T>(e.xt) + gy * lift<T>(e.yt)};
}

template <class T>
Jet2<T> slope_of(const Gradient<T>& g) {
  double sc = magnitude(g.s.v) + magnitude(g.t.v);
  if (!(sc > 0)) throw BaseLocusError("circle gradient vanishes");
  if (magnitude(g.t.v) <= 1e-12 * sc) throw VerticalSlopeError("vertical leaf in this chart");
  return -g.s / g.t;
}

template <class T>
double coeff_scale(const CircleFamily<T>& fam) {
  double s = 0;
  for (const auto& c : fam.by_power)
    for (const auto& e : c) s = std::max(s, magnitude(e));
  return s;
}

}  // namespace

template <class T>
QuadraticU<T> family_quadratic(const CircleFamily<T>& fam, const Chart::Embedding& e) {
  if (fam.degree() != 2) throw DegenerateError("family is not quadratic in its parameter");
  return {incidence(fam.by_power[2], e), incidence(fam.by_power[1], e), incidence(fam.by_power[0], e)};
}

template <class T>
Jet2<T> family_leaf_slope(const CircleFamily<T>& fam, Leaf leaf, const Chart::Embedding& e) {
  const int deg = fam.degree();
  if (deg == 1) {
    Jet2<T> f0 = incidence(fam.by_power[0], e), f1 = incidence(fam.by_power[1], e);
    double r2 = 1 + e.x.v * e.x.v + e.y.v * e.y.v;
    double sc = coeff_scale(fam) * r2;
    if (magnitude(f0.v) <= 1e-12 * sc && magnitude(f1.v) <= 1e-12 * sc)
      throw BaseLocusError("point lies on the base locus of the pencil");
    auto g0 = circle_gradient(fam.by_power[0], e), g1 = circle_gradient(fam.by_power[1], e);
    // level set of -f0/f1
    Gradient<T> g{f1 * g0.s - f0 * g1.s, f1 * g0.t - f0 * g1.t};
    if (magnitude(g.s.v) + magnitude(g.t.v) <= 1e-12 * sc * sc)
      throw BaseLocusError("pencil gradient vanishes");
    return slope_of(g);
  }
  if (deg != 2) throw DegenerateError("only pencils and quadratic families are supported");
  auto roots = implicit_roots(family_quadratic(fam, e));
  const Jet2<T>& u = leaf == Leaf::upper ? roots[1] : roots[0];
  // large roots: sum in w = 1/u, the root of the reversed quadratic, to avoid cancellation
  const bool reversed = magnitude(u.v) > 1;
  Jet2<T> p = Jet2<T>::constant(T(1)), step = u;
  if (reversed) {
    auto q = family_quadratic(fam, e);
    if (magnitude(q.c.v) <= kLeadingTol * q.scale()) {
      // the other root is u = 0, so the reversed quadratic is linear
      step = -q.a / q.b;
    } else {
      auto w = implicit_roots(QuadraticU<T>{q.c, q.b, q.a});
      const T inv = T(1) / u.v;
      step = magnitude(w[0].v - inv) <= magnitude(w[1].v - inv) ? w[0] : w[1];
    }
  }
  Gradient<T> g{};
  for (int k = 0; k <= 2; ++k) {
    auto gk = circle_gradient(fam.by_power[reversed ? 2 - k : k], e);
    g.s += p * gk.s;
    g.t += p * gk.t;
    p = p * step;
  }
  return slope_of(g);
}

template <class T>
std::array<Jet2<T>, 2> resultant_AB(const CircleFamily<T>& fam, const Chart::Embedding& e) {
  auto q = family_quadratic(fam, e);
  std::array<Gradient<T>, 3> g;
  for (int k = 0; k <= 2; ++k) g[k] = circle_gradient(fam.by_power[k], e);
  // Res_u(a u^2 + b u + c, sum_k u^k (Gs_k + p Gt_k)) as a quadratic in p
  const auto &a = q.a, &b = q.b, &c = q.c;
  Jet2<T> al0 = a * g[0].s - c * g[2].s, al1 = a * g[0].t - c * g[2].t;
  Jet2<T> be0 = a * g[1].s - b * g[2].s, be1 = a * g[1].t - b * g[2].t;
  Jet2<T> ga0 = b * g[0].s - c * g[1].s, ga1 = b * g[0].t - c * g[1].t;
  Jet2<T> C = al1 * al1 - be1 * ga1;
  Jet2<T> D = T(2) * al0 * al1 - (be0 * ga1 + be1 * ga0);
  Jet2<T> E = al0 * al0 - be0 * ga0;
  double sc = magnitude(C.v) + magnitude(D.v) + magnitude(E.v);
  if (magnitude(C.v) <= 1e-12 * sc) throw VerticalSlopeError("slope quadratic degenerates");
  return {D / C, E / C};
}

template <class T>
SlopeJets<T> web_slopes(const Web3<T>& web, double s, double t) {
  auto e = web.chart.embed(s, t);
  SlopeJets<T> out;
  for (int i = 0; i < 3; ++i) {
    const auto& f = web.fields[i];
    out.slope[i] = family_leaf_slope(web.families.at(f.family), f.leaf, e);
    if (!all_finite(out.slope[i])) throw DomainError("non-finite slope jet");
  }
  const auto &f0 = web.fields[0], &f1 = web.fields[1];
  if (f0.family == f1.family && f0.leaf != f1.leaf) {
    auto ab = resultant_AB(web.families[f0.family], e);
    out.A = ab[0];
    out.B = ab[1];
    out.pair_from_resultant = true;
  } else {
    out.A = -(out.slope[0] + out.slope[1]);
    out.B = out.slope[0] * out.slope[1];
  }
  return out;
}

namespace {

template <class T>
void check_separation(const T& p, const T& q, const T& r) {
  auto sep = [](const T& a, const T& b) {
    double m = std::max({1.0, magnitude(a), magnitude(b)});
    return magnitude(a - b) / m;
  };
  if (std::min({sep(p, q), sep(q, r), sep(r, p)}) < kSeparationTol)
    throw DegenerateWebError("slopes collide");
}

template <class T>
Dual2<T> d0(const Jet2<T>& j) {
  return {j.v, j.dx, j.dy};
}
template <class T>
Dual2<T> dX(const Jet2<T>& j) {
  return {j.dx, j.dxx, j.dxy};
}
template <class T>
Dual2<T> dY(const Jet2<T>& j) {
  return {j.dy, j.dxy, j.dyy};
}

// Derivatives of each order replaced by their largest magnitude: the size the terms
// would have without exact zeros in the derivatives.
template <class T>
Jet2<T> saturated(const Jet2<T>& j) {
  const T d1(std::max(magnitude(j.dx), magnitude(j.dy)));
  const T d2(std::max({magnitude(j.dxx), magnitude(j.dxy), magnitude(j.dyy)}));
  Jet2<T> out;
  out.v = j.v;
  out.dx = out.dy = d1;
  out.dxx = out.dxy = out.dyy = d2;
  return out;
}

template <class T>
double abs_sum(const std::vector<T>& terms) {
  double s = 0;
  for (const auto& t : terms) s += magnitude(t);
  return s;
}

template <class T>
Residual<T> finish(const std::vector<T>& terms, double floor_scale) {
  Residual<T> r;
  for (const auto& t : terms) r.raw += t;
  r.term_sum = abs_sum(terms);
  r.terms = static_cast<int>(terms.size());
  const double den = r.term_sum + kNormalizerFloor * floor_scale;
  r.normalized = den > 0 ? magnitude(r.raw) / den : 0.0;
  return r;
}

template <class T>
std::vector<T> explicit_terms(const Jet2<T>& Pj, const Jet2<T>& Qj, const Jet2<T>& Rj) {
  const T P = Pj.v, Q = Qj.v, R = Rj.v;
  const T Px = Pj.dx, Py = Pj.dy, Qx = Qj.dx, Qy = Qj.dy, Rx = Rj.dx, Ry = Rj.dy;
  const T two(2);
  return {
      (R - Q) * Pj.dxx,
      (R - Q) * (Q + R) * Pj.dxy,
      (R - Q) * Q * R * Pj.dyy,
      (P - R) * Qj.dxx,
      (P - R) * (P + R) * Qj.dxy,
      (P - R) * P * R * Qj.dyy,
      (Q - P) * Rj.dxx,
      (Q - P) * (P + Q) * Rj.dxy,
      (Q - P) * P * Q * Rj.dyy,
      (Q - R) * (two * P - Q - R) * (Px * Px + (Q + R) * Px * Py + Q * R * Py * Py) / ((P - Q) * (P - R)),
      (R - P) * (two * Q - P - R) * (Qx * Qx + (P + R) * Qx * Qy + P * R * Qy * Qy) / ((Q - R) * (Q - P)),
      (P - Q) * (two * R - P - Q) * (Rx * Rx + (P + Q) * Rx * Ry + P * Q * Ry * Ry) / ((R - Q) * (R - P)),
      (two * R - P - Q) * Px * Qx / (P - Q),
      (two * P - Q - R) * Qx * Rx / (Q - R),
      (two * Q - R - P) * Rx * Px / (R - P),
      (R * R - P * Q) * (Px * Qy + Py * Qx) / (P - Q),
      (P * P - Q * R) * (Qx * Ry + Qy * Rx) / (Q - R),
      (Q * Q - P * R) * (Rx * Py + Ry * Px) / (R - P),
      (two * P * Q * R - (P + Q) * R * R) * Py * Qy / (Q - P),
      (two * P * Q * R - (Q + R) * P * P) * Qy * Ry / (R - Q),
      (two * P * Q * R - (P + R) * Q * Q) * Ry * Py / (P - R),
  };
}

}  // namespace

template <class T>
Connection<T> connection_and_curvature(const Jet2<T>& P, const Jet2<T>& Q, const Jet2<T>& R) {
  check_separation(P.v, Q.v, R.v);
  using D = Dual2<T>;
  const std::array<const Jet2<T>*, 3> S{&P, &Q, &R};
  // sigma_i = M_i dx + N_i dy = (S_j - S_k)(dy - S_i dx)
  std::array<D, 3> M, N, Nx, My;
  for (int i = 0; i < 3; ++i) {
    const auto& a = *S[i];
    const auto& b = *S[(i + 1) % 3];
    const auto& c = *S[(i + 2) % 3];
    N[i] = d0(b) - d0(c);
    M[i] = -(d0(a) * N[i]);
    Nx[i] = dX(b) - dX(c);
    My[i] = -(dY(a) * N[i] + d0(a) * (dY(b) - dY(c)));
  }
  // N_x - M_y + alpha N - beta M = 0 for i = 1, 2
  D r0 = -(Nx[0] - My[0]), r1 = -(Nx[1] - My[1]);
  D det = N[0] * (-M[1]) - (-M[0]) * N[1];
  double dsc = magnitude(N[0].v * M[1].v) + magnitude(M[0].v * N[1].v);
  if (!(magnitude(det.v) > 1e-14 * dsc)) throw SingularSolveError("connection system is singular");
  Connection<T> out;
  out.alpha = (r0 * (-M[1]) - (-M[0]) * r1) / det;
  out.beta = (N[0] * r1 - N[1] * r0) / det;
  out.K = out.beta.dx - out.alpha.dy;
  double ksc = magnitude(out.beta.dx) + magnitude(out.alpha.dy) +
               magnitude(out.alpha.v * out.alpha.v) + magnitude(out.beta.v * out.beta.v);
  // floor: size of K = (explicit left-hand side) / ((P-Q)(Q-R)(R-P)) with saturated derivatives
  const double kfloor = abs_sum(explicit_terms(saturated(P), saturated(Q), saturated(R))) /
                        magnitude((P.v - Q.v) * (Q.v - R.v) * (R.v - P.v));
  const double kden = ksc + kNormalizerFloor * kfloor;
  out.K_normalized = kden > 0 ? magnitude(out.K) / kden : 0.0;
  T e3 = Nx[2].v - My[2].v + out.alpha.v * N[2].v - out.beta.v * M[2].v;
  double esc = magnitude(Nx[2].v) + magnitude(My[2].v) + magnitude(out.alpha.v * N[2].v) +
               magnitude(out.beta.v * M[2].v);
  double row_sc = 0;
  for (int i = 0; i < 2; ++i)
    row_sc += magnitude(Nx[i].v) + magnitude(My[i].v) + magnitude(out.alpha.v * N[i].v) +
              magnitude(out.beta.v * M[i].v);
  const double den = esc + kNormalizerFloor * row_sc;
  out.defect = den > 0 ? magnitude(e3) / den : 0.0;
  return out;
}


template <class T>
Residual<T> curvature_residual_explicit(const Jet2<T>& P, const Jet2<T>& Q, const Jet2<T>& R) {
  check_separation(P.v, Q.v, R.v);
  return finish(explicit_terms(P, Q, R), abs_sum(explicit_terms(saturated(P), saturated(Q), saturated(R))));
}

namespace {

template <class T>
std::vector<T> abr_terms(const Jet2<T>& Aj, const Jet2<T>& Bj, const Jet2<T>& Rj) {
  const T A = Aj.v, B = Bj.v, R = Rj.v;
  const T D = A * A - T(4) * B;
  const T RR = R * R + A * R + B;
  const T Ax = Aj.dx, Ay = Aj.dy, Bx = Bj.dx, By = Bj.dy, Rx = Rj.dx, Ry = Rj.dy;
  const T Axx = Aj.dxx, Axy = Aj.dxy, Ayy = Aj.dyy;
  const T Bxx = Bj.dxx, Bxy = Bj.dxy, Byy = Bj.dyy;
  const T Rxx = Rj.dxx, Rxy = Rj.dxy, Ryy = Rj.dyy;
  const T pre = D * RR;
  const T A2 = A * A, A3 = A2 * A, A4 = A2 * A2, R2 = R * R, R3 = R2 * R, R4 = R2 * R2, B2 = B * B;
  const T D2 = D * D;
  const T c2(2), c3(3), c4(4), c5(5), c6(6), c7(7), c8(8), c12(12), c13(13), c16(16), c20(20);
  return {
      pre * (A * R + c2 * B) * Axx,
      pre * A * (R2 - B) * Axy,
      -pre * B * R * (A + c2 * R) * Ayy,
      -pre * (A + c2 * R) * Bxx,
      pre * (A2 - c2 * R2 - c2 * B) * Bxy,
      pre * R * (A2 - c2 * B + A * R) * Byy,
      pre * (c4 * B - A2) * Rxx,
      pre * A * (A2 - c4 * B) * Rxy,
      pre * B * (c4 * B - A2) * Ryy,
      D2 * (A + c2 * R) * Rx * Rx,
      (A + c2 * R) * (A2 - c4 * A * R - c4 * R2 - c8 * B) * Bx * Bx,
      -(c2 * A3 * R2 + A2 * R3 + c7 * A2 * B * R + c4 * A * B * R2 + c4 * B * R3 + c4 * A * B2 -
        c4 * B2 * R) * Ax * Ax,
      (B - R2) * (c2 * A3 * R + A2 * R2 + A2 * B + c4 * B * R2 + c4 * B2) * Ax * Ay,
      -A * D2 * (A + c2 * R) * Rx * Ry,
      (c2 * A3 * R - A4 + c4 * A2 * R2 - c8 * A * R3 - c8 * R4 + c8 * A2 * B - c16 * B * R2 - c8 * B2) *
          Bx * By,
      B * R * (c2 * A3 * R + c7 * A2 * R2 + c4 * A * R3 + A2 * B + c4 * A * B * R - c4 * B * R2 + c4 * B2) *
          Ay * Ay,
      -R * (A4 - A3 * R - c6 * A2 * R2 - c4 * A * R3 - c8 * A2 * B - c8 * A * B * R + c8 * B2) * By * By,
      B * D2 * (A + c2 * R) * Ry * Ry,
      D * (A2 * R - A * R2 - A * B - c8 * B * R) * Ax * Rx,
      (c3 * A3 * R + c13 * A2 * R2 + c8 * A * R3 + A2 * B + c12 * A * B * R - c4 * B * R2 + c12 * B2) * Ax *
          Bx,
      c2 * D * (A2 + A * R + R2 - c3 * B) * Bx * Rx,
      (c5 * A2 * R3 - A4 * R - A3 * R2 + c4 * A * R4 + A2 * B * R + c4 * A * B * R2 - c4 * B * R3 -
       c4 * A * B2 - c4 * B2 * R) *
          (Ax * By + Ay * Bx),
      D * (A2 * R2 + A2 * B + c2 * A * B * R - c2 * B * R2 - c2 * B2) * (Ax * Ry + Ay * Rx),
      -A * D * (A2 + A * R + R2 - c3 * B) * (Bx * Ry + By * Rx),
      B * D * (A2 * R - A * R2 - A * B - c8 * B * R) * Ay * Ry,
      (c4 * B - A2) * (A3 * R + A2 * R2 - A2 * B - c6 * A * B * R - c6 * B * R2 + c2 * B2) * By * Ry,
      -R * (c2 * A4 * R + c5 * A3 * R2 + c3 * A2 * R3 - A2 * B * R + c4 * A * B * R2 + c4 * B * R3 +
            c8 * A * B2 + c20 * B2 * R) *
          Ay * By,
  };
}

}  // namespace

template <class T>
Residual<T> curvature_residual_ABR(const Jet2<T>& Aj, const Jet2<T>& Bj, const Jet2<T>& Rj) {
  const T A = Aj.v, B = Bj.v, R = Rj.v;
  const T D = A * A - T(4) * B;
  double dsc = std::max(magnitude(A * A), magnitude(T(4) * B));
  if constexpr (!is_complex_v<T>) {
    if (D <= 1e-12 * dsc) throw ComplexBranchError("branch slopes are not real and distinct");
  } else {
    if (magnitude(D) <= 1e-12 * dsc) throw ComplexBranchError("branch slopes coincide");
  }
  const T RR = R * R + A * R + B;
  if (magnitude(RR) <= 1e-12 * std::max({magnitude(R * R), magnitude(A * R), magnitude(B)}))
    throw DegenerateWebError("third slope meets a branch");
  return finish(abr_terms(Aj, Bj, Rj), abs_sum(abr_terms(saturated(Aj), saturated(Bj), saturated(Rj))));
}


template <class T>
CurvatureReport<T> curvature_report(const SlopeJets<T>& s) {
  CurvatureReport<T> r;
  for (int i = 0; i < 3; ++i) r.slopes[i] = s.slope[i].v;
  r.connection = connection_and_curvature(s.slope[0], s.slope[1], s.slope[2]);
  r.explicit_form = curvature_residual_explicit(s.slope[0], s.slope[1], s.slope[2]);
  r.abr_form = curvature_residual_ABR(s.A, s.B, s.slope[2]);
  return r;
}

Jet2<double> slope_from_pencil(const PencilSpec& p, const Jet2<double>& x, const Jet2<double>& y) {
  using J = Jet2<double>;
  auto finite = [](const PlanePoint& q) -> const PlanarPoint* { return std::get_if<PlanarPoint>(&q); };
  auto base_check = [&](const J& d) {
    if (d.v <= 1e-24) throw BaseLocusError("point is a vertex of the pencil");
  };
  J f, g;
  switch (p.kind) {
    case PencilSpec::Kind::elliptic:
    case PencilSpec::Kind::hyperbolic: {
      const PlanarPoint* v1 = finite(p.p1);
      const PlanarPoint* v2 = finite(p.p2);
      if (!v1) std::swap(v1, v2);
      if (!v1) throw DegenerateError("pencil needs at least one finite vertex");
      // I = N^2 / (D1 D2); a vertex at infinity contributes the limit D2 = 1, N = p - x
      J X1 = v1->x - x, Y1 = v1->y - y;
      J D1 = X1 * X1 + Y1 * Y1;
      base_check(D1);
      J N, D2;
      if (v2) {
        J X2 = v2->x - x, Y2 = v2->y - y;
        N = X1 * X2 + Y1 * Y2;
        D2 = X2 * X2 + Y2 * Y2;
        base_check(D2);
      } else {
        N = X1;
        D2 = J::constant(1.0);
      }
      // derivatives of N, D1, D2 in x and y as jets
      J Nx, Ny, D1x, D1y, D2x, D2y;
      D1x = -2.0 * X1;
      D1y = -2.0 * Y1;
      if (v2) {
        J X2 = v2->x - x, Y2 = v2->y - y;
        Nx = -(X1 + X2);
        Ny = -(Y1 + Y2);
        D2x = -2.0 * X2;
        D2y = -2.0 * Y2;
      } else {
        Nx = J::constant(-1.0);
        Ny = J::constant(0.0);
        D2x = J::constant(0.0);
        D2y = J::constant(0.0);
      }
      // dI is proportional to N (2 dN D1 D2 - N d(D1 D2)); the factor N is dropped
      f = 2.0 * Nx * D1 * D2 - N * (D1x * D2 + D1 * D2x);
      g = 2.0 * Ny * D1 * D2 - N * (D1y * D2 + D1 * D2y);
      if (p.kind == PencilSpec::Kind::hyperbolic) {
        // omega_h = g dx - f dy
        if (std::abs(f.v) <= 1e-12 * (std::abs(f.v) + std::abs(g.v)))
          throw VerticalSlopeError("vertical pencil leaf");
        return g / f;
      }
      break;
    }
    case PencilSpec::Kind::parabolic:
    case PencilSpec::Kind::parabolic_exceptional: {
      const PlanarPoint* v = finite(p.p1);
      if (!v) throw DegenerateError("parabolic vertex must be finite");
      J dx = x - v->x, dy = y - v->y;
      J S = dx * dx + dy * dy;
      base_check(S);
      if (p.kind == PencilSpec::Kind::parabolic) {
        J L = -p.r * dx + (p.r - 1) * dy;
        f = 2.0 * dx * L + p.r * S;
        g = 2.0 * dy * L - (p.r - 1) * S;
      } else {
        J L = dx - dy;
        f = 2.0 * dx * L - S;
        g = 2.0 * dy * L + S;
      }
      break;
    }
  }
  if (std::abs(g.v) <= 1e-12 * (std::abs(f.v) + std::abs(g.v)))
    throw VerticalSlopeError("vertical pencil leaf");
  return -f / g;
}

#define CIRCWEB_INSTANTIATE(T)                                                                     \
  template struct CircleFamily<T>;                                                                 \
  template QuadraticU<T> family_quadratic(const CircleFamily<T>&, const Chart::Embedding&);        \
  template Jet2<T> family_leaf_slope(const CircleFamily<T>&, Leaf, const Chart::Embedding&);       \
  template std::array<Jet2<T>, 2> resultant_AB(const CircleFamily<T>&, const Chart::Embedding&);   \
  template SlopeJets<T> web_slopes(const Web3<T>&, double, double);                                \
  template Connection<T> connection_and_curvature(const Jet2<T>&, const Jet2<T>&, const Jet2<T>&); \
  template Residual<T> curvature_residual_explicit(const Jet2<T>&, const Jet2<T>&, const Jet2<T>&); \
  template Residual<T> curvature_residual_ABR(const Jet2<T>&, const Jet2<T>&, const Jet2<T>&);     \
  template CurvatureReport<T> curvature_report(const SlopeJets<T>&);

CIRCWEB_INSTANTIATE(double)
CIRCWEB_INSTANTIATE(std::complex<double>)

#undef CIRCWEB_INSTANTIATE

}  // namespace circweb
