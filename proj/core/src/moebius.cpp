#include "circweb/moebius.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "circweb/errors.hpp"

namespace circweb {

namespace {

using cd = std::complex<double>;

double max_abs(std::initializer_list<double> v) {
  double m = 0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

template <std::size_t N>
bool proj_equal(const std::array<double, N>& p, const std::array<double, N>& q, double tol) {
  auto norm = [](std::array<double, N> v) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < N; ++i)
      if (std::abs(v[i]) > std::abs(v[k])) k = i;
    double s = v[k];
    if (s != 0)
      for (auto& e : v) e /= s;
    return v;
  };
  auto a = norm(p), b = norm(q);
  for (std::size_t i = 0; i < N; ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

std::array<double, 3> cross(const std::array<double, 3>& u, const std::array<double, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

double dot3(const std::array<double, 3>& u, const std::array<double, 3>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

std::vector<double> parse_reals(std::string_view text, std::size_t count) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(':', pos);
    std::string_view tok = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    double v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size())
      throw ParseError("cannot parse '" + std::string(tok) + "' as a real number");
    out.push_back(v);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (out.size() != count)
    throw ParseError("expected " + std::to_string(count) + " colon-separated reals, got " +
                     std::to_string(out.size()));
  return out;
}

}  // namespace

double TetraPoint::scale() const { return max_abs({X, Y, Z, U}); }

double PluckerLine::scale() const { return max_abs({a, b, c, f, g, h}); }

bool projectively_equal(const TetraPoint& p, const TetraPoint& q, double tol) {
  return proj_equal(p.coords(), q.coords(), tol);
}

bool projectively_equal(const PluckerLine& l, const PluckerLine& m, double tol) {
  return proj_equal(l.coords(), m.coords(), tol);
}

CircleEq CircleEq::normalized(double e, double a, double b, double g) {
  double s = max_abs({e, a, b, g});
  if (std::abs(e) > 1e-12 * s) return {1.0, a / e, b / e, g / e};
  double n = std::hypot(a, b);
  if (n == 0) throw DegenerateError("circle equation has no x, y terms");
  return {0.0, a / n, b / n, g / n};
}

TetraPoint stereo_to_sphere(PlanarPoint p) {
  double r2 = p.x * p.x + p.y * p.y;
  double d = 1 + r2;
  return {2 * p.x / d, 2 * p.y / d, (1 - r2) / d, 1.0};
}

PlanarPoint stereo_to_plane(const TetraPoint& q) {
  double s = q.U + q.Z;
  if (std::abs(s) <= 1e-14 * q.scale()) throw SouthPoleError("stereographic image of the south pole");
  return {q.X / s, q.Y / s};
}

PlanePoint stereo_to_plane_or_infinity(const TetraPoint& q, double tol) {
  double s = q.U + q.Z;
  if (std::abs(s) <= tol * q.scale()) return AtInfinity{};
  return PlanarPoint{q.X / s, q.Y / s};
}

std::array<double, 4> polar_coords(const std::array<double, 4>& c) {
  return {c[1], c[2], c[3] - c[0], -c[3] - c[0]};
}

std::array<double, 4> coeffs_of_polar(const std::array<double, 4>& p) {
  return {-(p[2] + p[3]) / 2, p[0], p[1], (p[2] - p[3]) / 2};
}

TetraPoint polar_of_circle(const CircleEq& c) {
  auto p = polar_coords({c.eps, c.alpha, c.beta, c.gamma});
  return {p[0], p[1], p[2], p[3]};
}

CircleEq circle_of_polar(const TetraPoint& p) {
  double s = p.scale();
  if (s == 0) throw DegenerateError("zero tetracyclic point");
  double q = p.quadric_value() / (s * s);
  if (q < -1e-12) throw InsideQuadricError("polar point inside the Darboux quadric: no real circle");
  if (q <= 1e-12) throw OnQuadricError("polar point on the Darboux quadric: point circle");
  auto c = coeffs_of_polar(p.coords());
  return CircleEq::normalized(c[0], c[1], c[2], c[3]);
}

PluckerLine line_through(const TetraPoint& p1, const TetraPoint& p2) {
  PluckerLine l{p1.X * p2.U - p2.X * p1.U, p1.Y * p2.U - p2.Y * p1.U, p1.Z * p2.U - p2.Z * p1.U,
                p1.Y * p2.Z - p2.Y * p1.Z, p1.Z * p2.X - p2.Z * p1.X, p1.X * p2.Y - p2.X * p1.Y};
  double s = p1.scale() * p2.scale();
  if (l.scale() <= 1e-14 * s) throw CoincidentPointsError("points are projectively equal");
  return l;
}

PluckerLine dual_line(const PluckerLine& l) { return {-l.f, -l.g, -l.h, l.a, l.b, l.c}; }

double pairing(const PluckerLine& l, const PluckerLine& m) {
  return l.a * m.f + l.b * m.g + l.c * m.h + l.f * m.a + l.g * m.b + l.h * m.c;
}

namespace {

// Rows vanish on the points of the line.
Eigen::Matrix4d incidence_matrix(const PluckerLine& l) {
  const double d1 = l.a, d2 = l.b, d3 = l.c, m1 = l.f, m2 = l.g, m3 = l.h;
  Eigen::Matrix4d M;
  M << 0, -d3, d2, -m1,  //
      d3, 0, -d1, -m2,   //
      -d2, d1, 0, -m3,   //
      m1, m2, m3, 0;
  return M;
}

}  // namespace

std::array<TetraPoint, 2> points_on_line(const PluckerLine& l) {
  if (l.scale() == 0) throw DegenerateError("zero Pluecker vector");
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(incidence_matrix(l) / l.scale(), Eigen::ComputeFullV);
  Eigen::Vector4d p = svd.matrixV().col(2), q = svd.matrixV().col(3);
  return {TetraPoint{p[0], p[1], p[2], p[3]}, TetraPoint{q[0], q[1], q[2], q[3]}};
}

double incidence_residual(const PluckerLine& l, const TetraPoint& p) {
  Eigen::Vector4d v(p.X, p.Y, p.Z, p.U);
  double s = l.scale() * v.cwiseAbs().maxCoeff();
  if (s == 0) throw DegenerateError("zero input");
  return (incidence_matrix(l) * v).cwiseAbs().maxCoeff() / s;
}

double affine_distance(const PluckerLine& l, const TetraPoint& p) {
  if (p.U == 0) throw InfinityError("point at infinity");
  std::array<double, 3> d{l.a, l.b, l.c}, m{l.f, l.g, l.h};
  double dd = dot3(d, d);
  if (dd == 0) throw InfinityError("line at infinity");
  std::array<double, 3> x{p.X / p.U, p.Y / p.U, p.Z / p.U};
  // x0 = (m x d)/|d|^2 is the foot point closest to the origin
  auto x0 = cross(m, d);
  std::array<double, 3> w{x[0] - x0[0] / dd, x[1] - x0[1] / dd, x[2] - x0[2] / dd};
  auto cw = cross(w, d);
  return std::sqrt(dot3(cw, cw) / dd);
}

Classification classify(const Generator& gen, double tol) {
  double q1 = gen.a * gen.a + gen.b * gen.b + gen.c * gen.c;
  double q2 = gen.f * gen.f + gen.g * gen.g + gen.h * gen.h;
  double s2 = q1 + q2;
  if (s2 == 0) throw ZeroGeneratorError("zero generator");
  double thr = tol * s2;
  auto near = [&](double v) {
    double a = std::abs(v);
    return a > 1e-2 * thr && a < 1e2 * thr;
  };
  double pl = gen.plucker_relation();
  double diff = q1 - q2;
  Classification out{};
  out.marginal = near(pl) || near(diff);
  if (std::abs(pl) > thr)
    out.cls = LineClass::Loxodromic;
  else if (diff > thr)
    out.cls = LineClass::Hyperbolic;
  else if (diff < -thr)
    out.cls = LineClass::Elliptic;
  else
    out.cls = LineClass::Parabolic;
  return out;
}

std::string_view class_name(LineClass c) {
  switch (c) {
    case LineClass::Hyperbolic: return "hyperbolic";
    case LineClass::Elliptic: return "elliptic";
    case LineClass::Parabolic: return "parabolic";
    case LineClass::Loxodromic: return "loxodromic";
  }
  return "unknown";
}

std::string describe(LineClass c) {
  switch (c) {
    case LineClass::Hyperbolic: return "hyperbolic (rotation-conjugate)";
    case LineClass::Elliptic: return "elliptic (dilatation-conjugate)";
    case LineClass::Parabolic: return "parabolic (translation-conjugate)";
    case LineClass::Loxodromic: return "loxodromic";
  }
  return "unknown";
}

TetraPoint tangency_point(const PluckerLine& l, double tol) {
  if (classify(l, tol).cls != LineClass::Parabolic)
    throw NotTangentError("line is not tangent to the Darboux quadric");
  double n = std::sqrt(l.a * l.a + l.b * l.b + l.c * l.c);
  double a = l.a / n, b = l.b / n, c = l.c / n, f = l.f / n, g = l.g / n, h = l.h / n;
  return {c * g - b * h, a * h - c * f, b * f - a * g, 1.0};
}

Mat2c generator_matrix2(const Generator& gen) {
  const cd I(0, 1);
  cd al(gen.a, gen.f), be(gen.b, gen.g), ga(gen.c, gen.h);
  // al R_x + be R_y + ga R_z
  Mat2c m{};
  m[0][0] = -0.5 * I * al;
  m[1][1] = 0.5 * I * al;
  m[0][1] = -0.5 * I * be + 0.5 * ga;
  m[1][0] = -0.5 * I * be - 0.5 * ga;
  return m;
}

Mat2c exp2(const Mat2c& g, double t) {
  // g is trace free, so g^2 = mu^2 I with mu^2 = -det g
  cd mu2 = -(g[0][0] * g[1][1] - g[0][1] * g[1][0]);
  cd z2 = mu2 * t * t;
  cd ch, sh;  // cosh(mu t) and sinh(mu t)/mu
  if (std::abs(z2) < 1e-8) {
    ch = 1.0 + z2 / 2.0 + z2 * z2 / 24.0;
    sh = t * (1.0 + z2 / 6.0 + z2 * z2 / 120.0);
  } else {
    cd mu = std::sqrt(mu2);
    ch = std::cosh(mu * t);
    sh = std::sinh(mu * t) / mu;
  }
  Mat2c e{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) e[i][j] = sh * g[i][j] + (i == j ? ch : cd(0));
  return e;
}

Mat4 field4(const Generator& gen) {
  const double a = gen.a, b = gen.b, c = gen.c, f = gen.f, g = gen.g, h = gen.h;
  return Mat4{{{0, c, -b, f}, {-c, 0, a, g}, {b, -a, 0, h}, {f, g, h, 0}}};
}

Generator generator_from_field4(const Mat4& m) {
  return {m[1][2], -m[0][2], m[0][1], m[0][3], m[1][3], m[2][3]};
}

Mat4 group_matrix4(const Generator& gen, double t) {
  Mat2c A = exp2(generator_matrix2(gen), t);
  Mat4 out{};
  for (int k = 0; k < 4; ++k) {
    double X = k == 0, Y = k == 1, Z = k == 2, U = k == 3;
    const cd I(0, 1);
    cd V[2][2] = {{X + U, Y + I * Z}, {Y - I * Z, U - X}};
    cd AV[2][2], W[2][2];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) AV[i][j] = A[i][0] * V[0][j] + A[i][1] * V[1][j];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        W[i][j] = AV[i][0] * std::conj(A[j][0]) + AV[i][1] * std::conj(A[j][1]);
    out[0][k] = 0.5 * (W[0][0].real() - W[1][1].real());
    out[1][k] = W[0][1].real();
    out[2][k] = W[0][1].imag();
    out[3][k] = 0.5 * (W[0][0].real() + W[1][1].real());
  }
  return out;
}

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Mat4 mat4_inverse(const Mat4& m) {
  Eigen::Matrix4d e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e(i, j) = m[i][j];
  Eigen::Matrix4d inv = e.inverse();
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = inv(i, j);
  return r;
}

TetraPoint transform_point(const Mat4& m, const TetraPoint& p) {
  auto v = p.coords();
  std::array<double, 4> r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
  return {r[0], r[1], r[2], r[3]};
}

PlanePoint flow_point(const Generator& gen, double t, const PlanePoint& p) {
  TetraPoint q = std::holds_alternative<AtInfinity>(p)
                     ? TetraPoint{0, 0, -1, 1}
                     : stereo_to_sphere(std::get<PlanarPoint>(p));
  return stereo_to_plane_or_infinity(transform_point(group_matrix4(gen, t), q), 1e-13);
}

PlanarPoint flow(const Generator& gen, double t, PlanarPoint p) {
  PlanePoint r = flow_point(gen, t, p);
  if (std::holds_alternative<AtInfinity>(r)) throw InfinityError("flow image is the point at infinity");
  return std::get<PlanarPoint>(r);
}

std::array<double, 4> flow_circle(const Mat4& m, const std::array<double, 4>& coeffs) {
  auto p = polar_coords(coeffs);
  auto q = transform_point(m, {p[0], p[1], p[2], p[3]});
  return coeffs_of_polar(q.coords());
}

Generator parse_generator(std::string_view text) {
  auto v = parse_reals(text, 6);
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

TetraPoint parse_point(std::string_view text) {
  auto v = parse_reals(text, 4);
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace circweb
