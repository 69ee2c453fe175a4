#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "circweb/jets.hpp"
#include "circweb/moebius.hpp"

namespace circweb {

// (eps, alpha, beta, gamma) of eps (x^2+y^2) + alpha x + beta y + gamma
template <class T>
using Coeffs = std::array<T, 4>;

// Circles sum_k u^k by_power[k] = 0 for a real parameter u; degree 1 is a pencil.
template <class T = double>
struct CircleFamily {
  std::string name;
  std::vector<Coeffs<T>> by_power;
  double pmin = -1, pmax = 1;

  int degree() const { return static_cast<int>(by_power.size()) - 1; }
  Coeffs<T> at(T u) const;
  // Drops vanishing leading and trailing coefficient vectors.
  CircleFamily trimmed(double tol = 1e-13) const;
};

template <class T>
CircleFamily<T> pencil(std::string name, Coeffs<T> c0, Coeffs<T> c1, double pmin = -1, double pmax = 1) {
  return {std::move(name), {c0, c1}, pmin, pmax};
}

enum class Leaf { single, lower, upper };

struct SlopeRef {
  int family = 0;
  Leaf leaf = Leaf::single;
};

// Coordinates (s, t) with the plane point (x(s,t), y(s,t)); slopes are dt/ds.
struct Chart {
  enum class Kind { Rotation, DilatationPolar, RotationPolar, Loxodromic };
  Kind kind = Kind::Rotation;
  double param = 0;  // rotation angle, or kappa

  static Chart identity() { return {}; }
  static Chart rotated(double angle) { return {Kind::Rotation, angle}; }
  static Chart dilatation_polar() { return {Kind::DilatationPolar, 0}; }
  static Chart rotation_polar() { return {Kind::RotationPolar, 0}; }
  static Chart loxodromic(double kappa) { return {Kind::Loxodromic, kappa}; }

  struct Embedding {
    Jet2<double> x, y, xs, xt, ys, yt;
  };
  Embedding embed(double s, double t) const;
  PlanarPoint to_plane(double s, double t) const;
  std::string name() const;
};

template <class T = double>
struct Web3 {
  std::string name;
  std::vector<CircleFamily<T>> families;
  std::array<SlopeRef, 3> fields;
  Chart chart;
};

// Three slope fields with a real parameter family each, one slope per family.
template <class T>
Web3<T> three_family_web(std::string name, CircleFamily<T> f1, CircleFamily<T> f2, CircleFamily<T> f3,
                         Chart chart = {}) {
  Web3<T> w{std::move(name), {}, {}, chart};
  w.families = {std::move(f1), std::move(f2), std::move(f3)};
  for (int i = 0; i < 3; ++i) w.fields[i] = {i, Leaf::single};
  return w;
}

// Both branches of a quadratic family plus one pencil.
template <class T>
Web3<T> conic_pencil_web(std::string name, CircleFamily<T> conic, CircleFamily<T> pen, Chart chart = {}) {
  Web3<T> w{std::move(name), {std::move(conic), std::move(pen)}, {}, chart};
  w.fields = {SlopeRef{0, Leaf::lower}, SlopeRef{0, Leaf::upper}, SlopeRef{1, Leaf::single}};
  return w;
}

template <class T>
struct SlopeJets {
  std::array<Jet2<T>, 3> slope;
  // P^2 + A P + B = 0 for slope[0], slope[1]; from a resultant when both come from one family
  Jet2<T> A, B;
  bool pair_from_resultant = false;
};

inline constexpr double kSeparationTol = 1e-8;
// Residuals are divided by term_sum + kNormalizerFloor * (terms with saturated derivatives).
inline constexpr double kNormalizerFloor = 1e-6;

template <class T>
Jet2<T> family_leaf_slope(const CircleFamily<T>& fam, Leaf leaf, const Chart::Embedding& e);

template <class T>
SlopeJets<T> web_slopes(const Web3<T>& web, double s, double t);

// Point-independent incidence polynomial data of a quadratic family at a chart point.
template <class T>
QuadraticU<T> family_quadratic(const CircleFamily<T>& fam, const Chart::Embedding& e);

// A, B of the slope quadratic of a degree-2 family, without solving for the roots.
template <class T>
std::array<Jet2<T>, 2> resultant_AB(const CircleFamily<T>& fam, const Chart::Embedding& e);

template <class T>
struct Connection {
  Dual2<T> alpha, beta;
  T K;
  double K_normalized = 0;
  double defect = 0;  // third structure equation, relative to its terms
};

template <class T>
Connection<T> connection_and_curvature(const Jet2<T>& P, const Jet2<T>& Q, const Jet2<T>& R);

template <class T>
struct Residual {
  T raw{};
  double normalized = 0;
  double term_sum = 0;
  int terms = 0;
};

template <class T>
Residual<T> curvature_residual_explicit(const Jet2<T>& P, const Jet2<T>& Q, const Jet2<T>& R);

template <class T>
Residual<T> curvature_residual_ABR(const Jet2<T>& A, const Jet2<T>& B, const Jet2<T>& R);

template <class T>
struct CurvatureReport {
  std::array<T, 3> slopes{};
  Connection<T> connection;
  Residual<T> explicit_form, abr_form;

  double max_normalized() const {
    return std::max({connection.K_normalized, explicit_form.normalized, abr_form.normalized});
  }
};

template <class T>
CurvatureReport<T> curvature_report(const SlopeJets<T>& s);

template <class T>
CurvatureReport<T> evaluate(const Web3<T>& web, double s, double t) {
  return curvature_report(web_slopes(web, s, t));
}

struct PencilSpec {
  enum class Kind { elliptic, hyperbolic, parabolic, parabolic_exceptional };
  Kind kind = Kind::elliptic;
  // vertices (elliptic), limit points (hyperbolic), or the vertex in p1 (parabolic)
  PlanePoint p1 = PlanarPoint{}, p2 = AtInfinity{};
  // direction [r : 1-r] orthogonal to the common tangent (parabolic)
  double r = 0;

  static PencilSpec elliptic(PlanePoint a, PlanePoint b) { return {Kind::elliptic, a, b, 0}; }
  static PencilSpec hyperbolic(PlanePoint a, PlanePoint b) { return {Kind::hyperbolic, a, b, 0}; }
  static PencilSpec parabolic(PlanarPoint v, double r) { return {Kind::parabolic, v, AtInfinity{}, r}; }
  static PencilSpec parabolic_exceptional(PlanarPoint v) {
    return {Kind::parabolic_exceptional, v, AtInfinity{}, 0};
  }
};

// Slope dy/dx of the pencil circle through (x, y), from the pencil's first integral.
Jet2<double> slope_from_pencil(const PencilSpec& p, const Jet2<double>& x, const Jet2<double>& y);
inline Jet2<double> slope_from_pencil(const PencilSpec& p, double x, double y) {
  return slope_from_pencil(p, Jet2<double>::var_x(x), Jet2<double>::var_y(y));
}

template <class T>
Jet2<T> lift(const Jet2<double>& j) {
  return {T(j.v), T(j.dx), T(j.dy), T(j.dxx), T(j.dxy), T(j.dyy)};
}

template <class T>
Jet2<T> incidence(const Coeffs<T>& c, const Chart::Embedding& e) {
  Jet2<T> x = lift<T>(e.x), y = lift<T>(e.y);
  return c[0] * (x * x + y * y) + c[1] * x + c[2] * y + Jet2<T>::constant(c[3]);
}

}  // namespace circweb
