#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <variant>

namespace circweb {

struct TetraPoint {
  double X = 0, Y = 0, Z = 0, U = 1;

  double quadric_value() const { return X * X + Y * Y + Z * Z - U * U; }
  double scale() const;
  std::array<double, 4> coords() const { return {X, Y, Z, U}; }
};

bool projectively_equal(const TetraPoint& p, const TetraPoint& q, double tol = 1e-10);

// eps (x^2+y^2) + alpha x + beta y + gamma = 0, eps in {0, 1}
struct CircleEq {
  double eps = 1, alpha = 0, beta = 0, gamma = -1;

  // Scales a general coefficient vector so that eps becomes 0 or 1.
  static CircleEq normalized(double e, double a, double b, double g);
  double radius_squared() const { return 0.25 * (alpha * alpha + beta * beta) - gamma; }
  double value(double x, double y) const {
    return eps * (x * x + y * y) + alpha * x + beta * y + gamma;
  }
};

struct PlanarPoint {
  double x = 0, y = 0;
};
struct AtInfinity {};
using PlanePoint = std::variant<PlanarPoint, AtInfinity>;

TetraPoint stereo_to_sphere(PlanarPoint p);
PlanarPoint stereo_to_plane(const TetraPoint& q);
PlanePoint stereo_to_plane_or_infinity(const TetraPoint& q, double tol = 1e-14);

// Linear polar map on raw coefficient vectors (eps, alpha, beta, gamma).
std::array<double, 4> polar_coords(const std::array<double, 4>& coeffs);
std::array<double, 4> coeffs_of_polar(const std::array<double, 4>& polar);

TetraPoint polar_of_circle(const CircleEq& c);
CircleEq circle_of_polar(const TetraPoint& p);

struct PluckerLine {
  double a = 0, b = 0, c = 0, f = 0, g = 0, h = 0;

  std::array<double, 6> coords() const { return {a, b, c, f, g, h}; }
  static PluckerLine from(const std::array<double, 6>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
  }
  double scale() const;
  double plucker_relation() const { return a * f + b * g + c * h; }
};

// The same six numbers read as a Lie algebra element a R_x + ... + h B_z.
using Generator = PluckerLine;

bool projectively_equal(const PluckerLine& l, const PluckerLine& m, double tol = 1e-10);

PluckerLine line_through(const TetraPoint& p1, const TetraPoint& p2);
PluckerLine dual_line(const PluckerLine& l);
// Klein bilinear form; zero iff the two lines meet.
double pairing(const PluckerLine& l, const PluckerLine& m);
// Two points spanning the line, orthonormal in R^4.
std::array<TetraPoint, 2> points_on_line(const PluckerLine& l);
// Scale-free residual of the point-on-line conditions.
double incidence_residual(const PluckerLine& l, const TetraPoint& p);
// Euclidean distance (in R^3) from an affine point to a line with a finite point.
double affine_distance(const PluckerLine& l, const TetraPoint& p);

enum class LineClass { Hyperbolic, Elliptic, Parabolic, Loxodromic };

struct Classification {
  LineClass cls;
  bool marginal = false;
};

inline constexpr double kClassifyTol = 1e-10;

Classification classify(const Generator& gen, double tol = kClassifyTol);
std::string_view class_name(LineClass c);
// "hyperbolic (rotation-conjugate)" and similar
std::string describe(LineClass c);

TetraPoint tangency_point(const PluckerLine& l, double tol = kClassifyTol);

using Mat2c = std::array<std::array<std::complex<double>, 2>, 2>;
using Mat4 = std::array<std::array<double, 4>, 4>;

Mat2c generator_matrix2(const Generator& gen);
Mat2c exp2(const Mat2c& g, double t);
// Infinitesimal action on (X, Y, Z, U).
Mat4 field4(const Generator& gen);
Generator generator_from_field4(const Mat4& m);
// The group element exp(t gen) acting on (X, Y, Z, U), computed through SL2(C).
Mat4 group_matrix4(const Generator& gen, double t);
Mat4 mat4_mul(const Mat4& a, const Mat4& b);
Mat4 mat4_inverse(const Mat4& m);
TetraPoint transform_point(const Mat4& m, const TetraPoint& p);

PlanarPoint flow(const Generator& gen, double t, PlanarPoint p);
PlanePoint flow_point(const Generator& gen, double t, const PlanePoint& p);
std::array<double, 4> flow_circle(const Mat4& m, const std::array<double, 4>& coeffs);

Generator parse_generator(std::string_view text);
TetraPoint parse_point(std::string_view text);

namespace generators {
inline constexpr Generator Rx{1, 0, 0, 0, 0, 0};
inline constexpr Generator Ry{0, 1, 0, 0, 0, 0};
inline constexpr Generator Rz{0, 0, 1, 0, 0, 0};
inline constexpr Generator Bx{0, 0, 0, 1, 0, 0};
inline constexpr Generator By{0, 0, 0, 0, 1, 0};
inline constexpr Generator Bz{0, 0, 0, 0, 0, 1};
// d/dx and d/dy in the plane
inline constexpr Generator Dx{0, -1, 0, 1, 0, 0};
inline constexpr Generator Dy{1, 0, 0, 0, 1, 0};
// x d/dx + y d/dy
inline constexpr Generator Dilatation{0, 0, 0, 0, 0, -1};
}  // namespace generators

}  // namespace circweb
