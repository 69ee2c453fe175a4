#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "circweb/jets.hpp"
#include "circweb/moebius.hpp"
#include "circweb/webs.hpp"

namespace circweb {

enum class SymmetryKind { translation, dilatation, rotation, loxodromic };

struct OdeCheck {
  double residual = 0;
  double first_integral = 0;
};

// Circle condition for a symmetric slope P of the given kind, with its first integral.
OdeCheck ode_residual(SymmetryKind kind, const Jet1<double>& P, double kappa = 0);

// Variant of the loxodromic first integral with (kappa^2+1) in the second denominator.
// It is not conserved along solutions; kept for comparison.
double loxodromic_integral_variant(const Jet1<double>& P, double kappa);

// Closed-form solutions: A (x - x0)/sqrt(1 - A^2 (x - x0)^2) for translation, and the
// tan / tanh families for dilatation and rotation.
struct ClosedFormSlope {
  SymmetryKind kind = SymmetryKind::dilatation;
  double A = 0;
  double shift = 0;

  Jet1<double> at(double arg) const;
  // Open interval of arguments where the solution is real.
  std::pair<double, double> domain() const;
};

double k_invariant(const Jet1<double>& P, const Jet1<double>& Q, const Jet1<double>& R);

// (u, v) = (angle, log radius) for dilatation and rotation, (s, t) for loxodromic,
// (x, y) for translation. The angle is taken on the sheet nearest to angle_hint.
std::array<double, 2> adapted_coords(SymmetryKind kind, PlanarPoint p, double kappa = 0,
                                     std::optional<double> angle_hint = std::nullopt);

struct OdeState {
  double t = 0, P = 0, dP = 0;
};

// Fixed-step RK4 for the loxodromic circle condition.
std::vector<OdeState> integrate_loxodromic(OdeState start, double kappa, double t_end, double step = 1e-3);

// Orbit of a circle under exp(t gen) as a family with polynomial circle coefficients.
CircleFamily<double> orbit_family(const Generator& gen, const Coeffs<double>& circle, std::string name);

// Slopes of a web in its chart as functions of the first chart coordinate.
std::array<Jet1<double>, 3> chart_slopes(const Web3<double>& web, double s, double t);

}  // namespace circweb
