#include "circweb/catalog.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "circweb/errors.hpp"
#include "circweb/symmetric.hpp"

namespace circweb {

bool ParamSpec::admits(double v) const {
  if (!std::isfinite(v) || !(v > lo && v < hi)) return false;
  return std::none_of(excluded.begin(), excluded.end(), [&](double e) { return std::abs(v - e) < 1e-12; });
}

std::string_view recipe_name(Recipe r) {
  switch (r) {
    case Recipe::pencil_triple: return "pencil-triple";
    case Recipe::conic_pencil: return "conic+pencil";
    case Recipe::symmetric_orbit: return "symmetric-orbit";
    case Recipe::subweb: return "subweb";
    case Recipe::control: return "control";
  }
  return "unknown";
}

namespace {

using C4 = Coeffs<double>;
using Fam = CircleFamily<double>;
using std::numbers::pi;

constexpr double inf = 1e300;

C4 circle_at(double a, double b, double rho) { return {1, -2 * a, -2 * b, a * a + b * b - rho * rho}; }
C4 line(double a, double b, double c) { return {0, a, b, c}; }

Fam quad(std::string name, C4 c0, C4 c1, C4 c2, double pmin, double pmax) {
  return {std::move(name), {c0, c1, c2}, pmin, pmax};
}

// Frequently used pencils, c0 + v c1.
Fam concentric() { return pencil<double>("x^2+y^2=v", {1, 0, 0, 0}, {0, 0, 0, -1}, 0.05, 6); }
Fam rays() { return pencil<double>("y=vx", {0, 0, 1, 0}, {0, -1, 0, 0}, -4, 4); }
Fam limit_pm1_x() { return pencil<double>("x^2+y^2+1=vx", {1, 0, 0, 1}, {0, -1, 0, 0}, -8, 8); }
Fam limit_pm1_y() { return pencil<double>("x^2+y^2+1=vy", {1, 0, 0, 1}, {0, 0, -1, 0}, -8, 8); }
Fam through_pm1_x() { return pencil<double>("x^2+y^2-1=vy", {1, 0, 0, -1}, {0, 0, -1, 0}, -6, 6); }
Fam through_pm1_y() { return pencil<double>("x^2+y^2-1=vx", {1, 0, 0, -1}, {0, -1, 0, 0}, -6, 6); }
Fam verticals() { return pencil<double>("x=v", {0, 1, 0, 0}, {0, 0, 0, -1}, -3, 3); }
Fam horizontals() { return pencil<double>("y=v", {0, 0, 1, 0}, {0, 0, 0, -1}, -3, 3); }
Fam lines_through(double p) {
  return pencil<double>("y=v(x-" + std::to_string(p) + ")", {0, 0, 1, 0}, {0, -1, 0, p}, -4, 4);
}

Web3<double> triple(std::string id, Fam a, Fam b, Fam c, Chart chart = {}) {
  return three_family_web(std::move(id), std::move(a), std::move(b), std::move(c), chart);
}

Web3<double> fields(std::string id, std::vector<Fam> fams, std::array<SlopeRef, 3> f, Chart chart = {}) {
  Web3<double> w{std::move(id), std::move(fams), f, chart};
  return w;
}

ParamSpec param_c(double canonical, double lo, double hi, std::string text, std::vector<double> extra,
                  std::vector<double> excluded = {}) {
  return {"c", canonical, lo, hi, std::move(excluded), std::move(text), std::move(extra)};
}

// Box inside the annulus r1 < |p| < r2, on the positive x side.
Window annulus_box(double r1, double r2) {
  const double w = r2 - r1;
  return {r1 + 0.05 * w, r2 - 0.25 * w, -0.5 * w, 0.5 * w};
}

struct Entry {
  WebSpec spec;
  std::function<void(BuiltWeb&)> make;
};

void fill_polar_lines(BuiltWeb& b) {
  b.polar_lines.clear();
  for (const auto& f : b.web.families) b.polar_lines.push_back(polar_line_of(f));
}

Entry pencil_entry(std::string id, std::string desc, std::string polar, Window w, std::function<Web3<double>()> f,
                   Window rw = {-2.5, 2.5, -2.5, 2.5}) {
  WebSpec s;
  s.id = id;
  s.description = std::move(desc);
  s.recipe = Recipe::pencil_triple;
  s.polar_reference = polar;
  s.polar_recomputed = polar;
  s.window = w;
  s.render_window = rw;
  return {s, [f](BuiltWeb& b) {
            b.web = f();
            fill_polar_lines(b);
          }};
}

Entry conic_entry(std::string id, std::string desc, std::vector<ParamSpec> ps, std::string polar_ref,
                  std::string polar_re, std::string env_text, Window w, Window rw,
                  std::function<void(BuiltWeb&, double)> f) {
  WebSpec s;
  s.id = std::move(id);
  s.description = std::move(desc);
  s.recipe = Recipe::conic_pencil;
  s.params = std::move(ps);
  s.polar_reference = std::move(polar_ref);
  s.polar_recomputed = std::move(polar_re);
  s.envelope_text = std::move(env_text);
  s.window = w;
  s.render_window = rw;
  return {s, [f](BuiltWeb& b) {
            double c = b.params.count("c") ? b.params.at("c") : 0;
            f(b, c);
            b.polar_lines = {polar_line_of(b.web.families[1])};
          }};
}

Entry orbit_entry(std::string id, std::string desc, std::vector<ParamSpec> ps, Window w, Window rw,
                  std::function<Web3<double>(const Params&)> f, std::string polar = {},
                  std::function<Window(const Params&)> window_of = {}) {
  WebSpec s;
  s.id = std::move(id);
  s.description = std::move(desc);
  s.recipe = Recipe::symmetric_orbit;
  s.params = std::move(ps);
  s.polar_reference = polar;
  s.polar_recomputed = polar;
  s.window = w;
  s.render_window = rw;
  return {s, [f, window_of](BuiltWeb& b) {
            b.web = f(b.params);
            if (window_of) b.spec.window = window_of(b.params);
          }};
}

// Lines x0 x + y0 y = 1 with (x0, y0) on a x0^2 + b y0^2 = a xp^2, through (xp, 0).
Fam tangent_line_family(double a, double b, double xp) {
  return quad("x0 x + y0 y = 1", {0, -a * xp, 0, -a}, {0, 0, -2 * a * xp, 0}, {0, xp * b, 0, -b}, -6, 6);
}

const std::vector<PluckerLine>& a6_lines() {
  using namespace generators;
  static const std::vector<PluckerLine> l{Rx, Ry, Rz, Bx, By, Bz};
  return l;
}
const std::vector<PluckerLine>& a4_lines() {
  using namespace generators;
  static const std::vector<PluckerLine> l{Rz, Bz, Dx, Dy};
  return l;
}

bool coplanar_lines(const std::vector<PluckerLine>& ls) {
  Eigen::MatrixXd m(4, 2 * ls.size());
  for (size_t i = 0; i < ls.size(); ++i) {
    auto p = points_on_line(ls[i]);
    m.col(2 * i) << p[0].X, p[0].Y, p[0].Z, p[0].U;
    m.col(2 * i + 1) << p[1].X, p[1].Y, p[1].Z, p[1].U;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  auto s = svd.singularValues();
  return s[3] < 1e-10 * s[0];
}

std::string sub_id(const std::string& base, const std::array<int, 3>& idx) {
  return base + "-sub-" + std::to_string(idx[0] + 1) + std::to_string(idx[1] + 1) + std::to_string(idx[2] + 1);
}

Entry subweb_entry(const std::string& base, const std::vector<PluckerLine>& lines, std::array<int, 3> idx,
                   const std::vector<std::string>& names) {
  WebSpec s;
  s.id = sub_id(base, idx);
  std::vector<PluckerLine> chosen{lines[idx[0]], lines[idx[1]], lines[idx[2]]};
  bool cop = coplanar_lines(chosen);
  s.description = "pencils of " + names[idx[0]] + ", " + names[idx[1]] + ", " + names[idx[2]] +
                  (cop ? " (coplanar polar lines)" : " (non-coplanar polar lines)");
  s.recipe = Recipe::subweb;
  s.polar_reference = s.polar_recomputed = "three edges of the autodual tetrahedron";
  if (base == "a4") s.polar_reference = s.polar_recomputed = "three of the lines R_z, B_z, B_x-R_y, R_x+B_y";
  s.window = {-1.8, 1.8, -1.8, 1.8};
  s.render_window = {-2.5, 2.5, -2.5, 2.5};
  return {s, [chosen, names, idx](BuiltWeb& b) {
            std::vector<Fam> fams;
            for (int i = 0; i < 3; ++i) fams.push_back(pencil_of_line(chosen[i], names[idx[i]]));
            b.web = triple(b.spec.id, fams[0], fams[1], fams[2], Chart::rotated(0.3));
            b.polar_lines = chosen;
          }};
}

std::vector<Entry> make_entries() {
  std::vector<Entry> e;

  // three pencils
  e.push_back(pencil_entry("3p-hhh", "three hyperbolic pencils with mutually orthogonal polar lines",
                           "coordinate axes through [0:0:0:1]", {-1.7, 1.7, -1.7, 1.7},
                           [] { return triple("3p-hhh", limit_pm1_x(), limit_pm1_y(), concentric()); }));
  e.push_back(pencil_entry("3p-hee-concurrent",
                           "one hyperbolic and two elliptic pencils, polar lines through [0:0:1:0]",
                           "z-axis and the lines [0:Y:Z:0], [X:0:Z:0]", {-1.7, 1.7, -1.7, 1.7}, [] {
                             return triple("3p-hee-concurrent", concentric(), through_pm1_x(), through_pm1_y());
                           }));
  e.push_back(pencil_entry("3p-hhe", "two dual polar lines and a hyperbolic line meeting both",
                           "z-axis, its dual [X:Y:0:0] and the x-axis", {-1.7, 1.7, -1.7, 1.7},
                           [] { return triple("3p-hhe", concentric(), rays(), limit_pm1_x()); }));
  e.push_back(pencil_entry("3p-hee-dual", "two dual polar lines and an elliptic line meeting both",
                           "z-axis, its dual [X:Y:0:0] and [0:Y:Z:0]", {-1.7, 1.7, -1.7, 1.7},
                           [] { return triple("3p-hee-dual", concentric(), rays(), through_pm1_x()); }));
  e.push_back(pencil_entry("3p-hep-dual", "concentric circles, lines through the origin and parallel lines",
                           "z-axis, its dual and a tangent line at the south pole meeting both",
                           {-1.7, 1.7, -1.7, 1.7},
                           [] { return triple("3p-hep-dual", concentric(), rays(), verticals(), Chart::rotated(0.3)); }));
  e.push_back(pencil_entry("3p-hpp", "concentric circles and two orthogonal families of parallel lines",
                           "z-axis and two dual tangent lines at the south pole", {-1.7, 1.7, -1.7, 1.7}, [] {
                             return triple("3p-hpp", concentric(), verticals(), horizontals(), Chart::rotated(0.3));
                           }));
  e.push_back(pencil_entry("3p-hee-tangent",
                           "lines through (-1,0), lines through (1,0), circles with limit points (-1,0), (1,0)",
                           "two elliptic lines in the tangent plane at the south pole and the line through "
                           "the images of (-1,0), (1,0)",
                           {-1.7, 1.7, -1.7, 1.7},
                           [] { return triple("3p-hee-tangent", lines_through(-1), lines_through(1), limit_pm1_x()); }));
  e.push_back(pencil_entry("3p-eee", "three elliptic pencils with vertices among (-1,0), (1,0) and infinity",
                           "duals of the three lines joining the images of (-1,0), (1,0) and infinity",
                           {-1.7, 1.7, -1.7, 1.7},
                           [] { return triple("3p-eee", lines_through(-1), lines_through(1), through_pm1_x()); }));
  e.push_back(pencil_entry("3p-hep",
                           "circles with limit points (-1,0), (1,0), lines through (1,0), vertical lines",
                           "hyperbolic line through E, H, parabolic line at P = infinity meeting it, elliptic line "
                           "dual to PE",
                           {-1.7, 1.7, -1.7, 1.7}, [] {
                             return triple("3p-hep", limit_pm1_x(), lines_through(1), verticals(), Chart::rotated(0.3));
                           }));
  {
    Entry en = pencil_entry("3p-epp",
                            "lines through the origin, horizontal lines and circles through the origin tangent to "
                            "the direction phi",
                            "two parabolic lines at the images of 0 and infinity, elliptic line whose dual joins "
                            "the tangency points",
                            {-1.7, 1.7, -1.7, 1.7}, [] { return Web3<double>{}; });
    en.spec.params = {{"phi", 1.0, 0, pi, {pi / 2}, "0<phi<pi", {0.4, 2.0, 2.6}}};
    en.make = [](BuiltWeb& b) {
      double phi = b.params.at("phi");
      Fam par = pencil<double>("x^2+y^2=v(cos(phi) y - sin(phi) x)", {1, 0, 0, 0},
                               {0, std::sin(phi), -std::cos(phi), 0}, -4, 4);
      b.web = triple("3p-epp", rays(), horizontals(), par);
      fill_polar_lines(b);
    };
    e.push_back(en);
  }

  // conic + pencil
  e.push_back(conic_entry(
      "type01", "hyperbolic pencil x^2+y^2=v, polar conic plane missing the quadric",
      {param_c(1, 0, inf, "c>0", {0.5, 2, 3})}, "X0^2+Y0^2+4cX0Z0=0, U0=0", "X0^2+Y0^2-2cX0Z0=0, U0=0",
      "(x^2+y^2)^2-(x^2+y^2)(4cx+2)-4c^2y^2+4cx+1=0", {-1.2, 2.2, -1.6, 1.6}, {-2, 3.5, -2.5, 2.5},
      [](BuiltWeb& b, double c) {
        b.web = conic_pencil_web<double>(
            "type01", quad("x^2+y^2-4c/(c^2u^2+1)x+4c^2u/(c^2u^2+1)y=1", {1, -4 * c, 0, -1}, {0, 0, 4 * c * c, 0},
                           {c * c, 0, 0, -c * c}, -6, 6),
            concentric());
        b.envelope = [c](double x, double y) {
          double r = x * x + y * y;
          return r * r - r * (4 * c * x + 2) - 4 * c * c * y * y + 4 * c * x + 1;
        };
      }));
  e.push_back(conic_entry(
      "type02", "hyperbolic pencil x^2+y^2=v, rotation-symmetric", {param_c(1, 0, inf, "c>0", {0.5, 2, 3})},
      "X0^2+Y0^2=4Z0^2/c^2, U0=0", "X0^2+Y0^2=Z0^2/c^2, U0=0", "c^2(x^2+y^2)^2-(2c^2+4)(x^2+y^2)+c^2=0",
      {-2, 2, -2, 2}, {-3, 3, -3, 3}, [](BuiltWeb& b, double c) {
        // t = tan(u/2)
        b.web = conic_pencil_web<double>(
            "type02",
            quad("x^2+y^2+2cos(u)/c x+2sin(u)/c y=1", {c, 2, 0, -c}, {0, 0, 4, 0}, {c, -2, 0, -c}, -6, 6),
            concentric());
        const double d = 1 / c, R = std::sqrt(1 + d * d);
        b.spec.window = annulus_box(R - d, R + d);
        b.envelope = [c](double x, double y) {
          double r = x * x + y * y;
          return c * c * r * r - (2 * c * c + 4) * r + c * c;
        };
      }));
  e.push_back(conic_entry(
      "type03", "hyperbolic pencil x^2+y^2=v, polar conic plane cutting the quadric",
      {param_c(1, 0.5, inf, "c>1/2", {0.75, 2, 3})}, "x0^2+y0^2=4cx0, z0=0", "x0^2+y0^2+2cx0=0, z0=0",
      "(x^2+y^2)^2+(x^2+y^2)(4cx+2)-4c^2y^2+4cx+1=0", {-2.2, 1.2, -1.6, 1.6}, {-3.5, 2, -2.5, 2.5},
      [](BuiltWeb& b, double c) {
        b.web = conic_pencil_web<double>(
            "type03", quad("x^2+y^2+4c/(c^2u^2+1)x-4c^2u/(c^2u^2+1)y=-1", {1, 4 * c, 0, 1}, {0, 0, -4 * c * c, 0},
                           {c * c, 0, 0, c * c}, -6, 6),
            concentric());
        if (c < 1) b.spec.window = {-2.2, -0.3, 0.1, 1.1};
        b.envelope = [c](double x, double y) {
          double r = x * x + y * y;
          return r * r + r * (4 * c * x + 2) - 4 * c * c * y * y + 4 * c * x + 1;
        };
      }));
  e.push_back(conic_entry(
      "type04", "hyperbolic pencil x^2+y^2=v, rotation-symmetric, conic plane cutting the quadric",
      {param_c(0.5, 0, 1, "0<c<1", {0.3, 0.7, 0.9})}, "x0^2+y0^2=4/c^2, z0=0", "x0^2+y0^2=1/c^2, z0=0",
      "c^2(x^2+y^2)^2+(2c^2-4)(x^2+y^2)+c^2=0", {-3.5, 3.5, -3.5, 3.5}, {-4.5, 4.5, -4.5, 4.5},
      [](BuiltWeb& b, double c) {
        b.web = conic_pencil_web<double>(
            "type04",
            quad("x^2+y^2-2cos(u)/c x-2sin(u)/c y=-1", {c, -2, 0, c}, {0, 0, -4, 0}, {c, 2, 0, c}, -6, 6),
            concentric());
        const double d = 1 / c, R = std::sqrt(d * d - 1);
        b.spec.window = annulus_box(d - R, d + R);
        b.envelope = [c](double x, double y) {
          double r = x * x + y * y;
          return c * c * r * r + (2 * c * c - 4) * r + c * c;
        };
      }));
  e.push_back(conic_entry(
      "type05", "elliptic pencil y=vx, dilatation-symmetric", {param_c(2, 1, inf, "c>1", {1.5, 3, 5})},
      "y0^2+cz0^2=c, x0=0", "y0^2+cz0^2=c, x0=0", "x^2=(c-1)y^2", {-1.5, 1.5, 0.3, 2.5}, {-3, 3, -3, 3},
      [](BuiltWeb& b, double c) {
        b.web = conic_pencil_web<double>(
            "type05", quad("x^2+(y+u)^2=(1-1/c)u^2", {1, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 1 / c}, -6, 6), rays());
        b.envelope = [c](double x, double y) { return x * x - (c - 1) * y * y; };
      }));
  e.push_back(conic_entry(
      "type06", "elliptic pencil y=vx, polar conic meeting the dual line on the quadric",
      {param_c(1, 0, inf, "c>0", {0.5, 2, 3})}, "2cy0=z0^2-1, x0=0", "2cy0=z0^2-1, x0=0",
      "c^2(x^2+y^2)^2+(4cy-2c^2)(x^2+y^2)+(2y+c)^2=0", {-1.6, 1.6, -1.6, 1.6}, {-2.5, 2.5, -2.5, 2.5},
      [](BuiltWeb& b, double c) {
        b.web = conic_pencil_web<double>(
            "type06", quad("x^2+y^2+(u-1)/(cu)y+(u-1)/(u+1)=0", {0, 0, -1, 0}, {c, 0, 0, -c}, {c, 0, 1, c}, -6, 6),
            rays());
        b.envelope = [c](double x, double y) {
          double r = x * x + y * y;
          return c * c * r * r + (4 * c * y - 2 * c * c) * r + (2 * y + c) * (2 * y + c);
        };
      }));
  e.push_back(conic_entry("type07", "elliptic pencil y=vx, polar conic 2cy0z0+1=z0^2",
                          {param_c(1, 0, inf, "c>0", {0.5, 2, 3})}, "2cy0z0+1=z0^2, x0=0", "2cy0z0+1=z0^2, x0=0",
                          "", {-1.6, 1.6, -1.6, 1.6}, {-2.5, 2.5, -2.5, 2.5}, [](BuiltWeb& b, double c) {
                            b.web = conic_pencil_web<double>(
                                "type07",
                                quad("x^2+y^2-(c+u)/(cu)y+(c+u)/(c-u)=0", {0, 0, -c * c, 0}, {c * c, 0, 0, c * c},
                                     {-c, 0, 1, c}, -6, 6),
                                rays());
                          }));
  e.push_back(conic_entry(
      "type08", "parabolic pencil y=v", {}, "x0^2-z0=1, y0=0", "x0^2-z0=1, y0=0", "x^2+2y^2=2",
      {-1.3, 1.3, -0.9, 0.9}, {-2, 2, -1.5, 1.5}, [](BuiltWeb& b, double) {
        b.web = conic_pencil_web<double>(
            "type08", quad("(x-1/u)^2+y^2=(u^2-1)/u^2", {0, 0, 0, 2}, {0, -2, 0, 0}, {1, 0, 0, -1}, -6, 6),
            horizontals());
        b.envelope = [](double x, double y) { return x * x + 2 * y * y - 2; };
      }));
  e.push_back(conic_entry(
      "type09", "parabolic pencil y=v, translation-symmetric", {},
      "x0^2+(1-sqrt2)z0^2-2sqrt2 z0=1+sqrt2, y0=0", "x0^2=2z0+2, y0=0", "y=+-1", {-1.5, 1.5, -0.9, 0.9},
      {-3, 3, -1.5, 1.5}, [](BuiltWeb& b, double) {
        b.web = conic_pencil_web<double>(
            "type09", quad("(x+u)^2+y^2=1", {1, 0, 0, -1}, {0, 2, 0, 0}, {0, 0, 0, 1}, -4, 4), horizontals());
        b.envelope = [](double, double y) { return y * y - 1; };
      }));
  e.push_back(conic_entry(
      "type10", "hyperbolic pencil x^2+y^2+1=vx, polar conic plane tangent to the quadric",
      {param_c(0.5, 0, inf, "c>0, c!=1", {0.3, 2, 3}, {1})}, "x0^2+(1-c)y0^2=c, z0=-1",
      "x0^2+(1-c)y0^2=c, z0=-1", "cx^2+c/(1-c)y^2=1", {-2.5, 2.5, -2.5, 2.5}, {-3, 3, -3, 3},
      [](BuiltWeb& b, double c) {
        b.web = conic_pencil_web<double>("type10", tangent_line_family(1, 1 - c, std::sqrt(c)), limit_pm1_x());
        if (c > 1) b.spec.window = {0.05, 0.9, 1.5, 3};
        b.envelope = [c](double x, double y) { return c * x * x + c / (1 - c) * y * y - 1; };
      }));
  e.push_back(conic_entry(
      "type11", "hyperbolic pencil x^2+y^2+1=vx, polar line meeting the polar conic",
      {param_c(1, 0, inf, "c>=0", {0, 0.5, 2})}, "y0^2-cx0y0+cy0+x0=0, z0=-1", "y0^2-cx0y0+cy0+x0=0, z0=-1",
      "(cx-y)^2-(2c^2+4)x-2cy+c^2=0", {-2.5, 2.5, -2.5, 2.5}, {-3, 3, -3, 3}, [](BuiltWeb& b, double c) {
        b.web = conic_pencil_web<double>(
            "type11", quad("x0 x + y0 y = 1", {0, 1, 0, 0}, {0, c, 1, -c}, {0, 0, c, 1}, -6, 6), limit_pm1_x());
        b.envelope = [c](double x, double y) {
          return (c * x - y) * (c * x - y) - (2 * c * c + 4) * x - 2 * c * y + c * c;
        };
      }));
  // c >= 0 admits c = 0
  e.back().spec.params[0].lo = -1e-300;
  e.push_back(conic_entry(
      "type12", "hyperbolic pencil x^2+y^2=v, polar line through the tangency point of the conic plane", {},
      "x0^2+y0^2-2y0=0, z0=-1", "x0^2+y0^2-2y0=0, z0=-1", "x^2+2y=1", {-2, 2, -2, 2}, {-3, 3, -3, 3},
      [](BuiltWeb& b, double) {
        b.web = conic_pencil_web<double>(
            "type12", quad("x0 x + y0 y = 1", {0, 0, 0, -1}, {0, 2, 0, 0}, {0, 0, 2, -1}, -6, 6), concentric());
        b.envelope = [](double x, double y) { return x * x + 2 * y - 1; };
      }));
  e.push_back(conic_entry(
      "type13", "hyperbolic pencil x^2+y^2=v, tangent lines of the unit circle", {}, "x0^2+y0^2=1, z0=-1",
      "x0^2+y0^2=1, z0=-1", "x^2+y^2=1", {-2.2, 2.2, -2.2, 2.2}, {-2.5, 2.5, -2.5, 2.5}, [](BuiltWeb& b, double) {
        b.web = conic_pencil_web<double>(
            "type13", quad("x0 x + y0 y = 1", {0, 1, 0, -1}, {0, 0, 2, 0}, {0, -1, 0, -1}, -6, 6), concentric());
        b.envelope = [](double x, double y) { return x * x + y * y - 1; };
      }));
  e.push_back(conic_entry(
      "type14", "elliptic pencil with vertices (1,0), (-1,0), polar conic plane tangent to the quadric",
      {param_c(-0.5, -inf, 0, "c<0, c!=-1", {-0.25, -0.75, -2}, {-1})}, "cx0^2+(c+1)y0^2+1=0, z0=-1",
      "cx0^2+(c+1)y0^2+1=0, z0=-1", "x^2/c+y^2/(c+1)=-1", {-2.5, 2.5, -2.5, 2.5}, {-3, 3, -3, 3},
      [](BuiltWeb& b, double c) {
        b.web = conic_pencil_web<double>("type14", tangent_line_family(c, c + 1, 1 / std::sqrt(-c)),
                                         through_pm1_x());
        if (c > -1) b.spec.window = {0.05, 0.9 * std::sqrt(-c), -2, 2};
        b.envelope = [c](double x, double y) { return x * x / c + y * y / (c + 1) + 1; };
      }));
  e.push_back(conic_entry(
      "type15", "parabolic pencil x^2+y^2=2vy, tangent lines of the unit circle", {}, "x0^2+y0^2=1, z0=-1",
      "x0^2+y0^2=1, z0=-1", "x^2+y^2=1", {-2.2, 2.2, -2.2, 2.2}, {-2.5, 2.5, -2.5, 2.5}, [](BuiltWeb& b, double) {
        b.web = conic_pencil_web<double>(
            "type15", quad("x0 x + y0 y = 1", {0, 1, 0, -1}, {0, 0, 2, 0}, {0, -1, 0, -1}, -6, 6),
            pencil<double>("x^2+y^2=2vy", {1, 0, 0, 0}, {0, 0, -2, 0}, -4, 4));
        b.envelope = [](double x, double y) { return x * x + y * y - 1; };
      }));

  // symmetric orbit constructions
  using namespace generators;
  const Window chart_dil{0.05, 0.45, -1, 1};
  // angles on one side of the x-axis, where all three slopes of D4 meet
  auto dil_window = [](const Params& p) {
    const double r = p.at("rho");
    const double h = r < 1 ? std::asin(r) : 1.5;
    return Window{0.1 * h, 0.9 * h, -1, 1};
  };
  auto rho = [](double canonical, std::vector<double> extra) {
    return ParamSpec{"rho", canonical, 0, inf, {1}, "rho>0, rho!=1", std::move(extra)};
  };
  e.push_back(orbit_entry("T1", "three families of parallel lines, orbits of lines under y-translation", {},
                          {-2, 2, -2, 2}, {-2, 2, -2, 2}, [](const Params&) {
                            return triple("T1", orbit_family(Dy, line(0, 1, 0), "y=u"),
                                          orbit_family(Dy, line(1, -1, 0), "y=x+u"),
                                          orbit_family(Dy, line(1, 1, 0), "y=-x+u"));
                          }));
  e.push_back(orbit_entry("T2", "horizontal lines and the y-translates of the unit circle", {},
                          {-0.95, 0.95, -2, 2}, {-2, 2, -2.5, 2.5}, [](const Params&) {
                            return conic_pencil_web<double>("T2", orbit_family(Dy, circle_at(0, 0, 1), "x^2+(y-u)^2=1"),
                                                            orbit_family(Dy, line(0, 1, 0), "y=u"));
                          }));
  e.push_back(orbit_entry("T3", "vertical lines and y-translates of two different circles", {},
                          {-0.45, 0.95, -2, 2}, {-2, 2, -2.5, 2.5}, [](const Params&) {
                            return fields("T3",
                                          {orbit_family(Dy, circle_at(0, 0, 1), "unit circle orbit"),
                                           orbit_family(Dy, circle_at(0.5, 0, 1), "circle (x-1/2)^2+y^2=1 orbit"),
                                           pencil_of_line(Dy, "x=v")},
                                          {SlopeRef{0, Leaf::lower}, SlopeRef{1, Leaf::upper}, SlopeRef{2, Leaf::single}},
                                          Chart::rotated(0.3));
                          }));
  e.push_back(orbit_entry("T3-coinciding", "vertical lines and both branches of the y-translates of one circle", {},
                          {-0.95, 0.95, -2, 2}, {-2, 2, -2.5, 2.5}, [](const Params&) {
                            return fields("T3-coinciding",
                                          {orbit_family(Dy, circle_at(0, 0, 1), "unit circle orbit"),
                                           pencil_of_line(Dy, "x=v")},
                                          {SlopeRef{0, Leaf::lower}, SlopeRef{0, Leaf::upper}, SlopeRef{1, Leaf::single}},
                                          Chart::rotated(0.3));
                          }));
  e.push_back(orbit_entry("T3-line", "vertical lines, y-translates of the unit circle and of the line y=x", {},
                          {-0.95, 0.95, -2, 2}, {-2, 2, -2.5, 2.5}, [](const Params&) {
                            return fields("T3-line",
                                          {orbit_family(Dy, circle_at(0, 0, 1), "unit circle orbit"),
                                           orbit_family(Dy, line(1, -1, 0), "y=x+u"), pencil_of_line(Dy, "x=v")},
                                          {SlopeRef{0, Leaf::lower}, SlopeRef{1, Leaf::single}, SlopeRef{2, Leaf::single}},
                                          Chart::rotated(0.3));
                          }));
  e.push_back(orbit_entry("D1", "three families of parallel lines as dilatation orbits", {}, {-2, 2, -2, 2},
                          {-2, 2, -2, 2}, [](const Params&) {
                            return triple("D1", orbit_family(Dilatation, line(0, 1, -1), "y=u"),
                                          orbit_family(Dilatation, line(1, -2, -1), "x-2y=u"),
                                          orbit_family(Dilatation, line(1, 1, -1), "x+y=u"));
                          }));
  e.push_back(orbit_entry("D2",
                          "horizontal lines, circles tangent to the x-axis at the origin, concentric circles", {},
                          {-1.8, 1.8, -1.8, 1.8}, {-2.5, 2.5, -2.5, 2.5}, [](const Params&) {
                            return triple("D2", orbit_family(Dilatation, line(0, 1, -1), "y=u"),
                                          orbit_family(Dilatation, circle_at(0, 1, 1), "x^2+y^2=2uy"),
                                          orbit_family(Dilatation, circle_at(0, 0, 1), "x^2+y^2=u^2"),
                                          Chart::rotated(0.3));
                          }));
  e.push_back(orbit_entry("D3", "two orthogonal families of parallel lines and concentric circles", {},
                          {-1.8, 1.8, -1.8, 1.8}, {-2.5, 2.5, -2.5, 2.5}, [](const Params&) {
                            return triple("D3", orbit_family(Dilatation, line(1, 0, -1), "x=u"),
                                          orbit_family(Dilatation, line(0, 1, -1), "y=u"),
                                          orbit_family(Dilatation, circle_at(0, 0, 1), "x^2+y^2=u^2"),
                                          Chart::rotated(0.3));
                          }));
  e.push_back(orbit_entry("D4", "dilatation orbit of (x-1)^2+y^2=rho^2 and concentric circles",
                          {rho(0.5, {0.3, 0.8, 2})}, chart_dil, {-0.5, 3, -1.5, 1.5}, [](const Params& p) {
                            double r = p.at("rho");
                            return conic_pencil_web<double>(
                                "D4", orbit_family(Dilatation, circle_at(1, 0, r), "dilated circle"),
                                orbit_family(Dilatation, circle_at(0, 0, 1), "x^2+y^2=u^2"), Chart::dilatation_polar());
                          },
                          {}, dil_window));
  e.push_back(orbit_entry("D5", "dilatation orbit of (x-1)^2+y^2=rho^2 and vertical lines",
                          {rho(0.5, {0.3, 0.8, 2})}, chart_dil, {-0.5, 3, -1.5, 1.5}, [](const Params& p) {
                            double r = p.at("rho");
                            return conic_pencil_web<double>(
                                "D5", orbit_family(Dilatation, circle_at(1, 0, r), "dilated circle"),
                                orbit_family(Dilatation, line(1, 0, -1), "x=u"), Chart::dilatation_polar());
                          },
                          {}, dil_window));
  e.push_back(orbit_entry("D6", "lines through the origin and dilatation orbits of two circles", {},
                          {-1, 1, 0.05, 0.85}, {-0.5, 3, -1, 3}, [](const Params&) {
                            return fields("D6",
                                          {orbit_family(Dilatation, circle_at(1, 0, 0.8), "first circle orbit"),
                                           orbit_family(Dilatation, circle_at(std::cos(0.6), std::sin(0.6), 0.6),
                                                        "second circle orbit"),
                                           pencil_of_line(Bz, "y=vx")},
                                          {SlopeRef{0, Leaf::lower}, SlopeRef{1, Leaf::upper}, SlopeRef{2, Leaf::single}},
                                          Chart::rotation_polar());
                          }));
  e.push_back(orbit_entry("D6-coinciding", "lines through the origin and both branches of a dilatation orbit",
                          {param_c(2, 1, inf, "c>1", {1.5, 3, 5})}, {-1, 1, 1.0, 2.1}, {-3, 3, -3, 3},
                          [](const Params& p) {
                            double c = p.at("c");
                            return conic_pencil_web<double>(
                                "D6-coinciding",
                                orbit_family(Dilatation, circle_at(0, -1, std::sqrt(1 - 1 / c)), "dilated circle"),
                                pencil_of_line(Bz, "y=vx"), Chart::rotation_polar());
                          }));
  e.push_back(orbit_entry("D6-concentric", "lines through the origin, a dilatation orbit and concentric circles", {},
                          {1, 2, -0.3, 0.3}, {-0.5, 3, -1.5, 1.5}, [](const Params&) {
                            return fields("D6-concentric",
                                          {orbit_family(Dilatation, circle_at(1, 0, 0.6), "circle orbit"),
                                           orbit_family(Dilatation, circle_at(0, 0, 1), "x^2+y^2=u^2"),
                                           pencil_of_line(Bz, "y=vx")},
                                          {SlopeRef{0, Leaf::lower}, SlopeRef{1, Leaf::single}, SlopeRef{2, Leaf::single}},
                                          Chart::rotated(0.3));
                          }));
  e.push_back(orbit_entry("D6-parallel", "lines through the origin, a dilatation orbit and parallel lines", {},
                          {1, 2, -0.3, 0.3}, {-0.5, 3, -1.5, 1.5}, [](const Params&) {
                            return fields("D6-parallel",
                                          {orbit_family(Dilatation, circle_at(1, 0, 0.6), "circle orbit"),
                                           orbit_family(Dilatation, line(1, 2, -1), "x+2y=u"), pencil_of_line(Bz, "y=vx")},
                                          {SlopeRef{0, Leaf::lower}, SlopeRef{1, Leaf::single}, SlopeRef{2, Leaf::single}},
                                          Chart::rotated(0.3));
                          }));
  e.push_back(orbit_entry("D6-lines", "lines through the origin and two families of parallel lines", {},
                          {-1.8, 1.8, -1.8, 1.8}, {-2.5, 2.5, -2.5, 2.5}, [](const Params&) {
                            return triple("D6-lines", orbit_family(Dilatation, line(0, 1, -1), "y=u"),
                                          orbit_family(Dilatation, line(2, -1, -1), "2x-y=u"), pencil_of_line(Bz, "y=vx"),
                                          Chart::rotated(0.3));
                          }));
  e.push_back(orbit_entry("R1", "rotation orbit of (x-a)^2+y^2=1 and lines through the origin",
                          {{"a", 2, 0, inf, {1}, "a>0, a!=1", {0.5, 1.5, 3}}}, {0.05, 0.45, -1.5, 1.5},
                          {-3.5, 3.5, -3.5, 3.5}, [](const Params& p) {
                            double a = p.at("a");
                            return conic_pencil_web<double>("R1", orbit_family(Rz, circle_at(a, 0, 1), "rotated circle"),
                                                            orbit_family(Rz, line(0, 1, 0), "rotated line"),
                                                            Chart::rotation_polar());
                          },
                          {}, [](const Params& p) {
                            // log radius between the envelope circles, above the radius sqrt(a^2-1)
                            // where the tangents from the origin make all three slopes meet
                            const double a = p.at("a"), hi = std::log(a + 1);
                            const double lo = a > 1 ? 0.5 * std::log(a * a - 1) : std::log(1 - a);
                            const double w = hi - lo;
                            return Window{lo + 0.1 * w, hi - 0.1 * w, -1.5, 1.5};
                          }));
  e.push_back(orbit_entry("R2", "concentric circles and rotation orbits of two circles", {}, {-3, 3, -0.45, 0.35},
                          {-2.5, 2.5, -2.5, 2.5}, [](const Params&) {
                            return fields("R2",
                                          {orbit_family(Rz, circle_at(1, 0, 0.5), "first circle orbit"),
                                           orbit_family(Rz, circle_at(0, 1.2, 0.6), "second circle orbit"),
                                           pencil_of_line(Rz, "x^2+y^2=v")},
                                          {SlopeRef{0, Leaf::lower}, SlopeRef{1, Leaf::upper}, SlopeRef{2, Leaf::single}},
                                          Chart::dilatation_polar());
                          }));
  e.push_back(orbit_entry("R2-coinciding", "concentric circles and both branches of a rotation orbit",
                          {param_c(1, 0, inf, "c>0", {0.5, 2, 3})}, {-3, 3, -0.8, 0.8}, {-3, 3, -3, 3},
                          [](const Params& p) {
                            double c = p.at("c");
                            return conic_pencil_web<double>(
                                "R2-coinciding",
                                orbit_family(Rz, circle_at(-1 / c, 0, std::sqrt(1 + 1 / (c * c))), "rotated circle"),
                                pencil_of_line(Rz, "x^2+y^2=v"), Chart::dilatation_polar());
                          },
                          {}, [](const Params& p) {
                            // radii of the orbit span (1/m, m)
                            const double c = p.at("c"), m = std::sqrt(1 + 1 / (c * c)) + 1 / c;
                            const double h = 0.9 * std::log(m);
                            return Window{-3, 3, -h, h};
                          }));
  e.push_back(orbit_entry("R2-line", "concentric circles, a rotation orbit of a circle and of the line x=1", {},
                          {-3, 3, 0.03, 0.38}, {-2.5, 2.5, -2.5, 2.5}, [](const Params&) {
                            return fields("R2-line",
                                          {orbit_family(Rz, circle_at(1, 0, 0.5), "circle orbit"),
                                           orbit_family(Rz, line(1, 0, -1), "tangent lines of the unit circle"),
                                           pencil_of_line(Rz, "x^2+y^2=v")},
                                          {SlopeRef{0, Leaf::lower}, SlopeRef{1, Leaf::upper}, SlopeRef{2, Leaf::single}},
                                          Chart::dilatation_polar());
                          }));

  // autodual subwebs
  const std::vector<std::string> a6n{"R_x", "R_y", "R_z", "B_x", "B_y", "B_z"};
  const std::vector<std::string> a4n{"R_z", "B_z", "B_x-R_y", "R_x+B_y"};
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) e.push_back(subweb_entry("a6", a6_lines(), {i, j, k}, a6n));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) e.push_back(subweb_entry("a4", a4_lines(), {i, j, k}, a4n));

  // non-hexagonal controls with real slopes
  {
    Entry en = conic_entry("control-type05-shifted", "Type 5 circles with the line pencil through (0.1, 0)",
                           {param_c(2, 1, inf, "c>1", {})}, "", "", "", {-1.5, 1.5, 0.3, 2.5}, {-3, 3, -3, 3},
                           [](BuiltWeb& b, double c) {
                             b.web = conic_pencil_web<double>(
                                 "control-type05-shifted",
                                 quad("x^2+(y+u)^2=(1-1/c)u^2", {1, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 1 / c}, -6, 6),
                                 lines_through(0.1));
                           });
    en.spec.recipe = Recipe::control;
    en.spec.expected_hexagonal = false;
    e.push_back(en);
  }
  {
    Entry en = pencil_entry("control-3p-hhh-tilted", "3p-hhh with the z-axis tilted by 0.1 rad", "",
                            {-1.7, 1.7, -1.7, 1.7}, [] {
                              TetraPoint c{0, 0, 0, 1}, d{0, std::sin(0.1), std::cos(0.1), 0};
                              return triple("control-3p-hhh-tilted", limit_pm1_x(), limit_pm1_y(),
                                            pencil_of_line(line_through(c, d), "tilted pencil", 0.05, 6));
                            });
    en.spec.recipe = Recipe::control;
    en.spec.expected_hexagonal = false;
    e.push_back(en);
  }
  return e;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = make_entries();
  return e;
}

const Entry& entry(const std::string& id) {
  for (const auto& en : entries())
    if (en.spec.id == id) return en;
  throw UnknownIdError("unknown catalog id: " + id);
}

}  // namespace

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& en : entries()) v.push_back(en.spec.id);
    return v;
  }();
  return ids;
}

const WebSpec& spec_of(const std::string& id) { return entry(id).spec; }

Params resolve_params(const WebSpec& spec, const Params& given) {
  Params out;
  for (const auto& [k, v] : given) {
    auto it = std::find_if(spec.params.begin(), spec.params.end(), [&](const ParamSpec& p) { return p.name == k; });
    if (it == spec.params.end()) throw ParamRangeError(spec.id + " has no parameter " + k);
    if (!it->admits(v)) throw ParamRangeError(spec.id + ": " + k + " violates " + it->range_text);
    out[k] = v;
  }
  for (const auto& p : spec.params)
    if (!out.count(p.name)) out[p.name] = p.canonical;
  return out;
}

BuiltWeb build(const std::string& id, const Params& params) {
  const Entry& en = entry(id);
  BuiltWeb b;
  b.spec = en.spec;
  b.params = resolve_params(en.spec, params);
  en.make(b);
  b.web.name = id;
  return b;
}

CircleFamily<double> pencil_of_line(const PluckerLine& l, std::string name, double pmin, double pmax) {
  auto pts = points_on_line(l);
  C4 c0 = coeffs_of_polar(pts[0].coords()), c1 = coeffs_of_polar(pts[1].coords());
  return pencil<double>(std::move(name), c0, c1, pmin, pmax);
}

PluckerLine polar_line_of(const CircleFamily<double>& pencil) {
  if (pencil.degree() != 1) throw DegenerateError("family is not a pencil");
  auto p = polar_coords(pencil.by_power[0]), q = polar_coords(pencil.by_power[1]);
  return line_through({p[0], p[1], p[2], p[3]}, {q[0], q[1], q[2], q[3]});
}

std::vector<Subweb> enumerate_subwebs(const std::string& id) {
  std::string base;
  if (id == "A6" || id == "a6")
    base = "a6";
  else if (id == "A4" || id == "a4")
    base = "a4";
  else
    throw UnknownIdError("unknown autodual web: " + id);
  const int n = base == "a6" ? 6 : 4;
  const auto& lines = base == "a6" ? a6_lines() : a4_lines();
  std::vector<Subweb> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Subweb s;
        s.lines = {i, j, k};
        s.web = build(sub_id(base, s.lines));
        s.coplanar = coplanar_lines({lines[i], lines[j], lines[k]});
        out.push_back(std::move(s));
      }
  return out;
}

Control control(const std::string& kind, double r) {
  using cd = std::complex<double>;
  using CF = CircleFamily<cd>;
  Control c;
  c.pencil = kind;
  c.r = r;
  c.id = "control-" + kind;
  if (kind == "hyperbolic") {
    if (std::abs(std::abs(r) - 1) < 1e-12) throw DegenerateParamError("r = +-1 makes the conic degenerate");
    cd xq = r + std::sqrt(cd(r * r - 1)), lt = 2.0 * (xq - r);
    CF conic{"conic family", {{0, xq - lt, 0, -1}, {0, 0, -lt, 0}, {0, xq * (1 - r * r), 0, -(1 - r * r)}}, -6, 6};
    CF pen = pencil<cd>("x^2+y^2+1=vx", {1, 0, 0, 1}, {0, -1, 0, 0}, -8, 8);
    c.web = conic_pencil_web<cd>(c.id, conic, pen);
    c.K_B = [r](double x, double y) {
      double r2 = r * r - 1;
      double num = 4 * r2 * r2 * (x * x - 1) * (r * x * x + r * y * y + (r * r - 3) * x + r) *
                   std::pow(x * x + y * y - 2 * r * x + 1, 4);
      double den = std::pow(x, 4) * std::pow(y, 3) * std::pow(x * x + 1 - 2 * r * x, 6);
      return num / den;
    };
    c.generic_point = {0.3, 0.5};
    c.window = {0.35, 0.95, 0.3, 0.9};
  } else if (kind == "elliptic") {
    const double s = r * r + 1;
    CF conic{"conic family", {{0, -s, -r * s, -s}, {0, 0, -2 * s, 0}, {0, 1, -r, -1}}, -6, 6};
    CF pen = pencil<cd>("x^2+y^2-1+by=0", {1, 0, 0, -1}, {0, 0, 1, 0}, -6, 6);
    c.web = conic_pencil_web<cd>(c.id, conic, pen);
    c.K_B = [r](double x, double y) {
      double s2 = (r * r + 1) * (r * r + 1);
      double num = -64 * s2 * x * (y * y + 1) * (r * x * x + r * y * y + (3 + r * r) * y - r) *
                   std::pow(2 * r * y - x * x - y * y + 1, 4);
      double den = std::pow(x * x - y * y - 1, 4) * std::pow(r * r - x * x + 1, 6);
      return num / den;
    };
    c.generic_point = {0.3, 0.5};
    c.window = {0.2, 0.9, 0.2, 0.9};
  } else if (kind == "parabolic") {
    if (r == 0) throw DegenerateParamError("r = 0 makes the conic non-smooth");
    CF conic{"conic family", {{0, 0, 1 / r, -1}, {0, 1, 0, 0}, {0, 0, -r / 4, 0}}, -6, 6};
    CF pen = pencil<cd>("x^2+y^2=ty", {1, 0, 0, 0}, {0, 0, -1, 0}, -4, 4);
    c.web = conic_pencil_web<cd>(c.id, conic, pen);
    c.K_B = [r](double x, double y) {
      double num = -4096 * std::pow(r, 5) * x * y * y * (r * y + 2 * x * x + 2 * y * y) *
                   std::pow(r * y - x * x - y * y, 4);
      double den = std::pow(x * x - y * y, 4) * std::pow(r * r - 4 * x * x, 6);
      return num / den;
    };
    c.generic_point = {0.3, 0.5};
    c.window = {0.1, 0.9, 0.1, 0.9};
  } else {
    throw UnknownIdError("unknown control pencil: " + kind);
  }
  return c;
}

std::vector<Control> controls(double r) { return {control("hyperbolic", r), control("elliptic", r), control("parabolic", r)}; }

std::vector<PlanarPoint> halton_points(const Window& w, int n, int skip) {
  if (w.empty()) throw EmptyWindowError("empty sampling window");
  auto radical = [](int i, int base) {
    double f = 1, r = 0;
    while (i > 0) {
      f /= base;
      r += f * (i % base);
      i /= base;
    }
    return r;
  };
  std::vector<PlanarPoint> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back({w.xmin + (w.xmax - w.xmin) * radical(i + skip, 2), w.ymin + (w.ymax - w.ymin) * radical(i + skip, 3)});
  }
  return out;
}

std::vector<PlanarPoint> grid_points(const Window& w, int n) {
  if (w.empty()) throw EmptyWindowError("empty sampling window");
  std::vector<PlanarPoint> out;
  out.reserve(n * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      out.push_back({w.xmin + (w.xmax - w.xmin) * (i + 0.5) / n, w.ymin + (w.ymax - w.ymin) * (j + 0.5) / n});
  return out;
}

std::string_view sampling_name(Sampling s) { return s == Sampling::regular ? "regular" : "halton"; }

SweepStats sweep(const Web3<double>& web, const Window& w, int grid, Sampling sampling) {
  SweepStats st;
  double sk = 0, se = 0, sa = 0;
  const auto pts = sampling == Sampling::regular ? grid_points(w, grid) : halton_points(w, grid * grid);
  for (const auto& p : pts) {
    ++st.tested;
    try {
      auto rep = evaluate(web, p.x, p.y);
      st.max_K = std::max(st.max_K, rep.connection.K_normalized);
      st.max_explicit = std::max(st.max_explicit, rep.explicit_form.normalized);
      st.max_abr = std::max(st.max_abr, rep.abr_form.normalized);
      st.max_defect = std::max(st.max_defect, rep.connection.defect);
      sk += rep.connection.K_normalized;
      se += rep.explicit_form.normalized;
      sa += rep.abr_form.normalized;
    } catch (const DomainError&) {
      ++st.skipped;
    }
  }
  const int ok = st.tested - st.skipped;
  if (ok > 0) {
    st.mean_K = sk / ok;
    st.mean_explicit = se / ok;
    st.mean_abr = sa / ok;
  }
  return st;
}

}  // namespace circweb
