#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circweb/moebius.hpp"
#include "circweb/webs.hpp"

namespace circweb {

using Params = std::map<std::string, double>;

struct ParamSpec {
  std::string name;
  double canonical = 0;
  double lo = -1e300, hi = 1e300;  // open interval
  std::vector<double> excluded;
  std::string range_text;
  std::vector<double> extra;  // further values exercised by sweeps

  bool admits(double v) const;
};

enum class Recipe { pencil_triple, conic_pencil, symmetric_orbit, subweb, control };
std::string_view recipe_name(Recipe r);

struct Window {
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;

  bool empty() const { return !(xmax > xmin && ymax > ymin); }
};

struct WebSpec {
  std::string id;
  std::string description;
  Recipe recipe = Recipe::conic_pencil;
  std::vector<ParamSpec> params;
  bool expected_hexagonal = true;
  // polar curve as stated for the construction, and recomputed from the circle families
  std::string polar_reference;
  std::string polar_recomputed;
  std::string envelope_text;
  Window window;         // sampling window in chart coordinates
  Window render_window;  // plane window for figures
};

struct BuiltWeb {
  WebSpec spec;
  Params params;
  Web3<double> web;
  // polar lines of the pencils, in family order (pencil entries only)
  std::vector<PluckerLine> polar_lines;
  // zero set of the envelope, if one is known
  std::function<double(double, double)> envelope;
};

const std::vector<std::string>& catalog_ids();
const WebSpec& spec_of(const std::string& id);
// Fills defaults for missing params and validates the rest.
Params resolve_params(const WebSpec& spec, const Params& given);
BuiltWeb build(const std::string& id, const Params& params = {});

// Pencil of circles whose polar points fill the line.
CircleFamily<double> pencil_of_line(const PluckerLine& l, std::string name, double pmin = -3, double pmax = 3);
PluckerLine polar_line_of(const CircleFamily<double>& pencil);

struct Subweb {
  BuiltWeb web;
  std::array<int, 3> lines{};
  bool coplanar = false;
};

std::vector<Subweb> enumerate_subwebs(const std::string& id);

struct Control {
  std::string id;
  std::string pencil;  // hyperbolic, elliptic or parabolic
  double r = 0;
  Web3<std::complex<double>> web;
  std::function<double(double, double)> K_B;
  PlanarPoint generic_point;
  Window window;
};

Control control(const std::string& pencil, double r);
std::vector<Control> controls(double r);

// Low-discrepancy samples of a window (Halton, bases 2 and 3).
std::vector<PlanarPoint> halton_points(const Window& w, int n, int skip = 1);
// Centres of an n x n grid of cells.
std::vector<PlanarPoint> grid_points(const Window& w, int n);

enum class Sampling { regular, halton };
std::string_view sampling_name(Sampling s);

struct SweepStats {
  int tested = 0, skipped = 0;
  double max_K = 0, max_explicit = 0, max_abr = 0, max_defect = 0;
  double mean_K = 0, mean_explicit = 0, mean_abr = 0;

  double max_normalized() const { return std::max({max_K, max_explicit, max_abr}); }
  double skipped_fraction() const { return tested ? double(skipped) / tested : 1.0; }
  bool pass(double tol) const {
    return tested > skipped && max_normalized() < tol && skipped_fraction() < 0.5;
  }
};

SweepStats sweep(const Web3<double>& web, const Window& w, int grid, Sampling sampling = Sampling::regular);

}  // namespace circweb
