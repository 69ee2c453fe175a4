#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "circweb/catalog.hpp"

namespace circweb {

struct RenderConfig {
  std::optional<Window> window;  // defaults to the entry's render window
  int leaves = 24;               // per family
  int samples_per_leaf = 64;     // envelope contour resolution is 4x this
  std::vector<std::string> colors = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};
  double stroke_px = 1.0;
  std::string envelope_color = "#000000";
  double envelope_stroke_px = 2.0;
  bool envelope = true;
  int width = 600, height = 600;
};

struct LeafShape {
  enum class Kind { circle, line };
  Kind kind = Kind::circle;
  double u = 0;
  double cx = 0, cy = 0, r = 0;          // circle
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;  // segment of a line leaf, clipped to the window
};

struct FamilyLayer {
  std::string name;
  std::string color;
  std::vector<LeafShape> leaves;
};

struct Figure {
  std::string id;
  Window window;
  int width = 600, height = 600;
  double stroke = 0, envelope_stroke = 0;
  std::string envelope_color;
  std::vector<FamilyLayer> families;
  std::vector<std::array<double, 4>> envelope;  // segments x1 y1 x2 y2
};

Figure layout_web(const BuiltWeb& web, const RenderConfig& cfg = {});
std::string to_svg(const Figure& fig);

std::string render_web(const BuiltWeb& web, const RenderConfig& cfg = {});
std::string render_web(const WebSpec& spec, const RenderConfig& cfg = {});

}  // namespace circweb
