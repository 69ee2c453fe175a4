#include "circweb/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "circweb/errors.hpp"

namespace circweb {

namespace {

std::string num(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool clip_line(const CircleEq& c, const Window& w, LeafShape& out) {
  // points p0 + t d with p0 the foot of the normal from the origin
  const double px = -c.gamma * c.alpha, py = -c.gamma * c.beta;
  const double dx = -c.beta, dy = c.alpha;
  double t0 = -1e300, t1 = 1e300;
  auto slab = [&](double p, double d, double lo, double hi) {
    if (d == 0) return p >= lo && p <= hi;
    double a = (lo - p) / d, b = (hi - p) / d;
    if (a > b) std::swap(a, b);
    t0 = std::max(t0, a);
    t1 = std::min(t1, b);
    return t0 < t1;
  };
  if (!slab(px, dx, w.xmin, w.xmax) || !slab(py, dy, w.ymin, w.ymax)) return false;
  out.kind = LeafShape::Kind::line;
  out.x1 = px + t0 * dx;
  out.y1 = py + t0 * dy;
  out.x2 = px + t1 * dx;
  out.y2 = py + t1 * dy;
  return true;
}

bool circle_meets(double cx, double cy, double r, const Window& w) {
  const double nx = std::clamp(cx, w.xmin, w.xmax), ny = std::clamp(cy, w.ymin, w.ymax);
  if (std::hypot(nx - cx, ny - cy) > r) return false;
  const double fx = std::max(std::abs(w.xmin - cx), std::abs(w.xmax - cx));
  const double fy = std::max(std::abs(w.ymin - cy), std::abs(w.ymax - cy));
  return std::hypot(fx, fy) >= r;
}

std::vector<LeafShape> family_leaves(const CircleFamily<double>& fam, const Window& w, int count) {
  std::vector<LeafShape> out;
  for (int k = 0; k < count; ++k) {
    const double u = fam.pmin + (fam.pmax - fam.pmin) * k / (count - 1);
    const auto co = fam.at(u);
    CircleEq c;
    try {
      c = CircleEq::normalized(co[0], co[1], co[2], co[3]);
    } catch (const DegenerateError&) {
      continue;
    }
    LeafShape s;
    s.u = u;
    if (c.eps == 0) {
      if (!clip_line(c, w, s)) continue;
    } else {
      const double r2 = c.radius_squared();
      if (!(r2 > 0)) continue;
      s.cx = -0.5 * c.alpha;
      s.cy = -0.5 * c.beta;
      s.r = std::sqrt(r2);
      if (!circle_meets(s.cx, s.cy, s.r, w)) continue;
    }
    out.push_back(s);
  }
  return out;
}

// Marching squares on an n x n node grid.
std::vector<std::array<double, 4>> contour(const std::function<double(double, double)>& f, const Window& w, int n) {
  std::vector<double> v((n + 1) * (n + 1));
  auto X = [&](int i) { return w.xmin + (w.xmax - w.xmin) * i / n; };
  auto Y = [&](int j) { return w.ymin + (w.ymax - w.ymin) * j / n; };
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) v[j * (n + 1) + i] = f(X(i), Y(j));
  std::vector<std::array<double, 4>> segs;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x0 = X(i), x1 = X(i + 1), y0 = Y(j), y1 = Y(j + 1);
      const double c[4] = {v[j * (n + 1) + i], v[j * (n + 1) + i + 1], v[(j + 1) * (n + 1) + i + 1],
                           v[(j + 1) * (n + 1) + i]};
      const double px[4] = {x0, x1, x1, x0}, py[4] = {y0, y0, y1, y1};
      std::vector<std::array<double, 2>> hits;
      for (int e = 0; e < 4; ++e) {
        const double a = c[e], b = c[(e + 1) % 4];
        if (!std::isfinite(a) || !std::isfinite(b)) continue;
        if ((a < 0) == (b < 0)) continue;
        const double t = a / (a - b);
        const int q = (e + 1) % 4;
        hits.push_back({px[e] + t * (px[q] - px[e]), py[e] + t * (py[q] - py[e])});
      }
      if (hits.size() == 2) {
        segs.push_back({hits[0][0], hits[0][1], hits[1][0], hits[1][1]});
      } else if (hits.size() == 4) {
        const double mid = 0.25 * (c[0] + c[1] + c[2] + c[3]);
        const bool pair01 = (mid < 0) != (c[0] < 0);
        if (pair01) {
          segs.push_back({hits[0][0], hits[0][1], hits[1][0], hits[1][1]});
          segs.push_back({hits[2][0], hits[2][1], hits[3][0], hits[3][1]});
        } else {
          segs.push_back({hits[0][0], hits[0][1], hits[3][0], hits[3][1]});
          segs.push_back({hits[1][0], hits[1][1], hits[2][0], hits[2][1]});
        }
      }
    }
  }
  return segs;
}

}  // namespace

Figure layout_web(const BuiltWeb& web, const RenderConfig& cfg) {
  const Window w = cfg.window ? *cfg.window : web.spec.render_window;
  if (w.empty()) throw EmptyWindowError("render window is empty");
  if (cfg.leaves < 2 || cfg.samples_per_leaf < 2) throw Error("leaf and sample counts must be at least 2");
  if (cfg.width <= 0 || cfg.height <= 0) throw Error("output size must be positive");
  Figure fig;
  fig.id = web.spec.id;
  fig.window = w;
  fig.width = cfg.width;
  fig.height = cfg.height;
  const double unit = std::max((w.xmax - w.xmin) / cfg.width, (w.ymax - w.ymin) / cfg.height);
  fig.stroke = cfg.stroke_px * unit;
  fig.envelope_stroke = cfg.envelope_stroke_px * unit;
  fig.envelope_color = cfg.envelope_color;
  for (std::size_t k = 0; k < web.web.families.size(); ++k) {
    const auto& fam = web.web.families[k];
    FamilyLayer layer;
    layer.name = fam.name;
    layer.color = cfg.colors.empty() ? "#000000" : cfg.colors[k % cfg.colors.size()];
    layer.leaves = family_leaves(fam, w, cfg.leaves);
    fig.families.push_back(std::move(layer));
  }
  if (cfg.envelope && web.envelope) fig.envelope = contour(web.envelope, w, 4 * cfg.samples_per_leaf);
  return fig;
}

std::string to_svg(const Figure& fig) {
  const Window& w = fig.window;
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(fig.width) +
       "\" height=\"" + std::to_string(fig.height) + "\" viewBox=\"" + num(w.xmin) + " " + num(-w.ymax) + " " +
       num(w.xmax - w.xmin) + " " + num(w.ymax - w.ymin) + "\">\n";
  s += "<title>" + fig.id + "</title>\n";
  s += "<defs><clipPath id=\"window\"><rect x=\"" + num(w.xmin) + "\" y=\"" + num(w.ymin) + "\" width=\"" +
       num(w.xmax - w.xmin) + "\" height=\"" + num(w.ymax - w.ymin) + "\"/></clipPath></defs>\n";
  // model coordinates, y up
  s += "<g transform=\"scale(1,-1)\" clip-path=\"url(#window)\" fill=\"none\">\n";
  for (std::size_t k = 0; k < fig.families.size(); ++k) {
    const auto& f = fig.families[k];
    s += "<g id=\"family-" + std::to_string(k) + "\" class=\"family\" stroke=\"" + f.color + "\" stroke-width=\"" +
         num(fig.stroke) + "\">\n";
    for (const auto& l : f.leaves) {
      if (l.kind == LeafShape::Kind::circle) {
        s += "<circle cx=\"" + num(l.cx) + "\" cy=\"" + num(l.cy) + "\" r=\"" + num(l.r) + "\"/>\n";
      } else {
        s += "<line x1=\"" + num(l.x1) + "\" y1=\"" + num(l.y1) + "\" x2=\"" + num(l.x2) + "\" y2=\"" + num(l.y2) +
             "\"/>\n";
      }
    }
    s += "</g>\n";
  }
  if (!fig.envelope.empty()) {
    s += "<path id=\"envelope\" stroke=\"" + fig.envelope_color + "\" stroke-width=\"" + num(fig.envelope_stroke) +
         "\" d=\"";
    for (const auto& g : fig.envelope)
      s += "M" + num(g[0]) + " " + num(g[1]) + "L" + num(g[2]) + " " + num(g[3]);
    s += "\"/>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

std::string render_web(const BuiltWeb& web, const RenderConfig& cfg) { return to_svg(layout_web(web, cfg)); }

std::string render_web(const WebSpec& spec, const RenderConfig& cfg) { return render_web(build(spec.id), cfg); }

}  // namespace circweb
