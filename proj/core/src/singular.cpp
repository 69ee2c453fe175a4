#include "circweb/singular.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "circweb/errors.hpp"

namespace circweb {

namespace {

using V4 = Eigen::Vector4d;

V4 vec(const TetraPoint& p) { return {p.X, p.Y, p.Z, p.U}; }
TetraPoint point(const V4& v) { return {v[0], v[1], v[2], v[3]}; }

double bf(const V4& x, const V4& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] - x[3] * y[3]; }

// unit vector, largest coordinate positive
V4 canonical(V4 v) {
  v.normalize();
  Eigen::Index k;
  v.cwiseAbs().maxCoeff(&k);
  return v[k] < 0 ? V4(-v) : v;
}

double norm6(const PluckerLine& l) {
  double s = 0;
  for (double e : l.coords()) s += e * e;
  return std::sqrt(s);
}

std::array<V4, 2> basis(const PluckerLine& l) {
  auto p = points_on_line(l);
  return {vec(p[0]), vec(p[1])};
}

bool is_dual_pair(const PluckerLine& l, const PluckerLine& m) { return projectively_equal(m, dual_line(l), 1e-10); }

bool meet(const PluckerLine& l, const PluckerLine& m) {
  return std::abs(pairing(l, m)) <= 1e-10 * norm6(l) * norm6(m);
}

void add_sample(TangencyLocus& out, const V4& x, const PluckerLine& bis, const PluckerLine& L1, const PluckerLine& L2) {
  const V4 u = canonical(x);
  out.samples.push_back({point(u), bis});
  out.max_quadric_residual = std::max(out.max_quadric_residual, std::abs(bf(u, u)));
  const double nb = norm6(bis);
  out.max_bisecant_pairing =
      std::max({out.max_bisecant_pairing, std::abs(pairing(bis, L1)) / (nb * norm6(L1)),
                std::abs(pairing(bis, L2)) / (nb * norm6(L2))});
}

// Orthonormal basis of the 3-space n . X = 0.
Eigen::Matrix<double, 4, 3> plane_basis(const V4& n) {
  Eigen::JacobiSVD<Eigen::Matrix<double, 1, 4>> svd(n.transpose(), Eigen::ComputeFullV);
  return svd.matrixV().rightCols<3>();
}

// Samples of the conic cut by the plane, with tangent directions; empty if the plane
// misses the quadric or touches it.
std::vector<std::pair<V4, V4>> section_circle(const V4& n, int count) {
  const auto W = plane_basis(n.normalized());
  const Eigen::Vector4d diag(1, 1, 1, -1);
  const Eigen::Matrix3d Bp = W.transpose() * diag.asDiagonal() * W;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(Bp);
  const auto& lam = es.eigenvalues();  // ascending
  const double sc = lam.cwiseAbs().maxCoeff();
  std::vector<std::pair<V4, V4>> out;
  if (!(lam[0] < -1e-12 * sc && lam[1] > 1e-12 * sc)) return out;
  const V4 a = W * es.eigenvectors().col(1) / std::sqrt(lam[1]);
  const V4 b = W * es.eigenvectors().col(2) / std::sqrt(lam[2]);
  const V4 c = W * es.eigenvectors().col(0) / std::sqrt(-lam[0]);
  for (int k = 0; k < count; ++k) {
    const double th = 2 * std::numbers::pi * k / count;
    out.push_back({std::cos(th) * a + std::sin(th) * b + c, -std::sin(th) * a + std::cos(th) * b});
  }
  return out;
}

V4 null_vector(const Eigen::Matrix4d& m) {
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().col(3);
}

struct Fit {
  V4 n;
  double defect;
};

Fit fit_plane(const std::vector<V4>& pts, const std::vector<int>& idx) {
  Eigen::MatrixXd A(idx.size(), 4);
  for (std::size_t r = 0; r < idx.size(); ++r) A.row(r) = pts[idx[r]].transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  V4 n = svd.matrixV().col(3);
  double d = 0;
  for (int i : idx) d = std::max(d, std::abs(n.dot(pts[i])));
  return {n, d};
}

LocusComponent circle_component(std::vector<int> idx, const V4& n, double defect, bool trivial) {
  LocusComponent c;
  c.kind = LocusComponent::Kind::circle;
  c.samples = std::move(idx);
  const V4 u = canonical(n);
  c.plane = {u[0], u[1], u[2], u[3]};
  c.pole = pole_of(c.plane);
  c.circularity_defect = defect;
  c.trivial = trivial;
  return c;
}

// Greedy extraction of planar subsets from random triples, then the rest.
constexpr double kPointTol = 1e-6;

void split_components(TangencyLocus& out) {
  std::vector<V4> pts;
  for (const auto& s : out.samples) pts.push_back(vec(s.point));
  std::vector<int> rest(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) rest[i] = static_cast<int>(i);
  auto same = [&](int a, int b) {
    return std::min((pts[a] - pts[b]).norm(), (pts[a] + pts[b]).norm()) < kPointTol;
  };
  // clusters of repeated tangency points; a plane fitted through them is arbitrary
  for (std::size_t i = 0; i < rest.size(); ++i) {
    std::vector<int> in, left;
    for (int r : rest) (same(rest[i], r) ? in : left).push_back(r);
    if (in.size() < 6) continue;
    LocusComponent c;
    c.kind = LocusComponent::Kind::point;
    c.samples = in;
    c.pole = point(pts[in[0]]);
    out.components.push_back(c);
    rest = std::move(left);
    i = static_cast<std::size_t>(-1);
  }
  std::mt19937 rng(20240917);
  while (rest.size() >= 6) {
    std::uniform_int_distribution<std::size_t> pick(0, rest.size() - 1);
    std::vector<int> best;
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
      if (i == j || j == k || i == k) continue;
      Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
      m.row(0) = pts[rest[i]].transpose();
      m.row(1) = pts[rest[j]].transpose();
      m.row(2) = pts[rest[k]].transpose();
      Eigen::JacobiSVD<Eigen::Matrix4d> svd(m, Eigen::ComputeFullV);
      if (svd.singularValues()[2] < 1e-6 * svd.singularValues()[0]) continue;
      const V4 n = svd.matrixV().col(3);
      std::vector<int> in;
      for (int r : rest)
        if (std::abs(n.dot(pts[r])) < kPlaneTol) in.push_back(r);
      if (in.size() > best.size()) best = std::move(in);
    }
    if (best.size() < std::max<std::size_t>(6, rest.size() / 10)) break;
    Fit f = fit_plane(pts, best);
    std::vector<int> in, left;
    for (int r : rest) (std::abs(f.n.dot(pts[r])) < kPlaneTol ? in : left).push_back(r);
    if (in.size() < 6) break;
    f = fit_plane(pts, in);
    out.components.push_back(circle_component(in, f.n, f.defect, false));
    rest = std::move(left);
  }
  if (rest.empty()) return;
  LocusComponent c;
  c.samples = rest;
  if (std::all_of(rest.begin(), rest.end(), [&](int r) { return same(rest[0], r); })) {
    c.kind = LocusComponent::Kind::point;
    c.pole = point(pts[rest[0]]);
  } else {
    c.kind = LocusComponent::Kind::curve;
    c.circularity_defect = rest.size() >= 4 ? fit_plane(pts, rest).defect : 0;
  }
  out.components.push_back(c);
}

void intersecting_locus(TangencyLocus& out, const PluckerLine& L1, const PluckerLine& L2, int n) {
  const auto e = basis(L1), f = basis(L2);
  Eigen::Matrix4d m;
  m << e[0], e[1], -f[0], -f[1];
  const V4 k = null_vector(m);
  const V4 x = k[0] * e[0] + k[1] * e[1];
  out.intersecting = true;
  out.intersection = point(canonical(x));
  Eigen::Matrix4d span;
  span << e[0], e[1], f[0], f[1];
  const V4 plane = null_vector(span.transpose());
  auto take = [&](const std::vector<std::pair<V4, V4>>& s, std::optional<V4> apex, const V4& nrm, bool trivial) {
    std::vector<int> idx;
    for (const auto& [p, d] : s) {
      idx.push_back(static_cast<int>(out.samples.size()));
      add_sample(out, p, apex ? line_through(point(*apex), point(p)) : line_through(point(p), point(d)), L1, L2);
    }
    if (idx.empty()) return;
    std::vector<V4> pts;
    for (const auto& smp : out.samples) pts.push_back(vec(smp.point));
    const double defect = fit_plane(pts, idx).defect;
    out.components.push_back(circle_component(idx, nrm, defect, trivial));
  };
  take(section_circle(plane, n), std::nullopt, plane, false);
  const V4 xn = x.normalized();
  if (bf(xn, xn) > 1e-12) {
    const V4 polar(xn[0], xn[1], xn[2], -xn[3]);
    take(section_circle(polar, n), xn, polar, true);
  }
}

void skew_locus(TangencyLocus& out, const PluckerLine& L1, const PluckerLine& L2, int n) {
  const auto e = basis(L1), f = basis(L2);
  Eigen::Matrix2d q;
  q << bf(f[0], f[0]), bf(f[0], f[1]), bf(f[1], f[0]), bf(f[1], f[1]);
  for (int k = 0; k < n; ++k) {
    const double sg = std::numbers::pi * k / n;
    const V4 p1 = std::cos(sg) * e[0] + std::sin(sg) * e[1];
    const Eigen::Vector2d b(bf(p1, f[0]), bf(p1, f[1]));
    const Eigen::Matrix2d M = b * b.transpose() - bf(p1, p1) * q;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(M);
    const double m0 = es.eigenvalues()[0], m1 = es.eigenvalues()[1];
    const double tol = 1e-12 * std::max({std::abs(m0), std::abs(m1), b.squaredNorm(), q.cwiseAbs().maxCoeff()});
    std::vector<Eigen::Vector2d> ws;
    if (m0 < -tol && m1 > tol) {
      const Eigen::Vector2d u0 = es.eigenvectors().col(0), u1 = es.eigenvectors().col(1);
      ws.push_back(std::sqrt(m1) * u0 + std::sqrt(-m0) * u1);
      ws.push_back(std::sqrt(m1) * u0 - std::sqrt(-m0) * u1);
    } else if (std::abs(m0) <= tol && m1 > tol) {
      ws.push_back(es.eigenvectors().col(0));
    } else if (std::abs(m1) <= tol && m0 < -tol) {
      ws.push_back(es.eigenvectors().col(1));
    }
    for (const auto& w : ws) {
      const V4 p2 = (w[0] * f[0] + w[1] * f[1]).normalized();
      const double b12 = bf(p1, p2);
      const V4 x1 = bf(p2, p2) * p1 - b12 * p2, x2 = b12 * p1 - bf(p1, p1) * p2;
      const V4 x = x1.norm() >= x2.norm() ? x1 : x2;
      if (x.norm() < 1e-12) continue;
      add_sample(out, x, line_through(point(p1), point(p2)), L1, L2);
    }
  }
  split_components(out);
}

}  // namespace

std::string_view kind_name(LocusComponent::Kind k) {
  switch (k) {
    case LocusComponent::Kind::circle: return "circle";
    case LocusComponent::Kind::point: return "point";
    case LocusComponent::Kind::curve: return "curve";
  }
  return "unknown";
}

std::string_view status_name(PairCheck::Status s) {
  switch (s) {
    case PairCheck::Status::checked: return "checked";
    case PairCheck::Status::dual: return "dual";
    case PairCheck::Status::not_verifiable: return "not verifiable";
  }
  return "unknown";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::not_verifiable: return "NOT VERIFIABLE";
  }
  return "unknown";
}

double point_line_distance(const PluckerLine& l, const TetraPoint& p) {
  const auto e = basis(l);
  const V4 v = vec(p).normalized();
  const V4 r = v - e[0].dot(v) * e[0] - e[1].dot(v) * e[1];
  return r.norm();
}

Plane4 plane_through(const PluckerLine& l, const PluckerLine& m) {
  const auto e = basis(l), f = basis(m);
  Eigen::Matrix4d span;
  span << e[0], e[1], f[0], f[1];
  const V4 n = canonical(null_vector(span.transpose()));
  return {n[0], n[1], n[2], n[3]};
}

TetraPoint pole_of(const Plane4& n) { return {n[0], n[1], n[2], -n[3]}; }

TangencyLocus tangency_locus(const PluckerLine& L1, const PluckerLine& L2, int n) {
  if (projectively_equal(L1, L2)) throw DegenerateError("the two lines coincide");
  if (n < 8) n = 8;
  TangencyLocus out;
  if (meet(L1, L2))
    intersecting_locus(out, L1, L2, n);
  else
    skew_locus(out, L1, L2, n);
  if (out.samples.empty()) throw NoRealTangentsError("no real tangent lines meet both lines");
  return out;
}

SingularReport singular_circle_check(const PluckerLine& L1, const PluckerLine& L2, const PluckerLine& L3,
                                     int samples) {
  SingularReport rep;
  rep.lines = {L1, L2, L3};
  for (int i = 0; i < 3; ++i) {
    rep.classes[i] = classify(rep.lines[i]).cls;
    for (int j = 0; j < i; ++j)
      if (projectively_equal(rep.lines[i], rep.lines[j])) throw DegenerateError("two of the lines coincide");
  }
  if (std::all_of(rep.classes.begin(), rep.classes.end(), [](LineClass c) { return c == LineClass::Elliptic; })) {
    rep.verdict = Verdict::not_verifiable;
    rep.note = "three elliptic lines: not verifiable over the reals";
    return rep;
  }
  const std::array<std::array<int, 3>, 3> order{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  bool failed = false;
  for (const auto& [i, j, k] : order) {
    PairCheck pc;
    pc.first = i;
    pc.second = j;
    pc.third = k;
    const auto &a = rep.lines[i], &b = rep.lines[j], &c = rep.lines[k];
    if (is_dual_pair(a, b)) {
      pc.status = PairCheck::Status::dual;
      rep.pairs.push_back(pc);
      continue;
    }
    try {
      auto loc = tangency_locus(a, b, samples);
      pc.intersecting = loc.intersecting;
      pc.samples = static_cast<int>(loc.samples.size());
      for (const auto& comp : loc.components) {
        if (comp.kind != LocusComponent::Kind::circle) {
          pc.other_components.push_back(comp.kind);
          continue;
        }
        CircleCheck cc;
        cc.plane = comp.plane;
        cc.pole = comp.pole;
        cc.circularity_defect = comp.circularity_defect;
        cc.trivial = comp.trivial;
        cc.distance = point_line_distance(c, comp.pole);
        cc.ok = cc.trivial || cc.distance < kSingularTol;
        if (!cc.ok) failed = true;
        rep.max_distance = std::max(rep.max_distance, cc.trivial ? 0.0 : cc.distance);
        pc.circles.push_back(cc);
      }
    } catch (const NoRealTangentsError& e) {
      pc.status = PairCheck::Status::not_verifiable;
      pc.note = e.what();
    }
    rep.pairs.push_back(pc);
  }
  rep.verdict = failed ? Verdict::fail : Verdict::pass;
  return rep;
}

}  // namespace circweb
