#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "circweb/moebius.hpp"

namespace circweb {

using Plane4 = std::array<double, 4>;  // n . (X, Y, Z, U) = 0

struct LocusSample {
  TetraPoint point;          // unit vector in R^4
  PluckerLine bisecant;      // tangent line meeting both input lines
};

struct LocusComponent {
  enum class Kind { circle, point, curve };
  Kind kind = Kind::curve;
  std::vector<int> samples;
  Plane4 plane{};            // unit normal (circle components)
  TetraPoint pole;           // pole of the plane with respect to the quadric
  double circularity_defect = 0;
  // tangent cone from the intersection point of the two lines; its pole is that point
  bool trivial = false;
};

std::string_view kind_name(LocusComponent::Kind k);

struct TangencyLocus {
  std::vector<LocusSample> samples;
  std::vector<LocusComponent> components;
  bool intersecting = false;
  std::optional<TetraPoint> intersection;
  double max_quadric_residual = 0;
  double max_bisecant_pairing = 0;
};

inline constexpr double kPlaneTol = 1e-8;

// Lines meeting L1 and L2 and tangent to the quadric, with their tangency points
// grouped into planar (circle) components.
TangencyLocus tangency_locus(const PluckerLine& L1, const PluckerLine& L2, int n = 200);

// Sine of the angle in R^4 between the point and the 2-plane of the line.
double point_line_distance(const PluckerLine& l, const TetraPoint& p);
Plane4 plane_through(const PluckerLine& l, const PluckerLine& m);
TetraPoint pole_of(const Plane4& n);

struct CircleCheck {
  Plane4 plane{};
  TetraPoint pole;
  double circularity_defect = 0;
  double distance = 0;  // pole to the third line
  bool trivial = false;
  bool ok = true;
};

struct PairCheck {
  int first = 0, second = 0, third = 0;
  enum class Status { checked, dual, not_verifiable };
  Status status = Status::checked;
  std::string note;
  bool intersecting = false;
  int samples = 0;
  std::vector<CircleCheck> circles;
  std::vector<LocusComponent::Kind> other_components;
};

std::string_view status_name(PairCheck::Status s);

enum class Verdict { pass, fail, not_verifiable };
std::string_view verdict_name(Verdict v);

struct SingularReport {
  std::array<PluckerLine, 3> lines;
  std::array<LineClass, 3> classes{};
  std::vector<PairCheck> pairs;
  Verdict verdict = Verdict::pass;
  std::string note;
  double max_distance = 0;
};

inline constexpr double kSingularTol = 1e-8;

SingularReport singular_circle_check(const PluckerLine& L1, const PluckerLine& L2, const PluckerLine& L3,
                                     int samples = 200);

}  // namespace circweb
