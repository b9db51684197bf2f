#pragma once

#include <optional>

namespace cuspsys {

inline constexpr double kClosedFormTolerance = 1e-9;
inline constexpr double kOptimizationTolerance = 1e-6;

// Point of the upper half-plane; y > 0 (throws kInvalidPoint otherwise).
struct HPoint {
  double x = 0.0;
  double y = 1.0;

  static HPoint make(double x, double y);
};

// Vertical line x = center, or the semicircle of radius `radius` about
// (center, 0).
struct HGeodesic {
  double center = 0.0;
  std::optional<double> radius;

  static HGeodesic vertical(double x) { return {x, std::nullopt}; }
  static HGeodesic semicircle(double center, double radius);
  bool contains(HPoint p, double tol = kClosedFormTolerance) const;
};

// Horizontal line y = height (cusp at infinity) or a circle tangent to the
// real axis at `base` with Euclidean diameter `height`.
struct Horocycle {
  std::optional<double> base;
  double height = 1.0;

  static Horocycle horizontal(double height);
  static Horocycle tangent_at(double base, double diameter);
};

double hdist(HPoint p, HPoint q);

// Distance between horoballs bounded by two horocycles with distinct base
// points (one may be horizontal).
double horoball_distance(const Horocycle& a, const Horocycle& b);

// z -> (az + b) / (cz + d), kept at determinant 1.
struct Mobius {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  static Mobius translation(double t) { return {1.0, t, 0.0, 1.0}; }
  static Mobius dilation(double k);
  Mobius then(const Mobius& next) const;  // next after this, renormalized
  HPoint apply(HPoint p) const;
};

struct TwoCuspPants {
  double length = 0.0;       // 4 d(t, s) measured
  double closed_form = 0.0;  // 4 arccosh(e^r)
  double deviation = 0.0;
  double circle_radius = 0.0;  // radius of the geodesic through q: e^{-r}
  double orthogonality_residual = 0.0;
};

// Quadrilateral with ideal vertex at infinity between x = 0 and x = 1,
// horocycle y = 1, q = i e^{-r}. Throws kDegenerateConfig when r <= 0 or
// the circles fail to meet orthogonally.
TwoCuspPants verify_two_cusp_pants(double r);

struct SelfTangency {
  double alpha = 0.0;  // 2 arccosh(a e^r) measured
  double beta = 0.0;   // 2 arccosh((1 - a) e^r) measured
  double alpha_closed_form = 0.0;
  double beta_closed_form = 0.0;
  bool alpha_degenerate = false;  // a e^r <= 1: no geodesic, length 0
  bool beta_degenerate = false;
  double deviation = 0.0;
  // Distance from the horocycle to alpha, measured, and D(alpha) when both
  // lengths agree (a = 1/2).
  std::optional<double> cusp_to_alpha;
  std::optional<double> cusp_to_alpha_closed_form;
};

// Throws kAOutOfRange unless 0 < a <= 1/2 and kDegenerateConfig for r < log 2.
SelfTangency verify_self_tangency(double r, double a);

struct HorocyclicArc {
  double arc = 0.0;          // minimal horocyclic arc found by search
  double lower_bound = 0.0;  // 1 / cosh(l / 4)
  double pair_distance = 0.0;   // d(l) = 2 log cosh(l / 4)
  double third_distance = 0.0;  // horoball distance between the two far cusps
  int iterations = 0;
};

// Three cusps with two horoball distances d(l); the third distance is held
// at d(l) + excess. The arc between the two distance-realizing segments is
// minimized by golden-section search. Throws kNonPositiveLength.
HorocyclicArc horocyclic_arc(double length, double excess = 0.0);

struct AngleRelation {
  double angle = 0.0;     // arcsin(sinh(h/2) / sinh(l/2))
  double measured = 0.0;  // from a right triangle drawn in the half-plane
  double deviation = 0.0;
};

// Throws kInvalidTriangle when sinh(h/2) > sinh(l/2) or a length is negative.
AngleRelation verify_angle_relation(double length, double seam);

}  // namespace cuspsys
