#include "cuspsys/hplane.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cuspsys/bounds.hpp"
#include "cuspsys/error.hpp"

namespace cuspsys {

namespace {

double square(double v) { return v * v; }

// Golden-section minimum of a unimodal f on [lo, hi].
template <class F>
double golden_min(F f, double lo, double hi, double tol, int& iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  iterations = 0;
  while (hi - lo > tol && iterations < 500) {
    ++iterations;
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return (lo + hi) / 2.0;
}

// Half of the boundary geodesic in one quadrilateral: the ideal vertex is at
// infinity, one side on x = 0, the other on x = width. The geodesic through
// q = i e^{-r} orthogonal to x = 0 meets the geodesic orthogonal to x = width
// at right angles in s; t is the top of the latter.
struct Quadrilateral {
  HPoint s, t;
  double outer_radius;
  double residual;
};

std::optional<Quadrilateral> quadrilateral(double r, double width) {
  const double inner = std::exp(-r);
  const double outer_sq = square(width) - square(inner);
  if (!(outer_sq > 0.0)) return std::nullopt;
  const double outer = std::sqrt(outer_sq);
  const double sx = square(inner) / width;
  const double sy_sq = square(inner) - square(sx);
  if (!(sy_sq > 0.0)) return std::nullopt;
  Quadrilateral q{{sx, std::sqrt(sy_sq)}, {width, outer}, outer, 0.0};
  // Orthogonal circles: d^2 = r1^2 + r2^2, and s on both.
  q.residual = std::abs(square(width) - square(inner) - outer_sq) +
               std::abs(square(q.s.x - width) + square(q.s.y) - outer_sq);
  return q;
}

}  // namespace

HPoint HPoint::make(double x, double y) {
  if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw Error(ErrorKind::kInvalidPoint, "point must lie in the upper half-plane");
  }
  return {x, y};
}

HGeodesic HGeodesic::semicircle(double center, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorKind::kDegenerateConfig, "semicircle radius must be positive");
  return {center, radius};
}

bool HGeodesic::contains(HPoint p, double tol) const {
  if (!radius) return std::abs(p.x - center) <= tol;
  return std::abs(std::hypot(p.x - center, p.y) - *radius) <= tol;
}

Horocycle Horocycle::horizontal(double height) {
  if (!(height > 0.0)) throw Error(ErrorKind::kDegenerateConfig, "horocycle height must be positive");
  return {std::nullopt, height};
}

Horocycle Horocycle::tangent_at(double base, double diameter) {
  if (!(diameter > 0.0)) throw Error(ErrorKind::kDegenerateConfig, "horocycle diameter must be positive");
  return {base, diameter};
}

double hdist(HPoint p, HPoint q) {
  const double num = square(p.x - q.x) + square(p.y - q.y);
  // 2 asinh(|p - q| / (2 sqrt(y_p y_q))) is arccosh(1 + |p-q|^2 / (2 y_p y_q)) without cancellation.
  return 2.0 * std::asinh(std::sqrt(num) / (2.0 * std::sqrt(p.y * q.y)));
}

double horoball_distance(const Horocycle& a, const Horocycle& b) {
  if (!a.base && !b.base) throw Error(ErrorKind::kDegenerateConfig, "both horocycles based at infinity");
  if (!a.base) return std::log(a.height / b.height);
  if (!b.base) return std::log(b.height / a.height);
  if (*a.base == *b.base) throw Error(ErrorKind::kDegenerateConfig, "horocycles share a base point");
  return std::log(square(*a.base - *b.base) / (a.height * b.height));
}

Mobius Mobius::dilation(double k) {
  if (!(k > 0.0)) throw Error(ErrorKind::kDegenerateConfig, "dilation factor must be positive");
  const double s = std::sqrt(k);
  return {s, 0.0, 0.0, 1.0 / s};
}

Mobius Mobius::then(const Mobius& n) const {
  Mobius m{n.a * a + n.b * c, n.a * b + n.b * d, n.c * a + n.d * c, n.c * b + n.d * d};
  const double det = m.a * m.d - m.b * m.c;
  const double s = std::sqrt(det);
  return {m.a / s, m.b / s, m.c / s, m.d / s};
}

HPoint Mobius::apply(HPoint p) const {
  // (a z + b)/(c z + d) for z = x + iy, with ad - bc = 1: Im = y / |cz + d|^2.
  const double den_re = c * p.x + d;
  const double den_im = c * p.y;
  const double den = square(den_re) + square(den_im);
  const double num_re = a * p.x + b;
  const double num_im = a * p.y;
  return {(num_re * den_re + num_im * den_im) / den, p.y / den};
}

TwoCuspPants verify_two_cusp_pants(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorKind::kDegenerateConfig, "expansion radius must be positive and finite");
  }
  const auto quad = quadrilateral(r, 1.0);
  if (!quad || quad->residual > kClosedFormTolerance) {
    throw Error(ErrorKind::kDegenerateConfig,
                "circles fail to meet orthogonally at r = " + std::to_string(r));
  }
  TwoCuspPants out;
  out.length = 4.0 * hdist(quad->t, quad->s);
  out.closed_form = 4.0 * std::acosh(std::exp(r));
  out.deviation = std::abs(out.length - out.closed_form);
  out.circle_radius = std::exp(-r);
  out.orthogonality_residual = quad->residual;
  return out;
}

SelfTangency verify_self_tangency(double r, double a) {
  if (!(a > 0.0) || a > 0.5) {
    throw Error(ErrorKind::kAOutOfRange, "area split a must lie in (0, 1/2]");
  }
  if (!(r >= std::log(2.0)) || !std::isfinite(r)) {
    throw Error(ErrorKind::kDegenerateConfig, "self-tangency needs r >= log 2");
  }
  SelfTangency out;
  auto side = [r](double width, double& measured, double& closed, bool& degenerate) {
    const double c = width * std::exp(r);
    degenerate = c <= 1.0;
    closed = degenerate ? 0.0 : 2.0 * std::acosh(c);
    const auto quad = degenerate ? std::nullopt : quadrilateral(r, width);
    if (!degenerate && !quad) degenerate = true;
    measured = degenerate ? 0.0 : 2.0 * hdist(quad->t, quad->s);
    return quad;
  };
  const auto qa = side(a, out.alpha, out.alpha_closed_form, out.alpha_degenerate);
  side(1.0 - a, out.beta, out.beta_closed_form, out.beta_degenerate);
  out.deviation = std::max(std::abs(out.alpha - out.alpha_closed_form),
                           std::abs(out.beta - out.beta_closed_form));
  if (qa) {
    out.cusp_to_alpha = std::log(1.0 / qa->outer_radius);
    if (a == 0.5) out.cusp_to_alpha_closed_form = pants_quantities(out.alpha).cusp_to_curve;
  }
  return out;
}

HorocyclicArc horocyclic_arc(double length, double excess) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw Error(ErrorKind::kNonPositiveLength, "length must be positive and finite");
  }
  HorocyclicArc out;
  out.pair_distance = 2.0 * std::log(std::cosh(length / 4.0));
  out.lower_bound = 1.0 / std::cosh(length / 4.0);
  // Cusp c at infinity with horocycle y = 1; c1 at 0 and c2 at x, both with
  // horoballs at distance d from y = 1.
  const double d = out.pair_distance;
  auto third = [d](double x) {
    return horoball_distance(Horocycle::tangent_at(0.0, std::exp(-d)), Horocycle::tangent_at(x, std::exp(-d)));
  };
  const double target = d + std::max(0.0, excess);
  // |third(x) - target| is V-shaped in x with its vertex at the feasibility edge.
  const double x = golden_min([&](double v) { return std::abs(third(v) - target); }, 1e-12, 2.0,
                              1e-13, out.iterations);
  out.arc = x;
  out.third_distance = third(x);
  return out;
}

AngleRelation verify_angle_relation(double length, double seam) {
  if (!(length > 0.0) || !(seam >= 0.0) || std::sinh(seam / 2.0) > std::sinh(length / 2.0)) {
    throw Error(ErrorKind::kInvalidTriangle, "need 0 <= sinh(h/2) <= sinh(l/2)");
  }
  AngleRelation out;
  out.angle = std::asin(std::min(1.0, std::sinh(seam / 2.0) / std::sinh(length / 2.0)));
  const double a = seam / 2.0;
  const double c = length / 2.0;
  const double b = std::acosh(std::max(1.0, std::cosh(c) / std::cosh(a)));
  if (a == 0.0) {
    out.measured = 0.0;
  } else if (b == 0.0) {
    out.measured = std::numbers::pi / 2.0;
  } else {
    // Right angle at C = i; A = i e^b on x = 0; B at distance a from C along
    // the unit circle, the geodesic orthogonal to x = 0 at C.
    const HPoint A{0.0, std::exp(b)};
    const HPoint B{std::tanh(a), 1.0 / std::cosh(a)};
    // Center of the semicircle through A and B, then the angle at A between
    // the downward direction and the tangent of AB heading toward B.
    const double m = (square(B.x) + square(B.y) - square(A.y)) / (2.0 * B.x);
    out.measured = std::acos(-m / std::hypot(A.y, m));
  }
  out.deviation = std::abs(out.measured - out.angle);
  return out;
}

}  // namespace cuspsys
