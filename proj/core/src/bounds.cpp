#include "cuspsys/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "cuspsys/error.hpp"
#include "cuspsys/turn_word.hpp"

namespace cuspsys {

namespace {

using std::numbers::pi;

std::string sig_name(Signature s) {
  return "(" + std::to_string(s.genus) + ", " + std::to_string(s.cusps) + ")";
}

void require_positive_length(double length) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw Error(ErrorKind::kNonPositiveLength, "systole length must be positive and finite");
  }
}

std::int64_t isqrt_floor(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// ceil(num / den) for den > 0.
std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

}  // namespace

void Signature::validate() const {
  if (!valid()) {
    throw Error(ErrorKind::kInvalidSignature,
                "signature " + sig_name(*this) + " violates 3g - 3 + n > 0");
  }
}

TangencyLengths horoball_tangency_lengths(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorKind::kNonPositiveRadius, "horoball expansion radius must be positive");
  }
  TangencyLengths out;
  out.two_cusp = 4.0 * std::acosh(std::exp(radius));
  if (radius >= std::log(2.0)) {
    out.self_tangency = 2.0 * std::acosh(std::max(1.0, std::exp(radius) - 1.0));
  } else {
    out.self_tangency = 2.0 * std::asinh(1.0);
    out.small_radius = true;
  }
  return out;
}

SysUpper sys_upper(Signature s) {
  const int g = s.genus, n = s.cusps;
  if (g == 0 && n < 2) {
    throw Error(ErrorKind::kNoneApplicable, "no systole bound applies to signature " + sig_name(s));
  }
  s.validate();

  SysUpper out;
  const double gd = g;

  if (n == 0) {
    out.closed_case = BoundValue::of(2.0 * std::log(gd) + 2.0 * std::log(4.0));
  } else {
    out.closed_case = BoundValue::out_of_range("closed-surface bound needs n = 0");
  }

  if (n >= 1 && g >= 1) {
    const double root = std::sqrt(2.0 * pi * gd);
    const double area_term = 2.0 * pi * (gd - 1.0 + root);
    out.case_many_cusps =
        BoundValue::of(4.0 * std::acosh(std::sqrt(2.0 * pi) * (gd - 1.0) / std::sqrt(gd) + pi));
    out.case_close_pair = BoundValue::of(4.0 * std::acosh(std::sqrt(area_term)));
    out.case_self_loop = BoundValue::of(2.0 * std::acosh(area_term - 1.0));
    out.three_case_max = BoundValue::of(std::max(
        {*out.case_many_cusps.value, *out.case_close_pair.value, *out.case_self_loop.value}));
  } else {
    const std::string why = "three-case bound needs g >= 1 and n >= 1";
    out.case_many_cusps = out.case_close_pair = out.case_self_loop = out.three_case_max =
        BoundValue::out_of_range(why);
  }

  if (n >= 2) {
    out.schmutz = BoundValue::of(4.0 * std::acosh(static_cast<double>(6 * g - 6 + 3 * n) / n));
  } else {
    out.schmutz = BoundValue::out_of_range("Schmutz Schaller bound needs n >= 2");
  }

  if (g >= 1) {
    out.packaged = BoundValue::of(2.0 * std::log(gd) + 8.0);
  } else {
    out.packaged = BoundValue::out_of_range("2 log g + 8 needs g >= 1");
  }

  out.minimum = std::numeric_limits<double>::infinity();
  const std::pair<const char*, const BoundValue*> candidates[] = {
      {"closed_case", &out.closed_case},
      {"three_case_max", &out.three_case_max},
      {"schmutz", &out.schmutz},
      {"packaged", &out.packaged},
  };
  for (const auto& [name, bv] : candidates) {
    if (bv->applicable() && *bv->value < out.minimum) {
      out.minimum = *bv->value;
      out.minimum_source = name;
    }
  }
  out.packaging_discrepancy = out.three_case_max.applicable() && out.packaged.applicable() &&
                              *out.three_case_max.value > *out.packaged.value;
  return out;
}

TraceBudget certified_trace_budget(Signature s) {
  const SysUpper bounds = sys_upper(s);
  TraceBudget best;
  best.trace_max = std::numeric_limits<std::int64_t>::max();

  auto consider = [&best](std::int64_t budget, double length, const char* source) {
    if (budget < best.trace_max) best = {budget, length, source};
  };

  if (bounds.schmutz.applicable()) {
    // cosh(U/4) = p/q, so 2 cosh(U/2) = 2(2 p^2/q^2 - 1) = (4p^2 - 2q^2) / q^2.
    const std::int64_t p = 6LL * s.genus - 6 + 3LL * s.cusps;
    const std::int64_t q = s.cusps;
    consider(ceil_div(4 * p * p - 2 * q * q, q * q), *bounds.schmutz.value, "schmutz");
  }
  for (const auto& [bv, name] : {std::pair{&bounds.closed_case, "closed_case"},
                                 std::pair{&bounds.three_case_max, "three_case_max"},
                                 std::pair{&bounds.packaged, "packaged"}}) {
    if (!bv->applicable()) continue;
    const double t = 2.0 * std::cosh(*bv->value / 2.0);
    if (t < 9.0e18) consider(static_cast<std::int64_t>(std::ceil(t)), *bv->value, name);
  }
  return best;
}

double angle_branch_length() { return 2.0 * std::acosh(1.5); }

PantsQuantities pants_quantities(double length) {
  require_positive_length(length);
  PantsQuantities q;
  const double ch2 = std::cosh(length / 2.0);
  const double sh2 = std::sinh(length / 2.0);
  const double sh4 = std::sinh(length / 4.0);

  q.horoball_distance = 2.0 * std::log(std::cosh(length / 4.0));
  q.cusp_to_curve = std::log(2.0 * ch2 / sh2);
  q.long_branch = length >= angle_branch_length();
  if (q.long_branch) {
    q.sin_angle = std::sqrt(2.0 * ch2 + 1.0) / (ch2 + 1.0);
    q.intersection_distance =
        std::asinh((ch2 + 1.0) / (2.0 * sh4 * std::sqrt(2.0 * ch2 + 1.0)));
  } else {
    q.sin_angle = 2.0 / std::sqrt(5.0);
    q.intersection_distance = std::asinh(5.0 / (8.0 * sh4));
  }
  q.angle = std::asin(q.sin_angle);
  q.cusp_curve_count = (ch2 / sh2) * 2.0 / std::sin(q.angle / 2.0);
  q.disk_radius = std::asinh(1.0 / (2.0 * sh4));
  q.collar_width = std::asinh(1.0 / sh2);
  return q;
}

SystoleLength SystoleLength::from_trace(std::int64_t trace) {
  return {length_from_trace(trace), trace};
}

KissUpper kiss_upper(Signature s, SystoleLength length) {
  s.validate();
  require_positive_length(length.value);
  const int g = s.genus, n = s.cusps;
  const double l = length.value;
  const PantsQuantities pq = pants_quantities(l);

  // cosh(l/4) = sqrt((cosh(l/2) + 1) / 2) = sqrt(trace + 2) / 2 for an exact trace.
  double cosh4 = std::cosh(l / 4.0);
  KissUpper out;
  if (length.trace) {
    const std::int64_t t = *length.trace;
    cosh4 = std::sqrt(static_cast<double>(t + 2)) / 2.0;
    out.cosh_floor = isqrt_floor(t + 2);
  } else {
    out.cosh_floor = static_cast<std::int64_t>(std::floor(2.0 * cosh4));
  }

  out.a_cap_horoball = BoundValue::of(0.5 * n * static_cast<double>(out.cosh_floor));
  out.a_cap_euler = BoundValue::of(3.0 * (n + 2 * g - 2));

  const bool once_punctured_torus = g == 1 && n == 1;
  if (once_punctured_torus) {
    out.b_cap = BoundValue::out_of_range("B bound excludes (g, n) = (1, 1)");
  } else {
    out.b_cap = BoundValue::of(n * pq.cusp_curve_count);
  }

  const double euler_weight = 2.0 * g - 2.0 + n;
  const double growth = 200.0 * std::exp(l / 2.0) / l * euler_weight;
  if (g == 0 || once_punctured_torus) {
    const std::string why = "C bound needs g != 0 and (g, n) != (1, 1)";
    out.c_cap = out.covering_count = out.curves_per_disk = out.disks_per_curve =
        BoundValue::out_of_range(why);
  } else if (l <= 2.0 * std::asinh(1.0)) {
    out.c_cap = BoundValue::of(3.0 * g - 3.0 + n);
    const std::string why = "covering estimate needs l > 2 arcsinh(1)";
    out.covering_count = out.curves_per_disk = out.disks_per_curve = BoundValue::out_of_range(why);
  } else {
    out.c_cap = BoundValue::of(growth);
    out.covering_count = BoundValue::of(8.0 * euler_weight * std::exp(l / 2.0));
    out.curves_per_disk = BoundValue::of(5.0 * pi / (2.0 * std::asinh(pq.sin_angle)));
    out.disks_per_curve = BoundValue::of(l * std::sinh(l / 4.0));
  }

  if (g >= 1 && !once_punctured_torus) {
    out.kissbound = BoundValue::of(20.0 * n * cosh4 + growth);
  } else {
    out.kissbound = BoundValue::out_of_range("needs g >= 1 and (g, n) != (1, 1)");
  }
  if (g >= 1) {
    out.kissbound_universal =
        BoundValue::of(kKissingConstant * (g + n) * g / std::log(g + 1.0));
  } else {
    out.kissbound_universal = BoundValue::out_of_range("needs g >= 1");
  }
  out.sphere = sphere_kissing_cap(s);
  return out;
}

BoundValue sphere_kissing_cap(Signature s) {
  if (s.genus != 0) return BoundValue::out_of_range("punctured-sphere bound needs g = 0");
  return BoundValue::of(3.5 * s.cusps - 5.0);
}

bool one_holed_torus_relation(double gamma_length, double alpha_length) {
  return std::cosh(gamma_length / 2.0) <= std::cosh(alpha_length / 6.0) + 0.5;
}

BoundReport bound_report(Signature s, std::optional<SystoleLength> length) {
  BoundReport report;
  report.signature = s;
  report.length = length;
  try {
    report.systole = sys_upper(s);
  } catch (const Error& e) {
    report.systole_error = e.what();
  }
  report.sphere_kissing = s.valid() ? sphere_kissing_cap(s) : BoundValue::out_of_range("invalid signature");
  if (length) {
    report.pants = pants_quantities(length->value);
    if (s.valid()) report.kissing = kiss_upper(s, *length);
  }
  return report;
}

}  // namespace cuspsys
