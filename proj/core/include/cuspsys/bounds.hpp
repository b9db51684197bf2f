#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace cuspsys {

// Topological type (g, n) of a finite-area surface. Valid when 3g - 3 + n > 0.
struct Signature {
  int genus = 0;
  int cusps = 0;

  bool valid() const noexcept { return genus >= 0 && cusps >= 0 && 3 * genus - 3 + cusps > 0; }
  void validate() const;  // throws Error(kInvalidSignature)

  friend bool operator==(const Signature&, const Signature&) = default;
};

// A formula evaluation that may be out of range for the given signature.
// Exactly one of `value` and `excluded` is set.
struct BoundValue {
  std::optional<double> value;
  std::string excluded;

  static BoundValue of(double v) { return {v, {}}; }
  static BoundValue out_of_range(std::string why) { return {std::nullopt, std::move(why)}; }
  bool applicable() const noexcept { return value.has_value(); }
};

// Systole-length bounds from horoball neighbourhoods of radius r around cusps.
struct TangencyLengths {
  // Two neighbourhoods tangent to each other: the curve around both cusps.
  double two_cusp = 0.0;
  // A neighbourhood tangent to itself. For r < log 2 this is the constant
  // 2 arcsinh(1) instead of 2 arccosh(e^r - 1).
  double self_tangency = 0.0;
  bool small_radius = false;
};

TangencyLengths horoball_tangency_lengths(double radius);

struct SysUpper {
  BoundValue closed_case;     // 2 log g + 2 log 4, n = 0
  BoundValue case_many_cusps; // 4 arccosh(sqrt(2 pi)(g - 1)/sqrt(g) + pi)
  BoundValue case_close_pair; // 4 arccosh(sqrt(2 pi (g - 1 + sqrt(2 pi g))))
  BoundValue case_self_loop;  // 2 arccosh(2 pi (g - 1 + sqrt(2 pi g)) - 1)
  BoundValue three_case_max;  // n >= 1, g >= 1
  BoundValue schmutz;         // 4 arccosh((6g - 6 + 3n) / n), n >= 2
  BoundValue packaged;        // 2 log g + 8, g >= 1

  double minimum = 0.0;
  std::string minimum_source;
  // The three-case maximum exceeds 2 log g + 8 (happens at g = 1).
  bool packaging_discrepancy = false;
};

// Throws kNoneApplicable for g = 0, n < 2 and kInvalidSignature otherwise
// when 3g - 3 + n <= 0.
SysUpper sys_upper(Signature s);

// Smallest integer trace bound covering every closed geodesic no longer than
// the least applicable systole bound: ceil(2 cosh(U / 2)). Computed in exact
// rational arithmetic for the Schmutz Schaller bound.
struct TraceBudget {
  std::int64_t trace_max = 0;
  double length_bound = 0.0;
  std::string source;
};
TraceBudget certified_trace_budget(Signature s);

// Quantities attached to a systole of length l.
struct PantsQuantities {
  double horoball_distance = 0.0;     // d(l) = 2 log cosh(l/4)
  double cusp_to_curve = 0.0;         // D(l) = log(2 cosh(l/2) / sinh(l/2))
  double sin_angle = 0.0;             // sin(theta_l), piecewise at l = 2 arccosh(3/2)
  double angle = 0.0;                 // theta_l
  double cusp_curve_count = 0.0;      // m(l) = coth(l/2) * 2 / sin(theta_l / 2)
  double disk_radius = 0.0;           // r(l) = arcsinh(1 / (2 sinh(l/4)))
  double intersection_distance = 0.0; // R(l), piecewise at l = 2 arccosh(3/2)
  double collar_width = 0.0;          // w(l) = arcsinh(1 / sinh(l/2))
  bool long_branch = false;           // l >= 2 arccosh(3/2)
};

PantsQuantities pants_quantities(double length);

// Piecewise threshold for sin(theta_l) and R(l).
double angle_branch_length();

// A systole length, optionally with the exact trace it came from. With the
// trace, floor(2 cosh(l/4)) = floor(sqrt(trace + 2)) is evaluated exactly.
struct SystoleLength {
  double value = 0.0;
  std::optional<std::int64_t> trace;

  static SystoleLength from_trace(std::int64_t trace);
};

inline constexpr double kKissingConstant = 2.0e4;

struct KissUpper {
  std::int64_t cosh_floor = 0;  // floor(2 cosh(l/4))
  BoundValue a_cap_horoball;    // (n/2) floor(2 cosh(l/4))
  BoundValue a_cap_euler;       // 3(n + 2g - 2)
  BoundValue b_cap;             // n m(l)
  BoundValue c_cap;             // 200 e^{l/2}/l (2g - 2 + n), or 3g - 3 + n for short l
  BoundValue covering_count;    // F = 8(2g - 2 + n) e^{l/2}
  BoundValue curves_per_disk;   // G = 5 pi / (2 arcsinh(sin theta_l))
  BoundValue disks_per_curve;   // H = l sinh(l/4)
  BoundValue kissbound;         // 20 n cosh(l/4) + 200 e^{l/2}/l (2g - 2 + n)
  BoundValue kissbound_universal;  // C (g + n) g / log(g + 1)
  BoundValue sphere;            // (7/2) n - 5
};

KissUpper kiss_upper(Signature s, SystoleLength length);

// (7/2) n - 5 for g = 0; needs no systole length.
BoundValue sphere_kissing_cap(Signature s);

// The one-holed torus relation cosh(l_gamma/2) <= cosh(l_alpha/6) + 1/2.
bool one_holed_torus_relation(double gamma_length, double alpha_length);

struct BoundReport {
  Signature signature;
  std::optional<SysUpper> systole;
  std::string systole_error;
  BoundValue sphere_kissing;
  std::optional<SystoleLength> length;
  std::optional<PantsQuantities> pants;
  std::optional<KissUpper> kissing;
};

// Everything that can be evaluated for (g, n) and an optional systole length.
// Out-of-range formulas are reported, not thrown.
BoundReport bound_report(Signature s, std::optional<SystoleLength> length);

}  // namespace cuspsys
