#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cuspsys/bounds.hpp"
#include "cuspsys/error.hpp"

using namespace cuspsys;
using std::numbers::pi;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kParse;
}

bool near(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("horoball tangency lengths") {
  CHECK(horoball_tangency_lengths(1e-9).two_cusp < 1e-3);
  const auto at_log2 = horoball_tangency_lengths(std::log(2.0));
  CHECK(near(at_log2.two_cusp, 4 * std::acosh(2.0)));
  CHECK(near(at_log2.two_cusp, 5.26783, 5e-6));
  CHECK(at_log2.self_tangency == doctest::Approx(0.0));
  CHECK_FALSE(at_log2.small_radius);
  CHECK(near(horoball_tangency_lengths(std::log(3.0)).two_cusp, 7.05100, 5e-6));
  const auto small = horoball_tangency_lengths(0.5);
  CHECK(small.small_radius);
  CHECK(near(small.self_tangency, 2 * std::asinh(1.0)));
  CHECK(kind_of([] { horoball_tangency_lengths(0.0); }) == ErrorKind::kNonPositiveRadius);
  CHECK(kind_of([] { horoball_tangency_lengths(-1.0); }) == ErrorKind::kNonPositiveRadius);
}

TEST_CASE("systole upper bounds") {
  const SysUpper torus = sys_upper({1, 16});
  CHECK(near(*torus.schmutz.value, 4 * std::acosh(3.0)));
  CHECK(near(*torus.schmutz.value, 7.05100, 5e-6));
  CHECK_FALSE(torus.closed_case.applicable());

  const SysUpper sphere = sys_upper({0, 4});
  CHECK(near(*sphere.schmutz.value, 4 * std::acosh(1.5)));
  CHECK(near(*sphere.schmutz.value, 3.84969, 5e-6));  // 3.849695...
  CHECK_FALSE(sphere.three_case_max.applicable());
  CHECK_FALSE(sphere.packaged.applicable());
  CHECK(sphere.minimum == *sphere.schmutz.value);
  CHECK(sphere.minimum_source == "schmutz");

  const SysUpper closed = sys_upper({2, 0});
  CHECK(near(*closed.closed_case.value, 6 * std::log(2.0)));
  CHECK(near(*closed.closed_case.value, 4.15888, 5e-6));
  CHECK_FALSE(closed.schmutz.applicable());

  CHECK(kind_of([] { sys_upper({0, 1}); }) == ErrorKind::kNoneApplicable);
  CHECK(kind_of([] { sys_upper({0, 0}); }) == ErrorKind::kNoneApplicable);
  CHECK(kind_of([] { sys_upper({0, 3}); }) == ErrorKind::kInvalidSignature);
  CHECK(kind_of([] { sys_upper({1, 0}); }) == ErrorKind::kInvalidSignature);
  CHECK(kind_of([] { Signature{-1, 5}.validate(); }) == ErrorKind::kInvalidSignature);
}

TEST_CASE("three-case terms against the packaged bound") {
  for (int g = 1; g <= 10; ++g) {
    CAPTURE(g);
    const SysUpper s = sys_upper({g, 1});
    const double root = std::sqrt(2 * pi * g);
    const double c1 = 4 * std::acosh(std::sqrt(2 * pi) * (g - 1) / std::sqrt(double(g)) + pi);
    const double c2 = 4 * std::acosh(std::sqrt(2 * pi * (g - 1 + root)));
    const double c3 = 2 * std::acosh(2 * pi * (g - 1 + root) - 1);
    CHECK(near(*s.case_many_cusps.value, c1));
    CHECK(near(*s.case_close_pair.value, c2));
    CHECK(near(*s.case_self_loop.value, c3));
    CHECK(*s.three_case_max.value == std::max({c1, c2, c3}));
    const double packaged = 2 * std::log(double(g)) + 8;
    CHECK(near(*s.packaged.value, packaged));
    CHECK(s.packaging_discrepancy == (std::max({c1, c2, c3}) > packaged));
  }
  // the documented case: about 8.22 against 8 at g = 1
  const SysUpper one = sys_upper({1, 1});
  CHECK(*one.case_close_pair.value == doctest::Approx(8.22).epsilon(1e-3));
  CHECK(one.packaging_discrepancy);
}

TEST_CASE("Schmutz Schaller bound is non-increasing in n") {
  // (6g - 6 + 3n) / n is 3 for every n at g = 1, so the bound only decreases for g >= 2
  for (int g = 1; g <= 10; ++g) {
    double prev = INFINITY;
    for (int n = 2; n <= 100; ++n) {
      CAPTURE(g);
      CAPTURE(n);
      const double v = *sys_upper({g, n}).schmutz.value;
      if (g == 1) {
        CHECK(near(v, 4 * std::acosh(3.0)));
      } else {
        CHECK(v < prev);
      }
      prev = v;
    }
  }
}

TEST_CASE("certified trace budgets") {
  // 2 cosh(2 arccosh x) = 2(2x^2 - 1)
  CHECK(certified_trace_budget({1, 16}).trace_max == 34);
  CHECK(certified_trace_budget({0, 4}).trace_max == 7);
  for (int g = 2; g <= 5; ++g) {
    // x = (6g - 6 + 3n) / n = 72 / 23 for n = 46g - 46: 2(2x^2 - 1) = 19678 / 529
    const TraceBudget b = certified_trace_budget({g, 46 * g - 46});
    CHECK(b.trace_max <= 38);
    CHECK(b.trace_max >= 34);
  }
  CHECK(certified_trace_budget({2, 46}).trace_max == 38);
  const TraceBudget closed = certified_trace_budget({2, 0});
  CHECK(closed.trace_max == static_cast<std::int64_t>(std::ceil(2 * std::cosh(3 * std::log(2.0)))));
  CHECK(kind_of([] { certified_trace_budget({0, 1}); }) == ErrorKind::kNoneApplicable);
}

TEST_CASE("pants quantities") {
  SUBCASE("branch point") {
    const PantsQuantities q = pants_quantities(2 * std::acosh(1.5));
    CHECK(q.long_branch);
    CHECK(near(q.sin_angle, 0.8));
    CHECK(near(q.cusp_curve_count, 6.0));
  }
  SUBCASE("trace 34") {
    const PantsQuantities q = pants_quantities(2 * std::acosh(17.0));
    CHECK(near(q.horoball_distance, 2 * std::log(3.0)));
    const double l = 2 * std::acosh(17.0);
    CHECK(near(q.cusp_to_curve, std::log(2 * std::cosh(l / 2) / std::sinh(l / 2))));
    CHECK(near(q.collar_width, std::asinh(1 / std::sinh(l / 2))));
  }
  SUBCASE("disk radius") {
    CHECK(near(pants_quantities(4 * std::asinh(1.0)).disk_radius, std::asinh(0.5)));
    CHECK(near(pants_quantities(4 * std::asinh(1.0)).disk_radius, 0.48121, 1e-5));
  }
  SUBCASE("short branch") {
    const PantsQuantities q = pants_quantities(1.0);
    CHECK_FALSE(q.long_branch);
    CHECK(near(q.sin_angle, 2 / std::sqrt(5.0)));
  }
  CHECK(kind_of([] { pants_quantities(0.0); }) == ErrorKind::kNonPositiveLength);
  CHECK(kind_of([] { pants_quantities(NAN); }) == ErrorKind::kNonPositiveLength);
}

TEST_CASE("horoball distance at two-cusp tangency") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> r(0.01, 8.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = r(rng);
    const double d = pants_quantities(4 * std::acosh(std::exp(x))).horoball_distance;
    CHECK(std::abs(d - 2 * x) < 1e-12 * std::max(1.0, x));
  }
}

TEST_CASE("angle decays like exp(-l/4)") {
  // sqrt(2c + 1)/(c + 1) with c = cosh(l/2) tends to 2 exp(-l/4)
  for (double l = 10; l <= 40; l += 0.5) {
    const double ratio = pants_quantities(l).sin_angle / (2 * std::exp(-l / 4));
    CHECK(ratio >= 0.9);
    CHECK(ratio <= 1.1);
  }
}

TEST_CASE("kissing caps") {
  SUBCASE("torus16 at trace 34") {
    const KissUpper k = kiss_upper({1, 16}, SystoleLength::from_trace(34));
    CHECK(k.cosh_floor == 6);
    CHECK(*k.a_cap_horoball.value == 48.0);
    CHECK(*k.a_cap_euler.value == 48.0);
    CHECK(near(*k.kissbound_universal.value, 2e4 * 17 / std::log(2.0)));
    CHECK(*k.kissbound_universal.value == doctest::Approx(4.905e5).epsilon(1e-3));
    const double l = 2 * std::acosh(17.0);
    CHECK(near(*k.kissbound.value, 20 * 16 * 3 + 200 * std::exp(l / 2) / l * 16, 1e-10));
    CHECK_FALSE(k.sphere.applicable());
  }
  SUBCASE("from a bare length the floor still comes out exact here") {
    const KissUpper k = kiss_upper({1, 16}, {4 * std::acosh(3.0), std::nullopt});
    CHECK(k.cosh_floor == 6);
  }
  SUBCASE("sphere4") {
    const KissUpper k = kiss_upper({0, 4}, SystoleLength::from_trace(7));
    CHECK(*k.sphere.value == 9.0);
    CHECK_FALSE(k.kissbound.applicable());
    CHECK_FALSE(k.kissbound_universal.applicable());
    CHECK_FALSE(k.c_cap.applicable());
    CHECK_FALSE(k.sphere.excluded.size());
  }
  SUBCASE("short systole uses the disjointness cap") {
    const KissUpper k = kiss_upper({2, 3}, {1.0, std::nullopt});
    CHECK(*k.c_cap.value == 6.0);
    CHECK_FALSE(k.covering_count.applicable());
  }
  SUBCASE("once-punctured torus exclusions") {
    const KissUpper k = kiss_upper({1, 1}, SystoleLength::from_trace(6));
    CHECK_FALSE(k.kissbound.applicable());
    CHECK_FALSE(k.b_cap.applicable());
    CHECK(k.kissbound_universal.applicable());
  }
  CHECK(kind_of([] { kiss_upper({0, 2}, {1.0, std::nullopt}); }) == ErrorKind::kInvalidSignature);
  CHECK(kind_of([] { kiss_upper({1, 2}, {-1.0, std::nullopt}); }) == ErrorKind::kNonPositiveLength);
}

TEST_CASE("bound report") {
  const BoundReport r = bound_report({0, 4}, SystoleLength::from_trace(7));
  REQUIRE(r.systole);
  CHECK(near(r.systole->minimum, 4 * std::acosh(1.5)));
  REQUIRE(r.kissing);
  CHECK(*r.kissing->sphere.value == 9.0);
  CHECK(*bound_report({0, 4}, std::nullopt).sphere_kissing.value == 9.0);
  CHECK_FALSE(bound_report({2, 4}, std::nullopt).sphere_kissing.applicable());
  const BoundReport bad = bound_report({0, 1}, std::nullopt);
  CHECK_FALSE(bad.systole);
  CHECK_FALSE(bad.systole_error.empty());
}

TEST_CASE("one-holed torus relation helper") {
  CHECK(one_holed_torus_relation(1.0, 12.0));
  CHECK_FALSE(one_holed_torus_relation(12.0, 1.0));
}
