#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cuspsys/bounds.hpp"
#include "cuspsys/error.hpp"
#include "cuspsys/hplane.hpp"
#include "oracles.hpp"

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

HPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> x(-5.0, 5.0);
  std::uniform_real_distribution<double> logy(-3.0, 3.0);
  return HPoint::make(x(rng), std::exp(logy(rng)));
}

}  // namespace

TEST_CASE("hyperbolic distance") {
  CHECK(hdist({0, 1}, {0, 2}) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(hdist({0, 1}, {1, 1}) == doctest::Approx(std::acosh(1.5)).epsilon(1e-14));
  CHECK(hdist({0, 1}, {1, 1}) == doctest::Approx(0.96242).epsilon(1e-5));
  CHECK(hdist({0.3, 0.7}, {0.3, 0.7}) == 0.0);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const HPoint p = random_point(rng), q = random_point(rng);
    CHECK(hdist(p, q) == doctest::Approx(oracle::hdist_cosh(p.x, p.y, q.x, q.y)).epsilon(1e-9));
    CHECK(hdist(p, q) == hdist(q, p));
  }
}

TEST_CASE("triangle inequality") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const HPoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
    CHECK(hdist(a, c) <= hdist(a, b) + hdist(b, c) + 1e-12);
  }
}

TEST_CASE("isometries fixing infinity") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> shift(-10.0, 10.0), scale(0.05, 20.0);
  for (int i = 0; i < 1000; ++i) {
    const HPoint p = random_point(rng), q = random_point(rng);
    const Mobius m = Mobius::translation(shift(rng)).then(Mobius::dilation(scale(rng)));
    CHECK(std::abs(hdist(m.apply(p), m.apply(q)) - hdist(p, q)) < 1e-9);
    CHECK(m.a * m.d - m.b * m.c == doctest::Approx(1.0).epsilon(1e-14));
  }
  const HPoint p = Mobius::translation(2.0).then(Mobius::dilation(4.0)).apply({1.0, 1.0});
  CHECK(p.x == doctest::Approx(12.0));
  CHECK(p.y == doctest::Approx(4.0));
}

TEST_CASE("points, geodesics and horocycles") {
  CHECK(kind_of([] { HPoint::make(0.0, 0.0); }) == ErrorKind::kInvalidPoint);
  CHECK(kind_of([] { HPoint::make(0.0, -1.0); }) == ErrorKind::kInvalidPoint);
  CHECK(kind_of([] { HPoint::make(NAN, 1.0); }) == ErrorKind::kInvalidPoint);
  CHECK(HGeodesic::semicircle(0.0, 1.0).contains({std::sqrt(0.5), std::sqrt(0.5)}));
  CHECK(HGeodesic::vertical(2.0).contains({2.0, 7.0}));
  CHECK_FALSE(HGeodesic::vertical(2.0).contains({2.1, 7.0}));
  // horocycles y = 1 and the circle of diameter e^{-d} at 0 are d apart
  CHECK(horoball_distance(Horocycle::horizontal(1.0), Horocycle::tangent_at(0.0, std::exp(-1.5))) ==
        doctest::Approx(1.5));
  CHECK(horoball_distance(Horocycle::tangent_at(0.0, 1.0), Horocycle::tangent_at(1.0, 1.0)) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(kind_of([] { horoball_distance(Horocycle::horizontal(1.0), Horocycle::horizontal(2.0)); }) ==
        ErrorKind::kDegenerateConfig);
}

TEST_CASE("two-cusp pants") {
  CHECK(verify_two_cusp_pants(1e-6).length < 0.02);
  CHECK(verify_two_cusp_pants(std::log(2.0)).length == doctest::Approx(5.26783).epsilon(1e-5));
  const TwoCuspPants t = verify_two_cusp_pants(std::log(3.0));
  CHECK(t.length == doctest::Approx(7.05100).epsilon(1e-5));
  CHECK(std::abs(t.length - 2 * std::acosh(17.0)) < 1e-9);
  CHECK(t.circle_radius == doctest::Approx(1.0 / 3.0));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> r(0.1, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double x = r(rng);
    const TwoCuspPants p = verify_two_cusp_pants(x);
    CHECK(std::abs(p.length - horoball_tangency_lengths(x).two_cusp) < 1e-9);
    CHECK(p.orthogonality_residual < 1e-9);
  }
  CHECK(kind_of([] { verify_two_cusp_pants(0.0); }) == ErrorKind::kDegenerateConfig);
}

TEST_CASE("self-tangency") {
  SUBCASE("boundary of validity") {
    const SelfTangency s = verify_self_tangency(std::log(2.0), 0.5);
    CHECK(s.alpha_degenerate);
    CHECK(s.beta_degenerate);
    CHECK(s.alpha == 0.0);
  }
  SUBCASE("a = 1/2, r = log 4") {
    const SelfTangency s = verify_self_tangency(std::log(4.0), 0.5);
    CHECK(std::abs(s.alpha - 2 * std::acosh(2.0)) < 1e-9);
    CHECK(std::abs(s.beta - 2 * std::acosh(2.0)) < 1e-9);
    CHECK(s.alpha == doctest::Approx(2.63392).epsilon(1e-5));
  }
  SUBCASE("a = 1/4, r = log 4") {
    const SelfTangency s = verify_self_tangency(std::log(4.0), 0.25);
    CHECK(s.alpha_degenerate);
    CHECK_FALSE(s.beta_degenerate);
    CHECK(std::abs(s.beta - 2 * std::acosh(3.0)) < 1e-9);
    CHECK(s.beta == doctest::Approx(3.52550).epsilon(1e-5));
  }
  SUBCASE("cusp-to-curve distance at a = 1/2") {
    for (double r = 1.0; r <= 5.0; r += 0.25) {
      const SelfTangency s = verify_self_tangency(r, 0.5);
      const double l = 2 * std::acosh(std::exp(r) / 2);
      REQUIRE(s.cusp_to_alpha);
      CHECK(std::abs(*s.cusp_to_alpha - std::log(2 * std::cosh(l / 2) / std::sinh(l / 2))) < 1e-9);
    }
  }
  SUBCASE("random parameters") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> r(std::log(2.0), 5.0), a(0.01, 0.5);
    for (int i = 0; i < 100; ++i) {
      const double x = r(rng), y = a(rng);
      const SelfTangency s = verify_self_tangency(x, y);
      const double ca = y * std::exp(x), cb = (1 - y) * std::exp(x);
      CHECK(s.alpha_degenerate == (ca <= 1));
      CHECK(std::abs(s.alpha - (ca <= 1 ? 0.0 : 2 * std::acosh(ca))) < 1e-9);
      CHECK(std::abs(s.beta - (cb <= 1 ? 0.0 : 2 * std::acosh(cb))) < 1e-9);
    }
  }
  CHECK(kind_of([] { verify_self_tangency(2.0, 0.0); }) == ErrorKind::kAOutOfRange);
  CHECK(kind_of([] { verify_self_tangency(2.0, 0.6); }) == ErrorKind::kAOutOfRange);
  CHECK(kind_of([] { verify_self_tangency(0.5, 0.5); }) == ErrorKind::kDegenerateConfig);
}

TEST_CASE("horocyclic arc") {
  CHECK(horocyclic_arc(2 * std::acosh(17.0)).arc >= 1.0 / 3.0 - 1e-9);
  CHECK(horocyclic_arc(4 * std::acosh(2.0)).arc >= 0.5 - 1e-9);
  CHECK(horocyclic_arc(1e-6).lower_bound == doctest::Approx(1.0));
  for (double l = 2.0; l <= 12.0; l += 0.25) {
    const HorocyclicArc h = horocyclic_arc(l);
    CHECK(std::abs(h.arc - 1 / std::cosh(l / 4)) < 1e-6);
    CHECK(std::abs(h.third_distance - h.pair_distance) < 1e-6);
    for (double excess : {0.1, 1.0, 3.0}) CHECK(horocyclic_arc(l, excess).arc >= h.lower_bound - 1e-9);
  }
  CHECK(kind_of([] { horocyclic_arc(0.0); }) == ErrorKind::kNonPositiveLength);
}

TEST_CASE("angle relation") {
  const double l = 3.0;
  CHECK(verify_angle_relation(l, l).angle == doctest::Approx(pi / 2));
  CHECK(verify_angle_relation(l, l).measured == doctest::Approx(pi / 2));
  const double h = 2 * std::asinh(std::sinh(l / 2) / 2);
  const AngleRelation r = verify_angle_relation(l, h);
  CHECK(std::abs(r.angle - pi / 6) < 1e-9);
  CHECK(r.deviation < 1e-9);
  CHECK(verify_angle_relation(l, 0.0).angle == 0.0);
  CHECK(verify_angle_relation(l, 1e-8).angle < 1e-8);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double len = 0.1 + 6 * u(rng);
    const double seam = len * u(rng);
    CHECK(verify_angle_relation(len, seam).deviation < 1e-9);
  }
  CHECK(kind_of([] { verify_angle_relation(1.0, 2.0); }) == ErrorKind::kInvalidTriangle);
  CHECK(kind_of([] { verify_angle_relation(1.0, -0.5); }) == ErrorKind::kInvalidTriangle);
}
