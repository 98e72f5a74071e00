#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "uavmission/channel.hpp"
#include "uavmission/errors.hpp"
#include "uavmission/flight.hpp"
#include "uavmission/quadrature.hpp"

using namespace uavmission;
using namespace uavmission::testing;

namespace {

const Point2D kGbs{20, -500};

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_CASE("distance3d") {
  const RadioParams r = reference_radio();
  CHECK(distance3d(kGbs, kGbs, r) == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(distance3d({kGbs.x + 100, kGbs.y}, kGbs, r) ==
        doctest::Approx(100.0 * std::sqrt(2.0)).epsilon(1e-14));
  // (120, 100) horizontal offset, 100 m height: sqrt(34400).
  CHECK(distance3d({-100, -400}, kGbs, r) == doctest::Approx(185.47236990991407).epsilon(1e-14));
  CHECK(distance3d({5e3, -7e3}, kGbs, r) >= r.height_diff_m);
}

TEST_CASE("rate_bps reference values") {
  const RadioParams r = reference_radio();
  // SNR 1e4 at the GBS, 5000 at 100 m horizontal offset (high-precision reference).
  CHECK(rel_close(rate_bps(kGbs, kGbs, r), 13287856.641840544, 1e-13));
  CHECK(rel_close(rate_bps({kGbs.x, kGbs.y + 100}, kGbs, r), 12288000.889707573, 1e-13));

  RadioParams silent = r;
  silent.bandwidth_hz = 0.0;
  CHECK(rate_bps({3, 4}, kGbs, silent) == 0.0);
}

TEST_CASE("rate_bps strictly decreasing in horizontal range") {
  const RadioParams r = reference_radio();
  double prev = rate_bps(kGbs, kGbs, r);
  for (int k = 1; k <= 400; ++k) {
    const double radius = 5.0 * k;
    const double angle = 0.37 * k;
    const double rate = rate_bps({kGbs.x + radius * std::cos(angle), kGbs.y + radius * std::sin(angle)},
                                 kGbs, r);
    CHECK(rate > 0.0);
    CHECK(rate < prev);
    prev = rate;
  }
}

TEST_CASE("unit conversions") {
  CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(dbm_to_watts(-110.0) == doctest::Approx(1e-14).epsilon(1e-12));
  CHECK(db_to_linear(-60.0) == doctest::Approx(1e-6).epsilon(1e-12));
}

TEST_CASE("RadioParams validation") {
  CHECK_NOTHROW(reference_radio().validate());
  RadioParams r = reference_radio();
  r.height_diff_m = 0.0;
  CHECK_THROWS_AS(r.validate(), InvalidInput);
  r = reference_radio();
  r.noise_w = -1.0;
  CHECK_THROWS_AS(r.validate(), InvalidInput);
  r = reference_radio();
  r.bandwidth_hz = std::nan("");
  CHECK_THROWS_AS(r.validate(), InvalidInput);
}

TEST_CASE("adaptive Simpson on known integrals") {
  CHECK(integrate_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(integrate_simpson([](double x) { return std::exp(x); }, 0.0, 3.0) ==
        doctest::Approx(std::exp(3.0) - 1.0).epsilon(1e-10));
  CHECK(integrate_simpson([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("volume_along examples") {
  const RadioParams r = reference_radio();

  SUBCASE("hover is rate times duration") {
    const double v = volume_along(FlightPrimitive::hover(kGbs, 10.0), kGbs, r);
    CHECK(rel_close(v, 132878566.41840544, 1e-13));
  }
  SUBCASE("zero-length segment delivers nothing") {
    CHECK(volume_along(FlightPrimitive::segment({5, 5}, {5, 5}, 10.0), kGbs, r) == 0.0);
  }
  SUBCASE("a1 -> a2 at 10 m/s") {
    const FlightPrimitive seg = FlightPrimitive::segment({0, 0}, {100, 100}, 10.0);
    const double v = volume_along(seg, kGbs, r);
    CHECK(rel_close(v, riemann_volume(seg, kGbs, r), 1e-6));
    // 30-digit adaptive quadrature reference.
    CHECK(rel_close(v, 117702788.67683684, 1e-9));
  }
}

TEST_CASE("volume_along agrees with the closed-form line integral") {
  std::mt19937_64 rng(7);
  const RadioParams r = reference_radio();
  for (int k = 0; k < 200; ++k) {
    const Point2D a = random_point(rng, 1000.0);
    const Point2D b = random_point(rng, 1000.0);
    const Point2D g = random_point(rng, 500.0);
    const double v = volume_along(FlightPrimitive::segment(a, b, 12.5), g, r);
    CHECK(rel_close(v, closed_form_segment_volume(a, b, 12.5, g, r), 1e-9));
  }
}

TEST_CASE("volume_along is reversal invariant and additive") {
  std::mt19937_64 rng(11);
  const RadioParams r = reference_radio();
  for (int k = 0; k < 50; ++k) {
    const Point2D a = random_point(rng, 1000.0);
    const Point2D b = random_point(rng, 1000.0);
    const double whole = volume_along(FlightPrimitive::segment(a, b, 10.0), kGbs, r);
    const double reversed = volume_along(FlightPrimitive::segment(b, a, 10.0), kGbs, r);
    CHECK(rel_close(whole, reversed, 1e-9));

    const double s = std::uniform_real_distribution<double>(0.01, 0.99)(rng);
    const Point2D mid = lerp(a, b, s);
    const double parts = volume_along(FlightPrimitive::segment(a, mid, 10.0), kGbs, r) +
                         volume_along(FlightPrimitive::segment(mid, b, 10.0), kGbs, r);
    CHECK(rel_close(whole, parts, 1e-9));
  }
}

TEST_CASE("volume_along_path") {
  const RadioParams r = reference_radio();
  const Point2D a1{0, 0};
  const Point2D a2{100, 100};

  CHECK(volume_along_path({}, kGbs, r) == 0.0);

  const std::vector<FlightPrimitive> hover{FlightPrimitive::hover(a1, 3.0)};
  CHECK(volume_along_path(hover, kGbs, r) == volume_along(hover[0], kGbs, r));

  const std::vector<FlightPrimitive> via_g{FlightPrimitive::segment(a1, kGbs, 10.0),
                                           FlightPrimitive::segment(kGbs, a2, 10.0)};
  const Point2D mid = lerp(a1, kGbs, 0.5);
  const std::vector<FlightPrimitive> finer{FlightPrimitive::segment(a1, mid, 10.0),
                                           FlightPrimitive::segment(mid, kGbs, 10.0),
                                           FlightPrimitive::segment(kGbs, a2, 10.0)};
  CHECK(rel_close(volume_along_path(via_g, kGbs, r), volume_along_path(finer, kGbs, r), 1e-9));

  const std::vector<FlightPrimitive> broken{FlightPrimitive::segment(a1, a2, 10.0),
                                            FlightPrimitive::segment({100, 100.001}, a1, 10.0)};
  CHECK_THROWS_AS(volume_along_path(broken, kGbs, r), NonContiguousPath);
}

TEST_CASE("FlightPrimitive clipping and positions") {
  const FlightPrimitive seg = FlightPrimitive::segment({0, 0}, {100, 0}, 10.0);
  CHECK(seg.duration_s == doctest::Approx(10.0));
  CHECK(seg.position_at(2.5).x == doctest::Approx(25.0));
  CHECK(seg.position_at(-1.0) == Point2D{0, 0});
  CHECK(seg.position_at(99.0) == Point2D{100, 0});
  const FlightPrimitive part = seg.clipped(2.0, 5.0);
  CHECK(part.from.x == doctest::Approx(20.0));
  CHECK(part.to.x == doctest::Approx(50.0));
  CHECK(part.duration_s == doctest::Approx(3.0));
}
