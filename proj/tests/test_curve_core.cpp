#include "doctest.h"

#include <cmath>
#include <vector>

#include "curvalign/curve.hpp"
#include "curvalign/spline.hpp"
#include "curvalign/synthetic.hpp"

using namespace curvalign;

namespace {

const double kPi = 3.14159265358979323846;

Curve unit_square() {
  Curve c;
  c.nodes = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  return c;
}

Curve regular_polygon(std::size_t n, double radius = 1.0) {
  Curve c;
  c.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double phi = 2.0 * kPi * double(i) / double(n);
    c.nodes[i] = {radius * std::cos(phi), radius * std::sin(phi)};
  }
  return c;
}

double max_abs(double a, double b) { return std::fabs(a - b); }

}  // namespace

TEST_CASE("periodic spline reproduces knot values exactly") {
  std::vector<double> x = {0.0, 0.2, 0.45, 0.7, 1.0};
  std::vector<double> y = {1.0, -0.5, 2.0, 0.25, 1.0};
  PeriodicCubicSpline s(x, y);
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    CHECK(s.eval(x[i]) == doctest::Approx(y[i]).epsilon(1e-14));
  // periodic wrap: the value at period start equals the value at period end
  CHECK(s.eval(0.0) == doctest::Approx(s.eval(1.0)).epsilon(1e-14));
}

TEST_CASE("periodic spline approximates a smooth periodic function") {
  const std::size_t n = 64;
  std::vector<double> x(n + 1), y(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    x[i] = double(i) / double(n);
    y[i] = std::sin(2.0 * kPi * x[i]);
  }
  PeriodicCubicSpline s(x, y);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    double t = double(k) / 1000.0;
    worst = std::max(worst, max_abs(s.eval(t), std::sin(2.0 * kPi * t)));
  }
  CHECK(worst < 1e-5);
  // derivative is periodic across the seam
  CHECK(s.derivative(0.0) == doctest::Approx(s.derivative(1.0 - 1e-12)).epsilon(1e-6));
}

TEST_CASE("periodic spline rejects bad knot sequences") {
  std::vector<double> x = {0.0, 0.5, 0.25, 0.75};
  std::vector<double> y = {0.0, 1.0, 2.0, 3.0};
  CHECK_THROWS_AS(PeriodicCubicSpline(x, y), std::invalid_argument);
  std::vector<double> tiny_x = {0.0, 1.0};
  std::vector<double> tiny_y = {0.0, 1.0};
  CHECK_THROWS_AS(PeriodicCubicSpline(tiny_x, tiny_y), std::invalid_argument);
}

TEST_CASE("curve_length on polygons") {
  CHECK(curve_length(unit_square()) == doctest::Approx(4.0).epsilon(1e-15));

  // perimeter of the regular 256-gon inscribed in the unit circle
  Curve gon = regular_polygon(256);
  CHECK(curve_length(gon) == doctest::Approx(512.0 * std::sin(kPi / 256.0)).epsilon(1e-13));

  // homogeneity under scaling
  Curve scaled = unit_square();
  for (auto& p : scaled.nodes) p = 2.5 * p;
  CHECK(curve_length(scaled) == doctest::Approx(2.5 * 4.0).epsilon(1e-13));
}

TEST_CASE("centroid and center_curve") {
  Curve c;
  c.nodes = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  Point2 g = centroid(c);
  CHECK(g.x == doctest::Approx(1.0));
  CHECK(g.y == doctest::Approx(1.0));

  Curve centered = center_curve(c);
  CHECK(centered.nodes[0].x == doctest::Approx(-1.0));
  CHECK(centered.nodes[2].y == doctest::Approx(1.0));
  Point2 m = centroid(centered);
  CHECK(std::hypot(m.x, m.y) < 1e-12);

  // idempotent
  Curve twice = center_curve(centered);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(twice.nodes[i].x == doctest::Approx(centered.nodes[i].x).epsilon(1e-15));
    CHECK(twice.nodes[i].y == doctest::Approx(centered.nodes[i].y).epsilon(1e-15));
  }
}

TEST_CASE("normalize_length gives unit perimeter") {
  Curve c = normalize_length(unit_square());
  CHECK(curve_length(c) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c.nodes[1].x == doctest::Approx(0.25).epsilon(1e-14));

  Curve b = normalize_length(gen_curve(CurveFamily::bumps, 128));
  CHECK(curve_length(b) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("center and normalize commute") {
  Curve c = gen_curve(CurveFamily::limacon, 64);
  Curve a = normalize_length(center_curve(c));
  Curve b = center_curve(normalize_length(c));
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(std::fabs(a.nodes[i].x - b.nodes[i].x) < 1e-12);
    CHECK(std::fabs(a.nodes[i].y - b.nodes[i].y) < 1e-12);
  }
}

TEST_CASE("arc_length_params of simple polygons") {
  ArcLengthParams sq = arc_length_params(unit_square());
  REQUIRE(sq.s.size() == 5);
  const double expect_sq[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (int i = 0; i < 5; ++i) CHECK(sq.s[i] == doctest::Approx(expect_sq[i]).epsilon(1e-15));
  CHECK(sq.total_length == doctest::Approx(4.0));

  Curve rect;
  rect.nodes = {{0, 0}, {2, 0}, {2, 1}, {0, 1}};
  ArcLengthParams rp = arc_length_params(rect);
  const double expect_rect[5] = {0.0, 1.0 / 3.0, 0.5, 5.0 / 6.0, 1.0};
  for (int i = 0; i < 5; ++i) CHECK(rp.s[i] == doctest::Approx(expect_rect[i]).epsilon(1e-15));
}

TEST_CASE("arc_length_params rejects coincident nodes") {
  Curve c;
  c.nodes = {{0, 0}, {1, 0}, {1, 0}, {0, 1}};
  CHECK_THROWS_AS(arc_length_params(c), std::invalid_argument);
}

TEST_CASE("arc length parameters strictly increase") {
  Curve c = gen_curve(CurveFamily::clover, 200);
  ArcLengthParams ap = arc_length_params(c);
  for (std::size_t i = 1; i < ap.s.size(); ++i) CHECK(ap.s[i] > ap.s[i - 1]);
  CHECK(ap.s.front() == 0.0);
  CHECK(ap.s.back() == 1.0);
}

TEST_CASE("resample_uniform equalizes chord lengths") {
  // circle sampled at strongly non-uniform angles
  const std::size_t n_in = 64;
  Curve c;
  c.nodes.resize(n_in);
  for (std::size_t i = 0; i < n_in; ++i) {
    double t = double(i) / double(n_in);
    double u = t + 0.15 * t * (1.0 - t);  // monotone distortion
    c.nodes[i] = {std::cos(2 * kPi * u), std::sin(2 * kPi * u)};
  }
  Curve r = resample_uniform(c, 256);
  REQUIRE(r.size() == 256);
  double cmin = 1e300, cmax = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    double ch = (r.nodes[(i + 1) % r.size()] - r.nodes[i]).norm();
    cmin = std::min(cmin, ch);
    cmax = std::max(cmax, ch);
  }
  CHECK((cmax - cmin) / cmax < 0.02);
}

TEST_CASE("resample_uniform reproduces an already uniform smooth curve") {
  Curve c = regular_polygon(128);
  Curve r = resample_uniform(c, 128);
  double worst = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i)
    worst = std::max(worst, (r.nodes[i] - c.nodes[i]).norm());
  CHECK(worst < 1e-4);

  // resampling twice changes little
  Curve rr = resample_uniform(r, 128);
  double drift = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i)
    drift = std::max(drift, (rr.nodes[i] - r.nodes[i]).norm());
  CHECK(drift < 1e-3 * 2.0);  // small fraction of the diameter
}

TEST_CASE("resampled length converges to the smooth perimeter") {
  Curve c = gen_curve(CurveFamily::circle, 256);
  double prev_err = 1e300;
  for (std::size_t n : {16, 32, 64, 128}) {
    double err = std::fabs(curve_length(resample_uniform(c, n)) - 2.0 * kPi);
    CHECK(err < prev_err);
    prev_err = err;
  }
}

TEST_CASE("resample_uniform enforces minimum output size") {
  CHECK_THROWS_AS(resample_uniform(unit_square(), 4), std::invalid_argument);
  CHECK_NOTHROW(resample_uniform(unit_square(), 8));
}

TEST_CASE("validate_curve rejects degenerate input") {
  Curve c;
  c.nodes = {{0, 0}, {1, 0}};
  CHECK_THROWS_AS(validate_curve(c), std::invalid_argument);
  Curve nan_curve;
  nan_curve.nodes = {{0, 0}, {1, 0}, {std::nan(""), 1}, {0, 1}};
  CHECK_THROWS_AS(validate_curve(nan_curve), std::invalid_argument);
}

TEST_CASE("preprocess composes resample, center, normalize") {
  Curve c = gen_curve(CurveFamily::hippopede, 100);
  Curve p = preprocess(c, 128);
  REQUIRE(p.size() == 128);
  Point2 m = centroid(p);
  CHECK(std::hypot(m.x, m.y) < 1e-12);
  CHECK(curve_length(p) == doctest::Approx(1.0).epsilon(1e-12));

  Curve manual = normalize_length(center_curve(resample_uniform(c, 128)));
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(p.nodes[i].x == manual.nodes[i].x);
    CHECK(p.nodes[i].y == manual.nodes[i].y);
  }

  // resample=false keeps the node count
  Curve q = preprocess(c, 64, false);
  CHECK(q.size() == 100);
}
