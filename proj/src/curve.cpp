#include "curvalign/curve.hpp"

#include <cmath>
#include <stdexcept>

#include "curvalign/spline.hpp"

namespace curvalign {

void validate_curve(const Curve& c, std::size_t min_nodes) {
  if (c.size() < min_nodes) throw std::invalid_argument("curve: too few nodes");
  for (const Point2& p : c.nodes) {
    if (!p.finite()) throw std::invalid_argument("curve: non-finite node");
  }
}

double curve_length(const Curve& c) {
  validate_curve(c);
  const std::size_t n = c.size();
  double len = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    len += (c[(i + 1) % n] - c[i]).norm();
  }
  return len;
}

Point2 centroid(const Curve& c) {
  validate_curve(c);
  Point2 sum;
  for (const Point2& p : c.nodes) sum += p;
  return (1.0 / static_cast<double>(c.size())) * sum;
}

Curve center_curve(const Curve& c) {
  const Point2 g = centroid(c);
  Curve out = c;
  for (Point2& p : out.nodes) p -= g;
  return out;
}

Curve normalize_length(const Curve& c) {
  const double len = curve_length(c);
  if (len <= 0.0) throw std::invalid_argument("curve: zero length");
  Curve out = c;
  const double s = 1.0 / len;
  for (Point2& p : out.nodes) p = s * p;
  return out;
}

ArcLengthParams arc_length_params(const Curve& c) {
  validate_curve(c);
  const std::size_t n = c.size();
  ArcLengthParams out;
  out.s.resize(n + 1);
  out.s[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = (c[(i + 1) % n] - c[i]).norm();
    if (d <= 0.0) throw std::invalid_argument("curve: coincident adjacent nodes");
    out.s[i + 1] = out.s[i] + d;
  }
  out.total_length = out.s[n];
  for (double& v : out.s) v /= out.total_length;
  out.s[n] = 1.0;
  return out;
}

Curve resample_uniform(const Curve& c, std::size_t n_out) {
  validate_curve(c, 4);
  if (n_out < 8) throw std::invalid_argument("resample: need at least 8 output nodes");
  const ArcLengthParams ap = arc_length_params(c);
  const std::size_t n = c.size();

  std::vector<double> xs(n + 1), ys(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = c[i].x;
    ys[i] = c[i].y;
  }
  xs[n] = c[0].x;
  ys[n] = c[0].y;

  const PeriodicCubicSpline sx(ap.s, xs);
  const PeriodicCubicSpline sy(ap.s, ys);

  Curve out;
  out.nodes.resize(n_out);
  for (std::size_t l = 0; l < n_out; ++l) {
    const double t = static_cast<double>(l) / static_cast<double>(n_out);
    out.nodes[l] = Point2(sx.eval(t), sy.eval(t));
  }
  return out;
}

Curve preprocess(const Curve& c, std::size_t n_out, bool resample) {
  Curve out = resample ? resample_uniform(c, n_out) : c;
  out = center_curve(out);
  return normalize_length(out);
}

}  // namespace curvalign
