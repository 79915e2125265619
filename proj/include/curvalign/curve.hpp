#pragma once

#include <cstddef>
#include <vector>

#include "curvalign/geometry.hpp"

namespace curvalign {

// A closed planar curve sampled at N distinct nodes. The closing edge from
// nodes.back() to nodes.front() is implicit; the first node is never
// duplicated at the end.
struct Curve {
  std::vector<Point2> nodes;

  std::size_t size() const { return nodes.size(); }
  Point2& operator[](std::size_t i) { return nodes[i]; }
  const Point2& operator[](std::size_t i) const { return nodes[i]; }
};

// Chordal arc-length parameters of a closed curve: s has size N+1 with
// s[0] = 0, s[N] = 1, and s[i] the normalized cumulative polyline length
// up to node i (including the closing edge in the total).
struct ArcLengthParams {
  std::vector<double> s;
  double total_length = 0.0;
};

void validate_curve(const Curve& c, std::size_t min_nodes = 3);

// Total polyline length including the closing edge.
double curve_length(const Curve& c);

Point2 centroid(const Curve& c);

// Translates the curve so its vertex centroid is the origin.
Curve center_curve(const Curve& c);

// Scales the curve about the origin so the total length becomes 1.
Curve normalize_length(const Curve& c);

ArcLengthParams arc_length_params(const Curve& c);

// Periodic-cubic-spline resampling of the curve at n_out points uniformly
// spaced in normalized arc length: t_l = l / n_out.
Curve resample_uniform(const Curve& c, std::size_t n_out);

// resample (optional) -> center -> normalize, in that order.
Curve preprocess(const Curve& c, std::size_t n_out, bool resample = true);

}  // namespace curvalign
