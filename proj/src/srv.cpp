#include "curvalign/srv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace curvalign {

namespace {

constexpr double kGridSnap = 1e-9;
constexpr double kMonoTol = 1e-12;

// Periodic linear interpolation of samples at t_j = j/N, with snapping so
// that exactly-on-grid evaluation points return samples untouched.
Point2 interp_periodic(const std::vector<Point2>& q, double u) {
  const std::size_t n = q.size();
  double x = u * static_cast<double>(n);
  double i0f = std::floor(x);
  double frac = x - i0f;
  if (frac > 1.0 - kGridSnap) {
    i0f += 1.0;
    frac = 0.0;
  } else if (frac < kGridSnap) {
    frac = 0.0;
  }
  long i0 = static_cast<long>(i0f) % static_cast<long>(n);
  if (i0 < 0) i0 += static_cast<long>(n);
  if (frac == 0.0) return q[static_cast<std::size_t>(i0)];
  const std::size_t i1 = (static_cast<std::size_t>(i0) + 1) % n;
  const Point2& a = q[static_cast<std::size_t>(i0)];
  const Point2& b = q[i1];
  return Point2(a.x + frac * (b.x - a.x), a.y + frac * (b.y - a.y));
}

}  // namespace

double Reparameterization::eval(double t) const {
  const std::size_t n = grid_size();
  if (n == 0) throw std::invalid_argument("reparam: empty");
  if (t <= 0.0) return gamma.front();
  if (t >= 1.0) return gamma.back();
  const double x = t * static_cast<double>(n);
  const std::size_t i = std::min(static_cast<std::size_t>(x), n - 1);
  const double frac = x - static_cast<double>(i);
  return gamma[i] + frac * (gamma[i + 1] - gamma[i]);
}

Reparameterization identity_reparam(std::size_t n) {
  Reparameterization g;
  g.gamma.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) g.gamma[i] = static_cast<double>(i) / static_cast<double>(n);
  g.gamma[n] = 1.0;
  return g;
}

void validate_reparam(const Reparameterization& g) {
  const std::size_t n = g.grid_size();
  if (n < 2) throw std::invalid_argument("reparam: too few samples");
  if (std::abs(g.gamma.front()) > kMonoTol || std::abs(g.gamma.back() - 1.0) > kMonoTol)
    throw std::invalid_argument("reparam: endpoints must be 0 and 1");
  for (std::size_t i = 0; i < n; ++i) {
    if (g.gamma[i + 1] < g.gamma[i] - kMonoTol)
      throw std::invalid_argument("reparam: not monotone");
  }
}

SrvCurve srv_transform(const Curve& c) {
  validate_curve(c, 8);
  const std::size_t n = c.size();
  const double nn = static_cast<double>(n);
  const double eps = 1e-8 * nn;

  SrvCurve out;
  out.h = 1.0 / nn;
  out.q.resize(n);
  for (std::size_t l = 0; l < n; ++l) {
    const Point2& next = c[(l + 1) % n];
    const Point2& prev = c[(l + n - 1) % n];
    const Point2 d = (nn / 2.0) * (next - prev);
    const double mag = d.norm();
    out.q[l] = (mag < eps) ? Point2() : (1.0 / std::sqrt(mag)) * d;
  }
  return out;
}

SrvCurve srv_center(const SrvCurve& q) {
  if (q.q.empty()) throw std::invalid_argument("srv: empty");
  Point2 mean;
  for (const Point2& p : q.q) mean += p;
  mean = (1.0 / static_cast<double>(q.size())) * mean;
  SrvCurve out = q;
  for (Point2& p : out.q) p -= mean;
  return out;
}

SrvCurve apply_srv_action(const SrvCurve& q, double t0, const Rotation2& rotation,
                          const Reparameterization& gamma) {
  const std::size_t n = q.size();
  if (n == 0) throw std::invalid_argument("srv: empty");
  if (gamma.grid_size() != n) throw std::invalid_argument("srv: grid size mismatch");
  validate_reparam(gamma);

  SrvCurve out;
  out.h = q.h;
  out.q.resize(n);
  const double nn = static_cast<double>(n);
  for (std::size_t l = 0; l < n; ++l) {
    const double gdot = (gamma.gamma[l + 1] - gamma.gamma[l]) * nn;
    const double u = wrap_unit(t0 + gamma.gamma[l]);
    const Point2 s = interp_periodic(q.q, u);
    out.q[l] = std::sqrt(std::max(gdot, 0.0)) * rotation.apply(s);
  }
  return out;
}

double elastic_energy(const SrvCurve& q1, const SrvCurve& q2, double t0,
                      const Rotation2& rotation, const Reparameterization& gamma) {
  if (q1.size() != q2.size()) throw std::invalid_argument("srv: size mismatch");
  const SrvCurve w = apply_srv_action(q2, t0, rotation, gamma);
  double e = 0.0;
  for (std::size_t l = 0; l < q1.size(); ++l) e += (q1.q[l] - w.q[l]).norm2();
  return e / static_cast<double>(q1.size());
}

std::vector<std::pair<int, int>> dp_admissible_steps(int max_slope) {
  if (max_slope < 1) throw std::invalid_argument("dp: max_slope must be >= 1");
  std::vector<std::pair<int, int>> steps;
  for (int a = 1; a <= max_slope; ++a) {
    for (int b = 1; b <= max_slope; ++b) {
      if (std::gcd(a, b) == 1) steps.emplace_back(a, b);
    }
  }
  return steps;
}

namespace {

// Samples the integrand at every integer i in [i0, i0+a] along the segment of
// slope b/a, with q2 linearly interpolated. Endpoint samples carry weight 1/2
// so that chained steps reproduce the closed-curve trapezoid sum.
double step_cost(const std::vector<Point2>& q1, const std::vector<Point2>& q2, int i0, int j0,
                 int a, int b) {
  const std::size_t n = q1.size();
  const double slope = static_cast<double>(b) / static_cast<double>(a);
  const double sq = std::sqrt(slope);
  double cost = 0.0;
  for (int k = 0; k <= a; ++k) {
    const std::size_t i = static_cast<std::size_t>(i0 + k) % n;
    const int num = k * b;
    Point2 s;
    if (num % a == 0) {
      s = q2[static_cast<std::size_t>(j0 + num / a) % n];
    } else {
      const double pos = static_cast<double>(j0) + static_cast<double>(num) / static_cast<double>(a);
      const int base = static_cast<int>(pos);
      const double frac = pos - static_cast<double>(base);
      const Point2& u = q2[static_cast<std::size_t>(base) % n];
      const Point2& v = q2[static_cast<std::size_t>(base + 1) % n];
      s = Point2(u.x + frac * (v.x - u.x), u.y + frac * (v.y - u.y));
    }
    const Point2 d = q1[i] - sq * s;
    const double w = (k == 0 || k == a) ? 0.5 : 1.0;
    cost += w * d.norm2();
  }
  return cost / static_cast<double>(n);
}

}  // namespace

double dp_step_cost(const SrvCurve& q1, const SrvCurve& q2, int i0, int j0, int di, int dj) {
  if (q1.size() != q2.size()) throw std::invalid_argument("dp: size mismatch");
  if (di < 1 || dj < 1) throw std::invalid_argument("dp: step increments must be positive");
  return step_cost(q1.q, q2.q, i0, j0, di, dj);
}

DpResult dp_reparam(const SrvCurve& q1, const SrvCurve& q2, int max_slope) {
  if (q1.size() != q2.size()) throw std::invalid_argument("dp: size mismatch");
  const int n = static_cast<int>(q1.size());
  if (n < 8) throw std::invalid_argument("dp: need at least 8 samples");
  const auto steps = dp_admissible_steps(max_slope);
  const int W = max_slope;

  // Feasibility cone: (i, j) is reachable from (0,0) and can still reach
  // (N,N) only if both remaining slopes stay within [1/W, W].
  auto jmin = [&](int i) {
    const int lo1 = (i + W - 1) / W;
    const int lo2 = n - W * (n - i);
    return std::max({lo1, lo2, 0});
  };
  auto jmax = [&](int i) {
    const int hi1 = W * i;
    const int hi2 = n - (n - i + W - 1) / W;
    return std::min({hi1, hi2, n});
  };

  const double inf = std::numeric_limits<double>::infinity();
  const std::size_t stride = static_cast<std::size_t>(n) + 1;
  std::vector<double> dp(stride * stride, inf);
  std::vector<std::uint8_t> parent(stride * stride, 0xff);
  auto at = [stride](int i, int j) { return static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j); };

  dp[at(0, 0)] = 0.0;
  for (int i = 1; i <= n; ++i) {
    const int lo = jmin(i);
    const int hi = jmax(i);
    for (int j = lo; j <= hi; ++j) {
      double best = inf;
      std::uint8_t best_s = 0xff;
      for (std::size_t s = 0; s < steps.size(); ++s) {
        const int a = steps[s].first;
        const int b = steps[s].second;
        const int pi = i - a;
        const int pj = j - b;
        if (pi < 0 || pj < 0) continue;
        const double base = dp[at(pi, pj)];
        if (base == inf) continue;
        const double cand = base + step_cost(q1.q, q2.q, pi, pj, a, b);
        if (cand < best) {
          best = cand;
          best_s = static_cast<std::uint8_t>(s);
        }
      }
      dp[at(i, j)] = best;
      parent[at(i, j)] = best_s;
    }
  }

  if (dp[at(n, n)] == inf) throw std::runtime_error("dp: no admissible path");

  DpResult out;
  out.energy = dp[at(n, n)];
  out.gamma.gamma.assign(static_cast<std::size_t>(n) + 1, 0.0);

  int i = n, j = n;
  out.gamma.gamma[static_cast<std::size_t>(n)] = 1.0;
  while (i > 0) {
    const std::uint8_t s = parent[at(i, j)];
    if (s == 0xff) throw std::runtime_error("dp: broken backtrack");
    const int a = steps[s].first;
    const int b = steps[s].second;
    const int pi = i - a;
    const int pj = j - b;
    for (int k = 0; k < a; ++k) {
      const double jj = static_cast<double>(pj) +
                        static_cast<double>(k * b) / static_cast<double>(a);
      out.gamma.gamma[static_cast<std::size_t>(pi + k)] = jj / static_cast<double>(n);
    }
    i = pi;
    j = pj;
  }
  out.gamma.gamma[0] = 0.0;
  return out;
}

}  // namespace curvalign
