#include "curvalign/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "curvalign/spline.hpp"

namespace curvalign {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Uniform double in [-1, 1) built from the top 53 bits of the engine output,
// so node lists are bit-identical across platforms for a given seed.
double uniform_pm1(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

Curve polar_curve(std::size_t n, const std::function<double(double)>& radius) {
  Curve c;
  c.nodes.resize(n);
  for (std::size_t l = 0; l < n; ++l) {
    const double phi = kTwoPi * static_cast<double>(l) / static_cast<double>(n);
    const double r = radius(phi);
    if (!(r > 0.0)) throw std::invalid_argument("gen_curve: non-positive radius");
    c.nodes[l] = Point2(r * std::cos(phi), r * std::sin(phi));
  }
  return c;
}

}  // namespace

CurveFamily parse_family(const std::string& name) {
  if (name == "circle") return CurveFamily::circle;
  if (name == "superellipse") return CurveFamily::superellipse;
  if (name == "hippopede") return CurveFamily::hippopede;
  if (name == "bumps") return CurveFamily::bumps;
  if (name == "limacon") return CurveFamily::limacon;
  if (name == "clover") return CurveFamily::clover;
  if (name == "fourier_random") return CurveFamily::fourier_random;
  throw std::invalid_argument("unknown curve family: " + name);
}

std::string family_name(CurveFamily f) {
  switch (f) {
    case CurveFamily::circle: return "circle";
    case CurveFamily::superellipse: return "superellipse";
    case CurveFamily::hippopede: return "hippopede";
    case CurveFamily::bumps: return "bumps";
    case CurveFamily::limacon: return "limacon";
    case CurveFamily::clover: return "clover";
    case CurveFamily::fourier_random: return "fourier_random";
  }
  throw std::invalid_argument("unknown curve family");
}

Curve gen_curve(CurveFamily f, std::size_t n, std::uint64_t seed, int harmonics) {
  if (n < 4) throw std::invalid_argument("gen_curve: need at least 4 nodes");
  switch (f) {
    case CurveFamily::circle:
      return polar_curve(n, [](double) { return 1.0; });
    case CurveFamily::superellipse: {
      constexpr double a = 1.0, b = 0.6, p = 4.0;
      Curve c;
      c.nodes.resize(n);
      for (std::size_t l = 0; l < n; ++l) {
        const double phi = kTwoPi * static_cast<double>(l) / static_cast<double>(n);
        const double cc = std::cos(phi);
        const double ss = std::sin(phi);
        c.nodes[l] = Point2(a * std::copysign(std::pow(std::abs(cc), 2.0 / p), cc),
                            b * std::copysign(std::pow(std::abs(ss), 2.0 / p), ss));
      }
      return c;
    }
    case CurveFamily::hippopede: {
      constexpr double a = 1.0, b = 0.9;
      return polar_curve(
          n, [](double phi) { return std::sqrt(4.0 * b * (a - b * std::sin(phi) * std::sin(phi))); });
    }
    case CurveFamily::bumps:
      return polar_curve(n, [](double phi) { return 1.0 + 0.2 * std::sin(6.0 * phi); });
    case CurveFamily::limacon:
      return polar_curve(n, [](double phi) { return 0.75 + 0.5 * std::cos(phi); });
    case CurveFamily::clover:
      return polar_curve(n, [](double phi) { return 1.0 + 0.4 * std::cos(4.0 * phi); });
    case CurveFamily::fourier_random: {
      if (harmonics < 1) throw std::invalid_argument("gen_curve: harmonics must be >= 1");
      std::mt19937_64 rng(seed);
      std::vector<double> ak(static_cast<std::size_t>(harmonics));
      std::vector<double> bk(static_cast<std::size_t>(harmonics));
      for (int k = 0; k < harmonics; ++k) {
        ak[static_cast<std::size_t>(k)] = uniform_pm1(rng);
        bk[static_cast<std::size_t>(k)] = uniform_pm1(rng);
      }
      // Coefficient scale 0.3 k^{-2} keeps the radius positive for any draw:
      // sum_k 0.3 sqrt(2) k^{-2} < 0.3 * 1.415 * 1.645 < 0.7.
      return polar_curve(n, [&](double phi) {
        double r = 1.0;
        for (int k = 1; k <= harmonics; ++k) {
          const double w = 0.3 / (static_cast<double>(k) * static_cast<double>(k));
          r += w * (ak[static_cast<std::size_t>(k - 1)] * std::cos(k * phi) +
                    bk[static_cast<std::size_t>(k - 1)] * std::sin(k * phi));
        }
        return r;
      });
    }
  }
  throw std::invalid_argument("gen_curve: unknown family");
}

double gamma1_warp(double t) { return t + 0.025 * std::sin(4.0 * std::numbers::pi * t); }

double gamma2_warp(double t) { return t + 1.6 * t * t * (t - 1.0) * (t - 1.0); }

Curve transform_curve(const Curve& c, double start_shift, double theta,
                      const std::function<double(double)>& warp) {
  validate_curve(c, 4);
  if (!(start_shift >= 0.0 && start_shift < 1.0))
    throw std::invalid_argument("transform_curve: start_shift must be in [0,1)");
  const std::size_t n = c.size();

  std::vector<double> g(n + 1);
  for (std::size_t l = 0; l <= n; ++l) {
    const double t = static_cast<double>(l) / static_cast<double>(n);
    g[l] = warp ? warp(t) : t;
  }
  if (std::abs(g[0]) > 1e-12 || std::abs(g[n] - 1.0) > 1e-12)
    throw std::invalid_argument("transform_curve: warp must fix the endpoints 0 and 1");
  for (std::size_t l = 0; l < n; ++l) {
    if (g[l + 1] <= g[l]) throw std::invalid_argument("transform_curve: warp must be monotone");
  }

  std::vector<double> xs(n + 1), px(n + 1), py(n + 1);
  for (std::size_t l = 0; l < n; ++l) {
    xs[l] = static_cast<double>(l) / static_cast<double>(n);
    px[l] = c[l].x;
    py[l] = c[l].y;
  }
  xs[n] = 1.0;
  px[n] = c[0].x;
  py[n] = c[0].y;
  const PeriodicCubicSpline sx(xs, px);
  const PeriodicCubicSpline sy(xs, py);

  Curve out;
  out.nodes.resize(n);
  for (std::size_t l = 0; l < n; ++l) {
    const double u = wrap_unit(g[l] - start_shift);
    out.nodes[l] = rotate_ccw(Point2(sx.eval(u), sy.eval(u)), theta);
  }
  return out;
}

}  // namespace curvalign
