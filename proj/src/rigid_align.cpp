#include "curvalign/rigid_align.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "curvalign/fft.hpp"

namespace curvalign {

namespace {

constexpr double kTieRelTol = 1e-12;

void check_pair(std::span<const Point2> c1, std::span<const Point2> c2) {
  if (c1.size() != c2.size()) throw std::invalid_argument("align: node count mismatch");
  if (c1.size() < 4) throw std::invalid_argument("align: need at least 4 nodes");
}

double sum_norm2(std::span<const Point2> c) {
  double s = 0.0;
  for (const Point2& p : c) s += p.norm2();
  return s;
}

// Scans the per-shift optimal traces, picks the smallest shift within the tie
// tolerance of the maximum, and fills the energy via the trace identity.
RigidAlignment pick_best(const std::vector<Mat2>& corr, double s1, double s2, std::size_t n) {
  auto opt_trace = [](const Mat2& A) {
    return std::hypot(A.a11 + A.a22, A.a12 - A.a21);
  };
  double best = -std::numeric_limits<double>::infinity();
  for (const Mat2& A : corr) {
    const double tr = opt_trace(A);
    if (tr > best) best = tr;
  }
  const double tol = kTieRelTol * std::max(1.0, std::abs(best));
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (opt_trace(corr[i]) >= best - tol) {
      m = i;
      break;
    }
  }

  const RotationFit fit = optimal_rotation_svd(corr[m]);
  RigidAlignment out;
  out.shift = m;
  out.t0 = static_cast<double>(m) / static_cast<double>(n);
  out.rotation = fit.rotation;
  out.trace = fit.trace;
  out.degenerate = fit.degenerate;
  const double h = 1.0 / static_cast<double>(n);
  double e = h * (s1 + s2) - 2.0 * h * fit.trace;
  if (e < 0.0) e = 0.0;
  out.energy = e;
  return out;
}

}  // namespace

Mat2 cross_correlation_matrix(std::span<const Point2> c1, std::span<const Point2> c2,
                              std::size_t shift) {
  check_pair(c1, c2);
  const std::size_t n = c1.size();
  if (shift >= n) throw std::invalid_argument("align: shift out of range");
  Mat2 A;
  for (std::size_t l = 0; l < n; ++l) {
    const Point2& p = c1[l];
    const Point2& q = c2[(l + shift) % n];
    A.a11 += p.x * q.x;
    A.a12 += p.x * q.y;
    A.a21 += p.y * q.x;
    A.a22 += p.y * q.y;
  }
  return A;
}

RotationFit optimal_rotation_svd(const Mat2& A) {
  if (!A.finite()) throw std::invalid_argument("rotation: non-finite correlation matrix");
  Eigen::Matrix2d M;
  M << A.a11, A.a12, A.a21, A.a22;
  if (M.norm() == 0.0) {
    return RotationFit{Rotation2(0.0), 0.0, true};
  }
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix2d U = svd.matrixU();
  const Eigen::Matrix2d V = svd.matrixV();
  const double sign = (U.determinant() * V.determinant() > 0.0) ? 1.0 : -1.0;
  Eigen::Matrix2d D = Eigen::Matrix2d::Identity();
  D(1, 1) = sign;
  const Eigen::Matrix2d R = U * D * V.transpose();

  RotationFit fit;
  // R(theta) = [[cos, sin], [-sin, cos]]
  fit.rotation = Rotation2(std::atan2(R(0, 1), R(0, 0)));
  fit.trace = svd.singularValues()(0) + sign * svd.singularValues()(1);
  return fit;
}

RotationFit optimal_rotation_closed_form(const Mat2& A) {
  if (!A.finite()) throw std::invalid_argument("rotation: non-finite correlation matrix");
  // tr(R(theta) A^T) = (A11 + A22) cos(theta) + (A12 - A21) sin(theta)
  const double c = A.a11 + A.a22;
  const double s = A.a12 - A.a21;
  RotationFit fit;
  if (c == 0.0 && s == 0.0) {
    fit.rotation = Rotation2(0.0);
    fit.trace = 0.0;
    fit.degenerate = true;
    return fit;
  }
  fit.rotation = Rotation2(std::atan2(s, c));
  fit.trace = std::hypot(c, s);
  return fit;
}

Rotation2 optimal_rotation_fixed_start(const Curve& c1, const Curve& c2) {
  const Mat2 A = cross_correlation_matrix(c1.nodes, c2.nodes, 0);
  return optimal_rotation_svd(A).rotation;
}

std::vector<Mat2> correlation_all_shifts_naive(std::span<const Point2> c1,
                                               std::span<const Point2> c2) {
  check_pair(c1, c2);
  const std::size_t n = c1.size();
  std::vector<Mat2> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    Mat2 A;
    for (std::size_t l = 0; l < n; ++l) {
      const Point2& p = c1[l];
      const std::size_t lm = l + m < n ? l + m : l + m - n;
      const Point2& q = c2[lm];
      A.a11 += p.x * q.x;
      A.a12 += p.x * q.y;
      A.a21 += p.y * q.x;
      A.a22 += p.y * q.y;
    }
    out[m] = A;
  }
  return out;
}

std::vector<Mat2> correlation_all_shifts_fft(std::span<const Point2> c1,
                                             std::span<const Point2> c2) {
  check_pair(c1, c2);
  const std::size_t n = c1.size();

  std::vector<double> x1(n), y1(n), x2(n), y2(n);
  for (std::size_t l = 0; l < n; ++l) {
    x1[l] = c1[l].x;
    y1[l] = c1[l].y;
    x2[l] = c2[l].x;
    y2[l] = c2[l].y;
  }

  // A_kj(m) = sum_l c1[l]_k c2[l+m]_j = IDFT(conj(DFT(c1_k)) .* DFT(c2_j))[m].
  // The four (k, j) pairs share the two forward transforms of each input.
  const auto fx1 = real_dft(x1);
  const auto fy1 = real_dft(y1);
  const auto fx2 = real_dft(x2);
  const auto fy2 = real_dft(y2);

  const std::size_t nc = fx1.size();
  auto correlate = [&](const std::vector<std::complex<double>>& fa,
                       const std::vector<std::complex<double>>& fb) {
    std::vector<std::complex<double>> prod(nc);
    for (std::size_t k = 0; k < nc; ++k) prod[k] = std::conj(fa[k]) * fb[k];
    return real_idft(prod, n);
  };

  const std::vector<double> a11 = correlate(fx1, fx2);
  const std::vector<double> a12 = correlate(fx1, fy2);
  const std::vector<double> a21 = correlate(fy1, fx2);
  const std::vector<double> a22 = correlate(fy1, fy2);

  std::vector<Mat2> out(n);
  for (std::size_t m = 0; m < n; ++m) out[m] = Mat2{a11[m], a12[m], a21[m], a22[m]};
  return out;
}

double mismatch_energy(std::span<const Point2> c1, std::span<const Point2> c2,
                       std::size_t shift, const Rotation2& rotation) {
  check_pair(c1, c2);
  const std::size_t n = c1.size();
  if (shift >= n) throw std::invalid_argument("align: shift out of range");
  double e = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    const Point2 d = c1[l] - rotation.apply(c2[(l + shift) % n]);
    e += d.norm2();
  }
  return e / static_cast<double>(n);
}

RigidAlignment align_naive(std::span<const Point2> c1, std::span<const Point2> c2) {
  check_pair(c1, c2);
  const std::vector<Mat2> corr = correlation_all_shifts_naive(c1, c2);
  return pick_best(corr, sum_norm2(c1), sum_norm2(c2), c1.size());
}

RigidAlignment align_fft(std::span<const Point2> c1, std::span<const Point2> c2) {
  check_pair(c1, c2);
  const std::vector<Mat2> corr = correlation_all_shifts_fft(c1, c2);
  return pick_best(corr, sum_norm2(c1), sum_norm2(c2), c1.size());
}

}  // namespace curvalign
