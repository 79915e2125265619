#include "curvalign/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvalign {

namespace {

// Solves the cyclic tridiagonal system
//   b[i] u[i-1] + d[i] u[i] + a[i] u[i+1] = r[i],  indices mod n,
// where b[i] couples to the left neighbor and a[i] to the right one.
// Thomas algorithm on the interior plus a Sherman-Morrison correction for
// the two corner entries.
std::vector<double> solve_cyclic_tridiagonal(std::vector<double> b, std::vector<double> d,
                                             std::vector<double> a, std::vector<double> r) {
  const std::size_t n = d.size();
  if (n < 3) throw std::invalid_argument("cyclic tridiagonal system needs n >= 3");

  // A = T + u v^T with u = (g, 0, ..., 0, b[n-1])^T, v = (1, 0, ..., 0, a[n-1]/g)^T,
  // where g = -d[0]. T is then plain tridiagonal with modified corners.
  const double g = -d[0];
  std::vector<double> dd(d);
  dd[0] = d[0] - g;
  dd[n - 1] = d[n - 1] - a[n - 1] * b[0] / g;

  auto thomas = [&](std::vector<double> rhs) {
    std::vector<double> c(n, 0.0), sol(n, 0.0);
    double beta = dd[0];
    if (beta == 0.0) throw std::runtime_error("singular spline system");
    sol[0] = rhs[0] / beta;
    for (std::size_t i = 1; i < n; ++i) {
      c[i] = a[i - 1] / beta;
      beta = dd[i] - b[i] * c[i];
      if (beta == 0.0) throw std::runtime_error("singular spline system");
      sol[i] = (rhs[i] - b[i] * sol[i - 1]) / beta;
    }
    for (std::size_t i = n - 1; i-- > 0;) sol[i] -= c[i + 1] * sol[i + 1];
    return sol;
  };

  std::vector<double> u(n, 0.0);
  u[0] = g;
  u[n - 1] = b[n - 1];

  const std::vector<double> y = thomas(r);
  const std::vector<double> z = thomas(u);

  const double vy = y[0] + a[n - 1] / g * y[n - 1];
  const double vz = 1.0 + z[0] + a[n - 1] / g * z[n - 1];
  if (vz == 0.0) throw std::runtime_error("singular spline system");
  const double factor = vy / vz;

  std::vector<double> sol(n);
  for (std::size_t i = 0; i < n; ++i) sol[i] = y[i] - factor * z[i];
  return sol;
}

}  // namespace

PeriodicCubicSpline::PeriodicCubicSpline(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("spline: knot/value size mismatch");
  if (x.size() < 4) throw std::invalid_argument("spline: need at least 4 knots");
  const std::size_t n = x.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] < x[i + 1])) throw std::invalid_argument("spline: knots must be strictly increasing");
  }
  for (double v : y) {
    if (!std::isfinite(v)) throw std::invalid_argument("spline: non-finite value");
  }

  x_.assign(x.begin(), x.end());
  y_.assign(y.begin(), y.end());
  y_[n] = y_[0];  // periodic closing value

  // Cyclic system for the second derivatives m_0..m_{n-1}:
  //   h_{i-1}/6 m_{i-1} + (h_{i-1}+h_i)/3 m_i + h_i/6 m_{i+1}
  //     = (y_{i+1}-y_i)/h_i - (y_i-y_{i-1})/h_{i-1}
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = x_[i + 1] - x_[i];

  std::vector<double> sub(n), diag(n), sup(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double hm = (i == 0) ? h[n - 1] : h[i - 1];
    const double hi = h[i];
    sub[i] = hm / 6.0;
    diag[i] = (hm + hi) / 3.0;
    sup[i] = hi / 6.0;
    const double yp = (i == 0) ? y_[n - 1] : y_[i - 1];
    rhs[i] = (y_[i + 1] - y_[i]) / hi - (y_[i] - yp) / hm;
  }

  m_ = solve_cyclic_tridiagonal(std::move(sub), std::move(diag), std::move(sup), std::move(rhs));
  m_.push_back(m_[0]);
}

std::size_t PeriodicCubicSpline::interval(double xw) const {
  // xw already wrapped into [x_0, x_n); find i with x_i <= xw < x_{i+1}.
  auto it = std::upper_bound(x_.begin(), x_.end(), xw);
  std::size_t i = static_cast<std::size_t>(it - x_.begin());
  if (i == 0) return 0;
  if (i >= x_.size()) return x_.size() - 2;
  return i - 1;
}

double PeriodicCubicSpline::eval(double x) const {
  const double p = period();
  double xw = x_.front() + std::fmod(x - x_.front(), p);
  if (xw < x_.front()) xw += p;
  const std::size_t i = interval(xw);
  const double h = x_[i + 1] - x_[i];
  const double A = (x_[i + 1] - xw) / h;
  const double B = (xw - x_[i]) / h;
  return A * y_[i] + B * y_[i + 1] +
         ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * h * h / 6.0;
}

double PeriodicCubicSpline::derivative(double x) const {
  const double p = period();
  double xw = x_.front() + std::fmod(x - x_.front(), p);
  if (xw < x_.front()) xw += p;
  const std::size_t i = interval(xw);
  const double h = x_[i + 1] - x_[i];
  const double A = (x_[i + 1] - xw) / h;
  const double B = (xw - x_[i]) / h;
  return (y_[i + 1] - y_[i]) / h +
         ((1.0 - 3.0 * A * A) * m_[i] + (3.0 * B * B - 1.0) * m_[i + 1]) * h / 6.0;
}

}  // namespace curvalign
