#include "curvalign/elastic.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "curvalign/rigid_align.hpp"

namespace curvalign {

namespace {

double safe_sqrt(double e) { return std::sqrt(std::max(e, 0.0)); }

// gamma_new(t) = outer(inner(t)), sampled on the shared grid.
Reparameterization compose_reparam(const Reparameterization& outer,
                                   const Reparameterization& inner) {
  const std::size_t n = inner.grid_size();
  Reparameterization out;
  out.gamma.resize(n + 1);
  for (std::size_t l = 0; l <= n; ++l) out.gamma[l] = outer.eval(inner.gamma[l]);
  out.gamma[0] = 0.0;
  out.gamma[n] = 1.0;
  for (std::size_t l = 1; l <= n; ++l) out.gamma[l] = std::max(out.gamma[l], out.gamma[l - 1]);
  return out;
}

// Rebase of the state after a cyclic sample shift by m of the gamma/t0-folded
// sequence: the shifted sequence equals the action with
//   t0' = t0 + gamma[m] (mod 1),  gamma'[l] = gamma[l+m] - gamma[m],
// with the periodic continuation gamma[l+N] = gamma[l] + 1. Exact on-grid.
Reparameterization rebase_reparam(const Reparameterization& gamma, std::size_t m) {
  const std::size_t n = gamma.grid_size();
  Reparameterization out;
  out.gamma.resize(n + 1);
  const double gm = gamma.gamma[m];
  for (std::size_t l = 0; l <= n; ++l) {
    const std::size_t lm = l + m;
    out.gamma[l] = (lm <= n) ? gamma.gamma[lm] - gm : gamma.gamma[lm - n] + 1.0 - gm;
  }
  out.gamma[0] = 0.0;
  out.gamma[n] = 1.0;
  return out;
}

RigidAlignment run_align(std::span<const Point2> a, std::span<const Point2> b, bool use_fft) {
  return use_fft ? align_fft(a, b) : align_naive(a, b);
}

void check_elastic_inputs(const Curve& c1, const Curve& c2) {
  if (c1.size() != c2.size()) throw std::invalid_argument("elastic: node count mismatch");
  if (c1.size() < 8) throw std::invalid_argument("elastic: need at least 8 nodes");
}

}  // namespace

ElasticMatch elastic_distance_approach1(const Curve& c1, const Curve& c2,
                                        const ElasticOptions& opts) {
  check_elastic_inputs(c1, c2);
  const std::size_t n = c1.size();
  if (n > opts.n_max_approach1)
    throw std::invalid_argument(
        "approach 1 is O(N^3); node count exceeds the configured limit, use approach 2");

  const SrvCurve q1 = srv_transform(c1);
  const SrvCurve q2 = srv_transform(c2);

  ElasticMatch best;
  best.energy = std::numeric_limits<double>::infinity();

  std::vector<Point2> shifted(n);
  for (std::size_t m = 0; m < n; ++m) {
    const Rotation2 R =
        optimal_rotation_svd(cross_correlation_matrix(q1.q, q2.q, m)).rotation;
    for (std::size_t l = 0; l < n; ++l) shifted[l] = R.apply(q2.q[(l + m) % n]);
    SrvCurve w;
    w.h = q2.h;
    w.q = shifted;

    const DpResult dp = dp_reparam(q1, w, opts.max_slope);
    const double t0 = static_cast<double>(m) / static_cast<double>(n);
    const double e = elastic_energy(q1, q2, t0, R, dp.gamma);
    if (e < best.energy) {
      best.energy = e;
      best.t0 = t0;
      best.rotation = R;
      best.gamma = dp.gamma;
    }
  }

  best.distance = safe_sqrt(best.energy);
  best.iterations = 1;
  best.converged = true;
  best.energy_trace = {best.energy};
  return best;
}

ElasticMatch elastic_distance_approach2(const Curve& c1, const Curve& c2,
                                        const ElasticOptions& opts) {
  check_elastic_inputs(c1, c2);
  const std::size_t n = c1.size();

  const SrvCurve q1 = srv_transform(c1);
  const SrvCurve q2 = srv_transform(c2);
  const SrvCurve q1c = srv_center(q1);

  // Rigid pre-alignment of the curves themselves seeds (t0, R).
  const RigidAlignment pre = run_align(c1.nodes, c2.nodes, opts.use_fft);
  double t0 = pre.t0;
  Rotation2 R = pre.rotation;
  Reparameterization gamma = identity_reparam(n);

  double energy = elastic_energy(q1, q2, t0, R, gamma);
  ElasticMatch out;
  out.energy_trace = {energy};
  out.converged = false;

  for (int iter = 1; iter <= opts.max_iters; ++iter) {
    const double prev = energy;

    {  // gamma-step: fold the whole current action into q2, DP, compose.
      const SrvCurve w = apply_srv_action(q2, t0, R, gamma);
      const DpResult dp = dp_reparam(q1, w, opts.max_slope);
      const Reparameterization cand = compose_reparam(gamma, dp.gamma);
      const double e = elastic_energy(q1, q2, t0, R, cand);
      if (e <= energy) {
        gamma = cand;
        energy = e;
      }
    }

    {  // (t0, R)-step: fold t0 and gamma (not R), search shift and rotation.
      const SrvCurve w = apply_srv_action(q2, t0, Rotation2(), gamma);
      const RigidAlignment ra = run_align(q1c.q, srv_center(w).q, opts.use_fft);
      const std::size_t m = ra.shift;
      const double t0_cand = wrap_unit(t0 + gamma.gamma[m]);
      const Reparameterization gamma_cand = rebase_reparam(gamma, m);

      // The centered correlation locates the shift; the energy itself is over
      // the raw samples, so also try the rotation refit on the raw pair.
      const Rotation2 r_raw =
          optimal_rotation_svd(cross_correlation_matrix(q1.q, w.q, m)).rotation;
      const double e_centered = elastic_energy(q1, q2, t0_cand, ra.rotation, gamma_cand);
      const double e_raw = elastic_energy(q1, q2, t0_cand, r_raw, gamma_cand);
      const Rotation2 r_cand = (e_raw <= e_centered) ? r_raw : ra.rotation;
      const double e = std::min(e_raw, e_centered);
      if (e <= energy) {
        t0 = t0_cand;
        R = r_cand;
        gamma = gamma_cand;
        energy = e;
      }
    }

    out.energy_trace.push_back(energy);
    out.iterations = iter;
    if (prev - energy < opts.energy_tol) {
      out.converged = true;
      break;
    }
  }

  out.t0 = t0;
  out.rotation = R;
  out.gamma = gamma;
  out.energy = energy;
  out.distance = safe_sqrt(energy);
  return out;
}

std::vector<std::vector<double>> distance_matrix(const std::vector<Curve>& curves,
                                                 DistanceMethod method, std::size_t n,
                                                 const ElasticOptions& opts,
                                                 unsigned max_threads,
                                                 const CellCallback& on_cell) {
  if (curves.size() < 2) throw std::invalid_argument("distance_matrix: need at least 2 curves");

  std::vector<Curve> prep(curves.size());
  for (std::size_t i = 0; i < curves.size(); ++i) prep[i] = preprocess(curves[i], n, true);

  const std::size_t k = prep.size();
  std::vector<std::vector<double>> d(k, std::vector<double>(k, 0.0));

  struct Cell {
    std::size_t i, j;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) cells.push_back({i, j});

  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned workers = (max_threads == 0) ? hw : std::min(max_threads, hw);
  workers = std::min<unsigned>(workers, static_cast<unsigned>(cells.size()));

  std::atomic<std::size_t> next{0};
  std::mutex report_mu;
  auto work = [&]() {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= cells.size()) return;
      const auto [i, j] = cells[idx];
      const auto start = std::chrono::steady_clock::now();
      double v;
      try {
        const ElasticMatch m = (method == DistanceMethod::approach1)
                                   ? elastic_distance_approach1(prep[i], prep[j], opts)
                                   : elastic_distance_approach2(prep[i], prep[j], opts);
        v = m.distance;
      } catch (const std::exception&) {
        v = std::numeric_limits<double>::quiet_NaN();
      }
      d[i][j] = v;
      if (on_cell) {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::lock_guard<std::mutex> lock(report_mu);
        on_cell(i, j, v, secs);
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return d;
}

}  // namespace curvalign
