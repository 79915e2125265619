#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "curvalign/curve.hpp"
#include "curvalign/geometry.hpp"
#include "curvalign/srv.hpp"

namespace curvalign {

struct ElasticOptions {
  int max_iters = 30;
  double energy_tol = 1e-6;
  bool use_fft = true;       // FFT vs naive correlation in the (t0, R) steps
  int max_slope = 4;         // DP admissible slope bound
  std::size_t n_max_approach1 = 512;
};

// Result of matching c2 onto c1 over the action (t0, R, gamma) on the SRV
// representation. distance = sqrt(energy).
struct ElasticMatch {
  double t0 = 0.0;
  Rotation2 rotation;
  Reparameterization gamma;
  double energy = 0.0;
  double distance = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> energy_trace;
};

// Exhaustive baseline: for every starting-point shift, Kabsch rotation on the
// shifted SRV pair followed by one DP reparameterization; O(N^3) overall.
ElasticMatch elastic_distance_approach1(const Curve& c1, const Curve& c2,
                                        const ElasticOptions& opts = {});

// Alternating optimization: rigid pre-alignment, then DP gamma-steps
// interleaved with correlation-based (t0, R) steps; each step is accepted
// only if the realized energy does not increase.
ElasticMatch elastic_distance_approach2(const Curve& c1, const Curve& c2,
                                        const ElasticOptions& opts = {});

enum class DistanceMethod { approach1, approach2 };

// Called once per finished cell (serialized); seconds is the wall time spent
// on that pair.
using CellCallback = std::function<void(std::size_t i, std::size_t j, double value, double seconds)>;

// Pairwise distances between curves, each preprocessed (uniform resampling to
// n, centering, unit length) first. Full matrix, not symmetrized; a failed
// pair yields a NaN cell. max_threads = 0 means hardware concurrency.
std::vector<std::vector<double>> distance_matrix(const std::vector<Curve>& curves,
                                                 DistanceMethod method, std::size_t n,
                                                 const ElasticOptions& opts = {},
                                                 unsigned max_threads = 0,
                                                 const CellCallback& on_cell = nullptr);

}  // namespace curvalign
