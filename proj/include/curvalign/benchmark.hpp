#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "curvalign/curve.hpp"

namespace curvalign {

// Rigid-recovery fixture at node count n: a fixed reference shape resampled
// to n nodes, paired with a copy whose starting point is moved a quarter of
// the way around and which is rotated by pi/3. The copy is sampled half a
// grid cell out of phase with the reference, so the two node sets never
// coincide and the alignment error carries a genuine discretization term
// that shrinks as n grows.
std::pair<Curve, Curve> recovery_fixture(std::size_t n);

struct BenchRow {
  std::size_t n = 0;
  double t_naive = 0.0;  // seconds, median over repeats
  double t_fft = 0.0;
  double speedup = 0.0;
  double error_naive = 0.0;  // mismatch energy at the returned alignment
  double error_fft = 0.0;
};

// Times align_naive and align_fft on the recovery fixture for each size.
std::vector<BenchRow> run_alignment_benchmark(std::span<const std::size_t> sizes,
                                              int repeats = 5);

}  // namespace curvalign
