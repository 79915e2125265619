#include "curvalign/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <numbers>

#include "curvalign/rigid_align.hpp"
#include "curvalign/synthetic.hpp"

namespace curvalign {

namespace {

const Curve& reference_shape() {
  static const Curve base = gen_curve(CurveFamily::fourier_random, 4096, 7, 12);
  return base;
}

template <typename F>
double median_seconds(F&& f, int repeats) {
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(repeats));
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

}  // namespace

std::pair<Curve, Curve> recovery_fixture(std::size_t n) {
  const Curve c1 = preprocess(reference_shape(), n, true);
  // Shift by a quarter minus half a cell: the recovered start stays within a
  // node of 0.25 while every sample of the copy falls between samples of the
  // reference.
  const double shift = 0.25 - 0.5 / static_cast<double>(n);
  Curve c2 = transform_curve(c1, shift, std::numbers::pi / 3.0, nullptr);
  c2 = normalize_length(center_curve(c2));
  return {c1, c2};
}

std::vector<BenchRow> run_alignment_benchmark(std::span<const std::size_t> sizes, int repeats) {
  if (repeats < 5) repeats = 5;
  std::vector<BenchRow> rows;
  rows.reserve(sizes.size());
  for (const std::size_t n : sizes) {
    const auto [c1, c2] = recovery_fixture(n);

    RigidAlignment a_naive, a_fft;
    a_fft = align_fft(c1, c2);  // warm-up (builds the transform plan for n)

    BenchRow row;
    row.n = n;
    row.t_naive = median_seconds([&]() { a_naive = align_naive(c1, c2); }, repeats);
    row.t_fft = median_seconds([&]() { a_fft = align_fft(c1, c2); }, repeats);
    row.speedup = (row.t_fft > 0.0) ? row.t_naive / row.t_fft : 0.0;
    row.error_naive = a_naive.energy;
    row.error_fft = a_fft.energy;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace curvalign
