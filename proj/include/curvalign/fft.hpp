#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace curvalign {

// Real-to-complex DFT of a length-n signal; returns the n/2+1 nonredundant bins.
std::vector<std::complex<double>> real_dft(std::span<const double> in);

// Inverse of real_dft: complex half-spectrum (n/2+1 bins) back to n reals.
// Output is normalized (a round trip reproduces the input).
std::vector<double> real_idft(std::span<const std::complex<double>> spec, std::size_t n);

// Circular cross-correlation r[m] = sum_l a[l] * b[(l+m) mod n] for all shifts
// m in [0, n), computed through the DFT in O(n log n).
std::vector<double> circular_cross_correlation(std::span<const double> a,
                                               std::span<const double> b);

}  // namespace curvalign
