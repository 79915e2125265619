#include "curvalign/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace curvalign {

namespace {

// FFTW planning is not thread safe and plans are expensive to build, so plans
// are created once per transform length and reused via new-array execution on
// per-call buffers.
struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

class PlanCache {
 public:
  PlanPair get(std::size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;

    const std::size_t nc = n / 2 + 1;
    double* re = fftw_alloc_real(n);
    fftw_complex* co = fftw_alloc_complex(nc);
    PlanPair pp;
    pp.forward = fftw_plan_dft_r2c_1d(static_cast<int>(n), re, co, FFTW_ESTIMATE);
    pp.inverse = fftw_plan_dft_c2r_1d(static_cast<int>(n), co, re, FFTW_ESTIMATE);
    fftw_free(re);
    fftw_free(co);
    if (!pp.forward || !pp.inverse) throw std::runtime_error("fft: planning failed");
    plans_.emplace(n, pp);
    return pp;
  }

  ~PlanCache() {
    for (auto& [n, pp] : plans_) {
      fftw_destroy_plan(pp.forward);
      fftw_destroy_plan(pp.inverse);
    }
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::size_t, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

struct RealBuf {
  double* p;
  explicit RealBuf(std::size_t n) : p(fftw_alloc_real(n)) {
    if (!p) throw std::bad_alloc();
  }
  ~RealBuf() { fftw_free(p); }
  RealBuf(const RealBuf&) = delete;
  RealBuf& operator=(const RealBuf&) = delete;
};

struct ComplexBuf {
  fftw_complex* p;
  explicit ComplexBuf(std::size_t n) : p(fftw_alloc_complex(n)) {
    if (!p) throw std::bad_alloc();
  }
  ~ComplexBuf() { fftw_free(p); }
  ComplexBuf(const ComplexBuf&) = delete;
  ComplexBuf& operator=(const ComplexBuf&) = delete;
};

}  // namespace

std::vector<std::complex<double>> real_dft(std::span<const double> in) {
  const std::size_t n = in.size();
  if (n < 2) throw std::invalid_argument("fft: length must be at least 2");
  const std::size_t nc = n / 2 + 1;
  const PlanPair pp = cache().get(n);

  RealBuf re(n);
  ComplexBuf co(nc);
  std::memcpy(re.p, in.data(), n * sizeof(double));
  fftw_execute_dft_r2c(pp.forward, re.p, co.p);

  std::vector<std::complex<double>> out(nc);
  for (std::size_t k = 0; k < nc; ++k) out[k] = {co.p[k][0], co.p[k][1]};
  return out;
}

std::vector<double> real_idft(std::span<const std::complex<double>> spec, std::size_t n) {
  const std::size_t nc = n / 2 + 1;
  if (spec.size() != nc) throw std::invalid_argument("fft: spectrum size mismatch");
  const PlanPair pp = cache().get(n);

  RealBuf re(n);
  ComplexBuf co(nc);
  for (std::size_t k = 0; k < nc; ++k) {
    co.p[k][0] = spec[k].real();
    co.p[k][1] = spec[k].imag();
  }
  fftw_execute_dft_c2r(pp.inverse, co.p, re.p);

  std::vector<double> out(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t l = 0; l < n; ++l) out[l] = re.p[l] * scale;
  return out;
}

std::vector<double> circular_cross_correlation(std::span<const double> a,
                                               std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("fft: correlation size mismatch");
  const std::size_t n = a.size();
  // r[m] = sum_l a[l] b[l+m]  <=>  DFT(r) = conj(DFT(a)) .* DFT(b)
  std::vector<std::complex<double>> fa = real_dft(a);
  const std::vector<std::complex<double>> fb = real_dft(b);
  for (std::size_t k = 0; k < fa.size(); ++k) fa[k] = std::conj(fa[k]) * fb[k];
  return real_idft(fa, n);
}

}  // namespace curvalign
