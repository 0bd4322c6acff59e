#pragma once

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <mutex>
#include <span>
#include <vector>

#include "eqlab/errors.hpp"
#include "eqlab/grid.hpp"

namespace eqlab {

namespace detail {
// FFTW's planner, allocation of plans and their destruction are not re-entrant.
inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace detail

/// Complex DFT of fixed length applied in place to caller data. The inverse
/// is normalized by 1/n so inverse(forward(x)) == x. Transforms run on an
/// internal SIMD-aligned buffer, which keeps the accumulated roundoff of long
/// propagations noticeably smaller than the unaligned codelets.
class FourierTransform {
 public:
  explicit FourierTransform(std::size_t n) : n_(n) {
    const int len = static_cast<int>(n);
    std::lock_guard lock(detail::fftw_planner_mutex());
    buffer_ = fftw_alloc_complex(n);
    if (buffer_ != nullptr) {
      forward_ = fftw_plan_dft_1d(len, buffer_, buffer_, FFTW_FORWARD, FFTW_ESTIMATE);
      backward_ = fftw_plan_dft_1d(len, buffer_, buffer_, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    if (forward_ == nullptr || backward_ == nullptr) {
      release();
      throw DomainError("units-and-state", "failed to plan FFT");
    }
  }

  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;
  FourierTransform(FourierTransform&& o) noexcept
      : n_(o.n_), buffer_(o.buffer_), forward_(o.forward_), backward_(o.backward_) {
    o.buffer_ = nullptr;
    o.forward_ = o.backward_ = nullptr;
  }
  FourierTransform& operator=(FourierTransform&& o) noexcept {
    if (this != &o) {
      std::lock_guard lock(detail::fftw_planner_mutex());
      release();
      n_ = o.n_;
      buffer_ = o.buffer_;
      forward_ = o.forward_;
      backward_ = o.backward_;
      o.buffer_ = nullptr;
      o.forward_ = o.backward_ = nullptr;
    }
    return *this;
  }
  ~FourierTransform() {
    std::lock_guard lock(detail::fftw_planner_mutex());
    release();
  }

  std::size_t size() const noexcept { return n_; }

  void forward(std::span<std::complex<double>> data) {
    run(forward_, data);
  }

  void inverse(std::span<std::complex<double>> data) {
    run(backward_, data);
    const double scale = 1.0 / static_cast<double>(n_);
    for (auto& z : data) z *= scale;
  }

 private:
  void run(fftw_plan plan, std::span<std::complex<double>> data) {
    if (data.size() != n_) throw DomainError("units-and-state", "FFT length mismatch");
    auto* work = reinterpret_cast<std::complex<double>*>(buffer_);
    std::copy(data.begin(), data.end(), work);
    fftw_execute(plan);
    std::copy(work, work + n_, data.begin());
  }
  // Caller holds the planner mutex.
  void release() noexcept {
    if (forward_ != nullptr) fftw_destroy_plan(forward_);
    if (backward_ != nullptr) fftw_destroy_plan(backward_);
    if (buffer_ != nullptr) fftw_free(buffer_);
    forward_ = backward_ = nullptr;
    buffer_ = nullptr;
  }

  std::size_t n_;
  fftw_complex* buffer_ = nullptr;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

/// Translate periodic samples by `shift`: out(x) = in(x - shift), exact for
/// band-limited data.
inline void spectral_translate(std::span<std::complex<double>> data, const SpatialGrid& grid,
                               double shift) {
  if (shift == 0.0) return;
  FourierTransform fft(grid.size());
  fft.forward(data);
  for (std::size_t j = 0; j < data.size(); ++j) {
    data[j] *= std::polar(1.0, -grid.wavenumber(j) * shift);
  }
  fft.inverse(data);
}

}  // namespace eqlab
