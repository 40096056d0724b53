#pragma once

#include <complex>
#include <memory>
#include <span>

namespace wigstat::detail {

enum class FftSign { kForward = -1, kBackward = +1 };

/// In-place batched complex DFT backed by FFTW.
///
/// Forward computes X_k = sum_j x_j exp(-2 pi i jk / n); backward uses the
/// opposite sign.  Neither is normalized.  Plans are created with
/// FFTW_ESTIMATE | FFTW_UNALIGNED so any std::complex<double> buffer with the
/// planned layout can be transformed; execute() is safe to call concurrently.
class FftPlan {
 public:
  /// `howmany` transforms of length `n`; element j of transform b lives at
  /// offset b * dist + j * stride.
  FftPlan(int n, int howmany, int stride, int dist, FftSign sign);
  /// Single contiguous transform.
  FftPlan(int n, FftSign sign) : FftPlan(n, 1, 1, n, sign) {}

  FftPlan(FftPlan&&) noexcept;
  FftPlan& operator=(FftPlan&&) noexcept;
  ~FftPlan();

  void execute(std::span<std::complex<double>> data) const;

  int length() const { return n_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int n_ = 0;
  std::size_t span_ = 0;
};

}  // namespace wigstat::detail
