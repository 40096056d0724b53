#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <vector>

#include "wigstat/errors.hpp"

namespace wigstat::detail {

namespace {

// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct FftPlan::Impl {
  fftw_plan plan = nullptr;
  ~Impl() {
    if (plan != nullptr) {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(plan);
    }
  }
};

FftPlan::FftPlan(int n, int howmany, int stride, int dist, FftSign sign)
    : impl_(std::make_unique<Impl>()), n_(n) {
  if (n < 1 || howmany < 1) {
    throw Error(ErrorCode::kInvalidArgument, "FFT length and batch count must be positive");
  }
  span_ = static_cast<std::size_t>(howmany - 1) * dist + static_cast<std::size_t>(n - 1) * stride + 1;
  std::vector<std::complex<double>> scratch(span_);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  int dims[1] = {n};
  std::lock_guard lock(planner_mutex());
  impl_->plan = fftw_plan_many_dft(1, dims, howmany, buf, nullptr, stride, dist, buf, nullptr,
                                   stride, dist, static_cast<int>(sign),
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (impl_->plan == nullptr) {
    throw Error(ErrorCode::kNumerical, "FFTW failed to create a plan");
  }
}

FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;
FftPlan::~FftPlan() = default;

void FftPlan::execute(std::span<std::complex<double>> data) const {
  if (data.size() < span_) {
    throw Error(ErrorCode::kInvalidArgument, "FFT buffer smaller than the planned layout");
  }
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(impl_->plan, buf, buf);
}

}  // namespace wigstat::detail
