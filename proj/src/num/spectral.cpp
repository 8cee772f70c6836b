#include "shs/num/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace shs::num {

namespace {
// FFTW planning is not thread-safe; execution is.
std::mutex planner_mutex;
}  // namespace

Spectral::Spectral(int n) : n_(n), coeffs_(n / 2 + 1) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("spectral grid size must be even and at least 4");
  std::lock_guard lock(planner_mutex);
  real_ = fftw_alloc_real(n);
  auto* spec = fftw_alloc_complex(n / 2 + 1);
  spec_ = spec;
  plan_forward_ = fftw_plan_dft_r2c_1d(n, real_, spec, FFTW_ESTIMATE);
  plan_backward_ = fftw_plan_dft_c2r_1d(n, spec, real_, FFTW_ESTIMATE);
}

Spectral::~Spectral() {
  std::lock_guard lock(planner_mutex);
  fftw_destroy_plan(static_cast<fftw_plan>(plan_forward_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_backward_));
  fftw_free(real_);
  fftw_free(spec_);
}

double Spectral::spacing() const { return 2 * std::numbers::pi / n_; }

void Spectral::forward(const std::vector<double>& f) {
  if (static_cast<int>(f.size()) != n_) throw std::invalid_argument("array length does not match the grid");
  std::copy(f.begin(), f.end(), real_);
  fftw_execute(static_cast<fftw_plan>(plan_forward_));
  auto* spec = static_cast<fftw_complex*>(spec_);
  const double scale = 1.0 / n_;
  for (int k = 0; k <= n_ / 2; ++k) coeffs_[k] = {spec[k][0] * scale, spec[k][1] * scale};
}

std::vector<double> Spectral::backward(const std::vector<std::complex<double>>& c) {
  auto* spec = static_cast<fftw_complex*>(spec_);
  for (int k = 0; k <= n_ / 2; ++k) {
    spec[k][0] = c[k].real();
    spec[k][1] = c[k].imag();
  }
  fftw_execute(static_cast<fftw_plan>(plan_backward_));
  return std::vector<double>(real_, real_ + n_);
}

std::vector<std::vector<double>> Spectral::derivatives(const std::vector<double>& f, int max_order, bool filter) {
  forward(f);
  if (filter)
    for (int k = dealias_cutoff() + 1; k <= n_ / 2; ++k) coeffs_[k] = 0;
  std::vector<std::vector<double>> out;
  std::vector<std::complex<double>> c(coeffs_.size());
  for (int order = 0; order <= max_order; ++order) {
    for (int k = 0; k <= n_ / 2; ++k) {
      std::complex<double> ik(0, k);
      c[k] = coeffs_[k] * std::pow(ik, order);
    }
    // The Nyquist mode has no real odd derivative.
    if (order % 2 == 1) c[n_ / 2] = 0;
    out.push_back(backward(c));
  }
  return out;
}

std::vector<double> Spectral::derivative(const std::vector<double>& f, int order, bool filter) {
  return derivatives(f, order, filter).back();
}

std::vector<double> Spectral::antiderivative(const std::vector<double>& f, bool filter) {
  forward(f);
  std::vector<std::complex<double>> c(coeffs_.size());
  const int top = filter ? dealias_cutoff() : n_ / 2 - 1;
  for (int k = 1; k <= top; ++k) c[k] = coeffs_[k] / std::complex<double>(0, k);
  return backward(c);
}

double Spectral::mean(const std::vector<double>& f) {
  return std::accumulate(f.begin(), f.end(), 0.0) / static_cast<double>(f.size());
}

}  // namespace shs::num
