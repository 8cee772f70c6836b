#pragma once

#include <complex>
#include <vector>

namespace shs::num {

/// Real periodic FFT workspace on n equispaced points of [0, 2 pi).
/// Not shareable between threads; create one per task.
class Spectral {
 public:
  explicit Spectral(int n);
  ~Spectral();
  Spectral(const Spectral&) = delete;
  Spectral& operator=(const Spectral&) = delete;

  int size() const { return n_; }
  double spacing() const;
  /// Highest wavenumber kept by the 2/3 rule.
  int dealias_cutoff() const { return n_ / 3; }

  /// Derivatives of orders 0..max_order. With `filter` all modes above the
  /// 2/3 cutoff are removed first (order 0 included).
  std::vector<std::vector<double>> derivatives(const std::vector<double>& f, int max_order, bool filter = false);
  std::vector<double> derivative(const std::vector<double>& f, int order, bool filter = false);
  /// Zero-mean antiderivative; the mean of f is ignored.
  std::vector<double> antiderivative(const std::vector<double>& f, bool filter = false);

  static double mean(const std::vector<double>& f);

 private:
  void forward(const std::vector<double>& f);
  std::vector<double> backward(const std::vector<std::complex<double>>& spec);

  int n_;
  double* real_;
  void* spec_;  // fftw_complex*
  void* plan_forward_;
  void* plan_backward_;
  std::vector<std::complex<double>> coeffs_;
};

}  // namespace shs::num
