#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace shiftalg {

// Square complex matrix, row-major. Entries are checked finite on every
// construction path so NaN/Inf can never leak into oracle comparisons.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n);
  DenseMatrix(std::size_t n, std::vector<std::complex<double>> entries);

  std::size_t size() const { return n_; }
  std::complex<double>& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::complex<double>& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<std::complex<double>>& data() const { return a_; }

  void check_finite() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);

  std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& v) const;
  double max_abs() const;

 private:
  std::size_t n_;
  std::vector<std::complex<double>> a_;
};

} // namespace shiftalg
