#include "shiftalg/dense_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace shiftalg {

DenseMatrix::DenseMatrix(std::size_t n) : n_(n), a_(n * n) {
  if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
}

DenseMatrix::DenseMatrix(std::size_t n, std::vector<std::complex<double>> entries)
    : n_(n), a_(std::move(entries)) {
  if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
  if (a_.size() != n * n) throw std::invalid_argument("entry count does not match dimension");
  check_finite();
}

void DenseMatrix::check_finite() const {
  for (const auto& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("matrix entry is not finite");
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch in matrix product");
  DenseMatrix out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      std::complex<double> f = a.at(i, k);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) out.at(i, j) += f * b.at(k, j);
    }
  }
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch in matrix difference");
  DenseMatrix out(a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
  return out;
}

std::vector<std::complex<double>> DenseMatrix::apply(
    const std::vector<std::complex<double>>& v) const {
  if (v.size() != n_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  std::vector<std::complex<double>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : a_) m = std::max(m, std::abs(z));
  return m;
}

} // namespace shiftalg
