#pragma once

#include "shiftalg/dense_matrix.hpp"
#include "shiftalg/element.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace shiftalg {

struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& what, double last_estimate)
      : std::runtime_error(what), last_estimate(last_estimate) {}
  double last_estimate;
};

struct EigensolverError : std::runtime_error {
  EigensolverError(const std::string& what, std::size_t subdiagonal_index, double magnitude)
      : std::runtime_error(what), subdiagonal_index(subdiagonal_index), magnitude(magnitude) {}
  std::size_t subdiagonal_index; // stagnant H(k+1,k); index is k
  double magnitude;
};

// Compression P_N x P_N of x to the first N sites, at numeric eps. Any symbol
// index >= N is rejected: the compression would silently truncate it.
DenseMatrix to_matrix(const Element& x, std::size_t n, std::complex<double> eps);

// max_index(x) + max_index(y) + 1: the smallest n oracle_mul_check accepts,
// leaving at least max_index(x) + 1 faithful columns after its edge mask.
std::size_t mul_safety_bound(const Element& x, const Element& y);

// Max-abs deviation between to_matrix(mul(x,y)) and the product of the
// compressions, over the columns q < n - max_index(y). Starting there, no
// path through y can leave the window, so composition agrees with the exact
// product; the masked edge columns differ at any n (Bwd(m)Fwd(m) = I, but the
// composed truncations lose the top m basis vectors) and carry no information
// about the symbolic product.
double oracle_mul_check(const Element& x, const Element& y, std::size_t n,
                        std::complex<double> eps);

// Spectral norm via power iteration on A^H A, deterministic all-ones start.
double operator_norm(const DenseMatrix& a, double tol = 1e-10, std::size_t max_iter = 10000);

// Pivoted-elimination rank; pivots below rel_tol * (largest pivot) count as zero.
std::size_t numeric_rank(const DenseMatrix& a, double rel_tol = 1e-9);

// All eigenvalues (with multiplicity, unordered). Exactly triangular input
// short-circuits to the diagonal; otherwise Hessenberg reduction followed by
// shifted QR. n <= 256.
std::vector<std::complex<double>> eigenvalues(const DenseMatrix& a, double tol = 1e-12);

// Canonical ordering for spectra: modulus descending, then argument ascending.
void sort_spectrum(std::vector<std::complex<double>>& vals);

struct SweepRow {
  double eps;
  std::size_t n;
  std::vector<std::complex<double>> values; // sorted per sort_spectrum
  std::complex<double> edge;                // largest-modulus eigenvalue
};

std::vector<SweepRow> edge_eigen_sweep(const std::vector<double>& eps_values, std::size_t n,
                                       ShiftVariant v);

// to_matrix(x,n,eps) * f; f must have length n.
std::vector<std::complex<double>> apply(const Element& x, const std::vector<std::complex<double>>& f,
                                        std::size_t n, std::complex<double> eps);

// Dimension of span{ C(j,k) f : j,k < n }, as the rank of the stacked vectors.
// f must be nonzero.
std::size_t orbit_span_dim(const std::vector<std::complex<double>>& f, std::size_t n);

// CSV with header "i,j,re,im", one row per entry, floats at 17 significant digits.
std::string heatmap_dump(const Element& x, std::size_t n, std::complex<double> eps);

// CSV with header "eps,n,k,re,im,is_edge"; k indexes the sorted spectrum and
// is_edge marks k = 0.
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Shared float formatting for all CSV output: 17 significant digits.
std::string format_float(double v);

} // namespace shiftalg
