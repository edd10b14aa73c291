#include "shiftalg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace shiftalg {

DenseMatrix to_matrix(const Element& x, std::size_t n, std::complex<double> eps) {
  if (n == 0) throw std::invalid_argument("truncation size must be positive");
  for (const auto& [s, c] : x.terms()) {
    if (s.max_index() >= n)
      throw std::invalid_argument("symbol " + s.to_string() + " does not fit a " +
                                  std::to_string(n) + "-site truncation");
  }
  DenseMatrix out(n);
  for (const auto& [s, c] : x.terms()) {
    std::complex<double> v = c.evaluate(eps);
    switch (s.kind()) {
      case BasisSymbol::Kind::forward:
        for (std::size_t q = 0; q + s.power() < n; ++q) out.at(q + s.power(), q) += v;
        break;
      case BasisSymbol::Kind::backward:
        for (std::size_t p = 0; p + s.power() < n; ++p) out.at(p, p + s.power()) += v;
        break;
      case BasisSymbol::Kind::corner:
        out.at(s.row(), s.col()) += v;
        break;
    }
  }
  out.check_finite();
  return out;
}

std::size_t mul_safety_bound(const Element& x, const Element& y) {
  return max_index(x) + max_index(y) + 1;
}

double oracle_mul_check(const Element& x, const Element& y, std::size_t n,
                        std::complex<double> eps) {
  std::size_t bound = mul_safety_bound(x, y);
  if (n < bound)
    throw std::invalid_argument("truncation " + std::to_string(n) +
                                " is below the multiplicativity bound " + std::to_string(bound));
  DenseMatrix lhs = to_matrix(mul(x, y), n, eps);
  DenseMatrix rhs = to_matrix(x, n, eps) * to_matrix(y, n, eps);
  // Columns q >= n - max_index(y) can route through states above the window
  // (the middle projector clips them: Bwd(2)Fwd(2) = I, yet the composed
  // truncations annihilate the top two basis vectors), so only the columns
  // where composition is faithful enter the comparison.
  const std::size_t faithful_cols = n - max_index(y);
  double worst = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < faithful_cols; ++q)
      worst = std::max(worst, std::abs(lhs.at(p, q) - rhs.at(p, q)));
  return worst;
}

namespace {

double norm2(const std::vector<std::complex<double>>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

} // namespace

double operator_norm(const DenseMatrix& a, double tol, std::size_t max_iter) {
  const std::size_t n = a.size();
  if (a.max_abs() == 0.0) return 0.0;
  // B = A^H A, positive semidefinite; its top eigenvalue is norm(A)^2.
  DenseMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<double> acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += std::conj(a.at(k, i)) * a.at(k, j);
      b.at(i, j) = acc;
    }
  std::vector<std::complex<double>> q(n, std::complex<double>(1.0 / std::sqrt(double(n)), 0.0));
  double lambda_prev = -1.0;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    std::vector<std::complex<double>> z = b.apply(q);
    double nz = norm2(z);
    if (nz == 0.0) {
      // q landed in the kernel; reseed deterministically from basis vectors.
      bool reseeded = false;
      for (std::size_t j = 0; j < n && !reseeded; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < n; ++i) col += std::norm(b.at(i, j));
        if (col > 0.0) {
          q.assign(n, 0.0);
          q[j] = 1.0;
          reseeded = true;
        }
      }
      if (!reseeded) return 0.0;
      continue;
    }
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda += (std::conj(q[i]) * z[i]).real();
    for (std::size_t i = 0; i < n; ++i) q[i] = z[i] / nz;
    if (lambda_prev >= 0.0 && std::abs(lambda - lambda_prev) <= tol * std::max(lambda, 1e-300))
      return std::sqrt(std::max(lambda, 0.0));
    lambda_prev = lambda;
  }
  throw ConvergenceError("operator norm power iteration did not converge in " +
                             std::to_string(max_iter) + " iterations",
                         std::sqrt(std::max(lambda_prev, 0.0)));
}

namespace {

std::size_t rank_of_buffer(std::vector<std::complex<double>> m, std::size_t rows,
                           std::size_t cols, double rel_tol) {
  auto at = [&](std::size_t i, std::size_t j) -> std::complex<double>& {
    return m[i * cols + j];
  };
  std::size_t steps = std::min(rows, cols);
  double max_pivot = 0.0;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t pi = k, pj = k;
    double best = 0.0;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        double v = std::abs(at(i, j));
        if (v > best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    max_pivot = std::max(max_pivot, best);
    if (best <= rel_tol * max_pivot) break;
    if (pi != k)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pi, j), at(k, j));
    if (pj != k)
      for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, pj), at(i, k));
    for (std::size_t i = k + 1; i < rows; ++i) {
      std::complex<double> f = at(i, k) / at(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j < cols; ++j) at(i, j) -= f * at(k, j);
    }
    ++rank;
  }
  return rank;
}

} // namespace

std::size_t numeric_rank(const DenseMatrix& a, double rel_tol) {
  return rank_of_buffer(a.data(), a.size(), a.size(), rel_tol);
}

namespace {

bool exactly_upper_triangular(const DenseMatrix& a) {
  for (std::size_t i = 1; i < a.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a.at(i, j) != 0.0) return false;
  return true;
}

bool exactly_lower_triangular(const DenseMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a.at(i, j) != 0.0) return false;
  return true;
}

// Unitary reduction to upper Hessenberg form by Householder reflections.
void hessenberg_reduce(DenseMatrix& h) {
  const std::size_t n = h.size();
  if (n < 3) return;
  std::vector<std::complex<double>> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(h.at(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    std::complex<double> x0 = h.at(k + 1, k);
    std::complex<double> phase = x0 == 0.0 ? 1.0 : x0 / std::abs(x0);
    std::size_t m = n - (k + 1);
    for (std::size_t i = 0; i < m; ++i) v[i] = h.at(k + 1 + i, k);
    v[0] += phase * xnorm;
    double vnorm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) continue;
    double tau = 2.0 / vnorm2;
    // left: rows k+1..n-1
    for (std::size_t j = k; j < n; ++j) {
      std::complex<double> s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += std::conj(v[i]) * h.at(k + 1 + i, j);
      s *= tau;
      for (std::size_t i = 0; i < m; ++i) h.at(k + 1 + i, j) -= s * v[i];
    }
    // right: cols k+1..n-1
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += h.at(i, k + 1 + j) * v[j];
      s *= tau;
      for (std::size_t j = 0; j < m; ++j) h.at(i, k + 1 + j) -= s * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h.at(i, k) = 0.0;
  }
}

struct Givens {
  double c;
  std::complex<double> s;
};

// G = [[c, s], [-conj(s), c]] with real c, chosen so G * [a; b] has zero
// second component.
Givens make_givens(std::complex<double> a, std::complex<double> b) {
  double aa = std::abs(a), bb = std::abs(b);
  if (bb == 0.0) return {1.0, 0.0};
  double r = std::hypot(aa, bb);
  if (aa == 0.0) return {0.0, std::conj(b) / bb};
  std::complex<double> ph = a / aa;
  return {aa / r, ph * std::conj(b) / r};
}

std::pair<std::complex<double>, std::complex<double>> eig2x2(std::complex<double> a,
                                                             std::complex<double> b,
                                                             std::complex<double> c,
                                                             std::complex<double> d) {
  std::complex<double> half = (a + d) * 0.5;
  std::complex<double> disc = std::sqrt(half * half - (a * d - b * c));
  return {half + disc, half - disc};
}

} // namespace

std::vector<std::complex<double>> eigenvalues(const DenseMatrix& a, double tol) {
  const std::size_t n = a.size();
  if (n > 256) throw std::invalid_argument("eigenvalue solver is limited to n <= 256");
  std::vector<std::complex<double>> out;
  if (exactly_upper_triangular(a) || exactly_lower_triangular(a)) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(a.at(i, i));
    return out;
  }
  DenseMatrix h = a;
  hessenberg_reduce(h);
  const double hnorm = std::max(h.max_abs(), 1e-300);
  const std::size_t max_sweeps = 100 * n;
  std::size_t sweeps = 0;
  std::size_t hi = n - 1;
  std::size_t stagnant = 0;
  while (true) {
    // Deflate negligible subdiagonals in the active window.
    for (std::size_t k = 1; k <= hi; ++k) {
      double thresh = tol * (std::abs(h.at(k - 1, k - 1)) + std::abs(h.at(k, k)));
      if (thresh == 0.0) thresh = tol * hnorm;
      if (std::abs(h.at(k, k - 1)) <= thresh) h.at(k, k - 1) = 0.0;
    }
    if (hi == 0 || h.at(hi, hi - 1) == 0.0) {
      out.push_back(h.at(hi, hi));
      stagnant = 0;
      if (hi == 0) break;
      --hi;
      continue;
    }
    // Active block [lo, hi].
    std::size_t lo = hi;
    while (lo > 0 && h.at(lo, lo - 1) != 0.0) --lo;
    if (hi - lo == 1) {
      auto [l1, l2] = eig2x2(h.at(lo, lo), h.at(lo, hi), h.at(hi, lo), h.at(hi, hi));
      out.push_back(l1);
      out.push_back(l2);
      stagnant = 0;
      if (lo == 0) break;
      hi = lo - 1;
      continue;
    }
    if (++sweeps > max_sweeps)
      throw EigensolverError("QR iteration stalled: subdiagonal H(" + std::to_string(hi) + "," +
                                 std::to_string(hi - 1) + ") stayed at " +
                                 std::to_string(std::abs(h.at(hi, hi - 1))),
                             hi - 1, std::abs(h.at(hi, hi - 1)));
    std::complex<double> shift;
    if (++stagnant % 12 == 0) {
      // Occasional exceptional shift breaks symmetric stalls.
      shift = h.at(hi, hi) + 0.75 * std::abs(h.at(hi, hi - 1));
    } else {
      auto [l1, l2] = eig2x2(h.at(hi - 1, hi - 1), h.at(hi - 1, hi), h.at(hi, hi - 1), h.at(hi, hi));
      shift = std::abs(l1 - h.at(hi, hi)) <= std::abs(l2 - h.at(hi, hi)) ? l1 : l2;
    }
    // Explicit shifted QR step on the active block.
    for (std::size_t k = lo; k <= hi; ++k) h.at(k, k) -= shift;
    std::vector<Givens> rot(hi - lo);
    for (std::size_t k = lo; k < hi; ++k) {
      Givens g = make_givens(h.at(k, k), h.at(k + 1, k));
      rot[k - lo] = g;
      for (std::size_t j = k; j <= hi; ++j) {
        std::complex<double> t1 = h.at(k, j), t2 = h.at(k + 1, j);
        h.at(k, j) = g.c * t1 + g.s * t2;
        h.at(k + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
      }
    }
    for (std::size_t k = lo; k < hi; ++k) {
      Givens g = rot[k - lo];
      std::size_t top = lo;
      for (std::size_t i = top; i <= std::min(k + 2, hi); ++i) {
        std::complex<double> t1 = h.at(i, k), t2 = h.at(i, k + 1);
        h.at(i, k) = g.c * t1 + std::conj(g.s) * t2;
        h.at(i, k + 1) = -g.s * t1 + g.c * t2;
      }
    }
    for (std::size_t k = lo; k <= hi; ++k) h.at(k, k) += shift;
  }
  return out;
}

void sort_spectrum(std::vector<std::complex<double>>& vals) {
  std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
    double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    return std::arg(a) < std::arg(b);
  });
}

std::vector<SweepRow> edge_eigen_sweep(const std::vector<double>& eps_values, std::size_t n,
                                       ShiftVariant v) {
  Element t = build_shift(v);
  std::vector<SweepRow> rows;
  rows.reserve(eps_values.size());
  for (double eps : eps_values) {
    SweepRow row;
    row.eps = eps;
    row.n = n;
    row.values = eigenvalues(to_matrix(t, n, eps));
    sort_spectrum(row.values);
    row.edge = row.values.empty() ? 0.0 : row.values.front();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::complex<double>> apply(const Element& x, const std::vector<std::complex<double>>& f,
                                        std::size_t n, std::complex<double> eps) {
  if (f.size() != n)
    throw std::invalid_argument("vector length " + std::to_string(f.size()) +
                                " does not match truncation " + std::to_string(n));
  return to_matrix(x, n, eps).apply(f);
}

std::size_t orbit_span_dim(const std::vector<std::complex<double>>& f, std::size_t n) {
  if (f.size() != n)
    throw std::invalid_argument("vector length does not match truncation size");
  bool nonzero = false;
  for (const auto& z : f) nonzero = nonzero || z != 0.0;
  if (!nonzero) throw std::invalid_argument("orbit of the zero vector is trivial");
  // Row (j,k) holds C(j,k) f = f[k] e_j.
  std::vector<std::complex<double>> stacked(n * n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) stacked[(j * n + k) * n + j] = f[k];
  return rank_of_buffer(std::move(stacked), n * n, n, 1e-9);
}

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string heatmap_dump(const Element& x, std::size_t n, std::complex<double> eps) {
  DenseMatrix m = to_matrix(x, n, eps);
  std::string out = "i,j,re,im\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out += std::to_string(i) + "," + std::to_string(j) + "," + format_float(m.at(i, j).real()) +
             "," + format_float(m.at(i, j).imag()) + "\n";
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "eps,n,k,re,im,is_edge\n";
  for (const SweepRow& r : rows) {
    for (std::size_t k = 0; k < r.values.size(); ++k) {
      out += format_float(r.eps) + "," + std::to_string(r.n) + "," + std::to_string(k) + "," +
             format_float(r.values[k].real()) + "," + format_float(r.values[k].imag()) + "," +
             (k == 0 ? "1" : "0") + "\n";
    }
  }
  return out;
}

} // namespace shiftalg
