#include "shiftalg/sampling.hpp"

namespace shiftalg {

long Sampler::pick(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng_);
}

BasisSymbol Sampler::symbol(std::size_t max_index, bool corner_only) {
  const long kind = corner_only ? 2 : pick(0, 2);
  switch (kind) {
    case 0:
      return BasisSymbol::fwd(static_cast<std::size_t>(pick(0, static_cast<long>(max_index))));
    case 1:
      return BasisSymbol::bwd(static_cast<std::size_t>(pick(1, static_cast<long>(max_index))));
    default:
      return BasisSymbol::corner(static_cast<std::size_t>(pick(0, static_cast<long>(max_index))),
                                 static_cast<std::size_t>(pick(0, static_cast<long>(max_index))));
  }
}

GaussianRational Sampler::coefficient(bool complex_ok) {
  auto small = [this]() {
    long num = pick(-4, 3);
    if (num >= 0) ++num; // skip zero
    return make_rational(num, pick(1, 4));
  };
  GaussianRational c(small());
  if (complex_ok && pick(0, 1) == 1) c.im = small();
  return c;
}

Scalar Sampler::scalar(unsigned max_eps_power, bool complex_ok) {
  const unsigned power = static_cast<unsigned>(pick(0, static_cast<long>(max_eps_power)));
  return Scalar(coefficient(complex_ok), power);
}

Element Sampler::element(const SampleOptions& opt) {
  Element x;
  for (std::size_t t = 0; t < opt.terms; ++t)
    x.add_term(symbol(opt.max_index, opt.corner_only),
               scalar(opt.max_eps_power, opt.complex_coefficients));
  return x;
}

Functional Sampler::functional(std::size_t max_site, std::size_t terms) {
  Functional psi;
  for (std::size_t t = 0; t < terms; ++t) {
    const auto p = static_cast<std::size_t>(pick(0, static_cast<long>(max_site)));
    const auto q = static_cast<std::size_t>(pick(0, static_cast<long>(max_site)));
    psi.set(p, q, scalar(1));
  }
  return psi;
}

std::vector<std::complex<double>> Sampler::dense_vector(std::size_t n) {
  std::vector<std::complex<double>> v(n);
  double peak = 0.0;
  for (auto& z : v) {
    z = {pick(-1000, 1000) / 1000.0, pick(-1000, 1000) / 1000.0};
    peak = std::max(peak, std::abs(z));
  }
  if (peak < 0.25) v[0] = 1.0; // keep the vector clearly nonzero
  return v;
}

std::vector<std::vector<Scalar>> Sampler::antisymmetric_form(std::size_t d) {
  std::vector<std::vector<Scalar>> c(d, std::vector<Scalar>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      if (pick(0, 3) == 0) continue; // keep some sparsity
      Scalar v(coefficient(false));
      c[i][j] = v;
      c[j][i] = -v;
    }
  return c;
}

} // namespace shiftalg
