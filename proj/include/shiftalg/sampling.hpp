#pragma once

#include "shiftalg/element.hpp"
#include "shiftalg/functional.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace shiftalg {

struct SampleOptions {
  std::size_t max_index = 6;
  std::size_t terms = 3;
  unsigned max_eps_power = 2;
  bool corner_only = false;
  bool complex_coefficients = true;
};

// Deterministic sample stream for the property suites and the auditor: one
// seed, one reproducible sequence of elements/functionals/vectors.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long pick(long lo, long hi); // uniform in [lo, hi]

  BasisSymbol symbol(std::size_t max_index, bool corner_only = false);
  GaussianRational coefficient(bool complex_ok = true); // small nonzero rational
  Scalar scalar(unsigned max_eps_power, bool complex_ok = true);
  Element element(const SampleOptions& opt = {});
  Functional functional(std::size_t max_site, std::size_t terms);
  std::vector<std::complex<double>> dense_vector(std::size_t n); // never zero
  // Antisymmetric d x d matrix with small rational entries.
  std::vector<std::vector<Scalar>> antisymmetric_form(std::size_t d);

 private:
  std::mt19937_64 rng_;
};

} // namespace shiftalg
