#pragma once
// Floating-point oracle used to cross-check exact cyclotomic arithmetic.

#include <cmath>
#include <complex>
#include <random>

#include "hopfsuper/cyclo.hpp"

namespace oracle {

inline std::complex<double> numeric(const hopfsuper::CycloScalar& a) {
  const double pi = std::acos(-1.0);
  std::complex<double> z = std::polar(1.0, 2 * pi / a.conductor());
  std::complex<double> acc = 0, p = 1;
  for (const auto& c : a.coeffs()) {
    acc += c.get_d() * p;
    p *= z;
  }
  return acc;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

// Random element of Q(zeta_n) with small numerators/denominators.
inline hopfsuper::CycloScalar random_scalar(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  std::vector<hopfsuper::Rational> c;
  for (int i = 0; i < n; ++i) c.emplace_back(num(rng), den(rng));
  for (auto& q : c) q.canonicalize();
  return hopfsuper::CycloScalar::from_poly(n, c);
}

}  // namespace oracle
