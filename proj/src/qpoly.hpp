#pragma once
// Polynomials over Q and Z used internally by the cyclotomic layer.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace hopfsuper::detail {

using QPoly = std::vector<mpq_class>;  // low degree first, trimmed
using ZPoly = std::vector<mpz_class>;

void qp_trim(QPoly& a);
int qp_degree(const QPoly& a);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b);
QPoly qp_gcd(QPoly a, QPoly b);  // monic
QPoly qp_derivative(const QPoly& a);
// s with s*a = 1 mod m; false if not invertible.
bool qp_inverse_mod(const QPoly& a, const QPoly& m, QPoly& out);

ZPoly z_primitive(const QPoly& a);
QPoly z_to_q(const ZPoly& a);

struct ZFactorization {
  std::vector<ZPoly> factors;
  bool complete = true;
};

// Irreducible factors over Q of a squarefree integer polynomial
// (Berlekamp-Zassenhaus style: factor mod p, Hensel lift, recombine).
ZFactorization factor_squarefree(const ZPoly& f, std::uint64_t fuel);

}  // namespace hopfsuper::detail
