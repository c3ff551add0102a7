#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hopfsuper {

using Rational = mpq_class;

// Element of the cyclotomic field Q(zeta_n), stored as a rational vector of
// length phi(n) in the power basis 1, zeta_n, ..., zeta_n^(phi(n)-1).
// Binary operations between different conductors embed both operands into
// Q(zeta_lcm) first.
class CycloScalar {
 public:
  CycloScalar();
  CycloScalar(long v);  // NOLINT(google-explicit-constructor)
  CycloScalar(const Rational& q);  // NOLINT(google-explicit-constructor)

  static CycloScalar rational(const Rational& q, int conductor);
  static CycloScalar zeta(int n, long k = 1);
  // Coefficients of an arbitrary polynomial in zeta_n, reduced mod Phi_n.
  static CycloScalar from_poly(int n, const std::vector<Rational>& c);
  // sqrt(2) = zeta8 - zeta8^3.
  static CycloScalar sqrt2();

  int conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Only meaningful when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  CycloScalar embed(int m) const;
  CycloScalar inv() const;
  // Galois conjugate zeta -> zeta^k (gcd(k, n) = 1).
  CycloScalar galois(long k) const;

  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator/=(const CycloScalar& o);
  CycloScalar operator-() const;

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
  friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }
  friend bool operator==(const CycloScalar& a, const CycloScalar& b);
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

  CycloScalar pow(long e) const;

  // "1/2 - 3*zeta8^2"; rationals print without the zeta part.
  std::string to_string() const;

 private:
  CycloScalar(int n, std::vector<Rational> c);
  int n_;
  std::vector<Rational> c_;
};

// Deterministic total order (lexicographic on coefficients after embedding
// into a common field).  Returns <0, 0, >0.
int compare(const CycloScalar& a, const CycloScalar& b);

int euler_phi(int n);
int lcm_conductor(int a, int b);
// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

// Dense polynomial over cyclotomic scalars, low degree first, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<CycloScalar> c);
  static UniPoly constant(const CycloScalar& a);
  static UniPoly x();
  // x - r
  static UniPoly linear_root(const CycloScalar& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<CycloScalar>& coeffs() const { return c_; }
  CycloScalar coeff(int i) const;
  const CycloScalar& lead() const { return c_.back(); }

  CycloScalar eval(const CycloScalar& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  // p(x + s)
  UniPoly shift(const CycloScalar& s) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const CycloScalar& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<CycloScalar> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd (zero if both are zero).
UniPoly gcd(UniPoly a, UniPoly b);

struct RootMultiset {
  // Distinct roots in K with multiplicity, in the canonical scalar order.
  std::vector<std::pair<CycloScalar, int>> roots;
  // Degree of the cofactor that has no roots in K.
  int unsplit_degree = 0;
  // False when the recombination search ran out of fuel: roots may be missing.
  bool complete = true;

  std::vector<CycloScalar> flat() const;
  std::size_t count() const;
};

inline constexpr std::uint64_t kDefaultFactorFuel = 200000;

// Roots in Q(zeta_n) of f, where n is the conductor of f's coefficients
// (or `conductor` if larger).  Trager norm method plus Zassenhaus over Q.
RootMultiset find_roots(const UniPoly& f, int conductor = 1, std::uint64_t fuel = kDefaultFactorFuel);

}  // namespace hopfsuper
