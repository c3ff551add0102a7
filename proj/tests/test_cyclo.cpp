#include <random>

#include "doctest.h"
#include "hopfsuper/cyclo.hpp"
#include "hopfsuper/error.hpp"
#include "oracle.hpp"

using namespace hopfsuper;

namespace {
CycloScalar z8(long k) { return CycloScalar::zeta(8, k); }
}  // namespace

TEST_CASE("cyclotomic polynomials match known integer coefficients") {
  CHECK(cyclotomic_polynomial(8) == std::vector<mpz_class>{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<mpz_class>{1, 1, 1});
  CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
  CHECK(euler_phi(24) == 8);
}

TEST_CASE("basic identities in Q(zeta8)") {
  CHECK(z8(1).pow(8).is_one());
  CHECK(z8(4) == CycloScalar(-1));
  CHECK(z8(2) * z8(2) == CycloScalar(-1));
  CycloScalar s2 = CycloScalar::sqrt2();
  CHECK(s2 * s2 == CycloScalar(2));
  CycloScalar omega = z8(3);
  CHECK(omega * omega == -z8(2));
  CHECK(CycloScalar::zeta(4).embed(8) == z8(2));
  CHECK(CycloScalar::zeta(4) == z8(2));
  CHECK((CycloScalar(1) / CycloScalar(2)).to_string() == "1/2");
  CHECK(z8(2).to_string() == "zeta8^2");
  CHECK((CycloScalar(1) - z8(2)).to_string() == "1 - zeta8^2");
}

TEST_CASE("incompatible conductors and division by zero are reported") {
  CHECK_THROWS_AS(CycloScalar::zeta(3).embed(8), Error);
  try {
    (void)(CycloScalar(1) / CycloScalar(0));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("field operations agree with complex floating point oracle") {
  std::mt19937 rng(7);
  for (int n : {1, 3, 4, 8, 12, 24}) {
    for (int trial = 0; trial < 40; ++trial) {
      CycloScalar a = oracle::random_scalar(rng, n), b = oracle::random_scalar(rng, n);
      CHECK(oracle::close(oracle::numeric(a + b), oracle::numeric(a) + oracle::numeric(b)));
      CHECK(oracle::close(oracle::numeric(a * b), oracle::numeric(a) * oracle::numeric(b)));
      if (!b.is_zero()) {
        CHECK(oracle::close(oracle::numeric(a / b), oracle::numeric(a) / oracle::numeric(b)));
        CHECK((b * b.inv()).is_one());
      }
    }
  }
}

TEST_CASE("mixed conductors embed into the lcm") {
  CycloScalar w = CycloScalar::zeta(3) * CycloScalar::zeta(8);
  CHECK(w.conductor() == 24);
  CHECK(oracle::close(oracle::numeric(w), oracle::numeric(CycloScalar::zeta(24, 11))));
}

TEST_CASE("Galois action is a ring automorphism") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    CycloScalar a = oracle::random_scalar(rng, 8), b = oracle::random_scalar(rng, 8);
    for (long k : {3L, 5L, 7L}) CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
  }
}

TEST_CASE("roots of simple polynomials over Q(zeta8)") {
  // x^2 + 1
  auto r = find_roots(UniPoly({CycloScalar(1), CycloScalar(0), CycloScalar(1)}), 8);
  REQUIRE(r.count() == 2);
  CHECK(r.unsplit_degree == 0);
  for (auto& x : r.flat()) CHECK((x * x + CycloScalar(1)).is_zero());

  // x^4 + 1 splits completely into primitive 8th roots of unity.
  auto r4 = find_roots(UniPoly({CycloScalar(1), 0, 0, 0, CycloScalar(1)}), 8);
  CHECK(r4.count() == 4);
  for (auto& x : r4.flat()) CHECK(x.pow(4) == CycloScalar(-1));

  // x^3 - 1: only the root 1, quadratic cofactor stays unsplit.
  auto r3 = find_roots(UniPoly({CycloScalar(-1), 0, 0, CycloScalar(1)}), 8);
  CHECK(r3.count() == 1);
  CHECK(r3.unsplit_degree == 2);
  CHECK(r3.flat()[0].is_one());
}

TEST_CASE("multiplicities are recovered") {
  CycloScalar i = z8(2);
  UniPoly f = UniPoly::linear_root(1) * UniPoly::linear_root(1) * UniPoly::linear_root(-i) *
              UniPoly::linear_root(CycloScalar::sqrt2());
  auto r = find_roots(f, 8);
  CHECK(r.count() == 4);
  int total_one = 0;
  for (auto& [x, m] : r.roots)
    if (x.is_one()) total_one = m;
  CHECK(total_one == 2);
}

TEST_CASE("recombination: x^4 - 10x^2 + 1 has no roots in Q(zeta8) but splits in Q(zeta24)") {
  UniPoly f({CycloScalar(1), 0, CycloScalar(-10), 0, CycloScalar(1)});
  auto r8 = find_roots(f, 8);
  CHECK(r8.count() == 0);
  CHECK(r8.unsplit_degree == 4);
  auto r24 = find_roots(f, 24);
  CHECK(r24.count() == 4);
  for (auto& x : r24.flat()) CHECK(f.eval(x).is_zero());
}

TEST_CASE("property: products of random linear factors are fully recovered") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<CycloScalar> roots;
    UniPoly f = UniPoly::constant(oracle::random_scalar(rng, 1) + CycloScalar(20));
    int deg = 1 + trial % 4;
    for (int k = 0; k < deg; ++k) {
      CycloScalar r = oracle::random_scalar(rng, 8);
      roots.push_back(r);
      f = f * UniPoly::linear_root(r);
    }
    auto found = find_roots(f, 8);
    CHECK(found.complete);
    CHECK(found.count() == roots.size());
    for (auto& r : roots) CHECK(f.eval(r).is_zero());
    for (auto& x : found.flat()) CHECK(f.eval(x).is_zero());
  }
}
