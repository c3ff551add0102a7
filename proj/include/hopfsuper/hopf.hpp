#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopfsuper/cyclo.hpp"
#include "hopfsuper/linalg.hpp"

namespace hopfsuper {

// Sorted by index, no zero coefficients.
using SparseVec = std::vector<std::pair<std::size_t, CycloScalar>>;

struct TensorTerm {
  std::size_t left;
  std::size_t right;
  CycloScalar coeff;
};

// Finite-dimensional Hopf superalgebra given by structure constants in a
// homogeneous basis e_0..e_{d-1}.  Ordinary Hopf algebras are the purely
// even case.  Tensor products follow the Koszul rule
// (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
struct HopfSuperData {
  std::string name;
  int conductor = 8;
  std::vector<int> parity;          // 0 even, 1 odd
  std::vector<std::string> labels;
  Vec unit;
  Vec counit;                       // eps(e_i)
  std::vector<SparseVec> mult;      // e_i e_j at index i * dim + j
  std::vector<std::vector<TensorTerm>> comult;
  Matrix antipode;                  // column c holds S(e_c)

  static HopfSuperData zero(std::string name, int conductor, std::vector<int> parity,
                            std::vector<std::string> labels);

  std::size_t dim() const { return parity.size(); }
  bool purely_even() const;
  std::size_t dim_odd() const;
  std::size_t index_of(const std::string& label) const;
  Vec basis(std::size_t i) const { return unit_vec(dim(), i); }
  Vec element(const std::string& label) const { return basis(index_of(label)); }

  void add_mult(std::size_t i, std::size_t j, std::size_t k, const CycloScalar& c);
  void add_comult(std::size_t i, std::size_t j, std::size_t k, const CycloScalar& c);
  const SparseVec& product(std::size_t i, std::size_t j) const { return mult[i * dim() + j]; }

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec power(const Vec& a, unsigned e) const;
  // Delta(a) as a dim x dim matrix T with T(j, k) the coefficient of e_j (x) e_k.
  Matrix comultiply(const Vec& a) const;
  // Product in the super tensor square.
  Matrix tensor_multiply(const Matrix& x, const Matrix& y) const;
  CycloScalar apply_counit(const Vec& a) const;
  Vec apply_antipode(const Vec& a) const { return antipode.apply(a); }
  Matrix left_mult_matrix(const Vec& a) const;
  Matrix right_mult_matrix(const Vec& a) const;

  // 0 or 1 for homogeneous nonzero vectors, -1 if inhomogeneous; zero is even.
  int parity_of(const Vec& a) const;
  Vec graded_part(const Vec& a, int p) const;

  // Canonicalise sparse storage (sort, drop zeros).
  void normalize();
};

// Compares parity, unit, counit, mult, comult and antipode exactly.
bool same_structure(const HopfSuperData& a, const HopfSuperData& b);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;
  void add(const std::string& name, bool passed, const std::string& detail = "");
  void merge(const Report& other, const std::string& prefix = "");
  bool ok() const;
  const CheckResult* find(const std::string& name) const;
  std::string to_string() const;
};

Report verify_axioms(const HopfSuperData& h);
// Throws AxiomFailure listing failing checks.
void certify(const HopfSuperData& h);

// Unsigned dual: mult = comult^T, comult = mult^T, unit <-> counit, S -> S^T.
HopfSuperData dual(const HopfSuperData& h, bool check = true);
HopfSuperData tensor_product(const HopfSuperData& a, const HopfSuperData& b, bool check = true);
// New basis vectors are the columns of p (old coordinates).
HopfSuperData change_basis(const HopfSuperData& h, const Matrix& p, std::vector<std::string> labels,
                           const std::string& name = "");

// Morphism checks; m maps coordinates of a to coordinates of b (dim b x dim a).
Report verify_hopf_morphism(const HopfSuperData& a, const HopfSuperData& b, const Matrix& m);
Report verify_isomorphism(const HopfSuperData& a, const HopfSuperData& b, const Matrix& m);
// Superalgebra morphism only (parity, unit, products).
Report verify_algebra_morphism(const HopfSuperData& a, const HopfSuperData& b, const Matrix& m);

// alpha -> a = a_1 alpha(a_2),  a <- alpha = alpha(a_1) a_2
Vec left_hit(const HopfSuperData& h, const Vec& alpha, const Vec& a);
Vec right_hit(const HopfSuperData& h, const Vec& alpha, const Vec& a);
// Convolution of covectors.
Vec convolve(const HopfSuperData& h, const Vec& f, const Vec& g);
CycloScalar pair(const Vec& functional, const Vec& a);

std::vector<Vec> center(const HopfSuperData& h);
// Homogeneous a with ab = (-1)^{|a||b|} ba for all homogeneous b.
std::vector<Vec> supercenter(const HopfSuperData& h);
// {x of parity p : Delta x = g (x) x + x (x) 1}
std::vector<Vec> skew_primitives(const HopfSuperData& h, const Vec& g, int p);

bool is_commutative(const HopfSuperData& h);
bool is_supercommutative(const HopfSuperData& h);
bool is_cocommutative(const HopfSuperData& h);
bool is_grouplike(const HopfSuperData& h, const Vec& g);

// Human-readable rendering of an element using basis labels.
std::string format_element(const HopfSuperData& h, const Vec& v);
std::string format_tensor(const HopfSuperData& h, const Matrix& t);

}  // namespace hopfsuper
