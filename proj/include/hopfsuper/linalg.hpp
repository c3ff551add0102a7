#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfsuper/cyclo.hpp"

namespace hopfsuper {

using Vec = std::vector<CycloScalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const CycloScalar& s, const Vec& a);
// a += s * b
void axpy(Vec& a, const CycloScalar& s, const Vec& b);
// Deterministic lexicographic order via compare().
int compare(const Vec& a, const Vec& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  CycloScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycloScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  void set_column(std::size_t c, const Vec& v);
  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  CycloScalar trace() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const CycloScalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<CycloScalar> data_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Rref rref(Matrix m);
std::size_t rank(const Matrix& m);
CycloScalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
// Basis of {v : m v = 0}, in reduced row echelon form.
std::vector<Vec> kernel(const Matrix& m);
// Reduced echelon basis of span(vectors) (each of length n).
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t n);
// Solve m x = b; nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Subspace with a fixed basis and coordinate extraction.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::vector<Vec> basis, std::size_t ambient);
  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }
  // Coordinates of v in the basis, or nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  bool contains(const Vec& v) const { return coordinates(v).has_value(); }
  // Columns are the basis vectors.
  Matrix inclusion() const;

 private:
  std::vector<Vec> basis_;
  std::size_t ambient_ = 0;
  Matrix reduced_;  // rref of [basis^T | I] helper
  std::vector<std::size_t> pivots_;
  Matrix transform_;  // reduced rows expressed through basis rows
};

// Characteristic polynomial det(x I - m) (Faddeev-LeVerrier).
UniPoly characteristic_polynomial(const Matrix& m);
// Minimal polynomial of m acting by left composition (Krylov on powers).
UniPoly minimal_polynomial(const Matrix& m);

}  // namespace hopfsuper
