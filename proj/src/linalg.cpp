#include "hopfsuper/linalg.hpp"

#include "hopfsuper/error.hpp"

namespace hopfsuper {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = CycloScalar(1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const CycloScalar& s, const Vec& a) {
  Vec r = a;
  for (auto& c : r) c *= s;
  return r;
}

void axpy(Vec& a, const CycloScalar& s, const Vec& b) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

int compare(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloScalar(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

CycloScalar Matrix::trace() const {
  CycloScalar t(0);
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& c : data_)
    if (!c.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::BadParams, "matrix shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycloScalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const CycloScalar& s, const Matrix& a) {
  Matrix m = a;
  for (auto& c : m.data_) c *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (a.data_[i] != b.data_[i]) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]\n";
  }
  return out;
}

Rref rref(Matrix m) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    CycloScalar inv = m(row, col).inv();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      CycloScalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

CycloScalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::BadParams, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  CycloScalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return CycloScalar(0);
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    CycloScalar inv = m(col, col).inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      CycloScalar f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c)
        if (!m(col, c).is_zero()) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) return std::nullopt;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = CycloScalar(1);
  }
  Rref rr = rref(std::move(aug));
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.reduced(r, n + c);
  return inv;
}

std::vector<Vec> kernel(const Matrix& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = CycloScalar(1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return span_basis(basis, m.cols());
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t n) {
  if (vectors.empty()) return {};
  Rref rr = rref(Matrix::from_rows(vectors, n));
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) out.push_back(rr.reduced.row(i));
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Rref rr = rref(std::move(aug));
  Vec x(m.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == m.cols()) return std::nullopt;
    x[rr.pivots[i]] = rr.reduced(i, m.cols());
  }
  return x;
}

Subspace::Subspace(std::vector<Vec> basis, std::size_t ambient) : basis_(std::move(basis)), ambient_(ambient) {
  const std::size_t k = basis_.size();
  Matrix aug(k, ambient_ + k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < ambient_; ++c) aug(r, c) = basis_[r][c];
    aug(r, ambient_ + r) = CycloScalar(1);
  }
  Rref rr = rref(std::move(aug));
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    if (rr.pivots[i] >= ambient_) throw Error(ErrorKind::BadParams, "subspace basis is linearly dependent");
  pivots_ = rr.pivots;
  reduced_ = Matrix(k, ambient_);
  transform_ = Matrix(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < ambient_; ++c) reduced_(r, c) = rr.reduced(r, c);
    for (std::size_t c = 0; c < k; ++c) transform_(r, c) = rr.reduced(r, ambient_ + c);
  }
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  const std::size_t k = basis_.size();
  Vec rest = v;
  Vec y(k);
  for (std::size_t i = 0; i < k; ++i) {
    y[i] = rest[pivots_[i]];
    if (y[i].is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!reduced_(i, c).is_zero()) rest[c] -= y[i] * reduced_(i, c);
  }
  if (!is_zero(rest)) return std::nullopt;
  Vec x(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (y[i].is_zero()) continue;
    for (std::size_t j = 0; j < k; ++j)
      if (!transform_(i, j).is_zero()) x[j] += y[i] * transform_(i, j);
  }
  return x;
}

Matrix Subspace::inclusion() const { return Matrix::from_columns(basis_, ambient_); }

UniPoly characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<CycloScalar> c(n + 1);
  c[n] = CycloScalar(1);
  Matrix M(n, n);
  Matrix I = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    M = a * M + c[n - k + 1] * I;
    c[n - k] = -(a * M).trace() / CycloScalar(static_cast<long>(k));
  }
  return UniPoly(c);
}

UniPoly minimal_polynomial(const Matrix& a) {
  const std::size_t n = a.rows();
  auto flat = [&](const Matrix& m) {
    Vec v;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v.push_back(m(r, c));
    return v;
  };
  std::vector<Vec> powers;
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vec v = flat(p);
    if (!powers.empty()) {
      auto sol = solve(Matrix::from_columns(powers, n * n), v);
      if (sol) {
        std::vector<CycloScalar> coeffs;
        for (auto& s : *sol) coeffs.push_back(-s);
        coeffs.emplace_back(1);
        return UniPoly(coeffs);
      }
    }
    powers.push_back(v);
    p = p * a;
  }
  throw Error(ErrorKind::VerificationFailure, "minimal polynomial degree exceeds dimension");
}

}  // namespace hopfsuper
