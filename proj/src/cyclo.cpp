#include "hopfsuper/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "hopfsuper/error.hpp"
#include "qpoly.hpp"

namespace hopfsuper {

using detail::QPoly;

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::IncompatibleConductor, "conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<mpz_class>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed without recursion
  // into the locked function.
  std::map<int, QPoly> local;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    QPoly num(d + 1);
    num[0] = -1;
    num[d] = 1;
    for (auto& [e, pe] : local)
      if (d % e == 0) num = detail::qp_divmod(num, pe).first;
    local[d] = num;
  }
  std::vector<mpz_class> out;
  for (const auto& c : local[n]) out.push_back(c.get_num());
  return cache.emplace(n, std::move(out)).first->second;
}

namespace {

// Reduce a polynomial in zeta_n (any length) to the power basis.
std::vector<Rational> reduce(int n, std::vector<Rational> v) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const int phi = static_cast<int>(phi_poly.size()) - 1;
  if (static_cast<int>(v.size()) > n) {
    for (std::size_t i = n; i < v.size(); ++i) v[i % n] += v[i];
    v.resize(n);
  }
  for (int k = static_cast<int>(v.size()) - 1; k >= phi; --k) {
    if (v[k] == 0) continue;
    Rational c = v[k];
    for (int j = 0; j < phi; ++j)
      if (phi_poly[j] != 0) v[k - phi + j] -= c * phi_poly[j];
    v[k] = 0;
  }
  v.resize(phi);
  return v;
}

}  // namespace

CycloScalar::CycloScalar() : n_(1), c_(1) {}
CycloScalar::CycloScalar(long v) : n_(1), c_{Rational(v)} {}
CycloScalar::CycloScalar(const Rational& q) : n_(1), c_{q} {}
CycloScalar::CycloScalar(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}

CycloScalar CycloScalar::rational(const Rational& q, int conductor) {
  std::vector<Rational> c(euler_phi(conductor));
  c[0] = q;
  return CycloScalar(conductor, std::move(c));
}

CycloScalar CycloScalar::zeta(int n, long k) {
  if (n < 1) throw Error(ErrorKind::IncompatibleConductor, "conductor must be positive");
  long e = ((k % n) + n) % n;
  std::vector<Rational> v(e + 1);
  v[e] = 1;
  return CycloScalar(n, reduce(n, std::move(v)));
}

CycloScalar CycloScalar::from_poly(int n, const std::vector<Rational>& c) {
  if (n < 1) throw Error(ErrorKind::IncompatibleConductor, "conductor must be positive");
  std::vector<Rational> v = c;
  if (v.empty()) v.resize(1);
  return CycloScalar(n, reduce(n, std::move(v)));
}

CycloScalar CycloScalar::sqrt2() { return zeta(8, 1) - zeta(8, 3); }

bool CycloScalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool CycloScalar::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

bool CycloScalar::is_one() const { return c_[0] == 1 && is_rational(); }

CycloScalar CycloScalar::embed(int m) const {
  if (m == n_) return *this;
  if (m < 1 || m % n_ != 0)
    throw Error(ErrorKind::IncompatibleConductor,
                "cannot embed Q(zeta" + std::to_string(n_) + ") into Q(zeta" + std::to_string(m) + ")");
  if (is_rational()) return rational(c_[0], m);
  const int r = m / n_;
  std::vector<Rational> v((c_.size() - 1) * r + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * r] = c_[i];
  return CycloScalar(m, reduce(m, std::move(v)));
}

CycloScalar CycloScalar::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero scalar");
  if (is_rational()) return rational(1 / c_[0], n_);
  QPoly a(c_.begin(), c_.end());
  detail::qp_trim(a);
  const auto& pz = cyclotomic_polynomial(n_);
  QPoly m(pz.begin(), pz.end());
  QPoly s;
  if (!detail::qp_inverse_mod(a, m, s)) throw Error(ErrorKind::DivisionByZero, "scalar not invertible");
  return from_poly(n_, s);
}

CycloScalar CycloScalar::galois(long k) const {
  if (std::gcd(k, static_cast<long>(n_)) != 1)
    throw Error(ErrorKind::BadParams, "Galois exponent must be coprime to the conductor");
  long kk = ((k % n_) + n_) % n_;
  std::vector<Rational> v(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < c_.size(); ++i) v[(i * kk) % n_] += c_[i];
  return from_poly(n_, v);
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  if (n_ % o.n_ == 0 && o.is_zero()) return *this;
  if (o.n_ == n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  int m = std::lcm(n_, o.n_);
  CycloScalar b = o.embed(m);
  *this = embed(m);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
  if (n_ % o.n_ == 0 && o.is_zero()) return *this;
  if (o.n_ == n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  int m = std::lcm(n_, o.n_);
  CycloScalar b = o.embed(m);
  *this = embed(m);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  if (o.is_rational()) {
    if (o.n_ != n_ && n_ % o.n_ != 0) *this = embed(std::lcm(n_, o.n_));
    if (o.c_[0] == 1) return *this;
    const Rational q = o.c_[0];
    for (auto& c : c_) c *= q;
    return *this;
  }
  if (is_rational()) {
    Rational q = c_[0];
    CycloScalar b = (o.n_ == n_ || o.n_ % n_ == 0) ? o : o.embed(std::lcm(n_, o.n_));
    for (auto& c : b.c_) c *= q;
    *this = std::move(b);
    return *this;
  }
  int m = std::lcm(n_, o.n_);
  CycloScalar a = embed(m), b = o.embed(m);
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) v[i + j] += a.c_[i] * b.c_[j];
  }
  n_ = m;
  c_ = reduce(m, std::move(v));
  return *this;
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& o) { return *this *= o.inv(); }

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  return compare(a, b) == 0;
}

CycloScalar CycloScalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycloScalar result = rational(1, n_), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string CycloScalar::to_string() const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    bool neg = c_[i] < 0;
    Rational mag = abs(c_[i]);
    std::string term;
    if (i == 0) {
      term = mag.get_str();
    } else {
      if (mag != 1) term = mag.get_str() + "*";
      term += "zeta" + std::to_string(n_);
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (first)
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
    first = false;
  }
  return first ? "0" : out;
}

int compare(const CycloScalar& a, const CycloScalar& b) {
  int m = std::lcm(a.conductor(), b.conductor());
  CycloScalar x = a.embed(m), y = b.embed(m);
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    int c = cmp(x.coeffs()[i], y.coeffs()[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

// ---------------- UniPoly ----------------

UniPoly::UniPoly(std::vector<CycloScalar> c) : c_(std::move(c)) { trim(); }

UniPoly UniPoly::constant(const CycloScalar& a) { return UniPoly({a}); }
UniPoly UniPoly::x() { return UniPoly({CycloScalar(0), CycloScalar(1)}); }
UniPoly UniPoly::linear_root(const CycloScalar& r) { return UniPoly({-r, CycloScalar(1)}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycloScalar UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return CycloScalar(0);
  return c_[i];
}

CycloScalar UniPoly::eval(const CycloScalar& x) const {
  CycloScalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<CycloScalar> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * CycloScalar(static_cast<long>(i)));
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  CycloScalar li = c_.back().inv();
  std::vector<CycloScalar> r;
  for (const auto& c : c_) r.push_back(c * li);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::shift(const CycloScalar& s) const {
  // Horner in the ring: result = (...(a_n)(x+s) + a_{n-1})(x+s) + ...
  UniPoly xs({s, CycloScalar(1)});
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xs + constant(*it);
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return UniPoly();
  std::vector<CycloScalar> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly operator*(const CycloScalar& s, const UniPoly& a) {
  std::vector<CycloScalar> r;
  for (const auto& c : a.c_) r.push_back(s * c);
  return UniPoly(std::move(r));
}

bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string mon = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mon.empty())
      out += "(" + c_[i].to_string() + ")";
    else if (c_[i].is_one())
      out += mon;
    else
      out += "(" + c_[i].to_string() + ")*" + mon;
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<CycloScalar> r = a.coeffs();
  if (r.size() < b.coeffs().size()) return {UniPoly(), a};
  std::vector<CycloScalar> q(r.size() - b.coeffs().size() + 1);
  CycloScalar li = b.lead().inv();
  const int db = b.degree();
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    if (r[k].is_zero()) continue;
    CycloScalar c = r[k] * li;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b.coeffs()[j];
  }
  r.resize(db);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<CycloScalar> RootMultiset::flat() const {
  std::vector<CycloScalar> out;
  for (const auto& [r, m] : roots)
    for (int i = 0; i < m; ++i) out.push_back(r);
  return out;
}

std::size_t RootMultiset::count() const {
  std::size_t n = 0;
  for (const auto& rm : roots) n += rm.second;
  return n;
}

// ---------------- root finding ----------------

namespace {

Rational rational_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// N_{K/Q}(y) for y in Q(zeta_n), as det of the multiplication matrix.
Rational field_norm(const CycloScalar& y, int n) {
  CycloScalar yy = y.embed(n);
  const int phi = euler_phi(n);
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi));
  CycloScalar col = yy;
  CycloScalar z = CycloScalar::zeta(n);
  for (int j = 0; j < phi; ++j) {
    for (int i = 0; i < phi; ++i) m[i][j] = col.coeffs()[i];
    col *= z;
  }
  return rational_det(std::move(m));
}

// Norm of g(x - s*zeta) as a polynomial over Q, via interpolation.
QPoly norm_poly(const UniPoly& g, long s, int n) {
  const int phi = euler_phi(n);
  const int D = g.degree() * phi;
  CycloScalar sz = CycloScalar(s) * CycloScalar::zeta(n);
  std::vector<Rational> xs, ys;
  for (int t = 0; t <= D; ++t) {
    xs.emplace_back(t);
    ys.push_back(field_norm(g.eval(CycloScalar(t) - sz), n));
  }
  // Newton divided differences.
  std::vector<Rational> coef = ys;
  for (int j = 1; j <= D; ++j)
    for (int i = D; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  QPoly result = {coef[D]};
  for (int i = D - 1; i >= 0; --i) {
    result = detail::qp_mul(result, QPoly{-xs[i], 1});
    if (result.empty()) result.resize(1);
    result[0] += coef[i];
  }
  detail::qp_trim(result);
  return result;
}

UniPoly lift_rational(const detail::ZPoly& p) {
  std::vector<CycloScalar> c;
  for (const auto& z : p) c.emplace_back(Rational(z));
  return UniPoly(std::move(c));
}

std::vector<CycloScalar> squarefree_roots(const UniPoly& g, int n, std::uint64_t fuel, bool& complete) {
  if (g.degree() < 1) return {};
  if (g.degree() == 1) return {-g.coeff(0) / g.coeff(1)};
  const int phi = euler_phi(n);
  QPoly N;
  long shift = 0;
  bool ok = false;
  for (int attempt = 0; attempt < 41; ++attempt) {
    shift = (attempt % 2 == 1) ? (attempt + 1) / 2 : -(attempt / 2);
    if (phi == 1 && shift != 0) break;
    N = norm_poly(g, shift, n);
    QPoly d = detail::qp_gcd(N, detail::qp_derivative(N));
    if (detail::qp_degree(d) == 0) {
      ok = true;
      break;
    }
  }
  if (!ok) throw Error(ErrorKind::FuelExhausted, "no squarefree norm found for root isolation");
  auto fac = detail::factor_squarefree(detail::z_primitive(N), fuel);
  if (!fac.complete) complete = false;
  std::vector<CycloScalar> roots;
  CycloScalar sz = CycloScalar(shift) * CycloScalar::zeta(n);
  for (const auto& Ni : fac.factors) {
    int d = static_cast<int>(Ni.size()) - 1;
    if (d < 1 || d > phi) continue;
    UniPoly h = gcd(g, lift_rational(Ni).shift(sz));
    if (h.degree() == 1) roots.push_back(-h.coeff(0));
  }
  return roots;
}

}  // namespace

RootMultiset find_roots(const UniPoly& f, int conductor, std::uint64_t fuel) {
  if (f.is_zero()) throw Error(ErrorKind::BadParams, "roots of the zero polynomial");
  RootMultiset out;
  if (f.degree() == 0) return out;
  int n = conductor;
  for (const auto& c : f.coeffs()) n = std::lcm(n, c.conductor());
  UniPoly fm = f.monic();
  UniPoly g = divmod(fm, gcd(fm, fm.derivative())).first;
  auto distinct = squarefree_roots(g, n, fuel, out.complete);
  std::sort(distinct.begin(), distinct.end(),
            [](const CycloScalar& a, const CycloScalar& b) { return compare(a, b) < 0; });
  int total = 0;
  for (auto& r : distinct) {
    int mult = 0;
    UniPoly h = fm;
    for (;;) {
      auto [q, rem] = divmod(h, UniPoly::linear_root(r));
      if (!rem.is_zero()) break;
      ++mult;
      h = q;
    }
    total += mult;
    out.roots.emplace_back(r.embed(n), mult);
  }
  out.unsplit_degree = f.degree() - total;
  return out;
}

}  // namespace hopfsuper
