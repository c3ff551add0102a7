#include "hopfsuper/hopf.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "hopfsuper/error.hpp"

namespace hopfsuper {

namespace {

void sparse_add(SparseVec& v, std::size_t k, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(v.begin(), v.end(), k, [](const auto& e, std::size_t key) { return e.first < key; });
  if (it != v.end() && it->first == k) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  } else {
    v.insert(it, {k, c});
  }
}

struct Entry {
  std::size_t r, c;
  CycloScalar v;
};

std::vector<Entry> nonzeros(const Matrix& m) {
  std::vector<Entry> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out.push_back({r, c, m(r, c)});
  return out;
}

std::string label(const HopfSuperData& h, std::size_t i) {
  return i < h.labels.size() ? h.labels[i] : "e" + std::to_string(i);
}

}  // namespace

HopfSuperData HopfSuperData::zero(std::string name, int conductor, std::vector<int> parity,
                                  std::vector<std::string> labels) {
  HopfSuperData h;
  const std::size_t d = parity.size();
  h.name = std::move(name);
  h.conductor = conductor;
  h.parity = std::move(parity);
  if (labels.empty())
    for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i));
  h.labels = std::move(labels);
  h.unit = Vec(d);
  h.counit = Vec(d);
  h.mult.assign(d * d, {});
  h.comult.assign(d, {});
  h.antipode = Matrix(d, d);
  return h;
}

bool HopfSuperData::purely_even() const {
  return std::all_of(parity.begin(), parity.end(), [](int p) { return p == 0; });
}

std::size_t HopfSuperData::dim_odd() const {
  return static_cast<std::size_t>(std::count(parity.begin(), parity.end(), 1));
}

std::size_t HopfSuperData::index_of(const std::string& l) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return i;
  throw Error(ErrorKind::UnknownName, "no basis element labelled '" + l + "' in " + name);
}

void HopfSuperData::add_mult(std::size_t i, std::size_t j, std::size_t k, const CycloScalar& c) {
  sparse_add(mult[i * dim() + j], k, c);
}

void HopfSuperData::add_comult(std::size_t i, std::size_t j, std::size_t k, const CycloScalar& c) {
  if (c.is_zero()) return;
  for (auto it = comult[i].begin(); it != comult[i].end(); ++it) {
    if (it->left == j && it->right == k) {
      it->coeff += c;
      if (it->coeff.is_zero()) comult[i].erase(it);
      return;
    }
  }
  comult[i].push_back({j, k, c});
}

void HopfSuperData::normalize() {
  for (auto& sv : mult) {
    std::sort(sv.begin(), sv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    sv.erase(std::remove_if(sv.begin(), sv.end(), [](const auto& e) { return e.second.is_zero(); }), sv.end());
  }
  for (auto& terms : comult) {
    std::sort(terms.begin(), terms.end(), [](const TensorTerm& a, const TensorTerm& b) {
      return a.left != b.left ? a.left < b.left : a.right < b.right;
    });
    terms.erase(std::remove_if(terms.begin(), terms.end(), [](const TensorTerm& t) { return t.coeff.is_zero(); }),
                terms.end());
  }
}

Vec HopfSuperData::multiply(const Vec& a, const Vec& b) const {
  const std::size_t d = dim();
  Vec out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      CycloScalar ab = a[i] * b[j];
      for (const auto& [k, c] : product(i, j)) out[k] += ab * c;
    }
  }
  return out;
}

Vec HopfSuperData::power(const Vec& a, unsigned e) const {
  Vec r = unit;
  for (unsigned i = 0; i < e; ++i) r = multiply(r, a);
  return r;
}

Matrix HopfSuperData::comultiply(const Vec& a) const {
  Matrix t(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& term : comult[i]) t(term.left, term.right) += a[i] * term.coeff;
  }
  return t;
}

Matrix HopfSuperData::tensor_multiply(const Matrix& x, const Matrix& y) const {
  Matrix out(dim(), dim());
  auto xs = nonzeros(x), ys = nonzeros(y);
  for (const auto& p : xs)
    for (const auto& q : ys) {
      CycloScalar coef = p.v * q.v;
      if (parity[p.c] && parity[q.r]) coef = -coef;
      const auto& left = product(p.r, q.r);
      const auto& right = product(p.c, q.c);
      for (const auto& [k1, c1] : left) {
        CycloScalar t = coef * c1;
        for (const auto& [k2, c2] : right) out(k1, k2) += t * c2;
      }
    }
  return out;
}

CycloScalar HopfSuperData::apply_counit(const Vec& a) const {
  CycloScalar s(0);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero() && !counit[i].is_zero()) s += a[i] * counit[i];
  return s;
}

Matrix HopfSuperData::left_mult_matrix(const Vec& a) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(a, basis(j)));
  return m;
}

Matrix HopfSuperData::right_mult_matrix(const Vec& a) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(basis(j), a));
  return m;
}

int HopfSuperData::parity_of(const Vec& a) const {
  bool even = false, odd = false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    (parity[i] ? odd : even) = true;
  }
  if (even && odd) return -1;
  return odd ? 1 : 0;
}

Vec HopfSuperData::graded_part(const Vec& a, int p) const {
  Vec r = a;
  for (std::size_t i = 0; i < dim(); ++i)
    if (parity[i] != p) r[i] = CycloScalar(0);
  return r;
}

bool same_structure(const HopfSuperData& a0, const HopfSuperData& b0) {
  if (a0.dim() != b0.dim() || a0.parity != b0.parity) return false;
  HopfSuperData a = a0, b = b0;
  a.normalize();
  b.normalize();
  if (a.unit != b.unit || a.counit != b.counit) return false;
  if (!(a.antipode == b.antipode)) return false;
  for (std::size_t i = 0; i < a.mult.size(); ++i) {
    if (a.mult[i].size() != b.mult[i].size()) return false;
    for (std::size_t t = 0; t < a.mult[i].size(); ++t)
      if (a.mult[i][t].first != b.mult[i][t].first || a.mult[i][t].second != b.mult[i][t].second) return false;
  }
  for (std::size_t i = 0; i < a.comult.size(); ++i) {
    if (a.comult[i].size() != b.comult[i].size()) return false;
    for (std::size_t t = 0; t < a.comult[i].size(); ++t) {
      const auto &x = a.comult[i][t], &y = b.comult[i][t];
      if (x.left != y.left || x.right != y.right || x.coeff != y.coeff) return false;
    }
  }
  return true;
}

// ---------------- Report ----------------

void Report::add(const std::string& name, bool passed, const std::string& detail) {
  checks.push_back({name, passed, detail});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string Report::to_string() const {
  std::string out;
  for (const auto& c : checks) {
    out += (c.passed ? "ok    " : "FAIL  ") + c.name;
    if (!c.detail.empty()) out += "  (" + c.detail + ")";
    out += "\n";
  }
  return out;
}

// ---------------- axioms ----------------

template <class K>
bool same_sparse(std::map<K, CycloScalar>& a, std::map<K, CycloScalar>& b) {
  std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(b, [](const auto& kv) { return kv.second.is_zero(); });
  return a == b;
}

Report verify_axioms(const HopfSuperData& h) {
  Report rep;
  const std::size_t d = h.dim();
  auto L = [&](std::size_t i) { return label(h, i); };

  {
    std::string bad;
    for (std::size_t i = 0; i < d && bad.empty(); ++i) {
      if (h.parity[i] && !h.unit[i].is_zero()) bad = "unit has odd component " + L(i);
      if (h.parity[i] && !h.counit[i].is_zero()) bad = "counit nonzero on odd " + L(i);
    }
    for (std::size_t i = 0; i < d && bad.empty(); ++i)
      for (std::size_t j = 0; j < d && bad.empty(); ++j)
        for (const auto& [k, c] : h.product(i, j))
          if (h.parity[k] != (h.parity[i] ^ h.parity[j])) {
            bad = L(i) + "*" + L(j) + " has component " + L(k);
            break;
          }
    for (std::size_t i = 0; i < d && bad.empty(); ++i)
      for (const auto& t : h.comult[i])
        if ((h.parity[t.left] ^ h.parity[t.right]) != h.parity[i]) {
          bad = "Delta(" + L(i) + ") has term " + L(t.left) + "(x)" + L(t.right);
          break;
        }
    for (std::size_t c = 0; c < d && bad.empty(); ++c)
      for (std::size_t r = 0; r < d; ++r)
        if (!h.antipode(r, c).is_zero() && h.parity[r] != h.parity[c]) {
          bad = "S(" + L(c) + ") has component " + L(r);
          break;
        }
    rep.add("parity", bad.empty(), bad);
  }

  {
    std::string bad;
    for (std::size_t i = 0; i < d && bad.empty(); ++i)
      for (std::size_t j = 0; j < d && bad.empty(); ++j)
        for (std::size_t k = 0; k < d; ++k) {
          std::map<std::size_t, CycloScalar> lhs, rhs;
          for (const auto& [m, c] : h.product(i, j))
            for (const auto& [n, c2] : h.product(m, k)) lhs[n] += c * c2;
          for (const auto& [m, c] : h.product(j, k))
            for (const auto& [n, c2] : h.product(i, m)) rhs[n] += c * c2;
          if (!same_sparse(lhs, rhs)) {
            bad = "(" + L(i) + "*" + L(j) + ")*" + L(k) + " != " + L(i) + "*(" + L(j) + "*" + L(k) + ")";
            break;
          }
        }
    rep.add("associativity", bad.empty(), bad);
  }

  {
    std::string bad;
    for (std::size_t i = 0; i < d && bad.empty(); ++i) {
      Vec e = h.basis(i);
      if (h.multiply(h.unit, e) != e || h.multiply(e, h.unit) != e) bad = "1*" + L(i) + " or " + L(i) + "*1";
    }
    rep.add("unit", bad.empty(), bad);
  }

  {
    std::string bad;
    for (std::size_t i = 0; i < d && bad.empty(); ++i) {
      std::map<std::array<std::size_t, 3>, CycloScalar> lhs, rhs;
      for (const auto& t : h.comult[i]) {
        for (const auto& u : h.comult[t.left]) lhs[{u.left, u.right, t.right}] += t.coeff * u.coeff;
        for (const auto& u : h.comult[t.right]) rhs[{t.left, u.left, u.right}] += t.coeff * u.coeff;
      }
      for (auto it = lhs.begin(); it != lhs.end();) it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
      for (auto it = rhs.begin(); it != rhs.end();) it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
      if (lhs != rhs) bad = "Delta(" + L(i) + ")";
    }
    rep.add("coassociativity", bad.empty(), bad);
  }

  {
    std::string bad;
    for (std::size_t i = 0; i < d && bad.empty(); ++i) {
      Vec l(d), r(d);
      for (const auto& t : h.comult[i]) {
        l[t.right] += h.counit[t.left] * t.coeff;
        r[t.left] += h.counit[t.right] * t.coeff;
      }
      if (l != h.basis(i) || r != h.basis(i)) bad = L(i);
    }
    rep.add("counit", bad.empty(), bad);
  }

  {
    std::string bad;
    using Pair = std::pair<std::size_t, std::size_t>;
    for (std::size_t i = 0; i < d && bad.empty(); ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::map<Pair, CycloScalar> lhs, rhs;
        for (const auto& [k, c] : h.product(i, j))
          for (const auto& t : h.comult[k]) lhs[{t.left, t.right}] += c * t.coeff;
        for (const auto& p : h.comult[i])
          for (const auto& q : h.comult[j]) {
            CycloScalar coef = p.coeff * q.coeff;
            if (h.parity[p.right] && h.parity[q.left]) coef = -coef;
            for (const auto& [k1, c1] : h.product(p.left, q.left)) {
              CycloScalar t = coef * c1;
              for (const auto& [k2, c2] : h.product(p.right, q.right)) rhs[{k1, k2}] += t * c2;
            }
          }
        if (!same_sparse(lhs, rhs)) {
          bad = "Delta(" + L(i) + "*" + L(j) + ")";
          break;
        }
      }
    rep.add("comult_multiplicative", bad.empty(), bad);
    Matrix uu(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) uu(a, b) = h.unit[a] * h.unit[b];
    rep.add("comult_unital", h.comultiply(h.unit) == uu);
  }

  {
    std::string bad;
    for (std::size_t i = 0; i < d && bad.empty(); ++i)
      for (std::size_t j = 0; j < d; ++j) {
        CycloScalar e(0);
        for (const auto& [k, c] : h.product(i, j)) e += c * h.counit[k];
        if (e != h.counit[i] * h.counit[j]) {
          bad = "eps(" + L(i) + "*" + L(j) + ")";
          break;
        }
      }
    if (bad.empty() && !h.apply_counit(h.unit).is_one()) bad = "eps(1) != 1";
    rep.add("counit_multiplicative", bad.empty(), bad);
  }

  {
    std::string bad;
    for (std::size_t i = 0; i < d && bad.empty(); ++i) {
      Vec l(d), r(d);
      for (const auto& t : h.comult[i]) {
        axpy(l, t.coeff, h.multiply(h.antipode.column(t.left), h.basis(t.right)));
        axpy(r, t.coeff, h.multiply(h.basis(t.left), h.antipode.column(t.right)));
      }
      Vec target = h.counit[i] * h.unit;
      if (l != target || r != target) bad = L(i);
    }
    rep.add("antipode", bad.empty(), bad);
  }
  return rep;
}

void certify(const HopfSuperData& h) {
  Report r = verify_axioms(h);
  if (r.ok()) return;
  std::string msg = h.name + " fails:";
  for (const auto& c : r.checks)
    if (!c.passed) msg += " " + c.name + (c.detail.empty() ? "" : " [" + c.detail + "]");
  throw Error(ErrorKind::AxiomFailure, msg);
}

// ---------------- constructions ----------------

HopfSuperData dual(const HopfSuperData& h, bool check) {
  std::vector<std::string> labels;
  for (const auto& l : h.labels) labels.push_back(l + "*");
  std::string name = h.name + "*";
  HopfSuperData D = HopfSuperData::zero(name, h.conductor, h.parity, labels);
  const std::size_t d = h.dim();
  for (std::size_t k = 0; k < d; ++k)
    for (const auto& t : h.comult[k]) D.add_mult(t.left, t.right, k, t.coeff);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : h.product(i, j)) D.add_comult(k, i, j, c);
  D.unit = h.counit;
  D.counit = h.unit;
  D.antipode = h.antipode.transpose();
  D.normalize();
  if (check) certify(D);
  return D;
}

HopfSuperData tensor_product(const HopfSuperData& a, const HopfSuperData& b, bool check) {
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<int> parity;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      parity.push_back(a.parity[i] ^ b.parity[j]);
      labels.push_back(a.labels[i] + "(x)" + b.labels[j]);
    }
  HopfSuperData T =
      HopfSuperData::zero(a.name + "(x)" + b.name, lcm_conductor(a.conductor, b.conductor), parity, labels);
  auto idx = [db](std::size_t i, std::size_t j) { return i * db + j; };
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      T.unit[idx(i, j)] = a.unit[i] * b.unit[j];
      T.counit[idx(i, j)] = a.counit[i] * b.counit[j];
    }
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          CycloScalar sign = (b.parity[j] && a.parity[k]) ? CycloScalar(-1) : CycloScalar(1);
          for (const auto& [m, c1] : a.product(i, k))
            for (const auto& [n, c2] : b.product(j, l)) T.add_mult(idx(i, j), idx(k, l), idx(m, n), sign * c1 * c2);
        }
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (const auto& s : a.comult[i])
        for (const auto& t : b.comult[j]) {
          CycloScalar c = s.coeff * t.coeff;
          if (a.parity[s.right] && b.parity[t.left]) c = -c;
          T.add_comult(idx(i, j), idx(s.left, t.left), idx(s.right, t.right), c);
        }
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) T.antipode(idx(k, l), idx(i, j)) = a.antipode(k, i) * b.antipode(l, j);
  T.normalize();
  if (check) certify(T);
  return T;
}

HopfSuperData change_basis(const HopfSuperData& h, const Matrix& p, std::vector<std::string> labels,
                           const std::string& name) {
  const std::size_t d = h.dim();
  auto q = inverse(p);
  if (!q) throw Error(ErrorKind::BadParams, "change of basis matrix is singular");
  std::vector<int> parity;
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < d; ++c) {
    cols.push_back(p.column(c));
    int par = h.parity_of(cols.back());
    if (par < 0) throw Error(ErrorKind::ParityMismatch, "new basis vector " + std::to_string(c) + " is inhomogeneous");
    parity.push_back(par);
  }
  HopfSuperData n = HopfSuperData::zero(name.empty() ? h.name : name, h.conductor, parity, std::move(labels));
  n.unit = q->apply(h.unit);
  for (std::size_t c = 0; c < d; ++c) n.counit[c] = h.apply_counit(cols[c]);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec prod = q->apply(h.multiply(cols[i], cols[j]));
      for (std::size_t k = 0; k < d; ++k) n.add_mult(i, j, k, prod[k]);
    }
  Matrix qt = q->transpose();
  for (std::size_t i = 0; i < d; ++i) {
    Matrix t = (*q) * h.comultiply(cols[i]) * qt;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) n.add_comult(i, a, b, t(a, b));
  }
  n.antipode = (*q) * h.antipode * p;
  n.normalize();
  return n;
}

Report verify_algebra_morphism(const HopfSuperData& a, const HopfSuperData& b, const Matrix& m) {
  Report rep;
  const std::size_t da = a.dim();
  std::string bad;
  std::vector<Vec> img;
  for (std::size_t i = 0; i < da; ++i) {
    img.push_back(m.column(i));
    int par = b.parity_of(img.back());
    if (!is_zero(img.back()) && par != a.parity[i]) bad = "image of " + label(a, i) + " has wrong parity";
  }
  rep.add("parity", bad.empty(), bad);
  rep.add("unit", m.apply(a.unit) == b.unit);
  bad.clear();
  for (std::size_t i = 0; i < da && bad.empty(); ++i)
    for (std::size_t j = 0; j < da; ++j) {
      Vec prod(da);
      for (const auto& [k, c] : a.product(i, j)) prod[k] = c;
      if (m.apply(prod) != b.multiply(img[i], img[j])) {
        bad = label(a, i) + "*" + label(a, j);
        break;
      }
    }
  rep.add("multiplicative", bad.empty(), bad);
  return rep;
}

Report verify_hopf_morphism(const HopfSuperData& a, const HopfSuperData& b, const Matrix& m) {
  Report rep = verify_algebra_morphism(a, b, m);
  const std::size_t da = a.dim();
  std::string bad;
  for (std::size_t i = 0; i < da && bad.empty(); ++i)
    if (b.apply_counit(m.column(i)) != a.counit[i]) bad = label(a, i);
  rep.add("counit", bad.empty(), bad);
  bad.clear();
  Matrix mt = m.transpose();
  for (std::size_t i = 0; i < da && bad.empty(); ++i)
    if (!(m * a.comultiply(a.basis(i)) * mt == b.comultiply(m.column(i)))) bad = label(a, i);
  rep.add("comultiplicative", bad.empty(), bad);
  rep.add("antipode", m * a.antipode == b.antipode * m);
  return rep;
}

Report verify_isomorphism(const HopfSuperData& a, const HopfSuperData& b, const Matrix& m) {
  Report rep;
  bool square = a.dim() == b.dim() && m.rows() == b.dim() && m.cols() == a.dim();
  rep.add("dimension", square);
  if (!square) return rep;
  rep.add("bijective", inverse(m).has_value());
  rep.merge(verify_hopf_morphism(a, b, m));
  return rep;
}

Vec left_hit(const HopfSuperData& h, const Vec& alpha, const Vec& a) {
  Matrix t = h.comultiply(a);
  Vec out(h.dim());
  for (std::size_t j = 0; j < h.dim(); ++j)
    for (std::size_t k = 0; k < h.dim(); ++k)
      if (!t(j, k).is_zero() && !alpha[k].is_zero()) out[j] += t(j, k) * alpha[k];
  return out;
}

Vec right_hit(const HopfSuperData& h, const Vec& alpha, const Vec& a) {
  Matrix t = h.comultiply(a);
  Vec out(h.dim());
  for (std::size_t j = 0; j < h.dim(); ++j)
    for (std::size_t k = 0; k < h.dim(); ++k)
      if (!t(j, k).is_zero() && !alpha[j].is_zero()) out[k] += alpha[j] * t(j, k);
  return out;
}

Vec convolve(const HopfSuperData& h, const Vec& f, const Vec& g) {
  Vec out(h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k)
    for (const auto& t : h.comult[k])
      if (!f[t.left].is_zero() && !g[t.right].is_zero()) out[k] += t.coeff * f[t.left] * g[t.right];
  return out;
}

CycloScalar pair(const Vec& functional, const Vec& a) {
  CycloScalar s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !functional[i].is_zero()) s += functional[i] * a[i];
  return s;
}

namespace {

// Kernel of the stacked linear maps v -> f_k(v), restricted to basis indices in `support`.
std::vector<Vec> restricted_kernel(std::size_t d, const std::vector<std::size_t>& support,
                                   const std::vector<std::vector<Vec>>& images) {
  // images[s] lists, for support element s, the stacked image vector pieces.
  if (support.empty()) return {};
  std::size_t rows = 0;
  for (const auto& piece : images[0]) rows += piece.size();
  Matrix m(rows, support.size());
  for (std::size_t s = 0; s < support.size(); ++s) {
    std::size_t r = 0;
    for (const auto& piece : images[s])
      for (const auto& c : piece) m(r++, s) = c;
  }
  std::vector<Vec> out;
  for (const auto& k : kernel(m)) {
    Vec v(d);
    for (std::size_t s = 0; s < support.size(); ++s) v[support[s]] = k[s];
    out.push_back(std::move(v));
  }
  return span_basis(out, d);
}

}  // namespace

std::vector<Vec> center(const HopfSuperData& h) {
  const std::size_t d = h.dim();
  std::vector<std::size_t> support(d);
  std::vector<std::vector<Vec>> images(d);
  for (std::size_t i = 0; i < d; ++i) {
    support[i] = i;
    for (std::size_t j = 0; j < d; ++j)
      images[i].push_back(h.multiply(h.basis(i), h.basis(j)) - h.multiply(h.basis(j), h.basis(i)));
  }
  return restricted_kernel(d, support, images);
}

std::vector<Vec> supercenter(const HopfSuperData& h) {
  const std::size_t d = h.dim();
  std::vector<Vec> out;
  for (int p = 0; p < 2; ++p) {
    std::vector<std::size_t> support;
    std::vector<std::vector<Vec>> images;
    for (std::size_t i = 0; i < d; ++i) {
      if (h.parity[i] != p) continue;
      support.push_back(i);
      std::vector<Vec> pieces;
      for (std::size_t j = 0; j < d; ++j) {
        CycloScalar sign = (p && h.parity[j]) ? CycloScalar(-1) : CycloScalar(1);
        pieces.push_back(h.multiply(h.basis(i), h.basis(j)) - sign * h.multiply(h.basis(j), h.basis(i)));
      }
      images.push_back(std::move(pieces));
    }
    for (auto& v : restricted_kernel(d, support, images)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> skew_primitives(const HopfSuperData& h, const Vec& g, int p) {
  const std::size_t d = h.dim();
  std::vector<std::size_t> support;
  std::vector<std::vector<Vec>> images;
  for (std::size_t i = 0; i < d; ++i) {
    if (h.parity[i] != p) continue;
    support.push_back(i);
    Matrix t = h.comultiply(h.basis(i));
    for (std::size_t a = 0; a < d; ++a) {
      t(a, i) -= g[a];
      t(i, a) -= h.unit[a];
    }
    Vec flat;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) flat.push_back(t(a, b));
    images.push_back({flat});
  }
  return restricted_kernel(d, support, images);
}

bool is_commutative(const HopfSuperData& h) {
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j) {
      const auto &a = h.product(i, j), &b = h.product(j, i);
      if (a.size() != b.size()) return false;
      for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t].first != b[t].first || a[t].second != b[t].second) return false;
    }
  return true;
}

bool is_supercommutative(const HopfSuperData& h) { return supercenter(h).size() == h.dim(); }

bool is_cocommutative(const HopfSuperData& h) {
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Matrix t = h.comultiply(h.basis(i));
    if (!(t == t.transpose())) return false;
  }
  return true;
}

bool is_grouplike(const HopfSuperData& h, const Vec& g) {
  if (is_zero(g)) return false;
  Matrix gg(h.dim(), h.dim());
  for (std::size_t a = 0; a < h.dim(); ++a)
    for (std::size_t b = 0; b < h.dim(); ++b) gg(a, b) = g[a] * g[b];
  return h.comultiply(g) == gg && h.apply_counit(g).is_one();
}

namespace {

std::string coefficient_prefix(const CycloScalar& c, bool first, std::string& sep) {
  std::vector<int> nz;
  for (std::size_t i = 0; i < c.coeffs().size(); ++i)
    if (c.coeffs()[i] != 0) nz.push_back(static_cast<int>(i));
  bool single = nz.size() == 1;
  bool neg = single && c.coeffs()[nz[0]] < 0;
  sep = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  CycloScalar mag = neg ? -c : c;
  if (mag.is_one()) return "";
  std::string s = mag.to_string();
  return single ? s + "*" : "(" + s + ")*";
}

}  // namespace

std::string format_element(const HopfSuperData& h, const Vec& v) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string sep;
    std::string pre = coefficient_prefix(v[i], first, sep);
    out += sep + pre + label(h, i);
    first = false;
  }
  return first ? "0" : out;
}

std::string format_tensor(const HopfSuperData& h, const Matrix& t) {
  std::string out;
  bool first = true;
  for (std::size_t a = 0; a < t.rows(); ++a)
    for (std::size_t b = 0; b < t.cols(); ++b) {
      if (t(a, b).is_zero()) continue;
      std::string sep;
      std::string pre = coefficient_prefix(t(a, b), first, sep);
      out += sep + pre + label(h, a) + "(x)" + label(h, b);
      first = false;
    }
  return first ? "0" : out;
}

}  // namespace hopfsuper
