#include "hopfsuper/characters.hpp"

#include <algorithm>
#include <map>

#include "hopfsuper/error.hpp"

namespace hopfsuper {

Algebra Algebra::of(const HopfSuperData& h) {
  Algebra a;
  a.dim = h.dim();
  a.conductor = h.conductor;
  a.mult = h.mult;
  a.unit = h.unit;
  return a;
}

Algebra Algebra::dual_of(const HopfSuperData& h) {
  Algebra a;
  a.dim = h.dim();
  a.conductor = h.conductor;
  a.mult.assign(a.dim * a.dim, {});
  std::vector<std::map<std::size_t, CycloScalar>> acc(a.dim * a.dim);
  for (std::size_t k = 0; k < a.dim; ++k)
    for (const auto& t : h.comult[k]) acc[t.left * a.dim + t.right][k] += t.coeff;
  for (std::size_t i = 0; i < acc.size(); ++i)
    for (auto& [k, c] : acc[i])
      if (!c.is_zero()) a.mult[i].emplace_back(k, c);
  a.unit = h.counit;
  return a;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      CycloScalar xy = x[i] * y[j];
      for (const auto& [k, c] : mult[i * dim + j]) out[k] += xy * c;
    }
  }
  return out;
}

bool Algebra::commutative() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      Vec a = multiply(unit_vec(dim, i), unit_vec(dim, j));
      Vec b = multiply(unit_vec(dim, j), unit_vec(dim, i));
      if (a != b) return false;
    }
  return true;
}

Quotient quotient(const Algebra& a, const std::vector<Vec>& ideal) {
  std::vector<Vec> rows = span_basis(ideal, a.dim);
  std::vector<std::size_t> pivots;
  for (const auto& r : rows) {
    std::size_t p = 0;
    while (r[p].is_zero()) ++p;
    pivots.push_back(p);
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < a.dim; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) keep.push_back(c);

  auto reduce = [&](Vec v) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!v[pivots[i]].is_zero()) axpy(v, -v[pivots[i]], rows[i]);
    Vec out(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) out[i] = v[keep[i]];
    return out;
  };

  Quotient q;
  q.algebra.dim = keep.size();
  q.algebra.conductor = a.conductor;
  q.projection = Matrix(keep.size(), a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) q.projection.set_column(i, reduce(unit_vec(a.dim, i)));
  q.algebra.unit = reduce(a.unit);
  q.algebra.mult.assign(keep.size() * keep.size(), {});
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      Vec p = reduce(a.multiply(unit_vec(a.dim, keep[i]), unit_vec(a.dim, keep[j])));
      for (std::size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero()) q.algebra.mult[i * keep.size() + j].emplace_back(k, p[k]);
    }
  return q;
}

std::vector<Vec> two_sided_ideal(const Algebra& a, const std::vector<Vec>& generators) {
  std::vector<Vec> basis = span_basis(generators, a.dim);
  for (;;) {
    std::vector<Vec> grown = basis;
    for (const auto& s : basis)
      for (std::size_t k = 0; k < a.dim; ++k) {
        Vec e = unit_vec(a.dim, k);
        grown.push_back(a.multiply(e, s));
        grown.push_back(a.multiply(s, e));
      }
    std::vector<Vec> next = span_basis(grown, a.dim);
    if (next.size() == basis.size()) return next;
    basis = std::move(next);
  }
}

Quotient abelianization(const Algebra& a) {
  std::vector<Vec> commutators;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j) {
      Vec ei = unit_vec(a.dim, i), ej = unit_vec(a.dim, j);
      Vec c = a.multiply(ei, ej) - a.multiply(ej, ei);
      if (!is_zero(c)) commutators.push_back(std::move(c));
    }
  return quotient(a, two_sided_ideal(a, commutators));
}

std::vector<Vec> radical(const Algebra& a) {
  const std::size_t d = a.dim;
  Vec tr(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [m, c] : a.mult[k * d + j])
        if (m == j) tr[k] += c;
  Matrix form(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : a.mult[i * d + j]) form(i, j) += c * tr[k];
  return kernel(form);
}

namespace {

UniPoly element_minpoly(const Algebra& c, const Vec& b) {
  std::vector<Vec> powers = {c.unit};
  Vec p = c.unit;
  for (std::size_t k = 1; k <= c.dim; ++k) {
    p = c.multiply(p, b);
    auto sol = solve(Matrix::from_columns(powers, c.dim), p);
    if (sol) {
      std::vector<CycloScalar> coeffs;
      for (auto& s : *sol) coeffs.push_back(-s);
      coeffs.emplace_back(1);
      return UniPoly(coeffs);
    }
    powers.push_back(p);
  }
  throw Error(ErrorKind::VerificationFailure, "minimal polynomial not found");
}

void split(const Algebra& c, const Matrix& proj, std::vector<Vec>& out, std::size_t& missing) {
  if (c.dim == 0) return;
  if (c.dim == 1) {
    CycloScalar u = c.unit[0];
    Vec chi(proj.cols());
    for (std::size_t i = 0; i < proj.cols(); ++i) chi[i] = proj(0, i) / u;
    out.push_back(std::move(chi));
    return;
  }
  for (std::size_t b = 0; b < c.dim; ++b) {
    Vec eb = unit_vec(c.dim, b);
    UniPoly mp = element_minpoly(c, eb);
    if (mp.degree() < 2) continue;
    RootMultiset roots = find_roots(mp, c.conductor);
    if (!roots.complete) throw Error(ErrorKind::Incomplete, "root isolation ran out of fuel");
    std::size_t covered = 0;
    for (const auto& [r, mult] : roots.roots) {
      Vec shifted = eb - r * c.unit;
      std::vector<Vec> gens;
      for (std::size_t j = 0; j < c.dim; ++j) gens.push_back(c.multiply(shifted, unit_vec(c.dim, j)));
      Quotient q = quotient(c, gens);
      covered += q.algebra.dim;
      split(q.algebra, q.projection * proj, out, missing);
    }
    missing += c.dim - covered;
    return;
  }
  // Every basis element is a scalar multiple of the unit, so dim must be 1.
  throw Error(ErrorKind::VerificationFailure, "split algebra of dimension > 1 with scalar basis");
}

}  // namespace

CharacterSet characters(const Algebra& a) {
  Quotient ab = abelianization(a);
  Quotient ss = quotient(ab.algebra, radical(ab.algebra));
  CharacterSet out;
  split(ss.algebra, ss.projection * ab.projection, out.characters, out.missing);
  std::sort(out.characters.begin(), out.characters.end(), [](const Vec& x, const Vec& y) { return compare(x, y) < 0; });
  return out;
}

std::vector<Vec> hopf_characters(const HopfSuperData& h) {
  CharacterSet cs = characters(Algebra::of(h));
  if (!cs.complete())
    throw Error(ErrorKind::IncompleteCharacters,
                h.name + ": " + std::to_string(cs.missing) + " characters are not defined over the base field");
  auto it = std::find(cs.characters.begin(), cs.characters.end(), h.counit);
  if (it != cs.characters.end()) std::rotate(cs.characters.begin(), it, it + 1);
  return cs.characters;
}

std::size_t find_vec(const std::vector<Vec>& list, const Vec& v) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == v) return i;
  return static_cast<std::size_t>(-1);
}

namespace {

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> ps;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

GroupTable analyze_group(std::vector<std::vector<std::size_t>> table, std::size_t identity) {
  GroupTable g;
  g.table = std::move(table);
  g.identity = identity;
  const std::size_t n = g.table.size();
  for (std::size_t x = 0; x < n; ++x) {
    unsigned ord = 1;
    std::size_t p = x;
    while (p != identity) {
      p = g.table[p][x];
      ++ord;
      if (ord > n) throw Error(ErrorKind::NotClosed, "element of infinite order in finite table");
    }
    g.orders.push_back(ord);
  }
  for (std::size_t x = 0; x < n && g.abelian; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (g.table[x][y] != g.table[y][x]) {
        g.abelian = false;
        break;
      }
  if (!g.abelian || n == 1) return g;
  // Elementary divisors from counts of p^k-torsion, then invariant factors.
  std::vector<std::vector<unsigned>> prime_parts;  // per prime: exponents of cyclic factors
  for (unsigned p : prime_factors(static_cast<unsigned>(n))) {
    std::vector<unsigned> a = {0};  // a[k] = log_p #{x : x^{p^k} = 1}
    unsigned pk = 1;
    for (unsigned k = 1;; ++k) {
      pk *= p;
      std::size_t count = 0;
      for (unsigned o : g.orders)
        if (pk % o == 0) ++count;
      unsigned lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      a.push_back(lg);
      if (a[k] == a[k - 1]) break;
    }
    // number of factors with exponent >= k is a[k] - a[k-1]
    std::vector<unsigned> exps;
    for (std::size_t k = 1; k < a.size(); ++k) {
      unsigned ge_k = a[k] - a[k - 1];
      unsigned ge_next = k + 1 < a.size() ? a[k + 1] - a[k] : 0;
      for (unsigned t = 0; t < ge_k - ge_next; ++t) exps.push_back(static_cast<unsigned>(k));
    }
    std::vector<unsigned> powers;
    for (unsigned e : exps) {
      unsigned v = 1;
      for (unsigned t = 0; t < e; ++t) v *= p;
      powers.push_back(v);
    }
    std::sort(powers.rbegin(), powers.rend());
    prime_parts.push_back(powers);
  }
  std::size_t len = 0;
  for (const auto& pp : prime_parts) len = std::max(len, pp.size());
  std::vector<unsigned> inv(len, 1);
  for (const auto& pp : prime_parts)
    for (std::size_t i = 0; i < pp.size(); ++i) inv[i] *= pp[i];
  std::reverse(inv.begin(), inv.end());
  g.invariants = inv;
  return g;
}

std::string describe_group(const GroupTable& g) {
  if (g.order() == 1) return "trivial";
  if (!g.abelian) return "nonabelian of order " + std::to_string(g.order());
  std::string out;
  for (unsigned d : g.invariants) out += (out.empty() ? "" : " x ") + std::string("Z") + std::to_string(d);
  return out;
}

GrouplikeGroup grouplikes(const HopfSuperData& h, GrouplikeMode mode) {
  CharacterSet cs = characters(Algebra::dual_of(h));
  if (!cs.complete())
    throw Error(ErrorKind::Incomplete, h.name + ": " + std::to_string(cs.missing) +
                                           " grouplikes are not defined over the base field");
  GrouplikeGroup out;
  for (auto& g : cs.characters) {
    if (!is_grouplike(h, g)) throw Error(ErrorKind::NotGrouplike, "character of the dual is not grouplike");
    if (mode == GrouplikeMode::EvenHomogeneous && h.parity_of(g) != 0) continue;
    out.elements.push_back(g);
  }
  auto it = std::find(out.elements.begin(), out.elements.end(), h.unit);
  if (it != out.elements.end()) std::rotate(out.elements.begin(), it, it + 1);
  const std::size_t n = out.elements.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n && out.closed; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = find_vec(out.elements, h.multiply(out.elements[i], out.elements[j]));
      if (k == static_cast<std::size_t>(-1)) {
        if (mode == GrouplikeMode::EvenHomogeneous)
          throw Error(ErrorKind::NotClosed, "product of grouplikes left the enumerated set");
        out.closed = false;
        break;
      }
      table[i][j] = k;
    }
  if (out.closed) out.group = analyze_group(std::move(table), 0);
  return out;
}

CharacterGroup convolution_group(const HopfSuperData& h, const std::vector<Vec>& chars) {
  CharacterGroup out;
  out.elements = chars;
  auto it = std::find(out.elements.begin(), out.elements.end(), h.counit);
  if (it == out.elements.end()) throw Error(ErrorKind::NotClosed, "counit missing from character list");
  std::rotate(out.elements.begin(), it, it + 1);
  const std::size_t n = out.elements.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = find_vec(out.elements, convolve(h, out.elements[i], out.elements[j]));
      if (k == static_cast<std::size_t>(-1)) throw Error(ErrorKind::NotClosed, "convolution left the character set");
      table[i][j] = k;
    }
  out.group = analyze_group(std::move(table), 0);
  return out;
}

CharacterGroup character_group(const HopfSuperData& h) { return convolution_group(h, hopf_characters(h)); }

}  // namespace hopfsuper
