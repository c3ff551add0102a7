#include "qpoly.hpp"

#include <algorithm>
#include <random>

#include "hopfsuper/error.hpp"

namespace hopfsuper::detail {

void qp_trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int qp_degree(const QPoly& a) { return static_cast<int>(a.size()) - 1; }

QPoly qp_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  qp_trim(r);
  return r;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  qp_trim(r);
  return r;
}

std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  QPoly r = a;
  qp_trim(r);
  if (r.size() < b.size()) return {{}, r};
  QPoly q(r.size() - b.size() + 1);
  mpq_class lead_inv = 1 / b.back();
  for (int k = static_cast<int>(r.size()) - 1; k >= static_cast<int>(b.size()) - 1; --k) {
    if (r[k] == 0) continue;
    mpq_class c = r[k] * lead_inv;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
  }
  r.resize(b.size() - 1);
  qp_trim(r);
  qp_trim(q);
  return {q, r};
}

QPoly qp_gcd(QPoly a, QPoly b) {
  qp_trim(a);
  qp_trim(b);
  while (!b.empty()) {
    QPoly r = qp_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class l = a.back();
    for (auto& c : a) c /= l;
  }
  return a;
}

QPoly qp_derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  qp_trim(r);
  return r;
}

bool qp_inverse_mod(const QPoly& a, const QPoly& m, QPoly& out) {
  // Extended Euclid tracking only the coefficient of a.
  QPoly r0 = m, r1 = qp_divmod(a, m).second;
  QPoly s0, s1 = {mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r] = qp_divmod(r0, r1);
    QPoly s = qp_sub(s0, qp_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) return false;
  mpq_class c = 1 / r0[0];
  out = qp_divmod(s0, m).second;
  for (auto& x : out) x *= c;
  return true;
}

ZPoly z_primitive(const QPoly& a) {
  mpz_class den = 1;
  for (const auto& c : a) den = lcm(den, mpz_class(c.get_den()));
  ZPoly r(a.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpq_class t = a[i] * den;
    r[i] = t.get_num();
    g = gcd(g, r[i]);
  }
  if (g != 0) {
    if (!r.empty() && r.back() < 0) g = -g;
    for (auto& c : r) c /= g;
  }
  return r;
}

QPoly z_to_q(const ZPoly& a) {
  QPoly r(a.begin(), a.end());
  qp_trim(r);
  return r;
}

namespace {

// ---- polynomials over Z/p, p small ----
using MPoly = std::vector<long>;

long md(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = md(a, p);
  while (nr != 0) {
    long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return md(t, p);
}

void mp_trim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mp_deg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

MPoly mp_from_z(const ZPoly& a, long p) {
  MPoly r(a.size());
  mpz_class pz = p;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class t = a[i] % pz;
    if (t < 0) t += pz;
    r[i] = t.get_si();
  }
  mp_trim(r);
  return r;
}

MPoly mp_sub(const MPoly& a, const MPoly& b, long p) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = md(r[i] - b[i], p);
  mp_trim(r);
  return r;
}

MPoly mp_add(const MPoly& a, const MPoly& b, long p) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = md(r[i] + b[i], p);
  mp_trim(r);
  return r;
}

MPoly mp_mul(const MPoly& a, const MPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mp_trim(r);
  return r;
}

std::pair<MPoly, MPoly> mp_divmod(const MPoly& a, const MPoly& b, long p) {
  MPoly r = a;
  if (r.size() < b.size()) return {{}, r};
  MPoly q(r.size() - b.size() + 1, 0);
  long li = inv_mod(b.back(), p);
  for (int k = mp_deg(r); k >= mp_deg(b); --k) {
    if (r[k] == 0) continue;
    long c = r[k] * li % p;
    std::size_t shift = k - mp_deg(b);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = md(r[shift + j] - c * b[j], p);
  }
  r.resize(b.size() - 1);
  mp_trim(r);
  mp_trim(q);
  return {q, r};
}

MPoly mp_monic(MPoly a, long p) {
  if (a.empty()) return a;
  long li = inv_mod(a.back(), p);
  for (auto& c : a) c = c * li % p;
  return a;
}

MPoly mp_gcd(MPoly a, MPoly b, long p) {
  while (!b.empty()) {
    MPoly r = mp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, p);
}

MPoly mp_derivative(const MPoly& a, long p) {
  if (a.size() <= 1) return {};
  MPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i) % p;
  mp_trim(r);
  return r;
}

MPoly mp_powmod(MPoly base, const mpz_class& e, const MPoly& m, long p) {
  MPoly result = {1};
  base = mp_divmod(base, m, p).second;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mp_divmod(mp_mul(result, result, p), m, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mp_divmod(mp_mul(result, base, p), m, p).second;
  }
  return result;
}

// s*a + t*b = 1 for coprime a, b.
void mp_bezout(const MPoly& a, const MPoly& b, long p, MPoly& s, MPoly& t) {
  MPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = mp_divmod(r0, r1, p);
    MPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    MPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  long ci = inv_mod(r0[0], p);
  for (auto& c : s0) c = c * ci % p;
  for (auto& c : t0) c = c * ci % p;
  s = s0;
  t = t0;
}

void mp_edf(const MPoly& g, int d, long p, std::mt19937_64& rng, std::vector<MPoly>& out) {
  if (mp_deg(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  mpz_class e = (pd - 1) / 2;
  std::uniform_int_distribution<long> dist(0, p - 1);
  for (;;) {
    MPoly a(mp_deg(g));
    for (auto& c : a) c = dist(rng);
    mp_trim(a);
    if (mp_deg(a) < 1) continue;
    MPoly b = mp_sub(mp_powmod(a, e, g, p), MPoly{1}, p);
    MPoly u = mp_gcd(g, b, p);
    if (mp_deg(u) > 0 && mp_deg(u) < mp_deg(g)) {
      mp_edf(u, d, p, rng, out);
      mp_edf(mp_divmod(g, u, p).first, d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial mod odd p.
std::vector<MPoly> mp_factor(const MPoly& f, long p) {
  std::mt19937_64 rng(0x5eedUL + static_cast<unsigned long>(p));
  std::vector<MPoly> out;
  MPoly rest = f;
  MPoly x = {0, 1};
  MPoly h = x;
  for (int d = 1; 2 * d <= mp_deg(rest); ++d) {
    h = mp_powmod(h, mpz_class(static_cast<long>(p)), rest, p);
    MPoly g = mp_gcd(rest, mp_sub(h, x, p), p);
    if (mp_deg(g) > 0) {
      mp_edf(g, d, p, rng, out);
      rest = mp_divmod(rest, g, p).first;
      h = mp_divmod(h, rest, p).second;
    }
  }
  if (mp_deg(rest) > 0) out.push_back(mp_monic(rest, p));
  return out;
}

// ---- integer helpers ----
ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly zp_from_m(const MPoly& a) { return ZPoly(a.begin(), a.end()); }

void zp_reduce(ZPoly& a, const mpz_class& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Lift monic u | F mod p to a monic factor mod p^k.
ZPoly hensel_lift(const ZPoly& F, const MPoly& u, long p, int k) {
  MPoly fp = mp_from_z(F, p);
  MPoly v = mp_divmod(fp, u, p).first;
  MPoly s, t;
  mp_bezout(u, v, p, s, t);
  ZPoly U = zp_from_m(u), V = zp_from_m(v);
  mpz_class m = p;
  for (int j = 1; j < k; ++j) {
    ZPoly prod = zp_mul(U, V);
    ZPoly e(std::max(F.size(), prod.size()), 0);
    for (std::size_t i = 0; i < F.size(); ++i) e[i] += F[i];
    for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
    for (auto& c : e) c /= m;  // exact
    MPoly ep = mp_from_z(e, p);
    auto [q, r] = mp_divmod(mp_mul(t, ep, p), u, p);
    MPoly dv = mp_add(mp_mul(s, ep, p), mp_mul(q, v, p), p);
    if (U.size() < r.size()) U.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) U[i] += m * r[i];
    if (V.size() < dv.size()) V.resize(dv.size(), 0);
    for (std::size_t i = 0; i < dv.size(); ++i) V[i] += m * dv[i];
    m *= p;
  }
  zp_reduce(U, m);
  return U;
}

const std::vector<long>& small_primes() {
  static const std::vector<long> primes = [] {
    std::vector<long> out;
    for (long n = 3; n < 2000; n += 2) {
      bool prime = true;
      for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) {
          prime = false;
          break;
        }
      if (prime) out.push_back(n);
    }
    return out;
  }();
  return primes;
}

bool divides_exactly(const ZPoly& F, const ZPoly& G, ZPoly& quotient) {
  auto [q, r] = qp_divmod(z_to_q(F), z_to_q(G));
  if (!r.empty()) return false;
  quotient.clear();
  for (const auto& c : q) {
    if (c.get_den() != 1) return false;
    quotient.push_back(c.get_num());
  }
  return true;
}

}  // namespace

ZFactorization factor_squarefree(const ZPoly& f0, std::uint64_t fuel) {
  ZFactorization out;
  ZPoly F = z_primitive(z_to_q(f0));
  if (F.size() <= 2) {
    if (F.size() == 2) out.factors.push_back(F);
    return out;
  }
  const int D = static_cast<int>(F.size()) - 1;

  // Pick the prime giving the fewest modular factors among a few good ones.
  long best_p = 0;
  std::vector<MPoly> best;
  int good = 0;
  for (long p : small_primes()) {
    if (F.back() % p == 0) continue;
    MPoly fp = mp_from_z(F, p);
    if (mp_deg(mp_gcd(fp, mp_derivative(fp, p), p)) > 0) continue;
    auto facs = mp_factor(mp_monic(fp, p), p);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (++good >= 3 || best.size() == 1) break;
  }
  if (best_p == 0) throw Error(ErrorKind::FuelExhausted, "no suitable prime for factorisation");
  if (best.size() == 1) {
    out.factors.push_back(F);
    return out;
  }

  mpz_class maxc = 0;
  for (const auto& c : F) maxc = std::max(maxc, mpz_class(abs(c)));
  mpz_class bound = abs(F.back()) * maxc * (D + 1);
  bound <<= D;
  bound = 2 * bound + 1;
  mpz_class M = best_p;
  int k = 1;
  while (M <= bound) {
    M *= best_p;
    ++k;
  }
  std::vector<ZPoly> lifted;
  for (const auto& u : best) lifted.push_back(hensel_lift(F, u, best_p, k));

  mpz_class half = M / 2;
  std::uint64_t spent = 0;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool found = false;
    for (;;) {
      if (++spent > fuel) {
        out.complete = false;
        out.factors.push_back(F);
        return out;
      }
      ZPoly G = {F.back()};
      for (std::size_t i : idx) {
        G = zp_mul(G, lifted[i]);
        for (auto& c : G) {
          c %= M;
          if (c < 0) c += M;
        }
      }
      for (auto& c : G)
        if (c > half) c -= M;
      while (!G.empty() && G.back() == 0) G.pop_back();
      ZPoly Gp = z_primitive(z_to_q(G));
      ZPoly quotient;
      bool plausible = Gp.size() >= 2 && (F[0] == 0 || (Gp[0] != 0 && F[0] % Gp[0] == 0));
      if (plausible && divides_exactly(F, Gp, quotient)) {
        out.factors.push_back(Gp);
        F = quotient;
        std::vector<ZPoly> rest;
        for (std::size_t i = 0; i < lifted.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(lifted[i]);
        lifted = std::move(rest);
        found = true;
        break;
      }
      // next combination
      int pos = static_cast<int>(s) - 1;
      while (pos >= 0 && idx[pos] == lifted.size() - s + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::size_t i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (F.size() >= 2) {
    if (F.back() < 0)
      for (auto& c : F) c = -c;
    out.factors.push_back(F);
  }
  return out;
}

}  // namespace hopfsuper::detail
