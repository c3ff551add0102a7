#include "hopfsuper/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "hopfsuper/characters.hpp"
#include "hopfsuper/error.hpp"
#include "hopfsuper/presentation.hpp"

namespace hopfsuper {

namespace {

CycloScalar i4() { return CycloScalar::zeta(4).embed(8); }
CycloScalar half() { return CycloScalar(Rational(1, 2)); }

Verdict check(std::string name, bool ok, std::string detail = "") {
  return {std::move(name), ok ? "pass" : "fail", std::move(detail)};
}

// ---- builtin catalogue, compiled once ----

struct Entry {
  CompiledPresentation pres;
  std::unique_ptr<Fingerprint> fp;
};

std::mutex catalogue_mutex;

Entry& entry(const std::string& name) {
  static std::map<std::string, Entry> cache;
  std::lock_guard<std::mutex> lock(catalogue_mutex);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, Entry{builtin_presentation(name), nullptr}).first;
  return it->second;
}

const CompiledPresentation& pres(const std::string& name) { return entry(name).pres; }
const HopfSuperData& hopf(const std::string& name) { return entry(name).pres.hopf; }

const Fingerprint& fp(const std::string& name) {
  Entry& e = entry(name);
  std::lock_guard<std::mutex> lock(catalogue_mutex);
  if (!e.fp) e.fp = std::make_unique<Fingerprint>(fingerprint(e.pres.hopf));
  return *e.fp;
}

// Fingerprints first, then the witness search.
IsoSearchResult compare_with(const std::string& name, const HopfSuperData& h, const Fingerprint& fh,
                             const IsoSearchOptions& opts) {
  if (auto d = distinguish(fp(name), fh)) {
    IsoSearchResult r;
    r.outcome = IsoOutcome::Distinct;
    r.detail = *d;
    return r;
  }
  IsoSearchOptions o = opts;
  o.check_fingerprints = false;
  return find_isomorphism(pres(name), h, o);
}

IsoSearchOptions search_options(const SuiteOptions& s) {
  IsoSearchOptions o;
  o.fuel = s.fuel;
  o.conductor = s.conductor;
  return o;
}

Vec coords(const Coinvariant& c, const Vec& v) {
  auto x = solve(c.inclusion, v);
  if (!x) throw Error(ErrorKind::VerificationFailure, "element is not in the coinvariant subalgebra");
  return *x;
}

Matrix outer(const Vec& a, const Vec& b) {
  Matrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
  return m;
}

Vec character_with(const HopfSuperData& h, const std::vector<std::pair<std::string, CycloScalar>>& values) {
  for (const auto& chi : hopf_characters(h)) {
    bool ok = true;
    for (const auto& [label, v] : values) ok = ok && chi[h.index_of(label)] == v;
    if (ok) return chi;
  }
  throw Error(ErrorKind::VerificationFailure, "no character with the requested values");
}

// Printable names for data: vectors matched against a list of named ones.
std::string name_of(const Vec& v, const std::vector<std::pair<std::string, Vec>>& names, const std::string& fallback) {
  for (const auto& [n, w] : names)
    if (w == v) return n;
  return fallback;
}

std::string datum_name(const SuperDatum& d, const std::vector<std::pair<std::string, Vec>>& gs,
                       const std::vector<std::pair<std::string, Vec>>& alphas) {
  return "(" + name_of(d.g, gs, d.g_label) + "," + name_of(d.alpha, alphas, d.alpha_label) + ")";
}

std::size_t find_datum(const std::vector<SuperDatum>& data, const Vec& g, const Vec& alpha) {
  for (std::size_t i = 0; i < data.size(); ++i)
    if (data[i].g == g && data[i].alpha == alpha) return i;
  return data.size();
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

class Builder {
 public:
  explicit Builder(std::string suite) { r_.suite = std::move(suite); }

  SuiteObject& builtin_object(const std::string& name) {
    r_.objects.push_back({name, fp(name), {}});
    return r_.objects.back();
  }
  void add(Verdict v) { r_.verdicts.push_back(std::move(v)); }
  Json& table() { return r_.table; }
  SuiteResult take() { return std::move(r_); }

 private:
  SuiteResult r_;
};

void pairwise_distinct(Builder& b, const std::vector<std::string>& names, const IsoSearchOptions& opts) {
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      IsoSearchResult r = compare_with(names[i], hopf(names[j]), fp(names[j]), opts);
      std::string claim = names[i] + " vs " + names[j];
      if (r.outcome == IsoOutcome::Distinct)
        b.add({"distinct " + claim, "pass", r.detail});
      else
        b.add({"distinct " + claim, "fail", outcome_name(r.outcome) + std::string(": ") + r.detail});
    }
}

// Name of the listed builtin isomorphic to h, or "undecided"/"none".
std::string match_in(const std::vector<std::string>& names, const HopfSuperData& h, const IsoSearchOptions& opts) {
  Fingerprint fh = fingerprint(h);
  bool undecided = false;
  for (const auto& n : names) {
    IsoSearchResult r = compare_with(n, h, fh, opts);
    if (r.outcome == IsoOutcome::Isomorphic) return n;
    undecided = undecided || r.outcome == IsoOutcome::Undecided;
  }
  return undecided ? "undecided" : "none";
}

// ---- suites ----

SuiteResult suite_dim2(const SuiteOptions&) {
  Builder b("dim2");
  const HopfSuperData& h4 = hopf("H4");
  SuperformsReport sf = superforms(h4, {}, false);
  SuiteObject& o = b.builtin_object("H4");
  o.verdicts.push_back(check("admissible data", sf.admissible.size() == 1, std::to_string(sf.admissible.size())));
  o.verdicts.push_back(check("super data", sf.forms.size() == 1, std::to_string(sf.forms.size())));
  o.verdicts.push_back(check("round trip", sf.ok()));
  b.builtin_object("Lambda(1)");

  std::string cls = "none";
  if (sf.forms.size() == 1) {
    const Coinvariant& c = sf.forms[0].coinvariant;
    Vec x = coords(c, h4.element("x"));
    Matrix m = extend_generator_map(pres("Lambda(1)"), c.h, {x});
    bool ok = verify_isomorphism(hopf("Lambda(1)"), c.h, m).ok();
    b.add(check("coinvariant of (c,alpha) is Lambda(z) via z -> x", ok));
    if (ok) cls = "Lambda(z)";
  }
  Bosonization bos = bosonize(hopf("Lambda(1)"));
  Matrix m = extend_generator_map(pres("H4"), bos.a, {bos.a.element("1#sigma"), bos.a.element("z1#e")});
  b.add(check("bosonization of Lambda(z) is H4 via c -> 1#sigma, x -> z#e", verify_isomorphism(h4, bos.a, m).ok()));

  Json row;
  row["algebra"] = "H4";
  row["admissible"] = sf.admissible.size();
  row["super_forms"] = sf.forms.size();
  row["class"] = cls;
  b.table() = Json::array({row});
  return b.take();
}

SuiteResult suite_dim4pointed(const SuiteOptions& so) {
  Builder b("dim4pointed");
  IsoSearchOptions opts = search_options(so);
  Json rows = Json::array();

  const HopfSuperData& ac2 = hopf("A_C2");
  SuperformsReport s1 = superforms(ac2, {}, true, opts);
  {
    SuiteObject& o = b.builtin_object("A_C2");
    bool all_lambda = !s1.forms.empty();
    for (const auto& f : s1.forms) all_lambda = all_lambda && f.identified == "Lambda(2)";
    o.verdicts.push_back(check("super-forms are Lambda(z1,z2)", all_lambda, std::to_string(s1.forms.size()) + " data"));
    o.verdicts.push_back(check("round trips", s1.ok()));
  }

  const HopfSuperData& a = hopf("A_C2xC2");
  SuperformsReport s2 = superforms(a, {}, true, opts);
  Vec c = a.element("c"), d = a.element("d"), cd = a.element("cd");
  std::vector<std::pair<std::string, Vec>> gs = {{"c", c}, {"d", d}, {"cd", cd}};
  Vec al1 = character_with(a, {{"c", CycloScalar(-1)}, {"d", CycloScalar(1)}});
  Vec al2 = character_with(a, {{"c", CycloScalar(1)}, {"d", CycloScalar(-1)}});
  Vec al3 = character_with(a, {{"c", CycloScalar(-1)}, {"d", CycloScalar(-1)}});
  std::vector<std::pair<std::string, Vec>> alphas = {{"alpha1", al1}, {"alpha2", al2}, {"alpha3", al3}};
  {
    SuiteObject& o = b.builtin_object("A_C2xC2");
    o.verdicts.push_back(check("admissible data", s2.admissible.size() == 6, std::to_string(s2.admissible.size())));
    o.verdicts.push_back(check("super data", s2.forms.size() == 3, std::to_string(s2.forms.size())));
    o.verdicts.push_back(check("round trips", s2.ok()));
    std::vector<std::string> ids;
    for (const auto& f : s2.forms) ids.push_back(f.identified);
    std::sort(ids.begin(), ids.end());
    o.verdicts.push_back(check("super-forms are H4_2, H4_3, H4_4",
                               ids == std::vector<std::string>{"H4_2", "H4_3", "H4_4"}, join(ids, ", ")));
  }
  // explicit witnesses g -> ..., z -> x
  struct Witness {
    std::string g;
    Vec alpha;
    std::string alpha_name;
    std::string target;
    Vec g_image;
  };
  for (const Witness& w : {Witness{"c", al1, "alpha1", "H4_4", d}, Witness{"c", al3, "alpha3", "H4_2", cd},
                           Witness{"d", al3, "alpha3", "H4_3", cd}}) {
    std::size_t k = find_datum(s2.admissible, a.element(w.g), w.alpha);
    std::string claim = "coinvariant of (" + w.g + "," + w.alpha_name + ") is " + w.target + " via g -> " +
                        name_of(w.g_image, gs, "?") + ", z -> x";
    if (k == s2.admissible.size() || !s2.admissible[k].is_super()) {
      b.add(check(claim, false, "not a super datum"));
      continue;
    }
    Coinvariant cv = coinvariant_superalgebra(a, s2.admissible[k]);
    Matrix m = extend_generator_map(pres(w.target), cv.h, {coords(cv, w.g_image), coords(cv, a.element("x"))});
    b.add(check(claim, verify_isomorphism(hopf(w.target), cv.h, m).ok()));
  }

  std::vector<std::string> classes = {"H4_1", "H4_2", "H4_3", "H4_4"};
  for (const auto& n : classes) b.builtin_object(n);
  pairwise_distinct(b, classes, opts);
  std::map<std::string, std::string> dual_of;
  for (const auto& n : classes) {
    dual_of[n] = match_in(classes, dual(hopf(n)), opts);
  }
  const std::map<std::string, std::string> expected = {
      {"H4_1", "H4_1"}, {"H4_2", "H4_2"}, {"H4_3", "H4_4"}, {"H4_4", "H4_3"}};
  for (const auto& n : classes)
    b.add(check("dual of " + n + " is " + expected.at(n), dual_of[n] == expected.at(n), dual_of[n]));
  HopfSuperData t = tensor_product(hopf("kZ2"), hopf("Lambda(1)"));
  IsoSearchResult tr = compare_with("H4_2", t, fingerprint(t), opts);
  b.add(check("H4_2 is kZ2 (x) Lambda(z)", tr.outcome == IsoOutcome::Isomorphic, tr.detail));

  for (const auto& n : classes) {
    std::vector<std::string> sources;
    if (n == "H4_1")
      for (const auto& f : s1.forms) sources.push_back("A_C2 (" + f.datum.g_label + "," + f.datum.alpha_label + ")");
    for (const auto& f : s2.forms)
      if (f.identified == n) sources.push_back("A_C2xC2 " + datum_name(f.datum, gs, alphas));
    Json row;
    row["class"] = n;
    row["sources"] = sources;
    row["dual"] = dual_of[n];
    rows.push_back(row);
  }
  b.table() = rows;
  return b.take();
}

// H8 characters with alpha(X) = alpha(Y) = -1, alpha(Z) = s zeta4.
Vec h8_alpha(const HopfSuperData& h, int s) {
  return character_with(h, {{"X", CycloScalar(-1)}, {"Y", CycloScalar(-1)}, {"Z", CycloScalar(s) * i4()}});
}

std::vector<Matrix> h8_automorphisms() {
  const CompiledPresentation& hp = pres("H8");
  const HopfSuperData& h = hp.hopf;
  Matrix psi = extend_generator_map(hp, h, {h.element("Y"), h.element("X"), evaluate(hp, "1/2 (1 + X + Y - X Y) Z")});
  Matrix phi = extend_generator_map(hp, h, {h.element("X"), h.element("Y"), evaluate(hp, "X Y Z")});
  return {Matrix::identity(h.dim()), phi, psi, psi * phi};
}

SuiteResult suite_dim4ss(const SuiteOptions& so) {
  Builder b("dim4ss");
  IsoSearchOptions opts = search_options(so);
  const CompiledPresentation& hp = pres("H8");
  const HopfSuperData& h = hp.hopf;
  SuperformsReport sf = superforms(h, h8_automorphisms(), true, opts);
  Vec ap = h8_alpha(h, 1), am = h8_alpha(h, -1);
  std::vector<std::pair<std::string, Vec>> gs = {{"X", h.element("X")}, {"Y", h.element("Y")}};
  std::vector<std::pair<std::string, Vec>> alphas = {{"alpha+", ap}, {"alpha-", am}};
  {
    SuiteObject& o = b.builtin_object("H8");
    o.verdicts.push_back(check("admissible data", sf.admissible.size() == 4, std::to_string(sf.admissible.size())));
    o.verdicts.push_back(check("round trips", sf.ok()));
    o.verdicts.push_back(check("orbits under id, phi, psi, psi phi", sf.orbits.size() == 2,
                               std::to_string(sf.orbits.size()) + " classes"));
  }
  b.builtin_object("A4(zeta4)");
  b.builtin_object("A4(-zeta4)");

  // (X, alpha+) ~ (Y, alpha-) and (X, alpha-) ~ (Y, alpha+)
  auto index_in_forms = [&](const Vec& g, const Vec& al) {
    for (std::size_t i = 0; i < sf.forms.size(); ++i)
      if (sf.forms[i].datum.g == g && sf.forms[i].datum.alpha == al) return i;
    return sf.forms.size();
  };
  auto same_orbit = [&](std::size_t i, std::size_t j) {
    for (const auto& cl : sf.orbits)
      if (std::count(cl.begin(), cl.end(), i) && std::count(cl.begin(), cl.end(), j)) return true;
    return false;
  };
  std::size_t xp = index_in_forms(h.element("X"), ap), ym = index_in_forms(h.element("Y"), am);
  std::size_t xm = index_in_forms(h.element("X"), am), yp = index_in_forms(h.element("Y"), ap);
  b.add(check("(X,alpha+) ~ (Y,alpha-)", same_orbit(xp, ym)));
  b.add(check("(X,alpha-) ~ (Y,alpha+)", same_orbit(xm, yp)));
  b.add(check("(X,alpha+) and (X,alpha-) in different orbits", !same_orbit(xp, xm)));

  if (xp < sf.forms.size()) {
    const Coinvariant& c = sf.forms[xp].coinvariant;
    CycloScalar k = (CycloScalar(1) - i4()) * CycloScalar(Rational(1, 4));
    Vec v = k * evaluate(hp, "Z + zeta4 X Z + zeta4 Y Z + X Y Z");
    Vec w = (CycloScalar::sqrt2() * CycloScalar(Rational(1, 4))) * evaluate(hp, "Z - zeta4 X Z + zeta4 Y Z - X Y Z");
    Vec g = coords(c, h.element("XY")), vb = coords(c, v), wb = coords(c, w), one = c.h.unit;
    const HopfSuperData& ch = c.h;
    bool rel = ch.parity_of(vb) == 0 && ch.parity_of(wb) == 1 && ch.multiply(vb, vb) == half() * (one + g) &&
               ch.multiply(wb, wb) == half() * (one - g) && is_zero(ch.multiply(vb, wb)) &&
               is_zero(ch.multiply(wb, vb)) && ch.comultiply(vb) == outer(vb, vb) - i4() * outer(wb, wb) &&
               ch.comultiply(wb) == outer(vb, wb) + outer(wb, vb);
    b.add(check("coinvariant of (X,alpha+): v^2 = (1+g)/2, w^2 = (1-g)/2, vw = wv = 0, "
                "Delta(v) = v(x)v - zeta4 w(x)w",
                rel));
  }
  std::map<std::string, std::string> class_of;
  for (const auto& f : sf.forms) class_of[datum_name(f.datum, gs, alphas)] = f.identified;
  b.add(check("coinvariant of (X,alpha+) is A4(-zeta4)", class_of["(X,alpha+)"] == "A4(-zeta4)",
              class_of["(X,alpha+)"]));
  b.add(check("coinvariant of (X,alpha-) is A4(zeta4)", class_of["(X,alpha-)"] == "A4(zeta4)",
              class_of["(X,alpha-)"]));

  auto field = distinguish(fp("A4(zeta4)"), fp("A4(-zeta4)"));
  std::ostringstream spectra;
  for (const char* n : {"A4(zeta4)", "A4(-zeta4)"}) {
    spectra << n << " {";
    bool first = true;
    for (const auto& [x, m] : fp(n).antipode.eigenvalues)
      for (int i = 0; i < m; ++i) spectra << (first ? "" : ", ") << x.to_string(), first = false;
    spectra << "} ";
  }
  b.add(check("A4(zeta4) and A4(-zeta4) distinct by antipode spectra", field && *field == "antipode_spectrum",
              spectra.str().substr(0, spectra.str().size() - 1)));
  for (const char* n : {"A4(zeta4)", "A4(-zeta4)"}) {
    HopfSuperData d = dual(hopf(n));
    IsoSearchResult r = compare_with(n, d, fingerprint(d), opts);
    b.add(check(std::string(n) + " is self-dual", r.outcome == IsoOutcome::Isomorphic, r.detail));
  }

  Json rows = Json::array();
  for (std::size_t i = 0; i < sf.forms.size(); ++i) {
    std::size_t orbit = 0;
    for (std::size_t k = 0; k < sf.orbits.size(); ++k)
      if (std::count(sf.orbits[k].begin(), sf.orbits[k].end(), i)) orbit = k;
    Json row;
    row["datum"] = datum_name(sf.forms[i].datum, gs, alphas);
    row["orbit"] = orbit;
    row["class"] = sf.forms[i].identified;
    rows.push_back(row);
  }
  b.table() = rows;
  return b.take();
}

// Functions on S3 inside A_plus, optionally times xi.
const char* const kS3Names[] = {"e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"};

Vec a_plus_fn(const HopfSuperData& a, const std::vector<long>& f, bool xi) {
  Vec v = zero_vec(a.dim());
  for (std::size_t s = 0; s < 6; ++s) v[a.index_of(std::string(kS3Names[s]) + (xi ? "*xi" : "*"))] = CycloScalar(f[s]);
  return v;
}

// alpha(f xi^j) = f(s) xi_value^j
Vec a_plus_alpha(const HopfSuperData& a, std::size_t s, long xi_value) {
  Vec v = zero_vec(a.dim());
  v[a.index_of(std::string(kS3Names[s]) + "*")] = CycloScalar(1);
  v[a.index_of(std::string(kS3Names[s]) + "*xi")] = CycloScalar(xi_value);
  return v;
}

SuiteResult suite_dim6ss(const SuiteOptions&) {
  Builder b("dim6ss");
  const CompiledPresentation& ap = pres("A_plus");
  const HopfSuperData& a = ap.hopf;
  const std::vector<long> sgn = {1, -1, -1, 1, 1, -1}, one = {1, 1, 1, 1, 1, 1};
  Vec xi = a_plus_fn(a, one, true), sg = a_plus_fn(a, sgn, false), xisgn = a_plus_fn(a, sgn, true);
  Vec al1 = a_plus_alpha(a, 1, 1), al2 = a_plus_alpha(a, 0, -1), al3 = a_plus_alpha(a, 1, -1);
  std::vector<std::pair<std::string, Vec>> gs = {{"xi", xi}, {"sgn", sg}, {"xi sgn", xisgn}};
  std::vector<std::pair<std::string, Vec>> alphas = {{"alpha1", al1}, {"alpha2", al2}, {"alpha3", al3}};

  std::vector<Vec> images;
  for (const char* s : {"s1*", "s2*", "s1s2*", "s2s1*", "s1s2s1*"}) images.push_back(a.element(s));
  images.push_back(xisgn);
  Matrix phi = extend_generator_map(ap, a, images);
  SuperformsReport sf = superforms(a, {phi}, false);
  {
    SuiteObject& o = b.builtin_object("A_plus");
    o.verdicts.push_back(check("admissible data", sf.admissible.size() == 6, std::to_string(sf.admissible.size())));
    o.verdicts.push_back(check("super data", sf.forms.size() == 2, std::to_string(sf.forms.size())));
    o.verdicts.push_back(check("round trips", sf.ok()));
    o.verdicts.push_back(check("one class of super-forms", sf.orbits.size() == 1,
                               std::to_string(sf.orbits.size()) + " orbits"));
  }
  b.builtin_object("kS3");
  b.builtin_object("A6");

  Json rows = Json::array();
  for (const auto& d : sf.admissible) {
    Json row;
    row["datum"] = datum_name(d, gs, alphas);
    row["super"] = d.is_super();
    std::string why;
    if (!d.cert.conjugation_identity) why = "conjugation identity fails at " + d.cert.conjugation_failure;
    else if (!d.cert.g_noncentral) why = "g central";
    row["obstruction"] = why;
    rows.push_back(row);
  }
  b.table() = rows;

  std::size_t bad = find_datum(sf.admissible, xi, al2);
  b.add(check("(xi,alpha2) rejected at s2*",
              bad < sf.admissible.size() && !sf.admissible[bad].cert.conjugation_identity &&
                  sf.admissible[bad].cert.conjugation_failure == "s2*",
              bad < sf.admissible.size() ? sf.admissible[bad].cert.conjugation_failure : "missing"));
  bool sgn_rejected = true;
  std::size_t sgn_count = 0;
  for (const auto& d : sf.admissible)
    if (d.g == sg) sgn_rejected = sgn_rejected && !d.is_super(), ++sgn_count;
  b.add(check("(sgn,-) rejected", sgn_rejected && sgn_count == 2, std::to_string(sgn_count) + " data"));
  std::vector<std::string> sd_names;
  for (const auto& f : sf.forms) sd_names.push_back(datum_name(f.datum, gs, alphas));
  std::sort(sd_names.begin(), sd_names.end());
  b.add(check("SD = {(xi,alpha3), (xi sgn,alpha1)}",
              sd_names == std::vector<std::string>{"(xi sgn,alpha1)", "(xi,alpha3)"}, join(sd_names, ", ")));

  std::size_t k = find_datum(sf.admissible, xi, al3);
  if (k < sf.admissible.size() && sf.admissible[k].is_super()) {
    Coinvariant c = coinvariant_superalgebra(a, sf.admissible[k]);
    auto el = [&](std::vector<long> f, bool x) { return a_plus_fn(a, f, x); };
    Vec x1 = el({1, 1, 0, 0, 0, 0}, false), x2 = el({1, -1, 0, 0, 0, 0}, true);
    Vec x3 = el({0, 0, 1, 1, 1, 1}, false), x4 = el({0, 0, 1, -1, -1, 1}, true);
    Vec w1 = el({0, 0, 1, -1, 1, -1}, false), w2 = el({0, 0, 1, 1, -1, -1}, true);
    // lambda^2 = -3/4 needs Q(zeta24)
    CycloScalar lam = half() * (CycloScalar(2) * CycloScalar::zeta(3) + CycloScalar(1));
    std::vector<Vec> im = {coords(c, x1 - half() * x3), coords(c, x2 + half() * x4), coords(c, lam * w1),
                           coords(c, lam * w2)};
    Matrix m = extend_generator_map(pres("A6"), c.h, im);
    b.add(check("coinvariant of (xi,alpha3) is A6 via x -> x1 - x3/2, y -> x2 + x4/2, z -> l w1, w -> l w2, "
                "l^2 = -3/4",
                verify_isomorphism(hopf("A6"), c.h, m).ok()));
  } else {
    b.add(check("coinvariant of (xi,alpha3) is A6", false, "not a super datum"));
  }

  const HopfSuperData& k3 = hopf("kS3");
  HopfSuperData s = aeg_superize(k3, k3.element("s1"));
  auto pinv = inverse(aeg_basis(k3, k3.element("s1")));
  bool aeg_ok = false;
  if (pinv) {
    std::vector<Vec> basis = {k3.unit,
                              k3.element("s1"),
                              half() * (k3.element("s1s2") + k3.element("s2s1")),
                              half() * (k3.element("s2") + k3.element("s1s2s1")),
                              half() * (k3.element("s1s2") - k3.element("s2s1")),
                              half() * (k3.element("s2") - k3.element("s1s2s1"))};
    std::vector<Vec> cols;
    for (const auto& v : basis) cols.push_back(pinv->apply(v));
    HopfSuperData t = change_basis(s, Matrix::from_columns(cols, 6), {"e", "c", "x", "y", "z", "w"});
    aeg_ok = same_structure(t, builtin("A6"));
  }
  b.add(check("AEG(kS3, s1) equals the A6 table in the basis 1, s1, (s1s2 +- s2s1)/2, (s2 +- s1s2s1)/2", aeg_ok));

  const CompiledPresentation& a6 = pres("A6");
  std::vector<Vec> g = grouplikes(a6.hopf).elements;
  Vec xy_zw = evaluate(a6, "x y + z w");
  bool g_ok = g.size() == 2 && std::count(g.begin(), g.end(), a6.hopf.unit) && std::count(g.begin(), g.end(), xy_zw);
  b.add(check("G(A6) = {1, xy + zw}", g_ok, std::to_string(g.size()) + " grouplikes"));
  return b.take();
}

std::string k8(bool plus, int e, int h) {
  return std::string("K8(") + (plus ? "zeta4" : "-zeta4") + "," + std::to_string(e) + "," + std::to_string(h) + ")";
}

SuiteResult suite_dim8nsnp(const SuiteOptions& so) {
  Builder b("dim8nsnp");
  IsoSearchOptions opts = search_options(so);
  std::vector<std::string> classes;
  for (bool plus : {true, false})
    for (int e : {0, 1})
      for (int h : {0, 1}) classes.push_back(k8(plus, e, h));

  Json coinv_rows = Json::array();
  std::vector<std::string> matched;
  for (const char* name : {"H16(zeta4)", "H16(-zeta4)"}) {
    const HopfSuperData& h = hopf(name);
    std::vector<SuperDatum> ad = admissible_data(h);
    std::vector<SuperDatum> sd = super_data(ad);
    SuiteObject& o = b.builtin_object(name);
    o.verdicts.push_back(check("AD = SD with 4 elements", ad.size() == 4 && sd.size() == 4,
                               std::to_string(ad.size()) + "/" + std::to_string(sd.size())));
    bool rt = true;
    for (const auto& d : sd) {
      Coinvariant c = coinvariant_superalgebra(h, d);
      rt = rt && verify_bosonization_roundtrip(h, d).ok();
      std::string m = match_in(classes, c.h, opts);
      matched.push_back(m);
      Json row;
      row["source"] = name;
      row["datum"] = "(" + d.g_label + "," + d.alpha_label + ")";
      row["class"] = m;
      coinv_rows.push_back(row);
    }
    o.verdicts.push_back(check("round trips", rt));
  }
  std::vector<std::string> sorted = matched, expect = classes;
  std::sort(sorted.begin(), sorted.end());
  std::sort(expect.begin(), expect.end());
  b.add(check("the 8 coinvariants are the 8 K8(zeta;e,h)", sorted == expect, join(matched, ", ")));

  for (const auto& n : classes) {
    SuiteObject& o = b.builtin_object(n);
    o.verdicts.push_back(check("not semisimple", !o.fingerprint.semisimple));
    o.verdicts.push_back(check("not pointed", !o.fingerprint.pointed));
    o.verdicts.push_back(check("dual not pointed", !is_pointed(dual(hopf(n)))));
  }
  pairwise_distinct(b, classes, opts);

  for (bool plus : {true, false}) {
    CycloScalar zeta = plus ? i4() : -i4();
    // unsigned convention: <v, w^2> = -zeta <w,w>^2 = 1 forces omega^2 = zeta
    CycloScalar omega = plus ? CycloScalar::zeta(8, 1) : CycloScalar::zeta(8, 3);
    std::vector<std::vector<CycloScalar>> table = {{1, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, omega, 0}, {0, 0, 0, 1}};
    std::string kn = k8(plus, 0, 1), hn = k8(plus, 1, 0);
    PairingSearch s = pairing_from_generators(pres(kn), pres(hn), table, so.fuel);
    bool ok = s.pairing && verify_pairing(hopf(kn), hopf(hn), *s.pairing).ok();
    b.add(check(kn + " x " + hn + " pairing, <w,w> = " + omega.to_string(), ok, s.search.detail));
  }

  Json dual_rows = Json::array();
  for (const auto& n : classes) {
    HopfSuperData d = dual(hopf(n));
    Fingerprint fd = fingerprint(d);
    std::string partner = match_in(classes, d, opts);
    bool self_claim = n.find(",0,0)") != std::string::npos || n.find(",1,1)") != std::string::npos;
    if (self_claim) {
      if (partner == n)
        b.add({n + " is self-dual", "pass", "witness found"});
      else if (partner == "undecided" && !distinguish(fp(n), fd))
        b.add({n + " is self-dual", "unverified", "fingerprints agree, no witness"});
      else
        b.add({n + " is self-dual", "fail", partner});
    }
    Json row;
    row["class"] = n;
    row["dual"] = partner;
    dual_rows.push_back(row);
  }
  Json t;
  t["coinvariants"] = coinv_rows;
  t["duals"] = dual_rows;
  b.table() = t;
  return b.take();
}

SuiteResult suite_roundtrips(const SuiteOptions&) {
  Builder b("roundtrips");
  Json rows = Json::array();
  for (const auto& name : builtin_names()) {
    const HopfSuperData& h = hopf(name);
    SuiteObject& o = b.builtin_object(name);
    Json row;
    row["algebra"] = name;
    if (h.purely_even()) {
      std::vector<SuperDatum> ad = admissible_data(h);
      std::size_t ok = 0, nsd = 0;
      for (const auto& d : ad) {
        ok += verify_bosonization_roundtrip(h, d).ok();
        nsd += d.is_super();
      }
      o.verdicts.push_back(check("round trip for every admissible datum", ok == ad.size(),
                                 std::to_string(ok) + "/" + std::to_string(ad.size())));
      row["admissible"] = ad.size();
      row["super"] = nsd;
    } else {
      Bosonization bos = bosonize(h);
      SuperDatum d = canonical_datum(bos);
      bool exact = d.is_super() && same_structure(coinvariant_superalgebra(bos.a, d).h, h);
      o.verdicts.push_back(check("coinvariant of the bosonization is bit-exact", exact));
      o.verdicts.push_back(check("round trip of the canonical datum", verify_bosonization_roundtrip(bos.a, d).ok()));
      row["bosonization_dim"] = bos.a.dim();
    }
    rows.push_back(row);
  }
  b.table() = rows;

  Bosonization bos = bosonize(hopf("A4(zeta4)"));
  const HopfSuperData& a = bos.a;
  Vec x2s = a.element("x^2#sigma"), s1 = a.element("1#sigma");
  Vec hh = a.element("x#e") - i4() * a.element("z#sigma");
  Matrix m = extend_generator_map(pres("H8_star"), a, {x2s, i4() * (x2s - s1), hh});
  b.add(check("bosonization of A4(zeta4) is H8* via c -> x^2#sigma, s -> zeta4 (x^2 - 1)#sigma, "
              "h -> x#e - zeta4 z#sigma",
              verify_isomorphism(hopf("H8_star"), a, m).ok()));
  return b.take();
}

SuiteResult suite_dualities(const SuiteOptions& so) {
  Builder b("dualities");
  struct Table {
    std::string k, h;
    std::vector<std::vector<CycloScalar>> values;
    std::string note;
  };
  CycloScalar z8 = CycloScalar::zeta(8);
  std::vector<Table> tables = {
      {"H4_2", "H4_2", {{-1, 0}, {0, 1}}, "<g,g> = -1, <z,z> = 1"},
      {"H4_3", "H4_4", {{-1, 0}, {0, 1}}, "<g,g> = -1, <z,z> = 1"},
      {"A4(-zeta4)", "A4(-zeta4)", {{0, 0}, {0, z8}}, "<z,z> = zeta8"},
  };
  for (bool plus : {true, false}) {
    CycloScalar omega = plus ? CycloScalar::zeta(8, 1) : CycloScalar::zeta(8, 3);
    tables.push_back({k8(plus, 0, 1), k8(plus, 1, 0), {{1, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, omega, 0}, {0, 0, 0, 1}},
                      "<w,w> = " + omega.to_string()});
  }
  Json rows = Json::array();
  for (const auto& t : tables) {
    PairingSearch s = pairing_from_generators(pres(t.k), pres(t.h), t.values, so.fuel);
    bool ok = s.pairing && verify_pairing(hopf(t.k), hopf(t.h), *s.pairing).ok() &&
              verify_pairing(hopf(t.h), hopf(t.k), s.pairing->transpose()).ok();
    b.add(check(t.k + " x " + t.h + " pairing, " + t.note, ok, s.search.detail));
    Json row;
    row["left"] = t.k;
    row["right"] = t.h;
    row["values"] = t.note;
    row["verified"] = ok;
    rows.push_back(row);
  }
  // the stated <z,z> = zeta4 for A4(-zeta4) admits no pairing
  PairingSearch z4 = pairing_from_generators(pres("A4(-zeta4)"), pres("A4(-zeta4)"), {{0, 0}, {0, i4()}}, so.fuel);
  b.add(check("A4(-zeta4) admits no pairing with <z,z> = zeta4", !z4.pairing, z4.search.detail));
  // <w,w>^2 = -zeta admits none either
  for (bool plus : {true, false}) {
    CycloScalar wrong = (plus ? CycloScalar::zeta(8, 1) : CycloScalar::zeta(8, 3)) * i4();
    std::string kn = k8(plus, 0, 1), hn = k8(plus, 1, 0);
    PairingSearch s = pairing_from_generators(
        pres(kn), pres(hn), {{1, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, wrong, 0}, {0, 0, 0, 1}}, so.fuel);
    b.add(check(kn + " x " + hn + " admits no pairing with <w,w> = " + wrong.to_string(), !s.pairing,
                s.search.detail));
  }

  HopfSuperData d = dual(hopf("A4(-zeta4)"));
  // basis 1*, x*, (x^2)*, z*; products as coordinate rows
  const CycloScalar zi = -i4();
  const std::vector<std::vector<Vec>> products = {
      {{1, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 0}},
      {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}},
      {{0, 0, -1, 0}, {0, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 0}},
      {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, zi, 0, 0}}};
  bool table_ok = true;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      table_ok = table_ok && d.multiply(unit_vec(4, i), unit_vec(4, j)) == products[i][j];
  b.add(check("dual of A4(-zeta4): multiplication table", table_ok));
  auto t = [&](std::vector<std::pair<std::size_t, std::size_t>> terms) {
    Matrix m(4, 4);
    for (auto [a, c] : terms) m(a, c) += CycloScalar(1);
    return m;
  };
  // (x^2)*: x x = x^2 gives x*(x)x*, z z = 1 - x^2 gives -z*(x)z*
  Matrix x2 = t({{0, 2}, {2, 0}, {2, 2}, {1, 1}});
  x2(3, 3) = CycloScalar(-1);
  const std::vector<Matrix> coproducts = {t({{0, 0}, {3, 3}}), t({{0, 1}, {1, 0}, {1, 2}, {2, 1}}), x2,
                                          t({{0, 3}, {3, 0}})};
  bool co_ok = true;
  for (std::size_t i = 0; i < 4; ++i) co_ok = co_ok && d.comultiply(unit_vec(4, i)) == coproducts[i];
  b.add(check("dual of A4(-zeta4): comultiplication", co_ok));
  b.add(check("dual of A4(-zeta4): counit 1*", d.counit == Vec{1, 0, 0, 0}));

  std::size_t ok = 0;
  std::vector<std::string> failing;
  for (const auto& name : builtin_names()) {
    const HopfSuperData& h = hopf(name);
    b.builtin_object(name);
    Report r = verify_pairing(bosonize(dual(h)).a, bosonize(h).a, bosonized_dual_pairing(h));
    if (r.ok())
      ++ok;
    else
      failing.push_back(name);
  }
  b.add(check("(f#s^i, h#s^j) -> (-1)^{ij} f(h) pairs bos(H*) with bos(H) for every builtin",
              failing.empty(), std::to_string(ok) + " verified" + (failing.empty() ? "" : "; " + join(failing, ", "))));
  b.table() = rows;
  return b.take();
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s = {
      {"dim2", suite_dim2},         {"dim4pointed", suite_dim4pointed}, {"dim4ss", suite_dim4ss},
      {"dim6ss", suite_dim6ss},     {"dim8nsnp", suite_dim8nsnp},       {"roundtrips", suite_roundtrips},
      {"dualities", suite_dualities}};
  return s;
}

Json verdicts_json(const std::vector<Verdict>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) {
    Json j;
    j["name"] = v.name;
    j["status"] = v.status;
    if (!v.detail.empty()) j["detail"] = v.detail;
    a.push_back(j);
  }
  return a;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string status_tag(const std::string& status) {
  if (status == "pass") return "PASS";
  if (status == "fail") return "FAIL";
  return "OPEN";
}

}  // namespace

// ---- superforms ----

bool SuperformsReport::ok() const {
  return std::all_of(forms.begin(), forms.end(), [](const Superform& f) { return f.roundtrip.ok(); });
}

std::string identify_builtin(const HopfSuperData& h, const IsoSearchOptions& opts) {
  Fingerprint fh = fingerprint(h);
  for (const auto& name : builtin_names()) {
    const HopfSuperData& c = hopf(name);
    if (c.purely_even() || c.dim() != h.dim() || c.dim_odd() != h.dim_odd()) continue;
    if (compare_with(name, h, fh, opts).outcome == IsoOutcome::Isomorphic) return name;
  }
  return "";
}

SuperformsReport superforms(const HopfSuperData& a, const std::vector<Matrix>& autos, bool identify,
                            const IsoSearchOptions& opts) {
  if (!a.purely_even()) throw Error(ErrorKind::BadParams, "super-forms need a purely even Hopf algebra");
  SuperformsReport r;
  r.algebra = a.name;
  r.admissible = admissible_data(a);
  std::vector<SuperDatum> sd = super_data(r.admissible);
  for (const auto& d : sd) {
    Superform f{d, coinvariant_superalgebra(a, d), {}, verify_bosonization_roundtrip(a, d), ""};
    f.fingerprint = fingerprint(f.coinvariant.h);
    if (identify) f.identified = identify_builtin(f.coinvariant.h, opts);
    r.forms.push_back(std::move(f));
  }
  if (!autos.empty()) r.orbits = orbit_classes(a, sd, autos);
  return r;
}

Json to_json(const SuperformsReport& r) {
  Json ad = Json::array();
  for (const auto& d : r.admissible) ad.push_back(to_json(d));
  Json forms = Json::array();
  for (const auto& f : r.forms) {
    Json j;
    j["g_label"] = f.datum.g_label;
    j["alpha_label"] = f.datum.alpha_label;
    j["fingerprint"] = to_json(f.fingerprint);
    j["roundtrip"] = to_json(f.roundtrip);
    j["identified"] = f.identified;
    j["coinvariant"] = to_json(f.coinvariant.h);
    forms.push_back(j);
  }
  Json j;
  j["algebra"] = r.algebra;
  j["admissible"] = ad;
  j["super_forms"] = forms;
  if (!r.orbits.empty()) j["orbits"] = r.orbits;
  j["ok"] = r.ok();
  return j;
}

std::string render_text(const SuperformsReport& r) {
  std::ostringstream o;
  o << "algebra " << r.algebra << "\n";
  o << "admissible data: " << r.admissible.size() << "\n";
  for (const auto& d : r.admissible) {
    o << "  (" << d.g_label << ", " << d.alpha_label << ") " << (d.is_super() ? "super" : "admissible only");
    if (!d.is_super()) {
      if (!d.cert.conjugation_identity) o << ", conjugation identity fails at " << d.cert.conjugation_failure;
      if (!d.cert.g_noncentral) o << ", g central";
    }
    o << "\n";
  }
  o << "super-forms: " << r.forms.size() << "\n";
  for (const auto& f : r.forms) {
    o << "  (" << f.datum.g_label << ", " << f.datum.alpha_label << ") dim " << f.fingerprint.dim << " odd "
      << f.fingerprint.dim_odd << " grouplikes " << f.fingerprint.grouplikes << " round trip "
      << (f.roundtrip.ok() ? "ok" : "FAILED");
    if (!f.identified.empty()) o << " ~ " << f.identified;
    o << "\n";
  }
  if (!r.orbits.empty()) {
    o << "orbits: " << r.orbits.size() << "\n";
    for (const auto& cl : r.orbits) {
      std::vector<std::string> names;
      for (std::size_t i : cl) names.push_back("(" + r.forms[i].datum.g_label + ", " + r.forms[i].datum.alpha_label + ")");
      o << "  {" << join(names, ", ") << "}\n";
    }
  }
  return o.str();
}

// ---- suites ----

bool SuiteResult::passed() const {
  auto good = [](const Verdict& v) { return v.status != "fail"; };
  if (!std::all_of(verdicts.begin(), verdicts.end(), good)) return false;
  for (const auto& o : objects)
    if (!std::all_of(o.verdicts.begin(), o.verdicts.end(), good)) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  for (const auto& [n, fn] : suites())
    if (n == name) {
      auto start = std::chrono::steady_clock::now();
      SuiteResult r = fn(opts);
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    }
  throw Error(ErrorKind::UnknownName, "unknown suite '" + name + "'");
}

Json to_json(const SuiteResult& r, bool with_time) {
  Json objects = Json::array();
  for (const auto& o : r.objects) {
    Json j;
    j["name"] = o.name;
    j["fingerprint"] = to_json(o.fingerprint);
    j["verdicts"] = verdicts_json(o.verdicts);
    objects.push_back(j);
  }
  Json j;
  j["suite"] = r.suite;
  j["table"] = r.table;
  j["objects"] = objects;
  j["verdicts"] = verdicts_json(r.verdicts);
  j["passed"] = r.passed();
  if (with_time) j["seconds"] = r.seconds;
  return j;
}

std::string render_text(const SuiteResult& r) {
  std::ostringstream o;
  o << "suite " << r.suite << "\n\n";
  auto rows = r.table.is_array() ? Json{{"table", r.table}} : r.table;
  for (const auto& [section, list] : rows.items()) {
    o << section << ":\n";
    for (const auto& row : list) {
      std::vector<std::string> cells;
      for (const auto& [k, v] : row.items()) cells.push_back(k + "=" + (v.is_string() ? v.get<std::string>() : v.dump()));
      o << "  " << join(cells, "  ") << "\n";
    }
  }
  o << "\nobjects:\n";
  for (const auto& ob : r.objects) {
    const Fingerprint& f = ob.fingerprint;
    o << "  " << ob.name << ": dim " << f.dim << " odd " << f.dim_odd << " G " << f.grouplikes << " chars "
      << f.characters << " S-order " << f.antipode.order << (f.semisimple ? " semisimple" : "")
      << (f.pointed ? " pointed" : "") << "\n";
    for (const auto& v : ob.verdicts)
      o << "    " << status_tag(v.status) << " " << v.name << (v.detail.empty() ? "" : " [" + v.detail + "]") << "\n";
  }
  o << "\nclaims:\n";
  for (const auto& v : r.verdicts)
    o << "  " << status_tag(v.status) << " " << v.name << (v.detail.empty() ? "" : " [" + v.detail + "]") << "\n";
  o << "\n" << (r.passed() ? "suite passed" : "suite FAILED") << "\n";
  return o.str();
}

std::string render_csv(const SuiteResult& r) {
  std::ostringstream o;
  o << "suite,object,claim,status,detail\n";
  for (const auto& ob : r.objects)
    for (const auto& v : ob.verdicts)
      o << r.suite << "," << csv_field(ob.name) << "," << csv_field(v.name) << "," << v.status << ","
        << csv_field(v.detail) << "\n";
  for (const auto& v : r.verdicts)
    o << r.suite << ",," << csv_field(v.name) << "," << v.status << "," << csv_field(v.detail) << "\n";
  return o.str();
}

}  // namespace hopfsuper
