#include "hopfsuper/analysis.hpp"

#include <algorithm>
#include <functional>

#include "hopfsuper/characters.hpp"
#include "hopfsuper/error.hpp"
#include "hopfsuper/superdata.hpp"

namespace hopfsuper {

bool is_semisimple(const HopfSuperData& h) {
  return radical(Algebra::of(bosonize(h).a)).empty();
}

bool is_pointed(const HopfSuperData& h) {
  Algebra b = Algebra::dual_of(bosonize(h).a);
  Quotient q = quotient(b, radical(b));
  if (!q.algebra.commutative()) return false;
  CharacterSet cs = characters(q.algebra);
  if (!cs.complete())
    throw Error(ErrorKind::IncompleteCharacters,
                h.name + ": " + std::to_string(cs.missing) + " simple comodules are not defined over the base field");
  return cs.characters.size() == q.algebra.dim;
}

bool is_supercocommutative(const HopfSuperData& h) {
  const std::size_t n = h.dim();
  for (std::size_t k = 0; k < n; ++k) {
    Matrix t = h.comultiply(h.basis(k));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CycloScalar flipped = t(j, i);
        if (h.parity[i] && h.parity[j]) flipped = -flipped;
        if (t(i, j) != flipped) return false;
      }
  }
  return true;
}

AntipodeSpectrum antipode_spectrum(const HopfSuperData& h) {
  AntipodeSpectrum out;
  RootMultiset r = find_roots(characteristic_polynomial(h.antipode), h.conductor);
  out.eigenvalues = r.roots;
  out.unsplit_degree = r.unsplit_degree;
  const Matrix id = Matrix::identity(h.dim());
  Matrix p = h.antipode;
  const unsigned bound = 4 * static_cast<unsigned>(h.dim());
  for (unsigned k = 1; k <= bound; ++k) {
    if (p == id) {
      out.order = k;
      return out;
    }
    p = p * h.antipode;
  }
  throw Error(ErrorKind::FuelExhausted, h.name + ": antipode order exceeds " + std::to_string(bound));
}

Report verify_pairing(const HopfSuperData& k, const HopfSuperData& h, const Matrix& p) {
  Report r;
  const std::size_t nk = k.dim(), nh = h.dim();
  r.add("dimension", p.rows() == nk && p.cols() == nh && nk == nh);
  if (p.rows() != nk || p.cols() != nh) return r;

  // <k, h h'> = <Delta k, h (x) h'>
  std::string fail;
  for (std::size_t i = 0; i < nk && fail.empty(); ++i)
    for (std::size_t a = 0; a < nh && fail.empty(); ++a)
      for (std::size_t b = 0; b < nh; ++b) {
        CycloScalar lhs;
        for (const auto& [m, c] : h.product(a, b))
          if (!p(i, m).is_zero()) lhs += c * p(i, m);
        CycloScalar rhs;
        for (const auto& t : k.comult[i])
          if (!p(t.left, a).is_zero() && !p(t.right, b).is_zero())
            rhs += t.coeff * p(t.left, a) * p(t.right, b);
        if (lhs != rhs) {
          fail = "<" + k.labels[i] + ", " + h.labels[a] + " " + h.labels[b] + ">";
          break;
        }
      }
  r.add("comult_k_vs_mult_h", fail.empty(), fail);

  fail.clear();
  for (std::size_t j = 0; j < nh && fail.empty(); ++j)
    for (std::size_t a = 0; a < nk && fail.empty(); ++a)
      for (std::size_t b = 0; b < nk; ++b) {
        CycloScalar lhs;
        for (const auto& [m, c] : k.product(a, b))
          if (!p(m, j).is_zero()) lhs += c * p(m, j);
        CycloScalar rhs;
        for (const auto& t : h.comult[j])
          if (!p(a, t.left).is_zero() && !p(b, t.right).is_zero())
            rhs += t.coeff * p(a, t.left) * p(b, t.right);
        if (lhs != rhs) {
          fail = "<" + k.labels[a] + " " + k.labels[b] + ", " + h.labels[j] + ">";
          break;
        }
      }
  r.add("mult_k_vs_comult_h", fail.empty(), fail);

  r.add("unit_k_vs_counit_h", p.transpose().apply(k.unit) == h.counit);
  r.add("counit_k_vs_unit_h", p.apply(h.unit) == k.counit);

  fail.clear();
  for (std::size_t i = 0; i < nk && fail.empty(); ++i)
    for (std::size_t j = 0; j < nh; ++j)
      if (k.parity[i] != h.parity[j] && !p(i, j).is_zero()) {
        fail = "<" + k.labels[i] + ", " + h.labels[j] + ">";
        break;
      }
  r.add("parity", fail.empty(), fail);
  r.add("nondegenerate", nk == nh && !determinant(p).is_zero());
  r.add("antipode", k.antipode.transpose() * p == p * h.antipode);
  return r;
}

Matrix bosonized_dual_pairing(const HopfSuperData& h) {
  const std::size_t d = h.dim();
  Matrix p(2 * d, 2 * d);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < d; ++k) p(i * d + k, j * d + k) = CycloScalar(i && j ? -1 : 1);
  return p;
}

Fingerprint fingerprint(const HopfSuperData& h) {
  Fingerprint f;
  f.dim = h.dim();
  f.dim_odd = h.dim_odd();
  GrouplikeGroup g = grouplikes(h);
  f.grouplikes = g.elements.size();
  f.group_abelian = g.group.abelian;
  f.group_invariants = g.group.invariants;
  f.characters = hopf_characters(h).size();
  f.antipode = antipode_spectrum(h);
  for (const auto& x : g.elements)
    f.skew_primitives.emplace_back(skew_primitives(h, x, 0).size(), skew_primitives(h, x, 1).size());
  std::sort(f.skew_primitives.begin(), f.skew_primitives.end());
  f.semisimple = is_semisimple(h);
  f.pointed = is_pointed(h);
  f.supercommutative = is_supercommutative(h);
  f.supercocommutative = is_supercocommutative(h);
  f.center_dim = center(h).size();
  return f;
}

std::optional<std::string> distinguish(const Fingerprint& a, const Fingerprint& b) {
  if (a.dim != b.dim) return "dim";
  if (a.dim_odd != b.dim_odd) return "dim_odd";
  if (a.grouplikes != b.grouplikes) return "grouplikes";
  if (a.group_abelian != b.group_abelian || a.group_invariants != b.group_invariants) return "group_invariants";
  if (a.characters != b.characters) return "characters";
  if (a.antipode.eigenvalues != b.antipode.eigenvalues || a.antipode.unsplit_degree != b.antipode.unsplit_degree)
    return "antipode_spectrum";
  if (a.antipode.order != b.antipode.order) return "antipode_order";
  if (a.skew_primitives != b.skew_primitives) return "skew_primitives";
  if (a.semisimple != b.semisimple) return "semisimple";
  if (a.pointed != b.pointed) return "pointed";
  if (a.supercommutative != b.supercommutative) return "supercommutative";
  if (a.supercocommutative != b.supercocommutative) return "supercocommutative";
  if (a.center_dim != b.center_dim) return "center_dim";
  return std::nullopt;
}

std::optional<std::string> distinguish(const HopfSuperData& a, const HopfSuperData& b) {
  return distinguish(fingerprint(a), fingerprint(b));
}

const char* outcome_name(IsoOutcome o) {
  switch (o) {
    case IsoOutcome::Isomorphic: return "isomorphic";
    case IsoOutcome::Distinct: return "distinct";
    case IsoOutcome::Undecided: return "undecided";
  }
  return "?";
}

Matrix morphism_from_images(const CompiledPresentation& src, const HopfSuperData& target,
                            const std::vector<Vec>& images) {
  const Presentation& p = src.presentation;
  if (images.size() != p.generators.size())
    throw Error(ErrorKind::BadParams, "need one image per generator");
  for (std::size_t i = 0; i < images.size(); ++i) {
    int par = target.parity_of(images[i]);
    if (!is_zero(images[i]) && par != p.generators[i].parity)
      throw Error(ErrorKind::ExtensionFailure, "image of " + p.generators[i].name + " has the wrong parity");
  }
  auto word_image = [&](const Word& w) {
    Vec v = target.unit;
    for (int g : w) v = target.multiply(v, images[g]);
    return v;
  };
  for (const auto& rule : p.rules) {
    Vec rhs = zero_vec(target.dim());
    for (const auto& [w, c] : rule.rhs) axpy(rhs, c, word_image(w));
    if (word_image(rule.lhs) != rhs)
      throw Error(ErrorKind::ExtensionFailure,
                  "images violate the relation with left side " + p.word_string(rule.lhs), rule.line);
  }
  return extend_generator_map(src, target, images);
}

namespace {

enum class Pattern { Grouplike, PairEven, PairOdd, Skew, Unsupported };

struct GenInfo {
  Pattern kind = Pattern::Unsupported;
  std::size_t partner = 0;  // odd partner of a pair
  CycloScalar beta;         // beta^2 = c for a pair
  Vec anchor;               // a in Delta t = a (x) t + t (x) 1, source coordinates
};

Matrix outer(const Vec& a, const Vec& b) {
  Matrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero())
      for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
  return m;
}

std::vector<GenInfo> classify_generators(const CompiledPresentation& src, int field, std::string& why) {
  const HopfSuperData& h = src.hopf;
  const auto& gens = src.presentation.generators;
  std::vector<Vec> el;
  for (const auto& g : gens) el.push_back(evaluate(src, g.name));
  std::vector<GenInfo> info(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (info[i].kind == Pattern::PairOdd) continue;
    Matrix t = h.comultiply(el[i]);
    if (gens[i].parity == 0 && t == outer(el[i], el[i])) {
      info[i].kind = Pattern::Grouplike;
      continue;
    }
    // pair x, z: Delta x = x(x)x + c z(x)z, Delta z = x(x)z + z(x)x
    if (gens[i].parity == 0) {
      Matrix rest = t - outer(el[i], el[i]);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].parity != 1) continue;
        Matrix zz = outer(el[j], el[j]);
        std::size_t p = 0;
        while (p < zz.rows() * zz.cols() && zz(p / zz.cols(), p % zz.cols()).is_zero()) ++p;
        if (p == zz.rows() * zz.cols()) continue;
        CycloScalar c = rest(p / zz.cols(), p % zz.cols()) / zz(p / zz.cols(), p % zz.cols());
        if (c.is_zero() || rest != c * zz) continue;
        if (h.comultiply(el[j]) != outer(el[i], el[j]) + outer(el[j], el[i])) continue;
        UniPoly q({-c, CycloScalar(0), CycloScalar(1)});
        RootMultiset r = find_roots(q, field);
        if (r.roots.empty()) continue;
        info[i] = {Pattern::PairEven, j, r.roots.front().first, {}};
        info[j].kind = Pattern::PairOdd;
        info[j].partner = i;
        break;
      }
      if (info[i].kind == Pattern::PairEven) continue;
    }
    // skew: Delta t = a (x) t + t (x) 1
    Matrix rest = t - outer(el[i], h.unit);
    std::size_t q = 0;
    while (q < el[i].size() && el[i][q].is_zero()) ++q;
    if (q < el[i].size()) {
      Vec a = rest.column(q);
      a = (CycloScalar(1) / el[i][q]) * a;
      if (rest == outer(a, el[i]) && is_grouplike(h, a)) {
        info[i].kind = Pattern::Skew;
        info[i].anchor = a;
        continue;
      }
    }
    if (why.empty()) why = "generator " + gens[i].name + " has an unsupported coproduct pattern";
  }
  return info;
}

bool meets(const std::vector<std::pair<Vec, CycloScalar>>& cons, const Vec& v) {
  for (const auto& [f, c] : cons)
    if (pair(f, v) != c) return false;
  return true;
}

// Candidates x + span: solutions of the linear constraints inside span(basis).
std::vector<Vec> constrained_candidates(const std::vector<Vec>& basis, std::size_t n,
                                        const std::vector<std::pair<Vec, CycloScalar>>& cons) {
  std::vector<Vec> out;
  if (basis.empty()) return out;
  if (cons.empty()) {
    out = basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) out.push_back(basis[i] + basis[j]);
    return out;
  }
  Matrix a(cons.size(), basis.size());
  Vec rhs(cons.size());
  for (std::size_t r = 0; r < cons.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) a(r, c) = pair(cons[r].first, basis[c]);
    rhs[r] = cons[r].second;
  }
  auto sol = solve(a, rhs);
  if (!sol) return out;
  auto combine = [&](const Vec& coeffs) {
    Vec v = zero_vec(n);
    for (std::size_t c = 0; c < basis.size(); ++c) axpy(v, coeffs[c], basis[c]);
    return v;
  };
  Vec base = combine(*sol);
  out.push_back(base);
  for (const auto& k : kernel(a)) out.push_back(base + combine(k));
  return out;
}

bool constraint_kernel_trivial(const std::vector<Vec>& basis, const std::vector<std::pair<Vec, CycloScalar>>& cons) {
  if (basis.empty()) return true;
  Matrix a(cons.size(), basis.size());
  for (std::size_t r = 0; r < cons.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) a(r, c) = pair(cons[r].first, basis[c]);
  return kernel(a).empty();
}

// Every relation has the same number of occurrences of generator g on both sides.
bool relations_homogeneous_in(const Presentation& p, int g) {
  auto degree = [g](const Word& w) { return std::count(w.begin(), w.end(), g); };
  for (const auto& rule : p.rules)
    for (const auto& [w, c] : rule.rhs)
      if (degree(w) != degree(rule.lhs)) return false;
  return true;
}

}  // namespace

IsoSearchResult find_isomorphism(const CompiledPresentation& src, const HopfSuperData& target,
                                 const IsoSearchOptions& opts) {
  IsoSearchResult res;
  const HopfSuperData& h = src.hopf;
  if (h.dim() != target.dim() || h.dim_odd() != target.dim_odd()) {
    res.outcome = IsoOutcome::Distinct;
    res.detail = h.dim() != target.dim() ? "dim" : "dim_odd";
    return res;
  }
  if (opts.check_fingerprints) {
    try {
      if (auto d = distinguish(h, target)) {
        res.outcome = IsoOutcome::Distinct;
        res.detail = *d;
        return res;
      }
    } catch (const Error&) {
      // fall through to the search; fingerprints need complete character sets
    }
  }
  const auto& gens = src.presentation.generators;
  const std::size_t ng = gens.size();
  auto cons = [&](std::size_t i) {
    return i < opts.constraints.size() ? opts.constraints[i] : std::vector<std::pair<Vec, CycloScalar>>{};
  };
  std::string why;
  const int field = lcm_conductor(lcm_conductor(h.conductor, target.conductor), opts.conductor);
  std::vector<GenInfo> info = classify_generators(src, field, why);
  if (!why.empty()) {
    res.detail = why;
    return res;
  }

  // candidate lists for the fixed-choice generators (grouplikes and pairs)
  std::vector<std::size_t> order;
  std::vector<std::vector<std::vector<std::pair<std::size_t, Vec>>>> choices;
  std::vector<Vec> even_gl;
  bool need_gl = false, need_unres = false;
  for (const auto& in : info) {
    need_gl = need_gl || in.kind == Pattern::Grouplike;
    need_unres = need_unres || in.kind == Pattern::PairEven;
  }
  try {
    if (need_gl) even_gl = grouplikes(target).elements;
  } catch (const Error& e) {
    res.detail = std::string("grouplikes of the target: ") + e.what();
    return res;
  }
  std::vector<Vec> unres;
  if (need_unres) {
    try {
      unres = grouplikes(target, GrouplikeMode::Unrestricted).elements;
    } catch (const Error& e) {
      res.detail = std::string("unrestricted grouplikes of the target: ") + e.what();
      return res;
    }
  }
  for (std::size_t i = 0; i < ng; ++i) {
    std::vector<std::vector<std::pair<std::size_t, Vec>>> opts_i;
    if (info[i].kind == Pattern::Grouplike) {
      for (const auto& g : even_gl)
        if (meets(cons(i), g)) opts_i.push_back({{i, g}});
    } else if (info[i].kind == Pattern::PairEven) {
      std::size_t j = info[i].partner;
      for (const auto& u : unres) {
        Vec x = target.graded_part(u, 0), z = target.graded_part(u, 1);
        if (is_zero(z)) continue;
        z = (CycloScalar(1) / info[i].beta) * z;
        if (meets(cons(i), x) && meets(cons(j), z)) opts_i.push_back({{i, x}, {j, z}});
      }
    } else {
      continue;
    }
    order.push_back(i);
    choices.push_back(std::move(opts_i));
  }

  // group generated by grouplike generators, with images, to place skew anchors
  std::vector<Vec> src_gens;
  for (const auto& g : gens) src_gens.push_back(evaluate(src, g.name));

  std::vector<Vec> images(ng);
  bool exhausted_fuel = false;
  bool exhaustive = true;
  std::vector<bool> homogeneous(ng);
  for (std::size_t i = 0; i < ng; ++i) homogeneous[i] = relations_homogeneous_in(src.presentation, static_cast<int>(i));
  std::function<bool(std::size_t)> assign_fixed;
  std::function<bool(std::size_t)> assign_skew;
  std::vector<std::size_t> skew_order;
  for (std::size_t i = 0; i < ng; ++i)
    if (info[i].kind == Pattern::Skew) skew_order.push_back(i);

  auto try_images = [&]() -> bool {
    if (res.tried >= opts.fuel) {
      exhausted_fuel = true;
      return false;
    }
    ++res.tried;
    Matrix m;
    try {
      m = morphism_from_images(src, target, images);
    } catch (const Error&) {
      return false;
    }
    if (!verify_isomorphism(h, target, m).ok()) return false;
    res.outcome = IsoOutcome::Isomorphic;
    res.witness = m;
    res.images = images;
    return true;
  };

  auto anchor_image = [&](const Vec& a) -> std::optional<Vec> {
    std::vector<std::pair<Vec, Vec>> group = {{h.unit, target.unit}};
    for (std::size_t k = 0; k < group.size() && group.size() <= h.dim() + 1; ++k)
      for (std::size_t i = 0; i < ng; ++i) {
        if (info[i].kind != Pattern::Grouplike) continue;
        Vec s = h.multiply(group[k].first, src_gens[i]);
        if (std::none_of(group.begin(), group.end(), [&](const auto& p) { return p.first == s; }))
          group.emplace_back(s, target.multiply(group[k].second, images[i]));
      }
    for (const auto& [s, t] : group)
      if (s == a) return t;
    return std::nullopt;
  };

  assign_skew = [&](std::size_t k) -> bool {
    if (exhausted_fuel) return false;
    if (k == skew_order.size()) return try_images();
    std::size_t i = skew_order[k];
    auto a = anchor_image(info[i].anchor);
    if (!a) {
      if (why.empty()) why = "skew anchor of " + gens[i].name + " is not a word in grouplike generators";
      return false;
    }
    int par = gens[i].parity;
    std::vector<Vec> space = skew_primitives(target, *a, par);
    std::vector<Vec> basis;
    if (par == 0 && *a != target.unit) {
      std::vector<Vec> span = {target.unit - *a};
      for (const auto& v : space) {
        std::vector<Vec> test = span;
        test.push_back(v);
        if (span_basis(test, target.dim()).size() > span.size()) {
          span.push_back(v);
          basis.push_back(v);
        }
      }
      exhaustive = false;
    } else {
      basis = space;
    }
    // Candidates cover the space only up to scaling, and only when it is a line.
    if (cons(i).empty() ? basis.size() > 1 || !homogeneous[i] : !constraint_kernel_trivial(basis, cons(i)))
      exhaustive = false;
    for (const auto& cand : constrained_candidates(basis, target.dim(), cons(i))) {
      images[i] = cand;
      if (assign_skew(k + 1)) return true;
      if (exhausted_fuel) return false;
    }
    return false;
  };

  assign_fixed = [&](std::size_t k) -> bool {
    if (exhausted_fuel) return false;
    if (k == order.size()) return assign_skew(0);
    for (const auto& opt : choices[k]) {
      for (const auto& [i, v] : opt) images[i] = v;
      if (assign_fixed(k + 1)) return true;
      if (exhausted_fuel) return false;
    }
    return false;
  };

  if (assign_fixed(0)) {
    res.detail = "witness found";
    return res;
  }
  if (!exhausted_fuel && why.empty() && exhaustive) {
    res.outcome = IsoOutcome::Distinct;
    res.detail = "exhaustive search";
    return res;
  }
  res.detail = exhausted_fuel ? "fuel exhausted" : (why.empty() ? "no candidate assignment verified" : why);
  return res;
}

PairingSearch pairing_from_generators(const CompiledPresentation& k, const CompiledPresentation& h,
                                      const std::vector<std::vector<CycloScalar>>& table, std::uint64_t fuel) {
  PairingSearch out;
  HopfSuperData hd = dual(h.hopf);
  const auto& hg = h.presentation.generators;
  IsoSearchOptions opts;
  opts.fuel = fuel;
  opts.check_fingerprints = false;
  opts.constraints.resize(k.presentation.generators.size());
  if (table.size() != k.presentation.generators.size())
    throw Error(ErrorKind::BadParams, "pairing table needs one row per generator");
  for (std::size_t a = 0; a < table.size(); ++a) {
    if (table[a].size() != hg.size()) throw Error(ErrorKind::BadParams, "pairing table needs one column per generator");
    for (std::size_t b = 0; b < hg.size(); ++b) opts.constraints[a].emplace_back(evaluate(h, hg[b].name), table[a][b]);
  }
  out.search = find_isomorphism(k, hd, opts);
  if (out.search.witness) out.pairing = out.search.witness->transpose();
  return out;
}

}  // namespace hopfsuper
