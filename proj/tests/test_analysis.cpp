#include "doctest.h"

#include "hopfsuper/analysis.hpp"
#include "hopfsuper/characters.hpp"
#include "hopfsuper/error.hpp"
#include "hopfsuper/presentation.hpp"
#include "hopfsuper/superdata.hpp"

using namespace hopfsuper;

namespace {

CycloScalar i4() { return CycloScalar::zeta(4).embed(8); }

std::vector<std::pair<CycloScalar, int>> spectrum(std::vector<std::pair<CycloScalar, int>> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  return v;
}

}  // namespace

TEST_CASE("semisimplicity") {
  CHECK(is_semisimple(builtin("A4(zeta4)")));
  CHECK(is_semisimple(builtin("A6")));
  CHECK_FALSE(is_semisimple(builtin("Lambda(1)")));
  CHECK_FALSE(is_semisimple(builtin("K8(zeta4,0,1)")));
  CHECK(is_semisimple(builtin("kS3")));
  CHECK_FALSE(is_semisimple(builtin("H4")));
}

TEST_CASE("semisimplicity agrees with the dual on every builtin") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    HopfSuperData h = builtin(name);
    CHECK(is_semisimple(h) == is_semisimple(dual(h)));
  }
}

TEST_CASE("pointedness") {
  CHECK(is_pointed(builtin("Lambda(2)")));
  CHECK(is_pointed(builtin("H4_3")));
  CHECK_FALSE(is_pointed(builtin("A4(zeta4)")));
  CHECK(is_pointed(builtin("kZ4")));
  CHECK_FALSE(is_pointed(builtin("dual_kS3")));
  for (const char* k : {"K8(zeta4,0,0)", "K8(-zeta4,1,1)"}) {
    CHECK_FALSE(is_pointed(builtin(k)));
    CHECK_FALSE(is_pointed(dual(builtin(k))));
  }
}

TEST_CASE("super-commutativity predicates") {
  HopfSuperData l2 = builtin("Lambda(2)");
  CHECK(is_supercommutative(l2));
  CHECK(is_supercocommutative(l2));
  CHECK_FALSE(is_supercommutative(builtin("H4_4")));
  for (const char* name : {"kZ2", "kZ4", "kZ2xZ2", "kS3"}) {
    CHECK(is_supercommutative(builtin(name)) == is_commutative(builtin(name)));
    CHECK(is_supercocommutative(builtin(name)));
  }
  CHECK_FALSE(is_supercocommutative(builtin("dual_kS3")));
}

TEST_CASE("antipode spectra") {
  auto one = CycloScalar(1);
  AntipodeSpectrum p = antipode_spectrum(builtin("A4(zeta4)"));
  CHECK(spectrum(p.eigenvalues) == spectrum({{one, 3}, {-i4(), 1}}));
  AntipodeSpectrum m = antipode_spectrum(builtin("A4(-zeta4)"));
  CHECK(spectrum(m.eigenvalues) == spectrum({{one, 3}, {i4(), 1}}));
  CHECK(p.order == 4);
  AntipodeSpectrum k = antipode_spectrum(builtin("kZ2"));
  CHECK(k.eigenvalues == std::vector<std::pair<CycloScalar, int>>{{one, 2}});
  CHECK(k.order == 1);
  CHECK(antipode_spectrum(builtin("H4")).order == 4);
}

TEST_CASE("explicit pairings") {
  SUBCASE("H4_3 x H4_4") {
    auto k = builtin_presentation("H4_3"), h = builtin_presentation("H4_4");
    PairingSearch s = pairing_from_generators(k, h, {{CycloScalar(-1), 0}, {0, CycloScalar(1)}});
    REQUIRE(s.pairing);
    Report r = verify_pairing(k.hopf, h.hopf, *s.pairing);
    INFO(r.to_string());
    CHECK(r.ok());
    const Matrix& p = *s.pairing;
    CHECK(p(k.hopf.index_of("g"), h.hopf.index_of("g")) == CycloScalar(-1));
    CHECK(p(k.hopf.index_of("z"), h.hopf.index_of("z")) == CycloScalar(1));
    CHECK(p(k.hopf.index_of("g"), h.hopf.index_of("z")).is_zero());
    Report t = verify_pairing(h.hopf, k.hopf, p.transpose());
    CHECK(t.ok());
  }
  SUBCASE("A4(-zeta4) with itself") {
    auto c = builtin_presentation("A4(-zeta4)");
    HopfSuperData d = dual(c.hopf);
    // x -> 1*, z -> zeta8 z*; the odd image must square to x* = image of 1 - x^2
    CycloScalar z8 = CycloScalar::zeta(8);
    Matrix phi = morphism_from_images(c, d, {d.element("1*"), z8 * d.element("z*")});
    CHECK(verify_isomorphism(c.hopf, d, phi).ok());
    Matrix p = phi.transpose();
    CHECK(p(c.hopf.index_of("z"), c.hopf.index_of("z")) == z8);
    Report r = verify_pairing(c.hopf, c.hopf, p);
    INFO(r.to_string());
    CHECK(r.ok());
    PairingSearch s = pairing_from_generators(c, c, {{0, 0}, {0, z8}});
    CHECK(s.pairing);
    // with <z,z> = zeta4 the relation z^2 = 1 - x^2 fails
    CHECK_THROWS_AS(morphism_from_images(c, d, {d.element("1*"), i4() * d.element("z*")}), Error);
    CHECK_FALSE(pairing_from_generators(c, c, {{0, 0}, {0, i4()}}).pairing);
  }
  SUBCASE("K8(zeta;0,1) x K8(zeta;1,0)") {
    for (bool plus : {true, false}) {
      std::string z = plus ? "zeta4" : "-zeta4";
      CAPTURE(z);
      auto k = builtin_presentation("K8(" + z + ",0,1)"), h = builtin_presentation("K8(" + z + ",1,0)");
      CycloScalar zeta = plus ? i4() : -i4();
      // unsigned convention: <v, w^2> = -zeta <w,w>^2 must equal 1, so omega^2 = zeta
      CycloScalar omega = plus ? CycloScalar::zeta(8, 1) : CycloScalar::zeta(8, 3);
      REQUIRE(omega * omega == zeta);
      auto table_for = [](const CycloScalar& om) {
        return std::vector<std::vector<CycloScalar>>{
            {1, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, om, 0}, {0, 0, 0, 1}};
      };
      CycloScalar wrong = omega * i4();
      REQUIRE(wrong * wrong == -zeta);
      CHECK_FALSE(pairing_from_generators(k, h, table_for(wrong)).pairing);
      PairingSearch s = pairing_from_generators(k, h, table_for(omega));
      INFO(s.search.detail);
      REQUIRE(s.pairing);
      Report r = verify_pairing(k.hopf, h.hopf, *s.pairing);
      INFO(r.to_string());
      CHECK(r.ok());
      CHECK(verify_pairing(h.hopf, k.hopf, s.pairing->transpose()).ok());
    }
  }
  SUBCASE("a bad table is rejected") {
    auto k = builtin_presentation("H4_3"), h = builtin_presentation("H4_4");
    PairingSearch s = pairing_from_generators(k, h, {{CycloScalar(2), 0}, {0, CycloScalar(1)}});
    CHECK_FALSE(s.pairing);
    Matrix bogus = Matrix::identity(4);
    CHECK_FALSE(verify_pairing(k.hopf, h.hopf, bogus).ok());
  }
}

TEST_CASE("bosonized dual pairing on every builtin") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    HopfSuperData h = builtin(name);
    Report r = verify_pairing(bosonize(dual(h)).a, bosonize(h).a, bosonized_dual_pairing(h));
    INFO(r.to_string());
    CHECK(r.ok());
  }
}

TEST_CASE("fingerprints distinguish") {
  auto d = distinguish(builtin("A4(zeta4)"), builtin("A4(-zeta4)"));
  REQUIRE(d);
  CHECK(*d == "antipode_spectrum");
  auto e = distinguish(builtin("H4_3"), builtin("H4_4"));
  REQUIRE(e);
  CHECK(*e == "skew_primitives");
  CHECK_FALSE(distinguish(builtin("H8"), builtin("H8")));
  Fingerprint f = fingerprint(builtin("H4_2"));
  CHECK(f.dim == 4);
  CHECK(f.dim_odd == 2);
  CHECK(f.grouplikes == 2);
  CHECK(f.pointed);
  CHECK_FALSE(f.semisimple);
}

TEST_CASE("verified isomorphisms have equal fingerprints") {
  HopfSuperData a = builtin("A_C2xC2");
  for (const auto& d : super_data(a)) {
    Coinvariant c = coinvariant_superalgebra(a, d);
    int matches = 0;
    for (const char* name : {"H4_2", "H4_3", "H4_4"}) {
      IsoSearchResult r = find_isomorphism(builtin_presentation(name), c.h);
      if (r.outcome == IsoOutcome::Isomorphic) {
        ++matches;
        CHECK_FALSE(distinguish(builtin(name), c.h));
      }
    }
    CHECK(matches == 1);
  }
}

TEST_CASE("isomorphism search") {
  SUBCASE("grouplike and skew patterns: A_C2xC2 coinvariants") {
    HopfSuperData a = builtin("A_C2xC2");
    Vec a1 = zero_vec(8);
    for (const auto& chi : hopf_characters(a))
      if (chi[a.index_of("c")] == CycloScalar(-1) && chi[a.index_of("d")] == CycloScalar(1)) a1 = chi;
    Coinvariant c = coinvariant_superalgebra(a, make_datum(a, a.element("c"), a1));
    // d and x anticommute, so g -> d, z -> x lands in H4_4 and is not an algebra map from H4_2
    Vec g = *solve(c.inclusion, a.element("d")), z = *solve(c.inclusion, a.element("x"));
    auto src = builtin_presentation("H4_4");
    Matrix m = morphism_from_images(src, c.h, {g, z});
    CHECK(verify_isomorphism(src.hopf, c.h, m).ok());
    CHECK_THROWS_AS(morphism_from_images(builtin_presentation("H4_2"), c.h, {g, z}), Error);
    IsoSearchResult r = find_isomorphism(src, c.h);
    CHECK(r.outcome == IsoOutcome::Isomorphic);
    CHECK(find_isomorphism(builtin_presentation("H4_2"), c.h).outcome == IsoOutcome::Distinct);
  }
  SUBCASE("pair pattern: H8 coinvariant") {
    HopfSuperData h = builtin("H8");
    for (const auto& d : super_data(h)) {
      Coinvariant c = coinvariant_superalgebra(h, d);
      int found = 0;
      for (const char* name : {"A4(zeta4)", "A4(-zeta4)"}) {
        IsoSearchResult r = find_isomorphism(builtin_presentation(name), c.h);
        if (r.outcome == IsoOutcome::Isomorphic) ++found;
        else CHECK(r.outcome == IsoOutcome::Distinct);
      }
      CHECK(found == 1);
    }
  }
  SUBCASE("distinct by fingerprint") {
    IsoSearchResult r = find_isomorphism(builtin_presentation("H4_3"), builtin("H4_4"));
    CHECK(r.outcome == IsoOutcome::Distinct);
    CHECK(r.detail == "skew_primitives");
  }
  SUBCASE("unsupported patterns are undecided") {
    IsoSearchResult r = find_isomorphism(builtin_presentation("A6"), builtin("A6"));
    CHECK(r.outcome == IsoOutcome::Undecided);
  }
  SUBCASE("fuel") {
    IsoSearchOptions o;
    o.fuel = 0;
    o.check_fingerprints = false;
    IsoSearchResult r = find_isomorphism(builtin_presentation("H4_2"), builtin("H4_2"), o);
    CHECK(r.outcome == IsoOutcome::Undecided);
    CHECK(r.detail == "fuel exhausted");
  }
  SUBCASE("relation violations") {
    auto src = builtin_presentation("H4_4");
    HopfSuperData t = builtin("H4_3");
    try {
      morphism_from_images(src, t, {t.element("g"), t.element("z")});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ExtensionFailure);
    }
  }
}

TEST_CASE("dimension 4 table: pointed, semisimple, dual partner") {
  struct Row {
    const char* name;
    bool pointed, semisimple;
    const char* dual;
  };
  for (const Row& row : {Row{"H4_1", true, false, "H4_1"}, Row{"H4_2", true, false, "H4_2"},
                         Row{"H4_3", true, false, "H4_4"}, Row{"H4_4", true, false, "H4_3"},
                         Row{"A4(zeta4)", false, true, "A4(zeta4)"}, Row{"A4(-zeta4)", false, true, "A4(-zeta4)"}}) {
    CAPTURE(row.name);
    HopfSuperData h = builtin(row.name);
    CHECK(is_pointed(h) == row.pointed);
    CHECK(is_semisimple(h) == row.semisimple);
    IsoSearchResult r = find_isomorphism(builtin_presentation(row.dual), dual(h));
    INFO(r.detail);
    CHECK(r.outcome == IsoOutcome::Isomorphic);
  }
}
