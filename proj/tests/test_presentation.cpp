#include "doctest.h"

#include "hopfsuper/error.hpp"
#include "hopfsuper/presentation.hpp"

using namespace hopfsuper;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("every builtin compiles and certifies") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    HopfSuperData h = builtin(name);
    CHECK(verify_axioms(h).ok());
  }
}

TEST_CASE("builtin dimensions and parities") {
  CHECK(builtin("H8").dim() == 8);
  CHECK(builtin("H16(zeta4)").dim() == 16);
  CHECK(builtin("Lambda(2)").dim() == 4);
  CHECK(builtin("Lambda2").dim() == 4);
  CHECK(builtin("A_plus").dim() == 12);
  CHECK(builtin("kS3").purely_even());
  CHECK(builtin("H8_star").purely_even());
  CHECK_FALSE(builtin("A6").purely_even());
  HopfSuperData k = builtin("K8(zeta4,0,1)");
  CHECK(k.parity[k.index_of("w")] == 1);
  CHECK(k.parity[k.index_of("t")] == 1);
  CHECK(k.parity[k.index_of("v")] == 0);
}

TEST_CASE("A_plus presentation agrees with the hard-coded table") {
  HopfSuperData dsl = builtin_presentation("A_plus").hopf;
  HopfSuperData table = a_plus_table();
  CHECK(dsl.labels == table.labels);
  CHECK(same_structure(dsl, table));
}

TEST_CASE("dual_kS3 presentation agrees with dual(kS3)") {
  HopfSuperData d = dual(builtin("kS3"));
  HopfSuperData p = builtin("dual_kS3");
  CHECK(d.labels == p.labels);
  CHECK(same_structure(d, p));
}

TEST_CASE("A4 coproduct and antipode") {
  HopfSuperData a = builtin("A4(zeta4)");
  auto x = a.element("x"), z = a.element("z");
  Matrix t = a.comultiply(x);
  CycloScalar i = CycloScalar::zeta(4).embed(8);
  CHECK(t(a.index_of("x"), a.index_of("x")) == CycloScalar(1));
  CHECK(t(a.index_of("z"), a.index_of("z")) == i);
  CHECK(a.apply_antipode(z) == -i * z);
}

TEST_CASE("K8 relations") {
  HopfSuperData k = builtin("K8(zeta4,0,1)");
  auto t = k.element("t"), v = k.element("v"), g = k.element("g");
  CHECK(k.multiply(t, v) == k.multiply(v, t));
  Matrix d = k.comultiply(t);
  CHECK(d(k.index_of("g"), k.index_of("t")) == CycloScalar(1));
  CHECK(d(k.index_of("t"), k.index_of("1")) == CycloScalar(1));
  HopfSuperData k1 = builtin("K8(zeta4,1,0)");
  CHECK(k1.multiply(k1.element("t"), k1.element("v")) == CycloScalar(-1) * k1.multiply(k1.element("v"), k1.element("t")));
  (void)g;
}

TEST_CASE("parser statistics for H8") {
  Presentation p = parse_presentation(builtin_source("H8"));
  CHECK(p.generators.size() == 3);
  CHECK(p.rules.size() == 6);
  CHECK(p.basis.size() == 8);
}

TEST_CASE("exterior algebra from a one-line source") {
  HopfSuperData h = compile(
      "hopf L over Q(zeta8); gen z odd; rel z*z = 0; basis 1, z; delta z = z (x) 1 + 1 (x) z; antipode z = -z");
  CHECK(h.dim() == 2);
  CHECK(h.parity == std::vector<int>{0, 1});
}

TEST_CASE("diagnostics") {
  CHECK(kind_of([] { parse_presentation("gen z odd\nrel z*z = z*w\n"); }) == ErrorKind::UnknownGenerator);
  CHECK(kind_of([] { parse_presentation("gen z odd\ncounit z = 1\n"); }) == ErrorKind::ParityMismatch);
  CHECK(kind_of([] { parse_presentation("gen x even\ncounit x = q\n"); }) == ErrorKind::UnknownScalar);
  CHECK(kind_of([] { parse_presentation("gen x even\nrel x*x = = 1\n"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_presentation("gen x even; gen z odd\nrel x*x = z\n"); }) == ErrorKind::ParityMismatch);
  try {
    parse_presentation("gen x even\n\nrel x*x = 1 $\n");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 13);
  }
  std::string h8 = builtin_source("H8");
  auto pos = h8.find(", X*Y*Z");
  h8.erase(pos, 7);
  CHECK(kind_of([&] { compile(h8); }) == ErrorKind::BasisNotClosed);
  CHECK(kind_of([] { compile("gen x even\nrel x = x*x\nbasis 1\ndelta x = x (x) x; counit x = 1; antipode x = x"); }) ==
        ErrorKind::FuelExhausted);
  CHECK(kind_of([] { builtin("Nope"); }) == ErrorKind::UnknownName);
  CHECK(kind_of([] { builtin("K8(zeta4,2,0)"); }) == ErrorKind::BadParams);
  CHECK(kind_of([] { builtin("A4(zeta8)"); }) == ErrorKind::BadParams);
}

TEST_CASE("inconsistent relations are rejected by certification") {
  std::string src = builtin_source("H4");
  auto pos = src.find("rel x*c = -c*x");
  src.replace(pos, 14, "rel x*c = c*x");
  CHECK(kind_of([&] { compile(src); }) == ErrorKind::AxiomFailure);
}

TEST_CASE("render round trip is bit exact") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    HopfSuperData h = builtin(name);
    HopfSuperData back = compile(render(h));
    CHECK(back.labels == h.labels);
    CHECK(back.name == h.name);
    CHECK(same_structure(back, h));
  }
}

TEST_CASE("evaluate and generator extension") {
  CompiledPresentation c = builtin_presentation("H8");
  Vec z2 = evaluate(c, "Z^2");
  Vec expect = evaluate(c, "1/2 (1 + X + Y - X Y)");
  CHECK(z2 == expect);
  Matrix id = extend_generator_map(c, c.hopf, {c.hopf.element("X"), c.hopf.element("Y"), c.hopf.element("Z")});
  CHECK(id == Matrix::identity(8));
}
