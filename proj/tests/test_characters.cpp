#include "doctest.h"

#include "hopfsuper/characters.hpp"
#include "hopfsuper/presentation.hpp"

using namespace hopfsuper;

namespace {

CycloScalar i4() { return CycloScalar::zeta(4).embed(8); }

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t n) {
  if (a.size() != b.size()) return false;
  Subspace s(a, n);
  for (const auto& v : b)
    if (!s.contains(v)) return false;
  return true;
}

}  // namespace

TEST_CASE("abelianization dimensions") {
  CHECK(abelianization(Algebra::of(builtin("kS3"))).algebra.dim == 2);
  CHECK(abelianization(Algebra::of(builtin("H8"))).algebra.dim == 4);
  Quotient q = abelianization(Algebra::of(builtin("kZ4")));
  CHECK(q.algebra.dim == 4);
  CHECK(q.projection == Matrix::identity(4));
}

TEST_CASE("radicals") {
  HopfSuperData l = builtin("Lambda(1)");
  CHECK(same_span(radical(Algebra::of(l)), {l.element("z1")}, 2));
  CHECK(radical(Algebra::of(builtin("kS3"))).empty());
  HopfSuperData h = builtin("H4");
  CHECK(same_span(radical(Algebra::of(h)), {h.element("x"), h.element("cx")}, 4));
}

TEST_CASE("character enumeration") {
  HopfSuperData h8 = builtin("H8");
  CharacterSet cs = characters(Algebra::of(h8));
  CHECK(cs.complete());
  CHECK(cs.characters.size() == 4);
  std::size_t X = h8.index_of("X"), Y = h8.index_of("Y"), Z = h8.index_of("Z");
  int found = 0;
  for (const auto& c : cs.characters)
    if (c[X] == CycloScalar(-1) && c[Y] == CycloScalar(-1) && (c[Z] == i4() || c[Z] == -i4())) ++found;
  CHECK(found == 2);
  CHECK(characters(Algebra::of(builtin("kS3"))).characters.size() == 2);
  auto lam = characters(Algebra::of(builtin("Lambda(1)")));
  CHECK(lam.complete());
  CHECK(lam.characters.size() == 1);
}

TEST_CASE("characters are multiplicative and bounded by the semisimple quotient") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    HopfSuperData h = builtin(name);
    Algebra a = Algebra::of(h);
    CharacterSet cs = characters(a);
    for (const auto& chi : cs.characters) {
      CHECK(pair(chi, a.unit) == CycloScalar(1));
      for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
          CHECK(pair(chi, a.multiply(unit_vec(a.dim, i), unit_vec(a.dim, j))) == chi[i] * chi[j]);
    }
    std::size_t ss = a.dim - radical(a).size();
    CHECK(cs.characters.size() <= ss);
  }
}

TEST_CASE("incomplete characters are reported") {
  // Q[x]/(x^2 - 3) has no characters over Q(zeta8) but two over its closure.
  Algebra a;
  a.dim = 2;
  a.mult.resize(4);
  a.mult[0] = {{0, 1}};
  a.mult[1] = {{1, 1}};
  a.mult[2] = {{1, 1}};
  a.mult[3] = {{0, CycloScalar::rational(3, 8)}};
  a.unit = {1, 0};
  CharacterSet cs = characters(a);
  CHECK(cs.characters.empty());
  CHECK(cs.missing == 2);
  CHECK_FALSE(cs.complete());
}

TEST_CASE("grouplikes") {
  HopfSuperData h8 = builtin("H8");
  auto g = grouplikes(h8);
  CHECK(g.elements.size() == 4);
  for (const char* l : {"X", "Y", "XY"}) CHECK(find_vec(g.elements, h8.element(l)) != std::size_t(-1));
  CHECK(describe_group(g.group) == "Z2 x Z2");

  HopfSuperData a6 = builtin("A6");
  auto ga = grouplikes(a6);
  CHECK(ga.elements.size() == 2);
  CompiledPresentation ca = builtin_presentation("A6");
  CHECK(find_vec(ga.elements, evaluate(ca, "x*y + z*w")) == 1);

  HopfSuperData a4 = builtin("A4(-zeta4)");
  CompiledPresentation c4 = builtin_presentation("A4(-zeta4)");
  Vec odd_mix = evaluate(c4, "x + zeta8^3 z");
  auto restricted = grouplikes(a4, GrouplikeMode::EvenHomogeneous);
  auto unrestricted = grouplikes(a4, GrouplikeMode::Unrestricted);
  CHECK(find_vec(restricted.elements, odd_mix) == std::size_t(-1));
  CHECK(find_vec(unrestricted.elements, odd_mix) != std::size_t(-1));
  CHECK(unrestricted.elements.size() > restricted.elements.size());
}

TEST_CASE("group algebras recover their groups") {
  CHECK(grouplikes(builtin("kZ2")).elements.size() == 2);
  auto k22 = grouplikes(builtin("kZ2xZ2"));
  CHECK(k22.elements.size() == 4);
  CHECK(k22.group.invariants == std::vector<unsigned>{2, 2});
  auto s3 = grouplikes(builtin("kS3"));
  CHECK(s3.elements.size() == 6);
  CHECK_FALSE(s3.group.abelian);
  auto z4 = grouplikes(builtin("kZ4"));
  CHECK(z4.group.invariants == std::vector<unsigned>{4});
}

TEST_CASE("convolution groups") {
  HopfSuperData h8 = builtin("H8");
  CharacterGroup cg = character_group(h8);
  CHECK(cg.elements.front() == h8.counit);
  CHECK(cg.group.orders[0] == 1);
  for (std::size_t k = 1; k < cg.elements.size(); ++k) CHECK(cg.group.orders[k] == 2);
  CHECK(describe_group(character_group(builtin("H16(zeta4)")).group) == "Z2 x Z2");
  CHECK(describe_group(character_group(builtin("kS3")).group) == "Z2");
}
