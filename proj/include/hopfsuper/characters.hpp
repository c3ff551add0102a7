#pragma once

#include <cstddef>
#include <vector>

#include "hopfsuper/hopf.hpp"
#include "hopfsuper/linalg.hpp"

namespace hopfsuper {

// Unital associative algebra by structure constants (grading ignored).
struct Algebra {
  std::size_t dim = 0;
  int conductor = 8;  // characters are sought in Q(zeta_conductor)
  std::vector<SparseVec> mult;  // e_i e_j at i * dim + j
  Vec unit;

  static Algebra of(const HopfSuperData& h);
  // Convolution algebra H*: e^i e^j = sum over Delta(e_k) of e^k.
  static Algebra dual_of(const HopfSuperData& h);

  Vec multiply(const Vec& a, const Vec& b) const;
  bool commutative() const;
};

struct Quotient {
  Algebra algebra;
  Matrix projection;  // dim(quotient) x dim(original)
};

// Quotient by the subspace spanned by `ideal` (caller guarantees a two-sided ideal).
Quotient quotient(const Algebra& a, const std::vector<Vec>& ideal);
// Basis of the two-sided ideal generated by the given elements.
std::vector<Vec> two_sided_ideal(const Algebra& a, const std::vector<Vec>& generators);
Quotient abelianization(const Algebra& a);
// Kernel of the trace form (a, b) -> Tr(L_{ab}); the Jacobson radical in characteristic 0.
std::vector<Vec> radical(const Algebra& a);

struct CharacterSet {
  std::vector<Vec> characters;  // covectors, canonical order
  std::size_t missing = 0;      // characters defined only over an extension field
  bool complete() const { return missing == 0; }
};

// All algebra maps A -> K.  Coverage is certified by counting: the split
// semisimple quotient of the abelianization has exactly dim-many characters.
CharacterSet characters(const Algebra& a);
// Characters of a Hopf superalgebra; counit first.  Throws IncompleteCharacters.
std::vector<Vec> hopf_characters(const HopfSuperData& h);

struct GroupTable {
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
  std::vector<unsigned> orders;
  bool abelian = true;
  std::vector<unsigned> invariants;  // invariant factors d1 | d2 | ... (abelian only)
  std::size_t order() const { return table.size(); }
};

GroupTable analyze_group(std::vector<std::vector<std::size_t>> table, std::size_t identity);
std::string describe_group(const GroupTable& g);

enum class GrouplikeMode { EvenHomogeneous, Unrestricted };

struct GrouplikeGroup {
  std::vector<Vec> elements;  // unit first
  bool closed = true;         // false only possible in unrestricted mode
  GroupTable group;
};

// Grouplikes are the characters of the dual algebra.
GrouplikeGroup grouplikes(const HopfSuperData& h, GrouplikeMode mode = GrouplikeMode::EvenHomogeneous);

struct CharacterGroup {
  std::vector<Vec> elements;  // counit first
  GroupTable group;
};

CharacterGroup convolution_group(const HopfSuperData& h, const std::vector<Vec>& chars);
CharacterGroup character_group(const HopfSuperData& h);

// Index of v in list (exact), or npos.
std::size_t find_vec(const std::vector<Vec>& list, const Vec& v);

}  // namespace hopfsuper
