#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfsuper/hopf.hpp"

namespace hopfsuper {

using Word = std::vector<int>;                      // generator indices
using NCPoly = std::map<Word, CycloScalar>;         // noncommutative polynomial
using TensorPoly = std::map<std::pair<Word, Word>, CycloScalar>;

struct Generator {
  std::string name;
  int parity = 0;
};

struct RewriteRule {
  Word lhs;
  NCPoly rhs;
  int line = 0;
};

// Parsed form of the presentation language:
//   hopf NAME over Q(zetaN)
//   gen a, b even | odd
//   rel WORD = EXPR             (oriented rewrite rule WORD -> EXPR)
//   basis WORD, WORD, ...       (must include 1)
//   delta GEN = EXPR (x) EXPR + ...
//   counit GEN = SCALAR
//   antipode GEN = EXPR
//   scalar NAME = SCALAR
//   label NAME = EXPR           (optional output basis, one per basis element)
// Statements end at a newline or ';' and '#' starts a comment.
struct Presentation {
  std::string name = "unnamed";
  int conductor = 8;
  std::vector<Generator> generators;
  std::vector<RewriteRule> rules;
  std::vector<Word> basis;
  int basis_line = 0;
  std::map<int, TensorPoly> delta;
  std::map<int, CycloScalar> counit;
  std::map<int, NCPoly> antipode;
  std::vector<std::pair<std::string, NCPoly>> labels;
  std::map<std::string, CycloScalar> scalars;

  int generator_index(const std::string& name) const;  // -1 if absent
  std::string word_string(const Word& w) const;
};

inline constexpr std::uint64_t kDefaultRewriteFuel = 10000;

Presentation parse_presentation(const std::string& text, int default_conductor = 8);
// Normal form of a word under the rewrite rules (leftmost match first,
// rules tried in source order).  Throws FuelExhausted.
NCPoly normal_form(const Presentation& p, const Word& w, std::uint64_t fuel = kDefaultRewriteFuel);

struct CompiledPresentation {
  Presentation presentation;
  HopfSuperData hopf;     // in the output (label) basis
  std::vector<Word> words;  // declared word basis
  Matrix label_basis;     // columns: output basis vectors in word coordinates
  Matrix label_inverse;   // word coordinates -> output coordinates
};

CompiledPresentation compile_presentation(const Presentation& p, std::uint64_t fuel = kDefaultRewriteFuel);
HopfSuperData compile(const std::string& text, std::uint64_t fuel = kDefaultRewriteFuel);

// Evaluate an expression (presentation syntax) to output-basis coordinates.
Vec evaluate(const CompiledPresentation& c, const std::string& expr);
// Linear map from the source output basis into `target`, sending generator k
// to images[k] and words to products of images.
Matrix extend_generator_map(const CompiledPresentation& src, const HopfSuperData& target,
                            const std::vector<Vec>& images);

// Presentation text whose compilation reproduces h exactly (same basis order,
// labels and structure constants).
std::string render(const HopfSuperData& h);

// ---- builtin catalogue ----
// Concrete instances, e.g. "H16(zeta4)", "K8(-zeta4,0,1)".
std::vector<std::string> builtin_names();
// Accepts names with parameters and a few aliases ("H4" for H4_sweedler).
std::string builtin_source(const std::string& name);
CompiledPresentation builtin_presentation(const std::string& name);
HopfSuperData builtin(const std::string& name);
// Hard-coded structure table of A_plus on the basis {sigma* xi^i}.
HopfSuperData a_plus_table();

}  // namespace hopfsuper
