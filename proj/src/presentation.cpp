#include "hopfsuper/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "hopfsuper/error.hpp"

namespace hopfsuper {

int Presentation::generator_index(const std::string& n) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == n) return static_cast<int>(i);
  return -1;
}

std::string Presentation::word_string(const Word& w) const {
  if (w.empty()) return "1";
  bool short_names = std::all_of(generators.begin(), generators.end(),
                                 [](const Generator& g) { return g.name.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty() && !short_names) out += "*";
    out += generators[w[i]].name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

// ---------------- lexer ----------------

enum class T { Ident, Number, String, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, Comma, Tensor, Sep, End };

struct Token {
  T type;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    char ch = s[i];
    int l = line, c = col;
    if (ch == '#' || (ch == '/' && i + 1 < s.size() && s[i + 1] == '/')) {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (ch == '\n' || ch == ';') {
      out.push_back({T::Sep, std::string(1, ch), l, c});
      advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (s.compare(i, 3, "(x)") == 0) {
      out.push_back({T::Tensor, "(x)", l, c});
      advance(3);
      continue;
    }
    if (s.compare(i, 3, "\xE2\x8A\x97") == 0) {  // U+2297
      out.push_back({T::Tensor, "(x)", l, c});
      i += 3;
      col += 1;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
      out.push_back({T::Ident, s.substr(i, j - i), l, c});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({T::Number, s.substr(i, j - i), l, c});
      advance(j - i);
      continue;
    }
    if (ch == '"') {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] != '"' && s[j] != '\n') ++j;
      if (j >= s.size() || s[j] != '"') throw Error(ErrorKind::SyntaxError, "unterminated string", l, c);
      out.push_back({T::String, s.substr(i + 1, j - i - 1), l, c});
      advance(j - i + 1);
      continue;
    }
    T t;
    switch (ch) {
      case '+': t = T::Plus; break;
      case '-': t = T::Minus; break;
      case '*': t = T::Star; break;
      case '/': t = T::Slash; break;
      case '^': t = T::Caret; break;
      case '(': t = T::LParen; break;
      case ')': t = T::RParen; break;
      case '=': t = T::Equals; break;
      case ',': t = T::Comma; break;
      default:
        throw Error(ErrorKind::SyntaxError, std::string("unexpected character '") + ch + "'", l, c);
    }
    out.push_back({t, std::string(1, ch), l, c});
    advance(1);
  }
  out.push_back({T::End, "", line, col});
  return out;
}

// ---------------- polynomial helpers ----------------

void add_term(NCPoly& p, const Word& w, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto it = p.find(w);
  if (it == p.end()) {
    p.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

void add_term(TensorPoly& p, const std::pair<Word, Word>& w, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto it = p.find(w);
  if (it == p.end()) {
    p.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

NCPoly poly_mul(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [w1, c1] : a)
    for (const auto& [w2, c2] : b) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      add_term(r, w, c1 * c2);
    }
  return r;
}

bool is_scalar(const NCPoly& p) { return p.empty() || (p.size() == 1 && p.begin()->first.empty()); }
CycloScalar scalar_of(const NCPoly& p) { return p.empty() ? CycloScalar(0) : p.begin()->second; }

NCPoly constant_poly(const CycloScalar& c) {
  NCPoly p;
  add_term(p, Word{}, c);
  return p;
}

struct Value {
  bool tensor = false;
  NCPoly poly;
  TensorPoly tens;
  int line = 0, col = 0;
};

// ---------------- parser ----------------

class Parser {
 public:
  Parser(std::vector<Token> toks, Presentation& p) : toks_(std::move(toks)), p_(p) {}

  void run() {
    bool first = true;
    for (;;) {
      while (peek().type == T::Sep) ++pos_;
      if (peek().type == T::End) break;
      const Token& kw = expect(T::Ident, "statement keyword");
      if (kw.text == "hopf") {
        if (!first) throw err(ErrorKind::SyntaxError, "'hopf' header must come first", kw);
        header();
      } else if (kw.text == "gen") {
        gen();
      } else if (kw.text == "rel") {
        rel(kw);
      } else if (kw.text == "basis") {
        p_.basis_line = kw.line;
        basis();
      } else if (kw.text == "delta") {
        delta();
      } else if (kw.text == "counit") {
        counit();
      } else if (kw.text == "antipode") {
        antipode();
      } else if (kw.text == "scalar") {
        scalar();
      } else if (kw.text == "label") {
        label();
      } else {
        throw err(ErrorKind::SyntaxError, "unknown statement '" + kw.text + "'", kw);
      }
      first = false;
      const Token& end = peek();
      if (end.type != T::Sep && end.type != T::End)
        throw err(ErrorKind::SyntaxError, "unexpected '" + end.text + "' at end of statement", end);
    }
  }

  Value expression(bool scalar_only) {
    scalar_only_ = scalar_only;
    return expr();
  }

  const Token& peek() const { return toks_[pos_]; }

 private:
  static Error err(ErrorKind k, const std::string& msg, const Token& t) { return Error(k, msg, t.line, t.col); }

  const Token& expect(T type, const std::string& what) {
    const Token& t = peek();
    if (t.type != type)
      throw err(ErrorKind::SyntaxError, "expected " + what + (t.text.empty() ? "" : ", found '" + t.text + "'"), t);
    ++pos_;
    return t;
  }

  int parity_of_word(const Word& w) const {
    int p = 0;
    for (int g : w) p ^= p_.generators[g].parity;
    return p;
  }

  void header() {
    const Token& name = peek();
    if (name.type != T::Ident && name.type != T::String)
      throw err(ErrorKind::SyntaxError, "expected algebra name", name);
    ++pos_;
    p_.name = name.text;
    const Token& over = expect(T::Ident, "'over'");
    if (over.text != "over") throw err(ErrorKind::SyntaxError, "expected 'over'", over);
    const Token& q = expect(T::Ident, "field");
    if (q.text != "Q") throw err(ErrorKind::SyntaxError, "field must be Q or Q(zetaN)", q);
    if (peek().type == T::LParen) {
      ++pos_;
      const Token& z = expect(T::Ident, "zetaN");
      int n = zeta_index(z.text);
      if (n <= 0) throw err(ErrorKind::SyntaxError, "expected zetaN", z);
      p_.conductor = n;
      expect(T::RParen, "')'");
    } else {
      p_.conductor = 1;
    }
  }

  static int zeta_index(const std::string& s) {
    if (s.size() <= 4 || s.compare(0, 4, "zeta") != 0) return -1;
    for (std::size_t i = 4; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return -1;
    return std::stoi(s.substr(4));
  }

  void gen() {
    std::vector<Token> names;
    for (;;) {
      names.push_back(expect(T::Ident, "generator name"));
      if (peek().type != T::Comma) break;
      ++pos_;
    }
    int parity;
    if (names.size() >= 2 && (names.back().text == "even" || names.back().text == "odd")) {
      // "gen a even" parsed the parity as a name only when commas were absent
      parity = names.back().text == "odd";
      names.pop_back();
    } else {
      const Token& par = expect(T::Ident, "'even' or 'odd'");
      if (par.text != "even" && par.text != "odd") throw err(ErrorKind::SyntaxError, "expected 'even' or 'odd'", par);
      parity = par.text == "odd";
    }
    for (const auto& n : names) {
      if (p_.generator_index(n.text) >= 0 || p_.scalars.count(n.text) || zeta_index(n.text) > 0 || n.text == "over")
        throw err(ErrorKind::SyntaxError, "name '" + n.text + "' already in use", n);
      p_.generators.push_back({n.text, parity});
    }
  }

  Word single_word(const Value& v, const Token& at, const std::string& what) {
    if (v.tensor || v.poly.size() != 1 || !v.poly.begin()->second.is_one())
      throw err(ErrorKind::SyntaxError, what + " must be a single monomial", at);
    return v.poly.begin()->first;
  }

  void rel(const Token& kw) {
    const Token& at = peek();
    Value lhs = expression(false);
    Word w = single_word(lhs, at, "left side of a relation");
    if (w.empty()) throw err(ErrorKind::SyntaxError, "left side of a relation cannot be 1", at);
    expect(T::Equals, "'='");
    const Token& rat = peek();
    Value rhs = expression(false);
    if (rhs.tensor) throw err(ErrorKind::SyntaxError, "relation right side must be an element", rat);
    int par = parity_of_word(w);
    for (const auto& [tw, c] : rhs.poly)
      if (parity_of_word(tw) != par)
        throw err(ErrorKind::ParityMismatch, "relation mixes parities (" + p_.word_string(w) + ")", rat);
    p_.rules.push_back({w, rhs.poly, kw.line});
  }

  void basis() {
    for (;;) {
      const Token& at = peek();
      Value v = expression(false);
      Word w = single_word(v, at, "basis element");
      if (std::find(p_.basis.begin(), p_.basis.end(), w) != p_.basis.end())
        throw err(ErrorKind::SyntaxError, "duplicate basis word " + p_.word_string(w), at);
      p_.basis.push_back(w);
      if (peek().type != T::Comma) break;
      ++pos_;
    }
  }

  int generator_ref(const Token& t) {
    int g = p_.generator_index(t.text);
    if (g < 0) throw err(ErrorKind::UnknownGenerator, "unknown generator '" + t.text + "'", t);
    return g;
  }

  void delta() {
    const Token& name = expect(T::Ident, "generator");
    int g = generator_ref(name);
    expect(T::Equals, "'='");
    const Token& at = peek();
    Value v = expression(false);
    if (!v.tensor && !v.poly.empty()) throw err(ErrorKind::SyntaxError, "delta must be a sum of tensors", at);
    for (const auto& [ww, c] : v.tens)
      if ((parity_of_word(ww.first) ^ parity_of_word(ww.second)) != p_.generators[g].parity)
        throw err(ErrorKind::ParityMismatch, "delta(" + name.text + ") has a term of the wrong parity", at);
    if (p_.delta.count(g)) throw err(ErrorKind::SyntaxError, "delta of '" + name.text + "' given twice", name);
    p_.delta[g] = v.tens;
  }

  void counit() {
    const Token& name = expect(T::Ident, "generator");
    int g = generator_ref(name);
    expect(T::Equals, "'='");
    const Token& at = peek();
    Value v = expression(true);
    CycloScalar c = scalar_of(v.poly);
    if (p_.generators[g].parity == 1 && !c.is_zero())
      throw err(ErrorKind::ParityMismatch, "counit of odd generator must vanish", at);
    if (p_.counit.count(g)) throw err(ErrorKind::SyntaxError, "counit of '" + name.text + "' given twice", name);
    p_.counit[g] = c;
  }

  void antipode() {
    const Token& name = expect(T::Ident, "generator");
    int g = generator_ref(name);
    expect(T::Equals, "'='");
    const Token& at = peek();
    Value v = expression(false);
    if (v.tensor) throw err(ErrorKind::SyntaxError, "antipode must be an element", at);
    for (const auto& [w, c] : v.poly)
      if (parity_of_word(w) != p_.generators[g].parity)
        throw err(ErrorKind::ParityMismatch, "antipode(" + name.text + ") has a term of the wrong parity", at);
    if (p_.antipode.count(g)) throw err(ErrorKind::SyntaxError, "antipode of '" + name.text + "' given twice", name);
    p_.antipode[g] = v.poly;
  }

  void scalar() {
    const Token& name = expect(T::Ident, "scalar name");
    if (p_.generator_index(name.text) >= 0 || zeta_index(name.text) > 0)
      throw err(ErrorKind::SyntaxError, "name '" + name.text + "' already in use", name);
    expect(T::Equals, "'='");
    Value v = expression(true);
    p_.scalars[name.text] = scalar_of(v.poly);
  }

  void label() {
    const Token& name = peek();
    if (name.type != T::Ident && name.type != T::String) throw err(ErrorKind::SyntaxError, "expected label name", name);
    ++pos_;
    expect(T::Equals, "'='");
    const Token& at = peek();
    Value v = expression(false);
    if (v.tensor) throw err(ErrorKind::SyntaxError, "label must be an element", at);
    int par = -1;
    for (const auto& [w, c] : v.poly) {
      int q = parity_of_word(w);
      if (par >= 0 && q != par) throw err(ErrorKind::ParityMismatch, "label '" + name.text + "' is inhomogeneous", at);
      par = q;
    }
    p_.labels.emplace_back(name.text, v.poly);
  }

  // ---- expressions ----
  Value expr() {
    Value acc = tensor_expr();
    for (;;) {
      const Token& op = peek();
      if (op.type != T::Plus && op.type != T::Minus) return acc;
      ++pos_;
      Value rhs = tensor_expr();
      acc = combine(acc, rhs, op.type == T::Minus ? CycloScalar(-1) : CycloScalar(1), op);
    }
  }

  Value combine(const Value& a, const Value& b, const CycloScalar& sign, const Token& at) {
    bool a_zero = !a.tensor && a.poly.empty(), b_zero = !b.tensor && b.poly.empty();
    if (a.tensor != b.tensor && !a_zero && !b_zero)
      throw err(ErrorKind::SyntaxError, "cannot add an element and a tensor", at);
    Value r = a;
    if (b.tensor) {
      r.tensor = true;
      for (const auto& [w, c] : b.tens) add_term(r.tens, w, sign * c);
    } else {
      for (const auto& [w, c] : b.poly) add_term(r.poly, w, sign * c);
    }
    return r;
  }

  Value tensor_expr() {
    Value left = product();
    if (peek().type != T::Tensor) return left;
    const Token& op = peek();
    ++pos_;
    Value right = product();
    if (left.tensor || right.tensor) throw err(ErrorKind::SyntaxError, "nested tensor product", op);
    Value r;
    r.tensor = true;
    for (const auto& [w1, c1] : left.poly)
      for (const auto& [w2, c2] : right.poly) add_term(r.tens, {w1, w2}, c1 * c2);
    return r;
  }

  bool starts_atom(const Token& t) const {
    return t.type == T::Ident || t.type == T::Number || t.type == T::LParen;
  }

  Value product() {
    Value acc = unary();
    for (;;) {
      const Token& op = peek();
      bool implicit = starts_atom(op);
      if (op.type != T::Star && op.type != T::Slash && !implicit) return acc;
      if (!implicit) ++pos_;
      Value rhs = unary();
      if (op.type == T::Slash) {
        if (rhs.tensor || !is_scalar(rhs.poly)) throw err(ErrorKind::SyntaxError, "division by a non-scalar", op);
        CycloScalar d = scalar_of(rhs.poly);
        if (d.is_zero()) throw err(ErrorKind::DivisionByZero, "division by zero", op);
        acc = scale(acc, d.inv());
      } else {
        acc = multiply(acc, rhs, op);
      }
    }
  }

  static Value scale(const Value& v, const CycloScalar& s) {
    Value r;
    r.tensor = v.tensor;
    for (const auto& [w, c] : v.poly) add_term(r.poly, w, c * s);
    for (const auto& [w, c] : v.tens) add_term(r.tens, w, c * s);
    return r;
  }

  Value multiply(const Value& a, const Value& b, const Token& at) {
    if (a.tensor && b.tensor) throw err(ErrorKind::SyntaxError, "product of two tensors", at);
    if (a.tensor) {
      if (!is_scalar(b.poly)) throw err(ErrorKind::SyntaxError, "tensor times element", at);
      return scale(a, scalar_of(b.poly));
    }
    if (b.tensor) {
      if (!is_scalar(a.poly)) throw err(ErrorKind::SyntaxError, "element times tensor", at);
      return scale(b, scalar_of(a.poly));
    }
    Value r;
    r.poly = poly_mul(a.poly, b.poly);
    return r;
  }

  Value unary() {
    if (peek().type == T::Minus) {
      ++pos_;
      return scale(unary(), CycloScalar(-1));
    }
    if (peek().type == T::Plus) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (peek().type != T::Caret) return base;
    const Token& op = peek();
    ++pos_;
    bool neg = false;
    if (peek().type == T::Minus) {
      neg = true;
      ++pos_;
    }
    const Token& e = expect(T::Number, "integer exponent");
    long n = std::stol(e.text);
    if (base.tensor) throw err(ErrorKind::SyntaxError, "power of a tensor", op);
    if (neg) {
      if (!is_scalar(base.poly)) throw err(ErrorKind::SyntaxError, "negative power of a non-scalar", op);
      CycloScalar s = scalar_of(base.poly);
      if (s.is_zero()) throw err(ErrorKind::DivisionByZero, "negative power of zero", op);
      Value r;
      r.poly = constant_poly(s.inv().pow(n));
      return r;
    }
    Value r;
    r.poly = constant_poly(CycloScalar(1));
    for (long k = 0; k < n; ++k) r.poly = poly_mul(r.poly, base.poly);
    return r;
  }

  Value atom() {
    const Token& t = peek();
    Value v;
    v.line = t.line;
    v.col = t.col;
    if (t.type == T::Number) {
      ++pos_;
      v.poly = constant_poly(CycloScalar(Rational(mpz_class(t.text))));
      return v;
    }
    if (t.type == T::LParen) {
      ++pos_;
      Value inner = expr();
      expect(T::RParen, "')'");
      return inner;
    }
    if (t.type != T::Ident) throw err(ErrorKind::SyntaxError, "expected a term, found '" + t.text + "'", t);
    ++pos_;
    auto sit = p_.scalars.find(t.text);
    if (sit != p_.scalars.end()) {
      v.poly = constant_poly(sit->second);
      return v;
    }
    int n = zeta_index(t.text);
    if (n > 0) {
      try {
        v.poly = constant_poly(CycloScalar::zeta(n).embed(p_.conductor));
      } catch (const Error& e) {
        throw err(ErrorKind::UnknownScalar, t.text + " is not in Q(zeta" + std::to_string(p_.conductor) + ")", t);
      }
      return v;
    }
    int g = p_.generator_index(t.text);
    if (g >= 0) {
      if (scalar_only_) throw err(ErrorKind::UnknownScalar, "expected a scalar, found generator '" + t.text + "'", t);
      add_term(v.poly, Word{g}, CycloScalar(1));
      return v;
    }
    if (scalar_only_) throw err(ErrorKind::UnknownScalar, "unknown scalar '" + t.text + "'", t);
    throw err(ErrorKind::UnknownGenerator, "unknown generator '" + t.text + "'", t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Presentation& p_;
  bool scalar_only_ = false;
};

}  // namespace

Presentation parse_presentation(const std::string& text, int default_conductor) {
  Presentation p;
  p.conductor = default_conductor;
  Parser parser(lex(text), p);
  parser.run();
  return p;
}

NCPoly normal_form(const Presentation& p, const Word& w0, std::uint64_t fuel) {
  NCPoly result;
  std::vector<std::pair<Word, CycloScalar>> stack = {{w0, CycloScalar(1)}};
  std::uint64_t steps = 0;
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    const RewriteRule* hit = nullptr;
    std::size_t at = 0;
    for (std::size_t pos = 0; pos < w.size() && !hit; ++pos)
      for (const auto& r : p.rules) {
        if (r.lhs.size() > w.size() - pos) continue;
        if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
          hit = &r;
          at = pos;
          break;
        }
      }
    if (!hit) {
      add_term(result, w, c);
      continue;
    }
    if (++steps > fuel)
      throw Error(ErrorKind::FuelExhausted, "rewriting " + p.word_string(w0) + " exceeded " + std::to_string(fuel) +
                                                " steps (non-terminating relations?)");
    for (const auto& [t, tc] : hit->rhs) {
      Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
      nw.insert(nw.end(), t.begin(), t.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(at + hit->lhs.size()), w.end());
      stack.emplace_back(std::move(nw), c * tc);
    }
  }
  return result;
}

namespace {

class WordCoordinates {
 public:
  WordCoordinates(const Presentation& p, std::uint64_t fuel) : p_(p), fuel_(fuel) {
    for (std::size_t i = 0; i < p.basis.size(); ++i) index_[p.basis[i]] = i;
  }

  Vec coords(const NCPoly& poly, const std::string& context) {
    Vec v(p_.basis.size());
    for (const auto& [w, c] : poly) {
      for (const auto& [nw, nc] : nf(w)) {
        auto it = index_.find(nw);
        if (it == index_.end())
          throw Error(ErrorKind::BasisNotClosed, "normal form word " + p_.word_string(nw) + " (from " + context +
                                                     ") is not in the declared basis",
                      p_.basis_line);
        v[it->second] += c * nc;
      }
    }
    return v;
  }

  const NCPoly& nf(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(w, normal_form(p_, w, fuel_)).first->second;
  }

 private:
  const Presentation& p_;
  std::uint64_t fuel_;
  std::map<Word, std::size_t> index_;
  std::map<Word, NCPoly> cache_;
};

}  // namespace

CompiledPresentation compile_presentation(const Presentation& p, std::uint64_t fuel) {
  if (p.basis.empty()) throw Error(ErrorKind::SyntaxError, p.name + ": no basis declared");
  if (std::find(p.basis.begin(), p.basis.end(), Word{}) == p.basis.end())
    throw Error(ErrorKind::SyntaxError, p.name + ": basis must contain 1");
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    const auto& gen = p.generators[g];
    if (!p.delta.count(static_cast<int>(g))) throw Error(ErrorKind::SyntaxError, "missing delta for " + gen.name);
    if (!p.antipode.count(static_cast<int>(g))) throw Error(ErrorKind::SyntaxError, "missing antipode for " + gen.name);
    if (gen.parity == 0 && !p.counit.count(static_cast<int>(g)))
      throw Error(ErrorKind::SyntaxError, "missing counit for even generator " + gen.name);
  }
  WordCoordinates wc(p, fuel);
  const std::size_t d = p.basis.size();
  for (const auto& w : p.basis) {
    const NCPoly& n = wc.nf(w);
    if (n.size() != 1 || n.begin()->first != w || !n.begin()->second.is_one())
      throw Error(ErrorKind::BasisNotClosed, "declared basis word " + p.word_string(w) + " is reducible", p.basis_line);
  }

  std::vector<int> parity;
  std::vector<std::string> word_labels;
  for (const auto& w : p.basis) {
    int par = 0;
    for (int g : w) par ^= p.generators[g].parity;
    parity.push_back(par);
    word_labels.push_back(p.word_string(w));
  }
  HopfSuperData h = HopfSuperData::zero(p.name, p.conductor, parity, word_labels);
  std::size_t unit_index = std::find(p.basis.begin(), p.basis.end(), Word{}) - p.basis.begin();
  h.unit[unit_index] = CycloScalar(1);

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Word w = p.basis[i];
      w.insert(w.end(), p.basis[j].begin(), p.basis[j].end());
      NCPoly single;
      single[w] = CycloScalar(1);
      Vec prod = wc.coords(single, "product " + word_labels[i] + "*" + word_labels[j]);
      for (std::size_t k = 0; k < d; ++k) h.add_mult(i, j, k, prod[k]);
    }

  // Generator-level coproducts, counits and antipodes in word coordinates.
  std::vector<Matrix> gen_delta;
  std::vector<Vec> gen_antipode;
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    Matrix t(d, d);
    const std::string ctx = "delta(" + p.generators[g].name + ")";
    for (const auto& [ww, c] : p.delta.at(static_cast<int>(g))) {
      NCPoly l, r;
      l[ww.first] = CycloScalar(1);
      r[ww.second] = CycloScalar(1);
      Vec lv = wc.coords(l, ctx), rv = wc.coords(r, ctx);
      for (std::size_t a = 0; a < d; ++a) {
        if (lv[a].is_zero()) continue;
        for (std::size_t b = 0; b < d; ++b)
          if (!rv[b].is_zero()) t(a, b) += c * lv[a] * rv[b];
      }
    }
    gen_delta.push_back(std::move(t));
    gen_antipode.push_back(wc.coords(p.antipode.at(static_cast<int>(g)), "antipode(" + p.generators[g].name + ")"));
  }

  for (std::size_t i = 0; i < d; ++i) {
    const Word& w = p.basis[i];
    Matrix t(d, d);
    t(unit_index, unit_index) = CycloScalar(1);
    CycloScalar eps(1);
    Vec s = h.unit;
    int parity_so_far = 0;
    for (int g : w) {
      t = h.tensor_multiply(t, gen_delta[g]);
      auto it = p.counit.find(g);
      eps *= it == p.counit.end() ? CycloScalar(0) : it->second;
      // S(u g) = (-1)^{|u||g|} S(g) S(u)
      s = h.multiply(gen_antipode[g], s);
      if (parity_so_far && p.generators[g].parity) s = CycloScalar(-1) * s;
      parity_so_far ^= p.generators[g].parity;
    }
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) h.add_comult(i, a, b, t(a, b));
    h.counit[i] = eps;
    h.antipode.set_column(i, s);
  }
  h.normalize();

  CompiledPresentation out;
  out.presentation = p;
  out.words = p.basis;
  if (p.labels.empty()) {
    out.label_basis = Matrix::identity(d);
    out.label_inverse = Matrix::identity(d);
    out.hopf = std::move(h);
  } else {
    if (p.labels.size() != d)
      throw Error(ErrorKind::SyntaxError, p.name + ": " + std::to_string(p.labels.size()) + " labels for a basis of " +
                                              std::to_string(d));
    std::vector<Vec> cols;
    std::vector<std::string> names;
    for (const auto& [n, poly] : p.labels) {
      cols.push_back(wc.coords(poly, "label " + n));
      names.push_back(n);
    }
    out.label_basis = Matrix::from_columns(cols, d);
    auto inv = inverse(out.label_basis);
    if (!inv) throw Error(ErrorKind::SyntaxError, p.name + ": labels are not a basis");
    out.label_inverse = *inv;
    out.hopf = change_basis(h, out.label_basis, names, p.name);
  }
  certify(out.hopf);
  return out;
}

HopfSuperData compile(const std::string& text, std::uint64_t fuel) {
  return compile_presentation(parse_presentation(text), fuel).hopf;
}

Vec evaluate(const CompiledPresentation& c, const std::string& expr) {
  Presentation p = c.presentation;
  Parser parser(lex(expr), p);
  Value v = parser.expression(false);
  if (parser.peek().type != T::End && parser.peek().type != T::Sep)
    throw Error(ErrorKind::SyntaxError, "trailing input in expression '" + expr + "'");
  if (v.tensor) throw Error(ErrorKind::SyntaxError, "expected an element, got a tensor");
  WordCoordinates wc(p, kDefaultRewriteFuel);
  return c.label_inverse.apply(wc.coords(v.poly, expr));
}

Matrix extend_generator_map(const CompiledPresentation& src, const HopfSuperData& target,
                            const std::vector<Vec>& images) {
  const auto& p = src.presentation;
  if (images.size() != p.generators.size())
    throw Error(ErrorKind::BadParams, "need one image per generator");
  Matrix word_map(target.dim(), src.words.size());
  for (std::size_t i = 0; i < src.words.size(); ++i) {
    Vec v = target.unit;
    for (int g : src.words[i]) v = target.multiply(v, images[g]);
    word_map.set_column(i, v);
  }
  return word_map * src.label_basis;
}

// ---------------- rendering ----------------

namespace {

bool ident_safe(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

std::string quoted(const std::string& s) { return ident_safe(s) ? s : "\"" + s + "\""; }

std::string scalar_text(const CycloScalar& c) {
  std::string s = c.to_string();
  return "(" + s + ")";
}

// Linear combination of symbols (symbol "" means the unit 1).
std::string lincomb(const std::vector<std::pair<std::string, CycloScalar>>& terms) {
  std::string out;
  for (const auto& [sym, c] : terms) {
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += scalar_text(c);
    if (!sym.empty()) out += "*" + sym;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string render(const HopfSuperData& h) {
  const std::size_t d = h.dim();
  std::size_t p = d;
  for (std::size_t i = 0; i < d; ++i)
    if (!h.unit[i].is_zero() && h.parity[i] == 0) {
      p = i;
      break;
    }
  if (p == d) throw Error(ErrorKind::BadParams, "unit is zero");
  std::vector<std::string> sym(d);
  for (std::size_t i = 0; i < d; ++i) sym[i] = i == p ? "" : "b" + std::to_string(i);
  // e_p = (1 - sum_{k != p} u_k b_k) / u_p
  CycloScalar up_inv = h.unit[p].inv();
  auto expand = [&](const Vec& v) {
    std::vector<std::pair<std::string, CycloScalar>> terms;
    CycloScalar cp = v[p] * up_inv;
    terms.emplace_back("", cp);
    for (std::size_t k = 0; k < d; ++k)
      if (k != p) terms.emplace_back(sym[k], v[k] - cp * h.unit[k]);
    return terms;
  };

  std::ostringstream out;
  out << "hopf " << quoted(h.name) << " over Q(zeta" << h.conductor << ")\n";
  for (std::size_t k = 0; k < d; ++k)
    if (k != p) out << "gen " << sym[k] << (h.parity[k] ? " odd\n" : " even\n");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == p || j == p) continue;
      Vec prod(d);
      for (const auto& [k, c] : h.product(i, j)) prod[k] = c;
      out << "rel " << sym[i] << "*" << sym[j] << " = " << lincomb(expand(prod)) << "\n";
    }
  out << "basis ";
  for (std::size_t k = 0; k < d; ++k) out << (k ? ", " : "") << (k == p ? "1" : sym[k]);
  out << "\n";
  for (std::size_t k = 0; k < d; ++k) {
    if (k == p) continue;
    Matrix t = h.comultiply(h.basis(k));
    std::string dl;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        if (t(a, b).is_zero()) continue;
        auto left = expand(h.basis(a)), right = expand(h.basis(b));
        if (!dl.empty()) dl += " + ";
        dl += scalar_text(t(a, b)) + "*(" + lincomb(left) + ") (x) (" + lincomb(right) + ")";
      }
    out << "delta " << sym[k] << " = " << (dl.empty() ? "0 (x) 0" : dl) << "\n";
    out << "counit " << sym[k] << " = " << scalar_text(h.counit[k]) << "\n";
    out << "antipode " << sym[k] << " = " << lincomb(expand(h.antipode.column(k))) << "\n";
  }
  for (std::size_t k = 0; k < d; ++k) {
    std::string value;
    if (k == p) {
      std::vector<std::pair<std::string, CycloScalar>> terms;
      terms.emplace_back("", up_inv);
      for (std::size_t j = 0; j < d; ++j)
        if (j != p) terms.emplace_back(sym[j], -h.unit[j] * up_inv);
      value = lincomb(terms);
    } else {
      value = sym[k];
    }
    out << "label " << "\"" << h.labels[k] << "\" = " << value << "\n";
  }
  return out.str();
}

}  // namespace hopfsuper
