#include <array>
#include <functional>
#include <sstream>

#include "hopfsuper/error.hpp"
#include "hopfsuper/presentation.hpp"

namespace hopfsuper {

namespace {

// ---- S3 helpers (permutations of {0,1,2}, product a*b = a after b) ----

using Perm = std::array<int, 3>;

struct S3 {
  std::vector<Perm> elems;
  std::vector<std::string> names;

  S3() {
    Perm e{0, 1, 2}, s1{1, 0, 2}, s2{0, 2, 1};
    elems = {e, s1, s2, mul(s1, s2), mul(s2, s1), mul(mul(s1, s2), s1)};
    names = {"e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"};
  }
  static Perm mul(const Perm& a, const Perm& b) { return {a[b[0]], a[b[1]], a[b[2]]}; }
  std::size_t index(const Perm& p) const {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == p) return i;
    return 0;
  }
  std::size_t prod(std::size_t a, std::size_t b) const { return index(mul(elems[a], elems[b])); }
  std::size_t inv(std::size_t a) const {
    for (std::size_t b = 0; b < 6; ++b)
      if (prod(a, b) == 0) return b;
    return 0;
  }
  std::size_t conj_c(std::size_t a) const { return prod(prod(1, a), 1); }  // c = s1
};

const S3& s3() {
  static const S3 g;
  return g;
}

std::string dual_gen(std::size_t i) { return "d_" + s3().names[i]; }

// delta_sigma as an expression in the dual-basis generators d_* (delta_e = 1 - sum).
std::string dual_expr(std::size_t i) {
  if (i != 0) return dual_gen(i);
  std::string s = "(1";
  for (std::size_t k = 1; k < 6; ++k) s += " - " + dual_gen(k);
  return s + ")";
}

std::string dual_s3_body(bool with_xi) {
  const S3& g = s3();
  std::ostringstream o;
  o << "gen ";
  for (std::size_t k = 1; k < 6; ++k) o << (k > 1 ? ", " : "") << dual_gen(k);
  o << " even\n";
  if (with_xi) o << "gen xi even\n";
  for (std::size_t a = 1; a < 6; ++a)
    for (std::size_t b = 1; b < 6; ++b)
      o << "rel " << dual_gen(a) << "*" << dual_gen(b) << " = " << (a == b ? dual_gen(a) : "0") << "\n";
  if (with_xi) {
    o << "rel xi*xi = 1\n";
    for (std::size_t a = 1; a < 6; ++a) o << "rel xi*" << dual_gen(a) << " = " << dual_expr(g.conj_c(a)) << "*xi\n";
  }
  o << "basis 1";
  for (std::size_t k = 1; k < 6; ++k) o << ", " << dual_gen(k);
  if (with_xi) {
    o << ", xi";
    for (std::size_t k = 1; k < 6; ++k) o << ", " << dual_gen(k) << "*xi";
  }
  o << "\n";
  for (std::size_t s = 1; s < 6; ++s) {
    o << "delta " << dual_gen(s) << " =";
    for (std::size_t t = 0; t < 6; ++t) {
      std::size_t t2 = g.prod(g.inv(t), s);
      o << (t ? " + " : " ") << dual_expr(t) << " (x) " << dual_expr(t2);
    }
    o << "\ncounit " << dual_gen(s) << " = 0\n";
    o << "antipode " << dual_gen(s) << " = " << dual_expr(g.inv(s)) << "\n";
  }
  if (with_xi) o << "delta xi = xi (x) xi\ncounit xi = 1\nantipode xi = xi\n";
  for (std::size_t s = 0; s < 6; ++s) o << "label \"" << g.names[s] << "*\" = " << dual_expr(s) << "\n";
  if (with_xi)
    for (std::size_t s = 0; s < 6; ++s) o << "label \"" << g.names[s] << "*xi\" = " << dual_expr(s) << "*xi\n";
  return o.str();
}

std::string zeta_text(bool plus) { return plus ? "zeta4" : "(-zeta4)"; }

// ---- sources ----

std::string src_kZ2() {
  return R"(hopf kZ2 over Q(zeta8)
gen sigma even
rel sigma*sigma = 1
basis 1, sigma
delta sigma = sigma (x) sigma; counit sigma = 1; antipode sigma = sigma
label e = 1; label sigma = sigma
)";
}

std::string src_kZ4() {
  return R"(hopf kZ4 over Q(zeta8)
gen g even
rel g*g*g*g = 1
basis 1, g, g^2, g^3
delta g = g (x) g; counit g = 1; antipode g = g^3
)";
}

std::string src_kZ2xZ2() {
  return R"(hopf kZ2xZ2 over Q(zeta8)
gen a, b even
rel a*a = 1; rel b*b = 1; rel b*a = a*b
basis 1, a, b, a*b
delta a = a (x) a; counit a = 1; antipode a = a
delta b = b (x) b; counit b = 1; antipode b = b
)";
}

std::string src_kS3() {
  return R"(hopf kS3 over Q(zeta8)
gen s1, s2 even
rel s1*s1 = 1
rel s2*s2 = 1
rel s2*s1*s2 = s1*s2*s1
basis 1, s1, s2, s1*s2, s2*s1, s1*s2*s1
delta s1 = s1 (x) s1; counit s1 = 1; antipode s1 = s1
delta s2 = s2 (x) s2; counit s2 = 1; antipode s2 = s2
label e = 1; label s1 = s1; label s2 = s2
label s1s2 = s1*s2; label s2s1 = s2*s1; label s1s2s1 = s1*s2*s1
)";
}

std::string src_dual_kS3() { return "hopf dual_kS3 over Q(zeta8)\n" + dual_s3_body(false); }

std::string src_a_plus() { return "hopf A_plus over Q(zeta8)\n" + dual_s3_body(true); }

std::string src_lambda(int theta, const std::string& name) {
  std::ostringstream o;
  o << "hopf \"" << name << "\" over Q(zeta8)\n";
  o << "gen ";
  for (int i = 1; i <= theta; ++i) o << (i > 1 ? ", " : "") << "z" << i;
  o << " odd\n";
  for (int i = 1; i <= theta; ++i) o << "rel z" << i << "*z" << i << " = 0\n";
  for (int i = 1; i <= theta; ++i)
    for (int j = i + 1; j <= theta; ++j) o << "rel z" << j << "*z" << i << " = -z" << i << "*z" << j << "\n";
  o << "basis 1";
  for (int mask = 1; mask < (1 << theta); ++mask) {
    o << ", ";
    bool first = true;
    for (int i = 0; i < theta; ++i)
      if (mask >> i & 1) {
        o << (first ? "" : "*") << "z" << i + 1;
        first = false;
      }
  }
  o << "\n";
  for (int i = 1; i <= theta; ++i)
    o << "delta z" << i << " = z" << i << " (x) 1 + 1 (x) z" << i << "; antipode z" << i << " = -z" << i << "\n";
  return o.str();
}

std::string src_h4_sweedler() {
  return R"(hopf H4_sweedler over Q(zeta8)
gen c, x even
rel c*c = 1; rel x*x = 0; rel x*c = -c*x
basis 1, c, x, c*x
delta c = c (x) c; counit c = 1; antipode c = c
delta x = c (x) x + x (x) 1; counit x = 0; antipode x = -c*x
)";
}

std::string src_a_c2() {
  return R"(hopf A_C2 over Q(zeta8)
gen c, x, y even
rel c*c = 1; rel x*x = 0; rel y*y = 0
rel x*c = -c*x; rel y*c = -c*y; rel y*x = -x*y
basis 1, c, x, y, c*x, c*y, x*y, c*x*y
delta c = c (x) c; counit c = 1; antipode c = c
delta x = c (x) x + x (x) 1; counit x = 0; antipode x = -c*x
delta y = c (x) y + y (x) 1; counit y = 0; antipode y = -c*y
)";
}

std::string src_a_c2xc2() {
  return R"(hopf A_C2xC2 over Q(zeta8)
gen c, d, x even
rel c*c = 1; rel d*d = 1; rel d*c = c*d; rel x*x = 0
rel x*c = -c*x; rel x*d = -d*x
basis 1, c, d, c*d, x, c*x, d*x, c*d*x
delta c = c (x) c; counit c = 1; antipode c = c
delta d = d (x) d; counit d = 1; antipode d = d
delta x = c (x) x + x (x) 1; counit x = 0; antipode x = -c*x
)";
}

const char* kH8Core = R"(gen X, Y, Z even
rel X*X = 1; rel Y*Y = 1; rel Y*X = X*Y
rel Z*X = Y*Z; rel Z*Y = X*Z
rel Z*Z = 1/2 (1 + X + Y - X*Y)
)";

const char* kH8Coalgebra = R"(delta X = X (x) X; counit X = 1; antipode X = X
delta Y = Y (x) Y; counit Y = 1; antipode Y = Y
delta Z = 1/2 (Z (x) Z + Z (x) X*Z + Y*Z (x) Z - Y*Z (x) X*Z)
counit Z = 1; antipode Z = Z
)";

std::string src_h8() {
  return std::string("hopf H8 over Q(zeta8)\n") + kH8Core + "basis 1, X, Y, X*Y, Z, X*Z, Y*Z, X*Y*Z\n" +
         kH8Coalgebra;
}

std::string src_h8_star() {
  return R"(hopf H8_star over Q(zeta8)
gen c, s, h even
rel s*s = c*c - 1
rel c*s = 0; rel s*c = 0
rel c*c*c = c
rel h*h = 1; rel h*c = c*h; rel h*s = -s*h
basis 1, c, c^2, s, h, c*h, c^2*h, s*h
delta c = c (x) c - s (x) s; counit c = 1; antipode c = c
delta s = c (x) s + s (x) c; counit s = 0; antipode s = s
delta h = h (x) h + h*s*s (x) h*(1 - c - s)
counit h = 1; antipode h = h*(s*s + s + 1)
)";
}

std::string src_h16(bool plus) {
  std::string z = zeta_text(plus);
  return "hopf \"H16(" + std::string(plus ? "zeta4" : "-zeta4") + ")\" over Q(zeta8)\n" + kH8Core +
         "gen T even\nrel T*T = 0; rel T*X = -X*T; rel T*Y = -Y*T\nrel T*Z = " + z + "*X*Z*T\n" +
         "basis 1, X, Y, X*Y, Z, X*Z, Y*Z, X*Y*Z, T, X*T, Y*T, X*Y*T, Z*T, X*Z*T, Y*Z*T, X*Y*Z*T\n" + kH8Coalgebra +
         "delta T = X (x) T + T (x) 1; counit T = 0; antipode T = -X*T\n";
}

std::string src_h4_1() { return src_lambda(2, "H4_1"); }

std::string src_h4_234(int which) {
  std::ostringstream o;
  o << "hopf H4_" << which << " over Q(zeta8)\n";
  o << "gen g even\ngen z odd\n";
  o << "rel g*g = 1; rel z*z = 0\n";
  o << (which == 4 ? "rel z*g = -g*z\n" : "rel z*g = g*z\n");
  o << "basis 1, g, z, g*z\n";
  o << "delta g = g (x) g; counit g = 1; antipode g = g\n";
  if (which == 3)
    o << "delta z = g (x) z + z (x) 1; antipode z = -g*z\n";
  else
    o << "delta z = z (x) 1 + 1 (x) z; antipode z = -z\n";
  return o.str();
}

std::string src_a4(bool plus) {
  std::string z = zeta_text(plus);
  return "hopf \"A4(" + std::string(plus ? "zeta4" : "-zeta4") +
         ")\" over Q(zeta8)\n"
         "gen x even\ngen z odd\n"
         "rel x*x*x = x\nrel z*z = 1 - x*x\nrel x*z = 0; rel z*x = 0\n"
         "basis 1, x, x^2, z\n"
         "delta x = x (x) x + " +
         z + " z (x) z; counit x = 1; antipode x = x\n" + "delta z = x (x) z + z (x) x; antipode z = -" + z +
         " z\n";
}

std::string src_a6() {
  return R"(hopf A6 over Q(zeta8)
gen x, y even
gen z, w odd
rel x*x = 1/2 + 1/2 x
rel y*y = 1/2 + 1/2 x
rel z*z = 1/2 x - 1/2
rel w*w = 1/2 - 1/2 x
rel y*x = x*y
rel x*z = -1/2 z; rel z*x = -1/2 z
rel x*w = -1/2 w; rel w*x = -1/2 w
rel y*z = -1/2 w; rel z*y = 1/2 w
rel y*w = -1/2 z; rel w*y = 1/2 z
rel z*w = x*y - y; rel w*z = y - x*y
basis 1, x, y, z, w, x*y
delta x = x (x) x - w (x) z; counit x = 1; antipode x = x
delta y = y (x) y - z (x) w; counit y = 1; antipode y = y
delta z = z (x) x + y (x) z; antipode z = -w
delta w = w (x) y + x (x) w; antipode w = z
label e = 1; label c = 2 x*y - y
label x = x; label y = y; label z = z; label w = w
)";
}

std::string src_k8(bool plus, int eps, int eta) {
  std::string z = zeta_text(plus);
  std::ostringstream o;
  o << "hopf \"K8(" << (plus ? "zeta4" : "-zeta4") << "," << eps << "," << eta << ")\" over Q(zeta8)\n";
  o << "gen g, v even\ngen w, t odd\n";
  o << "rel g*g = 1; rel v*g = v; rel g*v = v; rel w*g = -w; rel g*w = -w\n";
  o << "rel v*v = 1/2 (1 + g); rel w*w = 1/2 (1 - g); rel v*w = 0; rel w*v = 0\n";
  o << "rel t*t = 0; rel t*g = g*t\n";
  o << "rel t*v = " << (eps ? "-" : "") << "v*t\n";
  o << "rel t*w = " << (eps ? "" : "-") << "w*t\n";
  o << "basis 1, g, v, w, t, g*t, v*t, w*t\n";
  o << "delta g = g (x) g; counit g = 1; antipode g = g\n";
  o << "delta v = v (x) v - " << z << " w (x) w; counit v = 1; antipode v = v\n";
  o << "delta w = v (x) w + w (x) v; antipode w = " << z << " w\n";
  o << "delta t = " << (eta ? "g" : "1") << " (x) t + t (x) 1; antipode t = -" << (eta ? "g*" : "") << "t\n";
  return o.str();
}

// ---- name parsing ----

struct NameParts {
  std::string base;
  std::vector<std::string> params;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

NameParts split_name(const std::string& raw) {
  std::string s = trim(raw);
  NameParts sp;
  auto lp = s.find('(');
  if (lp == std::string::npos) {
    sp.base = s;
    return sp;
  }
  if (s.back() != ')') throw Error(ErrorKind::BadParams, "malformed builtin name '" + raw + "'");
  sp.base = trim(s.substr(0, lp));
  std::string inner = s.substr(lp + 1, s.size() - lp - 2);
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) sp.params.push_back(trim(item));
  return sp;
}

bool parse_zeta(const std::string& p, const std::string& raw) {
  if (p == "zeta4" || p == "+zeta4" || p == "i" || p == "+i") return true;
  if (p == "-zeta4" || p == "-i") return false;
  throw Error(ErrorKind::BadParams, "zeta parameter must be zeta4 or -zeta4 in '" + raw + "'");
}

int parse_bit(const std::string& p, const std::string& raw) {
  if (p == "0") return 0;
  if (p == "1") return 1;
  throw Error(ErrorKind::BadParams, "expected 0 or 1 in '" + raw + "'");
}

void expect_params(const NameParts& sp, std::size_t n, const std::string& raw) {
  if (sp.params.size() != n)
    throw Error(ErrorKind::BadParams, "'" + sp.base + "' takes " + std::to_string(n) + " parameter(s): '" + raw + "'");
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out = {"kZ2",     "kZ2xZ2",  "kZ4",         "kS3",         "dual_kS3",
                                  "Lambda(1)", "Lambda(2)", "H4_sweedler", "A_C2",       "A_C2xC2",
                                  "H8",      "H8_star", "A_plus",      "H16(zeta4)",  "H16(-zeta4)",
                                  "H4_1",    "H4_2",    "H4_3",        "H4_4",        "A4(zeta4)",
                                  "A4(-zeta4)", "A6"};
  for (const char* z : {"zeta4", "-zeta4"})
    for (int e = 0; e < 2; ++e)
      for (int h = 0; h < 2; ++h)
        out.push_back(std::string("K8(") + z + "," + std::to_string(e) + "," + std::to_string(h) + ")");
  return out;
}

std::string builtin_source(const std::string& raw) {
  NameParts sp = split_name(raw);
  const std::string& b = sp.base;
  auto plain = [&](const std::function<std::string()>& f) {
    expect_params(sp, 0, raw);
    return f();
  };
  if (b == "kZ2") return plain(src_kZ2);
  if (b == "kZ4") return plain(src_kZ4);
  if (b == "kZ2xZ2") return plain(src_kZ2xZ2);
  if (b == "kS3") return plain(src_kS3);
  if (b == "dual_kS3") return plain(src_dual_kS3);
  if (b == "A_plus" || b == "A+") return plain(src_a_plus);
  if (b == "H4_sweedler" || b == "H4") return plain(src_h4_sweedler);
  if (b == "A_C2") return plain(src_a_c2);
  if (b == "A_C2xC2") return plain(src_a_c2xc2);
  if (b == "H8") return plain(src_h8);
  if (b == "H8_star") return plain(src_h8_star);
  if (b == "H4_1") return plain(src_h4_1);
  if (b == "H4_2") return plain([] { return src_h4_234(2); });
  if (b == "H4_3") return plain([] { return src_h4_234(3); });
  if (b == "H4_4") return plain([] { return src_h4_234(4); });
  if (b == "A6") return plain(src_a6);
  if (b.rfind("Lambda", 0) == 0) {
    int theta = 0;
    if (b == "Lambda") {
      expect_params(sp, 1, raw);
      try {
        theta = std::stoi(sp.params[0]);
      } catch (const std::exception&) {
        throw Error(ErrorKind::BadParams, "bad exterior rank in '" + raw + "'");
      }
    } else {
      expect_params(sp, 0, raw);
      std::string rest = b.substr(6);
      if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::UnknownName, "unknown builtin '" + raw + "'");
      theta = std::stoi(rest);
    }
    if (theta < 1 || theta > 5) throw Error(ErrorKind::BadParams, "exterior rank must be 1..5 in '" + raw + "'");
    return src_lambda(theta, "Lambda(" + std::to_string(theta) + ")");
  }
  if (b == "H16") {
    expect_params(sp, 1, raw);
    return src_h16(parse_zeta(sp.params[0], raw));
  }
  if (b == "A4") {
    expect_params(sp, 1, raw);
    return src_a4(parse_zeta(sp.params[0], raw));
  }
  if (b == "K8") {
    expect_params(sp, 3, raw);
    return src_k8(parse_zeta(sp.params[0], raw), parse_bit(sp.params[1], raw), parse_bit(sp.params[2], raw));
  }
  throw Error(ErrorKind::UnknownName, "unknown builtin '" + raw + "'");
}

CompiledPresentation builtin_presentation(const std::string& name) {
  return compile_presentation(parse_presentation(builtin_source(name)));
}

HopfSuperData builtin(const std::string& name) {
  NameParts sp = split_name(name);
  if ((sp.base == "A_plus" || sp.base == "A+") && sp.params.empty()) return a_plus_table();
  return builtin_presentation(name).hopf;
}

HopfSuperData a_plus_table() {
  const S3& g = s3();
  std::vector<std::string> labels;
  for (int i = 0; i < 2; ++i)
    for (std::size_t s = 0; s < 6; ++s) labels.push_back(g.names[s] + (i ? "*xi" : "*"));
  HopfSuperData h = HopfSuperData::zero("A_plus", 8, std::vector<int>(12, 0), labels);
  auto idx = [](std::size_t sigma, int i) { return static_cast<std::size_t>(i) * 6 + sigma; };
  auto conj = [&](std::size_t s, int i) { return i ? g.conj_c(s) : s; };
  for (std::size_t s = 0; s < 6; ++s) h.unit[idx(s, 0)] = CycloScalar(1);
  for (int i = 0; i < 2; ++i)
    for (std::size_t s = 0; s < 6; ++s) {
      for (int j = 0; j < 2; ++j)
        for (std::size_t t = 0; t < 6; ++t)
          if (s == conj(t, i)) h.add_mult(idx(s, i), idx(t, j), idx(s, (i + j) % 2), CycloScalar(1));
      for (std::size_t t = 0; t < 6; ++t) {
        std::size_t t2 = g.prod(g.inv(t), s);
        h.add_comult(idx(s, i), idx(t, i), idx(t2, i), CycloScalar(1));
      }
      h.counit[idx(s, i)] = CycloScalar(s == 0 ? 1 : 0);
      h.antipode(idx(conj(g.inv(s), i), i), idx(s, i)) = CycloScalar(1);
    }
  h.normalize();
  certify(h);
  return h;
}

}  // namespace hopfsuper
