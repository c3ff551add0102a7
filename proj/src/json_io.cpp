#include "hopfsuper/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hopfsuper/error.hpp"

namespace hopfsuper {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::IoError, msg); }

void require(bool ok, const std::string& msg) {
  if (!ok) bad(msg);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  require(j.is_string(), "rational must be a string or integer");
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0) bad("bad rational '" + j.get<std::string>() + "'");
  q.canonicalize();
  return q;
}

std::size_t index_from_json(const Json& j, std::size_t dim, const char* what) {
  require(j.is_number_unsigned() || (j.is_number_integer() && j.get<long>() >= 0),
          std::string(what) + " index must be a nonnegative integer");
  auto i = j.get<std::size_t>();
  require(i < dim, std::string(what) + " index out of range");
  return i;
}

// Scalars inside one algebra are written at the algebra's conductor.
Json at(const CycloScalar& s, int n) {
  return to_json(n % s.conductor() == 0 ? s.embed(n) : s);
}

Json vec_at(const Vec& v, int n) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(at(s, n));
  return a;
}

}  // namespace

Json to_json(const CycloScalar& s) {
  Json c = Json::array();
  for (const auto& q : s.coeffs()) c.push_back(q.get_str());
  Json j;
  j["conductor"] = s.conductor();
  j["coeffs"] = c;
  return j;
}

CycloScalar scalar_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return CycloScalar(rational_from_json(j));
  require(j.is_object() && j.contains("conductor") && j.contains("coeffs"),
          "scalar must be {\"conductor\", \"coeffs\"}");
  require(j["conductor"].is_number_integer() && j["conductor"].get<int>() > 0, "conductor must be positive");
  int n = j["conductor"].get<int>();
  require(j["coeffs"].is_array(), "coeffs must be an array");
  std::vector<Rational> c;
  for (const auto& q : j["coeffs"]) c.push_back(rational_from_json(q));
  return CycloScalar::from_poly(n, c);
}

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(to_json(s));
  return a;
}

Vec vec_from_json(const Json& j) {
  require(j.is_array(), "vector must be an array");
  Vec v;
  for (const auto& s : j) v.push_back(scalar_from_json(s));
  return v;
}

Json to_json(const HopfSuperData& h) {
  const int n = h.conductor;
  const std::size_t d = h.dim();
  Json j;
  j["name"] = h.name;
  j["conductor"] = n;
  j["dim"] = d;
  j["parity"] = h.parity;
  j["labels"] = h.labels;
  j["unit"] = vec_at(h.unit, n);
  j["counit"] = vec_at(h.counit, n);
  Json mult = Json::array();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& [k, c] : h.product(a, b)) mult.push_back(Json::array({a, b, k, at(c, n)}));
  j["mult"] = mult;
  Json comult = Json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& t : h.comult[i]) comult.push_back(Json::array({i, t.left, t.right, at(t.coeff, n)}));
  j["comult"] = comult;
  Json s = Json::array();
  for (std::size_t r = 0; r < d; ++r) s.push_back(vec_at(h.antipode.row(r), n));
  j["antipode"] = s;
  return j;
}

namespace {

HopfSuperData hopf_from_json_impl(const Json& j, bool check) {
  require(j.is_object(), "algebra must be a JSON object");
  for (const char* key : {"name", "conductor", "dim", "parity", "labels", "unit", "counit", "mult", "comult",
                          "antipode"})
    require(j.contains(key), std::string("missing field '") + key + "'");
  require(j["dim"].is_number_unsigned(), "dim must be a nonnegative integer");
  const auto d = j["dim"].get<std::size_t>();
  require(j["conductor"].is_number_integer() && j["conductor"].get<int>() > 0, "conductor must be positive");
  auto parity = j["parity"].get<std::vector<int>>();
  auto labels = j["labels"].get<std::vector<std::string>>();
  require(parity.size() == d && labels.size() == d, "parity and labels must have dim entries");
  for (int p : parity) require(p == 0 || p == 1, "parity entries must be 0 or 1");

  HopfSuperData h = HopfSuperData::zero(j["name"].get<std::string>(), j["conductor"].get<int>(), parity, labels);
  h.unit = vec_from_json(j["unit"]);
  h.counit = vec_from_json(j["counit"]);
  require(h.unit.size() == d && h.counit.size() == d, "unit and counit must have dim entries");
  for (const char* key : {"mult", "comult"}) {
    require(j[key].is_array(), std::string(key) + " must be an array");
    for (const auto& e : j[key]) {
      require(e.is_array() && e.size() == 4, std::string(key) + " entries are [i, j, k, scalar]");
      std::size_t a = index_from_json(e[0], d, key), b = index_from_json(e[1], d, key),
                  c = index_from_json(e[2], d, key);
      CycloScalar s = scalar_from_json(e[3]);
      if (std::string(key) == "mult")
        h.add_mult(a, b, c, s);
      else
        h.add_comult(a, b, c, s);
    }
  }
  require(j["antipode"].is_array() && j["antipode"].size() == d, "antipode must have dim rows");
  for (std::size_t r = 0; r < d; ++r) {
    Vec row = vec_from_json(j["antipode"][r]);
    require(row.size() == d, "antipode rows must have dim entries");
    for (std::size_t c = 0; c < d; ++c) h.antipode(r, c) = row[c];
  }
  h.normalize();
  if (check) certify(h);
  return h;
}

}  // namespace

HopfSuperData hopf_from_json(const Json& j, bool check) {
  try {
    return hopf_from_json_impl(j, check);
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

Json to_json(const SuperDatum& d) {
  Json cert;
  cert["ord_g_2"] = d.cert.ord_g_2;
  cert["ord_alpha_2"] = d.cert.ord_alpha_2;
  cert["alpha_of_g"] = d.cert.alpha_of_g;
  cert["conjugation_identity"] = d.cert.conjugation_identity;
  cert["g_noncentral"] = d.cert.g_noncentral;
  if (!d.cert.conjugation_failure.empty()) cert["conjugation_failure"] = d.cert.conjugation_failure;
  Json j;
  j["g_label"] = d.g_label;
  j["alpha_label"] = d.alpha_label;
  j["g"] = to_json(d.g);
  j["alpha"] = to_json(d.alpha);
  j["certificates"] = cert;
  return j;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  Json j;
  j["ok"] = r.ok();
  j["checks"] = checks;
  return j;
}

Json to_json(const AntipodeSpectrum& s) {
  Json ev = Json::array();
  for (const auto& [x, m] : s.eigenvalues) ev.push_back(Json::array({x.to_string(), m}));
  Json j;
  j["eigenvalues"] = ev;
  j["unsplit_degree"] = s.unsplit_degree;
  j["order"] = s.order;
  return j;
}

Json to_json(const Fingerprint& f) {
  Json skew = Json::array();
  for (const auto& [e, o] : f.skew_primitives) skew.push_back(Json::array({e, o}));
  Json j;
  j["dim"] = f.dim;
  j["dim_odd"] = f.dim_odd;
  j["grouplikes"] = f.grouplikes;
  j["group_abelian"] = f.group_abelian;
  j["group_invariants"] = f.group_invariants;
  j["characters"] = f.characters;
  j["antipode"] = to_json(f.antipode);
  j["skew_primitives"] = skew;
  j["semisimple"] = f.semisimple;
  j["pointed"] = f.pointed;
  j["supercommutative"] = f.supercommutative;
  j["supercocommutative"] = f.supercocommutative;
  j["center_dim"] = f.center_dim;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write '" + path + "'");
  out << text;
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace hopfsuper
