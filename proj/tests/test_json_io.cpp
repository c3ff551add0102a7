#include "doctest.h"

#include "hopfsuper/error.hpp"
#include "hopfsuper/json_io.hpp"
#include "hopfsuper/presentation.hpp"
#include "hopfsuper/suites.hpp"

using namespace hopfsuper;

TEST_CASE("scalars round trip") {
  for (const CycloScalar& s : {CycloScalar(0), CycloScalar(Rational(-3, 7)), CycloScalar::zeta(8, 3),
                               CycloScalar::sqrt2(), CycloScalar::zeta(24, 5) + CycloScalar(Rational(1, 2))}) {
    CAPTURE(s.to_string());
    CHECK(scalar_from_json(to_json(s)) == s);
  }
  CHECK(scalar_from_json(Json(5)) == CycloScalar(5));
  CHECK(scalar_from_json(Json("2/6")) == CycloScalar(Rational(1, 3)));
}

TEST_CASE("every builtin round trips bit-exactly") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    HopfSuperData h = builtin(name);
    Json j = to_json(h);
    HopfSuperData back = hopf_from_json(Json::parse(dump(j)));
    CHECK(same_structure(back, h));
    CHECK(back.labels == h.labels);
    CHECK(dump(to_json(back)) == dump(j));
  }
}

TEST_CASE("malformed input is an IoError") {
  Json good = to_json(builtin("H4"));
  auto expect_io = [](const Json& j) {
    try {
      hopf_from_json(j);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IoError);
    }
  };
  Json j = good;
  j.erase("comult");
  expect_io(j);
  j = good;
  j["mult"][0][2] = 99;
  expect_io(j);
  j = good;
  j["parity"] = "even";
  expect_io(j);
  j = good;
  j["unit"][0] = "1/0x";
  expect_io(j);
}

TEST_CASE("structurally wrong tables fail certification") {
  Json j = to_json(builtin("H4"));
  j["antipode"][2][2] = 1;  // S(x) picks up an x term
  try {
    hopf_from_json(j);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AxiomFailure);
  }
}

TEST_CASE("fingerprint field order is stable") {
  Json f = to_json(fingerprint(builtin("H8")));
  std::vector<std::string> keys;
  for (const auto& [k, v] : f.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"dim", "dim_odd", "grouplikes", "group_abelian", "group_invariants",
                                         "characters", "antipode", "skew_primitives", "semisimple", "pointed",
                                         "supercommutative", "supercocommutative", "center_dim"});
}

TEST_CASE("suite JSON omits the time unless asked") {
  SuiteResult r = run_suite("dim2");
  CHECK_FALSE(to_json(r).contains("seconds"));
  CHECK(to_json(r, true).contains("seconds"));
  CHECK(r.passed());
}
