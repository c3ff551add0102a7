#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfsuper/analysis.hpp"
#include "hopfsuper/json_io.hpp"
#include "hopfsuper/superdata.hpp"

namespace hopfsuper {

// status is "pass", "fail" or "unverified" (claim attempted, not settled).
struct Verdict {
  std::string name;
  std::string status;
  std::string detail;
};

// ---- super-forms of one purely even Hopf algebra ----

struct Superform {
  SuperDatum datum;
  Coinvariant coinvariant;
  Fingerprint fingerprint;
  Report roundtrip;
  std::string identified;  // builtin name of an isomorphic superalgebra, or empty
};

struct SuperformsReport {
  std::string algebra;
  std::vector<SuperDatum> admissible;
  std::vector<Superform> forms;
  std::vector<std::vector<std::size_t>> orbits;  // indices into forms; empty without automorphisms
  bool ok() const;  // every round trip verified
};

// identify: search the builtin superalgebras for one isomorphic to each coinvariant.
SuperformsReport superforms(const HopfSuperData& a, const std::vector<Matrix>& autos = {}, bool identify = true,
                            const IsoSearchOptions& opts = {});
Json to_json(const SuperformsReport& r);
std::string render_text(const SuperformsReport& r);

// Builtin superalgebra isomorphic to h, found by fingerprint and witness search.
std::string identify_builtin(const HopfSuperData& h, const IsoSearchOptions& opts = {});

// ---- classification suites ----

struct SuiteObject {
  std::string name;
  Fingerprint fingerprint;
  std::vector<Verdict> verdicts;
};

struct SuiteResult {
  std::string suite;
  Json table;  // the classification table the suite reproduces, one row per entry
  std::vector<SuiteObject> objects;
  std::vector<Verdict> verdicts;  // claims across objects
  double seconds = 0;
  bool passed() const;  // no "fail" verdict anywhere
};

struct SuiteOptions {
  int conductor = 8;
  std::uint64_t fuel = 100000;
};

const std::vector<std::string>& suite_names();
// Throws UnknownName for an unknown suite.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

// The golden form omits the wall-clock time.
Json to_json(const SuiteResult& r, bool with_time = false);
std::string render_text(const SuiteResult& r);
std::string render_csv(const SuiteResult& r);

}  // namespace hopfsuper
