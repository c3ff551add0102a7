#pragma once

#include <json.hpp>

#include <string>

#include "hopfsuper/analysis.hpp"
#include "hopfsuper/hopf.hpp"
#include "hopfsuper/superdata.hpp"

namespace hopfsuper {

// Insertion-ordered so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

// {"conductor": n, "coeffs": ["p/q", ...]}, coefficients in the power basis.
Json to_json(const CycloScalar& s);
CycloScalar scalar_from_json(const Json& j);

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);

// {"name", "conductor", "dim", "parity", "labels", "unit", "counit",
//  "mult": [[i, j, k, c]], "comult": [[i, j, k, c]], "antipode": [[row...]]}
Json to_json(const HopfSuperData& h);
// Validates shape and indices (IoError), then certifies the axioms.
HopfSuperData hopf_from_json(const Json& j, bool check = true);

Json to_json(const SuperDatum& d);
Json to_json(const Report& r);
Json to_json(const AntipodeSpectrum& s);
Json to_json(const Fingerprint& f);

std::string dump(const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace hopfsuper
