#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hopfsuper/error.hpp"
#include "hopfsuper/json_io.hpp"
#include "hopfsuper/presentation.hpp"
#include "hopfsuper/suites.hpp"
#include "hopfsuper/superdata.hpp"

#ifndef HOPFSUPER_DEFAULT_GOLDEN_DIR
#define HOPFSUPER_DEFAULT_GOLDEN_DIR "golden"
#endif

namespace fs = std::filesystem;
using namespace hopfsuper;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

// file:line:col: kind: message
std::string diagnostic(const std::string& path, const Error& e) {
  std::string where = path;
  if (e.line() > 0) where += ":" + std::to_string(e.line());
  if (e.column() > 0) where += ":" + std::to_string(e.column());
  return where + ": " + e.what();
}

// Input algebra: a .hopf presentation, a .json table or a builtin name.
struct Loaded {
  HopfSuperData h;
  std::optional<CompiledPresentation> pres;
};

Loaded load(const std::string& input, std::uint64_t fuel) {
  fs::path p(input);
  if (p.extension() == ".json") return {hopf_from_json(read_json_file(input)), std::nullopt};
  if (p.extension() == ".hopf") {
    CompiledPresentation c = compile_presentation(parse_presentation(read_text_file(input)), fuel);
    return {c.hopf, c};
  }
  CompiledPresentation c = builtin_presentation(input);
  return {c.hopf, c};
}

// {"automorphisms": [{"name": ..., "images": {"GEN": "expr", ...}} | {"name": ..., "matrix": [[s, ...], ...]}]}
// Generators missing from "images" are fixed.  Matrices are dim x dim, rows indexed by the target basis.
std::vector<Matrix> load_automorphisms(const std::string& path, const Loaded& a) {
  Json j = read_json_file(path);
  if (!j.is_object() || !j.contains("automorphisms") || !j["automorphisms"].is_array())
    throw Error(ErrorKind::IoError, path + ": expected {\"automorphisms\": [...]}");
  std::vector<Matrix> out;
  const std::size_t d = a.h.dim();
  for (const auto& e : j["automorphisms"]) {
    if (e.contains("matrix")) {
      const Json& rows = e["matrix"];
      if (!rows.is_array() || rows.size() != d) throw Error(ErrorKind::IoError, path + ": matrix needs dim rows");
      Matrix m(d, d);
      for (std::size_t r = 0; r < d; ++r) {
        Vec row = vec_from_json(rows[r]);
        if (row.size() != d) throw Error(ErrorKind::IoError, path + ": matrix rows need dim entries");
        for (std::size_t c = 0; c < d; ++c) m(r, c) = row[c];
      }
      out.push_back(m);
    } else if (e.contains("images")) {
      if (!a.pres) throw Error(ErrorKind::IoError, path + ": generator images need a presentation input");
      const CompiledPresentation& c = *a.pres;
      std::vector<Vec> images;
      for (const auto& g : c.presentation.generators) {
        std::string expr = e["images"].contains(g.name) ? e["images"][g.name].get<std::string>() : g.name;
        images.push_back(evaluate(c, expr));
      }
      out.push_back(extend_generator_map(c, a.h, images));
    } else {
      throw Error(ErrorKind::IoError, path + ": each automorphism needs \"images\" or \"matrix\"");
    }
  }
  return out;
}

fs::path golden_dir() {
  if (const char* env = std::getenv("HOPFSUPER_GOLDEN_DIR")) return env;
  return HOPFSUPER_DEFAULT_GOLDEN_DIR;
}

int cmd_convert(const std::string& input, const std::string& output, std::uint64_t fuel) {
  std::string text = read_text_file(input);
  HopfSuperData h;
  try {
    h = compile(text, fuel);
  } catch (const Error& e) {
    std::cerr << diagnostic(input, e) << "\n";
    return kExitError;
  }
  std::string out = dump(to_json(h));
  if (output.empty() || output == "-")
    std::cout << out;
  else
    write_text_file(output, out);
  std::cerr << input << ": " << h.name << ", dim " << h.dim() << " (odd " << h.dim_odd() << ")\n";
  return kExitOk;
}

int cmd_superforms(const std::string& input, const std::string& orbits, bool json, const IsoSearchOptions& opts,
                   std::uint64_t fuel) {
  Loaded a = load(input, fuel);
  std::vector<Matrix> autos;
  if (!orbits.empty()) autos = load_automorphisms(orbits, a);
  SuperformsReport r = superforms(a.h, autos, true, opts);
  std::cout << (json ? dump(to_json(r)) : render_text(r));
  return r.ok() ? kExitOk : kExitError;
}

int cmd_verify(const std::string& input, std::uint64_t fuel) {
  Loaded a = load(input, fuel);
  Report r = verify_axioms(a.h);
  for (const auto& c : r.checks)
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
  return r.ok() ? kExitOk : kExitError;
}

int cmd_classify(const std::vector<std::string>& names, bool json, bool csv, bool update, const SuiteOptions& so) {
  std::vector<std::string> run = names;
  if (run.size() == 1 && run[0] == "all") run = suite_names();
  int status = kExitOk;
  bool first = true;
  for (const auto& name : run) {
    SuiteResult r = run_suite(name, so);
    std::string golden_text = dump(to_json(r));
    fs::path golden = golden_dir() / (name + ".json");
    std::string diff;
    if (update) {
      write_text_file(golden.string(), golden_text);
      diff = "updated";
    } else if (!fs::exists(golden)) {
      diff = "missing";
    } else {
      diff = read_text_file(golden.string()) == golden_text ? "match" : "mismatch";
    }
    if (json) {
      Json j = to_json(r, true);
      j["golden"] = diff;
      std::cout << dump(j);
    } else if (csv) {
      std::string body = render_csv(r);
      std::cout << (first ? body : body.substr(body.find('\n') + 1));
    } else {
      std::cout << render_text(r) << "golden " << golden.string() << ": " << diff << "\n"
                << "time " << r.seconds << " s\n\n";
    }
    first = false;
    if (diff == "mismatch")
      status = kExitMismatch;
    else if ((diff == "missing" || !r.passed()) && status == kExitOk)
      status = kExitError;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf superalgebras over cyclotomic fields: super-forms, bosonization, classification suites"};
  app.require_subcommand(1);
  int conductor = 8;
  std::uint64_t fuel = 100000;
  app.add_option("--conductor", conductor, "field Q(zeta_n) searched for witness scalars")->capture_default_str();
  app.add_option("--fuel", fuel, "candidate budget of the isomorphism search")->capture_default_str();

  std::string input, output, orbits;
  bool json = false, csv = false, update = false;
  std::vector<std::string> suites;

  auto* convert = app.add_subcommand("convert", "compile a .hopf presentation, certify it and write JSON");
  convert->add_option("input", input, ".hopf file")->required();
  convert->add_option("-o,--output", output, "output path (default stdout)");

  auto* sf = app.add_subcommand("superforms", "admissible data, super data and coinvariant superalgebras");
  sf->add_option("input", input, ".hopf file, .json file or builtin name")->required();
  sf->add_option("--orbits", orbits, "JSON file of automorphisms for the orbit partition");
  sf->add_flag("--json", json, "JSON report");

  auto* verify = app.add_subcommand("verify", "check the Hopf superalgebra axioms");
  verify->add_option("input", input, ".hopf file, .json file or builtin name")->required();

  auto* classify = app.add_subcommand("classify", "run classification suites and diff against golden files");
  classify->add_option("--suite", suites, "suite name or 'all'")->required();
  classify->add_flag("--json", json, "JSON output");
  classify->add_flag("--csv", csv, "CSV output");
  classify->add_flag("--update-golden", update, "rewrite the golden files");

  app.add_subcommand("list", "builtin algebras and suite names");

  CLI11_PARSE(app, argc, argv);

  IsoSearchOptions opts;
  opts.fuel = fuel;
  opts.conductor = conductor;
  SuiteOptions so{conductor, fuel};
  try {
    if (*convert) return cmd_convert(input, output, kDefaultRewriteFuel);
    if (*sf) return cmd_superforms(input, orbits, json, opts, kDefaultRewriteFuel);
    if (*verify) return cmd_verify(input, kDefaultRewriteFuel);
    if (*classify) return cmd_classify(suites, json, csv, update, so);
    for (const auto& n : builtin_names()) std::cout << "builtin " << n << "\n";
    for (const auto& n : suite_names()) std::cout << "suite " << n << "\n";
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << (input.empty() ? std::string("hopfsuper") : input) << ": " << e.what() << "\n";
    return kExitError;
  }
}
