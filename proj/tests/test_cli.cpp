#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "hopfsuper/json_io.hpp"

using namespace hopfsuper;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the tool with stderr folded into stdout.
Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + HOPFSUPER_CLI + " " + args + " 2>&1";
  Run r{0, ""};
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& f) { return std::string(HOPFSUPER_SOURCE_DIR) + "/data/" + f; }

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("hopfsuper_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("convert") {
  fs::path dir = scratch("convert");
  SUBCASE("H8 presentation") {
    std::string out = (dir / "h8.json").string();
    Run r = run("convert " + data("presentations/h8.hopf") + " -o " + out);
    CHECK(r.status == 0);
    HopfSuperData h = hopf_from_json(read_json_file(out));
    CHECK(h.dim() == 8);
    CHECK(h.dim_odd() == 0);
  }
  SUBCASE("Lambda(z) to stdout") {
    Run r = run("convert " + data("presentations/lambda1.hopf"));
    CHECK(r.status == 0);
    CHECK(has(r.out, "\"dim\": 2"));
  }
  SUBCASE("missing basis word is a positioned error") {
    Run r = run("convert " + data("presentations/missing_basis.hopf"));
    CHECK(r.status == 1);
    CHECK(has(r.out, "missing_basis.hopf:5"));
    CHECK(has(r.out, "BasisNotClosed"));
  }
  SUBCASE("unreadable file") {
    CHECK(run("convert " + (dir / "absent.hopf").string()).status == 1);
  }
}

TEST_CASE("superforms") {
  SUBCASE("H4 has one super-form, the exterior algebra") {
    Run r = run("superforms H4");
    CHECK(r.status == 0);
    CHECK(has(r.out, "super-forms: 1"));
    CHECK(has(r.out, "~ Lambda(1)"));
  }
  SUBCASE("A_C2xC2") {
    Run r = run("superforms A_C2xC2");
    CHECK(r.status == 0);
    CHECK(has(r.out, "admissible data: 6"));
    CHECK(has(r.out, "super-forms: 3"));
    for (const char* n : {"~ H4_2", "~ H4_3", "~ H4_4"}) CHECK(has(r.out, n));
  }
  SUBCASE("kS3 has none") {
    Run r = run("superforms kS3");
    CHECK(r.status == 0);
    CHECK(has(r.out, "super-forms: 0"));
  }
  SUBCASE("H8 orbits from generator images") {
    Run r = run("superforms H8 --orbits " + data("orbits/h8.json"));
    CHECK(r.status == 0);
    CHECK(has(r.out, "orbits: 2"));
  }
  SUBCASE("JSON report of a converted file") {
    fs::path dir = scratch("superforms");
    std::string out = (dir / "h8.json").string();
    REQUIRE(run("convert " + data("presentations/h8.hopf") + " -o " + out).status == 0);
    Run r = run("superforms --json " + out);
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["admissible"].size() == 4);
    CHECK(j["ok"] == true);
  }
  SUBCASE("superalgebra input is rejected") {
    Run r = run("superforms H4_2");
    CHECK(r.status == 1);
    CHECK(has(r.out, "BadParams"));
  }
  SUBCASE("generator images need a presentation") {
    fs::path dir = scratch("orbits");
    std::string out = (dir / "h8.json").string();
    REQUIRE(run("convert " + data("presentations/h8.hopf") + " -o " + out).status == 0);
    CHECK(run("superforms " + out + " --orbits " + data("orbits/h8.json")).status == 1);
  }
}

TEST_CASE("classify exit codes and golden files") {
  fs::path dir = scratch("golden");
  std::string env = "HOPFSUPER_GOLDEN_DIR=" + dir.string();
  fs::copy_file(std::string(HOPFSUPER_SOURCE_DIR) + "/golden/dim2.json", dir / "dim2.json");

  Run ok = run("classify --suite dim2", env);
  CHECK(ok.status == 0);
  CHECK(has(ok.out, "match"));

  Run csv = run("classify --suite dim2 --csv", env);
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("suite,object,claim,status,detail\n", 0) == 0);

  Run js = run("classify --suite dim2 --json", env);
  CHECK(js.status == 0);
  Json j = Json::parse(js.out);
  CHECK(j["golden"] == "match");
  CHECK(j["passed"] == true);
  CHECK(j["table"][0]["class"] == "Lambda(z)");

  std::string text = read_text_file((dir / "dim2.json").string());
  text.replace(text.find("Lambda(z)"), 9, "Lambda(w)");
  write_text_file((dir / "dim2.json").string(), text);
  CHECK(run("classify --suite dim2", env).status == 2);

  fs::remove(dir / "dim2.json");
  CHECK(run("classify --suite dim2", env).status == 1);
  CHECK(run("classify --suite dim99", env).status == 1);
}

TEST_CASE("classify output is byte-identical across runs") {
  fs::path dir = scratch("determinism");
  std::string env = "HOPFSUPER_GOLDEN_DIR=" + dir.string();
  REQUIRE(run("classify --suite dim4pointed --update-golden", env).status == 0);
  std::string first = read_text_file((dir / "dim4pointed.json").string());
  REQUIRE(run("classify --suite dim4pointed --update-golden", env).status == 0);
  CHECK(read_text_file((dir / "dim4pointed.json").string()) == first);
  CHECK(run("classify --suite dim4pointed", env).status == 0);
}
