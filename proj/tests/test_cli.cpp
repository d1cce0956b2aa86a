// Unit tests for the bggv command-line interface, driven in process through
// run_cli: exit codes, report shapes in all three formats, operator
// application on serialized elements, determinism of reports, and
// independence of the result from the worker-thread count.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bgg/cli.hpp"
#include "bgg/derham.hpp"
#include "bgg/poly_form.hpp"

using namespace bgg;
using nlohmann::json;

namespace {

struct RunResult {
  int code = 0;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p);
  f << body;
  return p;
}

}  // namespace

TEST_CASE("verify suites succeed with exit code 0 and pass: true") {
  RunResult dr = run({"verify", "derham", "--n", "2", "--rmax", "3"});
  CHECK(dr.code == 0);
  json jd = json::parse(dr.out);
  CHECK(jd["pass"] == true);
  CHECK(jd["command"] == "verify");
  CHECK(jd["config"]["target"] == "derham");
  CHECK(!jd["checks"].empty());
  for (const auto& c : jd["checks"]) {
    CHECK(c["pass"] == true);
    CHECK(c["counterexample"].is_null());
    CHECK(c["cases"].get<int>() > 0);
  }

  RunResult tw = run({"verify", "twisted", "--diagram", "hessian", "--rmax", "1"});
  CHECK(tw.code == 0);
  json jt = json::parse(tw.out);
  CHECK(jt["pass"] == true);
  // Identity strings are part of the report contract.
  bool saw_homotopy = false, saw_degree0 = false;
  for (const auto& c : jt["checks"]) {
    if (c["identity"] == "dV·PV + PV·dV = I") saw_homotopy = true;
    if (c["identity"] == "dV0·PV1·dV0 = dV0") saw_degree0 = true;
  }
  CHECK(saw_homotopy);
  CHECK(saw_degree0);

  RunResult bg = run({"verify", "bgg", "--diagram", "divdiv", "--rmax", "1"});
  CHECK(bg.code == 0);
  json jb = json::parse(bg.out);
  CHECK(jb["pass"] == true);
  bool saw_bgg = false;
  for (const auto& c : jb["checks"])
    if (c["identity"] == "D·P + P·D = I") saw_bgg = true;
  CHECK(saw_bgg);

  RunResult ab = run({"verify", "abstract", "--rmax", "4", "--seed", "11"});
  CHECK(ab.code == 0);
  json ja = json::parse(ab.out);
  CHECK(ja["pass"] == true);
  CHECK(ja["checks"][0]["cases"] == 4);
}

TEST_CASE("polyseq verification reports frozen dimensions through the CLI") {
  RunResult r = run({"verify", "polyseq", "--name", "poly-elast", "--r", "4"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  REQUIRE(j["reports"].size() == 1);
  CHECK(j["reports"][0]["slots"][0]["dim"] == 105);
  CHECK(j["reports"][0]["slots"][0]["cohomology"] == 6);
  CHECK(j["reports"][0]["chi"] == 6);
}

TEST_CASE("dims emits tables in all three formats") {
  RunResult jcsv = run({"dims", "--name", "poly-elast", "--r", "4", "--rmax", "5",
                        "--format", "csv"});
  CHECK(jcsv.code == 0);
  CHECK(jcsv.out.rfind("name,r,slot,dim,rank_out,cohomology,chi\n", 0) == 0);
  CHECK(jcsv.out.find("poly-elast,4,0,105,99,6,6\n") != std::string::npos);
  CHECK(jcsv.out.find("poly-elast,5,0,168,162,6,6\n") != std::string::npos);

  RunResult jh = run({"dims", "--name", "homog-elast", "--r", "0", "--rmax", "5",
                      "--format", "json"});
  CHECK(jh.code == 0);
  json arr = json::parse(jh.out);
  REQUIRE(arr.size() == 6);
  CHECK(arr[0]["degrees"] == json::array({4, 3, 1, 0}));
  CHECK(arr[0]["dims"] == json::array({45, 60, 18, 3}));
  CHECK(arr[1]["dims"] == json::array({63, 90, 36, 9}));

  RunResult jt = run({"dims", "--name", "poly-hess", "--r", "4", "--format", "text"});
  CHECK(jt.code == 0);
  CHECK(jt.out.find("poly-hess") != std::string::npos);
  CHECK(jt.out.find("35") != std::string::npos);
}

TEST_CASE("apply: d twice is the zero form") {
  PolyForm u(2, 0, ValueTag::R);
  u.set_coeff(0, 0, Poly::variable(2, 0) * Poly::variable(2, 1));
  auto p1 = temp_file("bggv_test_u.json", polyform_to_json(u).dump());

  RunResult first = run({"apply", "d", p1.string()});
  CHECK(first.code == 0);
  json jd = json::parse(first.out);
  CHECK(jd["k"] == 1);

  auto p2 = temp_file("bggv_test_du.json", first.out);
  RunResult second = run({"apply", "d", p2.string()});
  CHECK(second.code == 0);
  json jdd = json::parse(second.out);
  CHECK(jdd["k"] == 2);
  CHECK(jdd["terms"].empty());

  // koszul of the first derivative recovers u - u(0) (here u(0) = 0).
  RunResult back = run({"apply", "koszul", p2.string()});
  CHECK(back.code == 0);
  CHECK(polyform_from_json(json::parse(back.out)) == u);

  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST_CASE("apply: proxy operators and slot Poincare operators") {
  // grad of x1*x2 as a scalar field JSON.
  std::string scalar = R"({"kind":"scalar","n":3,"comp":[[
      {"monomial":[1,1,0],"coeff":"1"}]]})";
  auto p = temp_file("bggv_test_s.json", scalar);
  RunResult g = run({"apply", "grad", p.string()});
  CHECK(g.code == 0);
  json jg = json::parse(g.out);
  CHECK(jg["kind"] == "vector");
  CHECK(jg["comp"][0][0]["monomial"] == json::array({0, 1, 0}));

  // P1-elasticity(def w) = w for w = (x2^2, 0, 0) (no rigid part at 0).
  std::string w = R"({"kind":"vector","n":3,"comp":[
      [{"monomial":[0,2,0],"coeff":"1"}],[],[]]})";
  auto pw = temp_file("bggv_test_w.json", w);
  RunResult dw = run({"apply", "def", pw.string()});
  CHECK(dw.code == 0);
  auto pdw = temp_file("bggv_test_dw.json", dw.out);
  RunResult rec = run({"apply", "P1-elasticity", pdw.string()});
  CHECK(rec.code == 0);
  json jr = json::parse(rec.out);
  CHECK(jr == json::parse(w));

  std::filesystem::remove(p);
  std::filesystem::remove(pw);
  std::filesystem::remove(pdw);
}

TEST_CASE("usage and input errors exit with code 2") {
  CHECK(run({"verify", "nonesuch"}).code == 2);
  CHECK(run({"verify", "twisted"}).code == 2);            // missing --diagram
  CHECK(run({"verify", "polyseq"}).code == 2);            // missing --name
  CHECK(run({"frobnicate"}).code == 2);                   // unknown subcommand
  CHECK(run({"apply", "nonesuch", "/dev/null"}).code == 2);
  CHECK(run({"dims", "--name", "nonesuch"}).code == 2);
  CHECK(run({"dims", "--name", "poly-elast", "--r", "5", "--rmax", "4"}).code == 2);
  auto bad = temp_file("bggv_test_bad.json", "this is not json");
  CHECK(run({"apply", "d", bad.string()}).code == 2);
  std::filesystem::remove(bad);
  // Errors are reported on the error stream.
  RunResult r = run({"verify", "twisted"});
  CHECK(r.err.find("diagram") != std::string::npos);
}

TEST_CASE("help exits 0 and prints the subcommands") {
  RunResult h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("verify") != std::string::npos);
  CHECK(h.out.find("apply") != std::string::npos);
  CHECK(h.out.find("dims") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  std::vector<std::string> args = {"verify", "twisted", "--diagram", "divdiv",
                                   "--rmax", "1"};
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  setenv("BGG_NUM_THREADS", "4", 1);
  RunResult c = run(args);
  unsetenv("BGG_NUM_THREADS");
  CHECK(c.code == 0);
  CHECK(c.out == a.out);
}

TEST_CASE("--out writes the report to a file") {
  auto p = std::filesystem::temp_directory_path() / "bggv_test_report.json";
  RunResult r = run({"verify", "abstract", "--rmax", "2", "--out", p.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(p);
  json j;
  f >> j;
  CHECK(j["pass"] == true);
  std::filesystem::remove(p);
}

TEST_CASE("csv report format has the frozen header") {
  RunResult r = run({"verify", "derham", "--n", "1", "--rmax", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("identity,scope,cases,pass,counterexample\n", 0) == 0);
}

TEST_CASE("text report format prints one line per check and a verdict") {
  RunResult r = run({"verify", "derham", "--n", "1", "--rmax", "2", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[ OK ]") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
}
