#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "braidsplice/golden.hpp"
#include "doctest.h"

using namespace bsp;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run cli(const std::string& args) {
  std::string cmd = std::string(BSP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / "braidsplice_cli_test";
  fs::create_directories(d);
  return d;
}

std::string write(const std::string& name, const std::string& text) {
  fs::path f = scratch() / name;
  std::ofstream(f) << text;
  return f.string();
}

}  // namespace

TEST_CASE("demazure and richardson examples") {
  Run d = cli("demazure --k 4 --word \"2 1 3 2 2 3 1 2 2\"");
  CHECK(d.code == 0);
  CHECK(d.json()["delta"] == Json::parse("[4,3,2,1]"));

  Run r = cli("richardson --k 4 --v s2 --w \"3 2 1 2 3\"");
  CHECK(r.code == 0);
  CHECK(r.json()["s"] == 2);
  CHECK(r.json()["f"] == 4);
  CHECK(r.json()["incomplete"] == false);
}

TEST_CASE("incomplete factorizations exit with 3") {
  std::string args = "richardson --k 6 --v \"5 4 2 1 3 6\" --w \"6 5 3 2 4 1\"";
  Run r = cli(args);
  CHECK(r.code == 3);
  CHECK(r.json()["incomplete"] == true);
  CHECK(r.json()["f"].is_null());
  CHECK(r.out.find("INCOMPLETE") != std::string::npos);
  // the two factors as hints complete it
  std::string pool = write("pool.txt", "# hints\nz1*z6 - z2\nz10*z12 - z11\n");
  Run h = cli(args + " --pool " + pool);
  CHECK(h.code == 0);
  CHECK(h.json()["incomplete"] == false);
}

TEST_CASE("golden suite") {
  Run g = cli("golden");
  CHECK(g.code == 0);
  CHECK(g.json()["all_pass"] == true);
  CHECK(g.json()["checks"].size() == 8);
}

TEST_CASE("golden checks notice a corrupted fixture") {
  fs::path dir = scratch() / "fixtures";
  fs::create_directories(dir);
  for (auto& f : fs::directory_iterator(BSP_FIXTURE_DIR))
    fs::copy_file(f.path(), dir / f.path().filename(), fs::copy_options::overwrite_existing);
  Json fx = load_fixture("richardson_example.json", dir.string());
  fx["s"] = 3;
  std::ofstream(dir / "richardson_example.json") << fx.dump(2);
  Json cm = load_fixture("computing_m.json", dir.string());
  cm["units"] = {1, 3};
  std::ofstream(dir / "computing_m.json") << cm.dump(2);
  int failed = 0;
  for (auto& r : run_golden(dir.string())) failed += !r.ok();
  CHECK(failed == 2);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(cli("").code == 2);
  CHECK(cli("nonsense").code == 2);
  CHECK(cli("demazure --word \"1 2\"").code == 2);
  CHECK(cli("demazure --k 3 --word \"1 5\"").code == 2);
  CHECK(cli("verify bogus --k 2 --word 1").code == 2);
  std::string broken = write("broken.json", "{\"quiver\": {\"n\": 2, \"arrows\": [[1, 3]]}}");
  CHECK(cli("mutate --json-in " + broken + " --vertex 1").code == 2);
  std::string bad = write("bad.json", "{\"quiver\": {\"n\": 2, \"arrows\": [[1, 2]]");
  CHECK(cli("mutate --json-in " + bad + " --vertex 1").code == 2);
}

TEST_CASE("seeds and mutation") {
  Run s = cli("dbs-seed --k 2 --word \"1 1\"");
  CHECK(s.code == 0);
  Json j = s.json();
  CHECK(j["quiver"]["frozen"] == Json::parse("[2]"));
  CHECK(j["quiver"]["arrows"] == Json::parse("[[1,2,1]]"));
  CHECK(j["variables"] == Json::parse(R"(["z1", "z1*z2 - 1"])"));

  std::string seed = write("seed.json", R"({"quiver": {"n": 2, "frozen": [1], "arrows": [[1, 2]]}, "variables": ["a", "b"]})");
  Run m = cli("mutate --json-in " + seed + " --vertex 2");
  CHECK(m.code == 0);
  CHECK(RationalFunction::parse(m.json()["variables"][1].get<std::string>()) == RationalFunction::parse("(a + 1)/b"));
  CHECK(cli("mutate --json-in " + seed + " --vertex 1").code == 2);  // frozen

  std::string dot = (scratch() / "q.dot").string();
  CHECK(cli("dbs-seed --k 3 --word \"1 2 1 1\" --dot " + dot).code == 0);
  std::ifstream in(dot);
  std::string first;
  std::getline(in, first);
  CHECK(first == "digraph quiver {");
}

TEST_CASE("braid matrix and splice reports") {
  Run b = cli("braid-matrix --k 2 --word 1");
  CHECK(b.json()["matrix"] == Json::parse(R"([["z1", "-1"], ["1", "0"]])"));
  Run s = cli("splice --k 2 --word \"1 1\" --r1 1");
  CHECK(s.code == 0);
  CHECK(RationalFunction::parse(s.json()["zprime"][0].get<std::string>()) == RationalFunction::parse("z1^2*z2 - z1"));
  Run w = cli("splice --k 3 --word \"1 2 1 1 2 1 2 1\" --r1 4 --w \"2 1 3\" --samples 5");
  CHECK(w.code == 0);
  CHECK(w.json()["round_trips"]["failures"].empty());
}

TEST_CASE("verify subcommands and determinism") {
  const char* intro = "--k 4 --word \"3 3 2 2 1 3 2 1 1 3 2 1 2 3 2 1\" --r1 9";
  for (const char* c : {"transport", "exchange-ratios"}) {
    Run r = cli(std::string("verify ") + c + " " + intro);
    CHECK(r.code == 0);
    CHECK(r.json()["check"].is_string());
  }
  Run a = cli("verify compat-diagrams --k 3 --word \"1 2 2 1 2\" --r1 2 --samples 5 --seed 4");
  Run b = cli("verify compat-diagrams --k 3 --word \"1 2 2 1 2\" --r1 2 --samples 5 --seed 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.json()["seed"] == 4);
  for (const char* c : {"slide", "cauchy-binet"}) {
    Run r = cli(std::string("verify ") + c + " --samples 10 --seed 2");
    CHECK(r.code == 0);
    CHECK(r.json()["instances"] == 10);
  }
}

TEST_CASE("witness search from files") {
  std::string src = write("src.json", R"({"n": 3, "frozen": [2, 3], "arrows": [[2, 1]]})");
  std::string tgt = write("tgt.json", R"({"n": 3, "frozen": [2, 3], "arrows": [[2, 1], [1, 3]]})");
  Run w = cli("witness " + src + " " + tgt);
  CHECK(w.code == 0);
  Json j = w.json();
  CHECK(j["found"] == true);
  CHECK(j["verified"] == true);
  CHECK(j["witness"]["det_Q"] == "1");
  CHECK(j["variable_map"]["3"] == "x3");

  std::string a = write("a.json", R"({"row_labels": [1, 2], "matrix": [[0], [1]]})");
  std::string b = write("b.json", R"({"row_labels": [1, 2], "matrix": [[0], [2]]})");
  Run none = cli("witness " + a + " " + b + " --depth 0");
  CHECK(none.code == 1);
  CHECK(none.json()["found"] == false);
  CHECK(cli("witness " + a + " " + src).code == 2);  // shapes differ
}
