#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "toriq/cli.hpp"
#include "toriq/contraction.hpp"
#include "toriq/examples.hpp"
#include "toriq/io.hpp"
#include "toriq/reproduce.hpp"

using namespace toriq;
using io::Json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "toriq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TORIQ_DATA_DIR) + "/" + name; }

// Writes text to a fresh file in the temp directory.
std::string tmp_file(const std::string& name, const std::string& text) {
  const auto dir = fs::temp_directory_path() / "toriq_cli_test";
  fs::create_directories(dir);
  const auto p = (dir / name).string();
  std::ofstream(p) << text;
  return p;
}

Quasimap read_quasimap(const std::string& text) { return io::quasimap_from_json(Json::parse(text)); }

}  // namespace

TEST_CASE("basepoint-degree on the blow-up") {
  const auto r = run({"basepoint-degree", "--fan", data("bl0p2.json"), "--orders", "1,0,inf,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("beta_x = (1,0,0,1)") != std::string::npos);
  const auto j = run({"--json", "basepoint-degree", "--fan", "Bl0P2", "--orders", "1,0,inf,1"});
  const auto parsed = Json::parse(j.out);
  CHECK(parsed["beta"]["pairings"] == Json::array({1, 0, 0, 1}));
  CHECK(parsed["orders"] == Json::parse(R"([1,0,"inf",1])"));
  CHECK(parsed["length"] == 1);
}

TEST_CASE("fan info on P2") {
  const auto r = run({"fan", "info", data("p2.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("Picard rank: 1") != std::string::npos);
  CHECK(r.out.find("Mori generators (pairings): (1,1,1)\n") != std::string::npos);
  CHECK(r.out.find("Fano: true") != std::string::npos);
  const auto j = Json::parse(run({"--json", "fan", "info", "F3"}).out);
  CHECK(j["fano"] == false);
  CHECK(j.contains("relaxed_surjectivity_condition"));
}

TEST_CASE("fan validate reports violations with status 1") {
  CHECK(run({"fan", "validate", data("bl0p2.json")}).code == 0);
  const auto bad = run({"fan", "validate", data("bad_fan.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("invalid") == 0);
  CHECK(run({"fan", "info", data("bad_fan.json")}).code == 1);
}

TEST_CASE("Segre fibre has two preimages") {
  const auto r = run({"embed", "fibre", data("segre.json"), data("segre_image.json"), "--class", "2,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 preimages") == 0);
  const auto j = Json::parse(run({"--json", "embed", "fibre", "segre", data("segre_image.json"), "--class", "2,2"}).out);
  REQUIRE(j["count"] == 2);
  bool has1 = false, has2 = false;
  for (const auto& q : j["quasimaps"]) {
    const auto f = io::quasimap_from_json(q);
    has1 = has1 || equal_quasimaps(f, examples::segre_q1());
    has2 = has2 || equal_quasimaps(f, examples::segre_q2());
  }
  CHECK((has1 && has2));
}

TEST_CASE("ibar output feeds back into analysis and fibre") {
  const auto img = run({"embed", "ibar", data("segre.json"), data("segre_q2.json")});
  REQUIRE(img.code == 0);
  const auto path = tmp_file("image.json", img.out);
  CHECK(equal_quasimaps(read_quasimap(img.out), io::quasimap_from_json(io::read_json_file(data("segre_image.json")))));
  CHECK(run({"quasimap", "analyze", path}).code == 0);
  CHECK(run({"embed", "fibre", data("segre.json"), path, "--class", "2,2,2,2"}).out.find("2 preimages") == 0);
}

TEST_CASE("embed build output passes embed check") {
  const auto b = run({"embed", "build", "Bl0P2"});
  REQUIRE(b.code == 0);
  const auto path = tmp_file("built.json", b.out);
  const auto c = run({"--json", "embed", "check", path});
  CHECK(c.code == 0);
  const auto j = Json::parse(c.out);
  CHECK(j["valid"] == true);
  CHECK(j["epic"] == true);
  CHECK(Json::parse(run({"--json", "embed", "check", "segre"}).out)["epic"] == false);
  const auto push = Json::parse(run({"--json", "embed", "push", path, "--class", "1,1,1,0"}).out);
  CHECK(push["pushforward"]["pairings"].size() == 5);
}

TEST_CASE("contract check follows the family parameter") {
  for (int t = 0; t <= 5; ++t) {
    const auto r = run({"contract", "check", data("family_t" + std::to_string(t) + ".json")});
    CHECK(r.code == (t == 0 ? 0 : 1));
  }
  const auto a = run({"contract", "apply", data("family_t0.json")});
  REQUIRE(a.code == 0);
  CHECK(equal_quasimaps(read_quasimap(a.out), examples::family_contracted()));
  const auto bad = run({"contract", "apply", data("family_t1.json")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("error:") == 0);
}

TEST_CASE("witness, graft and contract compose") {
  const auto w = run({"witness", data("p2_line.json")});
  REQUIRE(w.code == 0);
  const auto path = tmp_file("witness.json", w.out);
  const auto back = run({"contract", "apply", path});
  REQUIRE(back.code == 0);
  const auto q = io::quasimap_from_json(io::read_json_file(data("p2_line.json")));
  CHECK(equal_quasimaps(read_quasimap(back.out), q));

  const auto g = run({"graft", data("p2_line.json"), "--place", "inf"});
  REQUIRE(g.code == 0);
  const auto grafted = read_quasimap(g.out);
  CHECK(grafted.components.size() == 2);
  CHECK(equal_quasimaps(contract(grafted), q));

  const auto tail = tmp_file("tail.json", R"({"sections":[{"degree":1,"coeffs":["0","1"]},)"
                                          R"({"degree":1,"coeffs":["0","1"]},{"degree":1,"coeffs":["1","1"]}],)"
                                          R"("attach":"inf"})");
  const auto g2 = run({"graft", data("p2_line.json"), "--place", "[0:1]", "--tail", tail});
  CHECK(g2.code == 1);
  CHECK(run({"graft", data("p2_line.json"), "--place", "[1:0]"}).code == 1);
}

TEST_CASE("class subcommands") {
  const auto f = run({"class", "factor", "Bl0P2", "--class", "1,1,1,0"});
  CHECK(f.code == 0);
  CHECK(f.out.find("(0,1,1,-1) + (1,0,0,1)") != std::string::npos);
  CHECK(run({"class", "factor", "Bl0P2", "--class", "1,0,0,1"}).out.find("irreducible") != std::string::npos);
  CHECK(run({"class", "length", "P1xP1", "--class", "1,0"}).out.find("length 2") != std::string::npos);
  CHECK(run({"class", "push", "segre", "--class", "1,0"}).out.find("= (1,1,1,1)") != std::string::npos);
  CHECK(run({"class", "factor", "Bl0P2", "--class", "0,-1,-1,1"}).code == 1);
}

TEST_CASE("TORIQ_MAX_LENGTH caps enumeration") {
  ::setenv("TORIQ_MAX_LENGTH", "3", 1);
  CHECK(run({"class", "factor", "P2", "--class", "4,4,4"}).code == 1);
  CHECK(run({"class", "factor", "P2", "--class", "1,1,1"}).code == 0);
  ::setenv("TORIQ_MAX_LENGTH", "many", 1);
  CHECK(run({"class", "factor", "P2", "--class", "1,1,1"}).code == 2);
  ::unsetenv("TORIQ_MAX_LENGTH");
  CHECK(run({"class", "factor", "P2", "--class", "3,3,3"}).code == 0);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"fan", "info"}).code == 2);
  CHECK(run({"fan", "info", "missing.json"}).code == 2);
  CHECK(run({"basepoint-degree", "--fan", "Bl0P2", "--orders", "1,2"}).code == 2);
  CHECK(run({"basepoint-degree", "--fan", "Bl0P2", "--orders", "1,-2,0,0"}).code == 2);
  CHECK(run({"quasimap", "analyze", tmp_file("broken.json", "{not json")}).code == 2);
  CHECK(run({"reproduce", "nope"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("quasimap analyze flags invalid and reports stability") {
  const auto r = run({"--json", "quasimap", "analyze", data("family_contracted.json")});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["degree_decomposition_holds"] == true);
  CHECK(j["quasimap_stable"] == true);
  CHECK(j["basepoints"].size() == 1);
  auto bad = io::to_json(examples::segre_q1());
  bad["markings"] = Json::array({Json{{"component", 3}, {"point", "0"}}});
  CHECK(run({"quasimap", "analyze", tmp_file("badq.json", bad.dump())}).code == 1);
}

TEST_CASE("reproduce cases") {
  for (const auto& id : reproduce_cases()) {
    const auto r = run({"reproduce", id});
    const auto checks = reproduce(id);
    int failed = 0;
    for (const auto& c : checks) failed += !c.pass;
    CHECK(r.code == (failed ? 1 : 0));
    if (id == "table1") {
      // The printed witness set of row 5 omits a cone; see README.
      CHECK(failed == 1);
      CHECK(!checks[4].pass);
      CHECK(checks[4].computed.substr(0, 14) == checks[4].expected.substr(0, 14));
    } else {
      CHECK_MESSAGE(failed == 0, id);
    }
  }
}
