#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "hicomm/cli.hpp"
#include "json.hpp"

using namespace hicomm;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> argv) {
  std::ostringstream out, err;
  int code = run_command(argv, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("con lists the canonical lattice of sym3") {
  Run r = run({"con", "zoo:sym3"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["algebra"]["size"] == 6);
  CHECK(j["results"]["count"] == 3);
  CHECK(j["results"]["congruences"][0]["num_blocks"] == 6);
  CHECK(j["results"]["congruences"][1]["blocks"] ==
        json::array({{0, 3, 4}, {1, 2, 5}}));  // A3 cosets
  CHECK(j["results"]["congruences"][2]["num_blocks"] == 1);
}

TEST_CASE("delta on Z2 lists the even-weight tuples") {
  Run r = run({"delta", "zoo:cyclic(2)", "--congs", "1,1"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["results"]["size"] == 8);
  for (const auto& t : j["results"]["tuples"]) {
    int w = 0;
    for (int v : t) w += v;
    CHECK(w % 2 == 0);
  }
}

TEST_CASE("commutator --method both agrees on sym3") {
  Run r = run({"commutator", "zoo:sym3", "--congs", "2,2", "--method", "both"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["results"]["agree"] == true);
  CHECK(j["results"]["forks"]["num_blocks"] == 2);
  CHECK(j["results"]["forks"] == j["results"]["termcond"]);
}

TEST_CASE("congruences can be given as explicit blocks") {
  Run idx = run({"commutator", "zoo:cyclic(4)", "--congs", "2,2", "--method", "forks"});
  Run blk = run({"commutator", "zoo:cyclic(4)", "--congs-blocks", "0,1,2,3;0,1,2,3",
                 "--method", "forks"});
  REQUIRE(idx.code == 0);
  REQUIRE(blk.code == 0);
  CHECK(json::parse(idx.out)["results"]["commutator"] ==
        json::parse(blk.out)["results"]["commutator"]);
}

TEST_CASE("supernilpotence degrees through the CLI") {
  Run d4 = run({"supernilpotence", "zoo:dihedral4", "--kmax", "3"});
  REQUIRE(d4.code == 0);
  CHECK(json::parse(d4.out)["results"]["degree"] == 2);
  Run s3 = run({"supernilpotence", "zoo:sym3", "--kmax", "3"});
  REQUIRE(s3.code == 0);
  CHECK(json::parse(s3.out)["results"]["degree"].is_null());
}

TEST_CASE("malcev and cube-term commands") {
  Run m = run({"malcev", "zoo:klein4"});
  REQUIRE(m.code == 0);
  CHECK(json::parse(m.out)["results"]["verified"] == true);
  Run none = run({"malcev", "zoo:semilattice3"});
  REQUIRE(none.code == 0);
  CHECK(json::parse(none.out)["results"]["term"].is_null());
  Run c = run({"cube-term", "zoo:cyclic(3)", "--n", "3"});
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out)["results"]["verified"] == true);
}

TEST_CASE("hc-verify passes on cyclic(4) and downgrades for semilattice3") {
  Run z4 = run({"hc-verify", "zoo:cyclic(4)", "--n", "2"});
  REQUIRE(z4.code == 0);
  json j = json::parse(z4.out);
  CHECK(j["results"]["all_pass"] == true);
  CHECK(j["results"]["laws"].size() == 8);

  Run sl = run({"hc-verify", "zoo:semilattice3", "--n", "2"});
  REQUIRE(sl.code == 0);
  json js = json::parse(sl.out);
  CHECK(js["results"]["malcev_laws_included"] == false);
  CHECK(js["results"]["laws"].size() == 3);
  CHECK(js["results"]["all_pass"] == true);
}

TEST_CASE("pol-delta counts the affine clone on Z2") {
  Run r = run({"pol-delta", "zoo:cyclic(2)", "--congs", "1,1", "--arity-bound", "3"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["results"]["count"] == 28);
  CHECK(j["results"]["tables"].size() == 28);
}

TEST_CASE("largest-clone passes on Z2 and supports --intersect") {
  Run r = run({"largest-clone", "zoo:cyclic(2)", "--congs", "1,1", "--arity-bound", "3"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["results"]["pass"] == true);
  CHECK(j["results"]["maximality_confirmed"] == j["results"]["maximality_samples"]);

  Run i = run({"largest-clone", "zoo:cyclic(2)", "--intersect", "--n", "2",
               "--arity-bound", "3"});
  REQUIRE(i.code == 0);
  CHECK(json::parse(i.out)["results"]["count"].get<int>() > 0);
}

TEST_CASE("zoo lists names and prints algebras") {
  Run names = run({"zoo"});
  REQUIRE(names.code == 0);
  CHECK(json::parse(names.out)["results"]["names"].size() > 10);
  Run one = run({"zoo", "sym3"});
  REQUIRE(one.code == 0);
  CHECK(json::parse(one.out)["size"] == 6);
}

TEST_CASE("reports are byte-identical across runs") {
  std::vector<std::string> argv = {"hc-verify", "zoo:cyclic(3)", "--n", "2", "--seed", "9"};
  Run a = run(argv);
  Run b = run(argv);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("file algebras load, including a verified malcev_term") {
  const char* path = "cli_test_z3.json";
  {
    std::ofstream f(path);
    f << R"json({"size":3,"operations":[{"symbol":"+","arity":2,
                 "table":[0,1,2,1,2,0,2,0,1]},{"symbol":"neg","arity":1,"table":[0,2,1]}],
                 "malcev_term":"(+ x0 (+ (neg x1) x2))"})json";
  }
  Run r = run({"commutator", path, "--congs", "1,1", "--method", "both"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["results"]["agree"] == true);
  std::remove(path);
}

TEST_CASE("the forks method is refused without a Mal'cev term") {
  Run r = run({"commutator", "zoo:semilattice3", "--congs", "1,1", "--method", "both"});
  CHECK(r.code == 2);
  Run tc = run({"commutator", "zoo:semilattice3", "--congs", "1,1", "--method", "termcond"});
  CHECK(tc.code == 0);
}

TEST_CASE("exit code 2 on usage errors") {
  CHECK(run({"frobnicate", "zoo:sym3"}).code == 2);
  CHECK(run({"commutator", "zoo:sym3"}).code == 2);  // missing --congs
  CHECK(run({"commutator", "zoo:sym3", "--congs", "9,9"}).code == 2);
  CHECK(run({"commutator", "zoo:nosuch", "--congs", "1,1"}).code == 2);
  CHECK(run({"delta", "zoo:cyclic(4)", "--congs-blocks", "0,1|2,3"}).code == 2);
  CHECK(run({"commutator", "/does/not/exist.json", "--congs", "1,1"}).code == 2);
}

TEST_CASE("exit code 3 when a resource limit trips") {
  Run r = run({"delta", "zoo:sym3", "--congs", "2,2", "--max-tuples", "10"});
  CHECK(r.code == 3);
  CHECK(r.err.find("resource limit") != std::string::npos);
}

TEST_CASE("--help exits 0") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"commutator", "--help"}).code == 0);
}

TEST_CASE("text format renders flat key-value lines") {
  Run r = run({"supernilpotence", "zoo:cyclic(4)", "--kmax", "2", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("degree: 1") != std::string::npos);
}
