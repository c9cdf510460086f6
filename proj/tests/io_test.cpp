#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hicomm/io.hpp"
#include "hicomm/malcev.hpp"
#include "hicomm/zoo.hpp"

using namespace hicomm;

namespace {

const char* kZ2 = R"json({"size":2,"operations":[{"symbol":"+","arity":2,"table":[0,1,1,0]}]})json";

}  // namespace

TEST_CASE("parse a minimal Z2 description") {
  ParsedAlgebra p = parse_algebra_text(kZ2);
  CHECK(p.algebra.size() == 2);
  CHECK(p.algebra.op_count() == 1);
  int args[2] = {1, 1};
  CHECK(p.algebra.apply(p.algebra.op_index("+"), args) == 0);
  CHECK_FALSE(p.malcev.has_value());
}

TEST_CASE("malcev_term is verified during parsing") {
  std::string good = R"json({"size":2,"operations":[{"symbol":"+","arity":2,"table":[0,1,1,0]}],
                         "malcev_term":"(+ x0 (+ x1 x2))"})json";
  ParsedAlgebra p = parse_algebra_text(good);
  REQUIRE(p.malcev.has_value());
  CHECK(verify_malcev(p.algebra, *p.malcev));

  std::string bad = R"json({"size":2,"operations":[{"symbol":"+","arity":2,"table":[0,1,1,0]}],
                        "malcev_term":"x0"})json";
  CHECK_THROWS_AS(parse_algebra_text(bad), ValidationError);
}

TEST_CASE("schema violations carry a location") {
  std::string short_table =
      R"json({"size":2,"operations":[{"symbol":"+","arity":2,"table":[0,1,1]}]})json";
  try {
    parse_algebra_text(short_table);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("operations[0]") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_algebra_text("{\"operations\":[]}"), ValidationError);
  CHECK_THROWS_AS(parse_algebra_text("not json at all"), ValidationError);
  std::string out_of_range =
      R"json({"size":2,"operations":[{"symbol":"+","arity":1,"table":[0,2]}]})json";
  CHECK_THROWS_AS(parse_algebra_text(out_of_range), ValidationError);
  std::string dup =
      R"json({"size":2,"operations":[{"symbol":"f","arity":1,"table":[0,1]},
                                 {"symbol":"f","arity":1,"table":[1,0]}]})json";
  CHECK_THROWS_AS(parse_algebra_text(dup), ValidationError);
}

TEST_CASE("with_constants appends one nullary operation per element") {
  std::string text =
      R"json({"size":3,"operations":[{"symbol":"f","arity":1,"table":[1,2,0]}],
          "with_constants":true})json";
  ParsedAlgebra p = parse_algebra_text(text);
  CHECK(p.algebra.op_count() == 4);
  for (int c = 0; c < 3; ++c) {
    int op = p.algebra.op_index("c" + std::to_string(c));
    CHECK(p.algebra.apply(op, {}) == c);
  }
}

TEST_CASE("serialize then parse is the identity") {
  for (const char* name : {"cyclic(4)", "sym3", "ring_z(3)", "semilattice3"}) {
    FiniteAlgebra a = zoo(name);
    std::string s = serialize_algebra(a);
    ParsedAlgebra back = parse_algebra_text(s);
    CHECK(serialize_algebra(back.algebra) == s);
    CHECK(back.algebra.size() == a.size());
    CHECK(back.algebra.op_count() == a.op_count());
  }
}

TEST_CASE("fingerprints separate distinct algebras and are stable") {
  std::uint64_t f1 = algebra_fingerprint(zoo("cyclic(4)"));
  std::uint64_t f2 = algebra_fingerprint(zoo("cyclic(4)"));
  std::uint64_t f3 = algebra_fingerprint(zoo("klein4"));
  CHECK(f1 == f2);
  CHECK(f1 != f3);
}

TEST_CASE("parse_algebra_file reports unreadable paths") {
  CHECK_THROWS_AS(parse_algebra_file("/nonexistent/alg.json"), UsageError);
}
