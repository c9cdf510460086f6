#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hicomm/malcev.hpp"
#include "hicomm/zoo.hpp"

using namespace hicomm;

TEST_CASE("find_malcev_term on groups and affine algebras") {
  for (const char* name : {"cyclic(2)", "cyclic(5)", "klein4", "sym3", "dihedral4",
                           "quaternion8", "ring_z(4)", "affine_z(6)"}) {
    auto q = find_malcev_term(zoo(name));
    REQUIRE_MESSAGE(q.has_value(), name);
    CHECK(verify_malcev(zoo(name), *q));
  }
}

TEST_CASE("semilattices have no Mal'cev term") {
  CHECK_FALSE(find_malcev_term(zoo("semilattice3")).has_value());
}

TEST_CASE("verify_malcev rejects non-witnesses") {
  FiniteAlgebra z4 = zoo("cyclic(4)");
  CHECK(verify_malcev(z4, parse_term("(* x0 (* (inv x1) x2))")));
  CHECK_FALSE(verify_malcev(z4, parse_term("x0")));
  CHECK_FALSE(verify_malcev(z4, parse_term("(* x0 (* x1 x2))")));
}

TEST_CASE("strong cube terms verify for n = 2,3,4") {
  for (const char* name : {"cyclic(3)", "klein4", "sym3"}) {
    FiniteAlgebra alg = zoo(name);
    Term q = *find_malcev_term(alg);
    for (int n = 2; n <= 4; ++n) {
      CubeTermWitness w = strong_cube_term(alg, n, q);
      CHECK(w.verified);
      CHECK(w.term.max_var() == (1 << n) - 2);
      auto res = verify_strong_cube(alg, n, w.term);
      CHECK(res.ok);
    }
  }
}

TEST_CASE("verify_strong_cube catches corrupted terms") {
  FiniteAlgebra z4 = zoo("cyclic(4)");
  Term q = *find_malcev_term(z4);
  CubeTermWitness w = strong_cube_term(z4, 2, q);
  // x0 is not a strong 2-cube term (fails the identity with x0 free)
  auto res = verify_strong_cube(z4, 2, parse_term("x0"));
  CHECK_FALSE(res.ok);
  CHECK(res.failed_identity >= 0);
  CHECK_FALSE(verify_strong_cube(z4, 3, w.term /* wrong arity for n=3 */).ok);
}

TEST_CASE("malcev_from_cube recovers a Mal'cev term") {
  for (const char* name : {"cyclic(4)", "dihedral4"}) {
    FiniteAlgebra alg = zoo(name);
    Term q = *find_malcev_term(alg);
    for (int n = 2; n <= 3; ++n) {
      CubeTermWitness w = strong_cube_term(alg, n, q);
      Term back = malcev_from_cube(w.term, n);
      CHECK(verify_malcev(alg, back));
    }
  }
}

TEST_CASE("strong_cube_term validates its inputs") {
  FiniteAlgebra z4 = zoo("cyclic(4)");
  CHECK_THROWS_AS(strong_cube_term(z4, 1, *find_malcev_term(z4)), ValidationError);
  CHECK_THROWS_AS(strong_cube_term(z4, 2, parse_term("x0")), ValidationError);
}

TEST_CASE("TermProgram evaluates like eval_term") {
  FiniteAlgebra d4 = zoo("dihedral4");
  Term t = parse_term("(* (inv x0) (* x1 (* x0 (inv x1))))");
  TermProgram prog(d4, t);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int args[2] = {a, b};
      CHECK(prog.eval(args) == eval_term(d4, t, args));
    }
}

TEST_CASE("search respects resource limits") {
  Limits tight;
  tight.max_tuples = 2;
  CHECK_THROWS_AS(find_malcev_term(zoo("sym3"), tight), ResourceLimitError);
}
