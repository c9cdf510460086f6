#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hicomm/relation.hpp"
#include "hicomm/zoo.hpp"

using namespace hicomm;

TEST_CASE("insert/contains across the three storage modes") {
  std::mt19937_64 rng(5);
  // dense (2^8), hashed codes (5^12 < 2^63), byte hashing (12^20 > 2^63)
  struct Cfg {
    int arity, base;
  } cfgs[] = {{8, 2}, {12, 5}, {20, 12}};
  for (auto [arity, base] : cfgs) {
    TupleRelation r(arity, base);
    std::vector<std::vector<int>> inserted;
    for (int i = 0; i < 50; ++i) {
      std::vector<int> t(arity);
      for (int& v : t) v = static_cast<int>(rng() % base);
      bool fresh = r.insert(t);
      bool dup = false;
      for (auto& u : inserted) dup |= u == t;
      CHECK(fresh == !dup);
      if (fresh) inserted.push_back(t);
      CHECK(r.contains(t));
    }
    CHECK(r.size() == inserted.size());
    for (std::uint64_t i = 0; i < r.size(); ++i) CHECK(r.tuple(i) == inserted[i]);
  }
}

TEST_CASE("encode is the rank with leftmost most significant") {
  TupleRelation r(3, 4);
  int t[3] = {1, 2, 3};
  CHECK(r.encode(t) == 1 * 16 + 2 * 4 + 3);
  CHECK(r.codes_fit());
}

TEST_CASE("is_full detects the full power") {
  TupleRelation r(2, 2);
  int t[2];
  for (t[0] = 0; t[0] < 2; ++t[0])
    for (t[1] = 0; t[1] < 2; ++t[1]) {
      CHECK_FALSE(r.is_full());  // still missing at least this tuple
      r.insert(t);
    }
  CHECK(r.is_full());
}

TEST_CASE("set_equal ignores insertion order") {
  TupleRelation a(2, 3), b(2, 3);
  int t1[2] = {0, 1}, t2[2] = {2, 2};
  a.insert(t1);
  a.insert(t2);
  b.insert(t2);
  b.insert(t1);
  CHECK(a.set_equal(b));
  int t3[2] = {1, 1};
  b.insert(t3);
  CHECK_FALSE(a.set_equal(b));
}

TEST_CASE("sg_power produces a closed set containing the generators") {
  std::mt19937_64 rng(17);
  for (const char* name : {"cyclic(4)", "sym3", "ring_z(3)", "semilattice3"}) {
    FiniteAlgebra alg = zoo(name);
    std::vector<std::vector<int>> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<int> t(3);
      for (int& v : t) v = static_cast<int>(rng() % alg.size());
      gens.push_back(t);
    }
    TupleRelation r = sg_power(alg, 3, gens);
    for (auto& g : gens) CHECK(r.contains(g));
    // closed: random applications stay inside
    for (int trial = 0; trial < 500; ++trial) {
      int o = static_cast<int>(rng() % alg.op_count());
      int k = alg.op_arity(o);
      std::vector<std::vector<int>> picked;
      for (int j = 0; j < k; ++j) picked.push_back(r.tuple(rng() % r.size()));
      std::vector<int> out(3);
      std::vector<int> args(k);
      for (int c = 0; c < 3; ++c) {
        for (int j = 0; j < k; ++j) args[j] = picked[j][c];
        out[c] = alg.apply(o, args);
      }
      CHECK(r.contains(out));
    }
    // idempotent: closing again adds nothing
    TupleRelation again = r;
    sg_close(alg, again);
    CHECK(again.size() == r.size());
  }
}

TEST_CASE("sg_power subgroup oracle on cyclic(8)") {
  // closure of {2} under the group ops is the subgroup {0,2,4,6}
  FiniteAlgebra z8 = zoo("cyclic(8)");
  TupleRelation r = sg_power(z8, 1, {{2}});
  CHECK(r.size() == 4);
  for (int v : {0, 2, 4, 6}) {
    int t[1] = {v};
    CHECK(r.contains(t));
  }
}

TEST_CASE("sg_power respects the tuple cap") {
  Limits tight;
  tight.max_tuples = 3;
  FiniteAlgebra z8 = zoo("cyclic(8)");
  CHECK_THROWS_AS(sg_power(z8, 1, {{1}}, tight), ResourceLimitError);
}
