#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "hicomm/zoo.hpp"

using namespace hicomm;

namespace {

int bin(const FiniteAlgebra& a, const char* sym, int x, int y) {
  int args[2] = {x, y};
  return a.apply(a.op_index(sym), args);
}

int un(const FiniteAlgebra& a, const char* sym, int x) {
  int args[1] = {x};
  return a.apply(a.op_index(sym), args);
}

void check_group_axioms(const FiniteAlgebra& g) {
  const int m = g.size();
  int e = g.apply(g.op_index("e"), {});
  for (int a = 0; a < m; ++a) {
    CHECK(bin(g, "*", e, a) == a);
    CHECK(bin(g, "*", a, e) == a);
    CHECK(bin(g, "*", a, un(g, "inv", a)) == e);
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        CHECK(bin(g, "*", bin(g, "*", a, b), c) == bin(g, "*", a, bin(g, "*", b, c)));
  }
}

void check_ring_axioms(const FiniteAlgebra& r) {
  const int m = r.size();
  int zero = r.apply(r.op_index("0"), {});
  int one = r.apply(r.op_index("1"), {});
  for (int a = 0; a < m; ++a) {
    CHECK(bin(r, "+", a, zero) == a);
    CHECK(bin(r, "+", a, un(r, "-", a)) == zero);
    CHECK(bin(r, "*", one, a) == a);
    for (int b = 0; b < m; ++b) {
      CHECK(bin(r, "+", a, b) == bin(r, "+", b, a));
      for (int c = 0; c < m; ++c) {
        CHECK(bin(r, "+", bin(r, "+", a, b), c) == bin(r, "+", a, bin(r, "+", b, c)));
        CHECK(bin(r, "*", bin(r, "*", a, b), c) == bin(r, "*", a, bin(r, "*", b, c)));
        CHECK(bin(r, "*", a, bin(r, "+", b, c)) ==
              bin(r, "+", bin(r, "*", a, b), bin(r, "*", a, c)));
      }
    }
  }
}

std::set<int> center(const FiniteAlgebra& g) {
  std::set<int> z;
  for (int a = 0; a < g.size(); ++a) {
    bool central = true;
    for (int b = 0; b < g.size(); ++b) central &= bin(g, "*", a, b) == bin(g, "*", b, a);
    if (central) z.insert(a);
  }
  return z;
}

}  // namespace

TEST_CASE("cyclic groups satisfy the group axioms and are abelian") {
  for (int n = 2; n <= 8; ++n) {
    FiniteAlgebra g = zoo("cyclic(" + std::to_string(n) + ")");
    CHECK(g.size() == n);
    check_group_axioms(g);
    CHECK(static_cast<int>(center(g).size()) == n);
    // element 1 generates
    int x = 1, order = 1;
    while (x != 0) {
      x = bin(g, "*", x, 1);
      ++order;
    }
    CHECK(order == n);
  }
}

TEST_CASE("klein4 is elementary abelian") {
  FiniteAlgebra g = zoo("klein4");
  check_group_axioms(g);
  for (int a = 0; a < 4; ++a) CHECK(bin(g, "*", a, a) == 0);
  CHECK(center(g).size() == 4);
}

TEST_CASE("dihedral4 has order 8, center of size 2, and is nonabelian") {
  FiniteAlgebra g = zoo("dihedral4");
  CHECK(g.size() == 8);
  check_group_axioms(g);
  CHECK(center(g).size() == 2);
  // r has order 4, s has order 2, s r s = r^-1
  int r = 1, s = 4;
  CHECK(bin(g, "*", bin(g, "*", r, r), bin(g, "*", r, r)) == 0);
  CHECK(bin(g, "*", s, s) == 0);
  CHECK(bin(g, "*", bin(g, "*", s, r), s) == un(g, "inv", r));
}

TEST_CASE("quaternion8 has a unique involution and center of size 2") {
  FiniteAlgebra g = zoo("quaternion8");
  CHECK(g.size() == 8);
  check_group_axioms(g);
  CHECK(center(g).size() == 2);
  int involutions = 0;
  for (int a = 1; a < 8; ++a)
    if (bin(g, "*", a, a) == 0) ++involutions;
  CHECK(involutions == 1);  // only -1
  // every non-central element has order 4
  for (int a = 0; a < 8; ++a) {
    if (center(g).count(a)) continue;
    int x = a, order = 1;
    while (x != 0) {
      x = bin(g, "*", x, a);
      ++order;
    }
    CHECK(order == 4);
  }
}

TEST_CASE("sym3 multiplies permutations correctly") {
  FiniteAlgebra g = zoo("sym3");
  CHECK(g.size() == 6);
  check_group_axioms(g);
  CHECK(center(g).size() == 1);
  // elements 0,3,4 (identity and the two 3-cycles) form a subgroup
  std::set<int> a3 = {0, 3, 4};
  for (int a : a3)
    for (int b : a3) CHECK(a3.count(bin(g, "*", a, b)) == 1);
  // a transposition times a 3-cycle is a transposition (odd)
  CHECK(a3.count(bin(g, "*", 1, 3)) == 0);
}

TEST_CASE("ring_z(n) satisfies the unital ring axioms") {
  for (int n = 2; n <= 6; ++n) {
    FiniteAlgebra r = zoo("ring_z(" + std::to_string(n) + ")");
    CHECK(r.size() == n);
    check_ring_axioms(r);
  }
}

TEST_CASE("affine_z(n) carries the ternary x - y + z operation") {
  for (int n : {2, 5, 8}) {
    FiniteAlgebra a = zoo("affine_z(" + std::to_string(n) + ")");
    int mal = a.op_index("mal");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int args[3] = {x, y, z};
          CHECK(a.apply(mal, args) == ((x - y + z) % n + n) % n);
        }
  }
}

TEST_CASE("semilattice3 is the meet semilattice of a 3-chain") {
  FiniteAlgebra s = zoo("semilattice3");
  CHECK(s.size() == 3);
  for (int a = 0; a < 3; ++a) {
    CHECK(bin(s, "meet", a, a) == a);
    for (int b = 0; b < 3; ++b) {
      CHECK(bin(s, "meet", a, b) == std::min(a, b));
      CHECK(bin(s, "meet", a, b) == bin(s, "meet", b, a));
    }
  }
}

TEST_CASE("name catalogues are consistent") {
  auto names = zoo_names();
  auto malcev = zoo_malcev_names();
  CHECK(!names.empty());
  for (const auto& n : malcev)
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK(std::find(malcev.begin(), malcev.end(), "semilattice3") == malcev.end());
  for (const auto& n : names) CHECK(zoo(n).size() >= 2);
}

TEST_CASE("unknown names are rejected") {
  CHECK_THROWS_AS(zoo("octonions"), UsageError);
  CHECK_THROWS_AS(zoo("cyclic(1)"), UsageError);
  CHECK_THROWS_AS(zoo("cyclic(99)"), UsageError);
}
