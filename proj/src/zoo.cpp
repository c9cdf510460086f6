#include "hicomm/zoo.hpp"

#include <algorithm>
#include <functional>

namespace hicomm {

namespace {

OperationTable binary_table(const std::string& symbol, int m,
                            const std::function<int(int, int)>& f) {
  OperationTable t;
  t.symbol = symbol;
  t.arity = 2;
  t.table.resize(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t.table[static_cast<std::size_t>(a) * m + b] = f(a, b);
  return t;
}

OperationTable unary_table(const std::string& symbol, int m, const std::function<int(int)>& f) {
  OperationTable t;
  t.symbol = symbol;
  t.arity = 1;
  t.table.resize(m);
  for (int a = 0; a < m; ++a) t.table[a] = f(a);
  return t;
}

OperationTable const_table(const std::string& symbol, int value) {
  OperationTable t;
  t.symbol = symbol;
  t.arity = 0;
  t.table = {value};
  return t;
}

FiniteAlgebra group(const std::string& name, int m, const std::function<int(int, int)>& mul,
                    const std::function<int(int)>& inv, int identity) {
  std::vector<OperationTable> ops;
  ops.push_back(binary_table("*", m, mul));
  ops.push_back(unary_table("inv", m, inv));
  ops.push_back(const_table("e", identity));
  return FiniteAlgebra(name, m, std::move(ops));
}

FiniteAlgebra cyclic(int n) {
  return group("cyclic(" + std::to_string(n) + ")", n,
               [n](int a, int b) { return (a + b) % n; },
               [n](int a) { return (n - a) % n; }, 0);
}

FiniteAlgebra klein4() {
  return group("klein4", 4, [](int a, int b) { return a ^ b; }, [](int a) { return a; }, 0);
}

// r^i s^j at index i + 4j; s r = r^-1 s
FiniteAlgebra dihedral4() {
  auto mul = [](int x, int y) {
    int a = x % 4, b = x / 4, c = y % 4, d = y / 4;
    int i = ((a + (b ? -c : c)) % 4 + 4) % 4;
    return i + 4 * (b ^ d);
  };
  auto inv = [](int x) {
    int a = x % 4, b = x / 4;
    return b ? x : (4 - a) % 4;
  };
  return group("dihedral4", 8, mul, inv, 0);
}

// index 2*unit + sign over units [1,i,j,k], sign 1 meaning negative;
// listed order: 1, -1, i, -i, j, -j, k, -k
FiniteAlgebra quaternion8() {
  // units 1,i,j,k as 0..3; unit product and its sign
  static const int umul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto sgn = [](int u, int v) {
    if (u == 0 || v == 0) return 0;
    if (u == v) return 1;            // i*i = j*j = k*k = -1
    static const int fwd[3] = {2, 3, 1};  // the cycle i->j->k->i is positive
    return fwd[u - 1] == v ? 0 : 1;
  };
  auto mul = [sgn](int x, int y) {
    int ux = x / 2, sx = x % 2, uy = y / 2, sy = y % 2;
    return 2 * umul[ux][uy] + ((sx ^ sy ^ sgn(ux, uy)) & 1);
  };
  auto inv = [mul](int x) {
    for (int y = 0; y < 8; ++y)
      if (mul(x, y) == 0) return y;
    return 0;
  };
  return group("quaternion8", 8, mul, inv, 0);
}

// permutations of {0,1,2} in lexicographic one-line order
FiniteAlgebra sym3() {
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    return -1;
  };
  auto mul = [index_of](int x, int y) {
    int p[3];
    for (int v = 0; v < 3; ++v) p[v] = perms[x][perms[y][v]];
    return index_of(p);
  };
  auto inv = [index_of](int x) {
    int p[3];
    for (int v = 0; v < 3; ++v) p[perms[x][v]] = v;
    return index_of(p);
  };
  return group("sym3", 6, mul, inv, 0);
}

FiniteAlgebra ring_z(int n) {
  std::vector<OperationTable> ops;
  ops.push_back(binary_table("+", n, [n](int a, int b) { return (a + b) % n; }));
  ops.push_back(unary_table("-", n, [n](int a) { return (n - a) % n; }));
  ops.push_back(binary_table("*", n, [n](int a, int b) { return (a * b) % n; }));
  ops.push_back(const_table("0", 0));
  ops.push_back(const_table("1", 1 % n));
  return FiniteAlgebra("ring_z(" + std::to_string(n) + ")", n, std::move(ops));
}

FiniteAlgebra affine_z(int n) {
  OperationTable t;
  t.symbol = "mal";
  t.arity = 3;
  t.table.resize(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        t.table[(static_cast<std::size_t>(a) * n + b) * n + c] = ((a - b + c) % n + n) % n;
  return FiniteAlgebra("affine_z(" + std::to_string(n) + ")", n, {t});
}

FiniteAlgebra semilattice3() {
  return FiniteAlgebra("semilattice3", 3,
                       {binary_table("meet", 3, [](int a, int b) { return std::min(a, b); })});
}

}  // namespace

FiniteAlgebra zoo(const std::string& name) {
  auto param = [&](const std::string& prefix) -> int {
    if (name.size() <= prefix.size() + 1 || name.compare(0, prefix.size() + 1, prefix + "(") != 0 ||
        name.back() != ')')
      return -1;
    try {
      return std::stoi(name.substr(prefix.size() + 1,
                                   name.size() - prefix.size() - 2));
    } catch (...) {
      return -1;
    }
  };
  if (int n = param("cyclic"); n >= 2 && n <= 8) return cyclic(n);
  if (int n = param("ring_z"); n >= 2 && n <= 6) return ring_z(n);
  if (int n = param("affine_z"); n >= 2 && n <= 8) return affine_z(n);
  if (name == "klein4") return klein4();
  if (name == "dihedral4") return dihedral4();
  if (name == "quaternion8") return quaternion8();
  if (name == "sym3") return sym3();
  if (name == "semilattice3") return semilattice3();
  throw UsageError("unknown zoo algebra: " + name);
}

std::vector<std::string> zoo_names() {
  std::vector<std::string> names = zoo_malcev_names();
  names.push_back("semilattice3");
  return names;
}

std::vector<std::string> zoo_malcev_names() {
  std::vector<std::string> names;
  for (int n = 2; n <= 8; ++n) names.push_back("cyclic(" + std::to_string(n) + ")");
  names.push_back("klein4");
  names.push_back("dihedral4");
  names.push_back("quaternion8");
  names.push_back("sym3");
  for (int n = 2; n <= 6; ++n) names.push_back("ring_z(" + std::to_string(n) + ")");
  for (int n = 2; n <= 8; ++n) names.push_back("affine_z(" + std::to_string(n) + ")");
  return names;
}

}  // namespace hicomm
