#include "hicomm/congruence.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hicomm {

Congruence cg(const FiniteAlgebra& alg, std::span<const std::pair<int, int>> pairs) {
  for (auto [a, b] : pairs)
    if (a < 0 || a >= alg.size() || b < 0 || b >= alg.size())
      throw ValidationError("cg pair out of range");
  return cg_generic(alg, pairs);
}

bool is_congruence(const FiniteAlgebra& alg, const Partition& p) {
  if (p.size() != alg.size()) return false;
  const int n = alg.size();
  std::vector<int> args;
  for (int o = 0; o < alg.op_count(); ++o) {
    const int k = alg.op_arity(o);
    if (k == 0) continue;
    args.assign(k, 0);
    // single-coordinate transport suffices; full compatibility follows by chaining
    std::vector<int> tup(k, 0);
    while (true) {
      int base_val = alg.apply(o, tup);
      for (int pos = 0; pos < k; ++pos) {
        int orig = tup[pos];
        for (int b = 0; b < n; ++b) {
          if (!p.same(orig, b)) continue;
          tup[pos] = b;
          if (!p.same(base_val, alg.apply(o, tup))) {
            tup[pos] = orig;
            return false;
          }
        }
        tup[pos] = orig;
      }
      int j = 0;
      for (; j < k; ++j) {
        if (++tup[j] < n) break;
        tup[j] = 0;
      }
      if (j == k) break;
    }
  }
  return true;
}

Congruence join(const FiniteAlgebra& alg, const Congruence& c1, const Congruence& c2) {
  if (c1.size() != alg.size() || c2.size() != alg.size())
    throw ValidationError("join carrier mismatch");
  std::vector<std::pair<int, int>> pairs = c1.generating_pairs();
  auto p2 = c2.generating_pairs();
  pairs.insert(pairs.end(), p2.begin(), p2.end());
  return cg(alg, pairs);
}

int CongruenceLattice::index_of(const Partition& p) const {
  for (int i = 0; i < count(); ++i)
    if (congruences[i] == p) return i;
  return -1;
}

const Congruence& CongruenceLattice::zero() const { return congruences.front(); }
const Congruence& CongruenceLattice::one() const { return congruences.back(); }

CongruenceLattice con_lattice(const FiniteAlgebra& alg, const Limits& limits) {
  const int n = alg.size();
  if (n > limits.max_carrier)
    throw ResourceLimitError("carrier too large for lattice enumeration", n);
  std::set<Partition> found;
  found.insert(Partition::identity(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::pair<int, int> pr{a, b};
      found.insert(cg(alg, std::span<const std::pair<int, int>>(&pr, 1)));
    }
  // close under join
  std::vector<Partition> work(found.begin(), found.end());
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Partition jn = join(alg, work[i], work[j]);
      if (found.insert(jn).second) work.push_back(jn);
    }
  CongruenceLattice lat;
  lat.congruences.assign(found.begin(), found.end());
  std::sort(lat.congruences.begin(), lat.congruences.end());
  const int c = lat.count();
  lat.meet_table.resize(static_cast<std::size_t>(c) * c);
  lat.join_table.resize(static_cast<std::size_t>(c) * c);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      int mi = lat.index_of(lat.congruences[i].meet(lat.congruences[j]));
      int ji = lat.index_of(join(alg, lat.congruences[i], lat.congruences[j]));
      if (mi < 0 || ji < 0) throw ValidationError("lattice not closed under meet/join");
      lat.meet_table[static_cast<std::size_t>(i) * c + j] = mi;
      lat.join_table[static_cast<std::size_t>(i) * c + j] = ji;
    }
  return lat;
}

FiniteAlgebra quotient_algebra(const FiniteAlgebra& alg, const Congruence& eta) {
  if (!is_congruence(alg, eta))
    throw ValidationError("quotient by a partition that is not a congruence");
  const int q = eta.num_blocks;
  // representative of each block
  std::vector<int> rep(q, -1);
  for (int i = 0; i < alg.size(); ++i)
    if (rep[eta.block_of[i]] < 0) rep[eta.block_of[i]] = i;
  std::vector<OperationTable> ops;
  std::vector<int> args;
  for (const auto& op : alg.ops()) {
    OperationTable t;
    t.symbol = op.symbol;
    t.arity = op.arity;
    std::size_t rows = 1;
    for (int i = 0; i < op.arity; ++i) rows *= static_cast<std::size_t>(q);
    t.table.resize(rows);
    args.assign(op.arity, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      std::size_t x = r;
      for (int i = op.arity - 1; i >= 0; --i) {
        args[i] = rep[static_cast<int>(x % q)];
        x /= q;
      }
      t.table[r] = eta.block_of[op.apply(args)];
    }
    ops.push_back(std::move(t));
  }
  return FiniteAlgebra(alg.name() + "/q", q, std::move(ops));
}

Congruence quotient_congruence(const Congruence& eta, const Congruence& alpha) {
  std::vector<int> blocks(eta.num_blocks, -1);
  for (int i = 0; i < eta.size(); ++i) blocks[eta.block_of[i]] = alpha.block_of[i];
  return Partition(std::move(blocks));
}

SubpowerAlgebra::SubpowerAlgebra(const FiniteAlgebra& base, int arity,
                                 std::vector<std::uint8_t> elements_flat)
    : base_(&base), arity_(arity), flat_(std::move(elements_flat)) {
  count_ = static_cast<int>(flat_.size() / static_cast<std::size_t>(arity_));
  index_.reserve(count_ * 2);
  for (int i = 0; i < count_; ++i) index_.emplace(code(i), i);
}

std::uint64_t SubpowerAlgebra::code(int i) const {
  auto e = element(i);
  std::uint64_t c = 0;
  for (int j = 0; j < arity_; ++j) c = c * base_->size() + e[j];
  return c;
}

int SubpowerAlgebra::index_of_code(std::uint64_t c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

int SubpowerAlgebra::apply(int o, std::span<const int> args) const {
  const int k = base_->op_arity(o);
  std::uint64_t c = 0;
  int a[8];
  for (int coord = 0; coord < arity_; ++coord) {
    for (int j = 0; j < k; ++j) a[j] = element(args[j])[coord];
    c = c * base_->size() + base_->apply(o, std::span<const int>(a, k));
  }
  int idx = index_of_code(c);
  if (idx < 0) throw ValidationError("subpower not closed under base operations");
  return idx;
}

}  // namespace hicomm
