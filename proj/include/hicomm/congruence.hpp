// Congruence generation, the congruence lattice, and quotient algebras.
#pragma once

#include <deque>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hicomm/algebra.hpp"
#include "hicomm/partition.hpp"
#include "hicomm/relation.hpp"

namespace hicomm {

using Congruence = Partition;

// Congruence generated by the given pairs: union-find plus one-step
// translations f(...,a,...) ~ f(...,b,...) over all fillings, to fixpoint.
// Works for any type with the FiniteAlgebra apply interface.
template <class Alg>
Congruence cg_generic(const Alg& alg, std::span<const std::pair<int, int>> pairs) {
  const int n = alg.size();
  UnionFind uf(n);
  std::deque<std::pair<int, int>> work;
  for (auto [a, b] : pairs)
    if (uf.merge(a, b)) work.emplace_back(a, b);
  std::vector<int> args;
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    for (int o = 0; o < alg.op_count(); ++o) {
      const int k = alg.op_arity(o);
      if (k == 0) continue;
      args.assign(k, 0);
      for (int pos = 0; pos < k; ++pos) {
        // odometer over the other k-1 positions
        std::vector<int> fill(k - 1, 0);
        while (true) {
          int fi = 0;
          for (int j = 0; j < k; ++j)
            if (j != pos) args[j] = fill[fi++];
          args[pos] = a;
          int u = alg.apply(o, args);
          args[pos] = b;
          int v = alg.apply(o, args);
          if (uf.merge(u, v)) work.emplace_back(u, v);
          int j = 0;
          for (; j < k - 1; ++j) {
            if (++fill[j] < n) break;
            fill[j] = 0;
          }
          if (j == k - 1) break;
        }
        if (k == 1) break;  // no fillings; position loop degenerate
      }
    }
  }
  return Partition::from_union_find(uf, n);
}

Congruence cg(const FiniteAlgebra& alg, std::span<const std::pair<int, int>> pairs);

bool is_congruence(const FiniteAlgebra& alg, const Partition& p);

Congruence join(const FiniteAlgebra& alg, const Congruence& c1, const Congruence& c2);
// meet is Partition::meet (common refinement), no algebra needed.

struct CongruenceLattice {
  std::vector<Congruence> congruences;  // canonical order: blocks desc, then lex
  std::vector<int> meet_table;          // index pairs -> index
  std::vector<int> join_table;

  int count() const { return static_cast<int>(congruences.size()); }
  int meet_idx(int i, int j) const { return meet_table[i * count() + j]; }
  int join_idx(int i, int j) const { return join_table[i * count() + j]; }
  int index_of(const Partition& p) const;  // -1 if absent
  const Congruence& zero() const;          // equality congruence
  const Congruence& one() const;           // full congruence
};

CongruenceLattice con_lattice(const FiniteAlgebra& alg, const Limits& limits = {});

// The algebra on the blocks of eta, with tables induced blockwise, plus the
// image of a congruence above eta.
FiniteAlgebra quotient_algebra(const FiniteAlgebra& alg, const Congruence& eta);
Congruence quotient_congruence(const Congruence& eta, const Congruence& alpha);

// View of a subpower (a closed tuple set) as an algebra in its own right;
// elements are indices into the tuple list.
class SubpowerAlgebra {
public:
  SubpowerAlgebra(const FiniteAlgebra& base, int arity,
                  std::vector<std::uint8_t> elements_flat);

  int size() const { return count_; }
  int op_count() const { return base_->op_count(); }
  int op_arity(int o) const { return base_->op_arity(o); }
  int apply(int o, std::span<const int> args) const;

  int arity() const { return arity_; }
  const FiniteAlgebra& base() const { return *base_; }
  std::span<const std::uint8_t> element(int i) const {
    return {flat_.data() + static_cast<std::size_t>(i) * arity_,
            static_cast<std::size_t>(arity_)};
  }
  std::uint64_t code(int i) const;
  int index_of_code(std::uint64_t c) const;  // -1 if absent

private:
  const FiniteAlgebra* base_;
  int arity_;
  int count_;
  std::vector<std::uint8_t> flat_;
  std::unordered_map<std::uint64_t, int> index_;
};

}  // namespace hicomm
