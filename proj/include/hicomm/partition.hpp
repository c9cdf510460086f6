// Partitions of {0..m-1} in canonical form; congruences are partitions
// that pass the compatibility check in congruence.hpp.
#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace hicomm {

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) x = std::exchange(parent_[x], root);
    return root;
  }
  // Returns true when the two classes were distinct.
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }
  int count() const {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      if (parent_[i] == i) ++c;
    return c;
  }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

struct Partition {
  // block_of[i] is the block id of element i; ids are consecutive integers
  // in order of first occurrence.
  std::vector<int> block_of;
  int num_blocks = 0;

  Partition() = default;
  explicit Partition(std::vector<int> blocks) : block_of(std::move(blocks)) { canonicalize(); }

  static Partition identity(int m) {
    Partition p;
    p.block_of.resize(m);
    std::iota(p.block_of.begin(), p.block_of.end(), 0);
    p.num_blocks = m;
    return p;
  }
  static Partition full(int m) {
    Partition p;
    p.block_of.assign(m, 0);
    p.num_blocks = m > 0 ? 1 : 0;
    return p;
  }
  static Partition from_union_find(UnionFind& uf, int m);

  int size() const { return static_cast<int>(block_of.size()); }
  bool same(int a, int b) const { return block_of[a] == block_of[b]; }

  void canonicalize();
  bool leq(const Partition& other) const;  // refinement order
  Partition meet(const Partition& other) const;
  Partition join_as_partition(const Partition& other) const;  // equivalence join
  std::vector<std::pair<int, int>> generating_pairs() const;
  std::vector<std::vector<int>> blocks() const;

  bool operator==(const Partition& o) const { return block_of == o.block_of; }
  bool operator<(const Partition& o) const;  // canonical order: blocks desc, then lex
};

}  // namespace hicomm
