#include "hicomm/partition.hpp"

#include <map>
#include <utility>

namespace hicomm {

Partition Partition::from_union_find(UnionFind& uf, int m) {
  Partition p;
  p.block_of.resize(m);
  for (int i = 0; i < m; ++i) p.block_of[i] = uf.find(i);
  p.canonicalize();
  return p;
}

void Partition::canonicalize() {
  std::map<int, int> relabel;
  for (int& b : block_of) {
    auto [it, fresh] = relabel.emplace(b, static_cast<int>(relabel.size()));
    b = it->second;
  }
  num_blocks = static_cast<int>(relabel.size());
}

bool Partition::leq(const Partition& other) const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (same(a, b) && !other.same(a, b)) return false;
  return true;
}

Partition Partition::meet(const Partition& other) const {
  Partition p;
  p.block_of.resize(size());
  std::map<std::pair<int, int>, int> relabel;
  for (int i = 0; i < size(); ++i) {
    auto key = std::make_pair(block_of[i], other.block_of[i]);
    auto [it, fresh] = relabel.emplace(key, static_cast<int>(relabel.size()));
    p.block_of[i] = it->second;
  }
  p.num_blocks = static_cast<int>(relabel.size());
  return p;
}

Partition Partition::join_as_partition(const Partition& other) const {
  UnionFind uf(size());
  for (int i = 0; i + 1 < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (same(i, j) || other.same(i, j)) uf.merge(i, j);
  return from_union_find(uf, size());
}

std::vector<std::pair<int, int>> Partition::generating_pairs() const {
  // First element of each block paired with every later member.
  std::vector<int> first(num_blocks, -1);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i) {
    int b = block_of[i];
    if (first[b] < 0)
      first[b] = i;
    else
      out.emplace_back(first[b], i);
  }
  return out;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(num_blocks);
  for (int i = 0; i < size(); ++i) out[block_of[i]].push_back(i);
  return out;
}

bool Partition::operator<(const Partition& o) const {
  if (num_blocks != o.num_blocks) return num_blocks > o.num_blocks;
  return block_of < o.block_of;
}

}  // namespace hicomm
