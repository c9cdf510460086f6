// Hypercube tuple combinatorics: digit indexing, generator tuples,
// reindexing, face projections, and forks.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hicomm/relation.hpp"

namespace hicomm {

inline int cube_bit(std::uint64_t k, int i) { return static_cast<int>((k >> i) & 1); }
inline std::uint64_t cube_xor(std::uint64_t k, std::uint64_t l) { return k ^ l; }
inline std::uint64_t cube_and(std::uint64_t k, std::uint64_t l) { return k & l; }

// e : {0..arity-1} -> {0..source_arity-1}; applying it to an m-tuple a gives
// the n-tuple (a_{e(0)},...,a_{e(n-1)}).
struct IndexMap {
  int source_arity = 0;  // arity of the input tuples
  std::vector<int> map;  // length = result arity

  int result_arity() const { return static_cast<int>(map.size()); }

  static IndexMap identity(int n);
  // d_{i,n} : {0..2^n-1} -> {0,1}, k -> k_(i)
  static IndexMap digit(int i, int n);
  // sigma_i : k -> k xor 2^i on {0..2^n-1}
  static IndexMap flip(int i, int n);
  static IndexMap constant(int value, int source_arity, int result_arity);
};

struct CubeRelation {
  int dim = 0;  // arity of rel is 2^dim
  TupleRelation rel;
};

// (a,b)^{d_{i,n}}: coordinate k holds a when k_(i)=0, else b.
std::vector<int> generator_tuple(int i, int n, int a, int b);

TupleRelation reindex(const TupleRelation& r, const IndexMap& e);

// Restriction to coordinates k with k_(i)=d, re-ranked in increasing k.
CubeRelation face_projection(const CubeRelation& r, int i, int d);

using PairSet = std::vector<std::pair<int, int>>;  // sorted, unique

// All pairs (a,b) witnessed at coordinate i by tuples agreeing elsewhere.
PairSet forks(const TupleRelation& r, int i);

// { (face0(a), face1(a)) | a in R } as pairs of 2^{n-1}-tuples.
std::vector<std::pair<std::vector<int>, std::vector<int>>> paired_faces(const CubeRelation& r,
                                                                        int i);

}  // namespace hicomm
