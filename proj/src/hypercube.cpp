#include "hicomm/hypercube.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace hicomm {

IndexMap IndexMap::identity(int n) {
  IndexMap e;
  e.source_arity = n;
  e.map.resize(n);
  for (int i = 0; i < n; ++i) e.map[i] = i;
  return e;
}

IndexMap IndexMap::digit(int i, int n) {
  IndexMap e;
  e.source_arity = 2;
  e.map.resize(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k)
    e.map[k] = cube_bit(k, i);
  return e;
}

IndexMap IndexMap::flip(int i, int n) {
  IndexMap e;
  e.source_arity = 1 << n;
  e.map.resize(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k)
    e.map[k] = static_cast<int>(k ^ (std::uint64_t{1} << i));
  return e;
}

IndexMap IndexMap::constant(int value, int source_arity, int result_arity) {
  IndexMap e;
  e.source_arity = source_arity;
  e.map.assign(result_arity, value);
  return e;
}

std::vector<int> generator_tuple(int i, int n, int a, int b) {
  if (i < 0 || i >= n) throw ValidationError("generator direction out of range");
  std::vector<int> t(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < t.size(); ++k) t[k] = cube_bit(k, i) ? b : a;
  return t;
}

TupleRelation reindex(const TupleRelation& r, const IndexMap& e) {
  if (e.source_arity != r.arity()) throw ValidationError("reindex arity mismatch");
  for (int v : e.map)
    if (v < 0 || v >= r.arity()) throw ValidationError("reindex map out of range");
  TupleRelation out(e.result_arity(), r.base());
  std::vector<int> t(e.result_arity());
  for (std::uint64_t i = 0; i < r.size(); ++i) {
    auto raw = r.tuple_raw(i);
    for (int j = 0; j < e.result_arity(); ++j) t[j] = raw[e.map[j]];
    out.insert(t);
  }
  return out;
}

CubeRelation face_projection(const CubeRelation& r, int i, int d) {
  if (r.dim <= 0) throw ValidationError("face projection needs dimension >= 1");
  if (i < 0 || i >= r.dim || (d != 0 && d != 1)) throw ValidationError("face index out of range");
  CubeRelation out;
  out.dim = r.dim - 1;
  out.rel = TupleRelation(1 << out.dim, r.rel.base());
  std::vector<int> coords;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << r.dim); ++k)
    if (cube_bit(k, i) == d) coords.push_back(static_cast<int>(k));
  std::vector<int> t(coords.size());
  for (std::uint64_t j = 0; j < r.rel.size(); ++j) {
    auto raw = r.rel.tuple_raw(j);
    for (std::size_t c = 0; c < coords.size(); ++c) t[c] = raw[coords[c]];
    out.rel.insert(t);
  }
  return out;
}

PairSet forks(const TupleRelation& r, int i) {
  if (i < 0 || i >= r.arity()) throw ValidationError("fork coordinate out of range");
  // group tuples on the punctured tuple, emit all pairs within a group
  std::unordered_map<std::string, std::vector<int>> groups;
  for (std::uint64_t j = 0; j < r.size(); ++j) {
    auto raw = r.tuple_raw(j);
    std::string key;
    key.reserve(r.arity() - 1);
    for (int c = 0; c < r.arity(); ++c)
      if (c != i) key.push_back(static_cast<char>(raw[c]));
    groups[key].push_back(raw[i]);
  }
  std::set<std::pair<int, int>> out;
  for (auto& [key, vals] : groups) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (int a : vals)
      for (int b : vals) out.emplace(a, b);
  }
  return PairSet(out.begin(), out.end());
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> paired_faces(const CubeRelation& r,
                                                                        int i) {
  if (r.dim <= 0) throw ValidationError("paired faces need dimension >= 1");
  if (i < 0 || i >= r.dim) throw ValidationError("direction out of range");
  std::vector<int> lo, hi;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << r.dim); ++k)
    (cube_bit(k, i) ? hi : lo).push_back(static_cast<int>(k));
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  for (std::uint64_t j = 0; j < r.rel.size(); ++j) {
    auto raw = r.rel.tuple_raw(j);
    std::vector<int> a(lo.size()), b(hi.size());
    for (std::size_t c = 0; c < lo.size(); ++c) a[c] = raw[lo[c]];
    for (std::size_t c = 0; c < hi.size(); ++c) b[c] = raw[hi[c]];
    out.emplace(std::move(a), std::move(b));
  }
  return {out.begin(), out.end()};
}

}  // namespace hicomm
