#include "hicomm/relation.hpp"

#include <algorithm>

namespace hicomm {

TupleRelation::TupleRelation(int arity, int base) : arity_(arity), base_(base) {
  if (arity < 0 || base <= 0) throw ValidationError("bad relation shape");
  // base^arity, saturating
  std::uint64_t space = 1;
  bool fits = true;
  for (int i = 0; i < arity; ++i) {
    if (space > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(base)) {
      fits = false;
      break;
    }
    space *= static_cast<std::uint64_t>(base);
  }
  codes_fit_ = fits;
  space_ = fits ? space : 0;
  if (fits && space <= (std::uint64_t{1} << 25)) {
    mode_ = Mode::Dense;
    dense_.assign((space + 63) / 64, 0);
  } else if (fits) {
    mode_ = Mode::Hash64;
  } else {
    mode_ = Mode::HashBytes;
  }
}

std::uint64_t TupleRelation::encode_raw(const std::uint8_t* t) const {
  std::uint64_t code = 0;
  for (int i = 0; i < arity_; ++i) code = code * base_ + t[i];
  return code;
}

std::uint64_t TupleRelation::encode(std::span<const int> tuple) const {
  std::uint64_t code = 0;
  for (int i = 0; i < arity_; ++i) code = code * base_ + static_cast<std::uint64_t>(tuple[i]);
  return code;
}

bool TupleRelation::insert(std::span<const int> tuple) {
  if (static_cast<int>(tuple.size()) != arity_) throw ValidationError("tuple arity mismatch");
  for (int v : tuple)
    if (v < 0 || v >= base_) throw ValidationError("tuple entry out of range");
  bool fresh = false;
  switch (mode_) {
    case Mode::Dense: {
      std::uint64_t c = encode(tuple);
      std::uint64_t w = c >> 6, m = std::uint64_t{1} << (c & 63);
      fresh = (dense_[w] & m) == 0;
      dense_[w] |= m;
      break;
    }
    case Mode::Hash64:
      fresh = hash64_.insert(encode(tuple)).second;
      break;
    case Mode::HashBytes: {
      std::string key(tuple.size(), '\0');
      for (std::size_t i = 0; i < tuple.size(); ++i) key[i] = static_cast<char>(tuple[i]);
      fresh = hash_bytes_.insert(std::move(key)).second;
      break;
    }
  }
  if (fresh) {
    for (int v : tuple) data_.push_back(static_cast<std::uint8_t>(v));
    ++count_;
  }
  return fresh;
}

bool TupleRelation::contains(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) return false;
  for (int v : tuple)
    if (v < 0 || v >= base_) return false;
  switch (mode_) {
    case Mode::Dense: {
      std::uint64_t c = encode(tuple);
      return (dense_[c >> 6] >> (c & 63)) & 1;
    }
    case Mode::Hash64:
      return hash64_.count(encode(tuple)) > 0;
    case Mode::HashBytes: {
      std::string key(tuple.size(), '\0');
      for (std::size_t i = 0; i < tuple.size(); ++i) key[i] = static_cast<char>(tuple[i]);
      return hash_bytes_.count(key) > 0;
    }
  }
  return false;
}

std::vector<int> TupleRelation::tuple(std::uint64_t i) const {
  auto raw = tuple_raw(i);
  return std::vector<int>(raw.begin(), raw.end());
}

std::vector<std::uint64_t> TupleRelation::sorted_codes() const {
  if (!codes_fit_) throw ValidationError("tuple codes do not fit 63 bits");
  std::vector<std::uint64_t> out;
  out.reserve(count_);
  for (std::uint64_t i = 0; i < count_; ++i)
    out.push_back(encode_raw(data_.data() + i * static_cast<std::uint64_t>(arity_)));
  std::sort(out.begin(), out.end());
  return out;
}

bool TupleRelation::set_equal(const TupleRelation& other) const {
  if (arity_ != other.arity_ || base_ != other.base_ || count_ != other.count_) return false;
  for (std::uint64_t i = 0; i < count_; ++i) {
    auto t = tuple(i);
    if (!other.contains(t)) return false;
  }
  return true;
}

namespace {

// Enumerates k-tuples of indices over [0..forced] that contain `forced` at
// least once. `first` marks the first occurrence of `forced`; positions before
// it range over [0, forced-1], positions after it over [0, forced].
template <class Fn>
void for_arg_tuples(int k, std::uint64_t forced, Fn&& fn) {
  std::vector<std::uint64_t> w(k, 0);
  for (int first = 0; first < k; ++first) {
    std::fill(w.begin(), w.end(), 0);
    w[first] = forced;
    std::vector<int> free_pos;
    std::vector<std::uint64_t> bounds;
    bool empty_range = false;
    for (int i = 0; i < k; ++i) {
      if (i == first) continue;
      free_pos.push_back(i);
      std::uint64_t b = i < first ? forced : forced + 1;
      if (b == 0) empty_range = true;
      bounds.push_back(b);
    }
    if (empty_range) continue;
    std::vector<std::uint64_t> cur(free_pos.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free_pos.size(); ++i) w[free_pos[i]] = cur[i];
      fn(w);
      std::size_t i = 0;
      for (; i < cur.size(); ++i) {
        if (++cur[i] < bounds[i]) break;
        cur[i] = 0;
      }
      if (i == cur.size()) break;
    }
  }
}

}  // namespace

void sg_close(const FiniteAlgebra& alg, TupleRelation& rel, const Limits& limits) {
  const int r = rel.arity();
  std::vector<int> result(r);
  // nullary operations first
  for (int o = 0; o < alg.op_count(); ++o) {
    if (alg.op_arity(o) != 0) continue;
    int c = alg.apply(o, {});
    std::vector<int> t(r, c);
    rel.insert(t);
  }
  std::uint64_t next = 0;
  while (next < rel.size()) {
    if (rel.is_full()) break;  // the full power is closed under everything
    const std::uint64_t cur = next++;
    for (int o = 0; o < alg.op_count(); ++o) {
      const int k = alg.op_arity(o);
      if (k == 0) continue;
      if (k > 8) throw ValidationError("operation arity above 8 unsupported in closure");
      for_arg_tuples(k, cur, [&](const std::vector<std::uint64_t>& idx) {
        for (int c = 0; c < r; ++c) {
          int a[8];
          for (int j = 0; j < k; ++j) a[j] = rel.tuple_raw(idx[j])[c];
          result[c] = alg.apply(o, std::span<const int>(a, k));
        }
        if (rel.insert(result) && rel.size() > limits.max_tuples)
          throw ResourceLimitError("subpower closure exceeded tuple cap", rel.size());
      });
    }
  }
}

TupleRelation sg_power(const FiniteAlgebra& alg, int arity,
                       const std::vector<std::vector<int>>& generators,
                       const Limits& limits) {
  TupleRelation rel(arity, alg.size());
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != arity) throw ValidationError("generator arity mismatch");
    rel.insert(g);
  }
  sg_close(alg, rel, limits);
  return rel;
}

}  // namespace hicomm
