// Finite sets of fixed-arity tuples over a carrier, and subpower generation.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "hicomm/algebra.hpp"

namespace hicomm {

// Tuples are stored flattened in insertion order. Membership uses a dense
// bitset when base^arity <= 2^25, a hash set of ranked codes when the rank
// fits 63 bits, and a byte-string hash set otherwise (long tuples).
class TupleRelation {
public:
  TupleRelation() = default;
  TupleRelation(int arity, int base);

  int arity() const { return arity_; }
  int base() const { return base_; }
  std::uint64_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool insert(std::span<const int> tuple);  // true if new
  bool contains(std::span<const int> tuple) const;

  std::vector<int> tuple(std::uint64_t i) const;
  std::span<const std::uint8_t> tuple_raw(std::uint64_t i) const {
    return {data_.data() + i * static_cast<std::uint64_t>(arity_),
            static_cast<std::size_t>(arity_)};
  }

  // Rank of a tuple, leftmost coordinate most significant. Valid only when
  // codes fit (base^arity < 2^63).
  bool codes_fit() const { return codes_fit_; }
  // True when the relation is all of base^arity (only decidable when codes fit).
  bool is_full() const { return codes_fit_ && count_ == space_; }
  std::uint64_t encode(std::span<const int> tuple) const;
  std::vector<std::uint64_t> sorted_codes() const;

  bool set_equal(const TupleRelation& other) const;

private:
  enum class Mode { Dense, Hash64, HashBytes };

  std::uint64_t encode_raw(const std::uint8_t* t) const;

  int arity_ = 0;
  int base_ = 0;
  bool codes_fit_ = false;
  Mode mode_ = Mode::Hash64;
  std::uint64_t count_ = 0;
  std::uint64_t space_ = 0;  // base^arity when codes fit
  std::vector<std::uint8_t> data_;
  std::vector<std::uint64_t> dense_;
  std::unordered_set<std::uint64_t> hash64_;
  std::unordered_set<std::string> hash_bytes_;
};

// Smallest set containing the generators and closed under all operations of
// `alg` applied coordinatewise. Deterministic worklist order. Throws
// ResourceLimitError when the closure would exceed limits.max_tuples.
TupleRelation sg_power(const FiniteAlgebra& alg, int arity,
                       const std::vector<std::vector<int>>& generators,
                       const Limits& limits = {});

// Same closure, continuing from an existing set (used for subpower joins).
void sg_close(const FiniteAlgebra& alg, TupleRelation& rel, const Limits& limits = {});

}  // namespace hicomm
