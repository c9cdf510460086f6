// Bounded-arity polymorphisms of Delta and the largest commutator-preserving
// clone checks.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hicomm/delta.hpp"

namespace hicomm {

struct PolymorphismSet {
  std::uint64_t fingerprint = 0;  // of the preserved relation(s)
  int arity_bound = 0;
  std::vector<OperationTable> tables;  // sorted by arity, then table entries

  bool contains(int arity, std::span<const int> table) const;
};

std::uint64_t relation_fingerprint(const TupleRelation& r);

// Exact preservation: g applied coordinatewise to any k tuples of R stays in R.
bool preserves(const TupleRelation& r, int arity, std::span<const int> table);

// All operation tables of arity 1..b preserving R, by exhaustive enumeration.
PolymorphismSet polymorphisms(const TupleRelation& r, int b, const Limits& limits = {});

struct CloneCheckReport {
  int arity_bound = 0;
  std::uint64_t delta_size = 0;
  std::uint64_t polymorphism_count = 0;
  bool basic_ops_ok = false;       // (a) basic operations lie in Pol(Delta)
  bool closure_ok = false;         // (b) generators close to exactly Delta
  bool commutators_ok = false;     // (b) sub-tuple commutators survive the expansion
  int maximality_samples = 0;      // (c) non-polymorphisms tried
  int maximality_confirmed = 0;    //     of those, Delta grew and a commutator moved
  std::vector<std::string> witnesses;

  bool pass() const {
    return basic_ops_ok && closure_ok && commutators_ok &&
           maximality_confirmed == maximality_samples;
  }
};

// Checks that Pol(Delta(args)) behaves as the largest clone with these
// commutators, at arity bound b. `samples` non-polymorphisms (preserving every
// alpha_i, so the commutators stay defined) are tried for maximality.
CloneCheckReport check_largest_clone(AlgebraContext& ctx, std::span<const Congruence> args,
                                     int b, int samples = 20, std::uint64_t seed = 1);

// Intersection of Pol(Delta(tuple)) over all congruence tuples of length
// <= n_max. When b >= 3 and the algebra is Mal'cev, asserts the Mal'cev table
// is in the intersection.
PolymorphismSet largest_commutator_preserving_clone(AlgebraContext& ctx, int n_max, int b);

}  // namespace hicomm
