// The 2^n-ary relation Delta(alpha_0..alpha_{n-1}), higher commutators by
// fork extraction and by the term-condition fixpoint, and the HC law suite.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hicomm/congruence.hpp"
#include "hicomm/hypercube.hpp"
#include "hicomm/malcev.hpp"

namespace hicomm {

enum class CommutatorMethod { Forks, TermCondition };

// Delta represented level by level: level j holds Delta(alpha_0..alpha_j) as
// an equivalence `pairing` on the tuples of the previous level (its lower
// face), which is a congruence of that subpower when the algebra is Mal'cev.
// Level 0 pairs carrier elements by alpha_0 itself.
struct DeltaTower {
  struct Level {
    std::shared_ptr<SubpowerAlgebra> support;  // tuples of the previous level, arity 2^j
    Partition pairing;                         // partition of support indices
    std::uint64_t tuple_count = 0;             // |Delta| at this level
  };
  const FiniteAlgebra* alg = nullptr;
  std::vector<Congruence> args;
  std::vector<Level> levels;  // levels.size() == args.size()

  int n() const { return static_cast<int>(levels.size()); }
  std::uint64_t tuple_count() const { return levels.back().tuple_count; }
  bool contains(std::span<const int> tuple) const;
  // Fork pairs derived from support coordinate j (equals psi_j and psi_{j+2^{n-1}}).
  PairSet forks_at(int j) const;
  CubeRelation materialize(const Limits& limits) const;
};

class AlgebraContext {
public:
  explicit AlgebraContext(FiniteAlgebra alg, Limits limits = {});

  const FiniteAlgebra& algebra() const { return alg_; }
  const Limits& limits() const { return limits_; }

  const CongruenceLattice& lattice();
  bool has_malcev();
  const Term& malcev_term();  // throws when the algebra has none
  void set_malcev_term(const Term& q);  // pre-verified external witness
  const CubeTermWitness& cube_witness(int n);

  std::shared_ptr<const DeltaTower> delta_tower(std::span<const Congruence> args);
  Congruence commutator(std::span<const Congruence> args, CommutatorMethod method);

private:
  FiniteAlgebra alg_;
  Limits limits_;
  std::optional<CongruenceLattice> lattice_;
  bool malcev_searched_ = false;
  std::optional<Term> malcev_;
  std::map<int, CubeTermWitness> cube_;
  std::map<std::string, std::shared_ptr<const DeltaTower>> towers_;
  std::map<std::string, Congruence> comm_memo_;
};

// Explicit Delta as a tuple set. Uses the tower when a Mal'cev term is
// available, otherwise (or when force_generic) the subpower closure of the
// generator tuples. n = args.size(); n = 0 yields all 1-tuples.
CubeRelation delta(AlgebraContext& ctx, std::span<const Congruence> args,
                   bool force_generic = false);
CubeRelation delta_generic(const FiniteAlgebra& alg, std::span<const Congruence> args,
                           const Limits& limits);

bool delta_contains(AlgebraContext& ctx, std::span<const Congruence> args,
                    std::span<const int> tuple);

// psi at an arbitrary cube coordinate, without materializing when possible.
PairSet delta_forks(AlgebraContext& ctx, std::span<const Congruence> args, int coord);

Congruence commutator_forks(AlgebraContext& ctx, std::span<const Congruence> args);
Congruence commutator_termcond(AlgebraContext& ctx, std::span<const Congruence> args);

// True iff alpha_0..alpha_{n-2} centralize alpha_{n-1} modulo gamma.
bool centralizes(AlgebraContext& ctx, std::span<const Congruence> args,
                 const Congruence& gamma);

// Membership via the strong-cube-term characterization (independent of the
// closure-based Delta).
bool delta_membership(AlgebraContext& ctx, std::span<const int> tuple,
                      std::span<const Congruence> args);

// Smallest k with [1,...,1] (k+1 arguments) = 0, or nullopt up to k_max.
std::optional<int> supernilpotence_degree(AlgebraContext& ctx, int k_max);

// Delta(prefix, join rhos) == subpower join of the Delta(prefix, rho_i).
bool delta_join_check(AlgebraContext& ctx, std::span<const Congruence> prefix,
                      std::span<const Congruence> rhos);

struct HcLawResult {
  std::string law;
  bool pass = true;
  std::uint64_t checks = 0;
  std::string witness;  // empty when passing
};

struct HcReport {
  std::vector<HcLawResult> laws;
  bool all_pass() const {
    for (const auto& l : laws)
      if (!l.pass) return false;
    return true;
  }
};

struct HcOptions {
  int n_max = 3;
  bool malcev_laws = true;  // HC4-HC8 need a Mal'cev term
  CommutatorMethod method = CommutatorMethod::Forks;
  std::uint64_t tuple_budget = 200'000;  // sample above this many tuples
  std::uint64_t seed = 42;
};

HcReport hc_suite(AlgebraContext& ctx, const HcOptions& opt);

}  // namespace hicomm
