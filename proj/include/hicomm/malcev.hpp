// Mal'cev term discovery and strong cube terms.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hicomm/algebra.hpp"

namespace hicomm {

struct CubeTermWitness {
  int n = 0;
  Term term;  // arity 2^n - 1
  bool verified = false;
  bool exhaustive = false;       // identities checked over all assignments
  std::uint64_t samples = 0;     // random assignments per identity otherwise
};

struct CubeCheckResult {
  bool ok = true;
  int failed_identity = -1;
  std::vector<int> counterexample;  // assignment to the 2^{n-1} variable classes
};

// Searches the term clone for q with q(x,y,y)=x and q(x,x,y)=y via closure of
// the three projections restricted to the (a,b,b)/(a,a,b) columns, recording a
// producing term per tuple. Returns nullopt only when the full closure was
// explored without reaching the target.
std::optional<Term> find_malcev_term(const FiniteAlgebra& alg, const Limits& limits = {});

bool verify_malcev(const FiniteAlgebra& alg, const Term& q);

// q2(x0,x1,x2) = q(x1,x0,x2), then
// q_{k+1}(x_0..x_{2^{k+1}-2}) = q2(q_k(x_0..), x_{2^k-1}, q_k(x_{2^k}..)).
CubeTermWitness strong_cube_term(const FiniteAlgebra& alg, int n, const Term& q,
                                 std::uint64_t seed = 0xC0FFEE);

CubeCheckResult verify_strong_cube(const FiniteAlgebra& alg, int n, const Term& term,
                                   std::uint64_t seed = 0xC0FFEE,
                                   std::uint64_t exhaustive_budget = std::uint64_t{1} << 20,
                                   std::uint64_t samples = 100'000);

// Mal'cev term recovered from a strong n-cube term: q(x,y,z) = q_n(y,..,y,x,z).
Term malcev_from_cube(const Term& qn, int n);

// Flat evaluator for repeated term evaluation.
class TermProgram {
public:
  TermProgram(const FiniteAlgebra& alg, const Term& t);
  int eval(std::span<const int> assignment) const;

private:
  struct Instr {
    int op;  // -1-v for variable v, else operation index
    int arity;
  };
  const FiniteAlgebra* alg_;
  std::vector<Instr> code_;
  mutable std::vector<int> stack_;
};

}  // namespace hicomm
