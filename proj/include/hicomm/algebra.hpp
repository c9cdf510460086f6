// Finite algebras given by operation tables, and terms over them.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hicomm {

class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ResourceLimitError : public std::runtime_error {
public:
  ResourceLimitError(const std::string& what, std::uint64_t reached)
      : std::runtime_error(what), reached_size(reached) {}
  std::uint64_t reached_size;
};

// Resource guards; all overridable from the CLI.
struct Limits {
  std::uint64_t max_tuples = 5'000'000;
  // congruence generation on a subpower costs ~|support|^2 steps per
  // operation; supports above this are refused
  std::uint64_t max_cg_support = 20'000;
  int max_op_arity = 4;
  int max_carrier = 12;
};

// A k-ary operation as a flat table, row-major with the leftmost
// argument most significant.
struct OperationTable {
  std::string symbol;
  int arity = 0;
  std::vector<int> table;

  int apply(std::span<const int> args) const {
    std::size_t idx = 0;
    for (int i = 0; i < arity; ++i) idx = idx * base_ + static_cast<std::size_t>(args[i]);
    return table[idx];
  }

  int base_ = 0;  // carrier size, filled in by FiniteAlgebra validation
};

struct Term {
  // var >= 0 means Variable(var); otherwise Apply(symbol, children).
  int var = -1;
  std::string symbol;
  std::vector<Term> children;

  static Term variable(int i) {
    Term t;
    t.var = i;
    return t;
  }
  static Term apply(std::string sym, std::vector<Term> ch) {
    Term t;
    t.symbol = std::move(sym);
    t.children = std::move(ch);
    return t;
  }
  bool is_var() const { return var >= 0; }
  int max_var() const;
};

class FiniteAlgebra {
public:
  FiniteAlgebra() = default;
  FiniteAlgebra(std::string name, int size, std::vector<OperationTable> ops,
                const Limits& limits = {});

  int size() const { return size_; }
  const std::string& name() const { return name_; }
  int op_count() const { return static_cast<int>(ops_.size()); }
  int op_arity(int op) const { return ops_[op].arity; }
  const OperationTable& op(int i) const { return ops_[i]; }
  const std::vector<OperationTable>& ops() const { return ops_; }

  int apply(int op, std::span<const int> args) const { return ops_[op].apply(args); }
  int op_index(const std::string& symbol) const;  // -1 if absent

  // Returns a copy with every element appended as a nullary operation c0..c{m-1}.
  FiniteAlgebra with_constants() const;

private:
  std::string name_;
  int size_ = 0;
  std::vector<OperationTable> ops_;
};

int eval_term(const FiniteAlgebra& alg, const Term& t, std::span<const int> assignment);

// Builds the value table of the term operation of arity `arity`.
OperationTable term_table(const FiniteAlgebra& alg, const Term& t, int arity,
                          const std::string& symbol);

// Substitutes terms for variables: variable i becomes subs[i].
Term substitute(const Term& t, std::span<const Term> subs);

// Parenthesized prefix notation: term := var | "(" symbol term* ")", var := "x" digits.
Term parse_term(const std::string& text);
std::string term_to_string(const Term& t);

}  // namespace hicomm
