#include "hicomm/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hicomm {

int Term::max_var() const {
  if (is_var()) return var;
  int m = -1;
  for (const auto& c : children) m = std::max(m, c.max_var());
  return m;
}

FiniteAlgebra::FiniteAlgebra(std::string name, int size, std::vector<OperationTable> ops,
                             const Limits& limits)
    : name_(std::move(name)), size_(size), ops_(std::move(ops)) {
  if (size_ <= 0) throw ValidationError("carrier size must be positive");
  if (size_ > limits.max_carrier)
    throw ValidationError("carrier size " + std::to_string(size_) + " exceeds bound " +
                          std::to_string(limits.max_carrier));
  std::set<std::string> seen;
  for (auto& op : ops_) {
    if (op.arity < 0) throw ValidationError("negative arity for " + op.symbol);
    if (op.arity > limits.max_op_arity)
      throw ValidationError("operation " + op.symbol + " has arity " +
                            std::to_string(op.arity) + " exceeding bound " +
                            std::to_string(limits.max_op_arity));
    if (!seen.insert(op.symbol).second)
      throw ValidationError("duplicate operation symbol " + op.symbol);
    std::size_t expect = 1;
    for (int i = 0; i < op.arity; ++i) expect *= static_cast<std::size_t>(size_);
    if (op.table.size() != expect)
      throw ValidationError("operation " + op.symbol + " table has " +
                            std::to_string(op.table.size()) + " entries, expected " +
                            std::to_string(expect));
    for (int v : op.table)
      if (v < 0 || v >= size_)
        throw ValidationError("operation " + op.symbol + " table entry out of range");
    op.base_ = size_;
  }
}

int FiniteAlgebra::op_index(const std::string& symbol) const {
  for (int i = 0; i < op_count(); ++i)
    if (ops_[i].symbol == symbol) return i;
  return -1;
}

FiniteAlgebra FiniteAlgebra::with_constants() const {
  auto ops = ops_;
  for (int a = 0; a < size_; ++a) {
    OperationTable c;
    c.symbol = "c" + std::to_string(a);
    c.arity = 0;
    c.table = {a};
    if (op_index(c.symbol) >= 0) continue;
    ops.push_back(std::move(c));
  }
  return FiniteAlgebra(name_ + "+consts", size_, std::move(ops));
}

int eval_term(const FiniteAlgebra& alg, const Term& t, std::span<const int> assignment) {
  if (t.is_var()) {
    if (t.var >= static_cast<int>(assignment.size()))
      throw ValidationError("variable x" + std::to_string(t.var) + " out of range");
    return assignment[t.var];
  }
  int op = alg.op_index(t.symbol);
  if (op < 0) throw ValidationError("unknown operation symbol " + t.symbol);
  if (alg.op_arity(op) != static_cast<int>(t.children.size()))
    throw ValidationError("arity mismatch at " + t.symbol);
  std::vector<int> args(t.children.size());
  for (std::size_t i = 0; i < t.children.size(); ++i)
    args[i] = eval_term(alg, t.children[i], assignment);
  return alg.apply(op, args);
}

OperationTable term_table(const FiniteAlgebra& alg, const Term& t, int arity,
                          const std::string& symbol) {
  OperationTable out;
  out.symbol = symbol;
  out.arity = arity;
  out.base_ = alg.size();
  std::size_t rows = 1;
  for (int i = 0; i < arity; ++i) rows *= static_cast<std::size_t>(alg.size());
  out.table.resize(rows);
  std::vector<int> args(arity, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t x = r;
    for (int i = arity - 1; i >= 0; --i) {
      args[i] = static_cast<int>(x % alg.size());
      x /= alg.size();
    }
    out.table[r] = eval_term(alg, t, args);
  }
  return out;
}

Term substitute(const Term& t, std::span<const Term> subs) {
  if (t.is_var()) {
    if (t.var >= static_cast<int>(subs.size()))
      throw ValidationError("substitution index out of range");
    return subs[t.var];
  }
  Term out;
  out.symbol = t.symbol;
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(substitute(c, subs));
  return out;
}

namespace {

void skip_ws(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

Term parse_term_at(const std::string& s, std::size_t& pos) {
  skip_ws(s, pos);
  if (pos >= s.size()) throw ValidationError("unexpected end of term text");
  if (s[pos] == '(') {
    ++pos;
    skip_ws(s, pos);
    std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '(' && s[pos] != ')')
      ++pos;
    if (pos == start) throw ValidationError("missing operation symbol at position " +
                                            std::to_string(start));
    Term t;
    t.symbol = s.substr(start, pos - start);
    skip_ws(s, pos);
    while (pos < s.size() && s[pos] != ')') {
      t.children.push_back(parse_term_at(s, pos));
      skip_ws(s, pos);
    }
    if (pos >= s.size()) throw ValidationError("missing ')' in term text");
    ++pos;
    return t;
  }
  if (s[pos] == 'x') {
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ValidationError("bad variable at position " + std::to_string(start));
    return Term::variable(std::stoi(s.substr(start, pos - start)));
  }
  throw ValidationError(std::string("unexpected character '") + s[pos] + "' in term text");
}

}  // namespace

Term parse_term(const std::string& text) {
  std::size_t pos = 0;
  Term t = parse_term_at(text, pos);
  skip_ws(text, pos);
  if (pos != text.size()) throw ValidationError("trailing characters in term text");
  return t;
}

std::string term_to_string(const Term& t) {
  if (t.is_var()) return "x" + std::to_string(t.var);
  std::string out = "(" + t.symbol;
  for (const auto& c : t.children) {
    out += ' ';
    out += term_to_string(c);
  }
  out += ')';
  return out;
}

}  // namespace hicomm
