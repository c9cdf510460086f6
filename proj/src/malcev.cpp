#include "hicomm/malcev.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace hicomm {

namespace {

struct SearchEntry {
  int op = -1;               // -1 for a generator
  int gen = -1;              // generator index when op < 0
  std::vector<int> args;     // entry indices
};

Term rebuild_term(const FiniteAlgebra& alg, const std::vector<SearchEntry>& entries, int idx) {
  const auto& e = entries[idx];
  if (e.op < 0) return Term::variable(e.gen);
  std::vector<Term> children;
  children.reserve(e.args.size());
  for (int a : e.args) children.push_back(rebuild_term(alg, entries, a));
  return Term::apply(alg.op(e.op).symbol, std::move(children));
}

}  // namespace

std::optional<Term> find_malcev_term(const FiniteAlgebra& alg, const Limits& limits) {
  const int m = alg.size();
  // Columns: all triples (a,b,b) and (a,a,b); (a,a,a) listed once.
  std::vector<std::array<int, 3>> cols;
  std::vector<int> target;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      cols.push_back({a, b, b});
      target.push_back(a);
    }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;  // (a,a,a) already present as (a,b,b) with a=b
      cols.push_back({a, a, b});
      target.push_back(b);
    }
  const std::size_t C = cols.size();

  std::vector<std::string> tuples;  // flattened values over columns
  std::unordered_map<std::string, int> seen;
  std::vector<SearchEntry> entries;
  std::string tgt(C, '\0');
  for (std::size_t c = 0; c < C; ++c) tgt[c] = static_cast<char>(target[c]);

  auto add = [&](std::string t, SearchEntry e) -> int {
    auto [it, fresh] = seen.emplace(std::move(t), static_cast<int>(tuples.size()));
    if (!fresh) return -1;
    tuples.push_back(it->first);
    entries.push_back(std::move(e));
    return it->second;
  };

  for (int v = 0; v < 3; ++v) {
    std::string t(C, '\0');
    for (std::size_t c = 0; c < C; ++c) t[c] = static_cast<char>(cols[c][v]);
    SearchEntry e;
    e.gen = v;
    add(std::move(t), e);
  }
  {
    auto it = seen.find(tgt);
    if (it != seen.end()) {
      Term q = rebuild_term(alg, entries, it->second);
      if (!verify_malcev(alg, q)) throw ValidationError("malcev search produced a bad witness");
      return q;
    }
  }

  std::size_t next = 0;
  std::string out(C, '\0');
  int a[8];
  while (next < tuples.size()) {
    const std::size_t cur = next++;
    for (int o = 0; o < alg.op_count(); ++o) {
      const int k = alg.op_arity(o);
      if (k > 8) throw ValidationError("operation arity above 8 unsupported in search");
      // all k-tuples of entry indices in [0..cur] using cur at least once
      std::vector<std::size_t> idx(std::max(k, 1), 0);
      if (k == 0) {
        if (cur != 0) continue;  // constants only need one pass
        int c0 = alg.apply(o, {});
        std::fill(out.begin(), out.end(), static_cast<char>(c0));
        SearchEntry e;
        e.op = o;
        add(out, e);
        continue;
      }
      for (int first = 0; first < k; ++first) {
        bool done = false;
        std::vector<std::size_t> fill(k - 1, 0);
        std::vector<std::size_t> bounds;
        for (int i = 0, fi = 0; i < k; ++i) {
          if (i == first) continue;
          bounds.push_back(i < first ? cur : cur + 1);
          (void)fi;
        }
        if (std::find(bounds.begin(), bounds.end(), std::size_t{0}) != bounds.end()) continue;
        while (!done) {
          for (int i = 0, fi = 0; i < k; ++i) idx[i] = (i == first) ? cur : fill[fi++];
          for (std::size_t c = 0; c < C; ++c) {
            for (int j = 0; j < k; ++j) a[j] = static_cast<int>(tuples[idx[j]][c]);
            out[c] = static_cast<char>(alg.apply(o, std::span<const int>(a, k)));
          }
          SearchEntry e;
          e.op = o;
          e.args.assign(idx.begin(), idx.end());
          int fresh = add(out, std::move(e));
          if (fresh >= 0) {
            if (tuples.size() > limits.max_tuples)
              throw ResourceLimitError("Mal'cev search closure exceeded tuple cap",
                                       tuples.size());
            if (out == tgt) {
              Term q = rebuild_term(alg, entries, fresh);
              if (!verify_malcev(alg, q))
                throw ValidationError("malcev search produced a bad witness");
              return q;
            }
          }
          std::size_t i = 0;
          for (; i < fill.size(); ++i) {
            if (++fill[i] < bounds[i]) break;
            fill[i] = 0;
          }
          if (i == fill.size()) done = true;
        }
      }
    }
  }
  return std::nullopt;
}

bool verify_malcev(const FiniteAlgebra& alg, const Term& q) {
  const int m = alg.size();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      int v1[3] = {x, y, y};
      int v2[3] = {x, x, y};
      if (eval_term(alg, q, v1) != x) return false;
      if (eval_term(alg, q, v2) != y) return false;
    }
  return true;
}

namespace {

Term shift_vars(const Term& t, int offset) {
  if (t.is_var()) return Term::variable(t.var + offset);
  Term out;
  out.symbol = t.symbol;
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(shift_vars(c, offset));
  return out;
}

Term build_cube_term(const Term& q, int n) {
  // q2(x0,x1,x2) = q(x1,x0,x2)
  std::vector<Term> swap01 = {Term::variable(1), Term::variable(0), Term::variable(2)};
  Term q2 = substitute(q, swap01);
  Term qk = q2;
  for (int k = 2; k < n; ++k) {
    const int half = 1 << k;  // arity of q_k is half-1
    std::vector<Term> subs(3);
    subs[0] = qk;
    subs[1] = Term::variable(half - 1);
    subs[2] = shift_vars(qk, half);
    qk = substitute(q2, subs);
  }
  return qk;
}

}  // namespace

Term malcev_from_cube(const Term& qn, int n) {
  const int arity = (1 << n) - 1;
  std::vector<Term> subs(arity, Term::variable(1));
  subs[arity - 2] = Term::variable(0);
  subs[arity - 1] = Term::variable(2);
  return substitute(qn, subs);
}

CubeTermWitness strong_cube_term(const FiniteAlgebra& alg, int n, const Term& q,
                                 std::uint64_t seed) {
  if (n < 2) throw ValidationError("strong cube terms start at dimension 2");
  if (!verify_malcev(alg, q)) throw ValidationError("supplied term is not Mal'cev");
  CubeTermWitness w;
  w.n = n;
  w.term = build_cube_term(q, n);
  auto res = verify_strong_cube(alg, n, w.term, seed);
  if (!res.ok)
    throw ValidationError("constructed cube term failed verification at identity " +
                          std::to_string(res.failed_identity));
  w.verified = true;
  std::uint64_t assignments = 1;
  bool exhaustive = true;
  for (int i = 0; i < (1 << (n - 1)); ++i) {
    assignments *= static_cast<std::uint64_t>(alg.size());
    if (assignments > (std::uint64_t{1} << 20)) {
      exhaustive = false;
      break;
    }
  }
  w.exhaustive = exhaustive;
  w.samples = exhaustive ? 0 : 100'000;
  return w;
}

CubeCheckResult verify_strong_cube(const FiniteAlgebra& alg, int n, const Term& term,
                                   std::uint64_t seed, std::uint64_t exhaustive_budget,
                                   std::uint64_t samples) {
  const int m = alg.size();
  const int full = 1 << n;
  const int vars = 1 << (n - 1);
  TermProgram prog(alg, term);

  std::uint64_t total = 1;
  bool exhaustive = true;
  for (int i = 0; i < vars; ++i) {
    total *= static_cast<std::uint64_t>(m);
    if (total > exhaustive_budget) {
      exhaustive = false;
      break;
    }
  }

  std::vector<int> assign(vars, 0);
  std::vector<int> args(full - 1);
  auto check_one = [&](int identity) -> bool {
    // classes pair k with k xor 2^identity; representative has that bit clear
    const int bit = 1 << identity;
    for (int k = 0; k < full - 1; ++k) {
      int rep = k & ~bit;
      // class index: squeeze out digit `identity`
      int lo = rep & (bit - 1);
      int hi = (rep >> (identity + 1)) << identity;
      args[k] = assign[lo | hi];
    }
    int rhs_rep = (full - 1) & ~bit;
    int lo = rhs_rep & (bit - 1);
    int hi = (rhs_rep >> (identity + 1)) << identity;
    return prog.eval(args) == assign[lo | hi];
  };

  if (exhaustive) {
    for (int identity = 0; identity < n; ++identity) {
      std::fill(assign.begin(), assign.end(), 0);
      while (true) {
        if (!check_one(identity)) return {false, identity, assign};
        int j = 0;
        for (; j < vars; ++j) {
          if (++assign[j] < m) break;
          assign[j] = 0;
        }
        if (j == vars) break;
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int identity = 0; identity < n; ++identity)
      for (std::uint64_t s = 0; s < samples; ++s) {
        for (int j = 0; j < vars; ++j) assign[j] = static_cast<int>(rng() % m);
        if (!check_one(identity)) return {false, identity, assign};
      }
  }
  return {};
}

TermProgram::TermProgram(const FiniteAlgebra& alg, const Term& t) : alg_(&alg) {
  // postorder flatten
  struct Frame {
    const Term* node;
    std::size_t child = 0;
  };
  std::vector<Frame> stack{{&t}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.node->is_var()) {
      code_.push_back({-1 - f.node->var, 0});
      stack.pop_back();
      continue;
    }
    if (f.child < f.node->children.size()) {
      stack.push_back({&f.node->children[f.child++]});
      continue;
    }
    int op = alg.op_index(f.node->symbol);
    if (op < 0) throw ValidationError("unknown operation symbol " + f.node->symbol);
    code_.push_back({op, alg.op_arity(op)});
    stack.pop_back();
  }
}

int TermProgram::eval(std::span<const int> assignment) const {
  stack_.clear();
  for (const auto& ins : code_) {
    if (ins.op < 0) {
      stack_.push_back(assignment[-1 - ins.op]);
    } else {
      const int k = ins.arity;
      int v = alg_->apply(ins.op, std::span<const int>(stack_.data() + stack_.size() - k,
                                                       static_cast<std::size_t>(k)));
      stack_.resize(stack_.size() - k);
      stack_.push_back(v);
    }
  }
  return stack_.back();
}

}  // namespace hicomm
