#include "hicomm/clone.hpp"

#include <algorithm>
#include <random>

namespace hicomm {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << 62) / std::max<std::uint64_t>(b, 1))
      throw ResourceLimitError("table space overflow", r);
    r *= b;
  }
  return r;
}

bool table_less(const OperationTable& a, const OperationTable& b) {
  if (a.arity != b.arity) return a.arity < b.arity;
  return a.table < b.table;
}

FiniteAlgebra expand(const FiniteAlgebra& alg, const std::vector<OperationTable>& extra,
                     const std::string& name, const Limits& limits) {
  std::vector<OperationTable> ops = alg.ops();
  int id = 0;
  for (OperationTable t : extra) {
    t.symbol = "p" + std::to_string(id++);
    ops.push_back(std::move(t));
  }
  return FiniteAlgebra(name, alg.size(), std::move(ops), limits);
}

// all nonempty subsets of {0..n-1}, as index lists
std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::uint64_t relation_fingerprint(const TupleRelation& r) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(r.arity()));
  mix(static_cast<std::uint64_t>(r.base()));
  if (r.codes_fit()) {
    for (std::uint64_t c : r.sorted_codes()) mix(c);
  } else {
    std::vector<std::string> rows;
    for (std::uint64_t i = 0; i < r.size(); ++i) {
      auto raw = r.tuple_raw(i);
      rows.emplace_back(raw.begin(), raw.end());
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& row : rows)
      for (unsigned char c : row) mix(c);
  }
  return h;
}

bool PolymorphismSet::contains(int arity, std::span<const int> table) const {
  for (const auto& t : tables)
    if (t.arity == arity && std::equal(t.table.begin(), t.table.end(), table.begin(), table.end()))
      return true;
  return false;
}

bool preserves(const TupleRelation& r, int arity, std::span<const int> table) {
  const int m = r.base();
  const int coords = r.arity();
  const std::uint64_t count = r.size();
  if (count == 0) return true;
  std::vector<std::uint64_t> pick(arity, 0);
  std::vector<int> out(coords);
  int a[8];
  if (arity > 8) throw ValidationError("operation arity above 8 unsupported");
  while (true) {
    for (int c = 0; c < coords; ++c) {
      std::size_t idx = 0;
      for (int j = 0; j < arity; ++j) {
        a[j] = r.tuple_raw(pick[j])[c];
        idx = idx * m + static_cast<std::size_t>(a[j]);
      }
      out[c] = table[idx];
    }
    if (!r.contains(out)) return false;
    int j = 0;
    for (; j < arity; ++j) {
      if (++pick[j] < count) break;
      pick[j] = 0;
    }
    if (j == arity) return true;
  }
}

PolymorphismSet polymorphisms(const TupleRelation& r, int b, const Limits& limits) {
  if (b < 1) throw ValidationError("arity bound must be at least 1");
  const int m = r.base();
  PolymorphismSet out;
  out.fingerprint = relation_fingerprint(r);
  out.arity_bound = b;
  for (int k = 1; k <= b; ++k) {
    const std::uint64_t cells = ipow(m, k);
    const std::uint64_t space = ipow(m, static_cast<int>(cells));
    if (space > limits.max_tuples)
      throw ResourceLimitError("polymorphism table space exceeds budget", space);
    std::vector<int> table(cells, 0);
    for (std::uint64_t code = 0; code < space; ++code) {
      std::uint64_t c = code;
      for (std::uint64_t i = cells; i-- > 0;) {
        table[i] = static_cast<int>(c % m);
        c /= m;
      }
      if (preserves(r, k, table)) {
        OperationTable t;
        t.symbol = "g" + std::to_string(out.tables.size());
        t.arity = k;
        t.table = table;
        t.base_ = m;
        out.tables.push_back(std::move(t));
      }
    }
  }
  std::sort(out.tables.begin(), out.tables.end(), table_less);
  return out;
}

CloneCheckReport check_largest_clone(AlgebraContext& ctx, std::span<const Congruence> args,
                                     int b, int samples, std::uint64_t seed) {
  if (args.empty()) throw ValidationError("check_largest_clone needs congruences");
  const FiniteAlgebra& alg = ctx.algebra();
  const int m = alg.size();
  const int n = static_cast<int>(args.size());

  CloneCheckReport rep;
  rep.arity_bound = b;
  CubeRelation d = delta(ctx, args);
  rep.delta_size = d.rel.size();
  PolymorphismSet pol = polymorphisms(d.rel, b, ctx.limits());
  rep.polymorphism_count = pol.tables.size();

  // (a) basic operations of arity <= b preserve Delta
  rep.basic_ops_ok = true;
  for (const auto& op : alg.ops()) {
    if (op.arity < 1 || op.arity > b) continue;
    if (!preserves(d.rel, op.arity, op.table)) {
      rep.basic_ops_ok = false;
      rep.witnesses.push_back("basic operation " + op.symbol + " is not a polymorphism");
    }
  }

  // (b) the generators close to exactly Delta under the polymorphism clone,
  // and every sub-tuple commutator is the same in the expanded algebra
  FiniteAlgebra wide = expand(FiniteAlgebra(alg.name() + "+pol", m, {}, ctx.limits()),
                              pol.tables, alg.name() + "+pol", ctx.limits());
  {
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < n; ++i)
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
          if (args[i].same(x, y)) gens.push_back(generator_tuple(i, n, x, y));
    TupleRelation closed = sg_power(wide, 1 << n, gens, ctx.limits());
    rep.closure_ok = closed.set_equal(d.rel);
    if (!rep.closure_ok)
      rep.witnesses.push_back("closure under Pol(Delta) produced " +
                              std::to_string(closed.size()) + " tuples, expected " +
                              std::to_string(d.rel.size()));
  }
  {
    AlgebraContext wide_ctx(expand(alg, pol.tables, alg.name() + "+pol", ctx.limits()),
                            ctx.limits());
    if (ctx.has_malcev()) wide_ctx.set_malcev_term(ctx.malcev_term());
    rep.commutators_ok = true;
    for (const auto& idx : subsets(n)) {
      std::vector<Congruence> sub;
      for (int i : idx) sub.push_back(args[i]);
      Congruence base = ctx.commutator(sub, CommutatorMethod::TermCondition);
      Congruence exp = wide_ctx.commutator(sub, CommutatorMethod::TermCondition);
      if (!(base == exp)) {
        rep.commutators_ok = false;
        rep.witnesses.push_back("commutator changed after expanding by Pol(Delta)");
      }
    }
  }

  // (c) maximality: random tables outside Pol(Delta) but preserving every
  // alpha_i must grow Delta and move some commutator
  std::mt19937_64 rng(seed);
  auto alpha_rel = [&](const Congruence& a) {
    TupleRelation r(2, m);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (a.same(x, y)) {
          int t[2] = {x, y};
          r.insert(t);
        }
    return r;
  };
  std::vector<TupleRelation> alpha_rels;
  for (const auto& a : args) alpha_rels.push_back(alpha_rel(a));

  std::uint64_t attempts = 0;
  while (rep.maximality_samples < samples) {
    if (++attempts > 200'000)
      throw ResourceLimitError("could not sample enough non-polymorphisms", attempts);
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(b));
    const std::uint64_t cells = ipow(m, k);
    std::vector<int> table(cells);
    for (auto& v : table) v = static_cast<int>(rng() % m);
    bool alphas_ok = true;
    for (const auto& r : alpha_rels)
      if (!preserves(r, k, table)) {
        alphas_ok = false;
        break;
      }
    if (!alphas_ok || preserves(d.rel, k, table)) continue;
    ++rep.maximality_samples;

    OperationTable g;
    g.symbol = "g";
    g.arity = k;
    g.table = table;
    AlgebraContext gctx(expand(alg, {g}, alg.name() + "+g", ctx.limits()), ctx.limits());
    if (ctx.has_malcev()) gctx.set_malcev_term(ctx.malcev_term());
    CubeRelation d2 = delta(gctx, args);
    bool grew = d2.rel.size() > d.rel.size();
    bool moved = false;
    for (const auto& idx : subsets(n)) {
      std::vector<Congruence> sub;
      for (int i : idx) sub.push_back(args[i]);
      if (!(ctx.commutator(sub, CommutatorMethod::TermCondition) ==
            gctx.commutator(sub, CommutatorMethod::TermCondition))) {
        moved = true;
        break;
      }
    }
    if (grew && moved) {
      ++rep.maximality_confirmed;
    } else {
      rep.witnesses.push_back(std::string("non-polymorphism sample ") +
                              (grew ? "did not move any commutator" : "did not grow Delta"));
    }
  }
  return rep;
}

PolymorphismSet largest_commutator_preserving_clone(AlgebraContext& ctx, int n_max, int b) {
  if (n_max < 1) throw ValidationError("n_max must be at least 1");
  const auto& L = ctx.lattice();
  const int N = L.count();

  PolymorphismSet result;
  bool first = true;
  std::vector<int> t;
  for (int n = 1; n <= n_max; ++n) {
    t.assign(n, 0);
    while (true) {
      std::vector<Congruence> args;
      for (int i : t) args.push_back(L.congruences[i]);
      CubeRelation d = delta(ctx, args);
      if (first) {
        result = polymorphisms(d.rel, b, ctx.limits());
        first = false;
      } else {
        std::erase_if(result.tables, [&](const OperationTable& g) {
          return !preserves(d.rel, g.arity, g.table);
        });
      }
      int j = 0;
      for (; j < n; ++j) {
        if (++t[j] < N) break;
        t[j] = 0;
      }
      if (j == n) break;
    }
  }
  result.fingerprint = 0;  // intersection over many relations
  result.arity_bound = b;
  if (b >= 3 && ctx.has_malcev()) {
    OperationTable q = term_table(ctx.algebra(), ctx.malcev_term(), 3, "q");
    if (!result.contains(3, q.table))
      throw ValidationError("Mal'cev table missing from the clone intersection");
  }
  return result;
}

}  // namespace hicomm
