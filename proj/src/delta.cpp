#include "hicomm/delta.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <unordered_map>

namespace hicomm {

namespace {

std::string part_key(const Partition& p) {
  std::string s(p.block_of.begin(), p.block_of.end());
  return s;
}

std::string args_key(std::span<const Congruence> args) {
  std::string s;
  for (const auto& a : args) {
    s += part_key(a);
    s.push_back('|');
  }
  return s;
}

void validate_args(const FiniteAlgebra& alg, std::span<const Congruence> args) {
  for (const auto& a : args) {
    if (a.size() != alg.size()) throw ValidationError("congruence is on the wrong carrier");
    if (!is_congruence(alg, a)) throw ValidationError("argument partition is not a congruence");
  }
}

std::vector<std::vector<int>> indices_by_block(const Partition& p) {
  std::vector<std::vector<int>> by(p.num_blocks);
  for (int i = 0; i < p.size(); ++i) by[p.block_of[i]].push_back(i);
  return by;
}

std::uint64_t pair_count(const Partition& p) {
  std::vector<std::uint64_t> sz(p.num_blocks, 0);
  for (int b : p.block_of) ++sz[b];
  std::uint64_t total = 0;
  for (auto s : sz) total += s * s;
  return total;
}

DeltaTower::Level base_level(const FiniteAlgebra& alg, const Congruence& alpha) {
  DeltaTower::Level lvl;
  std::vector<std::uint8_t> flat(alg.size());
  for (int i = 0; i < alg.size(); ++i) flat[i] = static_cast<std::uint8_t>(i);
  lvl.support = std::make_shared<SubpowerAlgebra>(alg, 1, std::move(flat));
  lvl.pairing = alpha;
  lvl.tuple_count = pair_count(alpha);
  return lvl;
}

DeltaTower::Level next_level(const FiniteAlgebra& alg, const DeltaTower::Level& prev,
                             const Congruence& alpha, const Limits& limits) {
  const std::uint64_t count = prev.tuple_count;
  const int arity2 = prev.support->arity() * 2;
  if (count > limits.max_tuples)
    throw ResourceLimitError("delta level exceeds tuple cap", count);
  if (count > limits.max_cg_support)
    throw ResourceLimitError("delta support too large for congruence generation", count);

  std::vector<std::uint8_t> flat;
  flat.reserve(count * static_cast<std::uint64_t>(arity2));
  for (const auto& block : indices_by_block(prev.pairing))
    for (int x : block)
      for (int y : block) {
        auto ex = prev.support->element(x);
        auto ey = prev.support->element(y);
        flat.insert(flat.end(), ex.begin(), ex.end());
        flat.insert(flat.end(), ey.begin(), ey.end());
      }

  DeltaTower::Level lvl;
  lvl.support = std::make_shared<SubpowerAlgebra>(alg, arity2, std::move(flat));

  // pairing = Cg of the constant-tuple pairs coming from alpha's generators
  auto const_index = [&](int a) {
    std::uint64_t c = 0;
    for (int j = 0; j < arity2; ++j) c = c * alg.size() + static_cast<std::uint64_t>(a);
    int idx = lvl.support->index_of_code(c);
    if (idx < 0) throw ValidationError("diagonal tuple missing from delta support");
    return idx;
  };
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : alpha.generating_pairs()) pairs.emplace_back(const_index(a), const_index(b));
  lvl.pairing = cg_generic(*lvl.support, pairs);
  lvl.tuple_count = pair_count(lvl.pairing);
  return lvl;
}

}  // namespace

bool DeltaTower::contains(std::span<const int> tuple) const {
  const auto& lvl = levels.back();
  const int half = lvl.support->arity();
  if (static_cast<int>(tuple.size()) != 2 * half)
    throw ValidationError("tuple arity does not match delta");
  const int m = alg->size();
  for (int v : tuple)
    if (v < 0 || v >= m) throw ValidationError("tuple entry out of carrier");
  std::uint64_t clo = 0, chi = 0;
  for (int j = 0; j < half; ++j) {
    clo = clo * m + static_cast<std::uint64_t>(tuple[j]);
    chi = chi * m + static_cast<std::uint64_t>(tuple[half + j]);
  }
  int x = lvl.support->index_of_code(clo);
  int y = lvl.support->index_of_code(chi);
  if (x < 0 || y < 0) return false;
  return lvl.pairing.same(x, y);
}

PairSet DeltaTower::forks_at(int j) const {
  const auto& lvl = levels.back();
  const auto& sp = *lvl.support;
  const int h = sp.arity();
  if (j < 0 || j >= h) throw ValidationError("fork coordinate out of range");
  // pairs (e(x)[j], e(y)[j]) for x,y in one pairing block differing only off j
  std::unordered_map<std::string, std::vector<int>> groups;
  for (int i = 0; i < sp.size(); ++i) {
    auto e = sp.element(i);
    std::string key;
    key.reserve(h - 1);
    for (int c = 0; c < h; ++c)
      if (c != j) key.push_back(static_cast<char>(e[c]));
    groups[key].push_back(i);
  }
  std::set<std::pair<int, int>> out;
  for (auto& [key, idxs] : groups)
    for (int x : idxs)
      for (int y : idxs)
        if (lvl.pairing.same(x, y)) out.emplace(sp.element(x)[j], sp.element(y)[j]);
  return PairSet(out.begin(), out.end());
}

CubeRelation DeltaTower::materialize(const Limits& limits) const {
  const auto& lvl = levels.back();
  if (lvl.tuple_count > limits.max_tuples)
    throw ResourceLimitError("materialized delta exceeds tuple cap", lvl.tuple_count);
  const int h = lvl.support->arity();
  CubeRelation out;
  out.dim = n();
  out.rel = TupleRelation(2 * h, alg->size());
  std::vector<int> t(2 * h);
  for (const auto& block : indices_by_block(lvl.pairing))
    for (int x : block)
      for (int y : block) {
        auto ex = lvl.support->element(x);
        auto ey = lvl.support->element(y);
        for (int c = 0; c < h; ++c) {
          t[c] = ex[c];
          t[h + c] = ey[c];
        }
        out.rel.insert(t);
      }
  return out;
}

AlgebraContext::AlgebraContext(FiniteAlgebra alg, Limits limits)
    : alg_(std::move(alg)), limits_(limits) {}

const CongruenceLattice& AlgebraContext::lattice() {
  if (!lattice_) lattice_ = con_lattice(alg_, limits_);
  return *lattice_;
}

bool AlgebraContext::has_malcev() {
  if (!malcev_searched_) {
    malcev_searched_ = true;
    malcev_ = find_malcev_term(alg_, limits_);
  }
  return malcev_.has_value();
}

const Term& AlgebraContext::malcev_term() {
  if (!has_malcev()) throw ValidationError("algebra has no Mal'cev term");
  return *malcev_;
}

void AlgebraContext::set_malcev_term(const Term& q) {
  if (!verify_malcev(alg_, q)) throw ValidationError("supplied term is not Mal'cev");
  malcev_searched_ = true;
  malcev_ = q;
}

const CubeTermWitness& AlgebraContext::cube_witness(int n) {
  auto it = cube_.find(n);
  if (it == cube_.end()) it = cube_.emplace(n, strong_cube_term(alg_, n, malcev_term())).first;
  return it->second;
}

std::shared_ptr<const DeltaTower> AlgebraContext::delta_tower(std::span<const Congruence> args) {
  if (args.empty()) throw ValidationError("delta tower needs at least one congruence");
  validate_args(alg_, args);
  if (!has_malcev()) throw ValidationError("delta tower requires a Mal'cev term");
  const std::string key = args_key(args);
  if (auto it = towers_.find(key); it != towers_.end()) return it->second;

  // longest memoized prefix, building (and caching) the rest level by level
  std::size_t have = 0;
  std::shared_ptr<const DeltaTower> base;
  for (std::size_t j = args.size() - 1; j >= 1; --j) {
    auto it = towers_.find(args_key(args.subspan(0, j)));
    if (it != towers_.end()) {
      have = j;
      base = it->second;
      break;
    }
  }
  auto tower = std::make_shared<DeltaTower>();
  tower->alg = &alg_;
  if (base) {
    tower->args.assign(base->args.begin(), base->args.end());
    tower->levels = base->levels;
  }
  for (std::size_t j = have; j < args.size(); ++j) {
    tower->args.push_back(args[j]);
    tower->levels.push_back(j == 0 ? base_level(alg_, args[j])
                                   : next_level(alg_, tower->levels.back(), args[j], limits_));
    towers_.emplace(args_key(std::span<const Congruence>(tower->args)),
                    std::make_shared<DeltaTower>(*tower));
  }
  return towers_.at(key);
}

Congruence AlgebraContext::commutator(std::span<const Congruence> args,
                                      CommutatorMethod method) {
  if (args.empty()) throw ValidationError("commutator needs at least one congruence");
  std::string key = args_key(args);
  key.push_back(method == CommutatorMethod::Forks ? 'F' : 'T');
  if (auto it = comm_memo_.find(key); it != comm_memo_.end()) return it->second;
  Congruence c = method == CommutatorMethod::Forks ? commutator_forks(*this, args)
                                                   : commutator_termcond(*this, args);
  comm_memo_.emplace(std::move(key), c);
  return c;
}

CubeRelation delta_generic(const FiniteAlgebra& alg, std::span<const Congruence> args,
                           const Limits& limits) {
  const int n = static_cast<int>(args.size());
  validate_args(alg, args);
  CubeRelation out;
  out.dim = n;
  if (n == 0) {
    out.rel = TupleRelation(1, alg.size());
    for (int a = 0; a < alg.size(); ++a) {
      int t[1] = {a};
      out.rel.insert(t);
    }
    return out;
  }
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < alg.size(); ++a)
      for (int b = 0; b < alg.size(); ++b)
        if (args[i].same(a, b)) gens.push_back(generator_tuple(i, n, a, b));
  out.rel = sg_power(alg, 1 << n, gens, limits);
  return out;
}

CubeRelation delta(AlgebraContext& ctx, std::span<const Congruence> args, bool force_generic) {
  if (!args.empty() && !force_generic && ctx.has_malcev())
    return ctx.delta_tower(args)->materialize(ctx.limits());
  return delta_generic(ctx.algebra(), args, ctx.limits());
}

bool delta_contains(AlgebraContext& ctx, std::span<const Congruence> args,
                    std::span<const int> tuple) {
  if (args.empty()) {
    if (tuple.size() != 1) throw ValidationError("tuple arity does not match delta");
    return tuple[0] >= 0 && tuple[0] < ctx.algebra().size();
  }
  if (ctx.has_malcev()) return ctx.delta_tower(args)->contains(tuple);
  return delta_generic(ctx.algebra(), args, ctx.limits()).rel.contains(tuple);
}

PairSet delta_forks(AlgebraContext& ctx, std::span<const Congruence> args, int coord) {
  const int n = static_cast<int>(args.size());
  if (n == 0) throw ValidationError("forks need at least one congruence");
  if (coord < 0 || coord >= (1 << n)) throw ValidationError("fork coordinate out of range");
  const int half = 1 << (n - 1);
  if (ctx.has_malcev())
    return ctx.delta_tower(args)->forks_at(coord < half ? coord : coord - half);
  return forks(delta_generic(ctx.algebra(), args, ctx.limits()).rel, coord);
}

namespace {

Partition partition_from_pairs(int m, const PairSet& pairs) {
  UnionFind uf(m);
  for (auto [a, b] : pairs) uf.merge(a, b);
  return Partition::from_union_find(uf, m);
}

// Term-condition violations of gamma against Delta(args): pairs of last
// coordinates where all earlier coordinate pairs lie in gamma but the last
// does not. Scans the tower when available, the explicit relation otherwise.
std::vector<std::pair<int, int>> termcond_violations(AlgebraContext& ctx,
                                                     std::span<const Congruence> args,
                                                     const Partition& gamma,
                                                     bool* any = nullptr) {
  std::vector<std::pair<int, int>> out;
  auto scan_pair = [&](std::span<const std::uint8_t> x, std::span<const std::uint8_t> y,
                       int h) {
    for (int i = 0; i + 1 < h; ++i)
      if (!gamma.same(x[i], y[i])) return;
    if (!gamma.same(x[h - 1], y[h - 1])) {
      out.emplace_back(x[h - 1], y[h - 1]);
      if (any) *any = true;
    }
  };
  if (ctx.has_malcev()) {
    auto tower = ctx.delta_tower(args);
    const auto& lvl = tower->levels.back();
    const int h = lvl.support->arity();
    for (const auto& block : indices_by_block(lvl.pairing))
      for (std::size_t xi = 0; xi < block.size(); ++xi)
        for (std::size_t yi = xi + 1; yi < block.size(); ++yi) {
          scan_pair(lvl.support->element(block[xi]), lvl.support->element(block[yi]), h);
          if (any && *any) return out;
        }
  } else {
    auto rel = delta_generic(ctx.algebra(), args, ctx.limits());
    const int h = 1 << (rel.dim - 1);
    for (std::uint64_t i = 0; i < rel.rel.size(); ++i) {
      auto raw = rel.rel.tuple_raw(i);
      scan_pair(raw.subspan(0, h), raw.subspan(h, h), h);
      if (any && *any) return out;
    }
  }
  return out;
}

}  // namespace

Congruence commutator_forks(AlgebraContext& ctx, std::span<const Congruence> args) {
  const int n = static_cast<int>(args.size());
  if (n == 0) throw ValidationError("commutator needs at least one congruence");
  if (!ctx.has_malcev())
    throw ValidationError(
        "the forks method needs a Mal'cev term; use the term-condition method instead");
  const int m = ctx.algebra().size();
  PairSet pairs = delta_forks(ctx, args, (1 << n) - 1);
  Partition result = partition_from_pairs(m, pairs);
  // the fork set must already be an equivalence on its carrier ...
  std::set<std::pair<int, int>> have(pairs.begin(), pairs.end());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (result.same(a, b) && !have.count({a, b}))
        throw ValidationError("fork relation at the last coordinate is not transitive: pair (" +
                              std::to_string(a) + "," + std::to_string(b) + ") missing");
  // ... and compatible with the operations
  if (!is_congruence(ctx.algebra(), result))
    throw ValidationError("fork relation at the last coordinate is not a congruence");
  return result;
}

Congruence commutator_termcond(AlgebraContext& ctx, std::span<const Congruence> args) {
  const int n = static_cast<int>(args.size());
  if (n == 0) throw ValidationError("commutator needs at least one congruence");
  validate_args(ctx.algebra(), args);
  Partition gamma = Partition::identity(ctx.algebra().size());
  while (true) {
    auto bad = termcond_violations(ctx, args, gamma);
    if (bad.empty()) return gamma;
    auto pairs = gamma.generating_pairs();
    pairs.insert(pairs.end(), bad.begin(), bad.end());
    gamma = cg(ctx.algebra(), pairs);
  }
}

bool centralizes(AlgebraContext& ctx, std::span<const Congruence> args,
                 const Congruence& gamma) {
  if (args.empty()) throw ValidationError("centralizing needs at least one congruence");
  validate_args(ctx.algebra(), args);
  if (gamma.size() != ctx.algebra().size())
    throw ValidationError("gamma is on the wrong carrier");
  if (!is_congruence(ctx.algebra(), gamma))
    throw ValidationError("gamma is not a congruence");
  bool any = false;
  termcond_violations(ctx, args, gamma, &any);
  return !any;
}

bool delta_membership(AlgebraContext& ctx, std::span<const int> tuple,
                      std::span<const Congruence> args) {
  const int n = static_cast<int>(args.size());
  if (static_cast<int>(tuple.size()) != (1 << n))
    throw ValidationError("tuple arity does not match delta");
  for (int v : tuple)
    if (v < 0 || v >= ctx.algebra().size()) throw ValidationError("tuple entry out of carrier");
  validate_args(ctx.algebra(), args);

  std::function<bool(std::vector<int>, std::vector<int>)> member =
      [&](std::vector<int> t, std::vector<int> idxs) -> bool {
    const int k = static_cast<int>(idxs.size());
    if (k == 0) return true;
    if (k == 1) return args[idxs[0]].same(t[0], t[1]);
    for (int j = 0; j < k; ++j) {
      std::vector<int> face;
      for (int c = 0; c < (1 << k); ++c)
        if (cube_bit(c, j) == 0) face.push_back(t[c]);
      std::vector<int> rest;
      for (int i = 0; i < k; ++i)
        if (i != j) rest.push_back(idxs[i]);
      if (!member(std::move(face), std::move(rest))) return false;
    }
    std::vector<Congruence> sub;
    for (int i : idxs) sub.push_back(args[i]);
    Congruence comm = ctx.commutator(sub, CommutatorMethod::Forks);
    const Term& qk = ctx.cube_witness(k).term;
    int val = eval_term(ctx.algebra(), qk, std::span<const int>(t.data(), t.size() - 1));
    return comm.same(val, t.back());
  };

  std::vector<int> idxs(n);
  for (int i = 0; i < n; ++i) idxs[i] = i;
  return member(std::vector<int>(tuple.begin(), tuple.end()), std::move(idxs));
}

std::optional<int> supernilpotence_degree(AlgebraContext& ctx, int k_max) {
  if (k_max < 1) throw ValidationError("k_max must be at least 1");
  const int m = ctx.algebra().size();
  const Congruence one = Partition::full(m);
  const Congruence zero = Partition::identity(m);
  // HC8 lower bound for [1,...,1] with k+1 arguments: the chain l <- [l, 1]
  // starting at [1,1]. A nonzero bound settles the question without building
  // the (k+1)-dimensional Delta, which grows quickly on non-nilpotent algebras.
  Congruence lower = one;
  for (int k = 1; k <= k_max; ++k) {
    std::vector<Congruence> pair = {lower, one};
    lower = ctx.commutator(pair, CommutatorMethod::Forks);
    if (!(lower == zero) && k >= 3) continue;
    std::vector<Congruence> args(k + 1, one);
    if (ctx.commutator(args, CommutatorMethod::Forks) == zero) return k;
  }
  return std::nullopt;
}

bool delta_join_check(AlgebraContext& ctx, std::span<const Congruence> prefix,
                      std::span<const Congruence> rhos) {
  if (rhos.empty()) throw ValidationError("join check needs at least one rho");
  validate_args(ctx.algebra(), prefix);
  validate_args(ctx.algebra(), rhos);
  Congruence joined = rhos[0];
  for (std::size_t i = 1; i < rhos.size(); ++i) joined = join(ctx.algebra(), joined, rhos[i]);

  std::vector<Congruence> lhs_args(prefix.begin(), prefix.end());
  lhs_args.push_back(joined);
  CubeRelation lhs = delta(ctx, lhs_args);

  TupleRelation acc(lhs.rel.arity(), ctx.algebra().size());
  for (const auto& rho : rhos) {
    std::vector<Congruence> a(prefix.begin(), prefix.end());
    a.push_back(rho);
    CubeRelation d = delta(ctx, a);
    std::vector<int> t(d.rel.arity());
    for (std::uint64_t i = 0; i < d.rel.size(); ++i) {
      auto raw = d.rel.tuple_raw(i);
      std::copy(raw.begin(), raw.end(), t.begin());
      acc.insert(t);
    }
  }
  sg_close(ctx.algebra(), acc, ctx.limits());
  return lhs.rel.set_equal(acc);
}

namespace {

std::string tuple_witness(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

std::vector<std::vector<int>> law_tuples(int count, int n, const HcOptions& opt) {
  std::uint64_t total = 1;
  bool exhaustive = true;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(count);
    if (total > opt.tuple_budget) {
      exhaustive = false;
      break;
    }
  }
  std::vector<std::vector<int>> out;
  if (exhaustive) {
    std::vector<int> t(n, 0);
    while (true) {
      out.push_back(t);
      int j = 0;
      for (; j < n; ++j) {
        if (++t[j] < count) break;
        t[j] = 0;
      }
      if (j == n) break;
    }
  } else {
    std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(n));
    for (std::uint64_t s = 0; s < opt.tuple_budget; ++s) {
      std::vector<int> t(n);
      for (int j = 0; j < n; ++j) t[j] = static_cast<int>(rng() % count);
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace

HcReport hc_suite(AlgebraContext& ctx, const HcOptions& opt) {
  if (opt.n_max < 2) throw ValidationError("hc_suite needs n_max >= 2");
  if (opt.malcev_laws && !ctx.has_malcev())
    throw ValidationError("HC4-HC8 need a Mal'cev term; rerun with malcev_laws=false");

  const auto& L = ctx.lattice();
  const int N = L.count();

  auto comm_idx = [&](const std::vector<int>& t) {
    std::vector<Congruence> args;
    args.reserve(t.size());
    for (int i : t) args.push_back(L.congruences[i]);
    int idx = L.index_of(ctx.commutator(args, opt.method));
    if (idx < 0) throw ValidationError("commutator fell outside the congruence lattice");
    return idx;
  };
  auto leq = [&](int i, int j) { return L.congruences[i].leq(L.congruences[j]); };

  HcReport report;
  auto law = [&](const std::string& name) -> HcLawResult& {
    HcLawResult r;
    r.law = name;
    report.laws.push_back(std::move(r));
    return report.laws.back();
  };
  auto fail = [&](HcLawResult& r, int n, const std::vector<int>& t, const std::string& msg) {
    if (r.pass) {
      r.pass = false;
      r.witness = "n=" + std::to_string(n) + " congs=" + tuple_witness(t) + ": " + msg;
    }
  };

  std::map<int, std::vector<std::vector<int>>> tuples;
  for (int n = 2; n <= opt.n_max; ++n) tuples[n] = law_tuples(N, n, opt);

  {
    auto& r = law("HC1");
    for (auto& [n, ts] : tuples)
      for (const auto& t : ts) {
        int meet = t[0];
        for (int i = 1; i < n; ++i) meet = L.meet_idx(meet, t[i]);
        ++r.checks;
        if (!leq(comm_idx(t), meet)) fail(r, n, t, "commutator above the meet");
      }
  }
  {
    auto& r = law("HC2");
    for (auto& [n, ts] : tuples)
      for (const auto& t : ts) {
        int c = comm_idx(t);
        for (int p = 0; p < n; ++p)
          for (int b = 0; b < N; ++b) {
            if (!leq(t[p], b)) continue;
            std::vector<int> t2 = t;
            t2[p] = b;
            ++r.checks;
            if (!leq(c, comm_idx(t2))) fail(r, n, t, "not monotone at position " +
                                                         std::to_string(p));
          }
      }
  }
  {
    auto& r = law("HC3");
    for (auto& [n, ts] : tuples)
      for (const auto& t : ts) {
        std::vector<int> rest(t.begin() + 1, t.end());
        int upper = rest.size() == 1 ? rest[0] : comm_idx(rest);
        ++r.checks;
        if (!leq(comm_idx(t), upper)) fail(r, n, t, "dropping the first argument decreased");
      }
  }

  if (!opt.malcev_laws) return report;

  {
    auto& r = law("HC4");
    for (auto& [n, ts] : tuples)
      for (const auto& t : ts) {
        std::vector<int> s = t;
        std::sort(s.begin(), s.end());
        ++r.checks;
        if (comm_idx(t) != comm_idx(s)) fail(r, n, t, "permutation changed the commutator");
      }
  }
  {
    auto& r = law("HC5");
    for (auto& [n, ts] : tuples)
      for (const auto& t : ts) {
        int c = comm_idx(t);
        std::vector<Congruence> args;
        for (int i : t) args.push_back(L.congruences[i]);
        for (int g = 0; g < N; ++g) {
          ++r.checks;
          bool cent = centralizes(ctx, args, L.congruences[g]);
          if (cent != leq(c, g))
            fail(r, n, t, "centralizing mod gamma=" + std::to_string(g) +
                              " disagrees with the inequality");
        }
      }
  }
  {
    auto& r = law("HC6");
    std::map<int, std::unique_ptr<AlgebraContext>> quotients;
    for (auto& [n, ts] : tuples)
      for (const auto& t : ts) {
        int meet = t[0];
        for (int i = 1; i < n; ++i) meet = L.meet_idx(meet, t[i]);
        for (int e = 0; e < N; ++e) {
          if (!leq(e, meet)) continue;
          const Congruence& eta = L.congruences[e];
          auto& q = quotients[e];
          if (!q) {
            q = std::make_unique<AlgebraContext>(quotient_algebra(ctx.algebra(), eta),
                                                 ctx.limits());
            q->set_malcev_term(ctx.malcev_term());  // identities pass to quotients
          }
          std::vector<Congruence> qargs;
          for (int i : t) qargs.push_back(quotient_congruence(eta, L.congruences[i]));
          Congruence lhs = q->commutator(qargs, opt.method);
          int cj = L.join_idx(comm_idx(t), e);
          Congruence rhs = quotient_congruence(eta, L.congruences[cj]);
          ++r.checks;
          if (!(lhs == rhs))
            fail(r, n, t, "quotient law failed at eta=" + std::to_string(e));
        }
      }
  }
  {
    auto& r = law("HC7");
    for (auto& [n, ts] : tuples) {
      std::set<std::vector<int>> prefixes;
      for (const auto& t : ts) prefixes.emplace(t.begin(), t.end() - 1);
      for (const auto& p : prefixes)
        for (int r1 = 0; r1 < N; ++r1)
          for (int r2 = r1; r2 < N; ++r2) {
            std::vector<int> a = p, b = p, j = p;
            a.push_back(r1);
            b.push_back(r2);
            j.push_back(L.join_idx(r1, r2));
            ++r.checks;
            if (L.join_idx(comm_idx(a), comm_idx(b)) != comm_idx(j))
              fail(r, n, j, "join law failed for rhos " + std::to_string(r1) + "," +
                                std::to_string(r2));
          }
    }
  }
  {
    auto& r = law("HC8");
    for (auto& [n, ts] : tuples)
      for (const auto& t : ts)
        for (int i = 1; i < n; ++i) {
          std::vector<int> inner(t.begin(), t.begin() + i);
          int ic = inner.size() == 1 ? inner[0] : comm_idx(inner);
          std::vector<int> nested = {ic};
          nested.insert(nested.end(), t.begin() + i, t.end());
          ++r.checks;
          if (!leq(comm_idx(nested), comm_idx(t)))
            fail(r, n, t, "nesting at i=" + std::to_string(i) + " exceeded");
        }
  }
  return report;
}

}  // namespace hicomm
