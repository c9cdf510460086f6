#include "hicomm/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hicomm/clone.hpp"
#include "hicomm/delta.hpp"
#include "hicomm/io.hpp"
#include "hicomm/zoo.hpp"
#include "json.hpp"

namespace hicomm {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

struct CommonOpts {
  std::string algebra_spec;
  std::string congs;
  std::string congs_blocks;
  std::string method = "forks";
  std::string format = "json";
  int n = 3;
  int kmax = 3;
  int arity_bound = 0;  // 0 = pick a default from the carrier size
  int samples = 20;
  std::uint64_t max_tuples = Limits{}.max_tuples;
  std::uint64_t seed = 42;
  bool with_constants = false;
  bool force_generic = false;
  bool intersect = false;
  std::string gamma;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_algebra = true) {
  if (needs_algebra)
    cmd->add_option("algebra", o.algebra_spec, "zoo:<name> or a path to an algebra JSON file")
        ->required();
  cmd->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--max-tuples", o.max_tuples, "closure size cap");
  cmd->add_option("--seed", o.seed, "seed for sampled checks");
  cmd->add_flag("--with-constants", o.with_constants,
                "append every element as a nullary operation");
}

ParsedAlgebra load_algebra(const CommonOpts& o, const Limits& limits) {
  ParsedAlgebra parsed;
  if (o.algebra_spec.rfind("zoo:", 0) == 0) {
    parsed.algebra = zoo(o.algebra_spec.substr(4));
  } else {
    parsed = parse_algebra_file(o.algebra_spec, limits);
  }
  if (o.with_constants) parsed.algebra = parsed.algebra.with_constants();
  return parsed;
}

std::vector<int> parse_int_list(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      throw UsageError("bad integer '" + item + "' in list '" + s + "'");
    }
  }
  return out;
}

Congruence parse_blocks(const std::string& spec, const FiniteAlgebra& alg) {
  // "0,1|2,3" - blocks separated by '|', elements by ','
  std::vector<int> block_of(alg.size(), -1);
  int block = 0;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, '|')) {
    for (int e : parse_int_list(part, ',')) {
      if (e < 0 || e >= alg.size()) throw UsageError("element out of range in blocks: " + spec);
      if (block_of[e] != -1) throw UsageError("element listed twice in blocks: " + spec);
      block_of[e] = block;
    }
    ++block;
  }
  for (int i = 0; i < alg.size(); ++i)
    if (block_of[i] == -1) throw UsageError("element " + std::to_string(i) +
                                            " missing from blocks: " + spec);
  Congruence c{std::move(block_of)};
  if (!is_congruence(alg, c)) throw UsageError("partition " + spec + " is not a congruence");
  return c;
}

std::vector<Congruence> parse_congs(const CommonOpts& o, AlgebraContext& ctx) {
  if (!o.congs.empty() && !o.congs_blocks.empty())
    throw UsageError("give either --congs or --congs-blocks, not both");
  std::vector<Congruence> out;
  if (!o.congs.empty()) {
    const auto& L = ctx.lattice();
    for (int i : parse_int_list(o.congs, ',')) {
      if (i < 0 || i >= L.count())
        throw UsageError("congruence index " + std::to_string(i) + " out of range (lattice has " +
                         std::to_string(L.count()) + ")");
      out.push_back(L.congruences[i]);
    }
  } else if (!o.congs_blocks.empty()) {
    std::stringstream ss(o.congs_blocks);
    std::string part;
    while (std::getline(ss, part, ';')) out.push_back(parse_blocks(part, ctx.algebra()));
  } else {
    throw UsageError("this command needs --congs or --congs-blocks");
  }
  return out;
}

json partition_json(const Partition& p) {
  json j;
  j["num_blocks"] = p.num_blocks;
  j["blocks"] = p.blocks();
  return j;
}

void emit(std::ostream& out, const CommonOpts& o, const json& report) {
  if (o.format == "json") {
    out << report.dump(2) << "\n";
    return;
  }
  // text: flat rendering of the results object
  std::function<void(const std::string&, const json&)> walk = [&](const std::string& prefix,
                                                                  const json& j) {
    if (j.is_object()) {
      for (auto it = j.begin(); it != j.end(); ++it)
        walk(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
    } else {
      out << prefix << ": " << j.dump() << "\n";
    }
  };
  walk("", report["results"]);
}

json base_report(const std::vector<std::string>& argv, const FiniteAlgebra& alg) {
  json j;
  j["command"] = argv;
  j["algebra"]["name"] = alg.name();
  j["algebra"]["size"] = alg.size();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(algebra_fingerprint(alg)));
  j["algebra"]["fingerprint"] = std::string(buf);
  j["results"] = json::object();
  j["resources"] = json::object();
  return j;
}

CommutatorMethod method_of(const std::string& s) {
  if (s == "forks") return CommutatorMethod::Forks;
  if (s == "termcond") return CommutatorMethod::TermCondition;
  throw UsageError("unknown method: " + s);
}

int default_bound(int m) { return m == 2 ? 3 : m == 3 ? 2 : 1; }

json table_json(const OperationTable& t) {
  json j;
  j["symbol"] = t.symbol;
  j["arity"] = t.arity;
  j["table"] = t.table;
  return j;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"higher commutators of congruences on finite algebras"};
  app.require_subcommand(1);
  CommonOpts o;

  auto* c_con = app.add_subcommand("con", "congruence lattice in canonical order");
  add_common(c_con, o);

  auto* c_delta = app.add_subcommand("delta", "the 2^n-ary relation Delta");
  add_common(c_delta, o);
  c_delta->add_option("--congs", o.congs, "lattice indices, e.g. 1,2,2");
  c_delta->add_option("--congs-blocks", o.congs_blocks, "partition blocks, e.g. 0,1|2,3;0|1,2");
  c_delta->add_flag("--force-generic", o.force_generic, "use the plain subpower closure");

  auto* c_comm = app.add_subcommand("commutator", "higher commutator of a congruence tuple");
  add_common(c_comm, o);
  c_comm->add_option("--congs", o.congs, "lattice indices");
  c_comm->add_option("--congs-blocks", o.congs_blocks, "partition blocks");
  c_comm->add_option("--method", o.method, "forks|termcond|both")
      ->check(CLI::IsMember({"forks", "termcond", "both"}));

  auto* c_cent = app.add_subcommand("centralizes", "term condition modulo gamma");
  add_common(c_cent, o);
  c_cent->add_option("--congs", o.congs, "lattice indices of alpha_0..alpha_{n-1}");
  c_cent->add_option("--congs-blocks", o.congs_blocks, "partition blocks");
  c_cent->add_option("--gamma", o.gamma, "lattice index of gamma")->required();

  auto* c_sn = app.add_subcommand("supernilpotence", "least k with [1,...,1] (k+1 args) = 0");
  add_common(c_sn, o);
  c_sn->add_option("--kmax", o.kmax, "search bound");

  auto* c_mal = app.add_subcommand("malcev", "search for a Mal'cev term");
  add_common(c_mal, o);

  auto* c_cube = app.add_subcommand("cube-term", "strong n-cube term from the Mal'cev term");
  add_common(c_cube, o);
  c_cube->add_option("--n", o.n, "cube dimension");

  auto* c_hc = app.add_subcommand("hc-verify", "run the HC1-HC8 law suite");
  add_common(c_hc, o);
  c_hc->add_option("--n", o.n, "max tuple length");
  c_hc->add_option("--method", o.method, "forks|termcond")
      ->check(CLI::IsMember({"forks", "termcond"}));

  auto* c_pol = app.add_subcommand("pol-delta", "bounded-arity polymorphisms of Delta");
  add_common(c_pol, o);
  c_pol->add_option("--congs", o.congs, "lattice indices");
  c_pol->add_option("--congs-blocks", o.congs_blocks, "partition blocks");
  c_pol->add_option("--arity-bound", o.arity_bound, "max polymorphism arity");

  auto* c_lc = app.add_subcommand("largest-clone", "Pol(Delta) as the largest clone, checked");
  add_common(c_lc, o);
  c_lc->add_option("--congs", o.congs, "lattice indices");
  c_lc->add_option("--congs-blocks", o.congs_blocks, "partition blocks");
  c_lc->add_option("--arity-bound", o.arity_bound, "max polymorphism arity");
  c_lc->add_option("--samples", o.samples, "maximality samples");
  c_lc->add_flag("--intersect", o.intersect,
                 "intersect Pol(Delta) over all tuples of length <= --n instead");
  c_lc->add_option("--n", o.n, "max tuple length for --intersect");

  auto* c_zoo = app.add_subcommand("zoo", "list built-in algebras or print one");
  std::string zoo_name;
  c_zoo->add_option("name", zoo_name, "zoo algebra name");
  c_zoo->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Limits limits;
  limits.max_tuples = o.max_tuples;

  try {
    if (c_zoo->parsed()) {
      if (zoo_name.empty()) {
        json j;
        j["results"]["names"] = zoo_names();
        if (o.format == "json")
          out << j.dump(2) << "\n";
        else
          for (const auto& n : zoo_names()) out << n << "\n";
        return kExitOk;
      }
      out << serialize_algebra(zoo(zoo_name)) << "\n";
      return kExitOk;
    }

    ParsedAlgebra parsed = load_algebra(o, limits);
    AlgebraContext ctx(parsed.algebra, limits);
    if (parsed.malcev) ctx.set_malcev_term(*parsed.malcev);
    json report = base_report(argv, ctx.algebra());
    int exit_code = kExitOk;

    if (c_con->parsed()) {
      const auto& L = ctx.lattice();
      json congs = json::array();
      for (const auto& c : L.congruences) congs.push_back(partition_json(c));
      report["results"]["congruences"] = congs;
      report["results"]["count"] = L.count();
    } else if (c_delta->parsed()) {
      auto cs = parse_congs(o, ctx);
      CubeRelation d = delta(ctx, cs, o.force_generic);
      report["results"]["n"] = d.dim;
      report["results"]["arity"] = d.rel.arity();
      report["results"]["size"] = d.rel.size();
      report["resources"]["delta_size"] = d.rel.size();
      if (d.rel.size() <= 4096) {
        json tuples = json::array();
        for (std::uint64_t i = 0; i < d.rel.size(); ++i) tuples.push_back(d.rel.tuple(i));
        report["results"]["tuples"] = tuples;
      }
    } else if (c_comm->parsed()) {
      auto cs = parse_congs(o, ctx);
      if (o.method == "both") {
        Congruence f = ctx.commutator(cs, CommutatorMethod::Forks);
        Congruence t = ctx.commutator(cs, CommutatorMethod::TermCondition);
        report["results"]["forks"] = partition_json(f);
        report["results"]["termcond"] = partition_json(t);
        bool agree = f == t;
        report["results"]["agree"] = agree;
        if (!agree) exit_code = kExitPropertyFailure;
      } else {
        Congruence c = ctx.commutator(cs, method_of(o.method));
        report["results"]["commutator"] = partition_json(c);
        report["results"]["lattice_index"] = ctx.lattice().index_of(c);
      }
    } else if (c_cent->parsed()) {
      auto cs = parse_congs(o, ctx);
      const auto& L = ctx.lattice();
      int g = parse_int_list(o.gamma, ',').at(0);
      if (g < 0 || g >= L.count()) throw UsageError("gamma index out of range");
      report["results"]["centralizes"] = centralizes(ctx, cs, L.congruences[g]);
    } else if (c_sn->parsed()) {
      auto deg = supernilpotence_degree(ctx, o.kmax);
      report["results"]["kmax"] = o.kmax;
      if (deg)
        report["results"]["degree"] = *deg;
      else
        report["results"]["degree"] = nullptr;
    } else if (c_mal->parsed()) {
      auto q = find_malcev_term(ctx.algebra(), limits);
      if (q) {
        report["results"]["term"] = term_to_string(*q);
        report["results"]["verified"] = verify_malcev(ctx.algebra(), *q);
      } else {
        report["results"]["term"] = nullptr;
      }
    } else if (c_cube->parsed()) {
      const auto& w = ctx.cube_witness(o.n);
      report["results"]["n"] = w.n;
      report["results"]["term"] = term_to_string(w.term);
      report["results"]["verified"] = w.verified;
      report["results"]["exhaustive"] = w.exhaustive;
      report["results"]["samples"] = w.samples;
    } else if (c_hc->parsed()) {
      HcOptions hco;
      hco.n_max = o.n;
      hco.seed = o.seed;
      hco.malcev_laws = ctx.has_malcev();
      hco.method = method_of(o.method);
      if (!ctx.has_malcev() && o.method == "forks")
        hco.method = CommutatorMethod::TermCondition;
      HcReport hr = hc_suite(ctx, hco);
      json laws = json::array();
      for (const auto& l : hr.laws) {
        json lj;
        lj["law"] = l.law;
        lj["pass"] = l.pass;
        lj["checks"] = l.checks;
        if (!l.pass) lj["witness"] = l.witness;
        laws.push_back(lj);
      }
      report["results"]["laws"] = laws;
      report["results"]["malcev_laws_included"] = hco.malcev_laws;
      report["results"]["all_pass"] = hr.all_pass();
      if (!hr.all_pass()) exit_code = kExitPropertyFailure;
    } else if (c_pol->parsed()) {
      auto cs = parse_congs(o, ctx);
      int b = o.arity_bound > 0 ? o.arity_bound : default_bound(ctx.algebra().size());
      CubeRelation d = delta(ctx, cs);
      PolymorphismSet pol = polymorphisms(d.rel, b, limits);
      report["results"]["arity_bound"] = b;
      report["results"]["delta_size"] = d.rel.size();
      report["results"]["count"] = pol.tables.size();
      if (pol.tables.size() <= 512) {
        json tables = json::array();
        for (const auto& t : pol.tables) tables.push_back(table_json(t));
        report["results"]["tables"] = tables;
      }
    } else if (c_lc->parsed()) {
      int b = o.arity_bound > 0 ? o.arity_bound : default_bound(ctx.algebra().size());
      if (o.intersect) {
        PolymorphismSet pol = largest_commutator_preserving_clone(ctx, o.n, b);
        report["results"]["arity_bound"] = b;
        report["results"]["n_max"] = o.n;
        report["results"]["count"] = pol.tables.size();
      } else {
        auto cs = parse_congs(o, ctx);
        CloneCheckReport r = check_largest_clone(ctx, cs, b, o.samples, o.seed);
        report["results"]["arity_bound"] = r.arity_bound;
        report["results"]["delta_size"] = r.delta_size;
        report["results"]["polymorphisms"] = r.polymorphism_count;
        report["results"]["basic_ops_ok"] = r.basic_ops_ok;
        report["results"]["closure_ok"] = r.closure_ok;
        report["results"]["commutators_ok"] = r.commutators_ok;
        report["results"]["maximality_samples"] = r.maximality_samples;
        report["results"]["maximality_confirmed"] = r.maximality_confirmed;
        report["results"]["witnesses"] = r.witnesses;
        report["results"]["pass"] = r.pass();
        if (!r.pass()) exit_code = kExitPropertyFailure;
      }
    }

    emit(out, o, report);
    return exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << " (reached " << e.reached_size << ")\n";
    return kExitResourceLimit;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hicomm
