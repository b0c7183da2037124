// Command-line surface of the engine: file ingestion, bundled corpus,
// loop enumeration, and the commutator / centrality / sweep commands with
// text or machine-readable JSON reports.
//
// Exit codes: 0 success or sweep agreement, 1 sweep disagreement (a found
// counterexample), 2 input error.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "relcomm/commutators.hpp"
#include "relcomm/corpus.hpp"
#include "relcomm/error.hpp"
#include "relcomm/galois.hpp"
#include "relcomm/loops.hpp"
#include "relcomm/parallel.hpp"
#include "relcomm/table_io.hpp"
#include "relcomm/variety.hpp"
#include "relcomm/word.hpp"

using nlohmann::json;
using namespace relcomm;

namespace {

struct Config {
  std::string algebra, variety, M, N, K;
  std::string method = "all";
  std::string format = "text";
  std::uint64_t budget = 0;  // 0 means default_budget()
  int threads = 0;           // 0 means default_threads()
  int max_order = 5;
  int order = 4;
  int seed = 0;
  bool no_timing = false;
  bool no_p_factor = false;
  bool tables = false;
};

std::uint64_t budget_of(const Config& cfg) {
  return cfg.budget ? cfg.budget : default_budget();
}

// --algebra accepts, in order: an existing file path, a bundled name with an
// optional .tbl suffix (z2 z4 v4 z6 s3 d4 q8 a4 l5), or a generated loop
// address loop<order>_<index> into the order-<order> enumeration.
CorpusEntry resolve_algebra(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load(arg);
  std::string name = arg;
  if (name.size() > 4 && name.substr(name.size() - 4) == ".tbl") {
    name.resize(name.size() - 4);
  }
  if (AlgebraPtr b = bundled_algebra(name)) {
    return CorpusEntry{name, b->kind(), b->order(), "bundled", b};
  }
  if (name.rfind("loop", 0) == 0) {
    std::size_t under = name.find('_');
    if (under != std::string::npos) {
      try {
        int n = std::stoi(name.substr(4, under - 4));
        int k = std::stoi(name.substr(under + 1));
        const auto& tabs = gen_loop_tables(n);
        if (k < 0 || k >= static_cast<int>(tabs.size())) {
          throw_error(ErrorCode::InvalidArgument,
                      name + ": index out of range, order " + std::to_string(n) +
                          " has " + std::to_string(tabs.size()) + " loops");
        }
        AlgebraPtr l = FiniteAlgebra::make_loop(name, n, tabs[k]);
        return CorpusEntry{name, Kind::loop, n, "generated", l};
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        // fall through to the generic error
      }
    }
  }
  throw_error(ErrorCode::InvalidArgument,
              "unknown algebra '" + arg +
                  "': not a file, a bundled name, or loop<order>_<index>");
}

// Word file for a user variety: first content line `group` or `loop`, then
// one defining word per line in prefix syntax, `#` comments allowed.
VarietyDescriptor variety_from_file(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  int lineno = 0;
  bool have_kind = false;
  Kind kind = Kind::group;
  std::vector<Word> words;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream trim(line);
    std::string first;
    if (!(trim >> first)) continue;
    if (!have_kind) {
      if (first == "group") {
        kind = Kind::group;
      } else if (first == "loop") {
        kind = Kind::loop;
      } else {
        throw_error(ErrorCode::ParseError,
                    path + ": line " + std::to_string(lineno) +
                        ": expected kind header `group` or `loop`");
      }
      have_kind = true;
      continue;
    }
    try {
      words.push_back(Word::parse(line));
    } catch (const Error& e) {
      throw_error(ErrorCode::ParseError, path + ": line " +
                                             std::to_string(lineno) + ": " +
                                             e.what());
    }
  }
  if (!have_kind || words.empty()) {
    throw_error(ErrorCode::ParseError,
                path + ": a variety file needs a kind header and at least one word");
  }
  return user_variety(std::filesystem::path(path).stem().string(), kind,
                      std::move(words));
}

VarietyDescriptor resolve_variety(const std::string& arg) {
  for (const std::string& name : builtin_variety_names()) {
    if (name == arg) return builtin_variety(arg);
  }
  if (std::filesystem::exists(arg)) return variety_from_file(arg);
  std::string names;
  for (const std::string& name : builtin_variety_names()) {
    names += (names.empty() ? "" : ", ") + name;
  }
  throw_error(ErrorCode::InvalidArgument,
              "unknown variety '" + arg + "' (builtin: " + names +
                  "; or a word file path)");
}

// Ideals are named by generator lists ("1,2" is the ideal closure of those
// elements) or the special names full / trivial.  The bundled s3 table also
// answers to A3 for its alternating subgroup, matching common usage.
Ideal resolve_ideal(const CorpusEntry& e, const std::string& arg,
                    const std::string& flag) {
  if (arg == "full") return full_ideal(e.alg);
  if (arg == "trivial") return trivial_ideal(e.alg);
  if (e.id == "s3" && arg == "A3") return ideal_closure(e.alg, {3});
  std::vector<int> gens;
  std::stringstream toks(arg);
  std::string tok;
  while (std::getline(toks, tok, ',')) {
    try {
      std::size_t pos = 0;
      int g = std::stoi(tok, &pos);
      if (pos != tok.size() || g < 0 || g >= e.order) throw std::exception();
      gens.push_back(g);
    } catch (const std::exception&) {
      throw_error(ErrorCode::InvalidArgument,
                  flag + " expects full, trivial, or a comma-separated list "
                         "of element indices below " +
                      std::to_string(e.order) + "; got '" + arg + "'");
    }
  }
  if (gens.empty()) {
    throw_error(ErrorCode::InvalidArgument, flag + " got an empty generator list");
  }
  return ideal_closure(e.alg, gens);
}

std::string fmt_set(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? ", " : "") + std::to_string(xs[i]);
  }
  return out + "}";
}

json algebra_json(const CorpusEntry& e) {
  return json{{"id", e.id},
              {"kind", kind_name(e.kind)},
              {"order", e.order},
              {"source", e.source}};
}

json table_json(const AlgebraPtr& a) {
  json rows = json::array();
  for (int r = 0; r < a->order(); ++r) {
    json row = json::array();
    for (int c = 0; c < a->order(); ++c) row.push_back(a->mul(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

// One command's product: exit code, the JSON report pieces, and the text
// rendering.  Assembly and printing stay in main so the two formats cannot
// drift on the envelope.
struct Outcome {
  int exit = 0;
  json inputs = json::object();
  json results = json::object();
  json diagnostics = json::object();
  std::string text;
};

Outcome run_validate(const Config& cfg) {
  Outcome out;
  CorpusEntry e = resolve_algebra(cfg.algebra);
  out.inputs["algebra"] = algebra_json(e);
  out.results["valid"] = true;
  out.results["kind"] = kind_name(e.kind);
  out.results["order"] = e.order;
  out.results["associative"] = e.alg->associative();
  out.text = e.id + ": " + kind_name(e.kind) + " of order " +
             std::to_string(e.order) + " (" + e.source + "), " +
             (e.alg->associative() ? "associative" : "nonassociative") + "\n";
  return out;
}

Outcome run_verbal(const Config& cfg) {
  Outcome out;
  CorpusEntry e = resolve_algebra(cfg.algebra);
  VarietyDescriptor v = resolve_variety(cfg.variety);
  Ideal w = verbal_subobject(e.alg, v, budget_of(cfg));
  out.inputs["algebra"] = algebra_json(e);
  out.inputs["variety"] = v.name;
  out.inputs["budget"] = budget_of(cfg);
  out.results["members"] = w.members;
  out.results["size"] = w.members.size();
  out.results["trivial"] = w.is_trivial();
  out.text = "verbal subobject of " + e.id + " under " + v.name + ": " +
             fmt_set(w.members) + "\n";
  return out;
}

Outcome run_reflect(const Config& cfg) {
  Outcome out;
  CorpusEntry e = resolve_algebra(cfg.algebra);
  VarietyDescriptor v = resolve_variety(cfg.variety);
  Reflection r = reflection(e.alg, v, budget_of(cfg));
  // An associative loop is a group; present it as one (Gp reflections of
  // loops land here).
  AlgebraPtr shown = r.alg;
  if (shown->kind() == Kind::loop && shown->associative()) {
    std::vector<int> mul;
    mul.reserve(static_cast<std::size_t>(shown->order()) * shown->order());
    for (int x = 0; x < shown->order(); ++x) {
      for (int y = 0; y < shown->order(); ++y) mul.push_back(shown->mul(x, y));
    }
    shown = FiniteAlgebra::make_group(shown->id(), shown->order(), std::move(mul));
  }
  out.inputs["algebra"] = algebra_json(e);
  out.inputs["variety"] = v.name;
  out.inputs["budget"] = budget_of(cfg);
  out.results["kind"] = kind_name(shown->kind());
  out.results["order"] = shown->order();
  out.results["table"] = table_json(shown);
  out.results["eta"] = r.eta.map;
  out.results["verbal_members"] = r.verbal.members;
  out.text = "reflection of " + e.id + " in " + v.name + ": order " +
             std::to_string(shown->order()) + "\n" + save_table(shown);
  return out;
}

Outcome run_central(const Config& cfg) {
  Outcome out;
  CorpusEntry e = resolve_algebra(cfg.algebra);
  VarietyDescriptor v = resolve_variety(cfg.variety);
  Ideal k = resolve_ideal(e, cfg.K, "--K");
  Quotient q = quotient(e.alg, k.witness);
  Extension ext = make_extension(q.pi);
  Ideal rc = relative_commutator_of_extension(ext, v, budget_of(cfg));
  bool central = is_central_extension(ext, v, budget_of(cfg));
  out.inputs["algebra"] = algebra_json(e);
  out.inputs["variety"] = v.name;
  out.inputs["K"] = k.members;
  out.inputs["budget"] = budget_of(cfg);
  out.results["central"] = central;
  out.results["relative_commutator"] = rc.members;
  out.text = "extension " + e.id + " -> " + e.id + "/" + fmt_set(k.members) +
             "\n[K,A] relative to " + v.name + " = " + fmt_set(rc.members) +
             "\ncentral: " + (central ? "yes" : "no") + "\n";
  return out;
}

Outcome run_centralise(const Config& cfg) {
  Outcome out;
  CorpusEntry e = resolve_algebra(cfg.algebra);
  VarietyDescriptor v = resolve_variety(cfg.variety);
  Ideal k = resolve_ideal(e, cfg.K, "--K");
  Quotient q = quotient(e.alg, k.witness);
  Extension ext = make_extension(q.pi);
  Centralisation cent = centralisation(ext, v, budget_of(cfg));
  Ideal rc = kernel(cent.rho);
  out.inputs["algebra"] = algebra_json(e);
  out.inputs["variety"] = v.name;
  out.inputs["K"] = k.members;
  out.inputs["budget"] = budget_of(cfg);
  out.results["relative_commutator"] = rc.members;
  out.results["order"] = cent.ext.f.src->order();
  out.results["table"] = table_json(cent.ext.f.src);
  out.results["rho"] = cent.rho.map;
  out.text = "[K,A] relative to " + v.name + " = " + fmt_set(rc.members) +
             "\ncentralisation " + e.id + "/[K,A]: order " +
             std::to_string(cent.ext.f.src->order()) + "\n" +
             save_table(cent.ext.f.src);
  return out;
}

Outcome run_double_central(const Config& cfg) {
  Outcome out;
  CorpusEntry e = resolve_algebra(cfg.algebra);
  VarietyDescriptor v = resolve_variety(cfg.variety);
  Ideal m = resolve_ideal(e, cfg.M, "--M");
  Ideal n = resolve_ideal(e, cfg.N, "--N");
  DoubleExtension de = theorem_square(m, n);
  FourSquareStats stats;
  bool central = is_double_central(de, v, budget_of(cfg), &stats);
  out.inputs["algebra"] = algebra_json(e);
  out.inputs["variety"] = v.name;
  out.inputs["M"] = m.members;
  out.inputs["N"] = n.members;
  out.inputs["budget"] = budget_of(cfg);
  out.results["double_central"] = central;
  out.diagnostics["four_square_calls"] = stats.calls;
  out.diagnostics["four_square_checks"] = stats.squares;
  out.text = "M = " + fmt_set(m.members) + "  N = " + fmt_set(n.members) +
             "\ndouble-central over " + v.name + ": " +
             (central ? "yes" : "no") + "\n";
  return out;
}

Outcome run_commutator(const Config& cfg) {
  Outcome out;
  CorpusEntry e = resolve_algebra(cfg.algebra);
  VarietyDescriptor v = resolve_variety(cfg.variety);
  Ideal m = resolve_ideal(e, cfg.M, "--M");
  Ideal n = resolve_ideal(e, cfg.N, "--N");
  std::vector<std::string> methods;
  if (cfg.method == "all") {
    methods = e.kind == Kind::group
                  ? std::vector<std::string>{"words", "oracle"}
                  : std::vector<std::string>{"associator", "oracle"};
  } else {
    methods = {cfg.method};
  }
  CommutatorReport rep =
      commutator_report(m, n, v, methods, budget_of(cfg), cfg.no_p_factor);
  out.inputs["algebra"] = algebra_json(e);
  out.inputs["variety"] = v.name;
  out.inputs["M"] = rep.m_members;
  out.inputs["N"] = rep.n_members;
  out.inputs["method"] = cfg.method;
  out.inputs["budget"] = budget_of(cfg);
  json rs = json::array();
  for (const MethodResult& r : rep.results) {
    json one{{"method", r.method}, {"members", r.members}};
    if (!cfg.no_timing) one["seconds"] = r.seconds;
    rs.push_back(std::move(one));
    out.text += "[M,N] over " + v.name + " via " + r.method + " = " +
                fmt_set(r.members) + "\n";
  }
  out.results["methods"] = std::move(rs);
  out.results["agree"] = rep.agree;
  if (methods.size() > 1) {
    out.text += std::string("methods agree: ") + (rep.agree ? "yes" : "no") + "\n";
  }
  out.exit = rep.agree ? 0 : 1;
  return out;
}

Outcome run_sweep31(const Config& cfg) {
  Outcome out;
  CorpusEntry e = resolve_algebra(cfg.algebra);
  VarietyDescriptor v = resolve_variety(cfg.variety);
  FourSquareStats stats;
  SweepReport rep = theorem31_sweep(e.alg, v, budget_of(cfg), &stats);
  out.inputs["algebra"] = algebra_json(e);
  out.inputs["variety"] = v.name;
  out.inputs["budget"] = budget_of(cfg);
  json entries = json::array();
  for (const SweepEntry& s : rep.entries) {
    entries.push_back(json{{"M", s.m_members},
                           {"N", s.n_members},
                           {"commutator", s.commutator},
                           {"vanishes", s.vanishes},
                           {"central", s.central},
                           {"agree", s.agree}});
    out.text += "M=" + fmt_set(s.m_members) + " N=" + fmt_set(s.n_members) +
                " [M,N]=" + fmt_set(s.commutator) +
                " vanishes=" + (s.vanishes ? "y" : "n") +
                " central=" + (s.central ? "y" : "n") +
                " agree=" + (s.agree ? "y" : "n") + "\n";
  }
  out.results["entries"] = std::move(entries);
  out.results["pairs"] = rep.entries.size();
  out.results["all_agree"] = rep.all_agree;
  out.diagnostics["four_square_calls"] = stats.calls;
  out.diagnostics["four_square_checks"] = stats.squares;
  out.text += std::to_string(rep.entries.size()) + " pairs on " + e.id +
              " over " + v.name + ": " +
              (rep.all_agree ? "all agree" : "DISAGREEMENT FOUND") + "\n";
  out.exit = rep.all_agree ? 0 : 1;
  return out;
}

Outcome run_sweep42(const Config& cfg) {
  Outcome out;
  int threads = cfg.threads ? cfg.threads : default_threads();
  FourSquareStats stats;
  Theorem42Report rep =
      theorem42_sweep(cfg.max_order, budget_of(cfg), threads, &stats);
  out.inputs["max_order"] = cfg.max_order;
  out.inputs["threads"] = threads;
  out.inputs["budget"] = budget_of(cfg);
  out.results["loops"] = rep.loops;
  out.results["pairs"] = rep.pairs;
  out.results["all_agree"] = rep.all_agree;
  json bad = json::array();
  for (const PairDisagreement& d : rep.disagreements) {
    bad.push_back(json{{"algebra", d.algebra},
                       {"M", d.m_members},
                       {"N", d.n_members},
                       {"loops_result", d.loops_result},
                       {"oracle_result", d.oracle_result}});
    out.text += "disagreement on " + d.algebra + " M=" + fmt_set(d.m_members) +
                " N=" + fmt_set(d.n_members) + "\n";
  }
  out.results["disagreements"] = std::move(bad);
  out.diagnostics["four_square_calls"] = stats.calls;
  out.diagnostics["four_square_checks"] = stats.squares;
  out.text += "orders 1.." + std::to_string(cfg.max_order) + ": " +
              std::to_string(rep.loops) + " loops, " +
              std::to_string(rep.pairs) + " normal-subloop pairs, " +
              (rep.all_agree ? "all agree" : "DISAGREEMENT FOUND") + "\n";
  out.exit = rep.all_agree ? 0 : 1;
  return out;
}

Outcome run_gen_loops(const Config& cfg) {
  Outcome out;
  const auto& tabs = gen_loop_tables(cfg.order);
  int nonassoc = 0;
  int promoted = 0;
  json loops = json::array();
  for (std::size_t k = 0; k < tabs.size(); ++k) {
    std::string id = "loop" + std::to_string(cfg.order) + "_" + std::to_string(k);
    AlgebraPtr l = FiniteAlgebra::make_loop(id, cfg.order, tabs[k]);
    bool assoc = l->associative();
    if (!assoc) ++nonassoc;
    // Associative tables must also pass group validation once inverses are
    // synthesized; a failure here is an enumerator bug.
    if (assoc) {
      FiniteAlgebra::make_group(id, cfg.order, tabs[k]);
      ++promoted;
    }
    if (cfg.tables) {
      loops.push_back(json{{"id", id},
                           {"nonassociative", !assoc},
                           {"table", save_table(l)}});
      out.text += "# " + id + (assoc ? "" : " (nonassociative)") + "\n" +
                  save_table(l) + "\n";
    }
  }
  out.inputs["order"] = cfg.order;
  out.results["count"] = tabs.size();
  out.results["nonassociative"] = nonassoc;
  out.results["associative"] = promoted;
  if (cfg.tables) out.results["loops"] = std::move(loops);
  out.diagnostics["group_promotions"] = promoted;
  out.text += "order " + std::to_string(cfg.order) + ": " +
              std::to_string(tabs.size()) + " reduced loop tables, " +
              std::to_string(nonassoc) + " nonassociative\n";
  return out;
}

// Out of scope by design; see the README's non-goals.
constexpr const char* kHopfMessage =
    "hopf/H2 computations are out of scope: this engine computes relative "
    "commutators and centrality of extensions, not homology. No Hopf-formula "
    "or multiplier functionality is available.";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative commutator engine for finite groups and loops"};
  app.require_subcommand(1);
  Config cfg;
  cfg.budget = 0;

  auto add_common = [&](CLI::App* cmd, bool algebra, bool variety) {
    if (algebra) {
      cmd->add_option("--algebra", cfg.algebra,
                      "table file, bundled name, or loop<order>_<index>")
          ->required();
    }
    if (variety) {
      cmd->add_option("--variety", cfg.variety,
                      "builtin variety name or word file")
          ->required();
    }
    cmd->add_option("--budget", cfg.budget,
                    "evaluation cap (default RELCOMM_BUDGET or 10^8)");
    cmd->add_option("--seed", cfg.seed,
                    "seed for randomized diagnostics (none currently)");
    cmd->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--no-timing", cfg.no_timing,
                  "omit timing for byte-identical comparison runs");
  };

  CLI::App* c_validate = app.add_subcommand("validate", "load and validate a table");
  add_common(c_validate, true, false);

  CLI::App* c_verbal = app.add_subcommand("verbal", "verbal subobject of an algebra");
  add_common(c_verbal, true, true);

  CLI::App* c_reflect =
      app.add_subcommand("reflect", "reflection into the subvariety");
  add_common(c_reflect, true, true);

  CLI::App* c_central = app.add_subcommand(
      "central", "is the extension A -> A/K central relative to the variety");
  add_common(c_central, true, true);
  c_central->add_option("--K", cfg.K, "kernel ideal: generators, full, or trivial")
      ->required();

  CLI::App* c_centralise = app.add_subcommand(
      "centralise", "centralisation A/[K,A] of the extension A -> A/K");
  add_common(c_centralise, true, true);
  c_centralise
      ->add_option("--K", cfg.K, "kernel ideal: generators, full, or trivial")
      ->required();

  CLI::App* c_double = app.add_subcommand(
      "double-central", "double centrality of the (M, N) theorem square");
  add_common(c_double, true, true);
  c_double->add_option("--M", cfg.M, "ideal: generators, full, or trivial")
      ->required();
  c_double->add_option("--N", cfg.N, "ideal: generators, full, or trivial")
      ->required();

  CLI::App* c_comm = app.add_subcommand(
      "commutator", "relative commutator [M,N] by the chosen method(s)");
  add_common(c_comm, true, true);
  c_comm->add_option("--M", cfg.M, "ideal: generators, full, or trivial")
      ->required();
  c_comm->add_option("--N", cfg.N, "ideal: generators, full, or trivial")
      ->required();
  c_comm->add_option("--method", cfg.method, "words, associator, oracle, or all")
      ->check(CLI::IsMember({"words", "associator", "oracle", "all"}));
  c_comm->add_flag("--no-p-factor", cfg.no_p_factor,
                   "drop the diagonal generator family (diagnostic)");

  CLI::App* c_s31 = app.add_subcommand(
      "sweep-thm31", "vanishing iff double centrality over all ideal pairs");
  add_common(c_s31, true, true);

  CLI::App* c_s42 = app.add_subcommand(
      "sweep-thm42", "loop commutator vs Galois oracle up to an order");
  add_common(c_s42, false, false);
  c_s42->add_option("--max-order", cfg.max_order, "largest loop order (1..6)")
      ->check(CLI::Range(1, 6));
  c_s42->add_option("--threads", cfg.threads, "worker threads (default: cores)");

  CLI::App* c_gen =
      app.add_subcommand("gen-loops", "enumerate reduced loop tables of one order");
  add_common(c_gen, false, false);
  c_gen->add_option("--order", cfg.order, "loop order (1..6)")
      ->required()
      ->check(CLI::Range(1, 6));
  c_gen->add_flag("--tables", cfg.tables, "include the tables in the report");

  // Documented refusal: homology is not what this tool does.
  CLI::App* c_hopf = app.add_subcommand("hopf", "not supported (see README)");
  c_hopf->alias("h2");
  c_hopf->allow_extras();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (c_hopf->parsed()) {
    std::cerr << "error: " << kHopfMessage << "\n";
    return 2;
  }

  std::string command;
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    if (c_validate->parsed()) {
      command = "validate";
      out = run_validate(cfg);
    } else if (c_verbal->parsed()) {
      command = "verbal";
      out = run_verbal(cfg);
    } else if (c_reflect->parsed()) {
      command = "reflect";
      out = run_reflect(cfg);
    } else if (c_central->parsed()) {
      command = "central";
      out = run_central(cfg);
    } else if (c_centralise->parsed()) {
      command = "centralise";
      out = run_centralise(cfg);
    } else if (c_double->parsed()) {
      command = "double-central";
      out = run_double_central(cfg);
    } else if (c_comm->parsed()) {
      command = "commutator";
      out = run_commutator(cfg);
    } else if (c_s31->parsed()) {
      command = "sweep-thm31";
      out = run_sweep31(cfg);
    } else if (c_s42->parsed()) {
      command = "sweep-thm42";
      out = run_sweep42(cfg);
    } else if (c_gen->parsed()) {
      command = "gen-loops";
      out = run_gen_loops(cfg);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (cfg.seed) out.inputs["seed"] = cfg.seed;
  if (cfg.format == "json") {
    json report{{"command", command},
                {"inputs", out.inputs},
                {"results", out.results},
                {"diagnostics", out.diagnostics}};
    if (!cfg.no_timing) report["timing"] = json{{"seconds", seconds}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << out.text;
    if (!cfg.no_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", seconds);
      std::cout << "time: " << buf << "s\n";
    }
  }
  return out.exit;
}
