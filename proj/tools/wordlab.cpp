// wordlab: command-line front end to the library and the probe registry.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wordlab/abelian.hpp"
#include "wordlab/app/census.hpp"
#include "wordlab/app/probes.hpp"
#include "wordlab/app/report.hpp"
#include "wordlab/complexity.hpp"
#include "wordlab/equations.hpp"
#include "wordlab/error.hpp"
#include "wordlab/factorizations.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/oracle.hpp"
#include "wordlab/patterns.hpp"
#include "wordlab/predicates.hpp"
#include "wordlab/repetitions.hpp"

using namespace wordlab;
using namespace wordlab::app;

namespace {

struct Globals {
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t seed = 1;
  double max_nodes = 1e8;
  double max_seconds = 0.0;
};

SearchBudget budget(const Globals& g, std::size_t max_length) {
  SearchBudget b;
  b.max_length = max_length;
  b.max_nodes = static_cast<std::uint64_t>(g.max_nodes);
  b.max_seconds = g.max_seconds;
  b.threads = std::max(1u, g.threads);
  return b;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Object results become key/value rows unless a table is supplied.
void emit(const Globals& g, const json& j, const Table* table = nullptr) {
  switch (parse_format(g.format)) {
    case Format::json:
      std::cout << j.dump(2) << '\n';
      break;
    case Format::text:
      std::cout << to_text(j);
      break;
    case Format::tsv:
      if (table) {
        std::cout << table->to_tsv();
      } else {
        Table t{{"key", "value"}, {}};
        for (auto it = j.begin(); it != j.end(); ++it)
          t.rows.push_back({it.key(), it->is_string() ? it->get<std::string>() : it->dump()});
        std::cout << t.to_tsv();
      }
      break;
  }
}

int verdict_code(Verdict v) { return v == Verdict::budget ? 2 : 0; }

std::vector<unsigned> digit_list(const std::string& s) {
  std::vector<unsigned> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');)
    if (!part.empty()) out.push_back(static_cast<unsigned>(std::stoul(part)));
  return out;
}

json profile_table(const ComplexityProfile& p, Table& t) {
  t.header = {"n", p.measure, "valid"};
  for (std::size_t n = 0; n < p.values.size(); ++n)
    t.rows.push_back({std::to_string(n), std::to_string(p.values[n]), p.valid[n] ? "1" : "0"});
  return to_json(p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wordlab: combinatorics on words workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));
  app.add_option("--threads", g.threads, "Worker threads inside searches");
  app.add_option("--seed", g.seed, "Seed for randomized probes");
  app.add_option("--max-nodes", g.max_nodes, "Search node budget (accepts 1e8)");
  app.add_option("--max-seconds", g.max_seconds, "Search time budget, 0 = none");

  int code = 0;

  // generate
  auto* gen = app.add_subcommand("generate", "Prefix of a classic or morphic word");
  std::string gen_oracle = "thue_morse";
  std::size_t gen_len = 32;
  gen->add_option("--oracle", gen_oracle, "thue_morse, fibonacci, thue_ternary, tribonacci, makela, sturmian:1,2, "
                                          "periodic:<w>, morphism:<spec>@<letter>");
  gen->add_option("--length,-n", gen_len, "Prefix length");
  gen->callback([&] {
    const Word w = make_oracle(gen_oracle).prefix(gen_len);
    emit(g, {{"oracle", gen_oracle}, {"length", w.size()}, {"word", w.to_string()}});
  });

  // repeats
  auto* rep = app.add_subcommand("repeats", "Periods, exponents, squares and runs of a word");
  std::string rep_op = "period", rep_word;
  rep->add_option("--op", rep_op)->check(CLI::IsMember({"period", "maxexp", "squares", "runs", "density"}));
  rep->add_option("--word", rep_word)->required();
  rep->callback([&] {
    const Word w = parse_word(rep_word);
    json j = {{"word", w.to_string()}, {"op", rep_op}};
    Table t;
    if (rep_op == "period") {
      j["period"] = least_period(w);
      j["exponent"] = to_json(exponent(w));
    } else if (rep_op == "maxexp") {
      j["max_exponent"] = to_json(max_exponent(w));
    } else if (rep_op == "squares") {
      const auto sq = distinct_squares(w);
      j["count"] = sq.size();
      j["squares"] = to_json(sq);
      t.header = {"square"};
      for (const auto& s : sq) t.rows.push_back({s.to_string()});
    } else if (rep_op == "runs") {
      const auto rs = runs(w);
      j["count"] = rs.size();
      json arr = json::array();
      t.header = {"start", "end", "period", "exponent"};
      for (const auto& r : rs) {
        arr.push_back(to_json(r));
        const json rj = to_json(r);
        t.rows.push_back({rj["start"].dump(), rj["end"].dump(), rj["period"].dump(), rj["exponent"].get<std::string>()});
      }
      j["runs"] = arr;
    } else {
      j["square_density"] = to_json(square_density(w));
    }
    emit(g, j, t.header.empty() ? nullptr : &t);
  });

  // avoid
  auto* av = app.add_subcommand("avoid", "Longest word avoiding a pattern or predicate");
  std::string av_pattern, av_pred, av_word;
  std::size_t av_k = 2, av_len = 500;
  av->add_option("--pattern", av_pattern, "Pattern, uppercase/digits are variables");
  av->add_option("--predicate", av_pred, predicate_syntax());
  av->add_option("--alphabet,-k", av_k);
  av->add_option("--max-len", av_len);
  av->add_option("--word", av_word, "Report the first encounter of the pattern in this word instead");
  av->callback([&] {
    if (av_pattern.empty() == av_pred.empty()) throw DomainError("give exactly one of --pattern and --predicate");
    if (!av_word.empty()) {
      if (av_pattern.empty()) throw DomainError("--word needs --pattern");
      const Pattern p = Pattern::parse(av_pattern);
      const Word w = parse_word(av_word);
      const auto e = encounters(w, p);
      json j = {{"word", w.to_string()}, {"pattern", p.to_string()}, {"encounters", e.has_value()}};
      if (e) j["witness"] = to_json(*e, p);
      emit(g, j);
      return;
    }
    const SearchOutcome o = av_pattern.empty()
                                ? longest_free_word(parse_predicate(av_pred, av_k), av_k, budget(g, av_len))
                                : longest_avoiding(Pattern::parse(av_pattern), av_k, budget(g, av_len));
    json j = to_json(o);
    j["alphabet"] = av_k;
    j[av_pattern.empty() ? "predicate" : "pattern"] = av_pattern.empty() ? av_pred : av_pattern;
    emit(g, j);
    code = verdict_code(o.verdict);
  });

  // shuffle
  auto* sh = app.add_subcommand("shuffle", "Shuffle two words along a conduction sequence");
  std::string sh_u, sh_v, sh_beta;
  sh->add_option("--u", sh_u)->required();
  sh->add_option("--v", sh_v);
  sh->add_option("--beta", sh_beta, "0/1 string; omitted means search a square-free self-shuffle of u");
  sh->callback([&] {
    const Word u = parse_word(sh_u);
    if (sh_beta.empty()) {
      const auto b = self_shuffle_squarefree_search(u);
      json j = {{"u", u.to_string()}, {"found", b.has_value()}};
      if (b) j["beta"] = b->to_string(), j["w"] = shuffle(u, u, *b).to_string();
      emit(g, j);
      return;
    }
    const Word v = sh_v.empty() ? u : parse_word(sh_v, u.alphabet());
    const Word w = shuffle(u, v, ConductionSequence::parse(sh_beta));
    emit(g, {{"u", u.to_string()}, {"v", v.to_string()}, {"beta", sh_beta}, {"w", w.to_string()},
             {"square_free", is_alpha_free(w, Rational(2), false)}});
  });

  // abelian
  auto* ab = app.add_subcommand("abelian", "Abelian and k-abelian equivalence, powers and avoidance");
  std::string ab_op = "equiv", ab_u, ab_v, ab_word, ab_kind = "abelian", ab_values;
  std::size_t ab_k = 1, ab_n = 2, ab_p = 1, ab_alpha = 3, ab_len = 200, ab_length = 8;
  ab->add_option("--op", ab_op)->check(CLI::IsMember({"equiv", "power", "census", "avoid"}));
  ab->add_option("--u", ab_u);
  ab->add_option("--v", ab_v);
  ab->add_option("--word", ab_word);
  ab->add_option("--k", ab_k, "k for k-abelian operations");
  ab->add_option("--n", ab_n, "Power exponent");
  ab->add_option("--min-period", ab_p, "Least block length of forbidden powers");
  ab->add_option("--alphabet", ab_alpha);
  ab->add_option("--kind", ab_kind)->check(CLI::IsMember({"abelian", "kabelian", "additive"}));
  ab->add_option("--values", ab_values, "Comma-separated letter values for additive powers");
  ab->add_option("--max-len", ab_len);
  ab->add_option("--length", ab_length, "Word length for the strong-power census");
  auto* mk = ab->add_subcommand("makela", "Abelian cubes in g applied to the fixed point of 0->03,1->43,3->1,4->01");
  std::string mk_outer = "0->0;1->1;3->1;4->0";
  std::size_t mk_horizon = 400;
  mk->add_option("--outer", mk_outer, "Morphism g on {0,1,3,4}");
  mk->add_option("--horizon", mk_horizon);
  mk->callback([&] {
    const auto r = makela_exploration(parse_morphism(mk_outer), mk_horizon);
    Table t{{"block_length", "occurrences"}, {}};
    for (auto [len, c] : r.by_block_length) t.rows.push_back({std::to_string(len), std::to_string(c)});
    emit(g, to_json(r), &t);
  });
  ab->callback([&] {
    if (ab->got_subcommand(mk)) return;
    if (ab_op == "equiv") {
      const Word u = parse_word(ab_u), v = parse_word(ab_v, u.alphabet());
      emit(g, {{"u", u.to_string()}, {"v", v.to_string()}, {"k", ab_k}, {"equivalent", kabelian_equiv(u, v, ab_k)}});
    } else if (ab_op == "power") {
      const Word w = parse_word(ab_word);
      const auto r = is_kabelian_npower(w, ab_n, ab_k);
      json j = {{"word", w.to_string()}, {"n", ab_n}, {"k", ab_k}, {"power", r.has_value()},
                {"strong_power", is_strongly_kabelian_npower(w, ab_n, ab_k)}};
      if (r) j["block_length"] = r->block_length;
      emit(g, j);
    } else if (ab_op == "census") {
      Table t{{"length", "words", "classes", "classes_with_power", "strong_powers", "avoiders"}, {}};
      json rows = json::array();
      for (std::size_t len = 1; len <= ab_length; ++len) {
        const auto c = strong_power_census(ab_alpha, ab_n, ab_k, len);
        rows.push_back(to_json(c));
        t.rows.push_back({std::to_string(len), std::to_string(c.words), std::to_string(c.classes),
                          std::to_string(c.classes_with_power), std::to_string(c.strong_powers), std::to_string(c.avoiders)});
      }
      emit(g, {{"alphabet", ab_alpha}, {"n", ab_n}, {"k", ab_k}, {"rows", rows}}, &t);
    } else {
      LongPowerKind kind;
      if (ab_kind == "kabelian") kind = {EquivalenceKind::k_abelian, ab_k, std::nullopt};
      if (ab_kind == "additive") {
        kind.kind = EquivalenceKind::additive;
        if (!ab_values.empty()) {
          std::vector<std::int64_t> vals;
          for (unsigned d : digit_list(ab_values)) vals.push_back(d);
          kind.values = vals;
          ab_alpha = vals.size();
        }
      }
      const auto o = avoid_long_powers_search(ab_alpha, kind, ab_n, ab_p, budget(g, ab_len));
      json j = to_json(o);
      j["kind"] = ab_kind;
      j["n"] = ab_n;
      j["min_period"] = ab_p;
      emit(g, j);
      code = verdict_code(o.verdict);
    }
  });

  // complexity
  auto* cx = app.add_subcommand("complexity", "Complexity functions of an infinite word");
  std::string cx_oracle = "fibonacci", cx_measure = "factor";
  std::size_t cx_n = 50, cx_h = 100000, cx_order = 3;
  cx->add_option("--oracle", cx_oracle);
  cx->add_option("--measure", cx_measure)->check(CLI::IsMember({"factor", "palindrome", "recurrence", "balance", "rauzy"}));
  cx->add_option("--n-max", cx_n);
  cx->add_option("--horizon", cx_h);
  cx->add_option("--order", cx_order, "Rauzy graph order");
  cx->callback([&] {
    const auto o = make_oracle(cx_oracle);
    if (cx_measure == "rauzy") {
      const auto r = rauzy_graph(o, cx_order, cx_h);
      if (g.format == "json")
        emit(g, {{"oracle", o.tag()}, {"order", r.order}, {"vertices", to_json(r.vertices)}, {"edges", r.to_edge_list()}});
      else
        std::cout << r.to_edge_list();
      return;
    }
    ComplexityProfile p = cx_measure == "factor"       ? factor_complexity(o, cx_n, cx_h)
                          : cx_measure == "palindrome" ? palindromic_complexity(o, cx_n, cx_h)
                          : cx_measure == "recurrence" ? recurrence_function(o, cx_n, cx_h)
                                                       : balance_function(o, cx_n, cx_h);
    Table t;
    json j = profile_table(p, t);
    j["oracle"] = o.tag();
    emit(g, j, &t);
  });

  // factorize
  auto* fz = app.add_subcommand("factorize", "F-factorizations and their properties");
  std::string fz_spec, fz_word, fz_check = "list";
  std::size_t fz_bound = 8, fz_width = 2;
  fz->add_option("--spec", fz_spec, "JSON file {sigma, control, components}")->required();
  fz->add_option("--word", fz_word);
  fz->add_option("--check", fz_check)->check(CLI::IsMember({"list", "completeness", "completeness-exact", "uniqueness",
                                                            "synchronization", "sync-width"}));
  fz->add_option("--bound", fz_bound, "Length bound N for bounded checks");
  fz->add_option("--width", fz_width, "Window width for synchronization");
  fz->callback([&] {
    const auto spec = FFactorizationSpec::from_json(read_file(fz_spec));
    if (fz_check == "list") {
      const Word w = parse_word(fz_word, spec.sigma);
      const auto all = f_factorizations(w, spec);
      json arr = json::array();
      Table t{{"index_word", "factors"}, {}};
      for (const auto& f : all) {
        arr.push_back(to_json(f));
        std::string fs;
        for (const auto& x : f.factors) fs += (fs.empty() ? "" : ".") + x.to_string();
        t.rows.push_back({f.index_word(), fs});
      }
      emit(g, {{"word", w.to_string()}, {"count", all.size()}, {"factorizations", arr}}, &t);
      return;
    }
    const PropertyVerdict v = fz_check == "completeness"         ? check_completeness_bounded(spec, fz_bound)
                              : fz_check == "completeness-exact" ? check_completeness_exact(spec)
                              : fz_check == "uniqueness"         ? check_uniqueness(spec, fz_bound)
                              : fz_check == "synchronization"    ? check_synchronization(spec, fz_width, fz_bound)
                                                                 : find_synchronization_width(spec, fz_bound);
    json j = to_json(v);
    j["property"] = fz_check;
    emit(g, j);
  });

  // equations
  auto* eq = app.add_subcommand("equations", "Bounded solutions of word equations");
  std::string eq_system, eq_vars;
  SolveOptions eq_opt;
  eq->add_option("--system", eq_system, "Equations separated by ';', e.g. \"x y = y x\"")->required();
  eq->add_option("--variables", eq_vars, "Variable letters, overriding the default rule");
  eq->add_option("--max-len", eq_opt.max_len);
  eq->add_option("--alphabet", eq_opt.alphabet_size);
  eq->add_flag("--allow-empty", eq_opt.allow_empty);
  eq->callback([&] {
    const auto sys = parse_equations(eq_system, eq_vars.empty() ? std::nullopt : std::optional<std::string>(eq_vars));
    const auto sols = solve_word_equation(sys, eq_opt);
    Table t;
    for (char c : sys.variable_names) t.header.push_back(std::string(1, c));
    t.header.push_back("non_periodic");
    json arr = json::array();
    for (const auto& s : sols) {
      json o = json::object();
      std::vector<std::string> row;
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        o[std::string(1, sys.variable_names[i])] = s.values[i].to_string();
        row.push_back(s.values[i].to_string());
      }
      o["non_periodic"] = s.non_periodic;
      row.push_back(s.non_periodic ? "1" : "0");
      arr.push_back(o);
      t.rows.push_back(row);
    }
    emit(g, {{"variables", sys.variable_names}, {"count", sols.size()}, {"independent", is_independent(sys, eq_opt)},
             {"solutions", arr}},
         &t);
  });

  // pcp
  auto* pc = app.add_subcommand("pcp", "Bounded Post correspondence search");
  std::string pc_h, pc_g;
  std::size_t pc_len = 12, pc_bound = 0;
  pc->set_help_flag("--help", "Print this help message and exit");
  pc->add_option("--h", pc_h)->required();
  pc->add_option("--g", pc_g)->required();
  pc->add_option("--max-len", pc_len);
  pc->add_option("--properties", pc_bound, "Also test markedness and unique continuation up to this bound");
  pc->callback([&] {
    const Morphism h = parse_morphism(pc_h), gm = parse_morphism(pc_g);
    const auto o = bounded_pcp(h, gm, pc_len, static_cast<std::uint64_t>(g.max_nodes));
    json j = {{"verdict", to_string(o.verdict)}, {"nodes", o.nodes}};
    if (o.solution) {
      j["solution"] = o.solution->to_string();
      j["image"] = apply_morphism(h, *o.solution).to_string();
    }
    if (pc_bound > 0) {
      const auto p = instance_properties(h, gm, pc_bound);
      j["h_marked"] = p.h_marked;
      j["g_marked"] = p.g_marked;
      j["unique_equality_continuation"] = p.unique_equality_continuation;
      if (p.counterexample_u) j["counterexample_u"] = p.counterexample_u->to_string();
    }
    emit(g, j);
    code = verdict_code(o.verdict);
  });

  // census
  auto* cs = app.add_subcommand("census", "Per-length census driven by a config file");
  std::string cs_file;
  cs->add_option("config", cs_file, "File of key = value lines")->required();
  cs->callback([&] {
    const Table t = run_census(parse_census_config(read_file(cs_file)));
    emit(g, t.to_json(), &t);
  });

  // probe
  auto* pr = app.add_subcommand("probe", "Run a registered problem probe");
  std::string pr_id, pr_out;
  std::vector<std::string> pr_set;
  bool pr_list = false;
  pr->add_option("id", pr_id, "Problem id such as 1.3.05.1");
  pr->add_option("--set", pr_set, "Override key=value (value read as JSON when it parses)");
  pr->add_option("--out", pr_out, "Also write the JSON report to this file");
  pr->add_flag("--list", pr_list, "List registered ids");
  pr->callback([&] {
    if (pr_list || pr_id.empty()) {
      Table t{{"id", "kind", "target", "in_scope", "statement"}, {}};
      json arr = json::array();
      for (const auto& d : probe_registry()) {
        t.rows.push_back({d.id, d.kind, d.target, d.in_scope ? "yes" : "no", d.statement});
        arr.push_back({{"id", d.id}, {"kind", d.kind}, {"target", d.target}, {"in_scope", d.in_scope},
                       {"statement", d.statement}, {"defaults", d.defaults}});
      }
      emit(g, arr, &t);
      return;
    }
    json overrides = json::object();
    const auto* d = find_probe(pr_id);
    if (d && d->defaults.contains("seed")) overrides["seed"] = g.seed;
    if (d && d->defaults.contains("threads")) overrides["threads"] = g.threads;
    if (d && d->defaults.contains("max_seconds") && g.max_seconds > 0) overrides["max_seconds"] = g.max_seconds;
    for (const auto& kv : pr_set) {
      const auto eqpos = kv.find('=');
      if (eqpos == std::string::npos) throw ParseError("--set expects key=value, got '" + kv + "'");
      const std::string key = kv.substr(0, eqpos), val = kv.substr(eqpos + 1);
      overrides[key] = json::accept(val) ? json::parse(val) : json(val);
    }
    const auto r = run_probe(pr_id, overrides);
    if (!pr_out.empty()) std::ofstream(pr_out) << r.report.dump(2) << '\n';
    if (g.format == "json")
      std::cout << r.report.dump(2) << '\n';
    else
      emit(g, r.report);
    std::cerr << r.summary << '\n';
    code = r.exit_code;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "wordlab: " << e.what() << '\n';
    return 1;
  }
  return code;
}
