// Python module _wordlab: string-level access to the main operations.
// Structured results cross the boundary as JSON and arrive as dicts/lists.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wordlab/abelian.hpp"
#include "wordlab/app/census.hpp"
#include "wordlab/app/probes.hpp"
#include "wordlab/app/report.hpp"
#include "wordlab/complexity.hpp"
#include "wordlab/equations.hpp"
#include "wordlab/error.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/oracle.hpp"
#include "wordlab/patterns.hpp"
#include "wordlab/predicates.hpp"
#include "wordlab/repetitions.hpp"

namespace py = pybind11;
using namespace wordlab;
using wordlab::app::json;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::object& o) {
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

SearchBudget budget(std::size_t max_length, std::uint64_t max_nodes, double max_seconds, unsigned threads) {
  SearchBudget b;
  b.max_length = max_length;
  b.max_nodes = max_nodes;
  b.max_seconds = max_seconds;
  b.threads = std::max(1u, threads);
  return b;
}

LongPowerKind long_power_kind(const std::string& kind, std::size_t k, std::optional<std::vector<std::int64_t>> values) {
  if (kind == "abelian") return {EquivalenceKind::abelian, 1, std::nullopt};
  if (kind == "kabelian") return {EquivalenceKind::k_abelian, k, std::nullopt};
  if (kind == "additive") return {EquivalenceKind::additive, 1, std::move(values)};
  throw DomainError("kind must be abelian, kabelian or additive");
}

ComplexityProfile profile(const std::string& oracle, const std::string& measure, std::size_t n_max, std::size_t horizon) {
  const auto o = make_oracle(oracle);
  if (measure == "factor") return factor_complexity(o, n_max, horizon);
  if (measure == "palindrome") return palindromic_complexity(o, n_max, horizon);
  if (measure == "recurrence") return recurrence_function(o, n_max, horizon);
  if (measure == "balance") return balance_function(o, n_max, horizon);
  throw DomainError("measure must be factor, palindrome, recurrence or balance");
}

}  // namespace

PYBIND11_MODULE(_wordlab, m) {
  m.doc() = "Combinatorics on words: repetitions, patterns, abelian powers, complexity, equations";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());

  m.def("generate", [](const std::string& oracle, std::size_t n) { return make_oracle(oracle).prefix(n).to_string(); },
        py::arg("oracle"), py::arg("length"));
  m.def("apply_morphism", [](const std::string& spec, const std::string& w) {
    const Morphism f = parse_morphism(spec);
    return apply_morphism(f, parse_word(w, f.domain())).to_string();
  });

  // repetitions
  m.def("least_period", [](const std::string& w) { return least_period(parse_word(w)); });
  m.def("max_exponent", [](const std::string& w) { return max_exponent(parse_word(w)).to_string(); });
  m.def("is_alpha_free",
        [](const std::string& w, const std::string& alpha, bool strict) {
          return is_alpha_free(parse_word(w), Rational::parse(alpha), strict);
        },
        py::arg("word"), py::arg("alpha"), py::arg("strict") = false);
  m.def("count_distinct_squares", [](const std::string& w) { return count_distinct_squares(parse_word(w)); });
  m.def("distinct_squares", [](const std::string& w) {
    std::vector<std::string> out;
    for (const auto& s : distinct_squares(parse_word(w))) out.push_back(s.to_string());
    return out;
  });
  m.def("runs", [](const std::string& w) {
    json a = json::array();
    for (const auto& r : runs(parse_word(w))) a.push_back(app::to_json(r));
    return to_py(a);
  });
  m.def("count_runs", [](const std::string& w) { return count_runs(parse_word(w)); });
  m.def("square_density", [](const std::string& w) { return square_density(parse_word(w)).to_string(); });

  // patterns
  m.def("encounters", [](const std::string& w, const std::string& pattern) -> py::object {
    const Pattern p = Pattern::parse(pattern);
    const auto e = encounters(parse_word(w), p);
    return e ? to_py(app::to_json(*e, p)) : py::none();
  });
  m.def("longest_avoiding",
        [](const std::string& pattern, std::size_t k, std::size_t max_length, std::uint64_t max_nodes, double max_seconds,
           unsigned threads) {
          return to_py(app::to_json(longest_avoiding(Pattern::parse(pattern), k, budget(max_length, max_nodes, max_seconds, threads))));
        },
        py::arg("pattern"), py::arg("alphabet"), py::arg("max_length") = 1000, py::arg("max_nodes") = 100'000'000,
        py::arg("max_seconds") = 0.0, py::arg("threads") = 1);
  m.def("longest_free_word",
        [](const std::string& predicate, std::size_t k, std::size_t max_length, std::uint64_t max_nodes, double max_seconds,
           unsigned threads) {
          return to_py(app::to_json(
              longest_free_word(parse_predicate(predicate, k), k, budget(max_length, max_nodes, max_seconds, threads))));
        },
        py::arg("predicate"), py::arg("alphabet"), py::arg("max_length") = 1000, py::arg("max_nodes") = 100'000'000,
        py::arg("max_seconds") = 0.0, py::arg("threads") = 1);
  m.def("growth_census",
        [](const std::string& predicate, std::size_t k, std::size_t n_max) {
          return to_py(app::to_json(growth_census(parse_predicate(predicate, k), k, n_max)));
        },
        py::arg("predicate"), py::arg("alphabet"), py::arg("n_max"));

  // abelian
  m.def("kabelian_equiv", [](const std::string& u, const std::string& v, std::size_t k) {
    const Word a = parse_word(u);
    return kabelian_equiv(a, parse_word(v, a.alphabet()), k);
  });
  m.def("is_kabelian_npower", [](const std::string& w, std::size_t n, std::size_t k) {
    return is_kabelian_npower(parse_word(w), n, k).has_value();
  });
  m.def("count_abelian_squares",
        [](const std::string& w, bool inequivalent) {
          return count_abelian_squares(parse_word(w), inequivalent ? AbelianSquareMode::inequivalent : AbelianSquareMode::distinct);
        },
        py::arg("word"), py::arg("inequivalent") = false);
  m.def("avoid_long_powers",
        [](std::size_t letters, const std::string& kind, std::size_t n, std::size_t min_period, std::size_t k,
           std::optional<std::vector<std::int64_t>> values, std::size_t max_length, std::uint64_t max_nodes) {
          return to_py(app::to_json(avoid_long_powers_search(letters, long_power_kind(kind, k, std::move(values)), n, min_period,
                                                             budget(max_length, max_nodes, 0.0, 1))));
        },
        py::arg("letters"), py::arg("kind") = "abelian", py::arg("n") = 2, py::arg("min_period") = 1, py::arg("k") = 1,
        py::arg("values") = py::none(), py::arg("max_length") = 200, py::arg("max_nodes") = 10'000'000);

  // complexity
  m.def("complexity",
        [](const std::string& oracle, const std::string& measure, std::size_t n_max, std::size_t horizon) {
          return to_py(app::to_json(profile(oracle, measure, n_max, horizon)));
        },
        py::arg("oracle"), py::arg("measure") = "factor", py::arg("n_max") = 50, py::arg("horizon") = 100000);

  // equations and correspondence
  m.def("solve_word_equation",
        [](const std::string& system, std::size_t max_len, std::size_t alphabet, bool allow_empty) {
          const auto sys = parse_equations(system);
          SolveOptions opt;
          opt.max_len = max_len;
          opt.alphabet_size = alphabet;
          opt.allow_empty = allow_empty;
          py::list out;
          for (const auto& s : solve_word_equation(sys, opt)) {
            py::dict d;
            for (std::size_t i = 0; i < s.values.size(); ++i) d[py::str(std::string(1, sys.variable_names[i]))] = s.values[i].to_string();
            out.append(d);
          }
          return out;
        },
        py::arg("system"), py::arg("max_len") = 3, py::arg("alphabet") = 2, py::arg("allow_empty") = false);
  m.def("bounded_pcp",
        [](const std::string& h, const std::string& g, std::size_t max_len) -> py::object {
          const auto o = bounded_pcp(parse_morphism(h), parse_morphism(g), max_len);
          return o.solution ? py::object(py::str(o.solution->to_string())) : py::none();
        },
        py::arg("h"), py::arg("g"), py::arg("max_len") = 12);

  // registry and census
  m.def("probe_ids", &app::probe_ids);
  m.def("run_probe",
        [](const std::string& id, const py::object& overrides) {
          const auto r = app::run_probe(id, overrides.is_none() ? json::object() : from_py(overrides));
          return py::make_tuple(to_py(r.report), r.exit_code);
        },
        py::arg("id"), py::arg("overrides") = py::none());
  m.def("census", [](const std::string& config) {
    return to_py(app::run_census(app::parse_census_config(config)).to_json());
  });
}
