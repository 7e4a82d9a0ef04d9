#include <doctest.h>

#include <set>

#include "wordlab/app/census.hpp"
#include "wordlab/app/probes.hpp"
#include "wordlab/app/report.hpp"
#include "wordlab/complexity.hpp"
#include "wordlab/error.hpp"
#include "wordlab/predicates.hpp"

using namespace wordlab;
using namespace wordlab::app;

TEST_CASE("report: rationals render as p/q strings") {
  CHECK(to_json(Rational(3, 2)) == "3/2");
  CHECK(to_json(Rational(6, 4)) == "3/2");
}

TEST_CASE("report: tsv and json tables") {
  Table t{{"a", "b"}, {{"1", "x"}, {"2", "y"}}};
  CHECK(t.to_tsv() == "a\tb\n1\tx\n2\ty\n");
  CHECK(t.to_json()[1]["b"] == "y");
  CHECK(parse_format("tsv") == Format::tsv);
  CHECK_THROWS_AS(parse_format("xml"), ParseError);
}

TEST_CASE("census: square-free ternary counts match growth_census") {
  const auto cfg = parse_census_config("predicate = square-free\nalphabet = 3\nmin_length = 0\nmax_length = 10\n");
  const Table t = run_census(cfg);
  const auto g = growth_census(parse_predicate("square-free", 3), 3, 10);
  REQUIRE(t.rows.size() == 11);
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(t.rows[n][0] == std::to_string(n));
    CHECK(t.rows[n][1] == std::to_string(g.counts[n]));
  }
}

TEST_CASE("census: empty length range gives an empty table") {
  const Table t = run_census(parse_census_config("min_length = 5\nmax_length = 4\n"));
  CHECK(t.rows.empty());
}

TEST_CASE("census: cube-free binary minimal ones match min_letter_density") {
  const auto cfg = parse_census_config("# minimal density\npredicate = cube-free\nalphabet = 2\n"
                                       "min_length = 1\nmax_length = 20\nmeasure = min_density\n");
  const Table t = run_census(cfg);
  REQUIRE(t.rows.size() == 20);
  for (std::size_t L : {6u, 13u, 20u}) {
    SearchBudget b;
    b.max_length = L;
    const auto d = min_letter_density(parse_predicate("cube-free", 2), L, b);
    REQUIRE(d.min_count);
    CHECK(t.rows[L - 1][2] == std::to_string(*d.min_count));
  }
  CHECK(t.rows[5][2] == "2");
}

TEST_CASE("census: malformed config reports the line") {
  try {
    parse_census_config("alphabet = 2\nbogus line\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_census_config("alphabet = two\n"), ParseError);
  CHECK_THROWS_AS(parse_census_config("colour = red\n"), ParseError);
  CHECK_THROWS_AS(parse_census_config("predicate = nonsense-free\n"), ParseError);
}

TEST_CASE("probes: registry ids are unique and numerically ordered") {
  const auto ids = probe_ids();
  CHECK(ids.size() == 87);
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(ids.front() == "1.1.03.1");
  CHECK(ids.back() == "3.5.05.2");
  CHECK(find_probe("1.1.03.10") > find_probe("1.1.03.9"));
}

TEST_CASE("probes: exhaustive runs and squares bounds pass") {
  const auto runs = run_probe("1.4.09.1");
  CHECK(runs.report["verdict"] == "pass");
  CHECK(runs.exit_code == 0);
  const auto squares = run_probe("1.3.05.1");
  CHECK(squares.report["verdict"] == "pass");
  CHECK(squares.report["result"]["n_max"] == 16);
}

TEST_CASE("probes: unknown id lists the known ids") {
  try {
    run_probe("no.such.id");
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("1.3.05.1") != std::string::npos);
    CHECK(msg.find("3.5.05.2") != std::string::npos);
  }
}

TEST_CASE("probes: out-of-scope ids are registered and complete") {
  const auto r = run_probe("3.5.05.1");
  CHECK(r.report["verdict"] == "out-of-scope");
  CHECK(r.exit_code == 0);
  CHECK_FALSE(find_probe("3.5.05.1")->in_scope);
}

TEST_CASE("probes: overrides merge and budgets map to exit code 2") {
  const auto small = run_probe("1.3.05.1", {{"n_max", 6}});
  CHECK(small.report["inputs"]["n_max"] == 6);
  const auto starved = run_probe("1.1.03.1", {{"pattern", "XX"}, {"alphabet", 3}, {"max_nodes", 50}});
  CHECK(starved.report["verdict"] == "budget");
  CHECK(starved.exit_code == 2);
}

TEST_CASE("probes: reports reproduce from their embedded inputs") {
  for (const char* id : {"1.1.03.7", "1.6.13.1", "3.4.01.1", "1.6.15.2"}) {
    const auto a = run_probe(id);
    const auto b = run_probe(id, a.report["inputs"]);
    CHECK(a.report["verdict"] == b.report["verdict"]);
    CHECK(a.report["result"] == b.report["result"]);
  }
}

TEST_CASE("probes: known desk-scale facts") {
  const auto sq = run_probe("1.1.03.1");
  CHECK(sq.report["result"]["search"]["length"] == 3);
  const auto circ = run_probe("1.1.03.7", {{"n_max", 10}});
  const auto missing = circ.report["result"]["missing"].get<std::vector<std::size_t>>();
  CHECK(missing == std::vector<std::size_t>{5, 7, 9, 10});
  const auto stur = run_probe("3.2.07.1", {{"max_factor", 40}});
  CHECK(stur.report["verdict"] == "pass");
}
