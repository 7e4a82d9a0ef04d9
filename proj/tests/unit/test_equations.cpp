#include <doctest.h>

#include "oracles.hpp"
#include "wordlab/equations.hpp"
#include "wordlab/error.hpp"
#include "wordlab/morphism.hpp"

using namespace wordlab;

namespace {
// Every assignment of words of length 1..max_len over k letters.
std::set<std::vector<std::string>> brute_solutions(std::size_t vars, std::size_t k, std::size_t max_len,
                                                   auto&& holds) {
  std::vector<std::string> pool;
  for (std::size_t l = 1; l <= max_len; ++l)
    for (const auto& w : oracle::all_words(k, l)) pool.push_back(w);
  std::set<std::vector<std::string>> out;
  std::vector<std::size_t> idx(vars, 0);
  while (true) {
    std::vector<std::string> vals;
    for (auto i : idx) vals.push_back(pool[i]);
    if (holds(vals)) out.insert(vals);
    std::size_t i = vars;
    while (i > 0 && idx[i - 1] + 1 == pool.size()) idx[--i] = 0;
    if (i == 0) break;
    ++idx[i - 1];
  }
  return out;
}

std::set<std::vector<std::string>> as_strings(const std::vector<EquationSolution>& sols) {
  std::set<std::vector<std::string>> out;
  for (const auto& s : sols) {
    std::vector<std::string> v;
    for (const auto& w : s.values) v.push_back(w.to_string());
    out.insert(v);
  }
  return out;
}
}  // namespace

TEST_CASE("equation parsing") {
  const auto sys = parse_equations("x y = y x");
  CHECK(sys.variable_names == "xy");
  REQUIRE(sys.equations.size() == 1);
  CHECK(sys.equations[0].balanced(2));
  const auto upper = parse_equations("X a = b X; X Y = Y X");
  CHECK(upper.variable_names == "XY");
  CHECK(upper.equations.size() == 2);
  CHECK_FALSE(upper.equations[0].left[1].is_variable);
  CHECK(parse_equations("x a = b x").equations[0].balanced(1));
  CHECK_FALSE(parse_equations("x x = x").equations[0].balanced(1));
  CHECK_THROWS_AS(parse_equations("a = b"), ParseError);
  CHECK_THROWS_AS(parse_equations("x = y = x"), ParseError);
  CHECK_THROWS_AS(parse_equations("x + y = y"), ParseError);
}

TEST_CASE("commutation: xy = yx has exactly the common-power solutions") {
  const auto sys = parse_equations("x y = y x");
  SolveOptions opt;
  opt.max_len = 3;
  const auto sols = solve_word_equation(sys, opt);
  const auto expect = brute_solutions(2, 2, 3, [](const auto& v) { return v[0] + v[1] == v[1] + v[0]; });
  CHECK(as_strings(sols) == expect);
  for (const auto& s : sols) {
    CHECK(primitive_root(s.values[0]) == primitive_root(s.values[1]));
    CHECK_FALSE(s.non_periodic);
    CHECK(satisfies(sys, s.values, s.values[0].alphabet()));
  }
  // ordered by total length, then length profile
  for (std::size_t i = 1; i < sols.size(); ++i) {
    const auto a = sols[i - 1].values[0].size() + sols[i - 1].values[1].size();
    const auto b = sols[i].values[0].size() + sols[i].values[1].size();
    CHECK(a <= b);
  }
  CHECK(sols.front().values[0].to_string() == "a");
  CHECK(sols.front().values[1].to_string() == "a");
}

TEST_CASE("trivial and impossible equations") {
  SolveOptions opt;
  opt.max_len = 3;
  CHECK(solve_word_equation(parse_equations("x = x"), opt).size() == 2 + 4 + 8);
  for (std::size_t m = 1; m <= 3; ++m) {
    opt.max_len = m;
    CHECK(solve_word_equation(parse_equations("x a = b x"), opt).empty());
  }
}

TEST_CASE("solutions match brute force for mixed systems") {
  SolveOptions opt;
  opt.max_len = 3;
  const auto sys = parse_equations("x a y = y a x");
  const auto expect =
      brute_solutions(2, 2, 3, [](const auto& v) { return v[0] + "a" + v[1] == v[1] + "a" + v[0]; });
  CHECK(as_strings(solve_word_equation(sys, opt)) == expect);
  const auto three = parse_equations("x y z = z y x");
  opt.max_len = 2;
  const auto e3 = brute_solutions(3, 2, 2, [](const auto& v) { return v[0] + v[1] + v[2] == v[2] + v[1] + v[0]; });
  const auto got = solve_word_equation(three, opt);
  CHECK(as_strings(got) == e3);
  bool some_non_periodic = false;
  for (const auto& s : got) some_non_periodic = some_non_periodic || s.non_periodic;
  CHECK(some_non_periodic);
  // swapping sides does not change the solution set
  CHECK(as_strings(solve_word_equation(parse_equations("z y x = x y z"), opt)).size() == e3.size());
}

TEST_CASE("independence") {
  SolveOptions opt;
  opt.max_len = 2;
  CHECK(is_independent(parse_equations("x y = y x"), opt));
  CHECK_FALSE(is_independent(parse_equations("x y = y x; y x = x y"), opt));
}

TEST_CASE("bounded PCP") {
  const Morphism h = parse_morphism("a->ab;b->a"), g = parse_morphism("a->a;b->ba");
  const auto r = bounded_pcp(h, g, 6);
  REQUIRE(r.solution);
  CHECK(r.verdict == Verdict::found);
  CHECK(r.solution->to_string() == "ab");
  CHECK(apply_morphism(h, *r.solution) == apply_morphism(g, *r.solution));
  const auto same = bounded_pcp(h, h, 4);
  REQUIRE(same.solution);
  CHECK(same.solution->to_string() == "a");
  const auto none = bounded_pcp(parse_morphism("a->a"), parse_morphism("a->aa"), 8);
  CHECK(none.verdict == Verdict::exhausted);
  CHECK_FALSE(none.solution);
  CHECK_THROWS_AS(bounded_pcp(parse_morphism("a->;b->b"), g, 4), DomainError);
}

TEST_CASE("bounded PCP is shortest against exhaustive search") {
  const std::pair<const char*, const char*> inst[] = {
      {"a->abb;b->b", "a->a;b->bba"}, {"a->aab;b->b", "a->a;b->abb"}, {"a->ab;b->b", "a->a;b->bb"}};
  for (auto [hs, gs] : inst) {
    const Morphism h = parse_morphism(hs), g = parse_morphism(gs);
    const auto r = bounded_pcp(h, g, 8);
    std::optional<std::string> best;
    for (std::size_t l = 1; l <= 8 && !best; ++l)
      for (const auto& x : oracle::all_words(2, l)) {
        const Word w = parse_word(x, h.domain());
        if (apply_morphism(h, w) == apply_morphism(g, w)) {
          best = x;
          break;
        }
      }
    CHECK(r.solution.has_value() == best.has_value());
    if (best) CHECK(r.solution->to_string() == *best);
  }
}

TEST_CASE("PCP instance properties") {
  const auto p = instance_properties(parse_morphism("a->ab;b->a"), parse_morphism("a->a;b->ba"), 0);
  CHECK_FALSE(p.h_marked);
  CHECK(p.g_marked);
  CHECK(instance_properties(parse_morphism("0->01;1->10"), parse_morphism("0->0;1->1"), 3).h_marked);
  CHECK(instance_properties(parse_morphism("a->ab;b->a"), parse_morphism("a->ab;b->a"), 0).unique_equality_continuation);
  // u = a leaves g one "a" ahead; both a and b keep the images comparable
  const auto q = instance_properties(parse_morphism("a->a;b->a"), parse_morphism("a->aa;b->b"), 1);
  CHECK_FALSE(q.unique_equality_continuation);
  REQUIRE(q.counterexample_u);
  CHECK(q.counterexample_u->to_string() == "a");
}
