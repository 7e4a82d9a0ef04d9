#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wordlab/complexity.hpp"
#include "wordlab/error.hpp"
#include "wordlab/oracle.hpp"
#include "wordlab/predicates.hpp"

using namespace wordlab;

namespace {
SearchBudget len_budget(std::size_t len) {
  SearchBudget b;
  b.max_length = len;
  return b;
}

// R(n) by sliding every window length over the word.
std::int64_t recurrence_brute(const std::string& w, std::size_t n) {
  const auto all = oracle::factors(w, n);
  for (std::size_t L = n; L <= w.size(); ++L) {
    bool ok = true;
    for (std::size_t i = 0; i + L <= w.size() && ok; ++i) ok = oracle::factors(w.substr(i, L), n) == all;
    if (ok) return static_cast<std::int64_t>(L);
  }
  return -1;
}
}  // namespace

TEST_CASE("factor complexity") {
  const auto fib = factor_complexity(PrefixOracle::fibonacci(), 10, 200);
  CHECK(fib.values[3] == 4);
  CHECK(fib.valid[3]);
  const auto c = factor_complexity(PrefixOracle::constant(), 5, 50);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(c.values[n] == 1);
  CHECK(factor_complexity(PrefixOracle::thue_morse(), 2, 16).values[2] == 4);
  CHECK_THROWS_AS(factor_complexity(PrefixOracle::fibonacci(), 10, 5), DomainError);
  const auto tm = factor_complexity(PrefixOracle::thue_morse(), 40, 2000);
  for (std::size_t n = 0; n + 1 <= 40; ++n)
    if (tm.valid[n] && tm.valid[n + 1]) {
      CHECK(tm.values[n] <= tm.values[n + 1]);
      CHECK(tm.values[n + 1] <= 2 * tm.values[n]);
    }
}

TEST_CASE("kernels match brute force") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 100; ++t) {
    const auto s = oracle::random_word(rng, 1 + rng() % 3, 1 + rng() % 30);
    const Word w = parse_word(s, Alphabet::latin(3));
    const auto fc = factor_counts(w, s.size());
    const auto pc = palindrome_counts(w, s.size());
    for (std::size_t n = 0; n <= s.size(); ++n) {
      CHECK(fc[n] == static_cast<std::int64_t>(oracle::factors(s, n).size()));
      std::int64_t pals = 0;
      for (const auto& f : oracle::factors(s, n)) pals += oracle::is_palindrome(f);
      CHECK(pc[n] == pals);
    }
    for (std::size_t n = 1; n <= std::min<std::size_t>(s.size(), 4); ++n) {
      std::int64_t b = 0;
      for (const auto& u : oracle::factors(s, n))
        for (const auto& v : oracle::factors(s, n))
          for (char a = 'a'; a <= 'c'; ++a)
            b = std::max<std::int64_t>(b, std::abs(std::count(u.begin(), u.end(), a) - std::count(v.begin(), v.end(), a)));
      CHECK(balance_value(w, n) == b);
    }
  }
}

TEST_CASE("recurrence value matches window scan") {
  const std::string tm = PrefixOracle::thue_morse().prefix(512).to_string();
  const std::string fb = PrefixOracle::fibonacci().prefix(512).to_string();
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto a = recurrence_value(parse_word(tm), n);
    REQUIRE(a);
    CHECK(*a == recurrence_brute(tm, n));
    const auto b = recurrence_value(parse_word(fb), n);
    REQUIRE(b);
    CHECK(*b == recurrence_brute(fb, n));
  }
}

TEST_CASE("palindromic complexity") {
  const auto fib = palindromic_complexity(PrefixOracle::fibonacci(), 20, 5000);
  CHECK(fib.values[3] == 2);
  CHECK(fib.values[0] == 1);
  CHECK(fib.residual[5] == 0);
  for (std::size_t n = 0; n < 20; ++n)
    if (fib.residual_valid[n]) CHECK(fib.residual[n] == 0);
  CHECK(palindromic_complexity(PrefixOracle::thue_morse(), 4, 100).values[0] == 1);
}

TEST_CASE("recurrence function") {
  const auto tm = recurrence_function(PrefixOracle::thue_morse(), 5, 4096);
  CHECK(tm.values[1] == 3);
  const auto c = recurrence_function(PrefixOracle::constant(), 6, 100);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(c.values[n] == static_cast<std::int64_t>(n));
  const auto f = recurrence_function(PrefixOracle::fibonacci(), 10, 4096);
  CHECK(f.values[1] == 3);
  REQUIRE(f.quotient_estimate);
  CHECK(f.recurrent_evidence);
  const auto fc = factor_complexity(PrefixOracle::fibonacci(), 10, 4096);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(f.values[n] >= fc.values[n] + static_cast<std::int64_t>(n) - 1);
  // a word that is not recurrent: a b^infinity
  const PrefixOracle abbb("abbb", Alphabet::latin(2), [](std::size_t n) {
    std::vector<Letter> v(n, 1);
    if (n) v[0] = 0;
    return v;
  });
  const auto nr = recurrence_function(abbb, 3, 200);
  CHECK_FALSE(nr.recurrent_evidence);
  CHECK(nr.values[1] == -1);
}

TEST_CASE("balance function") {
  const auto fib = balance_function(PrefixOracle::fibonacci(), 30, 4096);
  for (std::size_t n = 1; n <= 30; ++n) CHECK(fib.values[n] == 1);
  const auto c = balance_function(PrefixOracle::constant(), 8, 100);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(c.values[n] == 0);
  CHECK(balance_function(PrefixOracle::thue_morse(), 2, 64).values[2] == 2);
}

TEST_CASE("sturmian oracles are balanced with complexity n + 1") {
  for (const std::vector<unsigned>& cf : {std::vector<unsigned>{1}, {2}, {1, 2, 3}, {3, 1}}) {
    const auto o = PrefixOracle::sturmian(cf);
    const auto p = factor_complexity(o, 20, 4000);
    const auto b = balance_function(o, 20, 4000);
    for (std::size_t n = 0; n <= 20; ++n) {
      CHECK(p.values[n] == static_cast<std::int64_t>(n + 1));
      CHECK(b.values[n] <= 1);
    }
  }
}

TEST_CASE("minimal letter density") {
  const auto cube6 = min_letter_density(parse_predicate("cube-free", 2), 6, len_budget(6));
  CHECK(cube6.verdict == Verdict::found);
  CHECK(cube6.min_count == std::optional<std::size_t>(2));
  CHECK(cube6.witness->to_string() == "001001");
  CHECK(cube6.density == std::optional<Rational>(Rational(1, 3)));
  CHECK(min_letter_density(parse_predicate("square-free", 2), 4, len_budget(4)).verdict == Verdict::exhausted);
  const auto one = min_letter_density(parse_predicate("cube-free", 2), 1, len_budget(1));
  CHECK(one.min_count == std::optional<std::size_t>(0));
  std::size_t prev = 0;
  for (std::size_t L = 1; L <= 16; ++L) {
    const auto r = min_letter_density(parse_predicate("cube-free", 2), L, len_budget(L));
    REQUIRE(r.min_count);
    CHECK(*r.min_count >= prev);
    prev = *r.min_count;
    std::size_t brute = L;
    for (const auto& s : oracle::all_words(2, L))
      if (oracle::alpha_free(s, 3, 1, false))
        brute = std::min<std::size_t>(brute, std::count(s.begin(), s.end(), 'b'));
    CHECK(*r.min_count == brute);
  }
}

TEST_CASE("Rauzy graphs") {
  const auto f = rauzy_graph(PrefixOracle::fibonacci(), 1, 100);
  CHECK(f.vertices.size() == 2);
  CHECK(f.edges.size() == 3);
  const auto c = rauzy_graph(PrefixOracle::constant(), 3, 20);
  CHECK(c.vertices.size() == 1);
  REQUIRE(c.edges.size() == 1);
  CHECK(c.edges[0].from == c.edges[0].to);
  const auto t = rauzy_graph(PrefixOracle::thue_morse(), 1, 64);
  CHECK(t.vertices.size() == 2);
  CHECK(t.edges.size() == 4);
  CHECK(t.to_edge_list().find("0 -> 1 [01]") != std::string::npos);
  CHECK_THROWS_AS(rauzy_graph(PrefixOracle::fibonacci(), 5, 10), DomainError);
  for (const auto& e : t.edges) {
    CHECK(t.vertices[e.from] == e.label.substr(0, 1));
    CHECK(t.vertices[e.to] == e.label.substr(1));
  }
}
