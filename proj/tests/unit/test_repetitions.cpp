#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wordlab/error.hpp"
#include "wordlab/oracle.hpp"
#include "wordlab/repetitions.hpp"

using namespace wordlab;

namespace {
Word lat(const std::string& s, std::size_t k = 2) { return parse_word(s, Alphabet::latin(k)); }
std::set<std::string> strings(const std::set<Word>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(w.to_string());
  return out;
}
}  // namespace

TEST_CASE("least period") {
  CHECK(least_period(make_word("abaab")) == 3);
  CHECK(least_period(make_word("aaaa")) == 1);
  CHECK(least_period(make_word("abc")) == 3);
  CHECK_THROWS_AS(least_period(Word(Alphabet::latin(2))), DomainError);
}

TEST_CASE("Fine-Wilf on random words") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 400; ++t) {
    const auto s = oracle::random_word(rng, 2, 2 + rng() % 14);
    std::vector<std::size_t> periods;
    for (std::size_t p = 1; p <= s.size(); ++p) {
      bool ok = true;
      for (std::size_t i = 0; i + p < s.size(); ++i) ok = ok && s[i] == s[i + p];
      if (ok) periods.push_back(p);
    }
    CHECK(least_period(lat(s)) == periods.front());
    for (auto p : periods)
      for (auto q : periods)
        if (p + q - std::gcd(p, q) <= s.size())
          CHECK(std::find(periods.begin(), periods.end(), std::gcd(p, q)) != periods.end());
  }
}

TEST_CASE("max exponent") {
  CHECK(max_exponent(make_word("abaab")) == Rational(2));
  CHECK(max_exponent(make_word("01101001")) == Rational(2));
  CHECK(max_exponent(make_word("aaa")) == Rational(3));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const auto s = oracle::random_word(rng, 3, 1 + rng() % 14);
    const auto [n, d] = oracle::max_exponent(s);
    const Rational e = max_exponent(lat(s, 3));
    CHECK(e == Rational(n, d));
    CHECK(e >= Rational(static_cast<std::int64_t>(s.size()), static_cast<std::int64_t>(least_period(lat(s, 3)))));
  }
}

TEST_CASE("alpha freeness") {
  CHECK_FALSE(is_alpha_free(make_word("0110"), Rational(2), false));
  CHECK(is_alpha_free(make_word("aba"), Rational(2), false));
  CHECK(is_alpha_free(PrefixOracle::thue_morse().prefix(64), Rational(2), true));
  CHECK_THROWS_AS(is_alpha_free(make_word("ab"), Rational(1), false), DomainError);
  std::mt19937_64 rng(9);
  const std::pair<int, int> alphas[] = {{3, 2}, {7, 4}, {2, 1}, {7, 3}, {5, 2}, {3, 1}};
  for (int t = 0; t < 300; ++t) {
    const auto s = oracle::random_word(rng, 3, 1 + rng() % 13);
    const Word w = lat(s, 3);
    for (auto [n, d] : alphas)
      for (bool strict : {false, true}) {
        const bool got = is_alpha_free(w, Rational(n, d), strict);
        CHECK(got == oracle::alpha_free(s, n, d, strict));
      }
    // monotone in alpha
    for (std::size_t i = 0; i + 1 < std::size(alphas); ++i)
      if (is_alpha_free(w, Rational(alphas[i].first, alphas[i].second), false))
        CHECK(is_alpha_free(w, Rational(alphas[i + 1].first, alphas[i + 1].second), false));
  }
}

TEST_CASE("distinct squares") {
  CHECK(count_distinct_squares(make_word("aabb")) == 2);
  CHECK(count_distinct_squares(make_word("abc")) == 0);
  CHECK(count_distinct_squares(make_word("abaababa")) == 4);
  CHECK(square_density(make_word("aabb")) == Rational(1, 2));
  CHECK(square_density(make_word("abc")) == Rational(0));
  CHECK(square_density(make_word("aaaa")) == Rational(1, 2));
  CHECK_THROWS_AS(square_density(Word(Alphabet::latin(1))), DomainError);
  std::set<std::string> sq;
  for (const auto& w : distinct_squares(make_word("abaababa"))) sq.insert(w.to_string());
  CHECK(sq == std::set<std::string>{"aa", "abab", "baba", "abaaba"});
  std::mt19937_64 rng(13);
  for (int t = 0; t < 400; ++t) {
    const auto s = oracle::random_word(rng, 1 + rng() % 3, rng() % 40);
    const Word w = lat(s, 3);
    const auto expect = oracle::squares(s).size();
    CHECK(count_distinct_squares(w) == expect);
    CHECK(count_distinct_squares_naive(w) == expect);
    CHECK(count_distinct_squares(w.appended(static_cast<Letter>(rng() % 3))) >= expect);
  }
}

TEST_CASE("runs") {
  const auto r = runs(make_word("aabaabaa"));
  CHECK(r.size() == 4);
  CHECK(std::count_if(r.begin(), r.end(), [](const Run& x) { return x.period == 3 && x.start == 1 && x.end == 8; }) == 1);
  CHECK(count_runs(make_word("abc")) == 0);
  const auto a = runs(make_word("aaaa"));
  REQUIRE(a.size() == 1);
  CHECK(a[0].start == 1);
  CHECK(a[0].end == 4);
  CHECK(a[0].period == 1);
}

TEST_CASE("runs match the maximal-repetition oracle on all binary words up to 12") {
  for (std::size_t n = 0; n <= 12; ++n)
    for (const auto& s : oracle::all_words(2, n)) {
      const auto expect = oracle::runs(s);
      const auto got = runs(lat(s));
      REQUIRE(got.size() == expect.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].start == expect[i].start);
        CHECK(got[i].end == expect[i].end);
        CHECK(got[i].period == expect[i].period);
      }
      CHECK(runs_naive(lat(s)).size() == expect.size());
    }
}

TEST_CASE("reported runs satisfy their invariants") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const auto s = oracle::random_word(rng, 2 + rng() % 2, rng() % 60);
    for (const Run& r : runs(lat(s, 3))) {
      const auto f = s.substr(r.start - 1, r.length());
      CHECK(r.length() >= 2 * r.period);
      CHECK(oracle::period(f) == r.period);
      if (r.start > 1) CHECK(oracle::period(s.substr(r.start - 2, r.length() + 1)) != r.period);
      if (r.end < s.size()) CHECK(oracle::period(s.substr(r.start - 1, r.length() + 1)) != r.period);
    }
  }
}

TEST_CASE("frt probe") {
  const auto tm = frt_probe(PrefixOracle::thue_morse(), Rational(2), 256);
  CHECK(!tm.factors.empty());
  CHECK(tm.factors.size() < 60);
  const auto tt = frt_probe(PrefixOracle::thue_ternary(), Rational(2), 256);
  CHECK(tt.factors.empty());
  const auto f1 = frt_probe(PrefixOracle::fibonacci(), Rational(2), 256);
  const auto f2 = frt_probe(PrefixOracle::fibonacci(), Rational(2), 1024);
  CHECK(!f1.factors.empty());
  CHECK(f2.factors.size() > f1.factors.size());
  for (const auto& [w, pos] : f1.factors) CHECK(exponent(w) == Rational(2));
}

TEST_CASE("sturmian period sets") {
  const unsigned ones[] = {1};
  const auto fib = sturmian_period_set(ones, 13);
  for (std::uint64_t v : {1u, 2u, 3u, 5u, 8u, 13u}) CHECK(fib.contains(v));
  CHECK_FALSE(fib.contains(4));
  const unsigned two[] = {2};
  const auto s2 = sturmian_period_set(two, 3);
  CHECK(s2.values == std::set<std::uint64_t>{1, 2, 3});
  CHECK(sturmian_period_set(ones, 0).values.empty());
  const unsigned bad[] = {1, 0};
  CHECK_THROWS_AS(sturmian_period_set(bad, 10), DomainError);
}

TEST_CASE("square duplication") {
  CHECK(strings(suffix_square_duplicate(make_word("ab"))) == std::set<std::string>{"abb", "abab"});
  CHECK(strings(suffix_square_duplicate(make_word("a"))) == std::set<std::string>{"aa"});
  CHECK(strings(suffix_square_duplicate(make_word("aba"))) == std::set<std::string>{"abaa", "ababa", "abaaba"});
  CHECK(strings(prefix_square_duplicate(make_word("ab"))) == std::set<std::string>{"aab", "abab"});
}

TEST_CASE("square completion") {
  CHECK(strings(suffix_square_complete(make_word("abab"))) == std::set<std::string>{"ababa"});
  CHECK(suffix_square_complete(make_word("aa")).empty());
  CompletionConfig with_empty;
  with_empty.allow_empty_x = true;
  // y = a, x empty: the word itself
  CHECK(strings(suffix_square_complete(make_word("aa"), with_empty)) == std::set<std::string>{"aa"});
  CHECK(suffix_square_complete(make_word("ab")).empty());
  // brute force: w x with y x y a suffix of w
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const auto s = oracle::random_word(rng, 2, 1 + rng() % 9);
    std::set<std::string> expect;
    for (std::size_t yl = 1; 2 * yl <= s.size(); ++yl)
      for (std::size_t xl = 1; 2 * yl + xl <= s.size(); ++xl) {
        const auto suf = s.substr(s.size() - 2 * yl - xl);
        if (suf.substr(0, yl) == suf.substr(yl + xl)) expect.insert(s + suf.substr(yl, xl));
      }
    CHECK(strings(suffix_square_complete(lat(s))) == expect);
  }
}

TEST_CASE("completion distance") {
  SearchBudget b;
  const auto same = completion_distance(make_word("ab"), make_word("ab"), b);
  CHECK(same.steps == std::optional<std::size_t>(0));
  CompletionConfig dup;
  dup.duplication = true;
  const auto one = completion_distance(lat("a"), lat("aa"), b, dup);
  CHECK(one.verdict == Verdict::found);
  CHECK(one.steps == std::optional<std::size_t>(1));
  const auto none = completion_distance(lat("a"), lat("aa"), b);
  CHECK(none.verdict == Verdict::exhausted);
  CHECK_THROWS_AS(completion_distance(lat("bb"), lat("aba"), b), DomainError);
}
