#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wordlab/error.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/oracle.hpp"
#include "wordlab/rational.hpp"
#include "wordlab/word.hpp"

using namespace wordlab;

TEST_CASE("alphabet and word basics") {
  CHECK_THROWS_AS(Alphabet(0), DomainError);
  CHECK_THROWS(Alphabet(2, "aa"));
  const Word w = make_word("abaab");
  CHECK(w.size() == 5);
  CHECK(w.alphabet().size() == 2);
  CHECK(w.to_string() == "abaab");
  CHECK(parse_word("0,1,0,0,1").to_string() == "0,1,0,0,1");
  CHECK(parse_word("0,1,0,0,1") == make_word("01001"));
  CHECK(make_word("").empty());
  CHECK(w.substr(1, 3).to_string() == "baa");
  CHECK(w.reversed().to_string() == "baaba");
}

TEST_CASE("word list parsing skips comments and blanks") {
  const auto ws = parse_word_list("ab # first\n\n# only a comment\nba\n");
  REQUIRE(ws.size() == 2);
  CHECK(ws[1].to_string() == "ba");
}

TEST_CASE("rational arithmetic stays reduced") {
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(1, -2).den() == 2);
  CHECK(Rational::parse("7/4") == Rational(7, 4));
  CHECK(Rational::parse("3").to_string() == "3/1");
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(7, 4) > Rational(5, 3));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("apply_morphism examples") {
  const Morphism tm = parse_morphism("0->01;1->10");
  CHECK(apply_morphism(tm, make_word("0")).to_string() == "01");
  CHECK(apply_morphism(tm, make_word("")).empty());
  const Morphism h = parse_morphism("0->03;1->43;3->1;4->01");
  CHECK(apply_morphism(h, make_word("03")).to_string() == "031");
  CHECK_THROWS_AS(apply_morphism(tm, parse_word("2")), DomainMismatchError);
}

TEST_CASE("homomorphism law on random words") {
  std::mt19937_64 rng(7);
  const Morphism m = parse_morphism("a->abc;b->ac;c->b");
  for (int t = 0; t < 200; ++t) {
    const Word u = parse_word(oracle::random_word(rng, 3, rng() % 12), Alphabet::latin(3));
    const Word v = parse_word(oracle::random_word(rng, 3, rng() % 12), Alphabet::latin(3));
    CHECK(apply_morphism(m, u + v) == apply_morphism(m, u) + apply_morphism(m, v));
  }
}

TEST_CASE("fixed point prefixes") {
  CHECK(fixed_point_prefix(parse_morphism("0->01;1->10"), 0, 8).to_string() == "01101001");
  CHECK(fixed_point_prefix(parse_morphism("a->ab;b->a"), 0, 8).to_string() == "abaababa");
  CHECK(fixed_point_prefix(parse_morphism("a->abc;b->ac;c->b"), 0, 6).to_string() == "abcacb");
  CHECK_THROWS_AS(fixed_point_prefix(parse_morphism("a->ba;b->a"), 0, 4), NotProlongableError);
  CHECK_THROWS_AS(fixed_point_prefix(parse_morphism("a->a;b->ab"), 0, 4), NotProlongableError);
  const Morphism m = thue_ternary_morphism();
  for (std::size_t n = 0; n < 60; ++n) {
    const Word p = fixed_point_prefix(m, 0, n);
    CHECK(p.is_prefix_of(fixed_point_prefix(m, 0, n + 1)));
    CHECK(p.is_prefix_of(apply_morphism(m, p)));
  }
}

TEST_CASE("classic words") {
  const unsigned k3[] = {3};
  CHECK(classic_word("zimin", k3, 0).to_string() == "1213121");
  CHECK(classic_word("thue_morse", {}, 4).to_string() == "0110");
  CHECK(classic_word("fibonacci", {}, 5).to_string() == "abaab");
  for (std::size_t k = 1; k <= 8; ++k) CHECK(zimin_word(k).size() == (std::size_t{1} << k) - 1);
  const unsigned k0[] = {0};
  CHECK_THROWS(classic_word("zimin", k0, 0));
  CHECK_THROWS(classic_word("sturmian", {}, 5));
  CHECK_THROWS(classic_word("no_such_word", {}, 5));
  const unsigned ones[] = {1};
  CHECK(classic_word("sturmian", ones, 13) == PrefixOracle::fibonacci().prefix(13));
}

TEST_CASE("oracle prefixes are consistent") {
  for (const char* spec : {"thue_morse", "fibonacci", "thue_ternary", "tribonacci", "makela", "sturmian:1,2,3",
                           "periodic:aab", "morphism:a->ab;b->a@a"}) {
    const PrefixOracle o = make_oracle(spec);
    const Word big = o.prefix(300);
    CHECK(big.size() == 300);
    for (std::size_t n : {0u, 1u, 17u, 150u}) CHECK(o.prefix(n).is_prefix_of(big));
    CHECK(o.prefix(37) == o.prefix(37));
  }
  CHECK_THROWS(make_oracle("bogus"));
}

TEST_CASE("factor sets") {
  CHECK(factor_set(make_word("abab"), 2).size() == 2);
  const auto e = factor_set(make_word("abc"), 0);
  REQUIRE(e.size() == 1);
  CHECK(e.begin()->empty());
  CHECK(factor_set(make_word("ab"), 3).empty());
  const auto c = factor_set(CircularWord(make_word("abcb")), 4);
  std::set<std::string> got;
  for (const auto& w : c) got.insert(w.to_string());
  CHECK(got == std::set<std::string>{"abcb", "bcba", "cbab", "babc"});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto s = oracle::random_word(rng, 3, 1 + rng() % 15);
    const Word w = parse_word(s, Alphabet::latin(3));
    for (std::size_t n = 0; n <= s.size(); ++n) {
      CHECK(factor_set(w, n).size() == oracle::factors(s, n).size());
      std::size_t cap = 1;
      for (std::size_t i = 0; i < n && cap < 1'000'000; ++i) cap *= 3;
      CHECK(factor_set(w, n).size() <= std::min(s.size() - n + 1, cap));
    }
  }
}

TEST_CASE("circular words compare up to rotation") {
  CHECK(CircularWord(make_word("abcb")) == CircularWord(make_word("cbab")));
  CHECK(!(CircularWord(make_word("aab")) == CircularWord(make_word("abb"))));
  CHECK(CircularWord(make_word("bca")).canonical().to_string() == "abc");
  CHECK_THROWS(CircularWord(Word(Alphabet::latin(2))));
}
