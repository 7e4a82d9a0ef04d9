#include <doctest.h>

#include <chrono>
#include <random>

#include "oracles.hpp"
#include "wordlab/error.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/oracle.hpp"
#include "wordlab/patterns.hpp"
#include "wordlab/predicates.hpp"

using namespace wordlab;

namespace {
Word lat(const std::string& s, std::size_t k = 2) { return parse_word(s, Alphabet::latin(k)); }
SearchBudget len_budget(std::size_t len) {
  SearchBudget b;
  b.max_length = len;
  return b;
}
}  // namespace

TEST_CASE("pattern parsing") {
  const Pattern p = Pattern::parse("XYX");
  CHECK(p.size() == 3);
  CHECK(p.variable_count() == 2);
  CHECK(p.to_string() == "XYX");
  CHECK(Pattern::parse("XXX").power_degree() == 3);
  CHECK(Pattern::parse("XaX").has_constants());
  CHECK(Pattern::parse("XYX").power_degree() == 0);
  CHECK_THROWS(Pattern::parse(""));
  CHECK_THROWS(Pattern::parse("X!"));
}

TEST_CASE("encounter examples") {
  const auto sq = encounters(make_word("abcabc"), Pattern::parse("XX"));
  REQUIRE(sq);
  CHECK(sq->images[0].to_string() == "abc");
  CHECK_FALSE(encounters(make_word("abc"), Pattern::parse("XX")));
  const auto z = encounters(make_word("aabba"), Pattern::parse("XYX"));
  REQUIRE(z);
  CHECK(z->images[0].to_string() == "a");
  CHECK(z->images[1].to_string() == "abb");
  CHECK(z->position == 1);
}

TEST_CASE("encounters agree with brute force and witnesses verify") {
  std::mt19937_64 rng(29);
  const char* pats[] = {"XX", "XYX", "XYXY", "XXY", "XaX", "XYYX", "aXbX"};
  for (int t = 0; t < 300; ++t) {
    const auto s = oracle::random_word(rng, 2 + rng() % 2, rng() % 11);
    const Word w = lat(s, 3);
    for (const char* ps : pats) {
      const Pattern p = Pattern::parse(ps);
      const auto got = encounters(w, p);
      CHECK(got.has_value() == oracle::encounters(s, ps));
      if (got) {
        CHECK(verify_witness(w, p, *got));
        // monotone under extension
        CHECK(encounters(w.appended(0), p).has_value());
        CHECK(encounters(w.prepended(1), p).has_value());
      }
    }
  }
}

TEST_CASE("Zimin XYX is unavoidable on binary words of length 5") {
  for (const auto& s : oracle::all_words(2, 5)) CHECK(encounters(lat(s), Pattern::parse("XYX")).has_value());
}

TEST_CASE("longest avoiding") {
  const auto sq2 = longest_avoiding(Pattern::parse("XX"), 2, len_budget(10));
  CHECK(sq2.verdict == Verdict::exhausted);
  CHECK(sq2.word.to_string() == "aba");
  const auto sq3 = longest_avoiding(Pattern::parse("XX"), 3, len_budget(500));
  CHECK(sq3.verdict == Verdict::found);
  CHECK(sq3.word.size() == 500);
  CHECK_FALSE(encounters(sq3.word, Pattern::parse("XX")));
  const auto z = longest_avoiding(Pattern::parse("XYX"), 2, len_budget(10));
  CHECK(z.verdict == Verdict::exhausted);
  CHECK(z.word.to_string() == "aabb");
  SearchBudget none = len_budget(10);
  none.max_nodes = 5;
  CHECK(longest_avoiding(Pattern::parse("XX"), 3, none).verdict == Verdict::budget);
}

TEST_CASE("search verdicts do not depend on symmetry reduction or threads") {
  for (const char* ps : {"XX", "XYX", "XXX"}) {
    const Pattern p = Pattern::parse(ps);
    const auto pred = pattern_free_predicate(p);
    for (std::size_t threads : {1u, 3u}) {
      SearchBudget b = len_budget(40);
      b.threads = static_cast<unsigned>(threads);
      const auto a = longest_avoiding(p, 2, b);
      const auto c = longest_free_word(pred, 2, b);
      CHECK(a.verdict == c.verdict);
      CHECK(a.word.size() == c.word.size());
    }
  }
  // Same maximum with and without renaming symmetry (7/4-free ternary).
  SearchBudget b = len_budget(100);
  const auto sym = longest_free_word(power_free_predicate(Rational(7, 4), false), 3, b);
  const auto plain =
      longest_free_word(FreenessPredicate(PowerFreeChecker(Rational(7, 4), false), false, "7/4-free"), 3, b);
  CHECK(sym.verdict == Verdict::exhausted);
  CHECK(plain.verdict == Verdict::exhausted);
  CHECK(sym.word.size() == plain.word.size());
}

TEST_CASE("circular avoidance") {
  const auto c3 = circular_avoiding_lengths(Pattern::parse("XX"), 3, 4);
  CHECK(c3.count(3));
  CHECK(c3.count(4));
  CHECK(circular_avoiding_lengths(Pattern::parse("XX"), 1, 4) == std::set<std::size_t>{1});
  CHECK(circular_avoiding_lengths(Pattern::parse("XX"), 2, 6) == std::set<std::size_t>{1, 2});
  CHECK(is_circular_pfree(CircularWord(make_word("abcb")), Pattern::parse("XX")));
  CHECK_FALSE(is_circular_pfree(CircularWord(make_word("abab")), Pattern::parse("XX")));
  CHECK_THROWS_AS(circular_avoiding_lengths(Pattern::parse("XX"), 2, 0), DomainError);
}

TEST_CASE("maximal p-free words") {
  CHECK(is_maximal_pfree(lat("aba"), Pattern::parse("XX")));
  CHECK_FALSE(is_maximal_pfree(lat("a"), Pattern::parse("XX")));
  CHECK(is_maximal_pfree(Word(Alphabet::latin(1)), Pattern::parse("XX")));
  CHECK_THROWS_AS(is_maximal_pfree(lat("aa"), Pattern::parse("XX")), DomainError);
}

TEST_CASE("D0L avoidance checks") {
  CHECK(d0l_avoidance_check(thue_ternary_morphism(), 0, Pattern::parse("XX"), 4096).free);
  CHECK(d0l_avoidance_check(thue_morse_morphism(), 0, Pattern::parse("XXX"), 4096).free);
  const auto r = d0l_avoidance_check(thue_morse_morphism(), 0, Pattern::parse("XX"), 16);
  CHECK_FALSE(r.free);
  REQUIRE(r.witness);
  CHECK(r.witness->images[0].to_string() == "1");
  const auto hd0l =
      d0l_avoidance_check(thue_morse_morphism(), 0, Pattern::parse("XX"), 64, parse_morphism("0->0;1->00"));
  CHECK_FALSE(hd0l.free);
}

TEST_CASE("growth census") {
  const auto t = growth_census(parse_predicate("square-free", 3), 3, 5);
  CHECK(t.counts == std::vector<std::uint64_t>{1, 3, 6, 12, 18, 30});
  const auto b = growth_census(parse_predicate("square-free", 2), 2, 4);
  CHECK(b.counts == std::vector<std::uint64_t>{1, 2, 2, 2, 0});
  CHECK(b.trend == "finite");
  const auto u = growth_census(parse_predicate("cube-free", 1), 1, 4);
  CHECK(u.counts == std::vector<std::uint64_t>{1, 1, 1, 0, 0});
  // brute force across predicates
  for (const char* spec : {"overlap-free", "7/3-free", "pattern:XYXY", "abelian-square-free"}) {
    const auto g = growth_census(parse_predicate(spec, 2), 2, 10);
    for (std::size_t n = 0; n <= 10; ++n) {
      std::uint64_t c = 0;
      const auto pred = parse_predicate(spec, 2);
      for (const auto& s : oracle::all_words(2, n)) c += pred.accepts(lat(s));
      CHECK(g.counts[n] == c);
    }
  }
}

TEST_CASE("exhausted search agrees with the census") {
  const auto s = longest_avoiding(Pattern::parse("XYX"), 2, len_budget(20));
  REQUIRE(s.verdict == Verdict::exhausted);
  const auto g = growth_census(pattern_free_predicate(Pattern::parse("XYX")), 2, s.word.size() + 1);
  CHECK(g.counts.back() == 0);
  CHECK(g.counts[s.word.size()] > 0);
}

TEST_CASE("subtree exploration") {
  const auto sf2 = parse_predicate("square-free", 2);
  CHECK(subtree_explore(lat("aba"), sf2, 3).finite());
  CHECK_FALSE(subtree_explore(lat("a", 3), parse_predicate("square-free", 3), 10).finite());
  CHECK_THROWS_AS(subtree_explore(lat("aa"), sf2, 3), DomainError);
}

TEST_CASE("palindrome concatenations") {
  SearchBudget b = len_budget(50);
  const auto r = palindrome_concat_avoider(Pattern::parse("XX"), 3, b);
  CHECK(r.outcome.word.size() >= 50);
  CHECK_FALSE(encounters(r.outcome.word, Pattern::parse("XX")));
  Word cat(Alphabet::latin(3));
  for (const auto& blk : r.blocks) {
    CHECK(oracle::is_palindrome(blk.to_string()));
    cat = cat + blk;
  }
  CHECK(cat == r.outcome.word);
  const auto one = palindrome_concat_avoider(Pattern::parse("XX"), 1, b);
  CHECK(one.outcome.verdict == Verdict::exhausted);
  CHECK(one.outcome.word.size() == 1);
  SearchBudget empty = b;
  empty.max_nodes = 0;
  CHECK(palindrome_concat_avoider(Pattern::parse("XX"), 3, empty).outcome.verdict == Verdict::budget);
}

TEST_CASE("conducted shuffles") {
  CHECK(shuffle(make_word("ab"), lat("cd", 4), ConductionSequence::parse("0101")).to_string() == "acbd");
  CHECK(shuffle(make_word("ab"), lat("", 2), ConductionSequence::parse("00")).to_string() == "ab");
  CHECK(shuffle(make_word("ab"), make_word("ab"), ConductionSequence::parse("0011")).to_string() == "abab");
  CHECK_THROWS_AS(shuffle(make_word("ab"), make_word("ab"), ConductionSequence::parse("0001")), DomainError);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const auto u = oracle::random_word(rng, 3, rng() % 6), v = oracle::random_word(rng, 3, rng() % 6);
    std::string bits = std::string(u.size(), '0') + std::string(v.size(), '1');
    const Word cat = shuffle(lat(u, 3), lat(v, 3), ConductionSequence::parse(bits));
    CHECK(cat.to_string() == u + v);
    std::shuffle(bits.begin(), bits.end(), rng);
    const Word mix = shuffle(lat(u, 3), lat(v, 3), ConductionSequence::parse(bits));
    auto a = mix.to_string(), b = u + v;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("self shuffles") {
  CHECK_FALSE(self_shuffle_squarefree_search(lat("a")));
  CHECK_FALSE(self_shuffle_squarefree_search(lat("ab")));
  // exhaustive over the 20 conduction sequences of a 3-letter u
  for (const char* u : {"abc", "aba", "abcb"}) {
    const Word w = lat(u, 3);
    std::optional<std::string> first;
    std::uint64_t count = 0;
    const std::size_t n = std::string(u).size();
    std::string bits = std::string(n, '0') + std::string(n, '1');
    do {
      const auto s = shuffle(w, w, ConductionSequence::parse(bits)).to_string();
      if (oracle::squares(s).empty()) {
        ++count;
        if (!first) first = bits;
      }
    } while (std::next_permutation(bits.begin(), bits.end()));
    const auto got = self_shuffle_squarefree_search(w);
    CHECK(got.has_value() == first.has_value());
    if (got) CHECK(got->to_string() == *first);
    CHECK(count_self_shuffle_squarefree(w) == count);
  }
  CHECK_THROWS_AS(self_shuffle_squarefree_search(lat("aa")), DomainError);
  const auto root = self_shuffle_root(lat("aabb"));
  REQUIRE(root);
  CHECK(root->to_string() == "ab");
  CHECK_FALSE(self_shuffle_root(lat("aab")));
}

TEST_CASE("predicate parsing") {
  CHECK(parse_predicate("7/4+-free", 3).name() == "7/4+-free");
  CHECK(parse_predicate("5-power-free", 2).accepts(lat("aaaab")));
  CHECK_FALSE(parse_predicate("5-power-free", 2).accepts(lat("aaaaa")));
  CHECK_FALSE(parse_predicate("abelian-square-free", 2).accepts(lat("abba")));
  CHECK_FALSE(parse_predicate("additive:2", 3).symmetric());
  CHECK(parse_predicate("kabelian:2,2", 2).accepts(lat("aba")));
  CHECK_THROWS(parse_predicate("nonsense", 2));
  CHECK_THROWS(parse_predicate("kabelian:2", 2));
}

TEST_CASE("time budget stops searches with expensive nodes") {
  SearchBudget b;
  b.max_length = 10'000;
  b.max_nodes = 1'000'000'000;
  b.max_seconds = 0.5;
  const auto t0 = std::chrono::steady_clock::now();
  const auto o = longest_avoiding(Pattern::parse("ABXBCYCAZBATAC"), 3, b);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(o.verdict == Verdict::budget);
  CHECK(secs < 3.0);
}
