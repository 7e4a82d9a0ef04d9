#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wordlab/abelian.hpp"
#include "wordlab/error.hpp"
#include "wordlab/oracle.hpp"

using namespace wordlab;

namespace {
Word lat(const std::string& s, std::size_t k = 2) { return parse_word(s, Alphabet::latin(k)); }
SearchBudget len_budget(std::size_t len) {
  SearchBudget b;
  b.max_length = len;
  return b;
}
std::map<char, int> letter_counts(const std::string& s) {
  std::map<char, int> m;
  for (char c : s) ++m[c];
  return m;
}
}  // namespace

TEST_CASE("parikh vectors") {
  CHECK(parikh(make_word("aab")) == ParikhVector{2, 1});
  CHECK(parikh(lat("")) == ParikhVector{0, 0});
  CHECK(parikh(parse_word("0312", Alphabet::digits(4))) == ParikhVector{1, 1, 1, 1});
}

TEST_CASE("k-abelian equivalence") {
  CHECK(kabelian_equiv(lat("ab"), lat("ba"), 1));
  CHECK_FALSE(kabelian_equiv(lat("abab"), lat("abba"), 2));
  CHECK(kabelian_equiv(lat("abab"), lat("abab"), 5));
  CHECK_THROWS_AS(kabelian_equiv(lat("a"), lat("a"), 0), DomainError);
  // "aabab" and "abaab" agree on all factors of length <= 2 yet differ.
  CHECK(kabelian_equiv(lat("aabab"), lat("abaab"), 2));
  CHECK(oracle::kabelian("aabab", "abaab", 2));
}

TEST_CASE("k-abelian equivalence laws on random triples") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 1 + rng() % 8, k = 1 + rng() % 4;
    const auto a = oracle::random_word(rng, 2, n), b = oracle::random_word(rng, 2, n),
               c = oracle::random_word(rng, 2, n);
    const Word u = lat(a), v = lat(b), w = lat(c);
    CHECK(kabelian_equiv(u, v, k) == oracle::kabelian(a, b, k));
    CHECK(kabelian_equiv(u, v, k) == kabelian_equiv(v, u, k));
    if (kabelian_equiv(u, v, k) && kabelian_equiv(v, w, k)) CHECK(kabelian_equiv(u, w, k));
    if (kabelian_equiv(u, v, k + 1)) CHECK(kabelian_equiv(u, v, k));
    CHECK(kabelian_equiv(u, v, n) == (a == b));
  }
}

TEST_CASE("k-abelian powers") {
  const auto r = is_kabelian_npower(lat("abba"), 2, 1);
  REQUIRE(r);
  CHECK(r->block_length == 2);
  CHECK(r->blocks == 2);
  CHECK(is_kabelian_npower(lat("abab"), 2, 2));
  CHECK_FALSE(is_kabelian_npower(lat("abc", 3), 2, 1));
  CHECK_FALSE(is_kabelian_npower(lat("abba"), 2, 2));
  std::mt19937_64 rng(43);
  for (int t = 0; t < 300; ++t) {
    const auto s = oracle::random_word(rng, 2, 2 + rng() % 10);
    for (std::size_t k = 1; k <= 3; ++k)
      if (is_kabelian_npower(lat(s), 2, k + 1)) CHECK(is_kabelian_npower(lat(s), 2, k));
  }
}

TEST_CASE("strongly k-abelian powers") {
  CHECK(is_strongly_kabelian_npower(lat("abba"), 2, 1));
  CHECK(is_strongly_kabelian_npower(lat("abab"), 2, 3));
  CHECK(is_strongly_kabelian_npower(lat("abcabc", 3), 2, 2));
  CHECK_FALSE(is_strongly_kabelian_npower(lat("ab"), 2, 1));
  // brute force: compare with every x over the alphabet
  std::mt19937_64 rng(47);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2, m = 1 + rng() % 3, k = 1 + rng() % 3;
    const auto s = oracle::random_word(rng, 2, n * m);
    bool expect = false;
    for (const auto& x : oracle::all_words(2, m)) expect = expect || oracle::kabelian(s, x + x, k);
    CHECK(is_strongly_kabelian_npower(lat(s), n, k) == expect);
  }
}

TEST_CASE("abelian encounters") {
  CHECK(abelian_encounters(lat("abba"), Pattern::parse("XX")));
  CHECK_FALSE(abelian_encounters(lat("abc", 3), Pattern::parse("XX")));
  CHECK(abelian_encounters(zimin_word(2), Pattern::parse("XYX")));
  CHECK_THROWS_AS(abelian_encounters(lat("ab"), Pattern::parse("XaX")), UnsupportedError);
  CHECK(abelian_encounters(lat("aab"), Pattern::parse("XXb"), true));
  const auto w = abelian_encounter_witness(lat("babba"), Pattern::parse("XYX"));
  REQUIRE(w);
  CHECK(w->size() == 3);
  CHECK(parikh((*w)[0]) == parikh((*w)[2]));
}

TEST_CASE("Zimin abelian tests") {
  CHECK(zimin_abelian_test(Pattern::parse("XX"), 1));
  CHECK(zimin_abelian_test(Pattern::parse("XX"), 2));
  CHECK_FALSE(zimin_abelian_test(Pattern::parse("XYX"), 2));
}

TEST_CASE("abelian square counting") {
  CHECK(count_abelian_squares(lat("abba"), AbelianSquareMode::distinct) == 2);
  CHECK(count_abelian_squares(lat("abc", 3), AbelianSquareMode::distinct) == 0);
  CHECK(count_abelian_squares(lat("abc", 3), AbelianSquareMode::inequivalent) == 0);
  CHECK(count_abelian_squares(lat("aaaa", 1), AbelianSquareMode::distinct) == 2);
  CHECK(count_abelian_squares(lat("aaaa", 1), AbelianSquareMode::inequivalent) == 2);
  std::mt19937_64 rng(53);
  for (int t = 0; t < 200; ++t) {
    const auto s = oracle::random_word(rng, 3, rng() % 30);
    std::set<std::string> shapes;
    std::set<std::map<char, int>> classes;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t h = 1; i + 2 * h <= s.size(); ++h)
        if (letter_counts(s.substr(i, h)) == letter_counts(s.substr(i + h, h))) {
          shapes.insert(s.substr(i, 2 * h));
          classes.insert(letter_counts(s.substr(i, 2 * h)));
        }
    const auto d = count_abelian_squares(lat(s, 3), AbelianSquareMode::distinct);
    const auto q = count_abelian_squares(lat(s, 3), AbelianSquareMode::inequivalent);
    CHECK(d == shapes.size());
    CHECK(q == classes.size());
    CHECK(d >= q);
  }
}

TEST_CASE("additive powers") {
  const Alphabet ab12(2, "12");
  CHECK(is_additive_npower(parse_word("1221", ab12), 2));
  CHECK_FALSE(is_additive_npower(parse_word("12", ab12), 2));
  const Alphabet d4 = Alphabet::digits(4);
  // 0312 | 1203: sums 6 and 6
  CHECK(is_additive_npower(parse_word("03121203", d4), 2));
  CHECK_FALSE(is_additive_npower(parse_word("03121213", d4), 2));
  const std::vector<std::int64_t> vals{0, 2, 5};
  CHECK(is_additive_npower(parse_word("abba", Alphabet::latin(3)), 2, vals));
  CHECK_FALSE(is_additive_npower(parse_word("acbb", Alphabet::latin(3)), 2, vals));
  // abelian power implies additive power
  std::mt19937_64 rng(59);
  for (int t = 0; t < 300; ++t) {
    const auto s = oracle::random_word(rng, 3, 2 * (1 + rng() % 5));
    if (is_kabelian_npower(lat(s, 3), 2, 1)) CHECK(is_additive_npower(lat(s, 3), 2));
  }
}

TEST_CASE("long power avoidance searches") {
  const auto a3 = avoid_long_powers_search(3, {EquivalenceKind::abelian, 1, std::nullopt}, 2, 1, len_budget(100));
  CHECK(a3.verdict == Verdict::exhausted);
  CHECK(a3.word.size() == 7);
  const auto a4 = avoid_long_powers_search(4, {EquivalenceKind::abelian, 1, std::nullopt}, 2, 1, len_budget(100));
  CHECK(a4.verdict == Verdict::found);
  CHECK(a4.word.size() == 100);
  CHECK(count_abelian_squares(a4.word, AbelianSquareMode::distinct) == 0);
  const auto c2 = avoid_long_powers_search(2, {EquivalenceKind::abelian, 1, std::nullopt}, 3, 1, len_budget(100));
  CHECK(c2.verdict == Verdict::exhausted);
  CHECK(c2.word.size() == 9);
  // min period 2 lets "aa" through
  const auto p2 = avoid_long_powers_search(2, {EquivalenceKind::abelian, 1, std::nullopt}, 2, 2, len_budget(100));
  CHECK(p2.word.size() > 3);
}

TEST_CASE("long power checker matches brute force") {
  for (std::size_t min_p : {1u, 2u})
    for (std::size_t len = 0; len <= 9; ++len)
      for (const auto& s : oracle::all_words(2, len)) {
        LongPowerChecker c({EquivalenceKind::k_abelian, 2, std::nullopt}, 2, min_p, 2);
        bool ok = true;
        for (char ch : s) {
          ok = c.push(static_cast<Letter>(ch - 'a'));
          if (!ok) break;
        }
        bool expect = true;
        for (std::size_t i = 0; i < s.size() && expect; ++i)
          for (std::size_t h = min_p; i + 2 * h <= s.size() && expect; ++h)
            if (oracle::kabelian(s.substr(i, h), s.substr(i + h, h), 2)) expect = false;
        CHECK(ok == expect);
      }
}

TEST_CASE("abelian fractional checker matches the definition") {
  // w = uv, |w| >= s|u|, v nonempty, Parikh(v) <= Parikh(u)
  for (const auto& s : {Rational(3, 2), Rational(2), Rational(5, 4)})
    for (std::size_t len = 1; len <= 9; ++len)
      for (const auto& w : oracle::all_words(2, len)) {
        AbelianFractionalChecker c(s, 2);
        bool ok = true;
        for (char ch : w)
          if (!(ok = c.push(static_cast<Letter>(ch - 'a')))) break;
        bool expect = true;
        for (std::size_t i = 0; i < w.size() && expect; ++i)
          for (std::size_t j = i + 1; j <= w.size() && expect; ++j) {
            const auto f = w.substr(i, j - i);
            for (std::size_t ul = 1; ul < f.size() && expect; ++ul) {
              if (Rational(static_cast<std::int64_t>(f.size())) < s * Rational(static_cast<std::int64_t>(ul))) continue;
              const auto u = letter_counts(f.substr(0, ul)), v = letter_counts(f.substr(ul));
              bool dominated = true;
              for (auto [ch, cnt] : v) dominated = dominated && u.count(ch) && u.at(ch) >= cnt;
              if (dominated) expect = false;
            }
          }
        CHECK(ok == expect);
      }
}

TEST_CASE("ART and DART probes") {
  const auto four = art_probe(4, {Rational(2)}, len_budget(60));
  CHECK(four.upper_evidence == std::optional<Rational>(Rational(2)));
  const auto one = art_probe(1, {Rational(3, 2)}, len_budget(60));
  CHECK(one.rows.at(0).verdict == Verdict::exhausted);
  const auto three = art_probe(3, {Rational(2)}, len_budget(60));
  CHECK(three.lower_evidence == std::optional<Rational>(Rational(2)));
  CHECK_THROWS_AS(art_probe(3, {}, len_budget(10)), DomainError);
  const auto d = dart_probe(Rational(2), 4, len_budget(60));
  CHECK(d.least_sustained_letters == std::optional<std::size_t>(4));
  CHECK(d.greatest_exhausted_letters == std::optional<std::size_t>(3));
}

TEST_CASE("strong power census") {
  const auto c = strong_power_census(2, 2, 1, 2);
  CHECK(c.words == 4);
  CHECK(c.classes == 3);
  CHECK(c.classes_with_power == 2);
  const auto one = strong_power_census(3, 2, 1, 1);
  CHECK(one.classes_with_power == 0);
  CHECK(one.strong_powers == 0);
  CHECK(one.avoiders == 3);
  // binary length 4, n = 2, k = 2, by brute force
  const auto t = strong_power_census(2, 2, 2, 4);
  const auto words = oracle::all_words(2, 4);
  std::uint64_t strong = 0, avoid = 0;
  auto strong_power = [&](const std::string& s) {
    if (s.size() % 2) return false;
    for (const auto& x : oracle::all_words(2, s.size() / 2))
      if (oracle::kabelian(s, x + x, 2)) return true;
    return false;
  };
  for (const auto& s : words) {
    strong += strong_power(s);
    bool free = true;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t l = 2; i + l <= s.size(); l += 2) free = free && !strong_power(s.substr(i, l));
    avoid += free;
  }
  CHECK(t.strong_powers == strong);
  CHECK(t.avoiders == avoid);
  CHECK_THROWS_AS(strong_power_census(3, 2, 1, 30, 1000), BudgetError);
}

TEST_CASE("Makela exploration") {
  const auto r = makela_exploration(parse_morphism("0->0;1->1;3->3;4->4"), 200);
  CHECK(r.word.size() == 200);
  CHECK(r.word == PrefixOracle::makela().prefix(200).with_alphabet(r.word.alphabet()));
  const auto direct = abelian_cube_occurrences(r.word);
  CHECK(direct.by_block_length == r.by_block_length);
  // brute-force count on a short word
  const Word w = lat("aabbaabab");
  const auto occ = abelian_cube_occurrences(w);
  std::map<std::size_t, std::uint64_t> expect;
  const auto s = w.to_string();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t h = 1; i + 3 * h <= s.size(); ++h) {
      const auto a = letter_counts(s.substr(i, h));
      if (a == letter_counts(s.substr(i + h, h)) && a == letter_counts(s.substr(i + 2 * h, h))) ++expect[h];
    }
  CHECK(occ.by_block_length == expect);
}
