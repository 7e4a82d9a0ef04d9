#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordlab/morphism.hpp"
#include "wordlab/patterns.hpp"
#include "wordlab/rational.hpp"
#include "wordlab/search.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

using ParikhVector = std::vector<std::size_t>;

ParikhVector parikh(const Word& w);

/// Equal occurrence counts for every word of length <= k. The usual extra
/// prefix/suffix condition is deliberately not imposed.
bool kabelian_equiv(const Word& u, const Word& v, std::size_t k);

enum class EquivalenceKind { abelian, k_abelian, additive, strongly_k_abelian };
std::string to_string(EquivalenceKind kind);

struct AbelianPowerReport {
  std::size_t block_length = 0;
  std::size_t blocks = 0;
  EquivalenceKind kind = EquivalenceKind::abelian;
  std::size_t k = 1;
};

/// n consecutive equal-length blocks, pairwise k-abelian equivalent.
std::optional<AbelianPowerReport> is_kabelian_npower(const Word& w, std::size_t n, std::size_t k);

/// w is k-abelian equivalent to some x^n with |x^n| = |w|. Candidates x are
/// restricted to Parikh(w)/n; more than `max_candidates` throws BudgetError.
bool is_strongly_kabelian_npower(const Word& w, std::size_t n, std::size_t k,
                                 std::uint64_t max_candidates = 50'000'000);

/// Blocks f_1..f_|p| (nonempty) with abelian-equivalent blocks wherever the
/// pattern repeats a variable. Constants, when allowed, match themselves.
std::optional<std::vector<Word>> abelian_encounter_witness(const Word& w, const Pattern& p,
                                                           bool allow_constants = false);
bool abelian_encounters(const Word& w, const Pattern& p, bool allow_constants = false);

/// True iff Z_n does not abelian-encounter p.
bool zimin_abelian_test(const Pattern& p, std::size_t n);

enum class AbelianSquareMode { distinct, inequivalent };
std::size_t count_abelian_squares(const Word& w, AbelianSquareMode mode);

/// Letter values for additive powers: digit glyphs count as their digit,
/// other letters as their index, unless an explicit table is given.
std::vector<std::int64_t> letter_values(const Alphabet& alphabet,
                                        const std::optional<std::vector<std::int64_t>>& values = std::nullopt);

/// n equal-length blocks with equal value sums.
std::optional<AbelianPowerReport> is_additive_npower(const Word& w, std::size_t n,
                                                     const std::optional<std::vector<std::int64_t>>& values = std::nullopt);

struct LongPowerKind {
  EquivalenceKind kind = EquivalenceKind::abelian;
  std::size_t k = 1;                                // for k_abelian
  std::optional<std::vector<std::int64_t>> values;  // for additive
};

/// Rejects words ending in an n-power of the given kind whose block length
/// is at least `min_period`.
class LongPowerChecker {
 public:
  LongPowerChecker(LongPowerKind kind, std::size_t n, std::size_t min_period, std::size_t alphabet_size);
  bool push(Letter a);
  void pop();

 private:
  bool blocks_equivalent(std::size_t s, std::size_t t, std::size_t m) const;

  LongPowerKind kind_;
  std::size_t n_, min_period_, k_;
  std::vector<Letter> word_;
  std::vector<std::vector<std::size_t>> counts_;  // counts_[i][a] = |w[0..i)|_a
  std::vector<std::int64_t> sums_;
  std::vector<std::int64_t> values_;
};

SearchOutcome avoid_long_powers_search(std::size_t k_letters, const LongPowerKind& kind, std::size_t n,
                                       std::size_t min_period, const SearchBudget& budget);

/// Abelian s-power: w = uv with |w| >= s|u|, v nonempty and
/// Parikh(v) <= Parikh(u) letterwise. Rejects words with such a suffix.
class AbelianFractionalChecker {
 public:
  AbelianFractionalChecker(Rational s, std::size_t alphabet_size);
  bool push(Letter a);
  void pop();

 private:
  std::int64_t num_, den_;
  std::size_t k_;
  std::vector<std::vector<std::size_t>> counts_;
};

struct ThresholdProbe {
  struct Row {
    Rational s;
    std::size_t letters = 0;
    Verdict verdict = Verdict::budget;
    std::size_t reached = 0;
  };
  std::vector<Row> rows;
  /// Least exponent sustained to the length budget, if any.
  std::optional<Rational> upper_evidence;
  /// Greatest exponent whose search exhausted, if any.
  std::optional<Rational> lower_evidence;
  /// Alphabet-size bracket, filled by dart_probe.
  std::optional<std::size_t> least_sustained_letters;
  std::optional<std::size_t> greatest_exhausted_letters;
};

/// Abelian repetition threshold bracket on n letters over an exponent grid.
ThresholdProbe art_probe(std::size_t n, const std::vector<Rational>& grid, const SearchBudget& budget);
/// Least alphabet size in [1, n_max] sustaining abelian y^r avoidance.
ThresholdProbe dart_probe(const Rational& r, std::size_t n_max, const SearchBudget& budget);

struct StrongPowerCensus {
  std::size_t length = 0;
  std::uint64_t words = 0;
  std::uint64_t classes = 0;
  std::uint64_t classes_with_power = 0;
  std::uint64_t strong_powers = 0;
  /// Words with no factor that is a strongly k-abelian n-th power.
  std::uint64_t avoiders = 0;
};

StrongPowerCensus strong_power_census(std::size_t alphabet_size, std::size_t n, std::size_t k, std::size_t length,
                                      std::uint64_t max_words = 1u << 22);

struct CubeOccurrences {
  std::size_t horizon = 0;
  Word word;
  /// block length -> number of abelian-cube occurrences with that block length
  std::map<std::size_t, std::uint64_t> by_block_length;
};

CubeOccurrences abelian_cube_occurrences(const Word& w);
/// Applies `outer` to the length-`horizon` prefix of the fixed point of
/// 0->03, 1->43, 3->1, 4->01 and counts abelian cubes by block length.
CubeOccurrences makela_exploration(const Morphism& outer, std::size_t horizon);

}  // namespace wordlab
