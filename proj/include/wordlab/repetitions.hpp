#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "wordlab/oracle.hpp"
#include "wordlab/rational.hpp"
#include "wordlab/search.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

/// KMP failure function: border[i] = longest proper border of w[0..i].
std::vector<std::size_t> border_array(std::span<const Letter> w);

std::size_t least_period(std::span<const Letter> w);
std::size_t least_period(const Word& w);
/// |w| / least_period(w).
Rational exponent(const Word& w);

Rational max_exponent(const Word& w);

/// strict = false: no factor of exponent >= alpha (alpha-free).
/// strict = true: no factor of exponent > alpha (alpha+-free).
bool is_alpha_free(const Word& w, const Rational& alpha, bool strict);

/// Distinct squares xx (counted by shape). Uses runs and a suffix automaton.
std::size_t count_distinct_squares(const Word& w);
/// Reference implementation, quadratic in the number of (position, half) pairs.
std::size_t count_distinct_squares_naive(const Word& w);
std::vector<Word> distinct_squares(const Word& w);

Rational square_density(const Word& w);

/// Maximal repetition of exponent >= 2; positions 1-based inclusive.
struct Run {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t period = 0;
  std::size_t length() const noexcept { return end - start + 1; }
  Rational exponent() const { return Rational(static_cast<std::int64_t>(length()), static_cast<std::int64_t>(period)); }
  friend auto operator<=>(const Run&, const Run&) = default;
};

/// Runs via Lyndon roots under both letter orders, sorted by (start, end).
std::vector<Run> runs(const Word& w);
/// Reference: every interval, least period from a border array.
std::vector<Run> runs_naive(const Word& w);
std::size_t count_runs(const Word& w);

/// Incremental alpha-freeness test for backtracking searches.
class PowerFreeChecker {
 public:
  PowerFreeChecker(Rational alpha, bool strict);
  bool push(Letter a);
  void pop() { word_.pop_back(); }
  /// True if the current word has a suffix violating the bound.
  bool suffix_violates() const;
  const std::vector<Letter>& word() const noexcept { return word_; }

 private:
  std::int64_t num_, den_;
  bool strict_;
  std::vector<Letter> word_;
};

struct FrtReport {
  Rational alpha;
  std::size_t horizon = 0;
  /// Distinct factors of exponent exactly alpha with their first 1-based position.
  std::vector<std::pair<Word, std::size_t>> factors;
  std::size_t count_first_half = 0;
  /// No new factor appears in the second half of the horizon.
  bool stabilized = false;
};

FrtReport frt_probe(const PrefixOracle& gen, const Rational& alpha, std::size_t horizon);

/// Periods i*q_{m-1} + q_{m-2} (0 <= i <= d_m) for each level m >= 1, with
/// q_{-1} = q_0 = 1 and q_m = d_m q_{m-1} + q_{m-2}; values above the
/// horizon are dropped. Beyond the supplied digits the last digit repeats.
struct PeriodSet {
  std::vector<unsigned> digits;
  std::uint64_t horizon = 0;
  std::set<std::uint64_t> values;
  bool contains(std::uint64_t p) const { return values.count(p) != 0; }
};

PeriodSet sturmian_period_set(std::span<const unsigned> cf, std::uint64_t horizon);

std::set<Word> suffix_square_duplicate(const Word& w);
std::set<Word> prefix_square_duplicate(const Word& w);

struct CompletionConfig {
  bool allow_empty_x = false;
  bool use_prefix = true;
  bool use_suffix = true;
  /// Also allow duplication steps (w -> wx with x a suffix of w, and mirror).
  bool duplication = false;
};

/// { w x : y x y is a suffix of w, y nonempty }.
std::set<Word> suffix_square_complete(const Word& w, const CompletionConfig& config = {});
/// { x w : y x y is a prefix of w, y nonempty }.
std::set<Word> prefix_square_complete(const Word& w, const CompletionConfig& config = {});

struct CompletionOutcome {
  Verdict verdict = Verdict::exhausted;
  std::optional<std::size_t> steps;
  std::vector<Word> path;
  std::uint64_t nodes = 0;
};

/// Breadth-first minimum number of completion steps turning u into w.
/// Intermediate words are factors of w, so the search space is finite.
CompletionOutcome completion_distance(const Word& u, const Word& w, const SearchBudget& budget,
                                      const CompletionConfig& config = {});

}  // namespace wordlab
