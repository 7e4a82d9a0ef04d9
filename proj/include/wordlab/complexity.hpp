#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordlab/oracle.hpp"
#include "wordlab/patterns.hpp"
#include "wordlab/rational.hpp"
#include "wordlab/search.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

/// Per-n values of a measure on a finite prefix. A value is valid when
/// n <= horizon / 2 or when it is unchanged at twice the horizon.
struct ComplexityProfile {
  std::string measure;
  std::size_t horizon = 0;
  std::vector<std::int64_t> values;  // index n = 0..n_max; -1 when unavailable
  std::vector<bool> valid;
  /// Palindromic profiles: P(n) + P(n+1) - (p(n+1) - p(n) + 2) for n < n_max.
  std::vector<std::int64_t> residual;
  std::vector<bool> residual_valid;
  /// Recurrence profiles: max R(n)/n over available n >= 1 (an estimate).
  std::optional<Rational> quotient_estimate;
  /// Recurrence profiles: false if some factor looked non-recurrent.
  bool recurrent_evidence = true;
};

ComplexityProfile factor_complexity(const PrefixOracle& gen, std::size_t n_max, std::size_t horizon,
                                    bool doubling_check = true);
ComplexityProfile palindromic_complexity(const PrefixOracle& gen, std::size_t n_max, std::size_t horizon,
                                         bool doubling_check = true);
ComplexityProfile recurrence_function(const PrefixOracle& gen, std::size_t n_max, std::size_t horizon);
ComplexityProfile balance_function(const PrefixOracle& gen, std::size_t n_max, std::size_t horizon,
                                   bool doubling_check = true);

/// Finite-word kernels used by the profiles above.
std::vector<std::int64_t> factor_counts(const Word& w, std::size_t n_max);
std::vector<std::int64_t> palindrome_counts(const Word& w, std::size_t n_max);
/// R(n) on a finite word, or nullopt when some factor has a gap that is
/// too long to be trusted (more than half the word).
std::optional<std::int64_t> recurrence_value(const Word& w, std::size_t n);
std::int64_t balance_value(const Word& w, std::size_t n);

struct DensityOutcome {
  /// found: optimum certified; exhausted: no word of length L exists;
  /// budget: search stopped, `min_count` is the best found (if any).
  Verdict verdict = Verdict::exhausted;
  std::optional<std::size_t> min_count;
  std::optional<Word> witness;
  std::optional<Rational> density;
  std::uint64_t nodes = 0;
};

/// Fewest occurrences of `minority` among binary words of length L
/// accepted by the predicate (branch and bound, 0 before 1 preferred).
DensityOutcome min_letter_density(const FreenessPredicate& pred, std::size_t L, const SearchBudget& budget,
                                  Letter minority = 1);

struct RauzyGraph {
  std::size_t order = 0;
  std::vector<Word> vertices;
  struct Edge {
    std::size_t from = 0, to = 0;
    Word label;
  };
  std::vector<Edge> edges;
  /// "u -> v [label]" lines.
  std::string to_edge_list() const;
};

RauzyGraph rauzy_graph(const Word& w, std::size_t n);
RauzyGraph rauzy_graph(const PrefixOracle& gen, std::size_t n, std::size_t horizon);

}  // namespace wordlab
