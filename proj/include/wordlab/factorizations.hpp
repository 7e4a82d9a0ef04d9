#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wordlab/automaton.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/search.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

/// Control language over the index alphabet {1..k} (letters 0..k-1 of the
/// automaton) and one component language per index over Sigma.
struct FFactorizationSpec {
  Alphabet sigma;
  Dfa control;
  std::vector<Dfa> components;

  FFactorizationSpec(Alphabet sigma, Dfa control, std::vector<Dfa> components);
  std::size_t k() const noexcept { return components.size(); }
  /// JSON {"sigma": "ab" | size, "control": dfa, "components": [dfa, ...]}.
  static FFactorizationSpec from_json(std::string_view text);
};

struct FFactorization {
  std::vector<Word> factors;
  /// Component index of each factor, 1-based.
  std::vector<std::size_t> indices;
  /// Cut positions 0 = c_0 < ... < c_n = |w|.
  std::vector<std::size_t> cuts;
  std::string index_word() const;
};

/// All factorizations into nonempty factors, distinct as (cuts, indices).
/// More than `limit` results throws BudgetError.
std::vector<FFactorization> f_factorizations(const Word& w, const FFactorizationSpec& spec,
                                             std::size_t limit = 1'000'000);
/// Number of factorizations, saturating at UINT64_MAX.
std::uint64_t count_f_factorizations(const Word& w, const FFactorizationSpec& spec);
bool verify_f_factorization(const Word& w, const FFactorizationSpec& spec, const FFactorization& f);

struct PropertyVerdict {
  bool holds = true;
  std::optional<Word> counterexample;
  /// "bounded" or "exact".
  std::string mode = "bounded";
  std::size_t bound = 0;
  /// Synchronization search: the least window width that held, if any.
  std::optional<std::size_t> parameter;
};

PropertyVerdict check_completeness_bounded(const FFactorizationSpec& spec, std::size_t max_len);
/// Builds the automaton of factorizable words and tests universality.
PropertyVerdict check_completeness_exact(const FFactorizationSpec& spec);
PropertyVerdict check_uniqueness(const FFactorizationSpec& spec, std::size_t max_len);
/// Any two factorizations of a word of length <= max_len share a cut
/// (0 and |w| included) inside every window [t, t + width].
PropertyVerdict check_synchronization(const FFactorizationSpec& spec, std::size_t width, std::size_t max_len);
/// Least width in 0..max_len that holds up to max_len.
PropertyVerdict find_synchronization_width(const FFactorizationSpec& spec, std::size_t max_len);

/// Proper factors (in fact borders) whose occurrences cover every position.
std::vector<Word> quasiperiods(const Word& w);
bool is_quasiperiodic(const Word& w);
/// Shortest prefix x whose occurrences cover w except possibly a tail
/// shorter than |x|; the finite evidence for an infinite word.
std::optional<Word> prefix_cover(const Word& w);

struct QuasiperiodicityReport {
  std::size_t sampled = 0;
  std::size_t quasiperiodic_images = 0;
  std::optional<Word> first_witness;
  bool strong_evidence = false;  // every sampled image is quasiperiodic
  bool weak_evidence = false;    // some sampled image is quasiperiodic
  /// Prolongable letters and the cover found for the fixed-point prefix.
  std::vector<std::pair<Letter, std::optional<Word>>> fixed_points;
};

/// `sample` holds non-quasiperiodic words; quasiperiodic entries are skipped.
QuasiperiodicityReport morphism_quasiperiodicity_probe(const Morphism& f, const std::vector<Word>& sample,
                                                       std::size_t horizon);
/// Every non-quasiperiodic word of length 1..max_len over the alphabet.
std::vector<Word> non_quasiperiodic_words(const Alphabet& alphabet, std::size_t max_len);

/// Cut sets of all factorizations over X; interior cuts only for linear
/// words, all cuts (mod |w|) for circular ones.
std::vector<std::vector<std::size_t>> x_factorizations(const Word& w, const std::vector<Word>& X,
                                                       std::size_t limit = 100'000);
std::vector<std::vector<std::size_t>> circular_x_factorizations(const CircularWord& w, const std::vector<Word>& X,
                                                                std::size_t limit = 100'000);

struct DisjointOutcome {
  Verdict verdict = Verdict::exhausted;
  std::size_t best = 0;
  std::size_t factorizations = 0;
  std::vector<std::vector<std::size_t>> chosen;
};

/// Maximum number of factorizations with pairwise disjoint cut sets.
DisjointOutcome disjoint_x_factorizations(const Word& w, const std::vector<Word>& X, std::uint64_t max_nodes = 10'000'000);
DisjointOutcome disjoint_x_factorizations(const CircularWord& w, const std::vector<Word>& X,
                                          std::uint64_t max_nodes = 10'000'000);

/// w is a concatenation of words of X.
bool in_star(const Word& w, const std::vector<Word>& X);
/// Sardinas-Patterson test.
bool is_code(const std::vector<Word>& X);

struct RankOutcome {
  Verdict verdict = Verdict::found;  // found: exact; budget: bracket only
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<Word> basis;
  std::uint64_t nodes = 0;
};

/// Least |Y| with X contained in Y*; Y ranges over factors of X.
RankOutcome combinatorial_rank(const std::vector<Word>& X, std::uint64_t max_nodes = 10'000'000);

}  // namespace wordlab
