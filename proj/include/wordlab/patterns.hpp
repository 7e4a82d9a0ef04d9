#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/morphism.hpp"
#include "wordlab/rational.hpp"
#include "wordlab/repetitions.hpp"
#include "wordlab/search.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

/// One pattern position: a variable (numbered by first occurrence) or a
/// constant letter of the host alphabet.
struct PatternSymbol {
  bool is_variable = true;
  std::uint8_t id = 0;
  friend bool operator==(const PatternSymbol&, const PatternSymbol&) = default;
};

class Pattern {
 public:
  /// Uppercase letters and digits are variables, lowercase letters are the
  /// constants a, b, c, ... (letters 0, 1, 2, ...). Blanks are ignored.
  static Pattern parse(std::string_view text);

  const std::vector<PatternSymbol>& body() const noexcept { return body_; }
  std::size_t size() const noexcept { return body_.size(); }
  std::size_t variable_count() const noexcept { return names_.size(); }
  char variable_name(std::size_t v) const { return names_.at(v); }
  bool has_constants() const noexcept;
  /// X^k for a single variable X and no constants; returns k, else 0.
  std::size_t power_degree() const noexcept;
  std::string to_string() const;

 private:
  std::vector<PatternSymbol> body_;
  std::string names_;
};

struct EncounterWitness {
  /// images[v] for each variable v, indexed by first occurrence.
  std::vector<Word> images;
  /// 1-based start of the encountered factor in the host word.
  std::size_t position = 0;
  std::size_t length = 0;
};

/// First encounter: leftmost start, then shortest images in variable order.
std::optional<EncounterWitness> encounters(const Word& w, const Pattern& p);
/// Substitutes the witness back into the pattern and compares with the host.
bool verify_witness(const Word& w, const Pattern& p, const EncounterWitness& witness);

/// True if some factor of `text` that starts at `start`, ends exactly at
/// `end` (exclusive) when `end` is set, and has length at most `max_len`,
/// encounters p.
bool encounter_at(std::span<const Letter> text, const Pattern& p, std::size_t start,
                  std::optional<std::size_t> end, std::size_t max_len);

/// Incremental checker: the word stays p-free after each accepted push.
class PatternChecker {
 public:
  explicit PatternChecker(Pattern p);
  bool push(Letter a);
  void pop();

 private:
  Pattern pattern_;
  std::vector<Letter> word_;
  std::optional<PowerFreeChecker> power_;
};

/// Type-erased freeness predicate for censuses, density searches and the
/// command line. `symmetric` marks invariance under renaming letters.
class FreenessPredicate {
 public:
  template <ExtensionChecker C>
  FreenessPredicate(C checker, bool symmetric, std::string name)
      : impl_(std::make_unique<Model<C>>(std::move(checker))), symmetric_(symmetric), name_(std::move(name)) {}

  FreenessPredicate(const FreenessPredicate& o) : impl_(o.impl_->clone()), symmetric_(o.symmetric_), name_(o.name_) {}
  FreenessPredicate& operator=(const FreenessPredicate& o) {
    if (this != &o) *this = FreenessPredicate(o);
    return *this;
  }
  FreenessPredicate(FreenessPredicate&&) noexcept = default;
  FreenessPredicate& operator=(FreenessPredicate&&) noexcept = default;

  bool push(Letter a) { return impl_->push(a); }
  void pop() { impl_->pop(); }
  bool symmetric() const noexcept { return symmetric_; }
  const std::string& name() const noexcept { return name_; }

  /// True if every prefix of w is accepted.
  bool accepts(const Word& w) const;

 private:
  struct Concept {
    virtual ~Concept() = default;
    virtual bool push(Letter a) = 0;
    virtual void pop() = 0;
    virtual std::unique_ptr<Concept> clone() const = 0;
  };
  template <class C>
  struct Model final : Concept {
    explicit Model(C c) : checker(std::move(c)) {}
    bool push(Letter a) override { return checker.push(a); }
    void pop() override { checker.pop(); }
    std::unique_ptr<Concept> clone() const override { return std::make_unique<Model>(checker); }
    C checker;
  };

  std::unique_ptr<Concept> impl_;
  bool symmetric_;
  std::string name_;
};

FreenessPredicate power_free_predicate(const Rational& alpha, bool strict);
FreenessPredicate pattern_free_predicate(const Pattern& p);

SearchOutcome longest_avoiding(const Pattern& p, std::size_t k, const SearchBudget& budget);
SearchOutcome longest_free_word(const FreenessPredicate& pred, std::size_t k, const SearchBudget& budget);

/// Circular p-freeness: no factor of length <= n of the cyclic word
/// encounters p. Exhaustive over canonical words up to renaming.
bool is_circular_pfree(const CircularWord& w, const Pattern& p);
std::set<std::size_t> circular_avoiding_lengths(const Pattern& p, std::size_t k, std::size_t n_max);

/// Every a.w.b with a, b in w's alphabet encounters p.
bool is_maximal_pfree(const Word& w, const Pattern& p);

struct D0lReport {
  std::size_t horizon = 0;
  bool free = true;
  std::optional<EncounterWitness> witness;
  Word checked;
};

/// Pattern-freeness of a fixed-point prefix, optionally mapped through an
/// outer morphism. Evidence up to the horizon only.
D0lReport d0l_avoidance_check(const Morphism& m, Letter a, const Pattern& p, std::size_t horizon,
                              const std::optional<Morphism>& outer = std::nullopt);

struct GrowthCensus {
  std::vector<std::uint64_t> counts;  // index = length
  /// "finite", "polynomial" or "exponential"; advisory regression only.
  std::string trend;
  double poly_r2 = 0.0;
  double exp_r2 = 0.0;
  std::uint64_t nodes = 0;
};

GrowthCensus growth_census(const FreenessPredicate& pred, std::size_t k, std::size_t n_max,
                           std::uint64_t max_nodes = 2'000'000'000);

struct SubtreeStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;    // accepted words with no accepted child, above the depth limit
  std::uint64_t frontier = 0;  // accepted words at the depth limit
  bool finite() const noexcept { return frontier == 0; }
};

SubtreeStats subtree_explore(const Word& root, const FreenessPredicate& pred, std::size_t depth);

struct PalindromeOutcome {
  SearchOutcome outcome;
  std::vector<Word> blocks;
};

/// Longest concatenation of nonempty palindromes (each at most
/// `max_block` long) that stays p-free.
PalindromeOutcome palindrome_concat_avoider(const Pattern& p, std::size_t k, const SearchBudget& budget,
                                            std::size_t max_block = 7);

struct ConductionSequence {
  std::vector<std::uint8_t> bits;
  static ConductionSequence parse(std::string_view text);
  std::size_t count(std::uint8_t b) const;
  std::string to_string() const;
};

/// Letter i is u_{beta(i)}(j) with j the number of beta(i) in beta(1..i).
Word shuffle(const Word& u0, const Word& u1, const ConductionSequence& beta);

/// First beta in lexicographic order making u shuffled with itself square-free.
std::optional<ConductionSequence> self_shuffle_squarefree_search(const Word& u);
std::uint64_t count_self_shuffle_squarefree(const Word& u);
/// Some u and beta with w = shuffle(u, u, beta); returns u.
std::optional<Word> self_shuffle_root(const Word& w);

}  // namespace wordlab
