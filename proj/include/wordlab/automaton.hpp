#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

/// Complete deterministic automaton over letters 0..alphabet_size-1.
class Dfa {
 public:
  using State = std::int32_t;

  /// `delta[q * alphabet_size + a]`; a negative entry is routed to an added
  /// rejecting sink so the transition function is total.
  Dfa(std::size_t alphabet_size, std::size_t states, State initial, std::vector<bool> accepting,
      std::vector<State> delta);

  /// Accepts exactly the given words.
  static Dfa finite(std::size_t alphabet_size, const std::vector<std::vector<Letter>>& words);
  /// Accepts every word (Sigma*).
  static Dfa universal(std::size_t alphabet_size);
  /// Accepts nothing.
  static Dfa empty(std::size_t alphabet_size);
  /// Accepts w^* for one word w.
  static Dfa star_of(std::size_t alphabet_size, const std::vector<Letter>& w);

  /// JSON object {alphabet, states, initial, accepting, transitions}.
  /// `alphabet` is a size or a glyph string; `transitions` is a list of
  /// [from, letter, to] triples, letters given as index or glyph.
  static Dfa from_json(std::string_view text);

  std::size_t alphabet_size() const noexcept { return k_; }
  std::size_t state_count() const noexcept { return accepting_.size(); }
  State initial() const noexcept { return initial_; }
  bool accepting(State q) const { return accepting_.at(q); }
  State step(State q, Letter a) const { return delta_[static_cast<std::size_t>(q) * k_ + a]; }
  State run(std::span<const Letter> w) const;
  State run(State from, std::span<const Letter> w) const;
  bool accepts(std::span<const Letter> w) const { return accepting(run(w)); }
  bool accepts_empty() const { return accepting(initial_); }

  /// Shortest word in length-lexicographic order not accepted, if any.
  std::optional<std::vector<Letter>> non_member() const;

 private:
  std::size_t k_;
  State initial_;
  std::vector<bool> accepting_;
  std::vector<State> delta_;
};

/// Nondeterministic automaton with epsilon moves; used for constructions.
struct Nfa {
  std::size_t alphabet_size = 0;
  std::vector<std::vector<std::vector<std::int32_t>>> next;  // next[q][a]
  std::vector<std::vector<std::int32_t>> eps;
  std::vector<bool> accepting;
  std::int32_t initial = 0;

  std::int32_t add_state(bool accept = false);
  /// Shortest (then lexicographically least) word with no accepting run,
  /// by subset construction. nullopt when the language is Sigma*.
  std::optional<std::vector<Letter>> universality_counterexample(std::size_t max_subsets = 1'000'000) const;
};

}  // namespace wordlab
