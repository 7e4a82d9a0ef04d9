#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/morphism.hpp"
#include "wordlab/search.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

struct EquationSymbol {
  bool is_variable = true;
  std::uint8_t id = 0;  // variable index or constant letter
  friend bool operator==(const EquationSymbol&, const EquationSymbol&) = default;
};

struct WordEquation {
  std::vector<EquationSymbol> left, right;
  /// Every variable occurs equally often on both sides.
  bool balanced(std::size_t variable_count) const;
};

struct EquationSystem {
  std::vector<WordEquation> equations;
  std::string variable_names;  // index -> display character
  std::size_t variable_count() const noexcept { return variable_names.size(); }
};

/// One equation per ';' or newline, "x y = y x". With any uppercase letter,
/// uppercase letters are variables and lowercase letters constants;
/// otherwise the letters t..z are variables and a..s constants. An explicit
/// `variables` string overrides both rules. Constants a, b, ... are letters
/// 0, 1, ...
EquationSystem parse_equations(std::string_view text, std::optional<std::string> variables = std::nullopt);

struct EquationSolution {
  std::vector<Word> values;  // per variable
  /// Nonempty values are not all powers of one word.
  bool non_periodic = false;
};

struct SolveOptions {
  std::size_t max_len = 3;
  std::size_t alphabet_size = 2;
  bool allow_empty = false;
  std::size_t max_solutions = 1'000'000;
};

/// All assignments with value lengths <= max_len satisfying every equation,
/// ordered by total length, then length profile, then value lexicographically.
std::vector<EquationSolution> solve_word_equation(const EquationSystem& system, const SolveOptions& options);

/// Value of one side under an assignment.
Word evaluate_side(const std::vector<EquationSymbol>& side, const std::vector<Word>& values, const Alphabet& alphabet);
bool satisfies(const EquationSystem& system, const std::vector<Word>& values, const Alphabet& alphabet);

/// Primitive root of a nonempty word.
Word primitive_root(const Word& w);

/// Within the bound, no equation can be dropped without enlarging the
/// solution set.
bool is_independent(const EquationSystem& system, const SolveOptions& options);

struct PcpOutcome {
  Verdict verdict = Verdict::exhausted;
  std::optional<Word> solution;
  std::uint64_t nodes = 0;
};

/// Shortest, then lexicographically least, x with 1 <= |x| <= max_len and
/// h(x) = g(x).
PcpOutcome bounded_pcp(const Morphism& h, const Morphism& g, std::size_t max_len,
                       std::uint64_t max_nodes = 10'000'000);

struct PcpProperties {
  bool h_marked = false;
  bool g_marked = false;
  bool unique_equality_continuation = true;
  std::optional<Word> counterexample_u;
  std::optional<std::pair<Letter, Letter>> counterexample_letters;
  std::size_t bound = 0;
};

/// Unique equality continuation: h(ua), g(ua) comparable and h(ub), g(ub)
/// comparable imply h(u) = g(u); checked for all |u| <= bound and a != b.
PcpProperties instance_properties(const Morphism& h, const Morphism& g, std::size_t bound);

}  // namespace wordlab
