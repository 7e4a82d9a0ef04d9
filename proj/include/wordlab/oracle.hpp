#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/morphism.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

/// Deterministic source of prefixes of an infinite word. prefix(n) is
/// always a prefix of prefix(n + 1); every infinite-word question in the
/// library takes an oracle plus an explicit horizon.
class PrefixOracle {
 public:
  using Generator = std::function<std::vector<Letter>(std::size_t)>;

  PrefixOracle(std::string tag, Alphabet alphabet, Generator generator);

  const std::string& tag() const noexcept { return tag_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  Word prefix(std::size_t n) const;

  static PrefixOracle fixed_point(const Morphism& m, Letter a, std::string tag = {});
  static PrefixOracle thue_morse();
  static PrefixOracle fibonacci();
  static PrefixOracle thue_ternary();
  static PrefixOracle tribonacci();
  static PrefixOracle makela();
  /// Characteristic Sturmian word from continued-fraction digits d1, d2, ...
  /// The last digit repeats when longer prefixes are needed.
  static PrefixOracle sturmian(std::vector<unsigned> digits);
  static PrefixOracle periodic(const Word& period);
  static PrefixOracle constant(std::size_t alphabet_size = 1, Letter a = 0);

 private:
  std::string tag_;
  Alphabet alphabet_;
  Generator generator_;
};

/// Oracle from a textual spec: thue_morse, fibonacci, thue_ternary,
/// tribonacci, makela, constant, sturmian:1,2,3, periodic:<word>,
/// morphism:<morphism spec>@<start letter glyph or index>.
PrefixOracle make_oracle(std::string_view spec);

/// Classic morphisms.
Morphism thue_morse_morphism();
Morphism fibonacci_morphism();
Morphism thue_ternary_morphism();
Morphism makela_morphism();

/// Zimin word Z_k over glyphs "12..."; |Z_k| = 2^k - 1.
Word zimin_word(std::size_t k);

/// Standard Sturmian word s_m with s_{-1} = b, s_0 = a, s_m = s_{m-1}^{d_m} s_{m-2},
/// the smallest one reaching length n, truncated to n.
Word sturmian_prefix(std::span<const unsigned> digits, std::size_t n);

/// Generator zoo by name: thue_morse, fibonacci, thue_ternary, tribonacci,
/// makela, zimin (params = {k}, n ignored), sturmian (params = digits).
Word classic_word(std::string_view name, std::span<const unsigned> params, std::size_t n);

/// Finite Fibonacci words: fib_word(0) = "a", fib_word(1) = "ab",
/// fib_word(m) = fib_word(m-1) fib_word(m-2).
Word fibonacci_finite_word(std::size_t m);

}  // namespace wordlab
