#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordlab {

using Letter = std::uint8_t;

/// Letters are the integers 0..size-1. Glyphs, when present, give each
/// letter a one-character display form and must be pairwise distinct.
class Alphabet {
 public:
  static constexpr std::size_t kMaxSize = 256;

  explicit Alphabet(std::size_t size = 1, std::string glyphs = {});

  /// "ab..." for size <= 26, integer display otherwise.
  static Alphabet latin(std::size_t size);
  /// "01..." for size <= 10, integer display otherwise.
  static Alphabet digits(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool has_glyphs() const noexcept { return !glyphs_.empty(); }
  const std::string& glyphs() const noexcept { return glyphs_; }
  char glyph(Letter a) const { return glyphs_.at(a); }
  std::optional<Letter> letter_of(char glyph) const;

  /// Numeric value of a letter: the digit when its glyph is a decimal digit,
  /// the letter index otherwise. Used by additive powers.
  int digit_value(Letter a) const;

  bool contains(Letter a) const noexcept { return a < size_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::size_t size_;
  std::string glyphs_;
};

/// Finite word over an Alphabet. Indexing through operator[] is 0-based;
/// every position that leaves the library in a report is 1-based.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet, std::vector<Letter> letters = {});

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const std::vector<Letter>& vec() const noexcept { return letters_; }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// 0-based start, clamped like std::string::substr.
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  Word appended(Letter a) const;
  Word prepended(Letter a) const;
  Word reversed() const;
  Word with_alphabet(Alphabet alphabet) const { return Word(std::move(alphabet), letters_); }

  bool is_factor_of(const Word& other) const;
  bool is_prefix_of(const Word& other) const;
  bool is_suffix_of(const Word& other) const;

  /// Glyph form when the alphabet has glyphs, comma-separated integers otherwise.
  std::string to_string() const;

  friend Word operator+(const Word& u, const Word& v);
  friend bool operator==(const Word& u, const Word& v) noexcept { return u.letters_ == v.letters_; }
  friend std::strong_ordering operator<=>(const Word& u, const Word& v) noexcept {
    return u.letters_ <=> v.letters_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// Parses one word. Commas select integer form ("0,1,0"); otherwise each
/// character is a glyph. Without an explicit alphabet, all-digit text maps
/// '0'..'9' to 0..9 and all-lowercase text maps 'a'..'z' to 0..25; the
/// alphabet size is max letter + 1.
Word parse_word(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt);

/// One word per line, '#' starts a comment, blank lines skipped.
std::vector<Word> parse_word_list(std::string_view text,
                                  const std::optional<Alphabet>& alphabet = std::nullopt);

Word make_word(std::string_view text);  // parse_word without alphabet, for fixtures

/// Nonempty word read cyclically. Equality is up to rotation.
class CircularWord {
 public:
  explicit CircularWord(Word underlying);

  const Word& underlying() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  Letter at(std::size_t i) const { return word_[i % word_.size()]; }
  /// Factor of length len starting at 0-based position start, read cyclically.
  Word factor(std::size_t start, std::size_t len) const;
  /// Lexicographically least rotation.
  Word canonical() const;

  friend bool operator==(const CircularWord& a, const CircularWord& b) {
    return a.canonical() == b.canonical();
  }

 private:
  Word word_;
};

/// Distinct length-n factors. Returns the empty set when n > |w|.
std::set<Word> factor_set(const Word& w, std::size_t n);
/// Cyclic windows of length n <= |w|; empty set when n > |w|.
std::set<Word> factor_set(const CircularWord& w, std::size_t n);

/// Least rotation index (Booth). Exposed for canonicalization in searches.
std::size_t least_rotation(std::span<const Letter> w);

}  // namespace wordlab
