#include "wordlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "wordlab/error.hpp"

namespace wordlab {

Alphabet::Alphabet(std::size_t size, std::string glyphs) : size_(size), glyphs_(std::move(glyphs)) {
  if (size_ < 1 || size_ > kMaxSize) throw DomainError("alphabet size must be in [1, 256]");
  if (!glyphs_.empty()) {
    if (glyphs_.size() != size_) throw DomainError("glyph table size differs from alphabet size");
    std::string sorted = glyphs_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("alphabet glyphs must be distinct");
  }
}

Alphabet Alphabet::latin(std::size_t size) {
  static constexpr std::string_view kLatin = "abcdefghijklmnopqrstuvwxyz";
  return size <= kLatin.size() ? Alphabet(size, std::string(kLatin.substr(0, size))) : Alphabet(size);
}

Alphabet Alphabet::digits(std::size_t size) {
  static constexpr std::string_view kDigits = "0123456789";
  return size <= kDigits.size() ? Alphabet(size, std::string(kDigits.substr(0, size))) : Alphabet(size);
}

std::optional<Letter> Alphabet::letter_of(char glyph) const {
  const auto pos = glyphs_.find(glyph);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Letter>(pos);
}

int Alphabet::digit_value(Letter a) const {
  if (has_glyphs() && std::isdigit(static_cast<unsigned char>(glyphs_[a]))) return glyphs_[a] - '0';
  return a;
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (Letter a : letters_)
    if (!alphabet_.contains(a))
      throw DomainMismatchError("letter " + std::to_string(a) + " outside alphabet of size " +
                                std::to_string(alphabet_.size()));
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size()) pos = letters_.size();
  len = std::min(len, letters_.size() - pos);
  return Word(alphabet_, std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word Word::appended(Letter a) const {
  auto v = letters_;
  v.push_back(a);
  return Word(alphabet_, std::move(v));
}

Word Word::prepended(Letter a) const {
  std::vector<Letter> v;
  v.reserve(letters_.size() + 1);
  v.push_back(a);
  v.insert(v.end(), letters_.begin(), letters_.end());
  return Word(alphabet_, std::move(v));
}

Word Word::reversed() const { return Word(alphabet_, std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

bool Word::is_factor_of(const Word& other) const {
  return std::search(other.letters_.begin(), other.letters_.end(), letters_.begin(), letters_.end()) !=
             other.letters_.end() ||
         letters_.empty();
}

bool Word::is_prefix_of(const Word& other) const {
  return letters_.size() <= other.size() && std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

bool Word::is_suffix_of(const Word& other) const {
  return letters_.size() <= other.size() &&
         std::equal(letters_.begin(), letters_.end(), other.letters_.end() - letters_.size());
}

std::string Word::to_string() const {
  std::string out;
  if (alphabet_.has_glyphs()) {
    out.reserve(letters_.size());
    for (Letter a : letters_) out.push_back(alphabet_.glyph(a));
    return out;
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(letters_[i]);
  }
  return out;
}

Word operator+(const Word& u, const Word& v) {
  auto letters = u.letters_;
  letters.insert(letters.end(), v.letters_.begin(), v.letters_.end());
  const Alphabet& a = u.alphabet_.size() >= v.alphabet_.size() ? u.alphabet_ : v.alphabet_;
  return Word(a, std::move(letters));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Word parse_word(std::string_view text, const std::optional<Alphabet>& alphabet) {
  text = trim(text);
  std::vector<Letter> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t max_letter = 0;
    while (true) {
      const auto comma = text.find(',');
      const auto token = trim(text.substr(0, comma));
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || token.empty() ||
          value >= Alphabet::kMaxSize)
        throw ParseError("bad integer letter '" + std::string(token) + "'");
      letters.push_back(static_cast<Letter>(value));
      max_letter = std::max<std::size_t>(max_letter, value);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    Alphabet a = alphabet ? *alphabet : Alphabet(max_letter + 1);
    return Word(std::move(a), std::move(letters));
  }
  if (alphabet && alphabet->has_glyphs()) {
    for (char c : text) {
      auto a = alphabet->letter_of(c);
      if (!a) throw ParseError(std::string("glyph '") + c + "' not in alphabet \"" + alphabet->glyphs() + "\"");
      letters.push_back(*a);
    }
    return Word(*alphabet, std::move(letters));
  }
  const bool all_digits = std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  const bool all_lower = std::all_of(text.begin(), text.end(), [](char c) { return c >= 'a' && c <= 'z'; });
  if (!text.empty() && !all_digits && !all_lower)
    throw ParseError("cannot infer alphabet for '" + std::string(text) + "' (use digits, lowercase, or commas)");
  std::size_t max_letter = 0;
  for (char c : text) {
    const Letter a = static_cast<Letter>(all_digits ? c - '0' : c - 'a');
    letters.push_back(a);
    max_letter = std::max<std::size_t>(max_letter, a);
  }
  if (alphabet) return Word(*alphabet, std::move(letters));
  const std::size_t size = max_letter + 1;
  return Word(all_digits && !text.empty() ? Alphabet::digits(size) : Alphabet::latin(size), std::move(letters));
}

std::vector<Word> parse_word_list(std::string_view text, const std::optional<Alphabet>& alphabet) {
  std::vector<Word> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      out.push_back(parse_word(line, alphabet));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

Word make_word(std::string_view text) { return parse_word(text); }

CircularWord::CircularWord(Word underlying) : word_(std::move(underlying)) {
  if (word_.empty()) throw DomainError("circular word must be nonempty");
}

Word CircularWord::factor(std::size_t start, std::size_t len) const {
  std::vector<Letter> v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = at(start + i);
  return Word(word_.alphabet(), std::move(v));
}

std::size_t least_rotation(std::span<const Letter> s) {
  // Booth's algorithm over the doubled word.
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Letter sj = s[j % n];
    long i = f[j - k - 1];
    while (i != -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

Word CircularWord::canonical() const { return factor(least_rotation(word_.letters()), word_.size()); }

std::set<Word> factor_set(const Word& w, std::size_t n) {
  std::set<Word> out;
  if (n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

std::set<Word> factor_set(const CircularWord& w, std::size_t n) {
  std::set<Word> out;
  if (n > w.size()) return out;
  for (std::size_t i = 0; i < w.size(); ++i) out.insert(w.factor(i, n));
  return out;
}

}  // namespace wordlab
