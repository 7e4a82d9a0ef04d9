#include "wordlab/morphism.hpp"

#include <algorithm>
#include <cctype>

#include "wordlab/error.hpp"

namespace wordlab {

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.size()) throw DomainError("morphism needs one image per domain letter");
  for (auto& img : images_) {
    for (Letter a : img)
      if (!codomain_.contains(a)) throw DomainMismatchError("morphism image leaves the codomain");
    img = img.with_alphabet(codomain_);
  }
}

bool Morphism::is_non_erasing() const noexcept {
  return std::none_of(images_.begin(), images_.end(), [](const Word& w) { return w.empty(); });
}

bool Morphism::is_prolongable(Letter a) const {
  if (!domain_.contains(a) || !is_endomorphism()) return false;
  const Word& img = images_[a];
  return img.size() >= 2 && img[0] == a;
}

bool Morphism::is_marked() const {
  std::vector<bool> seen(codomain_.size(), false);
  for (const Word& img : images_) {
    if (img.empty() || seen[img[0]]) return false;
    seen[img[0]] = true;
  }
  return true;
}

std::string Morphism::to_string() const {
  std::string out;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (a) out.push_back(';');
    out += Word(domain_, {static_cast<Letter>(a)}).to_string();
    out += "->";
    out += images_[a].to_string();
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Morphism parse_morphism(std::string_view spec) {
  std::vector<std::pair<Word, Word>> rules;
  std::string_view rest = trim(spec);
  if (rest.empty()) throw ParseError("empty morphism spec");
  const bool integer_form = rest.find(',') != std::string_view::npos;
  bool all_digits = true;
  for (char c : rest)
    if (std::isalpha(static_cast<unsigned char>(c))) all_digits = false;
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    const auto rule = trim(rest.substr(0, semi));
    rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    if (rule.empty()) continue;
    const auto arrow = rule.find("->");
    if (arrow == std::string_view::npos) throw ParseError("morphism rule without '->': '" + std::string(rule) + "'");
    auto lhs = trim(rule.substr(0, arrow));
    auto rhs = trim(rule.substr(arrow + 2));
    Word left = parse_word(lhs);
    if (left.size() != 1) throw ParseError("morphism rule must map a single letter: '" + std::string(rule) + "'");
    Word right = rhs.empty() ? Word() : parse_word(rhs);
    rules.emplace_back(std::move(left), std::move(right));
  }
  std::size_t max_letter = 0;
  for (const auto& [l, r] : rules) {
    max_letter = std::max<std::size_t>(max_letter, l[0]);
    for (Letter a : r) max_letter = std::max<std::size_t>(max_letter, a);
  }
  const std::size_t size = max_letter + 1;
  Alphabet alphabet = integer_form ? Alphabet(size) : all_digits ? Alphabet::digits(size) : Alphabet::latin(size);
  std::vector<Word> images(size);
  std::vector<bool> given(size, false);
  for (auto& [l, r] : rules) {
    if (given[l[0]]) throw ParseError("letter mapped twice in morphism spec");
    given[l[0]] = true;
    images[l[0]] = Word(alphabet, r.vec());
  }
  for (std::size_t a = 0; a < size; ++a)
    if (!given[a]) images[a] = Word(alphabet, {static_cast<Letter>(a)});
  return Morphism(alphabet, alphabet, std::move(images));
}

Word apply_morphism(const Morphism& m, const Word& w) {
  std::vector<Letter> out;
  for (Letter a : w) {
    if (!m.domain().contains(a))
      throw DomainMismatchError("letter " + std::to_string(a) + " outside morphism domain");
    const auto& img = m.image(a).vec();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(m.codomain(), std::move(out));
}

Word fixed_point_prefix(const Morphism& m, Letter a, std::size_t n) {
  if (!m.is_prolongable(a))
    throw NotProlongableError("morphism is not prolongable at letter " + std::to_string(a));
  std::vector<Letter> out = m.image(a).vec();
  // out[next] is the letter whose image is appended next; out[0] = a was expanded already.
  std::size_t next = 1;
  while (out.size() < n) {
    if (next >= out.size()) throw NotProlongableError("fixed point does not grow (erasing images)");
    const auto& img = m.image(out[next++]).vec();
    out.insert(out.end(), img.begin(), img.end());
  }
  out.resize(n);
  return Word(m.codomain(), std::move(out));
}

}  // namespace wordlab
