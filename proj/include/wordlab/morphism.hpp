#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

/// Letter-to-word substitution from `domain` into `codomain`.
class Morphism {
 public:
  Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);

  const Alphabet& domain() const noexcept { return domain_; }
  const Alphabet& codomain() const noexcept { return codomain_; }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const noexcept { return images_; }

  bool is_non_erasing() const noexcept;
  /// Image of a starts with a and has length at least 2.
  bool is_prolongable(Letter a) const;
  bool is_endomorphism() const noexcept { return domain_.size() == codomain_.size(); }
  /// Pairwise distinct first letters over all images (all nonempty).
  bool is_marked() const;

  /// "a->ab;b->a" (glyph form) or "0->0,1;1->0" (integer form).
  std::string to_string() const;

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Word> images_;
};

/// Parses "a->ab;b->a" or "0->0,1;1->0". Letters follow parse_word's
/// inference over both sides together; letters below the largest one that
/// receive no rule map to themselves.
Morphism parse_morphism(std::string_view spec);

/// Concatenation of images; throws DomainMismatchError for foreign letters.
Word apply_morphism(const Morphism& m, const Word& w);

/// Length-n prefix of the fixed point of m starting with a.
Word fixed_point_prefix(const Morphism& m, Letter a, std::size_t n);

}  // namespace wordlab
