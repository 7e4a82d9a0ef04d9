#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab::index {

/// Suffix array by prefix doubling. The end of the text compares smaller
/// than every letter. If `reverse_order` is set, letters compare in
/// reverse (k-1 < ... < 0) while the end stays smallest.
std::vector<std::int32_t> suffix_array(std::span<const Letter> text, bool reverse_order = false);

/// Inverse permutation of a suffix array.
std::vector<std::int32_t> inverse(std::span<const std::int32_t> sa);

/// Kasai LCP: lcp[r] = lcp(suffix sa[r-1], suffix sa[r]), lcp[0] = 0.
std::vector<std::int32_t> lcp_array(std::span<const Letter> text, std::span<const std::int32_t> sa,
                                    std::span<const std::int32_t> rank);

/// Length of the longest Lyndon word starting at each position under the
/// given letter order.
std::vector<std::int32_t> lyndon_array(std::span<const Letter> text, bool reverse_order = false);

/// Online suffix automaton. State 0 is the root.
class SuffixAutomaton {
 public:
  SuffixAutomaton(std::span<const Letter> text, std::size_t alphabet_size);

  std::size_t state_count() const noexcept { return len_.size(); }
  std::int32_t len(std::int32_t v) const { return len_[v]; }
  std::int32_t link(std::int32_t v) const { return link_[v]; }
  /// State reached after reading text[0..i] (inclusive).
  std::int32_t prefix_state(std::size_t i) const { return prefix_state_[i]; }
  /// State whose class contains the factor of the given length ending at
  /// 0-based position `end` (inclusive).
  std::int32_t locate(std::size_t end, std::int32_t length) const;

  /// Number of distinct nonempty factors of each length 0..max_len.
  std::vector<std::int64_t> factor_counts(std::size_t max_len) const;

 private:
  std::size_t k_;
  std::vector<std::int32_t> len_, link_, next_;
  std::vector<std::int32_t> prefix_state_;
  std::vector<std::vector<std::int32_t>> up_;  // binary lifting over suffix links
};

/// Palindromic tree (eertree) of a finite word.
class PalindromicTree {
 public:
  PalindromicTree(std::span<const Letter> text, std::size_t alphabet_size);

  /// Number of distinct palindromic factors per length 0..max_len; the
  /// empty palindrome counts once at length 0.
  std::vector<std::int64_t> palindrome_counts(std::size_t max_len) const;
  std::size_t distinct_nonempty() const noexcept { return len_.size() - 2; }

 private:
  std::vector<std::int32_t> len_;
};

}  // namespace wordlab::index
