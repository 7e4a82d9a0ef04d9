#include "wordlab/index.hpp"

#include <algorithm>
#include <numeric>

namespace wordlab::index {

std::vector<std::int32_t> suffix_array(std::span<const Letter> text, bool reverse_order) {
  const auto n = static_cast<std::int32_t>(text.size());
  std::vector<std::int32_t> sa(n), rank(n), tmp(n);
  if (n == 0) return sa;
  std::iota(sa.begin(), sa.end(), 0);
  for (std::int32_t i = 0; i < n; ++i) rank[i] = reverse_order ? 255 - text[i] : text[i];
  for (std::int32_t len = 1;; len <<= 1) {
    auto key = [&](std::int32_t i) {
      return std::pair<std::int32_t, std::int32_t>(rank[i], i + len < n ? rank[i + len] : -1);
    };
    std::sort(sa.begin(), sa.end(), [&](std::int32_t a, std::int32_t b) { return key(a) < key(b); });
    tmp[sa[0]] = 0;
    for (std::int32_t r = 1; r < n; ++r) tmp[sa[r]] = tmp[sa[r - 1]] + (key(sa[r - 1]) < key(sa[r]) ? 1 : 0);
    rank.swap(tmp);
    if (rank[sa[n - 1]] == n - 1 || len >= n) break;
  }
  return sa;
}

std::vector<std::int32_t> inverse(std::span<const std::int32_t> sa) {
  std::vector<std::int32_t> rank(sa.size());
  for (std::size_t r = 0; r < sa.size(); ++r) rank[sa[r]] = static_cast<std::int32_t>(r);
  return rank;
}

std::vector<std::int32_t> lcp_array(std::span<const Letter> text, std::span<const std::int32_t> sa,
                                    std::span<const std::int32_t> rank) {
  const auto n = static_cast<std::int32_t>(text.size());
  std::vector<std::int32_t> lcp(n, 0);
  std::int32_t h = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::int32_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

std::vector<std::int32_t> lyndon_array(std::span<const Letter> text, bool reverse_order) {
  // The longest Lyndon word at i ends right before the next suffix that is
  // smaller than suffix i.
  const auto n = static_cast<std::int32_t>(text.size());
  const auto sa = suffix_array(text, reverse_order);
  const auto rank = inverse(sa);
  std::vector<std::int32_t> out(n);
  std::vector<std::int32_t> stack;
  for (std::int32_t i = n - 1; i >= 0; --i) {
    while (!stack.empty() && rank[stack.back()] > rank[i]) stack.pop_back();
    out[i] = (stack.empty() ? n : stack.back()) - i;
    stack.push_back(i);
  }
  return out;
}

SuffixAutomaton::SuffixAutomaton(std::span<const Letter> text, std::size_t alphabet_size) : k_(alphabet_size) {
  const std::size_t cap = 2 * text.size() + 2;
  len_.reserve(cap);
  link_.reserve(cap);
  next_.reserve(cap * k_);
  auto add_state = [&](std::int32_t len, std::int32_t link) {
    len_.push_back(len);
    link_.push_back(link);
    next_.insert(next_.end(), k_, -1);
    return static_cast<std::int32_t>(len_.size() - 1);
  };
  add_state(0, -1);
  std::int32_t last = 0;
  prefix_state_.reserve(text.size());
  for (Letter c : text) {
    const std::int32_t cur = add_state(len_[last] + 1, -1);
    std::int32_t p = last;
    while (p != -1 && next_[p * k_ + c] == -1) {
      next_[p * k_ + c] = cur;
      p = link_[p];
    }
    if (p == -1) {
      link_[cur] = 0;
    } else {
      const std::int32_t q = next_[p * k_ + c];
      if (len_[p] + 1 == len_[q]) {
        link_[cur] = q;
      } else {
        const std::int32_t clone = add_state(len_[p] + 1, link_[q]);
        std::copy_n(next_.begin() + q * k_, k_, next_.begin() + clone * k_);
        while (p != -1 && next_[p * k_ + c] == q) {
          next_[p * k_ + c] = clone;
          p = link_[p];
        }
        link_[q] = clone;
        link_[cur] = clone;
      }
    }
    last = cur;
    prefix_state_.push_back(cur);
  }
  const std::size_t states = len_.size();
  std::size_t levels = 1;
  while ((std::size_t{1} << levels) < states) ++levels;
  up_.assign(levels, std::vector<std::int32_t>(states, 0));
  for (std::size_t v = 0; v < states; ++v) up_[0][v] = link_[v] < 0 ? 0 : link_[v];
  for (std::size_t j = 1; j < levels; ++j)
    for (std::size_t v = 0; v < states; ++v) up_[j][v] = up_[j - 1][up_[j - 1][v]];
}

std::int32_t SuffixAutomaton::locate(std::size_t end, std::int32_t length) const {
  std::int32_t v = prefix_state_[end];
  // Climb to the highest ancestor whose len is still >= length.
  for (std::size_t j = up_.size(); j-- > 0;) {
    const std::int32_t u = up_[j][v];
    if (len_[u] >= length) v = u;
  }
  return v;
}

std::vector<std::int64_t> SuffixAutomaton::factor_counts(std::size_t max_len) const {
  std::vector<std::int64_t> diff(max_len + 2, 0);
  for (std::size_t v = 1; v < len_.size(); ++v) {
    const std::size_t lo = static_cast<std::size_t>(len_[link_[v]]) + 1;
    const std::size_t hi = std::min<std::size_t>(len_[v], max_len);
    if (lo > hi) continue;
    diff[lo] += 1;
    diff[hi + 1] -= 1;
  }
  std::vector<std::int64_t> out(max_len + 1, 0);
  std::int64_t acc = 0;
  for (std::size_t n = 0; n <= max_len; ++n) {
    acc += diff[n];
    out[n] = acc;
  }
  out[0] = 1;
  return out;
}

PalindromicTree::PalindromicTree(std::span<const Letter> text, std::size_t alphabet_size) {
  // Node 0: imaginary root of length -1; node 1: empty palindrome.
  const std::size_t k = alphabet_size;
  std::vector<std::int32_t> link{0, 0};
  std::vector<std::int32_t> next(2 * k, -1);
  len_ = {-1, 0};
  std::int32_t last = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const Letter c = text[i];
    auto fits = [&](std::int32_t v) {
      const auto j = static_cast<std::int64_t>(i) - len_[v] - 1;
      return j >= 0 && text[j] == c;
    };
    std::int32_t cur = last;
    while (!fits(cur)) cur = link[cur];
    if (next[cur * k + c] != -1) {
      last = next[cur * k + c];
      continue;
    }
    const auto node = static_cast<std::int32_t>(len_.size());
    len_.push_back(len_[cur] + 2);
    next.insert(next.end(), k, -1);
    if (len_[node] == 1) {
      link.push_back(1);
    } else {
      std::int32_t p = link[cur];
      while (!fits(p)) p = link[p];
      link.push_back(next[p * k + c]);
    }
    next[cur * k + c] = node;
    last = node;
  }
}

std::vector<std::int64_t> PalindromicTree::palindrome_counts(std::size_t max_len) const {
  std::vector<std::int64_t> out(max_len + 1, 0);
  out[0] = 1;
  for (std::size_t v = 2; v < len_.size(); ++v)
    if (static_cast<std::size_t>(len_[v]) <= max_len) ++out[len_[v]];
  return out;
}

}  // namespace wordlab::index
