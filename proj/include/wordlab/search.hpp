#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <concepts>
#include <cstdint>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "wordlab/error.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

enum class Verdict { found, exhausted, budget };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::found: return "found";
    case Verdict::exhausted: return "exhausted";
    case Verdict::budget: return "budget";
  }
  return "?";
}

/// Explicit bounds for every search. A zero `max_seconds` means no time limit.
struct SearchBudget {
  std::size_t max_length = 1000;
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 0.0;
  unsigned threads = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Result of a word search. `found` means a word of budget.max_length was
/// reached; `exhausted` means every branch died, so `word` has the maximum
/// length; `budget` means nodes or time ran out first.
struct SearchOutcome {
  Verdict verdict = Verdict::exhausted;
  Word word;
  SearchStats stats;
};

/// push(a) appends a letter and reports whether the word is still free,
/// given that it was free before. pop() undoes the last push and is called
/// after every push, accepted or not.
template <class C>
concept ExtensionChecker = std::copy_constructible<C> && requires(C c, Letter a) {
  { c.push(a) } -> std::same_as<bool>;
  c.pop();
};

struct ExtensionSearchOptions {
  Alphabet alphabet;
  /// First occurrences of letters appear in increasing order. Only valid
  /// for predicates invariant under renaming letters.
  bool symmetry = true;
  std::vector<Letter> root;
};

namespace detail {

using Clock = std::chrono::steady_clock;

enum class RunState { found, exhausted, stopped };

struct DfsResult {
  RunState state = RunState::exhausted;
  std::vector<Letter> best;
  std::uint64_t nodes = 0;
};

inline int max_letter_of(const std::vector<Letter>& w) {
  int m = -1;
  for (Letter a : w) m = std::max<int>(m, a);
  return m;
}

/// Depth-first search below `prefix` (already pushed into `checker`).
/// `stop(nodes)` is polled whenever `nodes & poll_mask` is zero; a time
/// budget needs mask 0 since one node can cost seconds on long patterns.
template <class C, class Stop>
DfsResult dfs_below(C& checker, std::vector<Letter> word, std::size_t k, bool symmetry, std::size_t max_length,
                    std::uint64_t node_limit, std::uint64_t poll_mask, Stop&& stop) {
  DfsResult res;
  res.best = word;
  if (word.size() >= max_length) {
    res.state = RunState::found;
    return res;
  }
  const std::size_t base = word.size();
  struct Frame {
    unsigned next;
    int max_used;
  };
  std::vector<Frame> stack;
  stack.reserve(max_length - base + 1);
  stack.push_back({0, max_letter_of(word)});
  while (!stack.empty()) {
    const Frame f = stack.back();
    const int limit = symmetry ? std::min<int>(static_cast<int>(k) - 1, f.max_used + 1) : static_cast<int>(k) - 1;
    if (static_cast<int>(f.next) > limit) {
      stack.pop_back();
      if (word.size() > base) {
        checker.pop();
        word.pop_back();
      }
      continue;
    }
    const Letter c = static_cast<Letter>(f.next);
    stack.back().next = f.next + 1;
    if (++res.nodes > node_limit || ((res.nodes & poll_mask) == 0 && stop(res.nodes))) {
      res.state = RunState::stopped;
      return res;
    }
    if (!checker.push(c)) {
      checker.pop();
      continue;
    }
    word.push_back(c);
    if (word.size() > res.best.size()) res.best = word;
    if (word.size() >= max_length) {
      res.state = RunState::found;
      return res;
    }
    stack.push_back({0, std::max<int>(f.max_used, c)});
  }
  return res;
}

}  // namespace detail

/// Backtracking search for the longest word over `options.alphabet`
/// extending `options.root` whose every prefix is accepted by the checker.
/// Children are tried in letter order. With several threads the tree is
/// split into subtrees at a fixed depth; found/exhausted verdicts and the
/// reported word do not depend on the schedule when no budget is hit.
template <ExtensionChecker C>
SearchOutcome extension_search(C checker, const ExtensionSearchOptions& options, const SearchBudget& budget) {
  const auto start = detail::Clock::now();
  const std::size_t k = options.alphabet.size();
  auto elapsed = [&] { return std::chrono::duration<double>(detail::Clock::now() - start).count(); };
  auto out_of_time = [&] { return budget.max_seconds > 0 && elapsed() >= budget.max_seconds; };

  std::vector<Letter> root = options.root;
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (root[i] >= k) throw DomainMismatchError("search root letter outside alphabet");
    if (!checker.push(root[i])) throw DomainError("search root violates the predicate");
  }
  SearchOutcome out;
  if (budget.max_nodes == 0) {
    out.verdict = Verdict::budget;
    out.word = Word(options.alphabet, root);
    return out;
  }

  auto finish = [&](Verdict v, std::vector<Letter> best, std::uint64_t nodes) {
    out.verdict = v;
    out.word = Word(options.alphabet, std::move(best));
    out.stats.nodes = nodes;
    out.stats.seconds = elapsed();
    return out;
  };

  const std::uint64_t poll_mask = budget.max_seconds > 0 ? 0 : 1023;
  if (budget.threads <= 1) {
    auto res = detail::dfs_below(checker, root, k, options.symmetry, budget.max_length, budget.max_nodes, poll_mask,
                                 [&](std::uint64_t) { return out_of_time(); });
    const Verdict v = res.state == detail::RunState::found       ? Verdict::found
                      : res.state == detail::RunState::exhausted ? Verdict::exhausted
                                                                 : Verdict::budget;
    return finish(v, std::move(res.best), res.nodes);
  }

  // Shallow phase: collect subtree roots at a fixed extra depth, in DFS order.
  std::size_t split_depth = 1;
  {
    std::size_t width = 1;
    while (width < 8 * budget.threads && split_depth < 12) {
      width *= std::max<std::size_t>(k, 2);
      ++split_depth;
    }
  }
  const std::size_t split_len = std::min(root.size() + split_depth, budget.max_length);
  std::vector<std::vector<Letter>> roots;
  std::vector<Letter> shallow_best = root;
  std::uint64_t shallow_nodes = 0;
  {
    std::vector<Letter> word = root;
    auto rec = [&](auto&& self, int max_used) -> void {
      if (word.size() > shallow_best.size()) shallow_best = word;
      if (word.size() >= split_len) {
        roots.push_back(word);
        return;
      }
      const int limit = options.symmetry ? std::min<int>(static_cast<int>(k) - 1, max_used + 1)
                                         : static_cast<int>(k) - 1;
      for (int c = 0; c <= limit; ++c) {
        ++shallow_nodes;
        const bool ok = checker.push(static_cast<Letter>(c));
        if (ok) {
          word.push_back(static_cast<Letter>(c));
          self(self, std::max(max_used, c));
          word.pop_back();
        }
        checker.pop();
      }
    };
    rec(rec, detail::max_letter_of(root));
  }
  if (roots.empty()) return finish(Verdict::exhausted, shallow_best, shallow_nodes);
  if (split_len >= budget.max_length) return finish(Verdict::found, roots.front(), shallow_nodes);

  std::vector<detail::DfsResult> results(roots.size());
  std::vector<char> ran(roots.size(), 0);
  std::atomic<std::size_t> next_index{0};
  std::atomic<std::size_t> found_index{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> total_nodes{shallow_nodes};
  std::atomic<bool> budget_hit{false};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next_index.fetch_add(1);
      if (i >= roots.size()) return;
      if (found_index.load() < i || budget_hit.load()) continue;
      C local = checker;
      for (std::size_t j = root.size(); j < roots[i].size(); ++j) (void)local.push(roots[i][j]);
      // Flushes progress since the previous poll into the shared count.
      std::uint64_t flushed = 0;
      auto stop = [&](std::uint64_t nodes) {
        const std::uint64_t t = total_nodes.fetch_add(nodes - flushed) + (nodes - flushed);
        flushed = nodes;
        if (t >= budget.max_nodes || out_of_time()) budget_hit = true;
        return budget_hit.load() || found_index.load() < i;
      };
      auto res = detail::dfs_below(local, roots[i], k, options.symmetry, budget.max_length,
                                   std::numeric_limits<std::uint64_t>::max(), poll_mask, stop);
      total_nodes.fetch_add(res.nodes - flushed);
      if (res.state == detail::RunState::found) {
        std::size_t cur = found_index.load();
        while (i < cur && !found_index.compare_exchange_weak(cur, i)) {
        }
      }
      results[i] = std::move(res);
      ran[i] = 1;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < budget.threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  const std::uint64_t nodes = total_nodes.load();
  const std::size_t fi = found_index.load();
  if (fi != std::numeric_limits<std::size_t>::max()) return finish(Verdict::found, results[fi].best, nodes);
  bool complete = true;
  std::vector<Letter> best = shallow_best;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!ran[i] || results[i].state != detail::RunState::exhausted) complete = false;
    if (ran[i] && results[i].best.size() > best.size()) best = results[i].best;
  }
  return finish(complete ? Verdict::exhausted : Verdict::budget, std::move(best), nodes);
}

}  // namespace wordlab
