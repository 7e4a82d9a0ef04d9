#include "wordlab/repetitions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "wordlab/error.hpp"
#include "wordlab/index.hpp"

namespace wordlab {

std::vector<std::size_t> border_array(std::span<const Letter> w) {
  std::vector<std::size_t> b(w.size(), 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = b[i - 1];
    while (k > 0 && w[i] != w[k]) k = b[k - 1];
    if (w[i] == w[k]) ++k;
    b[i] = k;
  }
  return b;
}

std::size_t least_period(std::span<const Letter> w) {
  if (w.empty()) throw DomainError("least period of the empty word");
  return w.size() - border_array(w).back();
}

std::size_t least_period(const Word& w) { return least_period(w.letters()); }

Rational exponent(const Word& w) {
  return Rational(static_cast<std::int64_t>(w.size()), static_cast<std::int64_t>(least_period(w)));
}

namespace {

/// Calls visit(start, length, period) for every nonempty factor, scanning
/// starts left to right; visit returns false to stop early.
template <class Visit>
void for_each_factor_period(std::span<const Letter> w, Visit&& visit) {
  const std::size_t n = w.size();
  std::vector<std::size_t> b(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto v = w.subspan(s);
    b[0] = 0;
    if (!visit(s, std::size_t{1}, std::size_t{1})) return;
    for (std::size_t i = 1; i < v.size(); ++i) {
      std::size_t k = b[i - 1];
      while (k > 0 && v[i] != v[k]) k = b[k - 1];
      if (v[i] == v[k]) ++k;
      b[i] = k;
      if (!visit(s, i + 1, i + 1 - k)) return;
    }
  }
}

}  // namespace

Rational max_exponent(const Word& w) {
  if (w.empty()) throw DomainError("max exponent of the empty word");
  std::size_t best_len = 1, best_per = 1;
  for_each_factor_period(w.letters(), [&](std::size_t, std::size_t len, std::size_t per) {
    if (len * best_per > best_len * per) {
      best_len = len;
      best_per = per;
    }
    return true;
  });
  return Rational(static_cast<std::int64_t>(best_len), static_cast<std::int64_t>(best_per));
}

PowerFreeChecker::PowerFreeChecker(Rational alpha, bool strict)
    : num_(alpha.num()), den_(alpha.den()), strict_(strict) {
  if (alpha <= Rational(1)) throw DomainError("freeness exponent must exceed 1");
}

bool PowerFreeChecker::suffix_violates() const {
  const auto n = static_cast<std::int64_t>(word_.size());
  for (std::int64_t p = 1;; ++p) {
    // Shortest suffix length with period p that violates the bound.
    const std::int64_t min_len = strict_ ? (p * num_) / den_ + 1 : (p * num_ + den_ - 1) / den_;
    if (min_len > n) return false;
    std::int64_t t = 0;
    const std::int64_t need = min_len - p;
    while (t < need && word_[n - 1 - t] == word_[n - 1 - t - p]) ++t;
    if (t >= need) return true;
  }
}

bool PowerFreeChecker::push(Letter a) {
  word_.push_back(a);
  return !suffix_violates();
}

bool is_alpha_free(const Word& w, const Rational& alpha, bool strict) {
  PowerFreeChecker checker(alpha, strict);
  for (Letter a : w)
    if (!checker.push(a)) return false;
  return true;
}

std::vector<Run> runs_naive(const Word& w) {
  std::vector<Run> out;
  const auto v = w.letters();
  const std::size_t n = v.size();
  for_each_factor_period(v, [&](std::size_t s, std::size_t len, std::size_t per) {
    if (len < 2 * per) return true;
    const std::size_t e = s + len - 1;
    const bool left = s > 0 && v[s - 1] == v[s - 1 + per];
    const bool right = e + 1 < n && v[e + 1] == v[e + 1 - per];
    if (!left && !right) out.push_back({s + 1, e + 1, per});
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Run> runs(const Word& w) {
  const auto v = w.letters();
  const auto n = static_cast<std::int64_t>(v.size());
  std::vector<Run> out;
  for (bool order : {false, true}) {
    const auto lyn = index::lyndon_array(v, order);
    for (std::int64_t i = 0; i < n; ++i) {
      const std::int64_t p = lyn[i];
      if (i + p >= n) continue;
      std::int64_t fwd = 0;
      while (i + p + fwd < n && v[i + fwd] == v[i + p + fwd]) ++fwd;
      std::int64_t back = 0;
      while (i - 1 - back >= 0 && v[i - 1 - back] == v[i + p - 1 - back]) ++back;
      if (back + p + fwd >= 2 * p)
        out.push_back({static_cast<std::size_t>(i - back + 1), static_cast<std::size_t>(i + p + fwd),
                       static_cast<std::size_t>(p)});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t count_runs(const Word& w) { return runs(w).size(); }

std::size_t count_distinct_squares(const Word& w) {
  if (w.size() < 2) return 0;
  const auto v = w.letters();
  const index::SuffixAutomaton sam(v, w.alphabet().size());
  std::unordered_set<std::uint64_t> seen;
  for (const Run& r : runs(w)) {
    const std::size_t s = r.start - 1, e = r.end - 1, p = r.period, len = r.length();
    for (std::size_t L = 2 * p; L <= len; L += 2 * p) {
      const std::size_t last_start = std::min(s + p - 1, e + 1 - L);
      for (std::size_t t = s; t <= last_start; ++t) {
        const auto state = sam.locate(t + L - 1, static_cast<std::int32_t>(L));
        seen.insert((static_cast<std::uint64_t>(state) << 32) | L);
      }
    }
  }
  return seen.size();
}

std::vector<Word> distinct_squares(const Word& w) {
  std::set<Word> shapes;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t h = 1; i + 2 * h <= n; ++h)
      if (std::equal(w.begin() + i, w.begin() + i + h, w.begin() + i + h)) shapes.insert(w.substr(i, 2 * h));
  return {shapes.begin(), shapes.end()};
}

std::size_t count_distinct_squares_naive(const Word& w) { return distinct_squares(w).size(); }

Rational square_density(const Word& w) {
  if (w.empty()) throw DomainError("square density of the empty word");
  return Rational(static_cast<std::int64_t>(count_distinct_squares(w)), static_cast<std::int64_t>(w.size()));
}

FrtReport frt_probe(const PrefixOracle& gen, const Rational& alpha, std::size_t horizon) {
  if (horizon < 1) throw DomainError("frt probe needs horizon >= 1");
  const Word w = gen.prefix(horizon);
  FrtReport rep;
  rep.alpha = alpha;
  rep.horizon = horizon;
  std::map<Word, std::size_t> first;
  const auto num = static_cast<std::size_t>(alpha.num()), den = static_cast<std::size_t>(alpha.den());
  for_each_factor_period(w.letters(), [&](std::size_t s, std::size_t len, std::size_t per) {
    if (len * den == per * num) first.emplace(w.substr(s, len), s + 1);
    return true;
  });
  for (const auto& [f, pos] : first) {
    rep.factors.emplace_back(f, pos);
    if (pos - 1 + f.size() <= horizon / 2) ++rep.count_first_half;
  }
  std::sort(rep.factors.begin(), rep.factors.end(),
            [](const auto& a, const auto& b) { return a.second != b.second ? a.second < b.second : a.first < b.first; });
  rep.stabilized = rep.count_first_half == rep.factors.size();
  return rep;
}

PeriodSet sturmian_period_set(std::span<const unsigned> cf, std::uint64_t horizon) {
  if (cf.empty()) throw DomainError("period set needs a nonempty continued fraction");
  for (std::size_t i = 1; i < cf.size(); ++i)
    if (cf[i] == 0) throw DomainError("continued-fraction digits after the first must be positive");
  if (cf.size() == 1 && cf[0] == 0) throw DomainError("continued fraction (0) has no Sturmian period set");
  PeriodSet out;
  out.digits.assign(cf.begin(), cf.end());
  out.horizon = horizon;
  std::uint64_t q_prev2 = 1, q_prev1 = 1;  // q_{m-2}, q_{m-1}
  for (std::size_t m = 1; q_prev2 <= horizon; ++m) {
    const std::uint64_t d = cf[std::min(m - 1, cf.size() - 1)];
    for (std::uint64_t i = 0; i <= d; ++i) {
      const std::uint64_t v = i * q_prev1 + q_prev2;
      if (v <= horizon) out.values.insert(v);
    }
    const std::uint64_t q = d * q_prev1 + q_prev2;
    q_prev2 = q_prev1;
    q_prev1 = q;
  }
  return out;
}

std::set<Word> suffix_square_duplicate(const Word& w) {
  std::set<Word> out;
  for (std::size_t len = 1; len <= w.size(); ++len) out.insert(w + w.substr(w.size() - len));
  return out;
}

std::set<Word> prefix_square_duplicate(const Word& w) {
  std::set<Word> out;
  for (std::size_t len = 1; len <= w.size(); ++len) out.insert(w.substr(0, len) + w);
  return out;
}

std::set<Word> suffix_square_complete(const Word& w, const CompletionConfig& config) {
  std::set<Word> out;
  const std::size_t n = w.size();
  const std::size_t min_x = config.allow_empty_x ? 0 : 1;
  for (std::size_t ly = 1; 2 * ly + min_x <= n; ++ly) {
    for (std::size_t lx = min_x; 2 * ly + lx <= n; ++lx) {
      const std::size_t start = n - 2 * ly - lx;
      if (std::equal(w.begin() + start, w.begin() + start + ly, w.begin() + (n - ly)))
        out.insert(w + w.substr(start + ly, lx));
    }
  }
  return out;
}

std::set<Word> prefix_square_complete(const Word& w, const CompletionConfig& config) {
  std::set<Word> out;
  for (const Word& v : suffix_square_complete(w.reversed(), config)) out.insert(v.reversed());
  return out;
}

CompletionOutcome completion_distance(const Word& u, const Word& w, const SearchBudget& budget,
                                      const CompletionConfig& config) {
  if (!u.is_factor_of(w)) throw DomainError("completion source must be a factor of the target");
  CompletionOutcome out;
  std::map<Word, Word> parent;
  std::map<Word, std::size_t> depth;
  std::deque<Word> queue{u};
  depth.emplace(u, 0);
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    if (cur == w) {
      out.verdict = Verdict::found;
      out.steps = depth.at(cur);
      for (Word v = cur;; v = parent.at(v)) {
        out.path.push_back(v);
        if (v == u) break;
      }
      std::reverse(out.path.begin(), out.path.end());
      return out;
    }
    if (++out.nodes > budget.max_nodes) {
      out.verdict = Verdict::budget;
      return out;
    }
    std::set<Word> next;
    auto take = [&](const std::set<Word>& s) { next.insert(s.begin(), s.end()); };
    if (config.use_suffix) {
      take(suffix_square_complete(cur, config));
      if (config.duplication) take(suffix_square_duplicate(cur));
    }
    if (config.use_prefix) {
      take(prefix_square_complete(cur, config));
      if (config.duplication) take(prefix_square_duplicate(cur));
    }
    for (const Word& v : next) {
      if (v.size() > w.size() || depth.count(v) || !v.is_factor_of(w)) continue;
      depth.emplace(v, depth.at(cur) + 1);
      parent.emplace(v, cur);
      queue.push_back(v);
    }
  }
  out.verdict = Verdict::exhausted;
  return out;
}

}  // namespace wordlab
