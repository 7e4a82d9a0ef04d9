#include "wordlab/complexity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "wordlab/error.hpp"
#include "wordlab/index.hpp"

namespace wordlab {

std::vector<std::int64_t> factor_counts(const Word& w, std::size_t n_max) {
  return index::SuffixAutomaton(w.letters(), w.alphabet().size()).factor_counts(n_max);
}

std::vector<std::int64_t> palindrome_counts(const Word& w, std::size_t n_max) {
  return index::PalindromicTree(w.letters(), w.alphabet().size()).palindrome_counts(n_max);
}

std::int64_t balance_value(const Word& w, std::size_t n) {
  if (n == 0 || n > w.size()) return 0;
  const std::size_t k = w.alphabet().size();
  std::vector<std::int64_t> cur(k, 0), lo(k), hi(k);
  for (std::size_t i = 0; i < n; ++i) ++cur[w[i]];
  lo = hi = cur;
  for (std::size_t i = n; i < w.size(); ++i) {
    ++cur[w[i]];
    --cur[w[i - n]];
    for (std::size_t a = 0; a < k; ++a) {
      lo[a] = std::min(lo[a], cur[a]);
      hi[a] = std::max(hi[a], cur[a]);
    }
  }
  std::int64_t best = 0;
  for (std::size_t a = 0; a < k; ++a) best = std::max(best, hi[a] - lo[a]);
  return best;
}

std::optional<std::int64_t> recurrence_value(const Word& w, std::size_t n) {
  const std::size_t H = w.size();
  if (n == 0) return 0;
  if (n > H) return std::nullopt;
  const index::SuffixAutomaton sam(w.letters(), w.alphabet().size());
  struct Occ {
    std::size_t first, last, need;
  };
  std::unordered_map<std::int32_t, Occ> occ;
  for (std::size_t t = 0; t + n <= H; ++t) {
    const auto v = sam.locate(t + n - 1, static_cast<std::int32_t>(n));
    auto it = occ.find(v);
    if (it == occ.end()) {
      occ.emplace(v, Occ{t, t, t + n});
    } else {
      it->second.need = std::max(it->second.need, t - it->second.last + n - 1);
      it->second.last = t;
    }
  }
  std::size_t r = 0;
  for (const auto& [v, o] : occ) r = std::max({r, o.need, H - o.last});
  if (2 * r > H) return std::nullopt;
  return static_cast<std::int64_t>(r);
}

namespace {

void check_horizon(std::size_t n_max, std::size_t horizon) {
  if (horizon < n_max) throw DomainError("horizon must be at least n_max");
}

/// Fills values/valid from `measure` on prefix(horizon), confirming values
/// beyond horizon / 2 against prefix(2 * horizon) when asked.
ComplexityProfile measured(const PrefixOracle& gen, std::size_t n_max, std::size_t horizon, bool doubling_check,
                           std::string name, const std::function<std::vector<std::int64_t>(const Word&)>& measure) {
  check_horizon(n_max, horizon);
  ComplexityProfile prof;
  prof.measure = std::move(name);
  prof.horizon = horizon;
  prof.values = measure(gen.prefix(horizon));
  prof.valid.assign(prof.values.size(), false);
  bool need_double = false;
  for (std::size_t n = 0; n < prof.values.size(); ++n) {
    prof.valid[n] = 2 * n <= horizon;
    need_double = need_double || !prof.valid[n];
  }
  if (need_double && doubling_check) {
    const auto twice = measure(gen.prefix(2 * horizon));
    for (std::size_t n = 0; n < prof.values.size(); ++n)
      if (!prof.valid[n]) prof.valid[n] = twice[n] == prof.values[n];
  }
  return prof;
}

}  // namespace

ComplexityProfile factor_complexity(const PrefixOracle& gen, std::size_t n_max, std::size_t horizon,
                                    bool doubling_check) {
  return measured(gen, n_max, horizon, doubling_check, "factor",
                  [&](const Word& w) { return factor_counts(w, n_max); });
}

ComplexityProfile palindromic_complexity(const PrefixOracle& gen, std::size_t n_max, std::size_t horizon,
                                         bool doubling_check) {
  ComplexityProfile prof = measured(gen, n_max, horizon, doubling_check, "palindrome",
                                    [&](const Word& w) { return palindrome_counts(w, n_max); });
  const ComplexityProfile p = measured(gen, n_max + 1, std::max(horizon, n_max + 1), doubling_check, "factor",
                                       [&](const Word& w) { return factor_counts(w, n_max + 1); });
  for (std::size_t n = 0; n < n_max; ++n) {
    const auto& P = prof.values;
    prof.residual.push_back(P[n] + P[n + 1] - (p.values[n + 1] - p.values[n] + 2));
    prof.residual_valid.push_back(prof.valid[n] && prof.valid[n + 1] && p.valid[n] && p.valid[n + 1]);
  }
  return prof;
}

ComplexityProfile recurrence_function(const PrefixOracle& gen, std::size_t n_max, std::size_t horizon) {
  check_horizon(n_max, horizon);
  ComplexityProfile prof;
  prof.measure = "recurrence";
  prof.horizon = horizon;
  const Word w = gen.prefix(horizon);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto r = recurrence_value(w, n);
    prof.values.push_back(r.value_or(-1));
    prof.valid.push_back(r.has_value() && 2 * n <= horizon);
    if (!r) {
      prof.recurrent_evidence = false;
      continue;
    }
    if (n >= 1) {
      const Rational q(*r, static_cast<std::int64_t>(n));
      if (!prof.quotient_estimate || q > *prof.quotient_estimate) prof.quotient_estimate = q;
    }
  }
  return prof;
}

ComplexityProfile balance_function(const PrefixOracle& gen, std::size_t n_max, std::size_t horizon,
                                   bool doubling_check) {
  return measured(gen, n_max, horizon, doubling_check, "balance", [&](const Word& w) {
    std::vector<std::int64_t> out;
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(balance_value(w, n));
    return out;
  });
}

DensityOutcome min_letter_density(const FreenessPredicate& pred, std::size_t L, const SearchBudget& budget,
                                  Letter minority) {
  if (minority > 1) throw DomainError("minority letter must be 0 or 1");
  const Letter majority = static_cast<Letter>(1 - minority);
  FreenessPredicate checker(pred);
  DensityOutcome out;
  std::size_t best = L + 1;
  std::vector<Letter> word, best_word;
  std::size_t count = 0;
  bool stopped = false;
  std::function<void()> rec = [&] {
    if (word.size() == L) {
      if (count < best) {
        best = count;
        best_word = word;
      }
      return;
    }
    for (Letter c : {majority, minority}) {
      if (stopped) return;
      if (c == minority && count + 1 >= best) continue;
      if (++out.nodes > budget.max_nodes) {
        stopped = true;
        return;
      }
      if (checker.push(c)) {
        word.push_back(c);
        count += c == minority;
        rec();
        count -= c == minority;
        word.pop_back();
      }
      checker.pop();
    }
  };
  rec();
  if (best <= L) {
    out.min_count = best;
    out.witness = Word(Alphabet::digits(2), best_word);
    out.density = L == 0 ? Rational(0) : Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(L));
  }
  out.verdict = stopped ? Verdict::budget : best <= L ? Verdict::found : Verdict::exhausted;
  return out;
}

std::string RauzyGraph::to_edge_list() const {
  std::string out;
  for (const auto& e : edges)
    out += vertices[e.from].to_string() + " -> " + vertices[e.to].to_string() + " [" + e.label.to_string() + "]\n";
  return out;
}

RauzyGraph rauzy_graph(const Word& w, std::size_t n) {
  RauzyGraph g;
  g.order = n;
  const auto verts = factor_set(w, n);
  g.vertices.assign(verts.begin(), verts.end());
  std::map<Word, std::size_t> id;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) id.emplace(g.vertices[i], i);
  for (const Word& e : factor_set(w, n + 1)) g.edges.push_back({id.at(e.substr(0, n)), id.at(e.substr(1)), e});
  return g;
}

RauzyGraph rauzy_graph(const PrefixOracle& gen, std::size_t n, std::size_t horizon) {
  if (horizon < 2 * (n + 1)) throw DomainError("Rauzy graph needs horizon >= 2(n+1)");
  return rauzy_graph(gen.prefix(horizon), n);
}

}  // namespace wordlab
