#include "wordlab/factorizations.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <json.hpp>

#include "wordlab/error.hpp"
#include "wordlab/repetitions.hpp"

namespace wordlab {

FFactorizationSpec::FFactorizationSpec(Alphabet sigma_, Dfa control_, std::vector<Dfa> components_)
    : sigma(std::move(sigma_)), control(std::move(control_)), components(std::move(components_)) {
  if (components.empty()) throw DomainError("factorization spec needs at least one component language");
  if (control.alphabet_size() != components.size())
    throw DomainError("control automaton alphabet must be the index alphabet {1..k}");
  for (const auto& c : components)
    if (c.alphabet_size() != sigma.size()) throw DomainError("component automaton alphabet must be Sigma");
}

FFactorizationSpec FFactorizationSpec::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("factorization spec JSON: ") + e.what());
  }
  try {
    const auto& s = j.at("sigma");
    Alphabet sigma = s.is_string() ? Alphabet(s.get<std::string>().size(), s.get<std::string>())
                                   : Alphabet::latin(s.get<std::size_t>());
    Dfa control = Dfa::from_json(j.at("control").dump());
    std::vector<Dfa> comps;
    for (const auto& c : j.at("components")) comps.push_back(Dfa::from_json(c.dump()));
    return FFactorizationSpec(std::move(sigma), std::move(control), std::move(comps));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("factorization spec JSON: ") + e.what());
  }
}

std::string FFactorization::index_word() const {
  std::string s;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i && indices[i] > 9) s.push_back(',');
    s += std::to_string(indices[i]);
  }
  return s;
}

namespace {

/// ends[i][c] = all j > i with w[i..j) in component c.
std::vector<std::vector<std::vector<std::size_t>>> component_ends(const Word& w, const FFactorizationSpec& spec) {
  const std::size_t n = w.size();
  std::vector<std::vector<std::vector<std::size_t>>> ends(n + 1, std::vector<std::vector<std::size_t>>(spec.k()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < spec.k(); ++c) {
      const Dfa& d = spec.components[c];
      Dfa::State q = d.initial();
      for (std::size_t j = i; j < n; ++j) {
        q = d.step(q, w[j]);
        if (d.accepting(q)) ends[i][c].push_back(j + 1);
      }
    }
  return ends;
}

/// ways[i][q] = number of ways to finish from position i in control state q.
std::vector<std::vector<std::uint64_t>> completion_counts(
    const Word& w, const FFactorizationSpec& spec, const std::vector<std::vector<std::vector<std::size_t>>>& ends) {
  const std::size_t n = w.size(), Q = spec.control.state_count();
  std::vector<std::vector<std::uint64_t>> ways(n + 1, std::vector<std::uint64_t>(Q, 0));
  for (std::size_t q = 0; q < Q; ++q) ways[n][q] = spec.control.accepting(static_cast<Dfa::State>(q)) ? 1 : 0;
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t q = 0; q < Q; ++q) {
      std::uint64_t total = 0;
      for (std::size_t c = 0; c < spec.k(); ++c) {
        const auto t = spec.control.step(static_cast<Dfa::State>(q), static_cast<Letter>(c));
        for (std::size_t j : ends[i][c]) {
          const std::uint64_t add = ways[j][t];
          total = total > UINT64_MAX - add ? UINT64_MAX : total + add;
        }
      }
      ways[i][q] = total;
    }
  return ways;
}

Word checked_word(const Word& w, const FFactorizationSpec& spec) {
  if (w.alphabet().size() > spec.sigma.size()) {
    for (Letter a : w)
      if (a >= spec.sigma.size()) throw DomainMismatchError("word letter outside Sigma");
  }
  return w.with_alphabet(spec.sigma);
}

template <class Visit>
void for_each_word(const Alphabet& alphabet, std::size_t max_len, Visit&& visit) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<Letter> w(len, 0);
    while (true) {
      if (!visit(Word(alphabet, w))) return;
      std::size_t i = len;
      while (i > 0 && w[i - 1] + 1u == alphabet.size()) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

}  // namespace

std::vector<FFactorization> f_factorizations(const Word& word, const FFactorizationSpec& spec, std::size_t limit) {
  const Word w = checked_word(word, spec);
  const auto ends = component_ends(w, spec);
  const auto ways = completion_counts(w, spec, ends);
  std::vector<FFactorization> out;
  FFactorization cur;
  cur.cuts.push_back(0);
  std::function<void(std::size_t, Dfa::State)> rec = [&](std::size_t i, Dfa::State q) {
    if (i == w.size()) {
      if (spec.control.accepting(q)) {
        if (out.size() >= limit) throw BudgetError("too many factorizations");
        out.push_back(cur);
      }
      return;
    }
    for (std::size_t c = 0; c < spec.k(); ++c) {
      const auto t = spec.control.step(q, static_cast<Letter>(c));
      for (std::size_t j : ends[i][c]) {
        if (ways[j][t] == 0) continue;
        cur.factors.push_back(w.substr(i, j - i));
        cur.indices.push_back(c + 1);
        cur.cuts.push_back(j);
        rec(j, t);
        cur.factors.pop_back();
        cur.indices.pop_back();
        cur.cuts.pop_back();
      }
    }
  };
  if (ways[0][spec.control.initial()] > 0) rec(0, spec.control.initial());
  return out;
}

std::uint64_t count_f_factorizations(const Word& word, const FFactorizationSpec& spec) {
  const Word w = checked_word(word, spec);
  return completion_counts(w, spec, component_ends(w, spec))[0][spec.control.initial()];
}

bool verify_f_factorization(const Word& w, const FFactorizationSpec& spec, const FFactorization& f) {
  if (f.factors.size() != f.indices.size() || f.cuts.size() != f.factors.size() + 1) return false;
  std::vector<Letter> concat, index_word;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const Word& x = f.factors[i];
    if (x.empty() || f.indices[i] < 1 || f.indices[i] > spec.k()) return false;
    if (!spec.components[f.indices[i] - 1].accepts(x.letters())) return false;
    if (f.cuts[i] != concat.size()) return false;
    concat.insert(concat.end(), x.begin(), x.end());
    index_word.push_back(static_cast<Letter>(f.indices[i] - 1));
  }
  return f.cuts.back() == concat.size() && concat == w.vec() && spec.control.accepts(index_word);
}

PropertyVerdict check_completeness_bounded(const FFactorizationSpec& spec, std::size_t max_len) {
  PropertyVerdict v;
  v.bound = max_len;
  for_each_word(spec.sigma, max_len, [&](const Word& w) {
    if (count_f_factorizations(w, spec) > 0) return true;
    v.holds = false;
    v.counterexample = w;
    return false;
  });
  return v;
}

PropertyVerdict check_completeness_exact(const FFactorizationSpec& spec) {
  Nfa nfa;
  nfa.alphabet_size = spec.sigma.size();
  const std::size_t Q = spec.control.state_count();
  std::vector<std::int32_t> boundary(Q);
  for (std::size_t q = 0; q < Q; ++q) boundary[q] = nfa.add_state(spec.control.accepting(static_cast<Dfa::State>(q)));
  nfa.initial = boundary[spec.control.initial()];
  // inner[q][c][s]: inside a factor of component c started in control state q.
  std::vector<std::vector<std::vector<std::int32_t>>> inner(Q, std::vector<std::vector<std::int32_t>>(spec.k()));
  for (std::size_t q = 0; q < Q; ++q)
    for (std::size_t c = 0; c < spec.k(); ++c)
      for (std::size_t s = 0; s < spec.components[c].state_count(); ++s) inner[q][c].push_back(nfa.add_state());
  for (std::size_t q = 0; q < Q; ++q)
    for (std::size_t c = 0; c < spec.k(); ++c) {
      const Dfa& d = spec.components[c];
      const auto after = spec.control.step(static_cast<Dfa::State>(q), static_cast<Letter>(c));
      for (std::size_t a = 0; a < spec.sigma.size(); ++a)
        nfa.next[boundary[q]][a].push_back(inner[q][c][d.step(d.initial(), static_cast<Letter>(a))]);
      for (std::size_t s = 0; s < d.state_count(); ++s) {
        const auto st = static_cast<Dfa::State>(s);
        for (std::size_t a = 0; a < spec.sigma.size(); ++a)
          nfa.next[inner[q][c][s]][a].push_back(inner[q][c][d.step(st, static_cast<Letter>(a))]);
        if (d.accepting(st)) nfa.eps[inner[q][c][s]].push_back(boundary[after]);
      }
    }
  PropertyVerdict v;
  v.mode = "exact";
  if (auto ce = nfa.universality_counterexample()) {
    v.holds = false;
    v.counterexample = Word(spec.sigma, *ce);
  }
  return v;
}

PropertyVerdict check_uniqueness(const FFactorizationSpec& spec, std::size_t max_len) {
  PropertyVerdict v;
  v.bound = max_len;
  for_each_word(spec.sigma, max_len, [&](const Word& w) {
    if (count_f_factorizations(w, spec) < 2) return true;
    v.holds = false;
    v.counterexample = w;
    return false;
  });
  return v;
}

namespace {

/// Least window width that a pair of distinct factorizations of w needs:
/// the longest stretch between consecutive common cuts, minus one.
std::size_t needed_width(const Word& w, const FFactorizationSpec& spec) {
  const auto facts = f_factorizations(w, spec);
  std::size_t need = 0;
  for (std::size_t i = 0; i < facts.size(); ++i)
    for (std::size_t j = i + 1; j < facts.size(); ++j) {
      if (facts[i].cuts == facts[j].cuts) continue;
      std::vector<std::size_t> common;
      std::set_intersection(facts[i].cuts.begin(), facts[i].cuts.end(), facts[j].cuts.begin(), facts[j].cuts.end(),
                            std::back_inserter(common));
      for (std::size_t c = 1; c < common.size(); ++c) need = std::max(need, common[c] - common[c - 1] - 1);
    }
  return need;
}

}  // namespace

PropertyVerdict check_synchronization(const FFactorizationSpec& spec, std::size_t width, std::size_t max_len) {
  PropertyVerdict v;
  v.bound = max_len;
  v.parameter = width;
  for_each_word(spec.sigma, max_len, [&](const Word& w) {
    if (needed_width(w, spec) <= width) return true;
    v.holds = false;
    v.counterexample = w;
    return false;
  });
  return v;
}

PropertyVerdict find_synchronization_width(const FFactorizationSpec& spec, std::size_t max_len) {
  PropertyVerdict v;
  v.bound = max_len;
  std::size_t need = 0;
  for_each_word(spec.sigma, max_len, [&](const Word& w) {
    const std::size_t n = needed_width(w, spec);
    if (n > need) {
      need = n;
      v.counterexample = w;
    }
    return true;
  });
  v.parameter = need;
  return v;
}

namespace {

std::vector<std::size_t> occurrences(std::span<const Letter> w, std::span<const Letter> x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + x.size() <= w.size(); ++i)
    if (std::equal(x.begin(), x.end(), w.begin() + i)) out.push_back(i);
  return out;
}

}  // namespace

std::vector<Word> quasiperiods(const Word& w) {
  std::vector<Word> out;
  const std::size_t n = w.size();
  if (n < 2) return out;
  const auto b = border_array(w.letters());
  std::vector<std::size_t> borders;
  for (std::size_t L = b[n - 1]; L > 0; L = b[L - 1]) borders.push_back(L);
  std::sort(borders.begin(), borders.end());
  for (std::size_t L : borders) {
    const auto occ = occurrences(w.letters(), w.letters().subspan(0, L));
    bool covers = occ.front() == 0 && occ.back() + L == n;
    for (std::size_t i = 1; i < occ.size() && covers; ++i) covers = occ[i] - occ[i - 1] <= L;
    if (covers) out.push_back(w.substr(0, L));
  }
  return out;
}

bool is_quasiperiodic(const Word& w) { return !quasiperiods(w).empty(); }

std::optional<Word> prefix_cover(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t L = 1; 2 * L <= n; ++L) {
    const auto occ = occurrences(w.letters(), w.letters().subspan(0, L));
    bool covers = n - (occ.back() + L) < L;
    for (std::size_t i = 1; i < occ.size() && covers; ++i) covers = occ[i] - occ[i - 1] <= L;
    if (covers) return w.substr(0, L);
  }
  return std::nullopt;
}

std::vector<Word> non_quasiperiodic_words(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<Word> out;
  for_each_word(alphabet, max_len, [&](const Word& w) {
    if (!w.empty() && !is_quasiperiodic(w)) out.push_back(w);
    return true;
  });
  return out;
}

QuasiperiodicityReport morphism_quasiperiodicity_probe(const Morphism& f, const std::vector<Word>& sample,
                                                       std::size_t horizon) {
  QuasiperiodicityReport rep;
  for (const Word& w : sample) {
    if (is_quasiperiodic(w)) continue;
    ++rep.sampled;
    if (is_quasiperiodic(apply_morphism(f, w))) {
      if (rep.quasiperiodic_images++ == 0) rep.first_witness = w;
    }
  }
  rep.strong_evidence = rep.sampled > 0 && rep.quasiperiodic_images == rep.sampled;
  rep.weak_evidence = rep.quasiperiodic_images > 0;
  if (horizon > 0 && f.is_endomorphism())
    for (std::size_t a = 0; a < f.domain().size(); ++a)
      if (f.is_prolongable(static_cast<Letter>(a)))
        rep.fixed_points.emplace_back(static_cast<Letter>(a),
                                      prefix_cover(fixed_point_prefix(f, static_cast<Letter>(a), horizon)));
  return rep;
}

namespace {

std::vector<Word> dedup_code_words(const std::vector<Word>& X) {
  std::vector<Word> xs(X);
  for (const auto& x : xs)
    if (x.empty()) throw DomainError("X must consist of nonempty words");
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

/// Cuts of all X-factorizations of text, visiting offsets below `cut_limit`
/// only; every recorded cut list excludes 0 and |text|.
void factor_rec(std::span<const Letter> text, const std::vector<Word>& xs, std::size_t cut_limit, std::size_t limit,
                std::vector<std::size_t>& cuts, std::size_t pos, std::vector<std::vector<std::size_t>>& out) {
  for (const Word& x : xs) {
    const std::size_t end = pos + x.size();
    if (end > text.size() || !std::equal(x.begin(), x.end(), text.begin() + pos)) continue;
    if (end == text.size()) {
      if (out.size() >= limit) throw BudgetError("too many X-factorizations");
      out.push_back(cuts);
      continue;
    }
    if (end >= cut_limit) continue;
    cuts.push_back(end);
    factor_rec(text, xs, cut_limit, limit, cuts, end, out);
    cuts.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> x_factorizations(const Word& w, const std::vector<Word>& X, std::size_t limit) {
  const auto xs = dedup_code_words(X);
  std::vector<std::vector<std::size_t>> out;
  if (w.empty()) return out;
  std::vector<std::size_t> cuts;
  factor_rec(w.letters(), xs, w.size(), limit, cuts, 0, out);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> circular_x_factorizations(const CircularWord& w, const std::vector<Word>& X,
                                                                std::size_t limit) {
  const auto xs = dedup_code_words(X);
  const std::size_t n = w.size();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    const Word rot = w.factor(s, n);
    std::vector<std::vector<std::size_t>> part;
    std::vector<std::size_t> cuts;
    factor_rec(rot.letters(), xs, n - s, limit, cuts, 0, part);
    for (auto& c : part) {
      std::vector<std::size_t> cut_set{s};
      for (std::size_t o : c) cut_set.push_back(s + o);
      out.push_back(std::move(cut_set));
      if (out.size() > limit) throw BudgetError("too many circular X-factorizations");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

DisjointOutcome max_disjoint(std::vector<std::vector<std::size_t>> facts, std::uint64_t max_nodes) {
  DisjointOutcome out;
  out.factorizations = facts.size();
  const std::size_t m = facts.size();
  std::vector<std::vector<char>> compatible(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(facts[i].begin(), facts[i].end(), facts[j].begin(), facts[j].end(),
                            std::back_inserter(common));
      compatible[i][j] = compatible[j][i] = common.empty();
    }
  std::vector<std::size_t> current, best;
  std::uint64_t nodes = 0;
  bool stopped = false;
  std::function<void(std::vector<std::size_t>)> rec = [&](std::vector<std::size_t> cand) {
    if (current.size() > best.size()) best = current;
    for (std::size_t idx = 0; idx < cand.size(); ++idx) {
      if (current.size() + (cand.size() - idx) <= best.size()) return;
      if (++nodes > max_nodes) {
        stopped = true;
        return;
      }
      const std::size_t v = cand[idx];
      std::vector<std::size_t> next;
      for (std::size_t t = idx + 1; t < cand.size(); ++t)
        if (compatible[v][cand[t]]) next.push_back(cand[t]);
      current.push_back(v);
      rec(std::move(next));
      current.pop_back();
      if (stopped) return;
    }
  };
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  rec(all);
  out.verdict = stopped ? Verdict::budget : Verdict::exhausted;
  out.best = best.size();
  for (std::size_t v : best) out.chosen.push_back(facts[v]);
  return out;
}

}  // namespace

DisjointOutcome disjoint_x_factorizations(const Word& w, const std::vector<Word>& X, std::uint64_t max_nodes) {
  try {
    return max_disjoint(x_factorizations(w, X), max_nodes);
  } catch (const BudgetError&) {
    DisjointOutcome out;
    out.verdict = Verdict::budget;
    return out;
  }
}

DisjointOutcome disjoint_x_factorizations(const CircularWord& w, const std::vector<Word>& X, std::uint64_t max_nodes) {
  try {
    return max_disjoint(circular_x_factorizations(w, X), max_nodes);
  } catch (const BudgetError&) {
    DisjointOutcome out;
    out.verdict = Verdict::budget;
    return out;
  }
}

bool in_star(const Word& w, const std::vector<Word>& X) {
  const std::size_t n = w.size();
  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!reach[i]) continue;
    for (const Word& x : X)
      if (!x.empty() && i + x.size() <= n && std::equal(x.begin(), x.end(), w.begin() + i)) reach[i + x.size()] = 1;
  }
  return reach[n] != 0;
}

bool is_code(const std::vector<Word>& X) {
  using Seq = std::vector<Letter>;
  std::set<Seq> xs;
  for (const Word& x : X) {
    if (x.empty()) return false;
    if (!xs.insert(x.vec()).second) return false;  // repeated word: two factorizations
  }
  auto is_prefix = [](const Seq& u, const Seq& v) {
    return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
  };
  // Dangling suffixes u^{-1}v for u in A, v in B.
  auto quotients = [&](const std::set<Seq>& A, const std::set<Seq>& B, bool skip_equal) {
    std::set<Seq> out;
    for (const Seq& u : A)
      for (const Seq& v : B) {
        if (skip_equal && u == v) continue;
        if (is_prefix(u, v)) out.emplace(v.begin() + static_cast<std::ptrdiff_t>(u.size()), v.end());
      }
    return out;
  };
  std::set<Seq> s = quotients(xs, xs, true);
  std::set<std::set<Seq>> seen;
  while (!s.empty() && seen.insert(s).second) {
    if (s.count(Seq{})) return false;
    std::set<Seq> next = quotients(xs, s, false);
    const std::set<Seq> back = quotients(s, xs, false);
    next.insert(back.begin(), back.end());
    s = std::move(next);
  }
  return true;
}

RankOutcome combinatorial_rank(const std::vector<Word>& X, std::uint64_t max_nodes) {
  const auto xs = dedup_code_words(X);
  if (xs.empty()) throw DomainError("combinatorial rank needs a nonempty set");
  RankOutcome out;
  out.lower = 1;
  out.upper = xs.size();
  out.basis = xs;
  std::vector<Word> Y;
  bool stopped = false;
  std::function<bool(std::size_t)> rec = [&](std::size_t r) {
    const Word* missing = nullptr;
    for (const Word& x : xs)
      if (!in_star(x, Y)) {
        missing = &x;
        break;
      }
    if (!missing) return true;
    if (Y.size() == r) return false;
    // Some factor of the first uncovered word must join Y; longest first.
    std::set<Word> factors;
    for (std::size_t len = missing->size(); len >= 1; --len)
      for (std::size_t i = 0; i + len <= missing->size(); ++i) factors.insert(missing->substr(i, len));
    std::vector<Word> ordered(factors.begin(), factors.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const Word& a, const Word& b) { return a.size() > b.size(); });
    for (const Word& f : ordered) {
      if (std::find(Y.begin(), Y.end(), f) != Y.end()) continue;
      if (++out.nodes > max_nodes) {
        stopped = true;
        return false;
      }
      Y.push_back(f);
      if (rec(r)) return true;
      Y.pop_back();
      if (stopped) return false;
    }
    return false;
  };
  for (std::size_t r = 1; r < xs.size(); ++r) {
    Y.clear();
    if (rec(r)) {
      out.upper = r;
      out.lower = r;
      out.basis = Y;
      std::sort(out.basis.begin(), out.basis.end());
      return out;
    }
    if (stopped) {
      out.verdict = Verdict::budget;
      out.lower = r;
      return out;
    }
    out.lower = r + 1;
  }
  out.lower = out.upper;
  return out;
}

}  // namespace wordlab
