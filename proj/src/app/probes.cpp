#include "wordlab/app/probes.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "wordlab/abelian.hpp"
#include "wordlab/automaton.hpp"
#include "wordlab/complexity.hpp"
#include "wordlab/equations.hpp"
#include "wordlab/error.hpp"
#include "wordlab/factorizations.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/oracle.hpp"
#include "wordlab/patterns.hpp"
#include "wordlab/predicates.hpp"
#include "wordlab/repetitions.hpp"

namespace wordlab::app {

namespace {

// ---- parameter helpers ----------------------------------------------------

template <class T>
T get(const json& p, const char* key) {
  if (!p.contains(key)) throw DomainError(std::string("missing probe parameter '") + key + "'");
  return p.at(key).get<T>();
}

std::size_t size_param(const json& p, const char* key) {
  const auto& v = p.at(key);
  if (v.is_number_float()) return static_cast<std::size_t>(v.get<double>());
  if (v.is_string()) return static_cast<std::size_t>(std::stod(v.get<std::string>()));
  return v.get<std::size_t>();
}

SearchBudget budget_of(const json& p) {
  SearchBudget b;
  if (p.contains("max_length")) b.max_length = size_param(p, "max_length");
  if (p.contains("max_nodes")) b.max_nodes = size_param(p, "max_nodes");
  if (p.contains("max_seconds")) b.max_seconds = p.at("max_seconds").get<double>();
  if (p.contains("threads")) b.threads = static_cast<unsigned>(std::max<std::size_t>(1, size_param(p, "threads")));
  return b;
}

Word word_in(const std::string& text, std::size_t k) {
  const bool digits = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  return parse_word(text, digits ? Alphabet::digits(k) : Alphabet::latin(k));
}

std::vector<Word> words_in(const json& arr, std::size_t k) {
  std::vector<Word> out;
  for (const auto& s : arr) out.push_back(word_in(s.get<std::string>(), k));
  return out;
}

std::vector<Rational> rationals(const json& arr) {
  std::vector<Rational> out;
  for (const auto& s : arr) out.push_back(Rational::parse(s.get<std::string>()));
  return out;
}

ProbeResult out_of_scope(const std::string& why) {
  ProbeResult r;
  r.verdict = "out-of-scope";
  r.result = {{"reason", why}};
  r.summary = "out of scope: " + why;
  return r;
}

ProbeResult evidence(json result, std::string summary, bool budget_hit = false) {
  ProbeResult r;
  r.result = std::move(result);
  r.summary = std::move(summary);
  r.status = budget_hit ? ProbeStatus::budget : ProbeStatus::completed;
  return r;
}

ProbeResult decided(bool pass, json result, std::string summary) {
  ProbeResult r;
  r.verdict = pass ? "pass" : "fail";
  r.result = std::move(result);
  r.summary = std::move(summary);
  return r;
}

// Calls f on every word of length 1..n_max over k letters, in length-lex order.
template <class F>
void for_all_words(std::size_t k, std::size_t n_max, F&& f) {
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<Letter> w(n, 0);
    const Alphabet a = Alphabet::latin(k);
    while (true) {
      if (!f(Word(a, w))) return;
      std::size_t i = n;
      while (i > 0 && w[i - 1] + 1u == k) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

bool maximal_under(const FreenessPredicate& pred, const Word& w, std::size_t k) {
  for (std::size_t a = 0; a < k; ++a) {
    const Letter c = static_cast<Letter>(a);
    if (pred.accepts(w.appended(c)) || pred.accepts(w.prepended(c))) return false;
  }
  return true;
}

// Shortest x w y (|x| + |y| <= extra) accepted by pred and maximal.
std::optional<Word> maximal_extension(const FreenessPredicate& pred, const Word& w, std::size_t k, std::size_t extra) {
  const Alphabet a = w.alphabet();
  for (std::size_t total = 0; total <= extra; ++total)
    for (std::size_t lx = 0; lx <= total; ++lx) {
      auto all_of_len = [&](std::size_t n) {
        std::vector<Word> out;
        if (n == 0) return std::vector<Word>{Word(a)};
        for_all_words(k, n, [&](const Word& v) {
          if (v.size() == n) out.push_back(v.with_alphabet(a));
          return true;
        });
        return out;
      };
      for (const Word& x : all_of_len(lx))
        for (const Word& y : all_of_len(total - lx)) {
          const Word v = x + w + y;
          if (pred.accepts(v) && maximal_under(pred, v, k)) return v;
        }
    }
  return std::nullopt;
}

std::string canonical_subtree(FreenessPredicate& pred, std::size_t k, std::size_t depth) {
  if (depth == 0) return "()";
  std::vector<std::string> kids;
  for (std::size_t a = 0; a < k; ++a) {
    if (pred.push(static_cast<Letter>(a))) kids.push_back(canonical_subtree(pred, k, depth - 1));
    pred.pop();
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& c : kids) s += c;
  return s + ")";
}

// Breadth-first closure of `seed` under `step`, keeping words accepted by
// `keep` of length <= max_len.
template <class Step, class Keep>
json closure_report(const Word& seed, Step&& step, Keep&& keep, std::size_t max_len, std::uint64_t max_nodes,
                    bool& budget_hit) {
  std::set<Word> seen{seed};
  std::vector<Word> frontier{seed};
  std::uint64_t nodes = 0;
  Word longest = seed;
  budget_hit = false;
  while (!frontier.empty() && !budget_hit) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (const Word& v : step(w)) {
        if (++nodes > max_nodes) {
          budget_hit = true;
          break;
        }
        if (v.size() > max_len || !keep(v) || !seen.insert(v).second) continue;
        if (v.size() > longest.size()) longest = v;
        next.push_back(v);
      }
    frontier = std::move(next);
  }
  std::map<std::size_t, std::size_t> per_length;
  std::map<std::size_t, std::set<ParikhVector>> parikhs;
  for (const Word& w : seen) {
    ++per_length[w.size()];
    parikhs[w.size()].insert(parikh(w));
  }
  json rows = json::array();
  for (auto [len, cnt] : per_length) rows.push_back({{"length", len}, {"words", cnt}, {"parikh_vectors", parikhs[len].size()}});
  return {{"start", seed.to_string()}, {"words", seen.size()}, {"longest", longest.to_string()},
          {"longest_length", longest.size()}, {"per_length", rows}, {"nodes", nodes}};
}

std::set<Word> both_duplications(const Word& w) {
  auto s = suffix_square_duplicate(w);
  for (auto& v : prefix_square_duplicate(w)) s.insert(v);
  return s;
}

std::set<Word> both_completions(const Word& w) {
  auto s = suffix_square_complete(w);
  for (auto& v : prefix_square_complete(w)) s.insert(v);
  return s;
}

json verdict_row(const SearchOutcome& o) {
  return {{"verdict", to_string(o.verdict)}, {"reached", o.word.size()}, {"nodes", o.stats.nodes}};
}

// ---- runners --------------------------------------------------------------

ProbeResult run_longest_avoiding(const json& p) {
  const Pattern pat = Pattern::parse(get<std::string>(p, "pattern"));
  const std::size_t k = size_param(p, "alphabet");
  const auto o = longest_avoiding(pat, k, budget_of(p));
  return evidence({{"pattern", pat.to_string()}, {"alphabet", k}, {"search", to_json(o)}},
                  pat.to_string() + " over " + std::to_string(k) + " letters: " + to_string(o.verdict) +
                      " at length " + std::to_string(o.word.size()),
                  o.verdict == Verdict::budget);
}

ProbeResult run_5_vs_6(const json& p) {
  const Pattern pat = Pattern::parse(get<std::string>(p, "pattern"));
  json rows = json::array();
  bool budget = false;
  std::string s;
  for (std::size_t k : {5u, 6u}) {
    const auto o = longest_avoiding(pat, k, budget_of(p));
    budget = budget || o.verdict == Verdict::budget;
    rows.push_back({{"alphabet", k}, {"search", verdict_row(o)}});
    s += std::to_string(k) + " letters: " + to_string(o.verdict) + "; ";
  }
  return evidence({{"pattern", pat.to_string()}, {"rows", rows}}, s, budget);
}

ProbeResult run_d0l(const json& p) {
  const Morphism g = parse_morphism(get<std::string>(p, "morphism"));
  const Pattern pat = Pattern::parse(get<std::string>(p, "pattern"));
  std::optional<Morphism> outer;
  if (p.contains("outer") && !p.at("outer").get<std::string>().empty()) outer = parse_morphism(p.at("outer").get<std::string>());
  const auto r = d0l_avoidance_check(g, 0, pat, size_param(p, "horizon"), outer);
  json j = {{"morphism", g.to_string()}, {"pattern", pat.to_string()}, {"horizon", r.horizon}, {"free", r.free}};
  if (outer) j["outer"] = outer->to_string();
  if (r.witness) j["witness"] = to_json(*r.witness, pat);
  return evidence(j, std::string(r.free ? "no encounter" : "encounter found") + " up to horizon " +
                         std::to_string(r.horizon));
}

ProbeResult run_circular(const json& p) {
  const Pattern pat = Pattern::parse(get<std::string>(p, "pattern"));
  const std::size_t k = size_param(p, "alphabet"), n_max = size_param(p, "n_max");
  const auto lengths = circular_avoiding_lengths(pat, k, n_max);
  std::vector<std::size_t> missing;
  for (std::size_t n = 1; n <= n_max; ++n)
    if (!lengths.count(n)) missing.push_back(n);
  json j = {{"pattern", pat.to_string()}, {"alphabet", k}, {"n_max", n_max},
            {"lengths", std::vector<std::size_t>(lengths.begin(), lengths.end())}, {"missing", missing}};
  j["length_of_pattern_present"] = lengths.count(pat.size()) != 0;
  return evidence(j, std::to_string(lengths.size()) + " of " + std::to_string(n_max) + " lengths admit circular avoiders");
}

ProbeResult run_circular_and_growth(const json& p) {
  auto r = run_circular(p);
  const Pattern pat = Pattern::parse(get<std::string>(p, "pattern"));
  const auto g = growth_census(pattern_free_predicate(pat), size_param(p, "alphabet"), size_param(p, "census_n_max"));
  r.result["growth"] = to_json(g);
  r.summary += "; growth trend " + g.trend;
  return r;
}

ProbeResult run_growth(const json& p) {
  const std::size_t k = size_param(p, "alphabet");
  const auto pred = parse_predicate(get<std::string>(p, "predicate"), k);
  const auto g = growth_census(pred, k, size_param(p, "n_max"), size_param(p, "max_nodes"));
  return evidence({{"predicate", pred.name()}, {"alphabet", k}, {"census", to_json(g)}},
                  pred.name() + " over " + std::to_string(k) + " letters: trend " + g.trend + " (advisory)");
}

ProbeResult run_maximal_extension(const json& p) {
  const std::size_t k = size_param(p, "alphabet");
  const auto pred = parse_predicate(get<std::string>(p, "predicate"), k);
  const Word w = word_in(get<std::string>(p, "word"), k);
  if (!pred.accepts(w)) throw DomainError("word does not satisfy " + pred.name());
  const auto m = maximal_extension(pred, w, k, size_param(p, "extra"));
  json j = {{"predicate", pred.name()}, {"word", w.to_string()}, {"extra", size_param(p, "extra")}};
  if (m) j["maximal_word"] = m->to_string();
  return evidence(j, m ? "maximal extension " + m->to_string() : "no maximal extension within the bound");
}

ProbeResult run_maximal_exists(const json& p) {
  const std::size_t k = size_param(p, "alphabet");
  const auto pred = parse_predicate(get<std::string>(p, "predicate"), k);
  std::optional<Word> hit;
  for_all_words(k, size_param(p, "max_length"), [&](const Word& w) {
    if (pred.accepts(w) && maximal_under(pred, w, k)) {
      hit = w;
      return false;
    }
    return true;
  });
  json j = {{"predicate", pred.name()}, {"alphabet", k}};
  if (hit) j["maximal_word"] = hit->to_string();
  return evidence(j, hit ? "shortest maximal word " + hit->to_string() : "none up to the length bound");
}

ProbeResult run_palindromes(const json& p) {
  const Pattern pat = Pattern::parse(get<std::string>(p, "pattern"));
  const std::size_t k = size_param(p, "alphabet");
  const auto r = palindrome_concat_avoider(pat, k, budget_of(p));
  json j = {{"pattern", pat.to_string()}, {"alphabet", k}, {"search", to_json(r.outcome)}, {"blocks", to_json(r.blocks)}};
  return evidence(j, "palindrome blocks reached length " + std::to_string(r.outcome.word.size()) + " (" +
                         to_string(r.outcome.verdict) + ")",
                  r.outcome.verdict == Verdict::budget);
}

ProbeResult run_subtree(const json& p) {
  const std::size_t k = size_param(p, "alphabet");
  const auto pred = parse_predicate(get<std::string>(p, "predicate"), k);
  json rows = json::array();
  for (const auto& w : words_in(p.at("roots"), k)) {
    const auto s = subtree_explore(w, pred, size_param(p, "depth"));
    rows.push_back({{"root", w.to_string()}, {"nodes", s.nodes}, {"leaves", s.leaves}, {"frontier", s.frontier},
                    {"finite", s.finite()}});
  }
  return evidence({{"predicate", pred.name()}, {"depth", size_param(p, "depth")}, {"subtrees", rows}},
                  std::to_string(rows.size()) + " subtrees explored");
}

ProbeResult run_subtree_iso(const json& p) {
  const std::size_t k = size_param(p, "alphabet"), depth = size_param(p, "depth");
  const auto roots = words_in(p.at("roots"), k);
  if (roots.size() != 2) throw DomainError("two roots expected");
  std::vector<std::string> forms;
  for (const Word& w : roots) {
    auto pred = parse_predicate(get<std::string>(p, "predicate"), k);
    for (Letter a : w)
      if (!pred.push(a)) throw DomainError("root violates the predicate");
    forms.push_back(canonical_subtree(pred, k, depth));
  }
  const bool iso = forms[0] == forms[1];
  return evidence({{"roots", to_json(roots)}, {"depth", depth}, {"isomorphic_to_depth", iso}},
                  std::string(iso ? "isomorphic" : "not isomorphic") + " up to depth " + std::to_string(depth));
}

ProbeResult run_large_finite_subtrees(const json& p) {
  const std::size_t k = size_param(p, "alphabet"), len = size_param(p, "root_length"), depth = size_param(p, "depth");
  const auto pred = parse_predicate(get<std::string>(p, "predicate"), k);
  std::optional<Word> best;
  std::uint64_t best_nodes = 0, finite = 0;
  for_all_words(k, len, [&](const Word& w) {
    if (w.size() != len || !pred.accepts(w)) return true;
    const auto s = subtree_explore(w, pred, depth);
    if (s.finite()) {
      ++finite;
      if (s.nodes > best_nodes) best_nodes = s.nodes, best = w;
    }
    return true;
  });
  json j = {{"root_length", len}, {"depth", depth}, {"finite_subtrees", finite}, {"largest_nodes", best_nodes}};
  if (best) j["largest_root"] = best->to_string();
  return evidence(j, "largest finite subtree has " + std::to_string(best_nodes) + " nodes");
}

std::vector<Word> square_free_words(std::size_t k, std::size_t n_max, std::size_t n_min = 1) {
  std::vector<Word> out;
  const auto sf = power_free_predicate(Rational(2), false);
  for_all_words(k, n_max, [&](const Word& w) {
    if (w.size() >= n_min && sf.accepts(w)) out.push_back(w);
    return true;
  });
  return out;
}

ProbeResult run_self_shuffle(const json& p) {
  json rows = json::array();
  std::size_t yes = 0;
  for (const Word& u : square_free_words(size_param(p, "alphabet"), size_param(p, "n_max"))) {
    const auto b = self_shuffle_squarefree_search(u);
    yes += b.has_value();
    json r = {{"u", u.to_string()}, {"shufflable", b.has_value()}};
    if (b) r["beta"] = b->to_string();
    rows.push_back(r);
  }
  return evidence({{"words", rows}, {"shufflable", yes}}, std::to_string(yes) + " of " + std::to_string(rows.size()) +
                                                            " square-free words shuffle to a square-free word");
}

ProbeResult run_unique_self_shuffle(const json& p) {
  json unique = json::array();
  std::size_t seen = 0;
  for (const Word& u : square_free_words(size_param(p, "alphabet"), size_param(p, "n_max"))) {
    ++seen;
    std::set<Word> results;
    const std::size_t n = u.size();
    std::vector<std::uint8_t> bits(2 * n, 1);
    std::fill(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(n), 0);
    do {
      const Word w = shuffle(u, u, ConductionSequence{bits});
      if (is_alpha_free(w, Rational(2), false)) results.insert(w);
    } while (std::next_permutation(bits.begin(), bits.end()));
    if (results.size() == 1) unique.push_back({{"u", u.to_string()}, {"w", results.begin()->to_string()}});
  }
  return evidence({{"checked", seen}, {"unique", unique}},
                  std::to_string(unique.size()) + " words give exactly one square-free self-shuffle");
}

ProbeResult run_multi_conduction(const json& p) {
  json rows = json::array();
  for (const Word& u : square_free_words(size_param(p, "alphabet"), size_param(p, "n_max"))) {
    std::map<Word, std::size_t> ways;
    const std::size_t n = u.size();
    std::vector<std::uint8_t> bits(2 * n, 1);
    std::fill(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(n), 0);
    do ++ways[shuffle(u, u, ConductionSequence{bits})];
    while (std::next_permutation(bits.begin(), bits.end()));
    std::size_t multi = 0;
    for (auto& [w, c] : ways) multi += c > 1;
    rows.push_back({{"u", u.to_string()}, {"distinct_shuffles", ways.size()}, {"reached_several_ways", multi}});
  }
  return evidence({{"words", rows}}, "conduction multiplicities for " + std::to_string(rows.size()) + " words");
}

ProbeResult run_square_free_self_shuffles(const json& p) {
  json hits = json::array();
  std::size_t checked = 0;
  for (const Word& w : square_free_words(size_param(p, "alphabet"), size_param(p, "n_max"), 2)) {
    if (w.size() % 2) continue;
    ++checked;
    if (const auto u = self_shuffle_root(w)) hits.push_back({{"w", w.to_string()}, {"u", u->to_string()},
                                                              {"u_square_free", is_alpha_free(*u, Rational(2), false)}});
  }
  return evidence({{"checked", checked}, {"self_shuffles", hits}},
                  std::to_string(hits.size()) + " of " + std::to_string(checked) + " square-free words are self-shuffles");
}

ProbeResult run_density_grid(const json& p) {
  const std::size_t L = size_param(p, "length");
  json rows = json::array();
  bool budget = false;
  for (const auto& spec : p.at("predicates")) {
    const auto pred = parse_predicate(spec.get<std::string>(), 2);
    SearchBudget b = budget_of(p);
    b.max_length = L;
    const auto d = min_letter_density(pred, L, b);
    budget = budget || d.verdict == Verdict::budget;
    json r = to_json(d);
    r["predicate"] = pred.name();
    rows.push_back(r);
  }
  return evidence({{"length", L}, {"rows", rows}}, "minimal densities at length " + std::to_string(L), budget);
}

ProbeResult run_min_frequency(const json& p) {
  // Fewest occurrences of the last letter among p-free words of length L
  // over k + 1 letters.
  const Pattern pat = Pattern::parse(get<std::string>(p, "pattern"));
  const std::size_t k = size_param(p, "alphabet") + 1, L = size_param(p, "length");
  const std::uint64_t max_nodes = size_param(p, "max_nodes");
  const Letter rare = static_cast<Letter>(k - 1);
  PatternChecker checker(pat);
  std::vector<Letter> word, best;
  std::size_t best_count = L + 1, count = 0;
  std::uint64_t nodes = 0;
  bool stopped = false;
  auto rec = [&](auto&& self) -> void {
    if (stopped) return;
    if (word.size() == L) {
      if (count < best_count) best_count = count, best = word;
      return;
    }
    for (std::size_t a = 0; a < k && !stopped; ++a) {
      const Letter c = static_cast<Letter>(a);
      if (c == rare && count + 1 >= best_count) continue;
      if (++nodes > max_nodes) {
        stopped = true;
        return;
      }
      const bool ok = checker.push(c);
      if (ok) {
        word.push_back(c);
        count += c == rare;
        self(self);
        count -= c == rare;
        word.pop_back();
      }
      checker.pop();
    }
  };
  rec(rec);
  json j = {{"pattern", pat.to_string()}, {"letters", k}, {"length", L}, {"nodes", nodes}};
  if (!best.empty()) {
    j["min_count"] = best_count;
    j["density"] = Rational(static_cast<std::int64_t>(best_count), static_cast<std::int64_t>(L)).to_string();
    j["witness"] = Word(Alphabet::latin(k), best).to_string();
  }
  return evidence(j, best.empty() ? "no word found" : "least count " + std::to_string(best_count) + " at length " + std::to_string(L),
                  stopped);
}

ProbeResult run_dejean_frequency(const json& p) {
  const std::size_t k = size_param(p, "alphabet");
  const Rational alpha(static_cast<std::int64_t>(k), static_cast<std::int64_t>(k - 1));
  const auto o = longest_free_word(power_free_predicate(alpha, true), k, budget_of(p));
  const auto pv = parikh(o.word);
  json freqs = json::array();
  for (auto c : pv) freqs.push_back(Rational(static_cast<std::int64_t>(c), std::max<std::int64_t>(1, static_cast<std::int64_t>(o.word.size()))).to_string());
  return evidence({{"alpha", alpha.to_string() + "+"}, {"search", to_json(o)}, {"letter_frequencies", freqs}},
                  alpha.to_string() + "+-free over " + std::to_string(k) + " letters reached " + std::to_string(o.word.size()),
                  o.verdict == Verdict::budget);
}

ProbeResult run_frt4(const json& p) {
  const auto o = longest_free_word(power_free_predicate(Rational(7, 5), true), 4, budget_of(p));
  std::set<Word> exact;
  for (std::size_t i = 0; i < o.word.size(); ++i)
    for (std::size_t l = 2; i + l <= o.word.size(); ++l) {
      const Word f = o.word.substr(i, l);
      if (exponent(f) == Rational(7, 5)) exact.insert(f);
    }
  return evidence({{"search", to_json(o)}, {"exact_7_5_powers", exact.size()}, {"examples", to_json(std::vector<Word>(exact.begin(), exact.end()))}},
                  "7/5+-free quaternary word of length " + std::to_string(o.word.size()) + " with " +
                      std::to_string(exact.size()) + " distinct factors of exponent 7/5",
                  o.verdict == Verdict::budget);
}

ProbeResult run_squares_bounded(const json& p) {
  const std::size_t n_max = size_param(p, "n_max");
  std::uint64_t words = 0;
  std::optional<Word> bad;
  double worst = 0;
  for_all_words(2, n_max, [&](const Word& w) {
    ++words;
    const auto c = count_distinct_squares(w);
    worst = std::max(worst, static_cast<double>(c) / static_cast<double>(w.size()));
    if (c > w.size()) {
      bad = w;
      return false;
    }
    return true;
  });
  json j = {{"n_max", n_max}, {"words", words}, {"max_ratio", worst}};
  if (bad) j["counterexample"] = bad->to_string();
  return decided(!bad, j, bad ? "counterexample " + bad->to_string() : "all " + std::to_string(words) + " binary words satisfy squares <= n");
}

ProbeResult run_runs_bounded(const json& p) {
  const std::size_t n_max = size_param(p, "n_max");
  std::uint64_t words = 0;
  std::optional<Word> bad;
  for_all_words(2, n_max, [&](const Word& w) {
    ++words;
    if (count_runs(w) > w.size()) {
      bad = w;
      return false;
    }
    return true;
  });
  json j = {{"n_max", n_max}, {"words", words}};
  if (bad) j["counterexample"] = bad->to_string();
  return decided(!bad, j, bad ? "counterexample " + bad->to_string() : "all " + std::to_string(words) + " binary words satisfy runs <= n");
}

ProbeResult run_square_density(const json& p) {
  const std::size_t n_max = size_param(p, "n_max");
  const Morphism f = parse_morphism(get<std::string>(p, "morphism"));
  std::map<std::size_t, Rational> best;
  std::optional<Rational> least_gain;
  for_all_words(2, n_max, [&](const Word& w) {
    const Rational d = square_density(w);
    auto it = best.find(w.size());
    if (it == best.end() || d > it->second) best[w.size()] = d;
    if (d >= Rational(1) && w.alphabet().size() <= f.domain().size()) {
      const Word img = apply_morphism(f, w.with_alphabet(f.domain()));
      if (!img.empty()) {
        const Rational g = square_density(img) / d;
        if (!least_gain || g < *least_gain) least_gain = g;
      }
    }
    return true;
  });
  json rows = json::array();
  for (auto& [n, d] : best) rows.push_back({{"length", n}, {"max_density", d.to_string()}});
  json j = {{"rows", rows}, {"morphism", f.to_string()}};
  if (least_gain) j["least_gain_on_dense_words"] = least_gain->to_string();
  return evidence(j, least_gain ? "least amplification " + least_gain->to_string() : "no word of density >= 1 sampled");
}

ProbeResult run_duplication_threshold(const json& p) {
  const Word seed = word_in(get<std::string>(p, "start"), size_param(p, "alphabet"));
  json rows = json::array();
  bool any_budget = false;
  for (const auto& a : p.at("grid")) {
    std::string s = a.get<std::string>();
    const bool strict = !s.empty() && s.back() == '+';
    if (strict) s.pop_back();
    const Rational alpha = Rational::parse(s);
    bool budget = false;
    auto keep = [&](const Word& w) { return is_alpha_free(w, alpha, strict); };
    const auto rep = closure_report(seed, both_duplications, keep, size_param(p, "max_length"), size_param(p, "max_nodes"), budget);
    any_budget = any_budget || budget;
    rows.push_back({{"alpha", a}, {"longest_length", rep["longest_length"]}, {"words", rep["words"]}, {"budget", budget}});
  }
  return evidence({{"start", seed.to_string()}, {"rows", rows}}, "duplication closures for " + std::to_string(rows.size()) + " exponents", any_budget);
}

ProbeResult run_completion_filtered(const json& p) {
  const Word seed = word_in(get<std::string>(p, "start"), size_param(p, "alphabet"));
  const auto pred = parse_predicate(get<std::string>(p, "predicate"), size_param(p, "alphabet"));
  bool budget = false;
  const auto rep = closure_report(seed, both_completions, [&](const Word& w) { return pred.accepts(w); },
                                  size_param(p, "max_length"), size_param(p, "max_nodes"), budget);
  json j = rep;
  j["predicate"] = pred.name();
  return evidence(j, "completion closure keeps " + std::to_string(rep["words"].get<std::size_t>()) + " " + pred.name() + " words",
                  budget);
}

ProbeResult run_completion_language(const json& p) {
  const Word seed = word_in(get<std::string>(p, "start"), size_param(p, "alphabet"));
  bool budget = false;
  const auto rep = closure_report(seed, both_completions, [](const Word&) { return true; }, size_param(p, "max_length"),
                                  size_param(p, "max_nodes"), budget);
  return evidence(rep, "completion closure of " + seed.to_string() + " has " + std::to_string(rep["words"].get<std::size_t>()) +
                           " words up to the length bound",
                  budget);
}

ProbeResult run_completion_distance(const json& p) {
  const std::size_t k = size_param(p, "alphabet");
  const Word u = word_in(get<std::string>(p, "from"), k), w = word_in(get<std::string>(p, "to"), k);
  CompletionConfig cfg;
  cfg.use_prefix = !p.value("suffix_only", false);
  const auto r = completion_distance(u, w, budget_of(p), cfg);
  json j = {{"from", u.to_string()}, {"to", w.to_string()}, {"verdict", to_string(r.verdict)}, {"path", to_json(r.path)}, {"nodes", r.nodes}};
  if (r.steps) j["steps"] = *r.steps;
  return evidence(j, r.steps ? std::to_string(*r.steps) + " completion steps" : "target not reached (" + to_string(r.verdict) + ")",
                  r.verdict == Verdict::budget);
}

ProbeResult run_zimin_list(const json& p) {
  json rows = json::array();
  std::size_t avoidable = 0;
  for (const auto& s : p.at("patterns")) {
    const Pattern pat = Pattern::parse(s.get<std::string>());
    const bool free = zimin_abelian_test(pat, pat.variable_count());
    avoidable += free;
    rows.push_back({{"pattern", s}, {"variables", pat.variable_count()}, {"zimin_free", free}});
  }
  return evidence({{"rows", rows}}, std::to_string(avoidable) + " patterns pass the Zimin abelian test (decision surrogate)");
}

ProbeResult run_art(const json& p) {
  const auto t = art_probe(size_param(p, "letters"), rationals(p.at("grid")), budget_of(p));
  std::string s = "bracket";
  if (t.lower_evidence) s += " lower " + t.lower_evidence->to_string();
  if (t.upper_evidence) s += " upper " + t.upper_evidence->to_string();
  bool budget = std::any_of(t.rows.begin(), t.rows.end(), [](const auto& r) { return r.verdict == Verdict::budget; });
  json j = {{"art", to_json(t)}};
  if (p.contains("dart_exponent")) {
    const auto d = dart_probe(Rational::parse(get<std::string>(p, "dart_exponent")), size_param(p, "dart_letters"), budget_of(p));
    j["dart"] = to_json(d);
  }
  return evidence(j, s, budget);
}

ProbeResult run_strong_census(const json& p) {
  json rows = json::array();
  std::optional<std::size_t> last_avoiding;
  for (std::size_t len = 1; len <= size_param(p, "max_length"); ++len) {
    const auto c = strong_power_census(size_param(p, "alphabet"), size_param(p, "n"), size_param(p, "k"), len);
    if (c.avoiders > 0) last_avoiding = len;
    rows.push_back(to_json(c));
  }
  json j = {{"rows", rows}};
  if (last_avoiding) j["longest_avoider_length_within_bound"] = *last_avoiding;
  return evidence(j, "strong k-abelian census over " + std::to_string(rows.size()) + " lengths");
}

ProbeResult run_pure_morphic_2abelian_cubes(const json& p) {
  const std::size_t m = size_param(p, "max_image"), horizon = size_param(p, "horizon");
  std::vector<std::string> zero_images, one_images;
  for (std::size_t l = 1; l <= m; ++l)
    for_all_words(2, l, [&](const Word& w) {
      if (w.size() != l) return true;
      std::string s;
      for (Letter a : w) s += static_cast<char>('0' + a);
      if (s[0] == '0' && s.size() >= 2) zero_images.push_back(s);
      one_images.push_back(s);
      return true;
    });
  json hits = json::array();
  std::size_t tried = 0, best = 0;
  std::string best_spec;
  for (const auto& z : zero_images)
    for (const auto& o : one_images) {
      const std::string spec = "0->" + z + ";1->" + o;
      const Morphism h = parse_morphism(spec);
      ++tried;
      const Word w = fixed_point_prefix(h, 0, horizon);
      LongPowerChecker c({EquivalenceKind::k_abelian, 2, std::nullopt}, 3, 1, 2);
      std::size_t ok = 0;
      for (Letter a : w) {
        if (!c.push(a)) break;
        ++ok;
      }
      if (ok > best) best = ok, best_spec = spec;
      if (ok == w.size()) hits.push_back(spec);
    }
  return evidence({{"tried", tried}, {"horizon", horizon}, {"avoiding_to_horizon", hits}, {"best", best_spec}, {"best_prefix", best}},
                  std::to_string(hits.size()) + " of " + std::to_string(tried) + " binary morphisms avoid 2-abelian cubes up to the horizon");
}

ProbeResult run_long_power_grid(const json& p) {
  const std::size_t letters = size_param(p, "alphabet"), n = size_param(p, "n");
  const std::string kind_s = get<std::string>(p, "kind");
  LongPowerKind kind;
  if (kind_s == "abelian") kind.kind = EquivalenceKind::abelian;
  else if (kind_s == "kabelian") kind = {EquivalenceKind::k_abelian, size_param(p, "k"), std::nullopt};
  else throw DomainError("kind must be abelian or kabelian");
  json rows = json::array();
  std::optional<std::size_t> least_sustained;
  bool budget = false;
  for (const auto& mp : p.at("min_periods")) {
    const auto o = avoid_long_powers_search(letters, kind, n, mp.get<std::size_t>(), budget_of(p));
    budget = budget || o.verdict == Verdict::budget;
    if (o.verdict == Verdict::found && !least_sustained) least_sustained = mp.get<std::size_t>();
    json r = verdict_row(o);
    r["min_period"] = mp;
    rows.push_back(r);
  }
  json j = {{"alphabet", letters}, {"kind", kind_s}, {"n", n}, {"rows", rows}};
  if (least_sustained) j["least_sustained_min_period"] = *least_sustained;
  return evidence(j, least_sustained ? "sustained from min period " + std::to_string(*least_sustained) : "no min period sustained the length bound",
                  budget);
}

ProbeResult run_additive_cubes(const json& p) {
  json rows = json::array();
  bool budget = false;
  for (const auto& set : p.at("alphabets")) {
    std::vector<std::int64_t> vals = set.get<std::vector<std::int64_t>>();
    const auto o = avoid_long_powers_search(vals.size(), {EquivalenceKind::additive, 1, vals}, 3, 1, budget_of(p));
    budget = budget || o.verdict == Verdict::budget;
    json r = verdict_row(o);
    r["values"] = vals;
    rows.push_back(r);
  }
  return evidence({{"rows", rows}}, "additive-cube avoidance on " + std::to_string(rows.size()) + " alphabets", budget);
}

ProbeResult run_abelian_square_alphabets(const json& p) {
  const std::size_t n_max = size_param(p, "n_max"), big = size_param(p, "alphabet");
  std::vector<std::size_t> best_big(n_max + 1, 0), best_bin(n_max + 1, 0);
  for_all_words(big, n_max, [&](const Word& w) {
    auto& slot = w.alphabet().size() <= 2 || std::all_of(w.begin(), w.end(), [](Letter a) { return a < 2; }) ? best_bin : best_big;
    const auto c = count_abelian_squares(w, AbelianSquareMode::distinct);
    best_big[w.size()] = std::max(best_big[w.size()], c);
    slot[w.size()] = std::max(slot[w.size()], c);
    return true;
  });
  json rows = json::array();
  bool pass = true;
  for (std::size_t n = 1; n <= n_max; ++n) {
    pass = pass && best_bin[n] >= best_big[n];
    rows.push_back({{"length", n}, {"max_any", best_big[n]}, {"max_binary", best_bin[n]}});
  }
  return decided(pass, {{"rows", rows}, {"alphabet", big}},
                 pass ? "binary words reach the maximum at every length" : "a larger alphabet beats binary words");
}

ProbeResult run_inequivalent_squares(const json& p) {
  std::mt19937_64 rng(get<std::uint64_t>(p, "seed"));
  const std::size_t samples = size_param(p, "samples"), max_len = size_param(p, "max_length"), k = size_param(p, "alphabet");
  double worst = 0;
  std::size_t worst_n = 0;
  for (std::size_t t = 0; t < samples; ++t) {
    const std::size_t n = 1 + rng() % max_len;
    std::vector<Letter> v(n);
    for (auto& a : v) a = static_cast<Letter>(rng() % k);
    const auto c = count_abelian_squares(Word(Alphabet::latin(k), v), AbelianSquareMode::inequivalent);
    const double ratio = static_cast<double>(c) / (static_cast<double>(n) * std::sqrt(static_cast<double>(n)));
    if (ratio > worst) worst = ratio, worst_n = n;
  }
  return evidence({{"samples", samples}, {"max_ratio", worst}, {"at_length", worst_n}},
                  "largest inequivalent/(n sqrt n) ratio " + std::to_string(worst));
}

std::size_t long_cube_count(const CubeOccurrences& c, std::size_t min_block) {
  std::size_t total = 0;
  for (auto [len, cnt] : c.by_block_length)
    if (len >= min_block) total += cnt;
  return total;
}

ProbeResult run_makela(const json& p) {
  const Morphism g = parse_morphism(get<std::string>(p, "outer"));
  const auto r = makela_exploration(g, size_param(p, "horizon"));
  const std::size_t mb = size_param(p, "min_block");
  return evidence({{"outer", g.to_string()}, {"occurrences", to_json(r)}, {"long_cubes", long_cube_count(r, mb)}, {"min_block", mb}},
                  std::to_string(long_cube_count(r, mb)) + " abelian cubes with block length >= " + std::to_string(mb));
}

ProbeResult run_makela_random(const json& p) {
  std::mt19937_64 rng(get<std::uint64_t>(p, "seed"));
  const std::size_t trials = size_param(p, "trials"), horizon = size_param(p, "horizon"), mb = size_param(p, "min_block"),
                    max_image = size_param(p, "max_image");
  std::string best_spec;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t t = 0; t < trials; ++t) {
    std::string spec;
    for (char a : std::string("0134")) {
      const std::size_t len = 1 + rng() % max_image;
      std::string img;
      for (std::size_t i = 0; i < len; ++i) img += static_cast<char>('0' + rng() % 2);
      spec += std::string(spec.empty() ? "" : ";") + a + "->" + img;
    }
    spec += ";2->0";
    const auto r = makela_exploration(parse_morphism(spec), horizon);
    const auto c = long_cube_count(r, mb);
    if (c < best) best = c, best_spec = spec;
  }
  return evidence({{"trials", trials}, {"best_outer", best_spec}, {"best_long_cubes", best}, {"min_block", mb}},
                  "best random candidate has " + std::to_string(best) + " long abelian cubes");
}

ProbeResult run_abelian_square_free_fixed_point(const json& p) {
  const Morphism h = parse_morphism(get<std::string>(p, "morphism"));
  const Word w = fixed_point_prefix(h, 0, size_param(p, "horizon"));
  LongPowerChecker c({EquivalenceKind::abelian, 1, std::nullopt}, 2, 1, h.domain().size());
  std::size_t ok = 0;
  for (Letter a : w) {
    if (!c.push(a)) break;
    ++ok;
  }
  return evidence({{"morphism", h.to_string()}, {"horizon", w.size()}, {"abelian_square_free_prefix", ok},
                   {"free_to_horizon", ok == w.size()}},
                  ok == w.size() ? "abelian-square-free up to the horizon" : "first abelian square ends at " + std::to_string(ok + 1));
}

std::vector<PrefixOracle> oracles_of(const json& p) {
  std::vector<PrefixOracle> out;
  for (const auto& s : p.at("oracles")) out.push_back(make_oracle(s.get<std::string>()));
  return out;
}

ProbeResult run_recurrence_quotients(const json& p) {
  json rows = json::array();
  for (const auto& o : oracles_of(p)) {
    const auto prof = recurrence_function(o, size_param(p, "n_max"), size_param(p, "horizon"));
    rows.push_back({{"oracle", o.tag()}, {"quotient_estimate", prof.quotient_estimate ? prof.quotient_estimate->to_string() : ""},
                    {"recurrent_evidence", prof.recurrent_evidence}});
  }
  return evidence({{"rows", rows}}, "recurrence quotient estimates for " + std::to_string(rows.size()) + " words");
}

ProbeResult run_complexity_ratio(const json& p) {
  json rows = json::array();
  const std::size_t n_max = size_param(p, "n_max");
  for (const auto& o : oracles_of(p)) {
    const auto prof = factor_complexity(o, n_max, size_param(p, "horizon"));
    json r = {{"oracle", o.tag()}};
    for (std::size_t n = n_max; n >= 1; --n)
      if (prof.valid[n]) {
        r["n"] = n;
        r["ratio"] = Rational(prof.values[n], static_cast<std::int64_t>(n)).to_string();
        break;
      }
    rows.push_back(r);
  }
  return evidence({{"rows", rows}}, "p(n)/n at the largest valid n");
}

ProbeResult run_balance(const json& p) {
  json rows = json::array();
  for (const auto& o : oracles_of(p)) {
    const auto prof = balance_function(o, size_param(p, "n_max"), size_param(p, "horizon"));
    std::int64_t mx = 0;
    for (std::size_t n = 0; n < prof.values.size(); ++n)
      if (prof.valid[n]) mx = std::max(mx, prof.values[n]);
    rows.push_back({{"oracle", o.tag()}, {"max_balance", mx}, {"profile", to_json(prof)}});
  }
  return evidence({{"rows", rows}}, "balance functions for " + std::to_string(rows.size()) + " words");
}

ProbeResult run_rauzy(const json& p) {
  const auto o = make_oracle(get<std::string>(p, "oracle"));
  const std::size_t n = size_param(p, "n"), horizon = size_param(p, "horizon");
  const auto g = rauzy_graph(o, n, horizon);
  const auto pal = palindromic_complexity(o, size_param(p, "n_max"), horizon);
  bool rich = true;
  for (std::size_t i = 0; i < pal.residual.size(); ++i)
    if (pal.residual_valid[i]) rich = rich && pal.residual[i] == 0;
  return evidence({{"oracle", o.tag()}, {"order", n}, {"vertices", g.vertices.size()}, {"edges", g.edges.size()},
                   {"edge_list", g.to_edge_list()}, {"reaches_bound", rich}},
                  std::string(rich ? "palindromic bound reached" : "palindromic bound not reached") + "; Rauzy graph of order " +
                      std::to_string(n) + " has " + std::to_string(g.vertices.size()) + " vertices");
}

FFactorizationSpec spec_of(const json& p) { return FFactorizationSpec::from_json(p.at("spec").dump()); }

ProbeResult run_min_max_factorization(const json& p) {
  const auto spec = spec_of(p);
  const Word w = parse_word(get<std::string>(p, "word"), spec.sigma);
  const auto all = f_factorizations(w, spec);
  if (all.empty()) return evidence({{"word", w.to_string()}, {"factorizations", 0}}, "no factorization");
  auto by_len = [](const FFactorization& a, const FFactorization& b) { return a.factors.size() < b.factors.size(); };
  const auto mn = std::min_element(all.begin(), all.end(), by_len), mx = std::max_element(all.begin(), all.end(), by_len);
  return evidence({{"word", w.to_string()}, {"factorizations", all.size()}, {"minimal", to_json(*mn)}, {"maximal", to_json(*mx)}},
                  "index lengths " + std::to_string(mn->factors.size()) + ".." + std::to_string(mx->factors.size()));
}

ProbeResult run_sync_search(const json& p) {
  const auto v = find_synchronization_width(spec_of(p), size_param(p, "bound"));
  return evidence({{"verdict", to_json(v)}}, v.parameter ? "least width " + std::to_string(*v.parameter) : "no width holds");
}

ProbeResult run_sturmian_periods(const json& p) {
  const auto digits = p.at("cf").get<std::vector<unsigned>>();
  const std::size_t L = size_param(p, "max_factor");
  const Word w = sturmian_prefix(digits, size_param(p, "horizon"));
  const auto pi = sturmian_period_set(digits, L);
  std::optional<Word> bad;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= L && !bad; ++n)
    for (const Word& f : factor_set(w, n)) {
      ++checked;
      if (!pi.contains(least_period(f))) {
        bad = f;
        break;
      }
    }
  json j = {{"cf", digits}, {"factors_checked", checked}, {"period_set", std::vector<std::uint64_t>(pi.values.begin(), pi.values.end())}};
  if (bad) j["counterexample"] = bad->to_string();
  return decided(!bad, j, bad ? "factor " + bad->to_string() + " has a period outside the set" : "all least periods lie in the set");
}

ProbeResult run_fixed_point_cover(const json& p) {
  const Morphism f = parse_morphism(get<std::string>(p, "morphism"));
  const Word w = fixed_point_prefix(f, 0, size_param(p, "horizon"));
  const auto c = prefix_cover(w);
  json j = {{"morphism", f.to_string()}, {"horizon", w.size()}};
  if (c) j["cover"] = c->to_string();
  return evidence(j, c ? "prefix " + c->to_string() + " covers the fixed-point prefix" : "no covering prefix");
}

ProbeResult run_weak_quasiperiodicity(const json& p) {
  const Morphism f = parse_morphism(get<std::string>(p, "morphism"));
  const auto sample = non_quasiperiodic_words(f.domain(), size_param(p, "sample_length"));
  const auto r = morphism_quasiperiodicity_probe(f, sample, size_param(p, "horizon"));
  json fps = json::array();
  for (const auto& [a, cover] : r.fixed_points) fps.push_back({{"letter", a}, {"cover", cover ? cover->to_string() : ""}});
  json j = {{"morphism", f.to_string()}, {"sampled", r.sampled}, {"quasiperiodic_images", r.quasiperiodic_images},
            {"strong_evidence", r.strong_evidence}, {"weak_evidence", r.weak_evidence}, {"fixed_points", fps}};
  if (r.first_witness) j["first_witness"] = r.first_witness->to_string();
  return evidence(j, std::to_string(r.quasiperiodic_images) + " of " + std::to_string(r.sampled) + " sampled images are quasiperiodic");
}

ProbeResult run_equation_system(const json& p) {
  const auto sys = parse_equations(get<std::string>(p, "system"));
  SolveOptions opt;
  opt.max_len = size_param(p, "max_len");
  opt.alphabet_size = size_param(p, "alphabet");
  const auto sols = solve_word_equation(sys, opt);
  std::size_t nonper = 0;
  json examples = json::array();
  for (const auto& s : sols)
    if (s.non_periodic) {
      if (nonper++ < 5) examples.push_back(to_json(s.values));
    }
  const bool indep = is_independent(sys, opt);
  return evidence({{"equations", sys.equations.size()}, {"variables", sys.variable_names}, {"solutions", sols.size()},
                   {"non_periodic", nonper}, {"non_periodic_examples", examples}, {"independent_within_bound", indep}},
                  std::string(indep ? "independent" : "dependent") + " within the bound; " + std::to_string(nonper) +
                      " non-periodic solutions");
}

ProbeResult run_power_system(const json& p) {
  // u^i = v_1^i ... v_n^i for i = 1..q, compared with its first three equations.
  const std::size_t n = size_param(p, "n"), q = size_param(p, "equations");
  const std::string vars = "uvwxyz";
  if (n + 1 > vars.size()) throw DomainError("at most five right-hand variables");
  auto system_text = [&](std::size_t upto) {
    std::string text;
    for (std::size_t i = 1; i <= upto; ++i) {
      std::string l, r;
      for (std::size_t t = 0; t < i; ++t) l += "u ";
      for (std::size_t v = 1; v <= n; ++v)
        for (std::size_t t = 0; t < i; ++t) r += std::string(1, vars[v]) + " ";
      text += l + "= " + r + ";";
    }
    return text;
  };
  SolveOptions opt;
  opt.max_len = size_param(p, "max_len");
  auto key = [&](std::size_t upto) {
    std::set<std::vector<Word>> s;
    for (const auto& sol : solve_word_equation(parse_equations(system_text(upto), vars.substr(0, n + 1)), opt)) s.insert(sol.values);
    return s;
  };
  const auto three = key(std::min<std::size_t>(3, q)), full = key(q);
  return evidence({{"n", n}, {"equations", q}, {"solutions_three", three.size()}, {"solutions_full", full.size()},
                   {"equivalent_within_bound", three == full}},
                  std::string(three == full ? "first three equations suffice" : "first three equations do not suffice") +
                      " within the bound");
}

std::vector<Word> primitive_circular_windows(std::size_t k, std::size_t n_min, std::size_t n_max) {
  std::vector<Word> out;
  for_all_words(k, n_max, [&](const Word& w) {
    if (w.size() >= n_min && least_period(w) == w.size() && least_rotation(w.letters()) == 0 &&
        primitive_root(w) == w)
      out.push_back(w);
    return true;
  });
  return out;
}

ProbeResult run_defect(const json& p, bool need_code, bool linear) {
  const std::size_t k = size_param(p, "alphabet");
  const auto X = words_in(p.at("X"), k);
  const bool code = is_code(X);
  if (need_code && !code) throw DomainError("X must be a code for this probe");
  const auto rank = combinatorial_rank(X);
  std::size_t checked = 0, max_k = 0;
  json violations = json::array();
  const std::size_t n_max = size_param(p, "n_max");
  if (!linear) {
    for (const Word& w : primitive_circular_windows(k, 2, n_max)) {
      const auto d = disjoint_x_factorizations(CircularWord(w), X);
      ++checked;
      max_k = std::max(max_k, d.best);
      if (d.best >= 1 && rank.upper + d.best > X.size() + 1) violations.push_back({{"window", w.to_string()}, {"k", d.best}});
    }
  } else {
    std::size_t px = 0;
    for (const Word& x : X) px = std::max(px, least_period(x));
    for_all_words(k, n_max, [&](const Word& w) {
      if (least_period(w) <= px) return true;
      const auto d = disjoint_x_factorizations(w, X);
      ++checked;
      max_k = std::max(max_k, d.best);
      if (d.best > X.size() + 1 - std::min(rank.upper, X.size() + 1)) violations.push_back({{"word", w.to_string()}, {"k", d.best}});
      return true;
    });
  }
  json j = {{"X", to_json(X)}, {"is_code", code}, {"rank", to_json(rank)}, {"checked", checked}, {"max_disjoint", max_k},
            {"violations", violations}, {"evidence", linear ? "finite words" : "window evidence"}};
  return evidence(j, std::to_string(violations.size()) + " violations among " + std::to_string(checked) +
                         (linear ? " words" : " cyclic windows"));
}

ProbeResult run_pcp_properties(const json& p) {
  const Morphism h = parse_morphism(get<std::string>(p, "h")), g = parse_morphism(get<std::string>(p, "g"));
  const auto props = instance_properties(h, g, size_param(p, "bound"));
  const auto sol = bounded_pcp(h, g, size_param(p, "max_length"), size_param(p, "max_nodes"));
  json j = {{"h", h.to_string()}, {"g", g.to_string()}, {"h_marked", props.h_marked}, {"g_marked", props.g_marked},
            {"unique_equality_continuation", props.unique_equality_continuation}, {"bound", props.bound},
            {"pcp", {{"verdict", to_string(sol.verdict)}, {"nodes", sol.nodes}}}};
  if (sol.solution) j["pcp"]["solution"] = sol.solution->to_string();
  if (props.counterexample_u) j["counterexample_u"] = props.counterexample_u->to_string();
  return evidence(j, std::string(props.unique_equality_continuation ? "unique equality continuation holds" : "continuation not unique") +
                         " up to the bound",
                  sol.verdict == Verdict::budget);
}

// ---- registry -------------------------------------------------------------

std::vector<ProbeDescriptor> build_registry() {
  std::vector<ProbeDescriptor> r;
  auto add = [&](std::string id, std::string kind, std::string statement, std::string target, json defaults,
                 std::string expected, std::function<ProbeResult(const json&)> run) {
    r.push_back({std::move(id), std::move(kind), std::move(statement), std::move(target), std::move(defaults),
                 std::move(expected), true, std::move(run)});
  };
  auto skip = [&](std::string id, std::string kind, std::string statement, std::string why) {
    r.push_back({std::move(id), std::move(kind), std::move(statement), "none", json::object(), "", false,
                 [why](const json&) { return out_of_scope(why); }});
  };
  const json search = {{"max_length", 200}, {"max_nodes", 10'000'000}, {"max_seconds", 0.0}, {"threads", 1}};
  auto with = [&](json extra, const json& base) {
    json j = base;
    j.update(extra);
    return j;
  };

  add("1.1.03.1", "question", "Is k-avoidability of a pattern decidable?", "longest_avoiding",
      with({{"pattern", "XX"}, {"alphabet", 2}}, search), "XX over 2 letters exhausts at length 3", run_longest_avoiding);
  skip("1.1.03.2", "question", "Complexity of deciding avoidability", "complexity-theoretic question; see 1.1.03.1 for bounded search");
  add("1.1.03.3", "question", "A pattern that is 6-avoidable but not 5-avoidable", "longest_avoiding",
      with({{"pattern", "XYXYX"}, {"max_length", 100}, {"max_nodes", 1'000'000}}, search), "", run_5_vs_6);
  add("1.1.03.4", "question", "Is aabaacbaab 3-D0L-avoidable?", "d0l_avoidance_check",
      {{"morphism", "a->abc;b->ac;c->b"}, {"pattern", "AABAACBAAB"}, {"horizon", 2000}, {"outer", ""}}, "", run_d0l);
  add("1.1.03.5", "conjecture", "k-avoidable patterns are k-HD0L-avoidable", "d0l_avoidance_check",
      {{"morphism", "0->01;1->10"}, {"pattern", "XXX"}, {"horizon", 2048}, {"outer", "0->0;1->1"}}, "", run_d0l);
  skip("1.1.03.6", "question", "Probabilistic method in pattern avoidance", "proof technique, not a computation");
  add("1.1.03.7", "conjecture", "Arbitrarily long circular avoiders exist", "circular_avoiding_lengths",
      {{"pattern", "XX"}, {"alphabet", 3}, {"n_max", 20}}, "square-free ternary circular words miss lengths 5, 7, 9, 10, 14, 17",
      run_circular);
  add("1.1.03.8", "conjecture", "A circular avoider of length |p| exists", "circular_avoiding_lengths",
      {{"pattern", "XYXY"}, {"alphabet", 2}, {"n_max", 8}}, "", run_circular);
  add("1.1.03.9", "conjecture", "Exponential growth gives circular avoiders of all large lengths", "circular_avoiding_lengths",
      {{"pattern", "XX"}, {"alphabet", 3}, {"n_max", 20}, {"census_n_max", 20}}, "", run_circular_and_growth);
  add("1.1.03.10", "question", "Polynomial versus exponential growth of power-free words", "growth_census",
      {{"predicate", "7/3+-free"}, {"alphabet", 2}, {"n_max", 30}, {"max_nodes", 2'000'000'000}}, "", run_growth);
  add("1.1.03.11", "conjecture", "Circular avoiders of abXbcYcaZbaTcb have density 0", "circular_avoiding_lengths",
      {{"pattern", "ABXBCYCAZBATCB"}, {"alphabet", 4}, {"n_max", 7}}, "", run_circular);
  add("1.1.03.12", "conjecture", "Every p-free word is a factor of a maximal p-free word", "is_maximal_pfree",
      {{"predicate", "pattern:XX"}, {"alphabet", 3}, {"word", "ab"}, {"extra", 6}}, "", run_maximal_extension);
  add("1.1.03.13", "conjecture", "Maximal p-free words exist", "is_maximal_pfree",
      {{"predicate", "pattern:XX"}, {"alphabet", 3}, {"max_length", 14}}, "", run_maximal_exists);
  add("1.1.03.14", "conjecture", "k-power-free words extend to maximal ones", "is_maximal_pfree",
      {{"predicate", "3/2-free"}, {"alphabet", 3}, {"word", "ab"}, {"extra", 6}}, "", run_maximal_extension);
  add("1.1.07.1", "question", "Avoidance by infinite sequences of palindromes", "palindrome_concat_avoider",
      with({{"pattern", "XX"}, {"alphabet", 3}, {"max_length", 60}}, search), "square-free concatenations reach 60",
      run_palindromes);
  add("1.1.11.1", "question", "Finite or infinite subtree", "subtree_explore",
      {{"predicate", "cube-free"}, {"alphabet", 2}, {"roots", {"aabaa", "abba", "aab"}}, {"depth", 14}}, "", run_subtree);
  add("1.1.11.2", "question", "Isomorphic subtrees", "subtree_explore",
      {{"predicate", "cube-free"}, {"alphabet", 2}, {"roots", {"aab", "bba"}}, {"depth", 12}}, "", run_subtree_iso);
  add("1.1.11.3", "question", "Arbitrarily large finite subtrees", "subtree_explore",
      {{"predicate", "cube-free"}, {"alphabet", 2}, {"root_length", 8}, {"depth", 16}}, "", run_large_finite_subtrees);
  add("1.1.13.1", "question", "Square-free words with a square-free self-shuffle", "self_shuffle_squarefree_search",
      {{"alphabet", 3}, {"n_max", 5}}, "", run_self_shuffle);
  add("1.1.13.2", "question", "Words with a unique square-free self-shuffle", "count_self_shuffle_squarefree",
      {{"alphabet", 3}, {"n_max", 5}}, "", run_unique_self_shuffle);
  add("1.1.13.3", "question", "Shuffles reached by several conduction sequences", "shuffle",
      {{"alphabet", 3}, {"n_max", 4}}, "", run_multi_conduction);
  add("1.1.13.4", "question", "Square-free words that are self-shuffles", "self_shuffle_root",
      {{"alphabet", 3}, {"n_max", 8}}, "", run_square_free_self_shuffles);
  skip("1.1.13.5", "question", "Infinite square-free shuffles u = u shuffled with w", "infinite shuffles have no finite rendering");
  skip("1.1.13.6", "question", "Infinite square-free w = w shuffled with w", "infinite shuffles have no finite rendering");
  add("1.1.15.1", "conjecture", "Minimal subtrees of index n have size O(log n)", "subtree_explore",
      {{"predicate", "square-free"}, {"alphabet", 3}, {"roots", {"a", "ab", "abc", "abca"}}, {"depth", 10}},
      "the index is undefined; raw statistics only", run_subtree);
  add("1.1.97.1", "question", "Discontinuities of the minimal letter density", "min_letter_density",
      {{"predicates", {"2+-free", "5/2-free", "3-free", "7/2-free", "4-free"}}, {"length", 40}, {"max_nodes", 50'000'000}}, "",
      run_density_grid);
  add("1.1.97.2", "question", "Minimal letter frequency when one more letter is needed", "min_letter_density",
      {{"pattern", "XX"}, {"alphabet", 2}, {"length", 40}, {"max_nodes", 20'000'000}}, "", run_min_frequency);
  add("1.1.97.3", "question", "abXbcYcaZbaTac is 4-avoidable but not 3-avoidable", "longest_avoiding",
      with({{"pattern", "ABXBCYCAZBATAC"}, {"alphabet", 3}, {"max_length", 60}, {"max_nodes", 2'000'000}}, search), "",
      run_longest_avoiding);
  add("1.2.05.1", "question", "Dejean words with prescribed letter frequency", "longest_free_word",
      with({{"alphabet", 5}, {"max_length", 200}, {"max_nodes", 20'000'000}}, search), "", run_dejean_frequency);
  add("1.2.11.1", "conjecture", "FRT(4) = RT(4) = 7/5", "frt_probe",
      with({{"max_length", 300}, {"max_nodes", 50'000'000}}, search), "", run_frt4);
  add("1.3.05.1", "conjecture", "At most n distinct squares in a word of length n", "count_distinct_squares",
      {{"n_max", 16}}, "pass", run_squares_bounded);
  add("1.3.15.1", "question", "Square-density amplifier", "square_density",
      {{"n_max", 14}, {"morphism", "a->ab;b->ba"}}, "", run_square_density);
  add("1.4.09.1", "conjecture", "At most n runs in a binary word of length n", "count_runs", {{"n_max", 16}}, "pass",
      run_runs_bounded);
  add("1.5.15.1", "question", "Least exponent avoidable by iterated duplication", "suffix_square_duplicate",
      {{"start", "ab"}, {"alphabet", 2}, {"grid", {"2+", "5/2", "3", "3+", "4"}}, {"max_length", 16}, {"max_nodes", 2'000'000}}, "",
      run_duplication_threshold);
  add("1.5.15.2", "question", "Cube-free words by square completion", "suffix_square_complete",
      {{"start", "aba"}, {"alphabet", 2}, {"predicate", "cube-free"}, {"max_length", 18}, {"max_nodes", 5'000'000}}, "",
      run_completion_filtered);
  add("1.5.15.3", "question", "Semi-linearity of completion languages", "suffix_square_complete",
      {{"start", "aba"}, {"alphabet", 2}, {"max_length", 14}, {"max_nodes", 5'000'000}}, "", run_completion_language);
  add("1.5.15.4", "question", "Completion languages from special initial sets", "suffix_square_complete",
      {{"start", "abca"}, {"alphabet", 3}, {"max_length", 12}, {"max_nodes", 5'000'000}}, "", run_completion_language);
  add("1.5.15.5", "question", "Minimum number of completion steps", "completion_distance",
      with({{"from", "aba"}, {"to", "abaaba"}, {"alphabet", 2}, {"suffix_only", false}}, search), "", run_completion_distance);
  add("1.6.03.1", "question", "Abelian avoidability of six listed patterns", "zimin_abelian_test",
      {{"patterns", {"01020312", "01020321", "01021303", "01023031", "010203013", "010213020"}}},
      "patterns read with one variable per digit", run_zimin_list);
  add("1.6.03.2", "question", "Exponential growth of abelian cube-free ternary words", "growth_census",
      {{"predicate", "abelian-cube-free"}, {"alphabet", 3}, {"n_max", 16}, {"max_nodes", 2'000'000'000}}, "", run_growth);
  add("1.6.03.3", "conjecture", "Abelian avoidability iff Z_n abelian-avoids p", "zimin_abelian_test",
      {{"patterns", {"XX", "XYX", "XYXY", "XYZXY"}}}, "", run_zimin_list);
  skip("1.6.03.4", "question", "Complexity of the Zimin abelian test", "complexity-theoretic question; see 1.6.03.3");
  add("1.6.03.5", "question", "Values of ART(n) and DART(r)", "art_dart_probe",
      with({{"letters", 3}, {"grid", {"3/2", "7/4", "2"}}, {"dart_exponent", "2"}, {"dart_letters", 4}, {"max_length", 100},
            {"max_nodes", 5'000'000}},
           search),
      "abelian squares exhaust on 3 letters", run_art);
  for (const char* id : {"1.6.13.1", "1.6.13.2", "1.6.13.3", "1.6.13.4", "1.6.13.5", "1.6.13.6"})
    add(id, "question", "Strongly k-abelian nth powers: classes, counts, avoiders", "strong_power_census",
        {{"alphabet", 2}, {"n", 2}, {"k", 2}, {"max_length", 10}}, "", run_strong_census);
  add("1.6.13.7", "question", "Pure morphic binary word avoiding 2-abelian cubes", "avoid_long_powers_search",
      {{"max_image", 3}, {"horizon", 400}}, "", run_pure_morphic_2abelian_cubes);
  add("1.6.13.8", "question", "Abelian squares with |u| >= 2 on 3 letters; cubes on 2", "avoid_long_powers_search",
      with({{"alphabet", 3}, {"kind", "abelian"}, {"n", 2}, {"min_periods", {1, 2}}, {"max_length", 200}, {"max_nodes", 5'000'000}},
           search),
      "", run_long_power_grid);
  add("1.6.13.9", "question", "Binary avoidance of long 2-abelian squares and abelian cubes", "avoid_long_powers_search",
      with({{"alphabet", 2}, {"kind", "kabelian"}, {"k", 2}, {"n", 2}, {"min_periods", {1, 2, 3, 4, 5}}, {"max_length", 200},
            {"max_nodes", 5'000'000}},
           search),
      "", run_long_power_grid);
  add("1.6.13.10", "question", "Additive-cube-free words on {0,1,2,3}, {0,1,4}, {0,2,5}", "avoid_long_powers_search",
      with({{"alphabets", {{0, 1, 2, 3}, {0, 1, 4}, {0, 2, 5}}}, {"max_length", 200}, {"max_nodes", 5'000'000}}, search), "",
      run_additive_cubes);
  add("1.6.15.1", "conjecture", "Binary words maximize distinct abelian squares", "count_abelian_squares",
      {{"alphabet", 3}, {"n_max", 9}}, "", run_abelian_square_alphabets);
  add("1.6.15.2", "conjecture", "O(n sqrt n) inequivalent abelian squares", "count_abelian_squares",
      {{"alphabet", 2}, {"samples", 300}, {"max_length", 200}, {"seed", 1}}, "", run_inequivalent_squares);
  add("1.6.15.3", "question", "Avoiding long abelian cubes over two letters", "avoid_long_powers_search",
      with({{"alphabet", 2}, {"kind", "abelian"}, {"n", 3}, {"min_periods", {1, 2, 3, 4}}, {"max_length", 200},
            {"max_nodes", 5'000'000}},
           search),
      "", run_long_power_grid);
  skip("1.6.15.4", "question", "Deciding whether a morphic word avoids long abelian powers", "decision procedure, out of scope");
  add("1.6.15.5", "question", "Makela's morphism: g(h^inf(0)) without long abelian cubes", "makela_exploration",
      {{"outer", "0->0;1->1;3->1;4->0"}, {"horizon", 400}, {"min_block", 4}}, "", run_makela);
  add("1.6.15.6", "question", "Heuristics for candidates g", "makela_exploration",
      {{"trials", 40}, {"horizon", 300}, {"min_block", 4}, {"max_image", 3}, {"seed", 1}}, "", run_makela_random);
  add("1.6.15.7", "question", "A simple morphism avoiding abelian squares on four letters", "avoid_long_powers_search",
      {{"morphism", "a->abcd;b->bcda;c->cdab;d->dabc"}, {"horizon", 500}}, "user-supplied morphisms are checked",
      run_abelian_square_free_fixed_point);
  add("1.6.15.8", "question", "Least k for avoiding abelian squares of period >= k on 3 letters", "avoid_long_powers_search",
      with({{"alphabet", 3}, {"kind", "abelian"}, {"n", 2}, {"min_periods", {1, 2, 3, 4, 5}}, {"max_length", 200},
            {"max_nodes", 5'000'000}},
           search),
      "", run_long_power_grid);
  add("1.6.15.9", "question", "Least k for avoiding 2-abelian squares of period >= k on 2 letters", "avoid_long_powers_search",
      with({{"alphabet", 2}, {"kind", "kabelian"}, {"k", 2}, {"n", 2}, {"min_periods", {1, 2, 3, 4, 5, 6}}, {"max_length", 200},
            {"max_nodes", 5'000'000}},
           search),
      "", run_long_power_grid);
  skip("1.6.15.10", "question", "Five-letter morphisms with small eigenvalues", "eigenvalue conditions are out of scope");
  skip("1.6.15.11", "question", "Three-letter morphisms with small eigenvalues", "eigenvalue conditions are out of scope");
  skip("1.6.15.12", "question", "Eigenvalues of norm 1 in template results", "eigenvalue conditions are out of scope");
  skip("2.1.97.1", "question", "Hausdorff dimension of the recurrence spectrum", "pure analysis");
  add("2.1.97.2", "question", "Recurrence quotients beyond Sturmian words", "recurrence_function",
      {{"oracles", {"fibonacci", "thue_morse", "tribonacci", "sturmian:1,2"}}, {"n_max", 30}, {"horizon", 20000}}, "",
      run_recurrence_quotients);
  skip("2.2.01.1", "question", "S-adic characterization", "S-adic characterizations are out of scope");
  add("2.2.01.2", "question", "Words with p(n)/n tending to 2", "factor_complexity",
      {{"oracles", {"thue_morse", "tribonacci", "fibonacci", "makela"}}, {"n_max", 60}, {"horizon", 20000}}, "",
      run_complexity_ratio);
  add("2.3.01.1", "question", "Balance properties across substitution spectra", "balance_function",
      {{"oracles", {"fibonacci", "tribonacci", "thue_morse"}}, {"n_max", 40}, {"horizon", 20000}}, "", run_balance);
  add("2.3.13.1", "question", "Arnoux-Rauzy words with a given balance", "balance_function",
      {{"oracles", {"tribonacci"}}, {"n_max", 60}, {"horizon", 50000}}, "", run_balance);
  add("2.4.05.1", "question", "Rauzy graphs of words reaching the palindromic bound", "rauzy_graph",
      {{"oracle", "fibonacci"}, {"n", 4}, {"n_max", 20}, {"horizon", 5000}}, "", run_rauzy);
  skip("3.1.97.1", "question", "Efficient algorithms for polynomial problems", "algorithm design question");
  add("3.1.97.2", "question", "Minimal and maximal F-factorizations", "f_factorizations",
      {{"spec", {{"sigma", "a"},
                 {"control", {{"alphabet", 2}, {"states", 1}, {"initial", 0}, {"accepting", {0}}, {"transitions", {{0, 0, 0}, {0, 1, 0}}}}},
                 {"components",
                  {{{"alphabet", "a"}, {"states", 2}, {"initial", 0}, {"accepting", {1}}, {"transitions", {{0, "a", 1}}}},
                   {{"alphabet", "a"}, {"states", 3}, {"initial", 0}, {"accepting", {2}}, {"transitions", {{0, "a", 1}, {1, "a", 2}}}}}}}},
       {"word", "aaaaa"}},
      "", run_min_max_factorization);
  skip("3.1.97.3", "question", "Better algorithms for finite languages", "algorithm design question");
  skip("3.1.97.4", "question", "Undecidability for context-free F-factorizations", "undecidability question");
  add("3.1.97.5", "question", "Synchronization when parameters are not given", "check_synchronization",
      {{"spec", {{"sigma", "ab"},
                 {"control", {{"alphabet", 1}, {"states", 1}, {"initial", 0}, {"accepting", {0}}, {"transitions", {{0, 0, 0}}}}},
                 {"components",
                  {{{"alphabet", "ab"}, {"states", 4}, {"initial", 0}, {"accepting", {1, 3}},
                    {"transitions", {{0, "a", 1}, {0, "b", 2}, {2, "a", 3}}}}}}}},
       {"bound", 10}},
      "", run_sync_search);
  add("3.2.07.1", "conjecture", "Least periods of Sturmian factors lie in the period set", "sturmian_period_set",
      {{"cf", {1}}, {"max_factor", 150}, {"horizon", 3000}}, "pass", run_sturmian_periods);
  add("3.3.13.1", "question", "Is quasiperiodicity of a fixed point decidable?", "prefix_cover",
      {{"morphism", "a->aba;b->bab"}, {"horizon", 3000}}, "", run_fixed_point_cover);
  add("3.3.13.2", "conjecture", "Morphisms generating quasiperiodic words are weakly quasiperiodic", "morphism_quasiperiodicity_probe",
      {{"morphism", "a->aba;b->bab"}, {"sample_length", 6}, {"horizon", 500}}, "", run_weak_quasiperiodicity);
  add("3.4.01.1", "question", "Independent system of three equations with a non-periodic solution", "solve_word_equation",
      {{"system", "x y z = z y x; x y y z = z y y x; x z = z x"}, {"max_len", 2}, {"alphabet", 2}}, "", run_equation_system);
  add("3.4.05.1", "question", "Is u^i = v_1^i...v_n^i equivalent to three of its equations?", "solve_word_equation",
      {{"n", 2}, {"equations", 5}, {"max_len", 3}}, "", run_power_system);
  add("3.4.99.1", "question", "Disjoint factorizations bound the rank", "disjoint_x_factorizations",
      {{"X", {"a", "ab", "ba"}}, {"alphabet", 2}, {"n_max", 10}}, "window evidence", [](const json& p) {
        return run_defect(p, false, false);
      });
  add("3.4.99.2", "question", "Disjoint factorizations of codes with a non-periodic one", "disjoint_x_factorizations",
      {{"X", {"a", "ab", "bb"}}, {"alphabet", 2}, {"n_max", 10}}, "window evidence", [](const json& p) {
        return run_defect(p, true, false);
      });
  add("3.4.99.3", "question", "At most |X| + 1 - r(X) disjoint factorizations", "disjoint_x_factorizations",
      {{"X", {"a", "b", "ab"}}, {"alphabet", 2}, {"n_max", 10}}, "", [](const json& p) { return run_defect(p, false, true); });
  skip("3.5.05.1", "question", "PCP for unique equality continuation instances", "unbounded decidability is out of scope");
  add("3.5.05.2", "question", "Deciding unique equality continuation", "instance_properties",
      {{"h", "a->ab;b->a"}, {"g", "a->a;b->ba"}, {"bound", 6}, {"max_length", 12}, {"max_nodes", 1'000'000}}, "", run_pcp_properties);

  auto key = [](const std::string& id) {
    std::vector<int> v;
    std::size_t s = 0;
    while (s < id.size()) {
      auto e = id.find('.', s);
      if (e == std::string::npos) e = id.size();
      v.push_back(std::stoi(id.substr(s, e - s)));
      s = e + 1;
    }
    return v;
  };
  std::sort(r.begin(), r.end(), [&](const auto& a, const auto& b) { return key(a.id) < key(b.id); });
  return r;
}

}  // namespace

const std::vector<ProbeDescriptor>& probe_registry() {
  static const std::vector<ProbeDescriptor> registry = build_registry();
  return registry;
}

const ProbeDescriptor* find_probe(std::string_view id) {
  for (const auto& d : probe_registry())
    if (d.id == id) return &d;
  return nullptr;
}

std::vector<std::string> probe_ids() {
  std::vector<std::string> out;
  for (const auto& d : probe_registry()) out.push_back(d.id);
  return out;
}

ProbeReport run_probe(std::string_view id, const json& overrides) {
  const ProbeDescriptor* d = find_probe(id);
  if (!d) {
    std::string ids;
    for (const auto& s : probe_ids()) ids += (ids.empty() ? "" : ", ") + s;
    throw DomainError("unknown probe id '" + std::string(id) + "'; known ids: " + ids);
  }
  json params = d->defaults;
  for (auto it = overrides.begin(); it != overrides.end(); ++it) params[it.key()] = it.value();
  const auto start = std::chrono::steady_clock::now();
  ProbeResult res = d->run(params);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ProbeReport rep;
  rep.exit_code = res.status == ProbeStatus::budget ? 2 : 0;
  const std::string verdict = res.status == ProbeStatus::budget ? "budget" : res.verdict;
  rep.report = {{"id", d->id},
                {"kind", d->kind},
                {"statement", d->statement},
                {"target", d->target},
                {"inputs", params},
                {"verdict", verdict},
                {"result", res.result},
                {"summary", res.summary},
                {"statistics", {{"seconds", secs}}}};
  if (!d->expected.empty()) rep.report["expected"] = d->expected;
  rep.summary = d->id + " [" + verdict + "] " + res.summary;
  return rep;
}

}  // namespace wordlab::app
