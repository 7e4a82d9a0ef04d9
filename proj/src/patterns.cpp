#include "wordlab/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <functional>

#include "wordlab/error.hpp"

namespace wordlab {

Pattern Pattern::parse(std::string_view text) {
  Pattern p;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (std::isupper(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c))) {
      auto pos = p.names_.find(c);
      if (pos == std::string::npos) {
        pos = p.names_.size();
        p.names_.push_back(c);
      }
      p.body_.push_back({true, static_cast<std::uint8_t>(pos)});
    } else if (std::islower(static_cast<unsigned char>(c))) {
      p.body_.push_back({false, static_cast<std::uint8_t>(c - 'a')});
    } else {
      throw ParseError(std::string("bad pattern symbol '") + c + "'");
    }
  }
  if (p.body_.empty()) throw ParseError("empty pattern");
  if (p.names_.empty()) throw ParseError("pattern without variables");
  return p;
}

bool Pattern::has_constants() const noexcept {
  return std::any_of(body_.begin(), body_.end(), [](const PatternSymbol& s) { return !s.is_variable; });
}

std::size_t Pattern::power_degree() const noexcept {
  if (names_.size() != 1 || has_constants()) return 0;
  return body_.size();
}

std::string Pattern::to_string() const {
  std::string out;
  for (const auto& s : body_) out.push_back(s.is_variable ? names_[s.id] : static_cast<char>('a' + s.id));
  return out;
}

namespace {

/// Backtracking over variable image lengths. Variables get lengths in
/// first-occurrence order, shortest first.
class Matcher {
 public:
  Matcher(std::span<const Letter> text, const Pattern& p, std::size_t max_end, std::optional<std::size_t> end)
      : text_(text), p_(p), max_end_(max_end), end_(end), start_(p.variable_count(), 0), len_(p.variable_count(), 0) {}

  bool match(std::size_t k, std::size_t pos) {
    const auto& body = p_.body();
    if (k == body.size()) {
      if (end_ && pos != *end_) return false;
      end_pos_ = pos;
      return true;
    }
    const std::size_t rest = body.size() - k - 1;
    const PatternSymbol s = body[k];
    if (!s.is_variable) {
      if (pos + 1 + rest > max_end_ || text_[pos] != s.id) return false;
      return match(k + 1, pos + 1);
    }
    if (len_[s.id] != 0) {
      const std::size_t L = len_[s.id];
      if (pos + L + rest > max_end_) return false;
      if (!std::equal(text_.begin() + start_[s.id], text_.begin() + start_[s.id] + L, text_.begin() + pos))
        return false;
      return match(k + 1, pos + L);
    }
    for (std::size_t L = 1; pos + L + rest <= max_end_; ++L) {
      start_[s.id] = pos;
      len_[s.id] = L;
      if (match(k + 1, pos + L)) return true;
    }
    len_[s.id] = 0;
    return false;
  }

  std::size_t start(std::size_t v) const { return start_[v]; }
  std::size_t len(std::size_t v) const { return len_[v]; }
  std::size_t end_pos() const { return end_pos_; }

 private:
  std::span<const Letter> text_;
  const Pattern& p_;
  std::size_t max_end_;
  std::optional<std::size_t> end_;
  std::vector<std::size_t> start_, len_;
  std::size_t end_pos_ = 0;
};

Word substitute(const Pattern& p, const std::vector<Word>& images, const Alphabet& alphabet) {
  std::vector<Letter> out;
  for (const auto& s : p.body()) {
    if (s.is_variable) {
      const auto& img = images.at(s.id);
      out.insert(out.end(), img.begin(), img.end());
    } else {
      out.push_back(s.id);
    }
  }
  return Word(alphabet, std::move(out));
}

std::uint64_t falling_factorial(std::size_t k, std::size_t m) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < m; ++i) r *= k - i;
  return r;
}

}  // namespace

bool encounter_at(std::span<const Letter> text, const Pattern& p, std::size_t start, std::optional<std::size_t> end,
                  std::size_t max_len) {
  const std::size_t max_end = std::min(text.size(), start + max_len);
  if (end && *end > max_end) return false;
  Matcher m(text, p, end ? *end : max_end, end);
  return m.match(0, start);
}

std::optional<EncounterWitness> encounters(const Word& w, const Pattern& p) {
  const auto text = w.letters();
  for (std::size_t s = 0; s + p.size() <= text.size(); ++s) {
    Matcher m(text, p, text.size(), std::nullopt);
    if (!m.match(0, s)) continue;
    EncounterWitness wit;
    wit.position = s + 1;
    wit.length = m.end_pos() - s;
    for (std::size_t v = 0; v < p.variable_count(); ++v) wit.images.push_back(w.substr(m.start(v), m.len(v)));
    return wit;
  }
  return std::nullopt;
}

bool verify_witness(const Word& w, const Pattern& p, const EncounterWitness& witness) {
  if (witness.images.size() != p.variable_count() || witness.position == 0) return false;
  for (const auto& img : witness.images)
    if (img.empty()) return false;
  const Word f = substitute(p, witness.images, w.alphabet());
  return f.size() == witness.length && w.substr(witness.position - 1, f.size()) == f;
}

PatternChecker::PatternChecker(Pattern p) : pattern_(std::move(p)) {
  if (const std::size_t k = pattern_.power_degree(); k >= 2)
    power_.emplace(Rational(static_cast<std::int64_t>(k)), false);
}

bool PatternChecker::push(Letter a) {
  word_.push_back(a);
  if (power_) return power_->push(a);
  if (pattern_.power_degree() == 1) return false;
  const std::size_t n = word_.size();
  for (std::size_t len = pattern_.size(); len <= n; ++len)
    if (encounter_at(word_, pattern_, n - len, n, len)) return false;
  return true;
}

void PatternChecker::pop() {
  word_.pop_back();
  if (power_) power_->pop();
}

bool FreenessPredicate::accepts(const Word& w) const {
  FreenessPredicate copy(*this);
  for (Letter a : w)
    if (!copy.push(a)) return false;
  return true;
}

FreenessPredicate power_free_predicate(const Rational& alpha, bool strict) {
  return FreenessPredicate(PowerFreeChecker(alpha, strict), true, alpha.to_string() + (strict ? "+-free" : "-free"));
}

FreenessPredicate pattern_free_predicate(const Pattern& p) {
  return FreenessPredicate(PatternChecker(p), !p.has_constants(), "pattern:" + p.to_string());
}

SearchOutcome longest_free_word(const FreenessPredicate& pred, std::size_t k, const SearchBudget& budget) {
  ExtensionSearchOptions opt{Alphabet::latin(k), pred.symmetric(), {}};
  return extension_search(pred, opt, budget);
}

SearchOutcome longest_avoiding(const Pattern& p, std::size_t k, const SearchBudget& budget) {
  ExtensionSearchOptions opt{Alphabet::latin(k), !p.has_constants(), {}};
  return extension_search(PatternChecker(p), opt, budget);
}

bool is_circular_pfree(const CircularWord& w, const Pattern& p) {
  const std::size_t n = w.size();
  std::vector<Letter> text(w.underlying().begin(), w.underlying().end());
  text.insert(text.end(), w.underlying().begin(), w.underlying().end());
  for (std::size_t s = 0; s < n; ++s)
    if (encounter_at(text, p, s, std::nullopt, n)) return false;
  return true;
}

std::set<std::size_t> circular_avoiding_lengths(const Pattern& p, std::size_t k, std::size_t n_max) {
  if (n_max < 1) throw DomainError("circular search needs n_max >= 1");
  std::set<std::size_t> out;
  const bool symmetry = !p.has_constants();
  const Alphabet alphabet = Alphabet::latin(k);
  for (std::size_t n = 1; n <= n_max; ++n) {
    PatternChecker checker(p);
    std::vector<Letter> word;
    bool found = false;
    std::function<void(int)> rec = [&](int max_used) {
      if (found) return;
      if (word.size() == n) {
        found = is_circular_pfree(CircularWord(Word(alphabet, word)), p);
        return;
      }
      const int limit = symmetry ? std::min<int>(static_cast<int>(k) - 1, max_used + 1) : static_cast<int>(k) - 1;
      for (int c = 0; c <= limit && !found; ++c) {
        if (checker.push(static_cast<Letter>(c))) {
          word.push_back(static_cast<Letter>(c));
          rec(std::max(max_used, c));
          word.pop_back();
        }
        checker.pop();
      }
    };
    rec(-1);
    if (found) out.insert(n);
  }
  return out;
}

bool is_maximal_pfree(const Word& w, const Pattern& p) {
  if (encounters(w, p)) throw DomainError("word is not pattern-free");
  const std::size_t k = w.alphabet().size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (!encounters(w.prepended(static_cast<Letter>(a)).appended(static_cast<Letter>(b)), p)) return false;
  return true;
}

D0lReport d0l_avoidance_check(const Morphism& m, Letter a, const Pattern& p, std::size_t horizon,
                              const std::optional<Morphism>& outer) {
  D0lReport rep;
  rep.horizon = horizon;
  rep.checked = fixed_point_prefix(m, a, horizon);
  if (outer) rep.checked = apply_morphism(*outer, rep.checked);
  if (const std::size_t k = p.power_degree(); k >= 2 && rep.checked.size() > 0 &&
                                              is_alpha_free(rep.checked, Rational(static_cast<std::int64_t>(k)), false))
    return rep;
  rep.witness = encounters(rep.checked, p);
  rep.free = !rep.witness.has_value();
  return rep;
}

GrowthCensus growth_census(const FreenessPredicate& pred, std::size_t k, std::size_t n_max, std::uint64_t max_nodes) {
  GrowthCensus out;
  out.counts.assign(n_max + 1, 0);
  out.counts[0] = 1;
  FreenessPredicate checker(pred);
  const bool symmetry = pred.symmetric();
  std::size_t depth = 0;
  std::function<void(int)> rec = [&](int max_used) {
    if (depth == n_max) return;
    const int limit = symmetry ? std::min<int>(static_cast<int>(k) - 1, max_used + 1) : static_cast<int>(k) - 1;
    for (int c = 0; c <= limit; ++c) {
      if (++out.nodes > max_nodes) throw BudgetError("growth census exceeded its node budget");
      if (checker.push(static_cast<Letter>(c))) {
        ++depth;
        const int used = std::max(max_used, c);
        out.counts[depth] += symmetry ? falling_factorial(k, static_cast<std::size_t>(used) + 1) : 1;
        rec(used);
        --depth;
      }
      checker.pop();
    }
  };
  rec(-1);

  std::vector<double> xs, ys, ls;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (out.counts[n] == 0) break;
    xs.push_back(static_cast<double>(n));
    ls.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(static_cast<double>(out.counts[n])));
  }
  auto r2 = [&](const std::vector<double>& x) {
    const double m = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sx += x[i];
      sy += ys[i];
      sxx += x[i] * x[i];
      syy += ys[i] * ys[i];
      sxy += x[i] * ys[i];
    }
    const double vx = m * sxx - sx * sx, vy = m * syy - sy * sy;
    if (vx <= 0 || vy <= 0) return 1.0;
    const double c = m * sxy - sx * sy;
    return c * c / (vx * vy);
  };
  if (n_max >= 1 && out.counts[n_max] == 0) {
    out.trend = "finite";
  } else if (xs.size() < 3) {
    out.trend = "undetermined";
  } else {
    out.exp_r2 = r2(xs);
    out.poly_r2 = r2(ls);
    out.trend = out.exp_r2 >= out.poly_r2 ? "exponential" : "polynomial";
  }
  return out;
}

SubtreeStats subtree_explore(const Word& root, const FreenessPredicate& pred, std::size_t depth) {
  FreenessPredicate checker(pred);
  for (Letter a : root)
    if (!checker.push(a)) throw DomainError("subtree root violates the predicate");
  SubtreeStats st;
  const std::size_t k = root.alphabet().size();
  std::function<void(std::size_t)> rec = [&](std::size_t d) {
    ++st.nodes;
    if (d == depth) {
      ++st.frontier;
      return;
    }
    bool any = false;
    for (std::size_t c = 0; c < k; ++c) {
      if (checker.push(static_cast<Letter>(c))) {
        any = true;
        rec(d + 1);
      }
      checker.pop();
    }
    if (!any) ++st.leaves;
  };
  rec(0);
  return st;
}

PalindromeOutcome palindrome_concat_avoider(const Pattern& p, std::size_t k, const SearchBudget& budget,
                                            std::size_t max_block) {
  const auto t0 = std::chrono::steady_clock::now();
  const Alphabet alphabet = Alphabet::latin(k);
  PalindromeOutcome out;
  out.outcome.word = Word(alphabet);
  if (budget.max_nodes == 0) {
    out.outcome.verdict = Verdict::budget;
    return out;
  }
  std::vector<std::vector<Letter>> palindromes;
  for (std::size_t len = 1; len <= max_block; ++len) {
    const std::size_t half = (len + 1) / 2;
    std::vector<Letter> digits(half, 0);
    while (true) {
      std::vector<Letter> pal(digits);
      for (std::size_t i = len / 2; i-- > 0;) pal.push_back(digits[i]);
      palindromes.push_back(std::move(pal));
      std::size_t i = half;
      while (i > 0 && digits[i - 1] + 1u == k) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }

  PatternChecker checker(p);
  std::vector<Letter> word;
  std::vector<std::size_t> blocks;
  std::vector<std::size_t> best_blocks;
  std::size_t best_len = 0;
  std::uint64_t nodes = 0;
  enum class State { running, found, stopped };
  State state = State::running;
  auto out_of_time = [&] {
    return budget.max_seconds > 0 &&
           std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() >= budget.max_seconds;
  };
  std::function<void()> rec = [&] {
    for (std::size_t b = 0; b < palindromes.size() && state == State::running; ++b) {
      if (++nodes > budget.max_nodes || ((nodes & 1023) == 0 && out_of_time())) {
        state = State::stopped;
        return;
      }
      const auto& pal = palindromes[b];
      std::size_t pushed = 0;
      bool ok = true;
      for (Letter a : pal) {
        ++pushed;
        if (!checker.push(a)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        word.insert(word.end(), pal.begin(), pal.end());
        blocks.push_back(b);
        if (word.size() > best_len) {
          best_len = word.size();
          best_blocks = blocks;
        }
        if (word.size() >= budget.max_length)
          state = State::found;
        else
          rec();
        if (state != State::running) return;
        blocks.pop_back();
        word.resize(word.size() - pal.size());
      }
      for (std::size_t i = 0; i < pushed; ++i) checker.pop();
    }
  };
  rec();
  std::vector<Letter> best;
  for (std::size_t b : best_blocks) {
    best.insert(best.end(), palindromes[b].begin(), palindromes[b].end());
    out.blocks.emplace_back(alphabet, palindromes[b]);
  }
  out.outcome.word = Word(alphabet, std::move(best));
  out.outcome.verdict = state == State::found ? Verdict::found
                        : state == State::stopped ? Verdict::budget
                                                  : Verdict::exhausted;
  out.outcome.stats.nodes = nodes;
  out.outcome.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

ConductionSequence ConductionSequence::parse(std::string_view text) {
  ConductionSequence beta;
  for (char c : text) {
    if (c == '0' || c == '1')
      beta.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    else if (c != ',' && !std::isspace(static_cast<unsigned char>(c)))
      throw ParseError(std::string("conduction sequence must be binary, got '") + c + "'");
  }
  return beta;
}

std::size_t ConductionSequence::count(std::uint8_t b) const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), b));
}

std::string ConductionSequence::to_string() const {
  std::string s;
  for (auto b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

Word shuffle(const Word& u0, const Word& u1, const ConductionSequence& beta) {
  if (beta.bits.size() != u0.size() + u1.size() || beta.count(0) != u0.size())
    throw DomainError("conduction sequence counts do not match the shuffled words");
  const Alphabet& alphabet = u1.alphabet().size() > u0.alphabet().size() ? u1.alphabet() : u0.alphabet();
  std::vector<Letter> out;
  out.reserve(beta.bits.size());
  std::size_t j[2] = {0, 0};
  for (auto b : beta.bits) out.push_back(b == 0 ? u0[j[0]++] : u1[j[1]++]);
  return Word(alphabet, std::move(out));
}

namespace {

/// Visits every beta with |beta|_0 = |beta|_1 = |u| whose shuffle of u with
/// itself is square-free, in lexicographic order; visit returns false to stop.
template <class Visit>
void for_each_squarefree_self_shuffle(const Word& u, Visit&& visit) {
  if (!is_alpha_free(u, Rational(2), false)) throw DomainError("self-shuffle search needs a square-free word");
  const std::size_t n = u.size();
  PowerFreeChecker checker(Rational(2), false);
  std::vector<std::uint8_t> bits;
  std::size_t idx[2] = {0, 0};
  bool stop = false;
  std::function<void()> rec = [&] {
    if (bits.size() == 2 * n) {
      stop = !visit(ConductionSequence{bits});
      return;
    }
    for (std::uint8_t b = 0; b < 2 && !stop; ++b) {
      if (idx[b] == n) continue;
      if (checker.push(u[idx[b]])) {
        ++idx[b];
        bits.push_back(b);
        rec();
        bits.pop_back();
        --idx[b];
      }
      checker.pop();
    }
  };
  rec();
}

}  // namespace

std::optional<ConductionSequence> self_shuffle_squarefree_search(const Word& u) {
  std::optional<ConductionSequence> out;
  for_each_squarefree_self_shuffle(u, [&](ConductionSequence beta) {
    out = std::move(beta);
    return false;
  });
  return out;
}

std::uint64_t count_self_shuffle_squarefree(const Word& u) {
  std::uint64_t count = 0;
  for_each_squarefree_self_shuffle(u, [&](const ConductionSequence&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<Word> self_shuffle_root(const Word& w) {
  if (w.size() % 2 != 0) return std::nullopt;
  const std::size_t n = w.size() / 2;
  std::vector<Letter> u;
  std::size_t idx[2] = {0, 0};
  std::function<bool(std::size_t)> rec = [&](std::size_t t) {
    if (t == w.size()) return true;
    for (int b = 0; b < 2; ++b) {
      const std::size_t i = idx[b];
      if (i == n) continue;
      const bool defines = i == u.size();
      if (!defines && u[i] != w[t]) continue;
      if (defines) u.push_back(w[t]);
      ++idx[b];
      if (rec(t + 1)) return true;
      --idx[b];
      if (defines) u.pop_back();
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return Word(w.alphabet(), u);
}

}  // namespace wordlab
