#include "wordlab/abelian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "wordlab/error.hpp"
#include "wordlab/index.hpp"
#include "wordlab/oracle.hpp"

namespace wordlab {

namespace {

using Signature = std::vector<std::string>;

/// Sorted factor lists for lengths 1..k, one string per length.
Signature kabelian_signature(std::span<const Letter> w, std::size_t k) {
  Signature sig;
  for (std::size_t j = 1; j <= std::min(k, w.size()); ++j) {
    std::vector<std::string> factors;
    for (std::size_t i = 0; i + j <= w.size(); ++i) factors.emplace_back(w.begin() + i, w.begin() + i + j);
    std::sort(factors.begin(), factors.end());
    std::string joined;
    for (const auto& f : factors) {
      joined += f;
      joined.push_back('\xff');
    }
    sig.push_back(std::move(joined));
  }
  return sig;
}

/// Prefix letter counts: out[i][a] = |w[0..i)|_a.
std::vector<std::vector<std::size_t>> prefix_counts(std::span<const Letter> w, std::size_t k) {
  std::vector<std::vector<std::size_t>> out(w.size() + 1, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i + 1] = out[i];
    ++out[i + 1][w[i]];
  }
  return out;
}

bool same_parikh(const std::vector<std::vector<std::size_t>>& c, std::size_t s, std::size_t t, std::size_t m) {
  for (std::size_t a = 0; a < c[0].size(); ++a)
    if (c[s + m][a] - c[s][a] != c[t + m][a] - c[t][a]) return false;
  return true;
}

}  // namespace

ParikhVector parikh(const Word& w) {
  ParikhVector v(w.alphabet().size(), 0);
  for (Letter a : w) ++v[a];
  return v;
}

bool kabelian_equiv(const Word& u, const Word& v, std::size_t k) {
  if (k < 1) throw DomainError("k-abelian equivalence needs k >= 1");
  if (u.size() != v.size()) return false;
  return kabelian_signature(u.letters(), k) == kabelian_signature(v.letters(), k);
}

std::string to_string(EquivalenceKind kind) {
  switch (kind) {
    case EquivalenceKind::abelian: return "abelian";
    case EquivalenceKind::k_abelian: return "k-abelian";
    case EquivalenceKind::additive: return "additive";
    case EquivalenceKind::strongly_k_abelian: return "strongly-k-abelian";
  }
  return "?";
}

std::optional<AbelianPowerReport> is_kabelian_npower(const Word& w, std::size_t n, std::size_t k) {
  if (n < 2 || k < 1) throw DomainError("k-abelian powers need n >= 2 and k >= 1");
  if (w.empty() || w.size() % n != 0) return std::nullopt;
  const std::size_t m = w.size() / n;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!kabelian_equiv(w.substr(i * m, m), w.substr((i + 1) * m, m), k)) return std::nullopt;
  return AbelianPowerReport{m, n, k == 1 ? EquivalenceKind::abelian : EquivalenceKind::k_abelian, k};
}

bool is_strongly_kabelian_npower(const Word& w, std::size_t n, std::size_t k, std::uint64_t max_candidates) {
  if (n < 1 || k < 1) throw DomainError("strong powers need n >= 1 and k >= 1");
  if (w.empty() || w.size() % n != 0) return false;
  const std::size_t m = w.size() / n;
  const ParikhVector pv = parikh(w);
  std::vector<Letter> x;
  for (std::size_t a = 0; a < pv.size(); ++a) {
    if (pv[a] % n != 0) return false;
    x.insert(x.end(), pv[a] / n, static_cast<Letter>(a));
  }
  const Signature target = kabelian_signature(w.letters(), k);
  std::uint64_t tried = 0;
  std::vector<Letter> power(w.size());
  do {
    if (++tried > max_candidates) throw BudgetError("strong power search exceeded its candidate budget");
    for (std::size_t i = 0; i < w.size(); ++i) power[i] = x[i % m];
    if (kabelian_signature(power, k) == target) return true;
  } while (std::next_permutation(x.begin(), x.end()));
  return false;
}

std::optional<std::vector<Word>> abelian_encounter_witness(const Word& w, const Pattern& p, bool allow_constants) {
  if (p.has_constants() && !allow_constants) throw UnsupportedError("abelian encounters with constants are disabled");
  const auto text = w.letters();
  const std::size_t n = text.size();
  const auto counts = prefix_counts(text, w.alphabet().size());
  const auto& body = p.body();
  std::vector<std::size_t> vstart(p.variable_count()), vlen(p.variable_count(), 0);
  std::vector<std::size_t> bstart(body.size()), blen(body.size());

  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t pos) -> bool {
    if (k == body.size()) return true;
    const std::size_t rest = body.size() - k - 1;
    const PatternSymbol s = body[k];
    bstart[k] = pos;
    if (!s.is_variable) {
      if (pos + 1 + rest > n || text[pos] != s.id) return false;
      blen[k] = 1;
      return rec(k + 1, pos + 1);
    }
    if (vlen[s.id] != 0) {
      const std::size_t L = vlen[s.id];
      if (pos + L + rest > n || !same_parikh(counts, vstart[s.id], pos, L)) return false;
      blen[k] = L;
      return rec(k + 1, pos + L);
    }
    for (std::size_t L = 1; pos + L + rest <= n; ++L) {
      vstart[s.id] = pos;
      vlen[s.id] = L;
      blen[k] = L;
      if (rec(k + 1, pos + L)) return true;
    }
    vlen[s.id] = 0;
    return false;
  };
  for (std::size_t s = 0; s + body.size() <= n; ++s) {
    if (!rec(0, s)) continue;
    std::vector<Word> blocks;
    for (std::size_t k = 0; k < body.size(); ++k) blocks.push_back(w.substr(bstart[k], blen[k]));
    return blocks;
  }
  return std::nullopt;
}

bool abelian_encounters(const Word& w, const Pattern& p, bool allow_constants) {
  return abelian_encounter_witness(w, p, allow_constants).has_value();
}

bool zimin_abelian_test(const Pattern& p, std::size_t n) {
  return !abelian_encounters(zimin_word(n), p);
}

std::size_t count_abelian_squares(const Word& w, AbelianSquareMode mode) {
  const auto text = w.letters();
  const std::size_t n = text.size();
  if (n < 2) return 0;
  const auto counts = prefix_counts(text, w.alphabet().size());
  if (mode == AbelianSquareMode::inequivalent) {
    std::set<std::vector<std::size_t>> vectors;
    for (std::size_t h = 1; 2 * h <= n; ++h)
      for (std::size_t i = 0; i + 2 * h <= n; ++i)
        if (same_parikh(counts, i, i + h, h)) {
          std::vector<std::size_t> v(counts[0].size());
          for (std::size_t a = 0; a < v.size(); ++a) v[a] = counts[i + 2 * h][a] - counts[i][a];
          vectors.insert(std::move(v));
        }
    return vectors.size();
  }
  const index::SuffixAutomaton sam(text, w.alphabet().size());
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t h = 1; 2 * h <= n; ++h)
    for (std::size_t i = 0; i + 2 * h <= n; ++i)
      if (same_parikh(counts, i, i + h, h)) {
        const auto state = sam.locate(i + 2 * h - 1, static_cast<std::int32_t>(2 * h));
        seen.insert((static_cast<std::uint64_t>(state) << 32) | (2 * h));
      }
  return seen.size();
}

std::vector<std::int64_t> letter_values(const Alphabet& alphabet, const std::optional<std::vector<std::int64_t>>& values) {
  if (values) {
    if (values->size() < alphabet.size()) throw DomainError("value table shorter than the alphabet");
    return *values;
  }
  std::vector<std::int64_t> out(alphabet.size());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = alphabet.digit_value(static_cast<Letter>(a));
  return out;
}

std::optional<AbelianPowerReport> is_additive_npower(const Word& w, std::size_t n,
                                                     const std::optional<std::vector<std::int64_t>>& values) {
  if (n < 2) throw DomainError("additive powers need n >= 2");
  if (w.empty() || w.size() % n != 0) return std::nullopt;
  const auto val = letter_values(w.alphabet(), values);
  const std::size_t m = w.size() / n;
  std::int64_t first = 0;
  for (std::size_t b = 0; b < n; ++b) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < m; ++i) sum += val[w[b * m + i]];
    if (b == 0)
      first = sum;
    else if (sum != first)
      return std::nullopt;
  }
  return AbelianPowerReport{m, n, EquivalenceKind::additive, 1};
}

LongPowerChecker::LongPowerChecker(LongPowerKind kind, std::size_t n, std::size_t min_period, std::size_t alphabet_size)
    : kind_(std::move(kind)), n_(n), min_period_(std::max<std::size_t>(min_period, 1)), k_(alphabet_size) {
  if (n_ < 2) throw DomainError("power degree must be at least 2");
  if (kind_.kind == EquivalenceKind::strongly_k_abelian) throw UnsupportedError("strong powers are not searchable");
  if (kind_.kind == EquivalenceKind::additive) values_ = letter_values(Alphabet::digits(alphabet_size), kind_.values);
  counts_.emplace_back(k_, 0);
  sums_.push_back(0);
}

bool LongPowerChecker::blocks_equivalent(std::size_t s, std::size_t t, std::size_t m) const {
  if (kind_.kind == EquivalenceKind::additive) return sums_[s + m] - sums_[s] == sums_[t + m] - sums_[t];
  if (!same_parikh(counts_, s, t, m)) return false;
  if (kind_.kind != EquivalenceKind::k_abelian || kind_.k <= 1) return true;
  const std::span<const Letter> w(word_);
  return kabelian_signature(w.subspan(s, m), kind_.k) == kabelian_signature(w.subspan(t, m), kind_.k);
}

bool LongPowerChecker::push(Letter a) {
  word_.push_back(a);
  counts_.push_back(counts_.back());
  ++counts_.back()[a];
  sums_.push_back(sums_.back() + (values_.empty() ? 0 : values_[a]));
  const std::size_t L = word_.size();
  for (std::size_t m = min_period_; n_ * m <= L; ++m) {
    const std::size_t s = L - n_ * m;
    bool all = true;
    for (std::size_t i = 0; i + 1 < n_ && all; ++i) all = blocks_equivalent(s + i * m, s + (i + 1) * m, m);
    if (all) return false;
  }
  return true;
}

void LongPowerChecker::pop() {
  word_.pop_back();
  counts_.pop_back();
  sums_.pop_back();
}

SearchOutcome avoid_long_powers_search(std::size_t k_letters, const LongPowerKind& kind, std::size_t n,
                                       std::size_t min_period, const SearchBudget& budget) {
  const bool symmetric = kind.kind != EquivalenceKind::additive;
  ExtensionSearchOptions opt{Alphabet::latin(k_letters), symmetric, {}};
  return extension_search(LongPowerChecker(kind, n, min_period, k_letters), opt, budget);
}

AbelianFractionalChecker::AbelianFractionalChecker(Rational s, std::size_t alphabet_size)
    : num_(s.num()), den_(s.den()), k_(alphabet_size) {
  if (s <= Rational(1) || s > Rational(2)) throw DomainError("abelian exponent must lie in (1, 2]");
  counts_.emplace_back(k_, 0);
}

bool AbelianFractionalChecker::push(Letter a) {
  counts_.push_back(counts_.back());
  ++counts_.back()[a];
  const std::size_t e = counts_.size() - 1;  // current length
  for (std::size_t m = 1; m < e; ++m) {
    // Suffix uv with |u| = m and |uv| = L, m < L <= 2m, L * den >= m * num.
    const std::size_t lo = static_cast<std::size_t>((static_cast<std::int64_t>(m) * num_ + den_ - 1) / den_);
    for (std::size_t L = std::max(lo, m + 1); L <= std::min(2 * m, e); ++L) {
      const std::size_t s = e - L, mid = s + m;
      bool dominated = true;
      for (std::size_t c = 0; c < k_ && dominated; ++c)
        dominated = counts_[e][c] - counts_[mid][c] <= counts_[mid][c] - counts_[s][c];
      if (dominated) return false;
    }
  }
  return true;
}

void AbelianFractionalChecker::pop() { counts_.pop_back(); }

ThresholdProbe art_probe(std::size_t n, const std::vector<Rational>& grid, const SearchBudget& budget) {
  if (grid.empty()) throw DomainError("threshold probe needs a nonempty exponent grid");
  ThresholdProbe out;
  for (const Rational& s : grid) {
    const auto res = extension_search(AbelianFractionalChecker(s, n), {Alphabet::latin(n), true, {}}, budget);
    out.rows.push_back({s, n, res.verdict, res.word.size()});
    if (res.verdict == Verdict::found && (!out.upper_evidence || s < *out.upper_evidence)) out.upper_evidence = s;
    if (res.verdict == Verdict::exhausted && (!out.lower_evidence || s > *out.lower_evidence)) out.lower_evidence = s;
  }
  return out;
}

ThresholdProbe dart_probe(const Rational& r, std::size_t n_max, const SearchBudget& budget) {
  if (n_max < 1) throw DomainError("threshold probe needs n_max >= 1");
  ThresholdProbe out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto res = extension_search(AbelianFractionalChecker(r, n), {Alphabet::latin(n), true, {}}, budget);
    out.rows.push_back({r, n, res.verdict, res.word.size()});
    if (res.verdict == Verdict::exhausted) out.greatest_exhausted_letters = n;
    if (res.verdict == Verdict::found) {
      out.least_sustained_letters = n;
      break;
    }
  }
  return out;
}

StrongPowerCensus strong_power_census(std::size_t alphabet_size, std::size_t n, std::size_t k, std::size_t length,
                                      std::uint64_t max_words) {
  if (n < 2 || k < 1 || alphabet_size < 1) throw DomainError("strong power census needs n >= 2, k >= 1");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    total *= alphabet_size;
    if (total > max_words) throw BudgetError("strong power census is too large for exhaustive enumeration");
  }
  auto for_each_word = [&](std::size_t len, auto&& visit) {
    std::vector<Letter> w(len, 0);
    while (true) {
      visit(std::as_const(w));
      std::size_t i = len;
      while (i > 0 && w[i - 1] + 1u == alphabet_size) w[--i] = 0;
      if (i == 0) return;
      ++w[i - 1];
    }
  };
  // Signatures of literal n-th powers per total length.
  std::vector<std::set<Signature>> power_sigs(length + 1);
  for (std::size_t m = 1; n * m <= length; ++m)
    for_each_word(m, [&](const std::vector<Letter>& x) {
      std::vector<Letter> p;
      for (std::size_t i = 0; i < n; ++i) p.insert(p.end(), x.begin(), x.end());
      power_sigs[n * m].insert(kabelian_signature(p, k));
    });

  StrongPowerCensus out;
  out.length = length;
  std::map<Signature, std::pair<std::uint64_t, bool>> classes;
  for_each_word(length, [&](const std::vector<Letter>& w) {
    ++out.words;
    const std::span<const Letter> ws(w);
    auto& cls = classes[kabelian_signature(ws, k)];
    ++cls.first;
    if (length > 0 && length % n == 0) {
      const std::size_t m = length / n;
      bool literal = true;
      for (std::size_t i = m; i < length && literal; ++i) literal = w[i] == w[i - m];
      if (literal) cls.second = true;
    }
    bool avoids = true;
    for (std::size_t len = n; len <= length && avoids; len += n)
      for (std::size_t s = 0; s + len <= length && avoids; ++s)
        if (power_sigs[len].count(kabelian_signature(ws.subspan(s, len), k))) avoids = false;
    if (avoids) ++out.avoiders;
  });
  out.classes = classes.size();
  for (const auto& [sig, cls] : classes)
    if (cls.second) {
      ++out.classes_with_power;
      out.strong_powers += cls.first;
    }
  return out;
}

CubeOccurrences abelian_cube_occurrences(const Word& w) {
  CubeOccurrences out;
  out.horizon = w.size();
  out.word = w;
  const auto counts = prefix_counts(w.letters(), w.alphabet().size());
  for (std::size_t m = 1; 3 * m <= w.size(); ++m)
    for (std::size_t s = 0; s + 3 * m <= w.size(); ++s)
      if (same_parikh(counts, s, s + m, m) && same_parikh(counts, s + m, s + 2 * m, m)) ++out.by_block_length[m];
  return out;
}

CubeOccurrences makela_exploration(const Morphism& outer, std::size_t horizon) {
  const Word fixed = PrefixOracle::makela().prefix(horizon);
  CubeOccurrences out = abelian_cube_occurrences(apply_morphism(outer, fixed.with_alphabet(outer.domain())));
  out.horizon = horizon;
  return out;
}

}  // namespace wordlab
