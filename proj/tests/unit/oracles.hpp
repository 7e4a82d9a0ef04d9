#pragma once
// Brute-force references used only by the tests. Everything here works on
// plain strings straight from the definitions, so it shares no code with
// the library.

#include <algorithm>
#include <cstdint>
#include <cctype>
#include <map>
#include <numeric>
#include <tuple>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::size_t period(const std::string& f) {
  for (std::size_t p = 1; p < f.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < f.size() && ok; ++i) ok = f[i] == f[i + p];
    if (ok) return p;
  }
  return f.size();
}

/// Largest |f| / period(f) as a reduced pair compared by cross products.
inline std::pair<std::int64_t, std::int64_t> max_exponent(const std::string& w) {
  std::int64_t bn = 0, bd = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t l = 1; i + l <= w.size(); ++l) {
      const auto f = w.substr(i, l);
      const std::int64_t n = static_cast<std::int64_t>(l), d = static_cast<std::int64_t>(period(f));
      if (n * bd > bn * d) bn = n, bd = d;
    }
  const auto g = std::gcd(bn, bd);
  return {bn / g, bd / g};
}

inline bool alpha_free(const std::string& w, std::int64_t num, std::int64_t den, bool strict) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t l = 1; i + l <= w.size(); ++l) {
      const std::int64_t lhs = static_cast<std::int64_t>(l) * den;
      const std::int64_t rhs = num * static_cast<std::int64_t>(period(w.substr(i, l)));
      if (strict ? lhs > rhs : lhs >= rhs) return false;
    }
  return true;
}

inline std::set<std::string> squares(const std::string& w) {
  std::set<std::string> s;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t h = 1; i + 2 * h <= w.size(); ++h)
      if (w.compare(i, h, w, i + h, h) == 0) s.insert(w.substr(i, 2 * h));
  return s;
}

struct Run {
  std::size_t start, end, period;  // 1-based inclusive
  friend bool operator<(const Run& a, const Run& b) {
    return std::tie(a.start, a.end, a.period) < std::tie(b.start, b.end, b.period);
  }
  friend bool operator==(const Run& a, const Run& b) {
    return a.start == b.start && a.end == b.end && a.period == b.period;
  }
};

/// Intervals of exponent >= 2 that cannot be extended without changing the
/// least period.
inline std::vector<Run> runs(const std::string& w) {
  std::vector<Run> out;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j <= n; ++j) {
      const auto p = period(w.substr(i, j - i));
      if (j - i < 2 * p) continue;
      const bool left = i > 0 && period(w.substr(i - 1, j - i + 1)) == p;
      const bool right = j < n && period(w.substr(i, j - i + 1)) == p;
      if (!left && !right) out.push_back({i + 1, j, p});
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::map<std::string, std::size_t> factor_counts_upto(const std::string& w, std::size_t k) {
  std::map<std::string, std::size_t> m;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t l = 1; l <= k && i + l <= w.size(); ++l) ++m[w.substr(i, l)];
  return m;
}

inline bool kabelian(const std::string& u, const std::string& v, std::size_t k) {
  return factor_counts_upto(u, k) == factor_counts_upto(v, k);
}

inline bool is_palindrome(const std::string& s) { return std::equal(s.begin(), s.end(), s.rbegin()); }

inline std::set<std::string> factors(const std::string& w, std::size_t n) {
  std::set<std::string> s;
  for (std::size_t i = 0; i + n <= w.size(); ++i) s.insert(w.substr(i, n));
  return s;
}

/// Every word of length n over the first k lowercase letters.
inline std::vector<std::string> all_words(std::size_t k, std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (std::size_t c = 0; c < k; ++c) next.push_back(w + static_cast<char>('a' + c));
    out = std::move(next);
  }
  return out;
}

/// Brute-force pattern encounter: try every factor and every split.
inline bool encounters(const std::string& w, const std::string& pattern) {
  const std::size_t m = pattern.size();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + m; j <= w.size(); ++j) {
      const std::string f = w.substr(i, j - i);
      // choose cut positions 0 < c1 < ... < c_{m-1} < |f|
      std::vector<std::size_t> cuts(m + 1);
      auto rec = [&](auto&& self, std::size_t idx, std::size_t pos) -> bool {
        if (idx == m) {
          if (pos != f.size()) return false;
          std::map<char, std::string> img;
          for (std::size_t t = 0; t < m; ++t) {
            const auto piece = f.substr(cuts[t], cuts[t + 1] - cuts[t]);
            const char sym = pattern[t];
            if (std::islower(static_cast<unsigned char>(sym))) {
              if (piece != std::string(1, sym)) return false;
            } else {
              auto [it, ins] = img.emplace(sym, piece);
              if (!ins && it->second != piece) return false;
            }
          }
          return true;
        }
        for (std::size_t next = pos + 1; next + (m - idx - 1) <= f.size(); ++next) {
          cuts[idx] = pos;
          cuts[idx + 1] = next;
          if (self(self, idx + 1, next)) return true;
        }
        return false;
      };
      cuts[0] = 0;
      if (rec(rec, 0, 0)) return true;
    }
  return false;
}

inline std::string random_word(std::mt19937_64& rng, std::size_t k, std::size_t n) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(k) - 1);
  std::string s(n, 'a');
  for (auto& c : s) c = static_cast<char>('a' + d(rng));
  return s;
}

}  // namespace oracle
