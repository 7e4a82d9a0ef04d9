#include "wordlab/equations.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "wordlab/error.hpp"
#include "wordlab/repetitions.hpp"

namespace wordlab {

bool WordEquation::balanced(std::size_t variable_count) const {
  std::vector<long> diff(variable_count, 0);
  for (const auto& s : left)
    if (s.is_variable) ++diff[s.id];
  for (const auto& s : right)
    if (s.is_variable) --diff[s.id];
  return std::all_of(diff.begin(), diff.end(), [](long d) { return d == 0; });
}

EquationSystem parse_equations(std::string_view text, std::optional<std::string> variables) {
  const bool upper_rule = std::any_of(text.begin(), text.end(), [](char c) { return std::isupper(static_cast<unsigned char>(c)); });
  auto is_var = [&](char c) {
    if (variables) return variables->find(c) != std::string::npos;
    if (upper_rule) return std::isupper(static_cast<unsigned char>(c)) != 0;
    return c >= 't' && c <= 'z';
  };
  EquationSystem sys;
  std::size_t line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find_first_of(";\n", start);
    if (stop == std::string_view::npos) stop = text.size();
    const std::string_view part = text.substr(start, stop - start);
    ++line;
    start = stop + 1;
    if (part.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const auto eq = part.find('=');
    if (eq == std::string_view::npos || part.find('=', eq + 1) != std::string_view::npos)
      throw ParseError("equation needs exactly one '='", line);
    WordEquation e;
    auto side = [&](std::string_view s, std::vector<EquationSymbol>& out) {
      for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (!std::isalpha(static_cast<unsigned char>(c))) throw ParseError(std::string("bad symbol '") + c + "'", line);
        if (is_var(c)) {
          auto pos = sys.variable_names.find(c);
          if (pos == std::string::npos) {
            pos = sys.variable_names.size();
            sys.variable_names.push_back(c);
          }
          out.push_back({true, static_cast<std::uint8_t>(pos)});
        } else {
          const char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
          out.push_back({false, static_cast<std::uint8_t>(lc - 'a')});
        }
      }
    };
    side(part.substr(0, eq), e.left);
    side(part.substr(eq + 1), e.right);
    sys.equations.push_back(std::move(e));
  }
  if (sys.variable_names.empty()) throw ParseError("equation system has no variables");
  return sys;
}

Word evaluate_side(const std::vector<EquationSymbol>& side, const std::vector<Word>& values, const Alphabet& alphabet) {
  std::vector<Letter> out;
  for (const auto& s : side) {
    if (s.is_variable) {
      const auto& v = values.at(s.id);
      out.insert(out.end(), v.begin(), v.end());
    } else {
      out.push_back(s.id);
    }
  }
  return Word(alphabet, std::move(out));
}

bool satisfies(const EquationSystem& system, const std::vector<Word>& values, const Alphabet& alphabet) {
  for (const auto& e : system.equations)
    if (evaluate_side(e.left, values, alphabet) != evaluate_side(e.right, values, alphabet)) return false;
  return true;
}

Word primitive_root(const Word& w) {
  if (w.empty()) throw DomainError("primitive root of the empty word");
  const std::size_t p = least_period(w);
  return w.size() % p == 0 ? w.substr(0, p) : w;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<EquationSolution> solve_word_equation(const EquationSystem& system, const SolveOptions& options) {
  const std::size_t V = system.variable_count();
  std::size_t k = std::max<std::size_t>(options.alphabet_size, 1);
  for (const auto& e : system.equations)
    for (const auto* side : {&e.left, &e.right})
      for (const auto& s : *side)
        if (!s.is_variable) k = std::max<std::size_t>(k, s.id + 1u);
  const Alphabet alphabet = Alphabet::latin(k);
  const std::size_t lo = options.allow_empty ? 0 : 1;
  if (options.max_len < lo) return {};

  std::vector<std::vector<std::size_t>> profiles;
  {
    std::vector<std::size_t> p(V, lo);
    while (true) {
      profiles.push_back(p);
      std::size_t i = V;
      while (i > 0 && p[i - 1] == options.max_len) p[--i] = lo;
      if (i == 0) break;
      ++p[i - 1];
    }
  }
  std::stable_sort(profiles.begin(), profiles.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), std::size_t{0}) < std::accumulate(b.begin(), b.end(), std::size_t{0});
  });

  std::vector<EquationSolution> out;
  for (const auto& prof : profiles) {
    bool lengths_ok = true;
    for (const auto& e : system.equations) {
      std::size_t l = 0, r = 0;
      for (const auto& s : e.left) l += s.is_variable ? prof[s.id] : 1;
      for (const auto& s : e.right) r += s.is_variable ? prof[s.id] : 1;
      lengths_ok = lengths_ok && l == r;
    }
    if (!lengths_ok) continue;
    std::vector<std::size_t> base(V + 1, 0);
    for (std::size_t v = 0; v < V; ++v) base[v + 1] = base[v] + prof[v];
    const std::size_t cells = base[V];
    UnionFind uf(cells + k);  // node cells + c is the constant c
    for (const auto& e : system.equations) {
      auto atoms = [&](const std::vector<EquationSymbol>& side) {
        std::vector<std::size_t> a;
        for (const auto& s : side) {
          if (s.is_variable)
            for (std::size_t i = 0; i < prof[s.id]; ++i) a.push_back(base[s.id] + i);
          else
            a.push_back(cells + s.id);
        }
        return a;
      };
      const auto L = atoms(e.left), R = atoms(e.right);
      for (std::size_t i = 0; i < L.size(); ++i) uf.unite(L[i], R[i]);
    }
    std::map<std::size_t, Letter> fixed;
    bool conflict = false;
    for (std::size_t c = 0; c < k && !conflict; ++c) {
      const auto root = uf.find(cells + c);
      auto [it, inserted] = fixed.emplace(root, static_cast<Letter>(c));
      if (!inserted) conflict = true;
    }
    if (conflict) continue;
    std::vector<std::size_t> free_roots;
    std::map<std::size_t, std::size_t> free_index;
    for (std::size_t c = 0; c < cells; ++c) {
      const auto r = uf.find(c);
      if (!fixed.count(r) && !free_index.count(r)) {
        free_index.emplace(r, free_roots.size());
        free_roots.push_back(r);
      }
    }
    std::vector<Letter> choice(free_roots.size(), 0);
    while (true) {
      EquationSolution sol;
      for (std::size_t v = 0; v < V; ++v) {
        std::vector<Letter> val;
        for (std::size_t c = base[v]; c < base[v + 1]; ++c) {
          const auto r = uf.find(c);
          auto f = fixed.find(r);
          val.push_back(f != fixed.end() ? f->second : choice[free_index.at(r)]);
        }
        sol.values.emplace_back(alphabet, std::move(val));
      }
      std::optional<Word> root;
      for (const Word& w : sol.values) {
        if (w.empty()) continue;
        Word r = primitive_root(w);
        if (!root) root = r;
        else if (*root != r) sol.non_periodic = true;
      }
      if (out.size() >= options.max_solutions) throw BudgetError("too many equation solutions");
      out.push_back(std::move(sol));
      std::size_t i = choice.size();
      while (i > 0 && choice[i - 1] + 1u == k) choice[--i] = 0;
      if (i == 0) break;
      ++choice[i - 1];
    }
  }
  return out;
}

bool is_independent(const EquationSystem& system, const SolveOptions& options) {
  auto key = [](const std::vector<EquationSolution>& sols) {
    std::set<std::vector<Word>> s;
    for (const auto& x : sols) s.insert(x.values);
    return s;
  };
  const auto full = key(solve_word_equation(system, options));
  for (std::size_t i = 0; i < system.equations.size(); ++i) {
    EquationSystem sub = system;
    sub.equations.erase(sub.equations.begin() + static_cast<std::ptrdiff_t>(i));
    if (key(solve_word_equation(sub, options)) == full) return false;
  }
  return true;
}

PcpOutcome bounded_pcp(const Morphism& h, const Morphism& g, std::size_t max_len, std::uint64_t max_nodes) {
  if (max_len < 1) throw DomainError("PCP search needs max_len >= 1");
  if (!h.is_non_erasing() || !g.is_non_erasing()) throw DomainError("PCP instances must be non-erasing");
  if (h.domain().size() != g.domain().size()) throw DomainError("PCP morphisms need a common domain");
  const std::size_t k = h.domain().size();
  // Remainder: the longer side's unmatched suffix; side 0 = h ahead, 1 = g ahead.
  using State = std::pair<int, std::vector<Letter>>;
  struct Node {
    State state;
    std::vector<Letter> x;
  };
  PcpOutcome out;
  std::set<State> seen{{0, {}}};
  std::vector<Node> level{{{0, {}}, {}}};
  for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
    std::vector<Node> next;
    for (const Node& node : level)
      for (std::size_t a = 0; a < k; ++a) {
        if (++out.nodes > max_nodes) {
          out.verdict = Verdict::budget;
          return out;
        }
        std::vector<Letter> A, B;
        if (node.state.first == 0) A = node.state.second;
        else B = node.state.second;
        const Word& ha = h.image(static_cast<Letter>(a));
        const Word& ga = g.image(static_cast<Letter>(a));
        A.insert(A.end(), ha.begin(), ha.end());
        B.insert(B.end(), ga.begin(), ga.end());
        const bool a_short = A.size() <= B.size();
        const auto& s = a_short ? A : B;
        const auto& l = a_short ? B : A;
        if (!std::equal(s.begin(), s.end(), l.begin())) continue;
        std::vector<Letter> x = node.x;
        x.push_back(static_cast<Letter>(a));
        if (s.size() == l.size()) {
          out.verdict = Verdict::found;
          out.solution = Word(h.domain(), std::move(x));
          return out;
        }
        State st{a_short ? 1 : 0, std::vector<Letter>(l.begin() + static_cast<std::ptrdiff_t>(s.size()), l.end())};
        if (!seen.insert(st).second) continue;
        next.push_back({std::move(st), std::move(x)});
      }
    level = std::move(next);
  }
  out.verdict = Verdict::exhausted;
  return out;
}

PcpProperties instance_properties(const Morphism& h, const Morphism& g, std::size_t bound) {
  if (h.domain().size() != g.domain().size()) throw DomainError("PCP morphisms need a common domain");
  PcpProperties rep;
  rep.h_marked = h.is_marked();
  rep.g_marked = g.is_marked();
  rep.bound = bound;
  const std::size_t k = h.domain().size();
  auto comparable = [](const Word& u, const Word& v) { return u.is_prefix_of(v) || v.is_prefix_of(u); };
  for (std::size_t len = 0; len <= bound; ++len) {
    std::vector<Letter> u(len, 0);
    while (true) {
      const Word uw(h.domain(), u);
      const Word hu = apply_morphism(h, uw), gu = apply_morphism(g, uw);
      if (hu != gu) {
        std::vector<Letter> ok;
        for (std::size_t a = 0; a < k; ++a) {
          const Word ua = uw.appended(static_cast<Letter>(a));
          if (comparable(apply_morphism(h, ua), apply_morphism(g, ua))) ok.push_back(static_cast<Letter>(a));
        }
        if (ok.size() >= 2) {
          rep.unique_equality_continuation = false;
          rep.counterexample_u = uw;
          rep.counterexample_letters = std::make_pair(ok[0], ok[1]);
          return rep;
        }
      }
      std::size_t i = len;
      while (i > 0 && u[i - 1] + 1u == k) u[--i] = 0;
      if (i == 0) break;
      ++u[i - 1];
    }
  }
  return rep;
}

}  // namespace wordlab
