#include "wordlab/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <json.hpp>

#include "wordlab/error.hpp"

namespace wordlab {

Dfa::Dfa(std::size_t alphabet_size, std::size_t states, State initial, std::vector<bool> accepting,
         std::vector<State> delta)
    : k_(alphabet_size), initial_(initial), accepting_(std::move(accepting)), delta_(std::move(delta)) {
  if (k_ < 1) throw DomainError("automaton alphabet must be nonempty");
  if (states < 1) throw DomainError("automaton needs at least one state");
  if (accepting_.size() != states) throw DomainError("accepting flags do not match the state count");
  if (delta_.size() != states * k_) throw DomainError("transition table has the wrong size");
  if (initial_ < 0 || static_cast<std::size_t>(initial_) >= states) throw DomainError("initial state out of range");
  bool partial = false;
  for (State& t : delta_) {
    if (t >= static_cast<State>(states)) throw DomainError("transition target out of range");
    if (t < 0) {
      partial = true;
      t = static_cast<State>(states);
    }
  }
  if (partial) {
    accepting_.push_back(false);
    delta_.insert(delta_.end(), k_, static_cast<State>(states));
  }
}

Dfa Dfa::finite(std::size_t alphabet_size, const std::vector<std::vector<Letter>>& words) {
  std::vector<State> delta(alphabet_size, -1);
  std::vector<bool> accepting(1, false);
  for (const auto& w : words) {
    State q = 0;
    for (Letter a : w) {
      if (a >= alphabet_size) throw DomainMismatchError("word letter outside automaton alphabet");
      State& t = delta[static_cast<std::size_t>(q) * alphabet_size + a];
      if (t < 0) {
        t = static_cast<State>(accepting.size());
        accepting.push_back(false);
        delta.insert(delta.end(), alphabet_size, -1);
      }
      q = delta[static_cast<std::size_t>(q) * alphabet_size + a];
    }
    accepting[q] = true;
  }
  const std::size_t n = accepting.size();
  return Dfa(alphabet_size, n, 0, std::move(accepting), std::move(delta));
}

Dfa Dfa::universal(std::size_t alphabet_size) {
  return Dfa(alphabet_size, 1, 0, {true}, std::vector<State>(alphabet_size, 0));
}

Dfa Dfa::empty(std::size_t alphabet_size) {
  return Dfa(alphabet_size, 1, 0, {false}, std::vector<State>(alphabet_size, 0));
}

Dfa Dfa::star_of(std::size_t alphabet_size, const std::vector<Letter>& w) {
  if (w.empty()) return finite(alphabet_size, {{}});
  const std::size_t n = w.size();
  std::vector<State> delta(n * alphabet_size, -1);
  std::vector<bool> accepting(n, false);
  accepting[0] = true;
  for (std::size_t i = 0; i < n; ++i) delta[i * alphabet_size + w[i]] = static_cast<State>((i + 1) % n);
  return Dfa(alphabet_size, n, 0, std::move(accepting), std::move(delta));
}

Dfa Dfa::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("automaton JSON: ") + e.what());
  }
  try {
    std::string glyphs;
    std::size_t k = 0;
    if (j.at("alphabet").is_string()) {
      glyphs = j.at("alphabet").get<std::string>();
      k = glyphs.size();
    } else {
      k = j.at("alphabet").get<std::size_t>();
    }
    const auto states = j.at("states").get<std::size_t>();
    const auto initial = j.value("initial", 0);
    std::vector<bool> accepting(states, false);
    for (const auto& q : j.at("accepting")) accepting.at(q.get<std::size_t>()) = true;
    std::vector<State> delta(states * k, -1);
    for (const auto& t : j.at("transitions")) {
      const auto from = t.at(0).get<std::size_t>();
      std::size_t a = 0;
      if (t.at(1).is_string()) {
        const auto s = t.at(1).get<std::string>();
        const auto pos = s.size() == 1 ? glyphs.find(s[0]) : std::string::npos;
        if (pos == std::string::npos) throw ParseError("unknown transition letter '" + s + "'");
        a = pos;
      } else {
        a = t.at(1).get<std::size_t>();
      }
      if (from >= states || a >= k) throw ParseError("transition out of range");
      delta[from * k + a] = t.at(2).get<State>();
    }
    return Dfa(k, states, initial, std::move(accepting), std::move(delta));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("automaton JSON: ") + e.what());
  } catch (const std::out_of_range&) {
    throw ParseError("automaton JSON: accepting state out of range");
  }
}

Dfa::State Dfa::run(State from, std::span<const Letter> w) const {
  State q = from;
  for (Letter a : w) {
    if (a >= k_) throw DomainMismatchError("letter outside automaton alphabet");
    q = step(q, a);
  }
  return q;
}

Dfa::State Dfa::run(std::span<const Letter> w) const { return run(initial_, w); }

std::optional<std::vector<Letter>> Dfa::non_member() const {
  std::vector<State> parent(state_count(), -2);
  std::vector<Letter> via(state_count(), 0);
  std::deque<State> queue{initial_};
  parent[initial_] = -1;
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    if (!accepting_[q]) {
      std::vector<Letter> w;
      for (State v = q; parent[v] != -1; v = parent[v]) w.push_back(via[v]);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t a = 0; a < k_; ++a) {
      const State t = step(q, static_cast<Letter>(a));
      if (parent[t] != -2) continue;
      parent[t] = q;
      via[t] = static_cast<Letter>(a);
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

std::int32_t Nfa::add_state(bool accept) {
  next.emplace_back(alphabet_size);
  eps.emplace_back();
  accepting.push_back(accept);
  return static_cast<std::int32_t>(accepting.size() - 1);
}

std::optional<std::vector<Letter>> Nfa::universality_counterexample(std::size_t max_subsets) const {
  using Subset = std::vector<std::int32_t>;
  auto closure = [&](Subset s) {
    std::vector<char> in(accepting.size(), 0);
    for (auto q : s) in[q] = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (auto t : eps[s[i]])
        if (!in[t]) {
          in[t] = 1;
          s.push_back(t);
        }
    std::sort(s.begin(), s.end());
    return s;
  };
  auto accepts = [&](const Subset& s) {
    return std::any_of(s.begin(), s.end(), [&](std::int32_t q) { return accepting[q]; });
  };
  std::map<Subset, std::size_t> seen;
  std::vector<std::pair<std::size_t, Letter>> parent;
  std::vector<Subset> subsets;
  std::deque<std::size_t> queue;
  subsets.push_back(closure({initial}));
  parent.push_back({0, 0});
  seen.emplace(subsets[0], 0);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    if (!accepts(subsets[i])) {
      std::vector<Letter> w;
      for (std::size_t v = i; v != 0; v = parent[v].first) w.push_back(parent[v].second);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t a = 0; a < alphabet_size; ++a) {
      Subset t;
      for (auto q : subsets[i])
        for (auto r : next[q][a]) t.push_back(r);
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      t = closure(std::move(t));
      if (seen.count(t)) continue;
      if (subsets.size() >= max_subsets) throw BudgetError("subset construction exceeded its state budget");
      seen.emplace(t, subsets.size());
      parent.push_back({i, static_cast<Letter>(a)});
      subsets.push_back(std::move(t));
      queue.push_back(subsets.size() - 1);
    }
  }
  return std::nullopt;
}

}  // namespace wordlab
