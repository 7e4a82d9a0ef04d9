#include "wordlab/app/census.hpp"

#include <charconv>

#include "wordlab/complexity.hpp"
#include "wordlab/error.hpp"
#include "wordlab/predicates.hpp"

namespace wordlab::app {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t number(const std::string& v, std::size_t line) {
  std::uint64_t out = 0;
  // accept 1e8 style values for node budgets
  if (const auto e = v.find_first_of("eE"); e != std::string::npos) {
    const double d = std::stod(v);
    if (d < 0) throw ParseError("negative value '" + v + "'", line);
    return static_cast<std::uint64_t>(d);
  }
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc{} || p != v.data() + v.size()) throw ParseError("expected a number, got '" + v + "'", line);
  return out;
}

}  // namespace

CensusConfig parse_census_config(std::string_view text) {
  CensusConfig c;
  std::size_t line = 0, start = 0;
  while (start < text.size()) {
    auto stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view raw = text.substr(start, stop - start);
    start = stop + 1;
    ++line;
    if (const auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    const std::string l = trim(raw);
    if (l.empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line);
    const std::string key = trim(std::string_view(l).substr(0, eq));
    const std::string val = trim(std::string_view(l).substr(eq + 1));
    try {
      if (key == "predicate") c.predicate = val;
      else if (key == "alphabet") c.alphabet = number(val, line);
      else if (key == "min_length") c.min_length = number(val, line);
      else if (key == "max_length") c.max_length = number(val, line);
      else if (key == "measure") {
        if (val != "count" && val != "min_density") throw ParseError("measure must be count or min_density", line);
        c.measure = val;
      } else if (key == "minority") c.minority = static_cast<unsigned>(number(val, line));
      else if (key == "max_nodes") c.max_nodes = number(val, line);
      else throw ParseError("unknown key '" + key + "'", line);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line);
    }
  }
  if (c.alphabet < 1) throw ParseError("alphabet must be at least 1");
  try {
    (void)parse_predicate(c.predicate, c.alphabet);
  } catch (const Error& e) {
    throw ParseError(std::string("predicate: ") + e.what());
  }
  if (c.measure == "min_density" && c.alphabet != 2) throw ParseError("min_density needs alphabet = 2");
  return c;
}

Table run_census(const CensusConfig& c) {
  Table t;
  const auto pred = parse_predicate(c.predicate, c.alphabet);
  if (c.measure == "count") {
    t.header = {"length", "count"};
    if (c.min_length > c.max_length) return t;
    const auto g = growth_census(pred, c.alphabet, c.max_length, c.max_nodes);
    for (std::size_t n = c.min_length; n <= c.max_length; ++n) t.rows.push_back({std::to_string(n), std::to_string(g.counts[n])});
    return t;
  }
  t.header = {"length", "verdict", "min_count", "density", "witness"};
  if (c.min_length > c.max_length) return t;
  for (std::size_t n = c.min_length; n <= c.max_length; ++n) {
    SearchBudget b;
    b.max_length = n;
    b.max_nodes = c.max_nodes;
    const auto d = min_letter_density(pred, n, b, static_cast<Letter>(c.minority));
    const std::string verdict = d.verdict == Verdict::found ? "optimal" : d.verdict == Verdict::exhausted ? "infeasible" : "budget";
    t.rows.push_back({std::to_string(n), verdict, d.min_count ? std::to_string(*d.min_count) : "",
                      d.density ? d.density->to_string() : "", d.witness ? d.witness->to_string() : ""});
  }
  return t;
}

}  // namespace wordlab::app
