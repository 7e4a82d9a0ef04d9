#include "wordlab/app/report.hpp"

#include <sstream>

#include "wordlab/error.hpp"

namespace wordlab::app {

json to_json(const Rational& r) { return r.to_string(); }
json to_json(const Word& w) { return w.to_string(); }

json to_json(const std::vector<Word>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(w.to_string());
  return a;
}

json to_json(const SearchOutcome& o) {
  return {{"verdict", to_string(o.verdict)},
          {"length", o.word.size()},
          {"word", o.word.to_string()},
          {"nodes", o.stats.nodes},
          {"seconds", o.stats.seconds}};
}

json to_json(const Run& r) {
  return {{"start", r.start}, {"end", r.end}, {"period", r.period}, {"exponent", r.exponent().to_string()}};
}

json to_json(const EncounterWitness& w, const Pattern& p) {
  json images = json::object();
  for (std::size_t v = 0; v < w.images.size(); ++v) images[std::string(1, p.variable_name(v))] = w.images[v].to_string();
  return {{"position", w.position}, {"length", w.length}, {"images", images}};
}

json to_json(const ComplexityProfile& p) {
  json rows = json::array();
  for (std::size_t n = 0; n < p.values.size(); ++n) {
    json r = {{"n", n}, {"value", p.values[n]}, {"valid", static_cast<bool>(p.valid[n])}};
    if (n < p.residual.size()) {
      r["residual"] = p.residual[n];
      r["residual_valid"] = static_cast<bool>(p.residual_valid[n]);
    }
    rows.push_back(r);
  }
  json j = {{"measure", p.measure}, {"horizon", p.horizon}, {"values", rows}};
  if (p.quotient_estimate) j["quotient_estimate"] = p.quotient_estimate->to_string();
  if (p.measure == "recurrence") j["recurrent_evidence"] = p.recurrent_evidence;
  return j;
}

json to_json(const GrowthCensus& c) {
  return {{"counts", c.counts}, {"trend", c.trend}, {"poly_r2", c.poly_r2}, {"exp_r2", c.exp_r2}, {"nodes", c.nodes}};
}

json to_json(const DensityOutcome& d) {
  json j = {{"verdict", to_string(d.verdict)}, {"nodes", d.nodes}};
  if (d.min_count) j["min_count"] = *d.min_count;
  if (d.witness) j["witness"] = d.witness->to_string();
  if (d.density) j["density"] = d.density->to_string();
  return j;
}

json to_json(const ThresholdProbe& t) {
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"s", r.s.to_string()}, {"letters", r.letters}, {"verdict", to_string(r.verdict)}, {"reached", r.reached}});
  json j = {{"rows", rows}};
  if (t.upper_evidence) j["upper_evidence"] = t.upper_evidence->to_string();
  if (t.lower_evidence) j["lower_evidence"] = t.lower_evidence->to_string();
  if (t.least_sustained_letters) j["least_sustained_letters"] = *t.least_sustained_letters;
  if (t.greatest_exhausted_letters) j["greatest_exhausted_letters"] = *t.greatest_exhausted_letters;
  return j;
}

json to_json(const StrongPowerCensus& c) {
  return {{"length", c.length},
          {"words", c.words},
          {"classes", c.classes},
          {"classes_with_power", c.classes_with_power},
          {"strong_powers", c.strong_powers},
          {"avoiders", c.avoiders}};
}

json to_json(const CubeOccurrences& c) {
  json by = json::object();
  for (auto [len, cnt] : c.by_block_length) by[std::to_string(len)] = cnt;
  return {{"horizon", c.horizon}, {"by_block_length", by}};
}

json to_json(const FFactorization& f) {
  return {{"factors", to_json(f.factors)}, {"indices", f.index_word()}, {"cuts", f.cuts}};
}

json to_json(const PropertyVerdict& v) {
  json j = {{"holds", v.holds}, {"mode", v.mode}, {"bound", v.bound}};
  if (v.counterexample) j["counterexample"] = v.counterexample->to_string();
  if (v.parameter) j["parameter"] = *v.parameter;
  return j;
}

json to_json(const RankOutcome& r) {
  return {{"verdict", to_string(r.verdict)}, {"lower", r.lower}, {"upper", r.upper}, {"basis", to_json(r.basis)},
          {"nodes", r.nodes}};
}

json to_json(const DisjointOutcome& d) {
  return {{"verdict", to_string(d.verdict)}, {"best", d.best}, {"factorizations", d.factorizations}, {"chosen", d.chosen}};
}

std::string Table::to_tsv() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "\t" : "") << cells[i];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

json Table::to_json() const {
  json a = json::array();
  for (const auto& r : rows) {
    json o = json::object();
    for (std::size_t i = 0; i < header.size() && i < r.size(); ++i) o[header[i]] = r[i];
    a.push_back(o);
  }
  return a;
}

Format parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "tsv") return Format::tsv;
  if (s == "text") return Format::text;
  throw ParseError("unknown format '" + std::string(s) + "' (json, tsv, text)");
}

namespace {
void text_rec(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_structured() && !it->empty()) {
        os << pad << it.key() << ":\n";
        text_rec(os, *it, indent + 1);
      } else {
        os << pad << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
      }
    }
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return !e.is_structured(); });
    if (flat) {
      os << pad << j.dump() << '\n';
      return;
    }
    for (const auto& e : j) {
      os << pad << "-\n";
      text_rec(os, e, indent + 1);
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}
}  // namespace

std::string to_text(const json& j) {
  std::ostringstream os;
  text_rec(os, j, 0);
  return os.str();
}

}  // namespace wordlab::app
