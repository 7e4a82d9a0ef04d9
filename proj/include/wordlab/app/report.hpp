#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "wordlab/abelian.hpp"
#include "wordlab/complexity.hpp"
#include "wordlab/factorizations.hpp"
#include "wordlab/patterns.hpp"
#include "wordlab/repetitions.hpp"
#include "wordlab/search.hpp"

namespace wordlab::app {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const Word& w);
json to_json(const std::vector<Word>& ws);
json to_json(const SearchOutcome& o);
json to_json(const Run& r);
json to_json(const EncounterWitness& w, const Pattern& p);
json to_json(const ComplexityProfile& p);
json to_json(const GrowthCensus& c);
json to_json(const DensityOutcome& d);
json to_json(const ThresholdProbe& t);
json to_json(const StrongPowerCensus& c);
json to_json(const CubeOccurrences& c);
json to_json(const FFactorization& f);
json to_json(const PropertyVerdict& v);
json to_json(const RankOutcome& r);
json to_json(const DisjointOutcome& d);

/// Flat rows for TSV output: one header line, then one line per row.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string to_tsv() const;
  json to_json() const;
};

enum class Format { json, tsv, text };
Format parse_format(std::string_view s);

/// Renders a JSON value as indented "key: value" text.
std::string to_text(const json& j);

}  // namespace wordlab::app
