#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "wordlab/app/report.hpp"

namespace wordlab::app {

/// `key = value` lines; '#' starts a comment. Keys: predicate, alphabet,
/// min_length, max_length, measure (count | min_density), minority, max_nodes.
struct CensusConfig {
  std::string predicate = "square-free";
  std::size_t alphabet = 2;
  std::size_t min_length = 0;
  std::size_t max_length = 10;
  std::string measure = "count";
  unsigned minority = 1;
  std::uint64_t max_nodes = 2'000'000'000;
};

/// Throws ParseError carrying the offending line number.
CensusConfig parse_census_config(std::string_view text);

/// Rows for lengths min_length..max_length; empty when the range is empty.
Table run_census(const CensusConfig& config);

}  // namespace wordlab::app
