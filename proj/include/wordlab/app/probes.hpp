#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wordlab/app/report.hpp"

namespace wordlab::app {

enum class ProbeStatus { completed, budget };

struct ProbeResult {
  ProbeStatus status = ProbeStatus::completed;
  /// "pass", "fail", "evidence" or "out-of-scope".
  std::string verdict = "evidence";
  json result = json::object();
  std::string summary;
};

/// Problem keys sort numerically component by component.
struct ProbeDescriptor {
  std::string id;
  std::string kind;       // "question" or "conjecture"
  std::string statement;  // one-line paraphrase
  std::string target;     // library operation the runner drives
  json defaults = json::object();
  std::string expected;   // desk-scale outcome where known
  bool in_scope = true;
  std::function<ProbeResult(const json& params)> run;
};

const std::vector<ProbeDescriptor>& probe_registry();
const ProbeDescriptor* find_probe(std::string_view id);
std::vector<std::string> probe_ids();

struct ProbeReport {
  json report;
  std::string summary;
  /// 0 completed, 2 budget verdict.
  int exit_code = 0;
};

/// Runs a registered probe with `overrides` merged over its defaults.
/// Throws DomainError listing the known ids when `id` is unknown.
ProbeReport run_probe(std::string_view id, const json& overrides = json::object());

}  // namespace wordlab::app
