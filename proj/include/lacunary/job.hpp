#pragma once

// Batch jobs: one JSON spec in, one deterministic JSON report out.

#include <string>

#include <json.hpp>

namespace lacunary {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolationOrNotFound = 1,
  kExitInputError = 2,
  kExitBudget = 3,
};

struct Report {
  nlohmann::json body;  // {tool, version, command, spec, result | error, exit_code}
  int exit_code = kExitOk;
};

/// Runs the spec's "command" (eval, digits, gaps, forge, check,
/// counterexample, diophantine, hunt). Never throws for bad input: schema
/// and domain errors come back as an error report with kExitInputError, and
/// exhausted budgets with kExitBudget.
Report run_job(const nlohmann::json& spec);

/// Human-readable rendering of a report (the --format text output).
std::string render_text(const Report& report);

}  // namespace lacunary
