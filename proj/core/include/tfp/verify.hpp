#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tfp/groebner.hpp"
#include "tfp/limits.hpp"
#include "tfp/tfp.hpp"

namespace tfp {

/// One verification case: a construction recipe plus the checks to run on it.
/// Recipes: quad, segre, hidden-chain, hierarchical, phylo, cycle3,
/// random-properties.
struct CaseSpec {
  std::string name;
  std::string recipe;
  std::map<std::string, std::string> params;
  std::vector<std::string> checks;
  ComputeLimits limits = ComputeLimits::from_env();
};

enum class Verdict { Pass, Fail, Skipped };

std::string verdict_str(Verdict v);

struct CheckResult {
  std::string check;
  Verdict verdict = Verdict::Pass;
  std::string detail;   // counterexample payload on fail, reason on skip
  double seconds = 0.0;
};

struct Report {
  std::string case_name;
  std::vector<CheckResult> checks;
  bool ok() const;
};

struct SuiteReport {
  std::vector<Report> reports;
  bool ok() const;
  std::string text() const;
  std::string jsonl() const;
};

/// Passes iff the stage-1 initial forms of Gset generate the same ideal as
/// those of the oracle basis (each side closed under a refining term order
/// first). LimitExceeded downgrades to Skipped; a failure carries a witness.
CheckResult check_pseudo_groebner(std::span<const Polynomial> Gset,
                                  const GroebnerBasis& oracle_gb,
                                  const std::vector<Rational>& stage1_weight,
                                  const ComputeLimits& limits);

/// Runs the requested checks in fixed order; errors become verdicts, the
/// suite never aborts on a fail.
Report check_case(const CaseSpec& spec);

SuiteReport run_cases(std::span<const CaseSpec> cases);

/// Reads a case file ([case] sections with key: value lines) and runs it.
SuiteReport run_suite(const std::filesystem::path& config);

std::vector<CaseSpec> parse_cases(const std::filesystem::path& config);

/// The shipped default suite: one case per acceptance criterion.
std::vector<CaseSpec> acceptance_cases();

}  // namespace tfp
