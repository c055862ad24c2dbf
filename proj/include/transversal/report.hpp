#pragma once

#include <string>

#include <json.hpp>

#include "transversal/analysis.hpp"
#include "transversal/code.hpp"

namespace transversal {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  int group_cap = 22;    // enumeration engines: n-k cap
  int oracle_cap = 22;   // exact sparse oracle: n-k cap
  int float_cap = 15;    // dense float oracle: total qubit cap
  int q_sweep_cap = 15;  // odd-denominator confirmation sweep
  bool run_oracle = true;
};

/*
 * Result of one CLI command: a machine-readable document (stable field
 * names, deterministic order), a human rendering, and the exit code.
 * Exit codes: 0 accepted/success, 1 analysis-negative, 2 usage/parse
 * error, 3 internal disagreement between engines or engine and oracle.
 */
struct Report {
  Json json;
  std::string text;
  int exit_code = 0;
};

Report analyze_report(const StabilizerCode& code, const ReportOptions& opts = {});
Report check_report(const StabilizerCode& code, const AngleVector& angles,
                    const ReportOptions& opts = {});
Report two_qubit_report(const StabilizerCode& code, const DiagonalGate2Q& gate,
                        const ReportOptions& opts = {});
Report convert_report(const StabilizerCode& source, const StabilizerCode& target,
                      const DiagonalGate1Q& gate, const ReportOptions& opts = {});

Json witness_to_json(const ConstraintWitness& w);

}  // namespace transversal
