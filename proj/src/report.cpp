#include "transversal/report.hpp"

#include <sstream>

#include "transversal/angles.hpp"
#include "transversal/oracle.hpp"

namespace transversal {

namespace {

Json angles_to_json(const std::vector<RationalAngle>& as) {
  Json arr = Json::array();
  for (const RationalAngle& a : as) arr.push_back(a.str());
  return arr;
}

std::string angles_to_text(const std::vector<RationalAngle>& as) {
  std::string s = "(";
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (i) s += ", ";
    s += as[i].str();
  }
  return s + ")";
}

Json code_to_json(const StabilizerCode& code) {
  return Json{{"name", code.name.empty() ? Json(nullptr) : Json(code.name)},
              {"n", code.n},
              {"k", code.k},
              {"css", css_view(code).has_value()}};
}

struct OracleComparison {
  bool ran = false;
  std::string skipped_reason;
  bool agrees = true;
  Json json;
};

// Exact-oracle evaluation of a mixed-angle gate, compared against an
// engine verdict. Engine sector phases are seed-0 values, so phases are
// only compared when the oracle seed is 0 (always, for the built-in
// codes); the preserved/rejected bit is compared unconditionally.
OracleComparison run_exact_oracle(const StabilizerCode& code, const AngleVector& angles,
                                  const Verdict& engine, const ReportOptions& opts) {
  OracleComparison cmp;
  if (!opts.run_oracle) {
    cmp.skipped_reason = "disabled";
    return cmp;
  }
  if (static_cast<int>(code.n - code.k) > opts.oracle_cap || code.n > 64) {
    cmp.skipped_reason = "cap";
    return cmp;
  }
  LogicalBasis basis = build_logical_basis(code, opts.oracle_cap);
  LogicalAction action = extract_logical_action(basis, apply_diagonal(basis, angles));
  cmp.ran = true;
  cmp.agrees = action.preserved == engine.preserves_codespace;
  if (cmp.agrees && action.preserved && basis.seed == 0)
    cmp.agrees = action.phases == engine.logical_diagonal;
  cmp.json = Json{{"ran", true},
                  {"preserved", action.preserved},
                  {"phases", action.preserved ? angles_to_json(action.phases) : Json(nullptr)},
                  {"agrees_with_engine", cmp.agrees}};
  return cmp;
}

OracleComparison run_float_oracle(const StabilizerCode& code, const AngleVector& angles,
                                  const Verdict& engine, const ReportOptions& opts) {
  OracleComparison cmp;
  if (!opts.run_oracle) {
    cmp.skipped_reason = "disabled";
    return cmp;
  }
  if (static_cast<int>(code.n) > opts.float_cap) {
    cmp.skipped_reason = "cap";
    return cmp;
  }
  LogicalAction action = float_statevector_check(code, angles, opts.float_cap);
  cmp.ran = true;
  cmp.agrees = action.preserved == engine.preserves_codespace &&
               (!action.preserved || action.phases == engine.logical_diagonal);
  cmp.json = Json{{"ran", true},
                  {"preserved", action.preserved},
                  {"phases", action.preserved ? angles_to_json(action.phases) : Json(nullptr)},
                  {"agrees_with_engine", cmp.agrees}};
  return cmp;
}

Json skipped_json(const std::string& reason) {
  return Json{{"ran", false}, {"skipped", reason}};
}

}  // namespace

Json witness_to_json(const ConstraintWitness& w) {
  Json subset = Json::array();
  for (std::size_t i : w.generator_subset) subset.push_back(i);
  return Json{{"generator_subset", subset},
              {"logical_sector", w.logical_sector ? Json(*w.logical_sector) : Json(nullptr)},
              {"observed_value", w.observed_value.get_str()},
              {"required_modulus", w.required_modulus.get_str()},
              {"condition", w.condition}};
}

Report check_report(const StabilizerCode& code, const AngleVector& angles,
                    const ReportOptions& opts) {
  EngineOptions eopts;
  eopts.group_cap = opts.group_cap;

  Verdict verdict = check_mixed(code, angles, eopts);
  OracleComparison exact = run_exact_oracle(code, angles, verdict, opts);
  OracleComparison flt = run_float_oracle(code, angles, verdict, opts);
  bool agreement = exact.agrees && flt.agrees;

  Report r;
  r.json = Json{{"command", "check"},
                {"code", code_to_json(code)},
                {"angles", angles_to_json(angles)},
                {"dropped_identity_qubits", verdict.identity_qubits},
                {"preserves_codespace", verdict.preserves_codespace},
                {"logical_action",
                 verdict.preserves_codespace ? angles_to_json(verdict.logical_diagonal) : Json(nullptr)},
                {"nontrivial", verdict.nontrivial},
                {"witness", verdict.witness ? witness_to_json(*verdict.witness) : Json(nullptr)},
                {"oracle",
                 Json{{"exact", exact.ran ? exact.json : skipped_json(exact.skipped_reason)},
                      {"float", flt.ran ? flt.json : skipped_json(flt.skipped_reason)}}},
                {"engine_agreement", agreement}};

  std::ostringstream t;
  t << "code: " << (code.name.empty() ? "(unnamed)" : code.name) << "  [[" << code.n << ","
    << code.k << "]]\n";
  t << "angles: " << angles_to_text(angles) << "\n";
  if (!verdict.identity_qubits.empty()) {
    t << "identity-angle qubits dropped from the conditions:";
    for (std::size_t q : verdict.identity_qubits) t << " " << q;
    t << "\n";
  }
  if (verdict.preserves_codespace) {
    t << "verdict: preserves the codespace\n";
    t << "logical action (per sector): " << angles_to_text(verdict.logical_diagonal)
      << (verdict.nontrivial ? "  [nontrivial]" : "  [trivial]") << "\n";
  } else {
    t << "verdict: rejected\n";
    t << "witness: " << verdict.witness->condition << " (observed "
      << verdict.witness->observed_value.get_str() << " mod "
      << verdict.witness->required_modulus.get_str() << ")\n";
  }
  if (!exact.ran) t << "exact oracle: skipped (" << exact.skipped_reason << ")\n";
  if (!flt.ran) t << "float oracle: skipped (" << flt.skipped_reason << ")\n";
  if (!agreement) t << "ENGINE/ORACLE DISAGREEMENT - this is a bug\n";
  r.text = t.str();

  r.exit_code = !agreement ? 3 : (verdict.preserves_codespace ? 0 : 1);
  return r;
}

Report analyze_report(const StabilizerCode& code, const ReportOptions& opts) {
  EngineOptions eopts;
  eopts.group_cap = opts.group_cap;

  OverlapReport overlap = classify(code, opts.q_sweep_cap, eopts);

  // Oracle confirmation at the boundary: Z(1/2^k_max) must preserve,
  // Z(1/2^{k_max+1}) must not.
  bool agreement = true;
  Json oracle_json;
  RationalAngle theta_next =
      RationalAngle::normalized(1, Int(1) << (overlap.k_max + 1));
  {
    Verdict at_k;
    at_k.preserves_codespace = true;
    at_k.logical_diagonal = overlap.logical_action;
    OracleComparison exact_at_k =
        run_exact_oracle(code, uniform_angles(code.n, overlap.theta_at_k_max), at_k, opts);
    Verdict at_next;
    at_next.preserves_codespace = false;
    OracleComparison exact_next =
        run_exact_oracle(code, uniform_angles(code.n, theta_next), at_next, opts);
    OracleComparison float_at_k =
        run_float_oracle(code, uniform_angles(code.n, overlap.theta_at_k_max), at_k, opts);
    agreement = exact_at_k.agrees && exact_next.agrees && float_at_k.agrees;
    oracle_json =
        Json{{"exact_at_k_max", exact_at_k.ran ? exact_at_k.json : skipped_json(exact_at_k.skipped_reason)},
             {"exact_at_k_max_plus_1",
              exact_next.ran ? exact_next.json : skipped_json(exact_next.skipped_reason)},
             {"float_at_k_max",
              float_at_k.ran ? float_at_k.json : skipped_json(float_at_k.skipped_reason)}};
  }

  HierarchyLevel level = hierarchy_level_1q(DiagonalGate1Q(overlap.theta_at_k_max));

  Json two_qubit;
  if (overlap.k_max >= 1) {
    TwoQubitReport family = two_qubit_family(overlap);
    two_qubit = Json{{"k", family.k},
                     {"theta01_step", family.theta01_step.str()},
                     {"theta10_step", family.theta10_step.str()},
                     {"theta11_prime_step", family.theta11_prime_step.str()}};
  } else {
    two_qubit = Json(nullptr);
  }

  Json irrational;
  EngineOptions iopts = eopts;
  if (static_cast<int>(code.n - code.k) <= iopts.irrational_cap && code.n <= 64) {
    IrrationalReport ir = irrational_admissibility(code, iopts);
    irrational = Json{{"logical_phase_forced_zero", ir.logical_phase_forced_zero},
                      {"nullspace_dimension", ir.nullspace_dimension}};
  } else {
    irrational = skipped_json("cap");
  }

  Json odd = Json::array();
  for (const OddSweepEntry& e : overlap.odd_witnesses)
    odd.push_back(Json{{"q", e.q.get_str()}, {"p", e.p.get_str()}, {"witness", witness_to_json(e.witness)}});

  Report r;
  r.json = Json{
      {"command", "analyze"},
      {"code", code_to_json(code)},
      {"classification",
       Json{{"k_max", overlap.k_max},
            {"admissible_angles", "c/2^" + std::to_string(overlap.k_max)},
            {"theta_at_k_max", overlap.theta_at_k_max.str()},
            {"logical_action", angles_to_json(overlap.logical_action)},
            {"nontrivial", overlap.nontrivial},
            {"violation_at_k_max_plus_1", witness_to_json(overlap.violation_at_next)},
            {"odd_denominator_sweep", Json{{"cap", overlap.q_sweep_cap},
                                           {"all_rejected", overlap.odd_all_rejected},
                                           {"witnesses", odd}}},
            {"engines", Json{{"wedge", overlap.wedge_used}, {"group", overlap.group_used}}}}},
      {"hierarchy", Json{{"gate_theta", overlap.theta_at_k_max.str()},
                         {"level", level.in_hierarchy() ? Json(*level.level) : Json(nullptr)}}},
      {"two_qubit_family", two_qubit},
      {"irrational_exclusion", irrational},
      {"oracle", oracle_json},
      {"engine_agreement", agreement}};

  std::ostringstream t;
  t << "code: " << (code.name.empty() ? "(unnamed)" : code.name) << "  [[" << code.n << ","
    << code.k << "]]" << (css_view(code) ? "  CSS" : "  non-CSS") << "\n";
  t << "k_max: " << overlap.k_max << "  (admissible strongly transversal rotations: Z(c/2^"
    << overlap.k_max << "))\n";
  t << "logical action at Z(" << overlap.theta_at_k_max.str()
    << "): " << angles_to_text(overlap.logical_action)
    << (overlap.nontrivial ? "  [nontrivial]" : "  [trivial]") << "\n";
  t << "hierarchy level of Z(" << overlap.theta_at_k_max.str() << "): ";
  if (level.in_hierarchy())
    t << *level.level << "\n";
  else
    t << "not in the hierarchy\n";
  t << "rejection at Z(" << theta_next.str() << "): " << overlap.violation_at_next.condition
    << "\n";
  t << "odd denominators q <= " << overlap.q_sweep_cap << ": "
    << (overlap.odd_all_rejected ? "all rejected with witnesses" : "NOT all rejected (bug?)")
    << "\n";
  if (overlap.k_max >= 1)
    t << "two-qubit family: theta01, theta10 in (1/2^" << overlap.k_max
      << ")Z, theta11' in (1/2^" << (overlap.k_max - 1) << ")Z\n";
  if (irrational.contains("logical_phase_forced_zero"))
    t << "irrational exclusion: logical phase forced to zero: "
      << (irrational["logical_phase_forced_zero"].get<bool>() ? "yes" : "no") << "\n";
  if (oracle_json["exact_at_k_max"].contains("skipped"))
    t << "oracle: skipped ("
      << oracle_json["exact_at_k_max"]["skipped"].get<std::string>() << ")\n";
  if (!agreement) t << "ENGINE/ORACLE DISAGREEMENT - this is a bug\n";
  r.text = t.str();

  r.exit_code = agreement ? 0 : 3;
  return r;
}

Report two_qubit_report(const StabilizerCode& code, const DiagonalGate2Q& gate,
                        const ReportOptions& opts) {
  EngineOptions eopts;
  eopts.group_cap = opts.group_cap;

  TwoQubitVerdict verdict = check_two_qubit(code, gate, eopts);
  OverlapReport overlap = classify(code, 3, eopts);
  bool in_family = overlap.k_max >= 1 && gate_in_two_qubit_family(gate, overlap.k_max);

  bool agreement = true;
  Json oracle_json;
  if (!opts.run_oracle) {
    oracle_json = Json{{"exact", skipped_json("disabled")}, {"float", skipped_json("disabled")}};
  } else {
    Json exact_json, float_json;
    if (static_cast<int>(code.n - code.k) <= opts.oracle_cap && code.n <= 64) {
      LogicalBasis basis = build_logical_basis(code, opts.oracle_cap);
      TwoBlockAction action = two_block_logical_action(basis, basis, gate.normalized());
      bool ok = action.preserved == verdict.preserves_codespace &&
                (!action.preserved || basis.seed != 0 ||
                 action.phases == verdict.logical_diagonal);
      agreement = agreement && ok;
      exact_json = Json{{"ran", true},
                        {"preserved", action.preserved},
                        {"phases", action.preserved ? angles_to_json(action.phases) : Json(nullptr)},
                        {"agrees_with_engine", ok}};
    } else {
      exact_json = skipped_json("cap");
    }
    if (static_cast<int>(2 * code.n) <= opts.float_cap) {
      TwoBlockAction action = float_statevector_check_2q(code, gate.normalized(), opts.float_cap);
      bool ok = action.preserved == verdict.preserves_codespace &&
                (!action.preserved || action.phases == verdict.logical_diagonal);
      agreement = agreement && ok;
      float_json = Json{{"ran", true},
                        {"preserved", action.preserved},
                        {"agrees_with_engine", ok}};
    } else {
      float_json = skipped_json("cap");
    }
    oracle_json = Json{{"exact", exact_json}, {"float", float_json}};
  }

  // Hierarchy level of the induced logical gate (k = 1 blocks give a
  // genuine two-qubit diagonal logical gate).
  Json logical_level = Json(nullptr);
  if (code.k == 1 && verdict.preserves_codespace) {
    DiagonalGate2Q logical;
    logical.theta00 = verdict.logical_diagonal[0];
    logical.theta01 = verdict.logical_diagonal[1];
    logical.theta10 = verdict.logical_diagonal[2];
    logical.theta11 = verdict.logical_diagonal[3];
    HierarchyLevel lvl = hierarchy_level_2q_diagonal(logical);
    logical_level = lvl.in_hierarchy() ? Json(*lvl.level) : Json(nullptr);
  }

  Report r;
  r.json = Json{{"command", "two-qubit"},
                {"code", code_to_json(code)},
                {"gate", Json{{"theta00", gate.theta00.str()},
                              {"theta01", gate.theta01.str()},
                              {"theta10", gate.theta10.str()},
                              {"theta11", gate.theta11.str()}}},
                {"preserves_codespace", verdict.preserves_codespace},
                {"logical_action", verdict.preserves_codespace
                                       ? angles_to_json(verdict.logical_diagonal)
                                       : Json(nullptr)},
                {"nontrivial", verdict.nontrivial},
                {"in_theorem_family", in_family},
                {"single_block_k_max", overlap.k_max},
                {"logical_hierarchy_level", logical_level},
                {"witness", verdict.witness ? witness_to_json(*verdict.witness) : Json(nullptr)},
                {"oracle", oracle_json},
                {"engine_agreement", agreement}};

  std::ostringstream t;
  t << "code: " << (code.name.empty() ? "(unnamed)" : code.name) << " x 2 blocks\n";
  t << "gate: diag phases (" << gate.theta00.str() << ", " << gate.theta01.str() << ", "
    << gate.theta10.str() << ", " << gate.theta11.str() << ")\n";
  if (verdict.preserves_codespace) {
    t << "verdict: preserves the two-block codespace\n";
    t << "logical action: " << angles_to_text(verdict.logical_diagonal) << "\n";
    if (!logical_level.is_null())
      t << "hierarchy level of the logical gate: " << logical_level.get<int>() << "\n";
  } else {
    t << "verdict: rejected\n";
    t << "witness: " << verdict.witness->condition << "\n";
  }
  t << "within the admissible family for k = " << overlap.k_max << ": "
    << (in_family ? "yes" : "no") << "\n";
  if (!agreement) t << "ENGINE/ORACLE DISAGREEMENT - this is a bug\n";
  r.text = t.str();

  r.exit_code = !agreement ? 3 : (verdict.preserves_codespace ? 0 : 1);
  return r;
}

Report convert_report(const StabilizerCode& source, const StabilizerCode& target,
                      const DiagonalGate1Q& gate, const ReportOptions& opts) {
  EngineOptions eopts;
  eopts.group_cap = opts.group_cap;
  ConversionVerdict verdict = check_conversion(source, target, gate, eopts);

  Report r;
  r.json = Json{{"command", "convert"},
                {"source", code_to_json(source)},
                {"target", code_to_json(target)},
                {"theta", gate.relative().str()},
                {"maps_source_into_target", verdict.preserves},
                {"d4_preserves_source", verdict.d4_preserves_source},
                {"phase_uniform_on_source_basis", verdict.phase_uniform},
                {"state_phases",
                 verdict.phase_uniform ? angles_to_json(verdict.state_phases) : Json(nullptr)}};

  std::ostringstream t;
  t << "conversion " << (source.name.empty() ? "(source)" : source.name) << " -> "
    << (target.name.empty() ? "(target)" : target.name) << " under Z(" << gate.relative().str()
    << ")^(x)n\n";
  t << "maps source codespace into target: " << (verdict.preserves ? "yes" : "no") << "\n";
  t << "fourth power preserves the source: " << (verdict.d4_preserves_source ? "yes" : "no")
    << "\n";
  if (verdict.phase_uniform)
    t << "per-state phases on the source basis: " << angles_to_text(verdict.state_phases) << "\n";
  r.text = t.str();

  r.exit_code = verdict.preserves ? 0 : 1;
  return r;
}

}  // namespace transversal
