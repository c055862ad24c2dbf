#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "transversal/angles.hpp"
#include "transversal/code.hpp"
#include "transversal/oracle.hpp"

namespace transversal {

// Two engines (or an engine and an oracle) produced different verdicts
// on the same question. Always a bug; the CLI maps it to exit code 3.
struct EngineDisagreement : std::logic_error {
  using std::logic_error::logic_error;
};

struct EngineOptions {
  int group_cap = 22;       // group enumeration: n-k <= group_cap
  int pair_cap = 24;        // pair enumeration: 2(n-k) <= pair_cap
  int irrational_cap = 18;  // constraint-system rows enumerate the group
};

/*
 * A violated congruence. observed_value is the exact left-hand side of
 * the failed condition and is never 0 mod required_modulus. The subset
 * lists generator indices (wedge-engine conditions index rows of gx_rows;
 * group-engine conditions index code.generators); logical_sector, when
 * set, is the sector mask whose coset the condition came from.
 */
struct ConstraintWitness {
  std::vector<std::size_t> generator_subset;
  std::optional<unsigned> logical_sector;
  Int observed_value;
  Int required_modulus;
  std::string condition;
};

struct Verdict {
  bool preserves_codespace = false;
  // Per-sector phases (index = sector mask over logical pairs); empty
  // when the gate does not preserve the codespace.
  std::vector<RationalAngle> logical_diagonal;
  bool nontrivial = false;
  std::optional<ConstraintWitness> witness;
  std::vector<std::size_t> identity_qubits;  // qubits dropped as zero-angle
};

struct WedgeOutcome {
  bool satisfied = false;
  std::optional<ConstraintWitness> witness;
  std::vector<RationalAngle> sector_phases;  // 2^k, valid when satisfied
  bool nontrivial = false;
};

/*
 * Overlap-condition ladder for CSS codes, evaluated as exact integer
 * congruences p * w = 0 (mod 2q) with theta = p/q:
 *
 *   order m rows:      2^{m-1} p |g_{i_1} & ... & g_{i_m}|        = 0 mod 2q
 *   logical sectors:   2^j     p |g_sector & (j-row wedge)|       = 0 mod 2q
 *
 * For dyadic q = 2^k every condition whose coefficient exponent exceeds
 * k is skipped as automatically satisfied; for q with an odd factor all
 * orders are evaluated. The sector phase is theta * |g_sector| mod 2,
 * and nontriviality means some sector phase is nonzero.
 */
WedgeOutcome wedge_conditions_css(const CSSView& view, const RationalAngle& theta);

// Stabilizer-group enumeration engine; works for any code, CSS or not,
// and for logicals with Y/Z content. Needs n-k within the group cap.
Verdict group_enumeration_check(const StabilizerCode& code, const DiagonalGate1Q& gate,
                                const EngineOptions& opts = {});

// Per-qubit angles; zero-angle qubits contribute nothing and are listed
// in the verdict as dropped.
Verdict check_mixed(const StabilizerCode& code, const AngleVector& angles,
                    const EngineOptions& opts = {});

struct OddSweepEntry {
  Int q;
  Int p;
  ConstraintWitness witness;
};

struct OverlapReport {
  int k_max = 0;
  RationalAngle theta_at_k_max;                // 1/2^{k_max}
  std::vector<RationalAngle> logical_action;   // sector phases at theta_at_k_max
  bool nontrivial = false;
  ConstraintWitness violation_at_next;         // witness rejecting 1/2^{k_max + 1}
  int q_sweep_cap = 15;
  bool odd_all_rejected = false;
  std::vector<OddSweepEntry> odd_witnesses;
  bool wedge_used = false;
  bool group_used = false;
};

// Finds the largest k with Z(1/2^k) admissible, confirms every
// odd-factor denominator q <= q_sweep_cap is rejected with a witness,
// and records the logical action at Z(1/2^{k_max}). The admissible set
// is exactly {c / 2^{k_max}: c integer}. Requires a valid, nontrivial
// code (distance >= 2; for codes too large to brute-force, no zero
// column in the stabilizer X substrings).
OverlapReport classify(const StabilizerCode& code, int q_sweep_cap = 15,
                       const EngineOptions& opts = {});

// Repeats qubit `qubit` m times: X substrings are copied onto all m
// copies, Z bits stay on the first copy, and m-1 adjacent-pair ZZ
// generators are appended, giving a valid [[n+m-1, k]] code. The angle
// on the split qubit is replaced by m copies of theta/m; check_mixed
// verdicts before and after are identical.
std::pair<StabilizerCode, AngleVector> decompress(const StabilizerCode& code, std::size_t qubit,
                                                  int m, const AngleVector& angles);

struct ConversionVerdict {
  bool preserves = false;            // gate^(x)n maps source codespace into target codespace
  bool d4_preserves_source = false;  // applying the gate four times is diagonal on the source
  // When each transformed basis state is a scalar multiple of the source
  // state (always the case for target == source), the per-state phases.
  bool phase_uniform = false;
  std::vector<RationalAngle> state_phases;
  std::optional<std::size_t> witness_state;
};

// Does gate^(x)n map the source codespace into the target codespace?
// Membership is delegated to the exact basis machinery; the D^4 check
// (four applications must act diagonally on the source basis) is
// reported alongside.
ConversionVerdict check_conversion(const StabilizerCode& source, const StabilizerCode& target,
                                   const DiagonalGate1Q& gate, const EngineOptions& opts = {});

struct TwoQubitReport {
  int k = 0;
  RationalAngle theta01_step;        // 1/2^k
  RationalAngle theta10_step;        // 1/2^k
  RationalAngle theta11_prime_step;  // 1/2^{k-1}
  DiagonalGate2Q representative;     // unit instance of the family
};

// Admissible two-qubit family for a code with single-block exponent
// k = k_max >= 1: theta01 and theta10 range over multiples of 1/2^k and
// theta11 - theta01 - theta10 over multiples of 1/2^{k-1}. Throws when
// k_max = 0.
TwoQubitReport two_qubit_family(const OverlapReport& single_block);

bool gate_in_two_qubit_family(const DiagonalGate2Q& gate, int k);

struct TwoQubitVerdict {
  bool preserves_codespace = false;
  std::vector<RationalAngle> logical_diagonal;  // index ma * 2^k + mb
  bool nontrivial = false;
  std::optional<ConstraintWitness> witness;  // subsets refer to the (A, B) group masks
};

// Two blocks of the same code coupled by one two-qubit diagonal gate per
// qubit pair. For every pair of group elements and every sector pair the
// exact phase t00 c00 + t01 c01 + t10 c10 + t11 c11 must be constant
// mod 2 over the pair coset.
TwoQubitVerdict check_two_qubit(const StabilizerCode& code, const DiagonalGate2Q& gate,
                                const EngineOptions& opts = {});

struct IrrationalReport {
  bool logical_phase_forced_zero = false;
  std::size_t nullspace_dimension = 0;
};

// Real-linear admissibility over the rationals: theta . x(S)^T = 0 for
// every group element and theta . x(L S)^T = t_sector constant over each
// coset. Every nontrivial code forces all t_sector to 0, so no
// irrational direction can contribute a logical phase.
IrrationalReport irrational_admissibility(const StabilizerCode& code,
                                          const EngineOptions& opts = {});

}  // namespace transversal
