#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "transversal/angles.hpp"
#include "transversal/code.hpp"

namespace transversal {

// Per-qubit rotation angles for Z(theta_1) (x) ... (x) Z(theta_n).
using AngleVector = std::vector<RationalAngle>;

AngleVector uniform_angles(std::size_t n, const RationalAngle& theta);

/*
 * Exact phase of one support element: i^{i_power} * e^{i pi extra}. Before
 * any diagonal gate is applied every extra is 0 and the phases are pure
 * powers of i; diagonal gates only ever touch extra.
 */
struct ElementPhase {
  int i_power = 0;  // mod 4
  RationalAngle extra;

  RationalAngle total() const {
    return RationalAngle::normalized(i_power, 2) + extra;
  }
  bool operator==(const ElementPhase&) const = default;
};

/*
 * Codeword with uniform amplitude 2^{-norm_exponent/2} over its support.
 * Support keys are computational basis strings (bit t = qubit t); n <= 64.
 * The support of a stabilizer-group expansion is one full coset of the
 * group's X-substring span, so its size is always a power of two.
 */
struct SparseCodeword {
  std::size_t n = 0;
  int norm_exponent = 0;
  std::map<std::uint64_t, ElementPhase> support;

  bool operator==(const SparseCodeword&) const = default;
};

// P |psi>, with exact i-power tracking.
SparseCodeword apply_pauli(const SparseCodeword& state, const PauliString& p);

// If a = e^{i pi r} b with identical supports, returns r.
std::optional<RationalAngle> proportional_phase(const SparseCodeword& a, const SparseCodeword& b);

/*
 * The 2^k-state logical basis. states[m] is obtained from states[0] by
 * applying sector_ops[j] for every set bit j of m; each sector op is the
 * member of {X_j, Z_j, X_j Z_j} whose X substring first leaves the span
 * of the stabilizer X substrings and the offsets already used, so the
 * supports are pairwise disjoint by construction. Logical actions are
 * always reported relative to this basis and the construction log.
 */
struct LogicalBasis {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<SparseCodeword> states;
  std::vector<PauliString> sector_ops;
  std::vector<std::string> construction_log;
};

// The deterministic sector-offset choice shared by the enumeration engine
// and the basis construction: for each logical pair, the first of
// {X_j, Z_j, X_j Z_j} whose X substring is independent of the stabilizer
// X-span extended by the previously chosen offsets.
std::vector<PauliString> sector_offset_operators(const StabilizerCode& code);

// Builds the basis by group expansion from the lexicographically first
// computational seed with nonzero codespace overlap. Throws on invalid
// codes and when n - k exceeds group_cap or n exceeds 64.
LogicalBasis build_logical_basis(const StabilizerCode& code, int group_cap = 22);

// Z(theta_1) (x) ... (x) Z(theta_n): support element b gains extra phase
// sum_t theta_t b_t (mod 2); supports are unchanged.
LogicalBasis apply_diagonal(const LogicalBasis& basis, const AngleVector& angles);
SparseCodeword apply_diagonal(const SparseCodeword& state, const AngleVector& angles);

struct LogicalAction {
  bool preserved = false;
  // Per-state phases, raw and relative to state 0; index = sector mask.
  std::vector<RationalAngle> phases;
  std::vector<RationalAngle> phases_rel;
  bool nontrivial = false;  // some relative phase is nonzero
  std::optional<std::size_t> witness_state;
  std::optional<std::uint64_t> witness_element;
};

// Compares per-element total phases of `after` against `before` state by
// state; any state with a non-uniform phase ratio yields NotPreserved
// with that state (and one offending element) as witness.
LogicalAction extract_logical_action(const LogicalBasis& before, const LogicalBasis& after);

// True iff every generator fixes the state exactly.
bool membership_check(const SparseCodeword& state, const StabilizerCode& code);

/*
 * Two-block machinery: both blocks carry the same code; a two-qubit
 * diagonal gate acts pairwise on qubit t of block A and qubit t of
 * block B.
 */

// Phase gained by the pair of support elements (u, v): with c11 = |u & v|,
// c10 = |u| - c11, c01 = |v| - c11, c00 = n - c01 - c10 - c11, the sum
// t00 c00 + t01 c01 + t10 c10 + t11 c11 mod 2.
RationalAngle pair_phase(std::uint64_t u, std::uint64_t v, std::size_t n,
                         const DiagonalGate2Q& gate);

// Materialized per-pair phases, indexed by sector pair (mask_a, mask_b).
struct TwoBlockPhases {
  std::size_t k = 0;
  // entry [ma * 2^k + mb] maps (u, v) -> phase
  std::vector<std::map<std::pair<std::uint64_t, std::uint64_t>, RationalAngle>> pairs;
};
TwoBlockPhases apply_diagonal_2q(const LogicalBasis& a, const LogicalBasis& b,
                                 const DiagonalGate2Q& gate);

struct TwoBlockAction {
  bool preserved = false;
  std::vector<RationalAngle> phases;      // index ma * 2^k + mb
  std::vector<RationalAngle> phases_rel;  // relative to sector pair (0, 0)
  bool nontrivial = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness_sectors;
};

TwoBlockAction two_block_logical_action(const LogicalBasis& a, const LogicalBasis& b,
                                        const DiagonalGate2Q& gate);

/*
 * Dense floating-point statevector cross-check, independent of the exact
 * path. Recovered phases are matched to rationals by continued fractions
 * with denominator cap 2^12; a recovery further than 1e-9 from every
 * candidate is an error, never silently rounded.
 */
LogicalAction float_statevector_check(const StabilizerCode& code, const AngleVector& angles,
                                      int qubit_cap = 15);

TwoBlockAction float_statevector_check_2q(const StabilizerCode& code, const DiagonalGate2Q& gate,
                                          int qubit_cap = 15);

}  // namespace transversal
