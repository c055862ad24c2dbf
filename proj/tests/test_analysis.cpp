#include <doctest.h>

#include <algorithm>
#include <random>

#include "transversal/analysis.hpp"
#include "transversal/catalog.hpp"

using namespace transversal;

namespace {

RationalAngle ang(long p, long q = 1) { return RationalAngle::normalized(p, q); }

// Diagonal-Clifford frame change: conjugation by S on one qubit maps
// X -> Y, Y -> -X, Z -> Z.
PauliString conj_s(const PauliString& p, std::size_t qubit) {
  PauliString out = p;
  if (out.x_bits.get(qubit)) {
    if (out.z_bits.get(qubit)) {
      out.z_bits.set(qubit, false);
      out.phase_exp = (out.phase_exp + 2) % 4;
    } else {
      out.z_bits.set(qubit, true);
    }
  }
  return out;
}

StabilizerCode conj_s_code(const StabilizerCode& code, std::size_t qubit) {
  StabilizerCode out = code;
  out.name = code.name + "-sframe";
  for (PauliString& g : out.generators) g = conj_s(g, qubit);
  for (PauliString& l : out.logical_x) l = conj_s(l, qubit);
  for (PauliString& l : out.logical_z) l = conj_s(l, qubit);
  return out;
}

StabilizerCode permute_qubits(const StabilizerCode& code, const std::vector<std::size_t>& perm) {
  auto map_pauli = [&](const PauliString& p) {
    PauliString out(code.n);
    out.phase_exp = p.phase_exp;
    for (std::size_t t = 0; t < code.n; ++t) {
      out.x_bits.set(perm[t], p.x_bits.get(t));
      out.z_bits.set(perm[t], p.z_bits.get(t));
    }
    return out;
  };
  StabilizerCode out = code;
  for (PauliString& g : out.generators) g = map_pauli(g);
  for (PauliString& l : out.logical_x) l = map_pauli(l);
  for (PauliString& l : out.logical_z) l = map_pauli(l);
  return out;
}

Verdict oracle_verdict(const StabilizerCode& code, const AngleVector& angles) {
  LogicalBasis basis = build_logical_basis(code);
  LogicalAction action = extract_logical_action(basis, apply_diagonal(basis, angles));
  Verdict v;
  v.preserves_codespace = action.preserved;
  if (action.preserved) v.logical_diagonal = action.phases;
  v.nontrivial = action.nontrivial;
  return v;
}

}  // namespace

TEST_CASE("wedge ladder on the Steane code") {
  CSSView view = *css_view(steane7());

  WedgeOutcome half = wedge_conditions_css(view, ang(1, 2));
  CHECK(half.satisfied);
  CHECK(half.nontrivial);
  REQUIRE(half.sector_phases.size() == 2);
  CHECK(half.sector_phases[1] == ang(3, 2));  // theta |g_L| = 7/2

  WedgeOutcome quarter = wedge_conditions_css(view, ang(1, 4));
  CHECK_FALSE(quarter.satisfied);
  REQUIRE(quarter.witness.has_value());
  CHECK(quarter.witness->generator_subset.size() == 1);  // a single weight-4 row already fails
  CHECK(quarter.witness->observed_value == 4);
  CHECK(quarter.witness->required_modulus == 8);

  WedgeOutcome third = wedge_conditions_css(view, ang(2, 3));
  CHECK_FALSE(third.satisfied);
  REQUIRE(third.witness.has_value());
  CHECK(third.witness->required_modulus == 6);
}

TEST_CASE("wedge engine requires a nontrivial X submatrix") {
  StabilizerCode code;
  code.n = 2;
  code.k = 1;
  code.generators.push_back(PauliString::from_letters("ZZ"));
  code.logical_x.push_back(PauliString::from_letters("XX"));
  code.logical_z.push_back(PauliString::from_letters("ZI"));
  CSSView view = *css_view(code);
  CHECK_THROWS_AS(wedge_conditions_css(view, ang(1, 2)), std::invalid_argument);
}

TEST_CASE("group engine on the Steane code") {
  StabilizerCode code = steane7();

  Verdict half = group_enumeration_check(code, DiagonalGate1Q(ang(1, 2)));
  CHECK(half.preserves_codespace);
  CHECK(half.logical_diagonal == std::vector<RationalAngle>{ang(0), ang(3, 2)});
  CHECK(half.nontrivial);

  Verdict quarter = group_enumeration_check(code, DiagonalGate1Q(ang(1, 4)));
  CHECK_FALSE(quarter.preserves_codespace);
  REQUIRE(quarter.witness.has_value());

  Verdict zero = group_enumeration_check(code, DiagonalGate1Q(ang(0)));
  CHECK(zero.preserves_codespace);
  CHECK_FALSE(zero.nontrivial);
  for (const RationalAngle& p : zero.logical_diagonal) CHECK(p.is_zero());
}

TEST_CASE("global phase on the physical gate drops out") {
  StabilizerCode code = steane7();
  Verdict a = group_enumeration_check(code, DiagonalGate1Q(ang(1, 4), ang(3, 4)));
  Verdict b = group_enumeration_check(code, DiagonalGate1Q(ang(1, 2)));
  CHECK(a.preserves_codespace == b.preserves_codespace);
  CHECK(a.logical_diagonal == b.logical_diagonal);
}

TEST_CASE("engines and oracle agree on spot checks") {
  for (const StabilizerCode& code : catalog()) {
    CAPTURE(code.name);
    auto view = css_view(code);
    for (RationalAngle theta : {ang(1), ang(1, 2), ang(1, 4), ang(2, 3), ang(1, 5)}) {
      CAPTURE(theta.str());
      Verdict group = group_enumeration_check(code, DiagonalGate1Q(theta));
      Verdict oracle = oracle_verdict(code, uniform_angles(code.n, theta));
      CHECK(group.preserves_codespace == oracle.preserves_codespace);
      if (group.preserves_codespace) CHECK(group.logical_diagonal == oracle.logical_diagonal);
      if (view) {
        WedgeOutcome wedge = wedge_conditions_css(*view, theta);
        CHECK(wedge.satisfied == group.preserves_codespace);
        if (wedge.satisfied) CHECK(wedge.sector_phases == group.logical_diagonal);
      }
    }
  }
}

TEST_CASE("classification of the catalog codes") {
  OverlapReport steane = classify(steane7());
  CHECK(steane.k_max == 1);
  CHECK(steane.nontrivial);
  CHECK(steane.logical_action == std::vector<RationalAngle>{ang(0), ang(3, 2)});
  CHECK(steane.odd_all_rejected);
  CHECK(steane.wedge_used);
  CHECK(steane.group_used);
  CHECK(steane.violation_at_next.generator_subset.size() == 1);

  OverlapReport rm = classify(rm15());
  CHECK(rm.k_max == 2);
  CHECK(rm.nontrivial);
  CHECK(rm.odd_all_rejected);

  OverlapReport five = classify(fivequbit());
  CHECK(five.k_max == 0);
  CHECK(five.nontrivial);  // Z^(x)5 is the logical Z
  CHECK(five.logical_action == std::vector<RationalAngle>{ang(0), ang(1)});
  CHECK_FALSE(five.wedge_used);

  OverlapReport c4 = classify(c422());
  CHECK(c4.k_max == 1);
  CHECK(c4.logical_action ==
        std::vector<RationalAngle>{ang(0), ang(1), ang(1), ang(1)});
}

TEST_CASE("the [[31,1,3]] member runs on the wedge engine alone") {
  OverlapReport r = classify(rm_family(5));
  CHECK(r.k_max == 3);
  CHECK(r.wedge_used);
  CHECK_FALSE(r.group_used);  // n-k = 30 exceeds the group cap
  CHECK(r.odd_all_rejected);
}

TEST_CASE("classify rejects invalid and trivial codes") {
  StabilizerCode dup = steane7();
  dup.generators[1] = dup.generators[0];
  CHECK_THROWS_AS(classify(dup), std::invalid_argument);

  StabilizerCode zcode;
  zcode.n = 2;
  zcode.k = 1;
  zcode.generators.push_back(PauliString::from_letters("ZZ"));
  zcode.logical_x.push_back(PauliString::from_letters("XX"));
  zcode.logical_z.push_back(PauliString::from_letters("ZI"));
  CHECK_THROWS_AS(classify(zcode), std::invalid_argument);  // distance 1, zero X column
}

TEST_CASE("k_max is invariant under permutation, row operations and signs") {
  std::mt19937 rng(5);
  OverlapReport base = classify(steane7());

  std::vector<std::size_t> perm(7);
  for (std::size_t i = 0; i < 7; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  CHECK(classify(permute_qubits(steane7(), perm)).k_max == base.k_max);

  StabilizerCode rowops = steane7();
  rowops.generators[0] = rowops.generators[0] * rowops.generators[1];
  REQUIRE(validate(rowops).empty());
  CHECK(classify(rowops).k_max == base.k_max);

  StabilizerCode signed_code = steane7();
  signed_code.generators[0].phase_exp = 2;
  REQUIRE(validate(signed_code).empty());
  CHECK(classify(signed_code).k_max == base.k_max);
}

TEST_CASE("admissible rotations form a group: multiples stay admissible") {
  StabilizerCode code = steane7();
  Verdict base = group_enumeration_check(code, DiagonalGate1Q(ang(1, 2)));
  REQUIRE(base.preserves_codespace);
  for (long c = 0; c < 4; ++c) {
    Verdict v = group_enumeration_check(code, DiagonalGate1Q(ang(c, 2)));
    CHECK(v.preserves_codespace);
    REQUIRE(v.logical_diagonal.size() == 2);
    CHECK(v.logical_diagonal[1] == base.logical_diagonal[1].times(c));
  }
}

TEST_CASE("check_mixed: uniform case reduces to the group engine") {
  StabilizerCode code = steane7();
  Verdict uniform = check_mixed(code, uniform_angles(7, ang(1, 2)));
  Verdict group = group_enumeration_check(code, DiagonalGate1Q(ang(1, 2)));
  CHECK(uniform.preserves_codespace == group.preserves_codespace);
  CHECK(uniform.logical_diagonal == group.logical_diagonal);
}

TEST_CASE("check_mixed: zeroing one qubit breaks the Steane congruence") {
  AngleVector angles = uniform_angles(7, ang(1, 2));
  angles[3] = ang(0);
  Verdict v = check_mixed(steane7(), angles);
  CHECK_FALSE(v.preserves_codespace);
  CHECK(v.identity_qubits == std::vector<std::size_t>{3});

  Verdict oracle = oracle_verdict(steane7(), angles);
  CHECK_FALSE(oracle.preserves_codespace);
}

TEST_CASE("check_mixed: all-zero angles give the trivial identity verdict") {
  Verdict v = check_mixed(c422(), AngleVector(4));
  CHECK(v.preserves_codespace);
  CHECK_FALSE(v.nontrivial);
  CHECK(v.identity_qubits.size() == 4);
}

TEST_CASE("decompress: Steane qubit 0 into two copies") {
  AngleVector angles = uniform_angles(7, ang(1, 2));
  auto [code, split] = decompress(steane7(), 0, 2, angles);
  CHECK(code.n == 8);
  CHECK(code.k == 1);
  CHECK(validate(code).empty());
  REQUIRE(split.size() == 8);
  CHECK(split[0] == ang(1, 4));
  CHECK(split[1] == ang(1, 4));
  for (std::size_t t = 2; t < 8; ++t) CHECK(split[t] == ang(1, 2));

  Verdict before = check_mixed(steane7(), angles);
  Verdict after = check_mixed(code, split);
  CHECK(before.preserves_codespace == after.preserves_codespace);
  CHECK(before.logical_diagonal == after.logical_diagonal);
  CHECK(before.nontrivial == after.nontrivial);

  // Both Z-type weight-2 strings on the copies land in the stabilizer,
  // so no weight-2 logical appears and the split code keeps distance 3.
  CHECK(distance_bruteforce(code, 12) == 3);
}

TEST_CASE("decompress: [[4,2,2]] keeps a weight-2 logical") {
  auto [code, split] = decompress(c422(), 0, 2, AngleVector(4));
  CHECK(code.n == 5);
  CHECK(distance_bruteforce(code, 12) == 2);
}

TEST_CASE("decompress verdict equality on randomized cases") {
  std::mt19937 rng(17);
  std::vector<StabilizerCode> codes{steane7(), fivequbit(), c422()};
  for (int trial = 0; trial < 25; ++trial) {
    const StabilizerCode& code = codes[rng() % codes.size()];
    std::size_t qubit = rng() % code.n;
    int m = 2 + static_cast<int>(rng() % 2);
    AngleVector angles;
    for (std::size_t t = 0; t < code.n; ++t)
      angles.push_back(ang(static_cast<long>(rng() % 8), 1 + rng() % 8));
    auto [out, split] = decompress(code, qubit, m, angles);
    Verdict before = check_mixed(code, angles);
    Verdict after = check_mixed(out, split);
    CAPTURE(code.name);
    CHECK(before.preserves_codespace == after.preserves_codespace);
    CHECK(before.logical_diagonal == after.logical_diagonal);
    CHECK(before.nontrivial == after.nontrivial);
  }
}

TEST_CASE("decompress argument validation") {
  CHECK_THROWS_AS(decompress(c422(), 0, 1, AngleVector(4)), std::invalid_argument);
  CHECK_THROWS_AS(decompress(c422(), 4, 2, AngleVector(4)), std::invalid_argument);
}

TEST_CASE("conversion to self reduces to the group check") {
  StabilizerCode code = steane7();
  ConversionVerdict good = check_conversion(code, code, DiagonalGate1Q(ang(1, 2)));
  CHECK(good.preserves);
  CHECK(good.d4_preserves_source);
  CHECK(good.phase_uniform);
  CHECK(good.state_phases == std::vector<RationalAngle>{ang(0), ang(3, 2)});

  ConversionVerdict bad = check_conversion(code, code, DiagonalGate1Q(ang(1, 4)));
  CHECK_FALSE(bad.preserves);
}

TEST_CASE("conversion into a conjugated frame") {
  StabilizerCode source = fivequbit();
  StabilizerCode target = source;
  for (std::size_t q = 0; q < source.n; ++q) target = conj_s_code(target, q);
  REQUIRE(validate(target).empty());
  // The frame change really moves the stabilizer group.
  BitMatrix combined;
  for (const PauliString& g : source.generators) combined.append_row(g.symplectic_row());
  for (const PauliString& g : target.generators) combined.append_row(g.symplectic_row());
  REQUIRE(gf2_rank(combined) > source.generators.size());

  // S on every qubit realizes exactly that frame change.
  ConversionVerdict v = check_conversion(source, target, DiagonalGate1Q(ang(1, 2)));
  CHECK(v.preserves);
  CHECK(v.d4_preserves_source);

  // The same gate does not preserve the source itself.
  ConversionVerdict self = check_conversion(source, source, DiagonalGate1Q(ang(1, 2)));
  CHECK_FALSE(self.preserves);
}

TEST_CASE("odd-denominator angles never convert") {
  ConversionVerdict v = check_conversion(steane7(), steane7(), DiagonalGate1Q(ang(2, 3)));
  CHECK_FALSE(v.preserves);
  CHECK_FALSE(v.d4_preserves_source);
}

TEST_CASE("conversion dimension mismatch") {
  CHECK_THROWS_AS(check_conversion(steane7(), c422(), DiagonalGate1Q(ang(1, 2))),
                  std::invalid_argument);
}

TEST_CASE("irrational admissibility forces the logical phase to zero") {
  for (const StabilizerCode& code : catalog()) {
    CAPTURE(code.name);
    IrrationalReport r = irrational_admissibility(code);
    CHECK(r.logical_phase_forced_zero);
  }
}

TEST_CASE("irrational admissibility rejects trivial codes") {
  StabilizerCode zcode;
  zcode.n = 2;
  zcode.k = 1;
  zcode.generators.push_back(PauliString::from_letters("ZZ"));
  zcode.logical_x.push_back(PauliString::from_letters("XX"));
  zcode.logical_z.push_back(PauliString::from_letters("ZI"));
  CHECK_THROWS_AS(irrational_admissibility(zcode), std::invalid_argument);
}

TEST_CASE("two-qubit family parameters follow the single-block exponent") {
  TwoQubitReport steane = two_qubit_family(classify(steane7()));
  CHECK(steane.k == 1);
  CHECK(steane.theta01_step == ang(1, 2));
  CHECK(steane.theta11_prime_step == ang(1));

  TwoQubitReport rm = two_qubit_family(classify(rm15()));
  CHECK(rm.k == 2);
  CHECK(rm.theta01_step == ang(1, 4));
  CHECK(rm.theta11_prime_step == ang(1, 2));

  CHECK_THROWS_AS(two_qubit_family(classify(fivequbit())), std::invalid_argument);
}
