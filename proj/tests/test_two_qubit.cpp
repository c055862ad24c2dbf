#include <doctest.h>

#include <bit>

#include "transversal/analysis.hpp"
#include "transversal/catalog.hpp"

using namespace transversal;

namespace {

RationalAngle ang(long p, long q = 1) { return RationalAngle::normalized(p, q); }

DiagonalGate2Q gate2(RationalAngle t01, RationalAngle t10, RationalAngle t11) {
  DiagonalGate2Q g;
  g.theta01 = t01;
  g.theta10 = t10;
  g.theta11 = t11;
  return g;
}

}  // namespace

TEST_CASE("pair phase of a controlled-Z is the overlap parity") {
  DiagonalGate2Q cz = gate2(ang(0), ang(0), ang(1));
  CHECK(pair_phase(0b1110, 0b0111, 4, cz) == ang(2 % 2));  // |u & v| = 2
  CHECK(pair_phase(0b1010, 0b0110, 4, cz) == ang(1));      // |u & v| = 1
}

TEST_CASE("transversal controlled-Z on two Steane blocks is a logical controlled-Z") {
  DiagonalGate2Q cz = gate2(ang(0), ang(0), ang(1));
  TwoQubitVerdict v = check_two_qubit(steane7(), cz);
  CHECK(v.preserves_codespace);
  CHECK(v.nontrivial);
  CHECK(v.logical_diagonal ==
        std::vector<RationalAngle>{ang(0), ang(0), ang(0), ang(1)});

  DiagonalGate2Q logical;
  logical.theta01 = v.logical_diagonal[1];
  logical.theta10 = v.logical_diagonal[2];
  logical.theta11 = v.logical_diagonal[3];
  CHECK(hierarchy_level_2q_diagonal(logical) == HierarchyLevel::at(2));
}

TEST_CASE("controlled phase gates beyond the family are rejected on Steane blocks") {
  TwoQubitVerdict cs = check_two_qubit(steane7(), gate2(ang(0), ang(0), ang(1, 2)));
  CHECK_FALSE(cs.preserves_codespace);
  REQUIRE(cs.witness.has_value());

  TwoQubitVerdict ct = check_two_qubit(steane7(), gate2(ang(0), ang(0), ang(1, 4)));
  CHECK_FALSE(ct.preserves_codespace);

  CHECK_FALSE(gate_in_two_qubit_family(gate2(ang(0), ang(0), ang(1, 2)), 1));
  CHECK_FALSE(gate_in_two_qubit_family(gate2(ang(0), ang(0), ang(1, 4)), 2));
}

TEST_CASE("the family representative is accepted") {
  TwoQubitReport family = two_qubit_family(classify(steane7()));
  TwoQubitVerdict v = check_two_qubit(steane7(), family.representative);
  CHECK(v.preserves_codespace);
  CHECK(gate_in_two_qubit_family(family.representative, family.k));
  CHECK(v.logical_diagonal ==
        std::vector<RationalAngle>{ang(0), ang(3, 2), ang(3, 2), ang(0)});
}

TEST_CASE("all-zero two-qubit gate is the identity") {
  TwoQubitVerdict v = check_two_qubit(c422(), gate2(ang(0), ang(0), ang(0)));
  CHECK(v.preserves_codespace);
  CHECK_FALSE(v.nontrivial);
}

TEST_CASE("tensor-product gates agree with two single-block checks") {
  for (const StabilizerCode& code : {steane7(), c422()}) {
    CAPTURE(code.name);
    for (RationalAngle a : {ang(0), ang(1), ang(1, 2), ang(1, 4), ang(1, 3)})
      for (RationalAngle b : {ang(0), ang(1), ang(1, 2)}) {
        CAPTURE(a.str(), b.str());
        // diag(1, e^{i pi b}) on block A, diag(1, e^{i pi a}) on block B.
        TwoQubitVerdict two = check_two_qubit(code, gate2(a, b, a + b));
        Verdict block_a = group_enumeration_check(code, DiagonalGate1Q(b));
        Verdict block_b = group_enumeration_check(code, DiagonalGate1Q(a));
        CHECK(two.preserves_codespace ==
              (block_a.preserves_codespace && block_b.preserves_codespace));
        if (two.preserves_codespace) {
          std::size_t sectors = std::size_t(1) << code.k;
          for (std::size_t ma = 0; ma < sectors; ++ma)
            for (std::size_t mb = 0; mb < sectors; ++mb)
              CHECK(two.logical_diagonal[ma * sectors + mb] ==
                    block_a.logical_diagonal[ma] + block_b.logical_diagonal[mb]);
        }
      }
  }
}

TEST_CASE("exact and float two-block oracles agree with the engine") {
  for (const StabilizerCode& code : {steane7(), c422()}) {
    CAPTURE(code.name);
    LogicalBasis basis = build_logical_basis(code);
    for (DiagonalGate2Q g : {gate2(ang(0), ang(0), ang(1)), gate2(ang(0), ang(0), ang(1, 2)),
                             gate2(ang(1, 2), ang(1, 2), ang(0)), gate2(ang(1, 3), ang(0), ang(1, 3))}) {
      TwoQubitVerdict engine = check_two_qubit(code, g);
      TwoBlockAction exact = two_block_logical_action(basis, basis, g);
      TwoBlockAction dense = float_statevector_check_2q(code, g);
      CHECK(engine.preserves_codespace == exact.preserved);
      CHECK(engine.preserves_codespace == dense.preserved);
      if (engine.preserves_codespace) {
        CHECK(engine.logical_diagonal == exact.phases);
        CHECK(engine.logical_diagonal == dense.phases);
      }
    }
  }
}

TEST_CASE("apply_diagonal_2q on a tensor gate matches two single-block applications") {
  LogicalBasis basis = build_logical_basis(c422());
  RationalAngle a = ang(1, 2), b = ang(1, 4);
  TwoBlockPhases pairs = apply_diagonal_2q(basis, basis, gate2(a, b, a + b));
  LogicalBasis block_a = apply_diagonal(basis, uniform_angles(4, b));
  LogicalBasis block_b = apply_diagonal(basis, uniform_angles(4, a));
  std::size_t sectors = basis.states.size();
  for (std::size_t ma = 0; ma < sectors; ++ma)
    for (std::size_t mb = 0; mb < sectors; ++mb)
      for (const auto& [uv, phase] : pairs.pairs[ma * sectors + mb]) {
        RationalAngle from_blocks = block_a.states[ma].support.at(uv.first).extra +
                                    block_b.states[mb].support.at(uv.second).extra;
        CHECK(phase == from_blocks);
      }
}

TEST_CASE("two-block caps") {
  CHECK_THROWS_AS(check_two_qubit(rm15(), gate2(ang(0), ang(0), ang(1))),
                  std::invalid_argument);  // 2(n-k) = 28 > 24
}

TEST_CASE("[[4,2,2]] blocks accept the controlled-Z") {
  TwoQubitVerdict v = check_two_qubit(c422(), gate2(ang(0), ang(0), ang(1)));
  CHECK(v.preserves_codespace);
  CHECK(v.nontrivial);
  REQUIRE(v.logical_diagonal.size() == 16);
  CHECK(v.logical_diagonal[0] == ang(0));
}
