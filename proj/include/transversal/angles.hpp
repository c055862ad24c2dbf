#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "transversal/linalg.hpp"

namespace transversal {

/*
 * Exact phase angle in units of pi, reduced and normalized to [0, 2);
 * 0 is the identity phase. Z(theta) = diag(1, e^{i pi theta}).
 */
class RationalAngle {
 public:
  RationalAngle() : v_(0) {}

  // Reduce p/q and wrap into [0, 2). q = 0 throws.
  static RationalAngle normalized(const Int& p, const Int& q);
  static RationalAngle from_rational(const Rational& r);

  // Angle literal: "p/q" or integer "p", units of pi.
  static std::optional<RationalAngle> parse(std::string_view s);

  const Rational& value() const { return v_; }
  Int numerator() const { return v_.get_num(); }
  Int denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  // Phase of a Pauli-diagonal entry: 0 or 1 mod 2.
  bool is_integral() const { return v_.get_den() == 1; }

  // k such that the reduced denominator is 2^k, if it is a power of two.
  std::optional<int> dyadic_exponent() const;

  RationalAngle operator+(const RationalAngle& o) const { return from_rational(v_ + o.v_); }
  RationalAngle operator-(const RationalAngle& o) const { return from_rational(v_ - o.v_); }
  RationalAngle operator-() const { return from_rational(-v_); }
  RationalAngle times(const Int& c) const { return from_rational(v_ * Rational(c)); }

  bool operator==(const RationalAngle&) const = default;
  auto operator<=>(const RationalAngle& o) const { return cmp(v_, o.v_) <=> 0; }

  std::string str() const;

 private:
  Rational v_;  // reduced, in [0, 2)
};

// Diagonal 1-qubit gate diag(e^{i pi phi}, e^{i pi theta}); every
// classification depends only on theta - phi (the global phase drops out
// of all constraints).
struct DiagonalGate1Q {
  RationalAngle phi;
  RationalAngle theta;

  DiagonalGate1Q() = default;
  explicit DiagonalGate1Q(RationalAngle theta_) : theta(theta_) {}
  DiagonalGate1Q(RationalAngle phi_, RationalAngle theta_) : phi(phi_), theta(theta_) {}

  RationalAngle relative() const { return theta - phi; }
};

// Diagonal 2-qubit gate diag(e^{i pi t00}, e^{i pi t01}, e^{i pi t10},
// e^{i pi t11}) on |00>,|01>,|10>,|11>.
struct DiagonalGate2Q {
  RationalAngle theta00, theta01, theta10, theta11;

  // Same gate with theta00 subtracted everywhere (global phase).
  DiagonalGate2Q normalized() const;
  // theta11 - theta01 - theta10, the genuinely two-qubit part.
  RationalAngle theta11_prime() const;
};

struct HierarchyLevel {
  std::optional<int> level;  // nullopt = not in the Clifford hierarchy

  bool in_hierarchy() const { return level.has_value(); }
  bool operator==(const HierarchyLevel&) const = default;

  static HierarchyLevel at(int l) { return {l}; }
  static HierarchyLevel not_in_hierarchy() { return {std::nullopt}; }
};

// Level of diag(1, e^{i pi d}) with d = theta - phi: d = c/2^k reduced
// gives k + 1; the identity and Pauli Z sit at level 1; non-dyadic d is
// not in the hierarchy at any level.
HierarchyLevel hierarchy_level_1q(const DiagonalGate1Q& g);

// Phase of the antidiagonal operator obtained by conjugating X through
// the gate p times: 2^p (theta - phi) mod 2. The result is a Pauli phase
// (0 or 1) exactly when conjugation has descended to the Pauli group;
// this is the independent witness for hierarchy_level_1q.
RationalAngle conjugation_orbit(const DiagonalGate1Q& g, unsigned p);

// Level of a diagonal 2-qubit gate, by the constructive descent: conjugate
// by X(x)I and I(x)X, rediagonalize with CNOT-derived Cliffords, recurse
// to the Pauli base case. Non-dyadic angles are not in the hierarchy.
// Throws if the descent exceeds depth 16.
HierarchyLevel hierarchy_level_2q_diagonal(const DiagonalGate2Q& g);

}  // namespace transversal
