#include "transversal/angles.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace transversal {

RationalAngle RationalAngle::from_rational(const Rational& r) {
  RationalAngle a;
  Rational v = r;
  v.canonicalize();
  // Wrap into [0, 2): v - 2*floor(v/2).
  Int half_turns;
  Int twice_den = 2 * v.get_den();
  mpz_fdiv_q(half_turns.get_mpz_t(), v.get_num().get_mpz_t(), twice_den.get_mpz_t());
  v -= Rational(2) * Rational(half_turns);
  v.canonicalize();
  a.v_ = v;
  return a;
}

RationalAngle RationalAngle::normalized(const Int& p, const Int& q) {
  if (q == 0) throw std::invalid_argument("RationalAngle: zero denominator");
  return from_rational(Rational(p, q));
}

std::optional<RationalAngle> RationalAngle::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::string num, den = "1";
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(s);
  } else {
    num = std::string(s.substr(0, slash));
    den = std::string(s.substr(slash + 1));
  }
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  Int p(num), q(den);
  if (q == 0) return std::nullopt;
  return normalized(p, q);
}

std::optional<int> RationalAngle::dyadic_exponent() const {
  Int den = v_.get_den();
  int k = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++k;
  }
  if (den != 1) return std::nullopt;
  return k;
}

std::string RationalAngle::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

DiagonalGate2Q DiagonalGate2Q::normalized() const {
  DiagonalGate2Q g;
  g.theta00 = RationalAngle{};
  g.theta01 = theta01 - theta00;
  g.theta10 = theta10 - theta00;
  g.theta11 = theta11 - theta00;
  return g;
}

RationalAngle DiagonalGate2Q::theta11_prime() const {
  return (theta11 - theta00) - (theta01 - theta00) - (theta10 - theta00);
}

HierarchyLevel hierarchy_level_1q(const DiagonalGate1Q& g) {
  std::optional<int> k = g.relative().dyadic_exponent();
  if (!k) return HierarchyLevel::not_in_hierarchy();
  return HierarchyLevel::at(*k + 1);
}

RationalAngle conjugation_orbit(const DiagonalGate1Q& g, unsigned p) {
  if (p > 64) throw std::invalid_argument("conjugation_orbit: p exceeds 64");
  Int two_p = Int(1) << p;
  return g.relative().times(two_p);
}

namespace {

using Key = std::tuple<Rational, Rational, Rational>;

// Levels of the normalized gates diag(1, e^{i pi a}, e^{i pi b},
// e^{i pi c}). Conjugating X(x)I, I(x)X, X(x)X and stripping the Pauli
// factor leaves the diagonal remainders below; level is 1 + the max of
// their levels, with diagonal Paulis (integral entries, a+b+c even) as
// the base.
int level_2q_rec(const RationalAngle& a, const RationalAngle& b, const RationalAngle& c,
                 std::map<Key, int>& memo, int depth) {
  if (depth > 16) throw std::runtime_error("hierarchy_level_2q_diagonal: recursion depth > 16");
  if (a.is_integral() && b.is_integral() && c.is_integral()) {
    Int sum = a.numerator() + b.numerator() + c.numerator();
    if (sum % 2 == 0) return 1;
  }
  Key key{a.value(), b.value(), c.value()};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const RationalAngle branches[3][3] = {
      {c - a - b, -(b.times(2)), a - c - b},  // from X(x)I
      {-(a.times(2)), c - a - b, b - c - a},  // from I(x)X
      {b - a - c, a - b - c, -(c.times(2))},  // from X(x)X
  };
  int best = 0;
  for (const auto& br : branches)
    best = std::max(best, level_2q_rec(br[0], br[1], br[2], memo, depth + 1));
  memo[key] = best + 1;
  return best + 1;
}

}  // namespace

HierarchyLevel hierarchy_level_2q_diagonal(const DiagonalGate2Q& g) {
  DiagonalGate2Q n = g.normalized();
  if (!n.theta01.dyadic_exponent() || !n.theta10.dyadic_exponent() ||
      !n.theta11.dyadic_exponent())
    return HierarchyLevel::not_in_hierarchy();
  std::map<Key, int> memo;
  return HierarchyLevel::at(level_2q_rec(n.theta01, n.theta10, n.theta11, memo, 0));
}

}  // namespace transversal
