#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "transversal/oracle.hpp"

namespace transversal {

namespace {

using Complex = std::complex<double>;
constexpr double kPhaseTol = 1e-9;
constexpr double kSupportTol = 1e-10;
constexpr long kDenominatorCap = 4096;  // 2^12

void apply_pauli_dense(std::vector<Complex>& v, const PauliString& p) {
  static const Complex i_powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<Complex> out(v.size(), Complex(0, 0));
  for (std::uint64_t b = 0; b < v.size(); ++b) {
    if (v[b] == Complex(0, 0)) continue;
    out[p.image_of_basis_state(b)] += i_powers[p.phase_on_basis_state(b)] * v[b];
  }
  v.swap(out);
}

// Projector expansion (I + G_1)...(I + G_{n-k}) |seed>, normalized;
// empty vector when the seed is orthogonal to the codespace.
std::vector<Complex> dense_anchor(const StabilizerCode& code, std::uint64_t seed) {
  std::vector<Complex> v(std::uint64_t(1) << code.n, Complex(0, 0));
  v[seed] = 1.0;
  for (const PauliString& g : code.generators) {
    std::vector<Complex> gv = v;
    apply_pauli_dense(gv, g);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += gv[i];
  }
  double norm2 = 0;
  for (const Complex& c : v) norm2 += std::norm(c);
  if (norm2 < kSupportTol) return {};
  double inv = 1.0 / std::sqrt(norm2);
  for (Complex& c : v) c *= inv;
  return v;
}

std::vector<std::vector<Complex>> dense_basis(const StabilizerCode& code) {
  std::vector<Complex> anchor;
  for (std::uint64_t seed = 0;; ++seed) {
    if (seed >= (std::uint64_t(1) << code.n))
      throw std::logic_error("float oracle: no seed with nonzero overlap");
    anchor = dense_anchor(code, seed);
    if (!anchor.empty()) break;
  }
  std::vector<PauliString> ops = sector_offset_operators(code);
  std::vector<std::vector<Complex>> states(std::size_t(1) << code.k);
  states[0] = std::move(anchor);
  for (std::size_t j = 0; j < code.k; ++j)
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << j); ++m) {
      states[m | (std::uint64_t(1) << j)] = states[m];
      apply_pauli_dense(states[m | (std::uint64_t(1) << j)], ops[j]);
    }
  return states;
}

// Nearest rational with denominator <= 2^12, by continued fractions.
// Distinct candidates under the cap are at least 1/2^24 apart, so within
// 1e-9 the match is unique; anything farther than that from every
// candidate is reported as unrecoverable.
RationalAngle recover_rational_phase(double x) {
  double target = x;
  long p_prev = 1, q_prev = 0;
  long p_cur = static_cast<long>(std::floor(target));
  long q_cur = 1;
  double frac = target - std::floor(target);
  long best_p = p_cur, best_q = 1;
  while (true) {
    double err = std::abs(target - static_cast<double>(p_cur) / static_cast<double>(q_cur));
    if (std::abs(target - static_cast<double>(best_p) / static_cast<double>(best_q)) > err) {
      best_p = p_cur;
      best_q = q_cur;
    }
    if (frac < 1e-15 || q_cur > kDenominatorCap) break;
    double inv = 1.0 / frac;
    double a_f = std::floor(inv);
    if (a_f > 1e17) break;
    long a = static_cast<long>(a_f);
    frac = inv - a_f;
    long p_next = a * p_cur + p_prev;
    long q_next = a * q_cur + q_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    if (q_prev > kDenominatorCap) break;
  }
  if (best_q > kDenominatorCap ||
      std::abs(target - static_cast<double>(best_p) / static_cast<double>(best_q)) > kPhaseTol)
    throw std::runtime_error("float oracle: phase not recoverable as p/q with q <= 2^12");
  return RationalAngle::normalized(Int(best_p), Int(best_q));
}

RationalAngle phase_of_ratio(Complex ratio) {
  double angle = std::arg(ratio) / std::numbers::pi;  // in (-1, 1]
  if (angle < 0) angle += 2.0;
  return recover_rational_phase(angle);
}

}  // namespace

LogicalAction float_statevector_check(const StabilizerCode& code, const AngleVector& angles,
                                      int qubit_cap) {
  if (static_cast<int>(code.n) > qubit_cap)
    throw std::invalid_argument("float oracle: n exceeds cap " + std::to_string(qubit_cap));
  if (angles.size() != code.n) throw std::invalid_argument("float oracle: angle vector length");

  std::vector<std::vector<Complex>> states = dense_basis(code);

  std::vector<double> phase_per_index(std::uint64_t(1) << code.n, 0.0);
  for (std::uint64_t b = 0; b < phase_per_index.size(); ++b) {
    double sum = 0;
    for (std::size_t t = 0; t < code.n; ++t)
      if ((b >> t) & 1) sum += angles[t].value().get_d();
    phase_per_index[b] = sum;
  }

  LogicalAction action;
  action.preserved = true;
  for (std::size_t m = 0; m < states.size(); ++m) {
    const std::vector<Complex>& before = states[m];
    bool have = false;
    Complex ratio;
    for (std::uint64_t b = 0; b < before.size(); ++b) {
      if (std::abs(before[b]) < kSupportTol) continue;
      Complex r = std::polar(1.0, std::numbers::pi * phase_per_index[b]);
      if (!have) {
        ratio = r;
        have = true;
      } else if (std::abs(r - ratio) > kPhaseTol) {
        action.preserved = false;
        action.witness_state = m;
        action.witness_element = b;
        return action;
      }
    }
    action.phases.push_back(phase_of_ratio(ratio));
  }
  for (const RationalAngle& p : action.phases) {
    action.phases_rel.push_back(p - action.phases[0]);
    if (!(p - action.phases[0]).is_zero()) action.nontrivial = true;
  }
  return action;
}

TwoBlockAction float_statevector_check_2q(const StabilizerCode& code, const DiagonalGate2Q& gate,
                                          int qubit_cap) {
  if (static_cast<int>(2 * code.n) > qubit_cap)
    throw std::invalid_argument("float oracle: 2n exceeds cap " + std::to_string(qubit_cap));

  std::vector<std::vector<Complex>> states = dense_basis(code);
  const std::size_t sectors = states.size();

  double t00 = gate.theta00.value().get_d();
  double t01 = gate.theta01.value().get_d();
  double t10 = gate.theta10.value().get_d();
  double t11 = gate.theta11.value().get_d();

  TwoBlockAction action;
  action.preserved = true;
  for (std::size_t ma = 0; ma < sectors; ++ma)
    for (std::size_t mb = 0; mb < sectors; ++mb) {
      bool have = false;
      Complex ratio;
      for (std::uint64_t u = 0; u < states[ma].size(); ++u) {
        if (std::abs(states[ma][u]) < kSupportTol) continue;
        for (std::uint64_t v = 0; v < states[mb].size(); ++v) {
          if (std::abs(states[mb][v]) < kSupportTol) continue;
          long c11 = std::popcount(u & v);
          long c10 = std::popcount(u) - c11;
          long c01 = std::popcount(v) - c11;
          long c00 = static_cast<long>(code.n) - c01 - c10 - c11;
          Complex r = std::polar(1.0, std::numbers::pi * (t00 * c00 + t01 * c01 + t10 * c10 + t11 * c11));
          if (!have) {
            ratio = r;
            have = true;
          } else if (std::abs(r - ratio) > kPhaseTol) {
            action.preserved = false;
            action.witness_sectors = {ma, mb};
            return action;
          }
        }
      }
      action.phases.push_back(phase_of_ratio(ratio));
    }
  for (const RationalAngle& p : action.phases) {
    action.phases_rel.push_back(p - action.phases[0]);
    if (!(p - action.phases[0]).is_zero()) action.nontrivial = true;
  }
  return action;
}

}  // namespace transversal
