#include "transversal/oracle.hpp"

#include <bit>
#include <stdexcept>

namespace transversal {

AngleVector uniform_angles(std::size_t n, const RationalAngle& theta) {
  return AngleVector(n, theta);
}

SparseCodeword apply_pauli(const SparseCodeword& state, const PauliString& p) {
  if (p.n != state.n) throw std::invalid_argument("apply_pauli: dimension mismatch");
  SparseCodeword out;
  out.n = state.n;
  out.norm_exponent = state.norm_exponent;
  for (const auto& [b, phase] : state.support) {
    ElementPhase moved = phase;
    moved.i_power = (moved.i_power + p.phase_on_basis_state(b)) % 4;
    out.support.emplace(p.image_of_basis_state(b), moved);
  }
  return out;
}

std::optional<RationalAngle> proportional_phase(const SparseCodeword& a, const SparseCodeword& b) {
  if (a.n != b.n || a.support.size() != b.support.size()) return std::nullopt;
  std::optional<RationalAngle> ratio;
  auto ita = a.support.begin();
  auto itb = b.support.begin();
  for (; ita != a.support.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return std::nullopt;
    RationalAngle r = ita->second.total() - itb->second.total();
    if (!ratio) {
      ratio = r;
    } else if (*ratio != r) {
      return std::nullopt;
    }
  }
  return ratio;
}

namespace {

std::uint64_t n_bit_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
}

// Group-expansion of the projector applied to |seed>: sum over all
// 2^{n-k} stabilizer elements of S|seed>, accumulated as Gaussian
// integers. Returns an empty support when the seed is orthogonal to the
// codespace (every coefficient cancels).
SparseCodeword expand_seed(const StabilizerCode& code, std::uint64_t seed) {
  struct Gauss {
    long re = 0, im = 0;
  };
  std::map<std::uint64_t, Gauss> acc;

  const std::size_t m = code.generators.size();
  PauliString current = PauliString::identity(code.n);
  std::uint64_t gray = 0;
  const std::uint64_t total = std::uint64_t(1) << m;
  for (std::uint64_t step = 0;; ++step) {
    int e = current.phase_on_basis_state(seed);
    Gauss& g = acc[current.image_of_basis_state(seed)];
    switch (e) {
      case 0: g.re += 1; break;
      case 1: g.im += 1; break;
      case 2: g.re -= 1; break;
      case 3: g.im -= 1; break;
    }
    if (step + 1 == total) break;
    std::uint64_t next_gray = (step + 1) ^ ((step + 1) >> 1);
    int flipped = std::countr_zero(gray ^ next_gray);
    gray = next_gray;
    current *= code.generators[flipped];
  }

  SparseCodeword out;
  out.n = code.n;
  long magnitude = 0;
  for (const auto& [b, g] : acc) {
    if (g.re == 0 && g.im == 0) continue;
    if (g.re != 0 && g.im != 0)
      throw std::logic_error("expand_seed: non-i-power coefficient (commutation broken?)");
    int ip = g.re > 0 ? 0 : g.re < 0 ? 2 : (g.im > 0 ? 1 : 3);
    long mag = std::abs(g.re != 0 ? g.re : g.im);
    if (magnitude == 0) magnitude = mag;
    if (mag != magnitude) throw std::logic_error("expand_seed: non-uniform amplitude");
    out.support.emplace(b, ElementPhase{ip, RationalAngle{}});
  }
  if (!out.support.empty()) {
    std::size_t sz = out.support.size();
    if ((sz & (sz - 1)) != 0) throw std::logic_error("expand_seed: support not a power of two");
    out.norm_exponent = std::countr_zero(sz);
  }
  return out;
}

}  // namespace

std::vector<PauliString> sector_offset_operators(const StabilizerCode& code) {
  BitMatrix span;
  for (const PauliString& g : code.generators) span.append_row(g.x_bits);
  if (span.row_count() == 0) span = BitMatrix(0, code.n);

  std::vector<PauliString> ops;
  for (std::size_t j = 0; j < code.k; ++j) {
    const PauliString& x = code.logical_x[j];
    const PauliString& z = code.logical_z[j];
    PauliString chosen(0);
    for (const PauliString& cand : {x, z, x * z}) {
      if (!gf2_in_rowspace(span, cand.x_bits)) {
        chosen = cand;
        break;
      }
    }
    if (chosen.n == 0)
      throw std::logic_error("sector_offset_operators: no fresh offset for logical pair " +
                             std::to_string(j) + " (code invalid?)");
    span.append_row(chosen.x_bits);
    ops.push_back(chosen);
  }
  return ops;
}

LogicalBasis build_logical_basis(const StabilizerCode& code, int group_cap) {
  if (code.n > 64) throw std::invalid_argument("build_logical_basis: n exceeds 64");
  if (static_cast<int>(code.n - code.k) > group_cap)
    throw std::invalid_argument("build_logical_basis: n-k exceeds group cap " +
                                std::to_string(group_cap));
  if (std::vector<Violation> v = validate(code); !v.empty())
    throw std::invalid_argument("build_logical_basis: invalid code: " + v.front().message);

  LogicalBasis basis;
  basis.n = code.n;
  basis.k = code.k;

  // Lexicographic seed search for a basis state with nonzero overlap.
  SparseCodeword anchor;
  const std::uint64_t seed_limit = code.n >= 63 ? ~std::uint64_t(0) : (std::uint64_t(1) << code.n);
  std::uint64_t seed = 0;
  for (;; ++seed) {
    if (seed >= seed_limit)
      throw std::logic_error("build_logical_basis: no seed with nonzero overlap");
    anchor = expand_seed(code, seed);
    if (!anchor.support.empty()) break;
  }
  basis.seed = seed;
  if (seed != 0)
    basis.construction_log.push_back("seed |0...0> orthogonal to codespace; using seed " +
                                     std::to_string(seed));

  basis.sector_ops = sector_offset_operators(code);
  for (std::size_t j = 0; j < code.k; ++j) {
    const PauliString& op = basis.sector_ops[j];
    if (!(op == code.logical_x[j])) {
      basis.construction_log.push_back(
          "logical pair " + std::to_string(j) + ": X substring of X_L lies in the existing span; " +
          "sector generated by " + op.str() + " instead");
    }
  }

  basis.states.resize(std::size_t(1) << code.k);
  basis.states[0] = anchor;
  for (std::size_t j = 0; j < code.k; ++j)
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << j); ++m)
      basis.states[m | (std::uint64_t(1) << j)] = apply_pauli(basis.states[m], basis.sector_ops[j]);

  // Disjointness is guaranteed by the offset choice; verify anyway.
  std::map<std::uint64_t, int> seen;
  for (std::size_t m = 0; m < basis.states.size(); ++m)
    for (const auto& [b, ph] : basis.states[m].support) {
      auto [it, inserted] = seen.emplace(b, static_cast<int>(m));
      if (!inserted)
        throw std::logic_error("build_logical_basis: overlapping supports between states " +
                               std::to_string(it->second) + " and " + std::to_string(m));
    }
  return basis;
}

SparseCodeword apply_diagonal(const SparseCodeword& state, const AngleVector& angles) {
  if (angles.size() != state.n) throw std::invalid_argument("apply_diagonal: angle vector length");
  SparseCodeword out = state;
  for (auto& [b, phase] : out.support) {
    RationalAngle gained;
    for (std::size_t t = 0; t < state.n; ++t)
      if ((b >> t) & 1) gained = gained + angles[t];
    phase.extra = phase.extra + gained;
  }
  return out;
}

LogicalBasis apply_diagonal(const LogicalBasis& basis, const AngleVector& angles) {
  LogicalBasis out = basis;
  for (SparseCodeword& s : out.states) s = apply_diagonal(s, angles);
  return out;
}

LogicalAction extract_logical_action(const LogicalBasis& before, const LogicalBasis& after) {
  if (before.states.size() != after.states.size())
    throw std::invalid_argument("extract_logical_action: basis size mismatch");
  LogicalAction action;
  action.preserved = true;
  for (std::size_t m = 0; m < before.states.size(); ++m) {
    const SparseCodeword& b = before.states[m];
    const SparseCodeword& a = after.states[m];
    if (a.support.size() != b.support.size())
      throw std::invalid_argument("extract_logical_action: support mismatch (not a diagonal image)");
    std::optional<RationalAngle> phase;
    for (auto itb = b.support.begin(), ita = a.support.begin(); itb != b.support.end();
         ++itb, ++ita) {
      if (ita->first != itb->first)
        throw std::invalid_argument("extract_logical_action: support mismatch (not a diagonal image)");
      RationalAngle r = ita->second.total() - itb->second.total();
      if (!phase) {
        phase = r;
      } else if (*phase != r) {
        action.preserved = false;
        action.witness_state = m;
        action.witness_element = ita->first;
        return action;
      }
    }
    action.phases.push_back(*phase);
  }
  for (const RationalAngle& p : action.phases) {
    action.phases_rel.push_back(p - action.phases[0]);
    if (!(p - action.phases[0]).is_zero()) action.nontrivial = true;
  }
  return action;
}

bool membership_check(const SparseCodeword& state, const StabilizerCode& code) {
  if (state.n != code.n) throw std::invalid_argument("membership_check: dimension mismatch");
  for (const PauliString& g : code.generators)
    if (!(apply_pauli(state, g) == state)) return false;
  return true;
}

RationalAngle pair_phase(std::uint64_t u, std::uint64_t v, std::size_t n,
                         const DiagonalGate2Q& gate) {
  std::uint64_t mask = n_bit_mask(n);
  long c11 = std::popcount(u & v & mask);
  long c10 = std::popcount(u & mask) - c11;
  long c01 = std::popcount(v & mask) - c11;
  long c00 = static_cast<long>(n) - c01 - c10 - c11;
  return gate.theta00.times(c00) + gate.theta01.times(c01) + gate.theta10.times(c10) +
         gate.theta11.times(c11);
}

TwoBlockPhases apply_diagonal_2q(const LogicalBasis& a, const LogicalBasis& b,
                                 const DiagonalGate2Q& gate) {
  if (a.n != b.n || a.k != b.k)
    throw std::invalid_argument("apply_diagonal_2q: blocks must carry the same code");
  TwoBlockPhases out;
  out.k = a.k;
  const std::size_t sectors = std::size_t(1) << a.k;
  out.pairs.resize(sectors * sectors);
  for (std::size_t ma = 0; ma < sectors; ++ma)
    for (std::size_t mb = 0; mb < sectors; ++mb) {
      auto& slot = out.pairs[ma * sectors + mb];
      for (const auto& [u, pu] : a.states[ma].support)
        for (const auto& [v, pv] : b.states[mb].support)
          slot.emplace(std::make_pair(u, v), pair_phase(u, v, a.n, gate));
    }
  return out;
}

TwoBlockAction two_block_logical_action(const LogicalBasis& a, const LogicalBasis& b,
                                        const DiagonalGate2Q& gate) {
  if (a.n != b.n || a.k != b.k)
    throw std::invalid_argument("two_block_logical_action: blocks must carry the same code");
  TwoBlockAction action;
  action.preserved = true;
  const std::size_t sectors = std::size_t(1) << a.k;
  for (std::size_t ma = 0; ma < sectors; ++ma)
    for (std::size_t mb = 0; mb < sectors; ++mb) {
      std::optional<RationalAngle> phase;
      for (const auto& [u, pu] : a.states[ma].support) {
        for (const auto& [v, pv] : b.states[mb].support) {
          RationalAngle r = pair_phase(u, v, a.n, gate);
          if (!phase) {
            phase = r;
          } else if (*phase != r) {
            action.preserved = false;
            action.witness_sectors = {ma, mb};
            return action;
          }
        }
      }
      action.phases.push_back(*phase);
    }
  for (const RationalAngle& p : action.phases) {
    action.phases_rel.push_back(p - action.phases[0]);
    if (!(p - action.phases[0]).is_zero()) action.nontrivial = true;
  }
  return action;
}

}  // namespace transversal
