#include "transversal/analysis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace transversal {

namespace {

std::uint64_t n_bit_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
}

/*
 * Per-qubit phase functional F(b) = sum_t P_t b_t evaluated mod 2Q,
 * where theta_t = P_t / Q over the common denominator Q. Values stay in
 * int64 whenever 2Q is small enough for the worst-case sum; otherwise
 * the evaluation falls back to exact big integers.
 */
class PhaseFunctional {
 public:
  PhaseFunctional(const AngleVector& angles, std::size_t n) : n_(n) {
    Int q_common = 1;
    for (const RationalAngle& a : angles)
      mpz_lcm(q_common.get_mpz_t(), q_common.get_mpz_t(), a.denominator().get_mpz_t());
    q_ = q_common;
    two_q_ = 2 * q_common;
    nums_.reserve(angles.size());
    for (const RationalAngle& a : angles) nums_.push_back(a.numerator() * (q_common / a.denominator()));
    uniform_ = std::all_of(angles.begin(), angles.end(),
                           [&](const RationalAngle& a) { return a == angles[0]; });
    // Worst-case |sum| <= n * 2Q once components are reduced mod 2Q.
    small_ = two_q_.fits_slong_p() && two_q_.get_si() > 0 &&
             two_q_.get_si() < (std::int64_t(1) << 50) / std::max<std::int64_t>(1, n_);
    if (small_) {
      two_q_small_ = two_q_.get_si();
      for (const Int& p : nums_) {
        Int r = ((p % two_q_) + two_q_) % two_q_;
        nums_small_.push_back(r.get_si());
      }
    }
  }

  const Int& q() const { return q_; }
  const Int& two_q() const { return two_q_; }

  // F(b) mod 2Q, in [0, 2Q).
  Int eval(std::uint64_t b) const {
    if (small_) {
      std::int64_t acc = 0;
      if (uniform_) {
        acc = (nums_small_.empty() ? 0 : nums_small_[0]) *
              static_cast<std::int64_t>(std::popcount(b));
      } else {
        std::uint64_t rest = b;
        while (rest) {
          int t = std::countr_zero(rest);
          rest &= rest - 1;
          acc += nums_small_[t];
        }
      }
      return Int(((acc % two_q_small_) + two_q_small_) % two_q_small_);
    }
    Int acc = 0;
    std::uint64_t rest = b;
    while (rest) {
      int t = std::countr_zero(rest);
      rest &= rest - 1;
      acc += nums_[t];
    }
    acc %= two_q_;
    if (acc < 0) acc += two_q_;
    return acc;
  }

  // F(b)/Q as an angle in [0, 2).
  RationalAngle angle(std::uint64_t b) const {
    return RationalAngle::normalized(eval(b), q_);
  }

 private:
  std::size_t n_;
  Int q_, two_q_;
  std::vector<Int> nums_;
  bool uniform_ = false;
  bool small_ = false;
  std::int64_t two_q_small_ = 0;
  std::vector<std::int64_t> nums_small_;
};

std::vector<std::size_t> mask_to_subset(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// xs[mask] = XOR of the X substrings selected by mask, as 64-bit strings.
std::vector<std::uint64_t> x_part_table(const std::vector<PauliString>& generators) {
  std::vector<std::uint64_t> xs(std::uint64_t(1) << generators.size(), 0);
  for (std::uint64_t mask = 1; mask < xs.size(); ++mask) {
    int low = std::countr_zero(mask);
    xs[mask] = xs[mask & (mask - 1)] ^ generators[low].x_bits.as_u64();
  }
  return xs;
}

std::vector<std::uint64_t> sector_offsets(const StabilizerCode& code) {
  std::vector<PauliString> ops = sector_offset_operators(code);
  std::vector<std::uint64_t> offsets(std::uint64_t(1) << code.k, 0);
  for (std::uint64_t m = 1; m < offsets.size(); ++m) {
    int low = std::countr_zero(m);
    offsets[m] = offsets[m & (m - 1)] ^ ops[low].x_bits.as_u64();
  }
  return offsets;
}

void require_group_cap(const StabilizerCode& code, const EngineOptions& opts) {
  if (code.n > 64) throw std::invalid_argument("engine: n exceeds 64");
  if (static_cast<int>(code.n - code.k) > opts.group_cap)
    throw std::invalid_argument("engine: n-k exceeds group cap " + std::to_string(opts.group_cap));
}

}  // namespace

Verdict check_mixed(const StabilizerCode& code, const AngleVector& angles,
                    const EngineOptions& opts) {
  if (angles.size() != code.n) throw std::invalid_argument("check_mixed: angle vector length");
  require_group_cap(code, opts);

  Verdict verdict;
  for (std::size_t t = 0; t < angles.size(); ++t)
    if (angles[t].is_zero()) verdict.identity_qubits.push_back(t);

  PhaseFunctional f(angles, code.n);
  std::vector<std::uint64_t> xs = x_part_table(code.generators);
  std::vector<std::uint64_t> offsets = sector_offsets(code);

  std::vector<RationalAngle> phases;
  for (std::uint64_t sector = 0; sector < offsets.size(); ++sector) {
    Int base = f.eval(offsets[sector]);
    for (std::uint64_t mask = 1; mask < xs.size(); ++mask) {
      Int v = f.eval(offsets[sector] ^ xs[mask]);
      if (v != base) {
        ConstraintWitness w;
        w.generator_subset = mask_to_subset(mask);
        if (sector != 0) w.logical_sector = static_cast<unsigned>(sector);
        Int diff = v - base;
        diff %= f.two_q();
        if (diff < 0) diff += f.two_q();
        w.observed_value = diff;
        w.required_modulus = f.two_q();
        w.condition = sector == 0
                          ? "stabilizer coset phase varies: sum_t theta_t x_t(S) != 0 (mod 2)"
                          : "logical sector phase varies over its stabilizer coset";
        verdict.witness = std::move(w);
        return verdict;
      }
    }
    phases.push_back(f.angle(offsets[sector]));
  }

  // Commutation with the chosen logical Z operators: theta . x(Z_L) must
  // vanish mod 2 or the gate moves between Z_L eigenspaces.
  for (std::size_t j = 0; j < code.logical_z.size(); ++j) {
    Int v = f.eval(code.logical_z[j].x_bits.as_u64());
    if (v != 0) {
      ConstraintWitness w;
      w.logical_sector = std::nullopt;
      w.observed_value = v;
      w.required_modulus = f.two_q();
      w.condition = "theta . x(logical_z[" + std::to_string(j) + "]) != 0 (mod 2)";
      verdict.witness = std::move(w);
      return verdict;
    }
  }

  verdict.preserves_codespace = true;
  verdict.logical_diagonal = std::move(phases);
  for (const RationalAngle& p : verdict.logical_diagonal)
    if (!p.is_zero()) verdict.nontrivial = true;
  return verdict;
}

Verdict group_enumeration_check(const StabilizerCode& code, const DiagonalGate1Q& gate,
                                const EngineOptions& opts) {
  return check_mixed(code, uniform_angles(code.n, gate.relative()), opts);
}

WedgeOutcome wedge_conditions_css(const CSSView& view, const RationalAngle& theta) {
  if (!view.z_detecting)
    throw std::invalid_argument(
        "wedge_conditions_css: X submatrix has a zero column (trivial code)");

  WedgeOutcome out;
  const Int p = theta.numerator();
  const Int q = theta.denominator();
  const Int modulus = 2 * q;
  const std::optional<int> dyadic = theta.dyadic_exponent();
  const std::size_t rows = view.gx_rows.row_count();

  // Walks all subsets of the gx rows in lexicographic order, smallest
  // order first; `extra` wedges in a fixed sector row (logical ladder) and
  // shifts the coefficient exponent by one.
  auto run_ladder = [&](const BitVector* extra,
                        std::optional<unsigned> sector) -> std::optional<ConstraintWitness> {
    for (std::size_t order = 1; order <= rows; ++order) {
      int coeff_exp = static_cast<int>(order) - 1 + (extra ? 1 : 0);
      if (dyadic && coeff_exp > *dyadic) break;  // conditions of this order are automatic
      std::vector<std::size_t> idx(order);
      for (std::size_t i = 0; i < order; ++i) idx[i] = i;
      while (true) {
        BitVector wedge = view.gx_rows.row(idx[0]);
        for (std::size_t i = 1; i < order; ++i) wedge &= view.gx_rows.row(idx[i]);
        if (extra) wedge &= *extra;
        Int observed = (Int(1) << coeff_exp) * p * Int(static_cast<long>(wedge.popcount()));
        if (observed % modulus != 0) {
          ConstraintWitness w;
          for (std::size_t i : idx) w.generator_subset.push_back(view.x_generator_indices[i]);
          w.logical_sector = sector;
          w.observed_value = observed;
          w.required_modulus = modulus;
          w.condition = "2^" + std::to_string(coeff_exp) + " p |wedge| != 0 (mod 2q)" +
                        (sector ? " on a logical sector row" : "");
          return w;
        }
        // next lex combination
        std::size_t i = order;
        while (i > 0 && idx[i - 1] == rows - order + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < order; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    return std::nullopt;
  };

  if (auto w = run_ladder(nullptr, std::nullopt)) {
    out.witness = std::move(w);
    return out;
  }

  const std::size_t k = view.x_logicals.row_count();
  std::vector<RationalAngle> phases(std::size_t(1) << k);
  for (std::uint64_t sector = 1; sector < (std::uint64_t(1) << k); ++sector) {
    BitVector g_sector(view.gx_rows.col_count());
    for (std::size_t j = 0; j < k; ++j)
      if ((sector >> j) & 1) g_sector ^= view.x_logicals.row(j);
    if (auto w = run_ladder(&g_sector, static_cast<unsigned>(sector))) {
      out.witness = std::move(w);
      return out;
    }
    phases[sector] =
        RationalAngle::from_rational(theta.value() * Rational(static_cast<long>(g_sector.popcount())));
  }

  out.satisfied = true;
  out.sector_phases = std::move(phases);
  for (const RationalAngle& ph : out.sector_phases)
    if (!ph.is_zero()) out.nontrivial = true;
  return out;
}

namespace {

struct Evaluation {
  bool preserved = false;
  std::vector<RationalAngle> phases;
  bool nontrivial = false;
  std::optional<ConstraintWitness> witness;
};

std::string angle_tag(const RationalAngle& theta) { return "theta = " + theta.str(); }

// Runs whichever engines apply and insists they agree.
Evaluation evaluate_uniform(const StabilizerCode& code, const std::optional<CSSView>& css,
                            bool group_ok, const RationalAngle& theta, const EngineOptions& opts,
                            bool* wedge_used, bool* group_used) {
  std::optional<WedgeOutcome> wedge;
  std::optional<Verdict> group;
  if (css) {
    wedge = wedge_conditions_css(*css, theta);
    if (wedge_used) *wedge_used = true;
  }
  if (group_ok) {
    group = group_enumeration_check(code, DiagonalGate1Q(theta), opts);
    if (group_used) *group_used = true;
  }
  if (wedge && group) {
    if (wedge->satisfied != group->preserves_codespace)
      throw EngineDisagreement("wedge and group engines disagree at " + angle_tag(theta));
    if (wedge->satisfied && wedge->sector_phases != group->logical_diagonal)
      throw EngineDisagreement("wedge and group engines report different logical phases at " +
                               angle_tag(theta));
  }
  Evaluation ev;
  if (group) {
    ev.preserved = group->preserves_codespace;
    ev.phases = group->logical_diagonal;
    ev.nontrivial = group->nontrivial;
    ev.witness = group->witness;
  } else {
    ev.preserved = wedge->satisfied;
    ev.phases = wedge->sector_phases;
    ev.nontrivial = wedge->nontrivial;
    ev.witness = wedge->witness;
  }
  return ev;
}

}  // namespace

OverlapReport classify(const StabilizerCode& code, int q_sweep_cap, const EngineOptions& opts) {
  if (std::vector<Violation> v = validate(code); !v.empty())
    throw std::invalid_argument("classify: invalid code: " + v.front().message);

  BitMatrix x_parts;
  for (const PauliString& g : code.generators) x_parts.append_row(g.x_bits);
  if (x_parts.row_count() == 0) x_parts = BitMatrix(0, code.n);
  if (x_parts.has_zero_column())
    throw std::invalid_argument(
        "classify: trivial code (a qubit carries no X support in any generator)");
  if (code.n <= 12 && distance_bruteforce(code) < 2)
    throw std::invalid_argument("classify: distance-1 code");

  std::optional<CSSView> css = css_view(code);
  bool group_ok = code.n <= 64 && static_cast<int>(code.n - code.k) <= opts.group_cap;
  if (!css && !group_ok)
    throw std::invalid_argument("classify: not CSS and group enumeration exceeds its cap");

  OverlapReport report;
  report.q_sweep_cap = q_sweep_cap;

  auto evaluate = [&](const RationalAngle& theta) {
    return evaluate_uniform(code, css, group_ok, theta, opts, &report.wedge_used,
                            &report.group_used);
  };

  Evaluation at_k = evaluate(RationalAngle::normalized(1, 1));
  if (!at_k.preserved)
    throw std::runtime_error("classify: even Z(1) is inadmissible for this code");

  int k = 0;
  while (true) {
    if (k > 62) throw std::logic_error("classify: k_max failed to terminate");
    Evaluation next = evaluate(RationalAngle::normalized(1, Int(1) << (k + 1)));
    if (!next.preserved) {
      report.violation_at_next = std::move(*next.witness);
      break;
    }
    at_k = std::move(next);
    ++k;
  }
  report.k_max = k;
  report.theta_at_k_max = RationalAngle::normalized(1, Int(1) << k);
  report.logical_action = at_k.phases;
  report.nontrivial = at_k.nontrivial;

  report.odd_all_rejected = true;
  for (long q = 3; q <= q_sweep_cap; ++q) {
    long odd = q;
    while (odd % 2 == 0) odd /= 2;
    if (odd == 1) continue;
    for (long p = 1; p < 2 * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      RationalAngle theta = RationalAngle::normalized(p, q);
      Evaluation ev = evaluate(theta);
      if (ev.preserved) {
        report.odd_all_rejected = false;
        continue;
      }
      report.odd_witnesses.push_back({Int(q), Int(p), std::move(*ev.witness)});
    }
  }
  return report;
}

std::pair<StabilizerCode, AngleVector> decompress(const StabilizerCode& code, std::size_t qubit,
                                                  int m, const AngleVector& angles) {
  if (m < 2) throw std::invalid_argument("decompress: m must be at least 2");
  if (qubit >= code.n) throw std::invalid_argument("decompress: qubit index out of range");
  if (angles.size() != code.n) throw std::invalid_argument("decompress: angle vector length");

  const std::size_t n2 = code.n + m - 1;
  auto mapped = [&](std::size_t t) { return t < qubit ? t : t + m - 1; };

  // X support is copied onto all m copies; Z support stays on the first
  // copy, so every commutation relation is preserved and Y letters become
  // Y X ... X with no phase adjustment.
  auto transform = [&](const PauliString& p) {
    PauliString out(n2);
    out.phase_exp = p.phase_exp;
    for (std::size_t t = 0; t < code.n; ++t) {
      bool x = p.x_bits.get(t), z = p.z_bits.get(t);
      if (t != qubit) {
        out.x_bits.set(mapped(t), x);
        out.z_bits.set(mapped(t), z);
      } else {
        for (int c = 0; c < m; ++c) out.x_bits.set(qubit + c, x);
        out.z_bits.set(qubit, z);
      }
    }
    return out;
  };

  StabilizerCode out;
  out.n = n2;
  out.k = code.k;
  out.name = code.name.empty() ? "" : code.name + "-split";
  for (const PauliString& g : code.generators) out.generators.push_back(transform(g));
  for (int c = 0; c + 1 < m; ++c) {
    PauliString zz(n2);
    zz.z_bits.set(qubit + c, true);
    zz.z_bits.set(qubit + c + 1, true);
    out.generators.push_back(zz);
  }
  for (const PauliString& l : code.logical_x) out.logical_x.push_back(transform(l));
  for (const PauliString& l : code.logical_z) out.logical_z.push_back(transform(l));

  if (std::vector<Violation> v = validate(out); !v.empty())
    throw std::logic_error("decompress: produced an invalid code: " + v.front().message);

  AngleVector ordered(n2);
  RationalAngle split = RationalAngle::from_rational(angles[qubit].value() / Rational(m));
  for (std::size_t t = 0; t < code.n; ++t) {
    if (t != qubit) {
      ordered[mapped(t)] = angles[t];
    } else {
      for (int c = 0; c < m; ++c) ordered[qubit + c] = split;
    }
  }
  return {std::move(out), std::move(ordered)};
}

ConversionVerdict check_conversion(const StabilizerCode& source, const StabilizerCode& target,
                                   const DiagonalGate1Q& gate, const EngineOptions& opts) {
  if (source.n != target.n || source.k != target.k)
    throw std::invalid_argument("check_conversion: source/target dimension mismatch");
  if (std::vector<Violation> v = validate(target); !v.empty())
    throw std::invalid_argument("check_conversion: invalid target: " + v.front().message);

  LogicalBasis basis = build_logical_basis(source, opts.group_cap);
  AngleVector angles = uniform_angles(source.n, gate.relative());
  LogicalBasis after = apply_diagonal(basis, angles);

  ConversionVerdict verdict;
  verdict.preserves = true;
  for (const SparseCodeword& state : after.states)
    if (!membership_check(state, target)) {
      verdict.preserves = false;
      break;
    }

  LogicalBasis four = basis;
  for (int i = 0; i < 4; ++i) four = apply_diagonal(four, angles);
  verdict.d4_preserves_source = extract_logical_action(basis, four).preserved;

  LogicalAction action = extract_logical_action(basis, after);
  verdict.phase_uniform = action.preserved;
  verdict.state_phases = action.phases;
  verdict.witness_state = action.witness_state;
  return verdict;
}

TwoQubitReport two_qubit_family(const OverlapReport& single_block) {
  if (single_block.k_max < 1)
    throw std::invalid_argument("two_qubit_family: requires k_max >= 1");
  TwoQubitReport r;
  r.k = single_block.k_max;
  r.theta01_step = RationalAngle::normalized(1, Int(1) << r.k);
  r.theta10_step = r.theta01_step;
  r.theta11_prime_step = RationalAngle::normalized(1, Int(1) << (r.k - 1));
  r.representative.theta01 = r.theta01_step;
  r.representative.theta10 = r.theta10_step;
  r.representative.theta11 = r.theta01_step + r.theta10_step + r.theta11_prime_step;
  return r;
}

bool gate_in_two_qubit_family(const DiagonalGate2Q& gate, int k) {
  DiagonalGate2Q g = gate.normalized();
  auto e01 = g.theta01.dyadic_exponent();
  auto e10 = g.theta10.dyadic_exponent();
  auto e11p = g.theta11_prime().dyadic_exponent();
  return e01 && *e01 <= k && e10 && *e10 <= k && e11p && *e11p <= std::max(0, k - 1);
}

TwoQubitVerdict check_two_qubit(const StabilizerCode& code, const DiagonalGate2Q& gate,
                                const EngineOptions& opts) {
  if (code.n > 64) throw std::invalid_argument("check_two_qubit: n exceeds 64");
  if (static_cast<int>(2 * (code.n - code.k)) > opts.pair_cap)
    throw std::invalid_argument("check_two_qubit: 2(n-k) exceeds pair cap " +
                                std::to_string(opts.pair_cap));

  DiagonalGate2Q g = gate.normalized();
  // Common denominator across the three nonzero entries.
  Int q_common = 1;
  for (const RationalAngle* a : {&g.theta01, &g.theta10, &g.theta11})
    mpz_lcm(q_common.get_mpz_t(), q_common.get_mpz_t(), a->denominator().get_mpz_t());
  const Int two_q = 2 * q_common;
  const Int n01 = g.theta01.numerator() * (q_common / g.theta01.denominator());
  const Int n10 = g.theta10.numerator() * (q_common / g.theta10.denominator());
  const Int n11 = g.theta11.numerator() * (q_common / g.theta11.denominator());

  std::vector<std::uint64_t> xs = x_part_table(code.generators);
  std::vector<std::uint64_t> offsets = sector_offsets(code);
  const std::uint64_t mask = n_bit_mask(code.n);

  auto value = [&](std::uint64_t u, std::uint64_t v) {
    long c11 = std::popcount(u & v & mask);
    long c10 = std::popcount(u & mask) - c11;
    long c01 = std::popcount(v & mask) - c11;
    Int acc = n01 * c01 + n10 * c10 + n11 * c11;
    acc %= two_q;
    if (acc < 0) acc += two_q;
    return acc;
  };

  TwoQubitVerdict verdict;
  std::vector<RationalAngle> phases;
  for (std::uint64_t sa = 0; sa < offsets.size(); ++sa)
    for (std::uint64_t sb = 0; sb < offsets.size(); ++sb) {
      Int base = value(offsets[sa], offsets[sb]);
      for (std::uint64_t ma = 0; ma < xs.size(); ++ma)
        for (std::uint64_t mb = 0; mb < xs.size(); ++mb) {
          Int v = value(offsets[sa] ^ xs[ma], offsets[sb] ^ xs[mb]);
          if (v != base) {
            ConstraintWitness w;
            w.generator_subset = mask_to_subset(ma);
            std::vector<std::size_t> b_subset = mask_to_subset(mb);
            for (std::size_t i : b_subset) w.generator_subset.push_back(i);  // block B half
            w.logical_sector = static_cast<unsigned>(sa * offsets.size() + sb);
            Int diff = v - base;
            diff %= two_q;
            if (diff < 0) diff += two_q;
            w.observed_value = diff;
            w.required_modulus = two_q;
            w.condition = "pair phase varies over the sector-pair coset (blocks A mask " +
                          std::to_string(ma) + ", B mask " + std::to_string(mb) + ")";
            verdict.witness = std::move(w);
            return verdict;
          }
        }
      phases.push_back(RationalAngle::normalized(base, q_common));
    }

  // Logical Z commutation on each block.
  for (std::size_t j = 0; j < code.logical_z.size(); ++j) {
    std::uint64_t xz = code.logical_z[j].x_bits.as_u64();
    for (bool block_a : {true, false}) {
      Int v = block_a ? value(xz, 0) : value(0, xz);
      if (v != 0) {
        ConstraintWitness w;
        w.observed_value = v;
        w.required_modulus = two_q;
        w.condition = std::string("pair phase of x(logical_z) on block ") +
                      (block_a ? "A" : "B") + " != 0 (mod 2)";
        verdict.witness = std::move(w);
        return verdict;
      }
    }
  }

  verdict.preserves_codespace = true;
  verdict.logical_diagonal = std::move(phases);
  for (const RationalAngle& p : verdict.logical_diagonal)
    if (!p.is_zero()) verdict.nontrivial = true;
  return verdict;
}

IrrationalReport irrational_admissibility(const StabilizerCode& code, const EngineOptions& opts) {
  if (code.n > 64) throw std::invalid_argument("irrational_admissibility: n exceeds 64");
  if (static_cast<int>(code.n - code.k) > opts.irrational_cap)
    throw std::invalid_argument("irrational_admissibility: n-k exceeds cap " +
                                std::to_string(opts.irrational_cap));
  BitMatrix x_parts;
  for (const PauliString& g : code.generators) x_parts.append_row(g.x_bits);
  if (x_parts.row_count() == 0) x_parts = BitMatrix(0, code.n);
  if (x_parts.has_zero_column())
    throw std::invalid_argument(
        "irrational_admissibility: the X substring matrix has a zero column (trivial code, "
        "outside the hypothesis)");

  std::vector<std::uint64_t> xs = x_part_table(code.generators);
  std::set<std::uint64_t> distinct(xs.begin(), xs.end());
  std::vector<std::uint64_t> offsets = sector_offsets(code);

  const std::size_t sectors = offsets.size();
  const std::size_t unknowns = code.n + (sectors - 1);  // thetas, then t_sector
  RationalMatrix a;
  std::vector<Rational> rhs;
  auto emit_row = [&](std::uint64_t support, std::optional<std::size_t> sector) {
    std::vector<Rational> row(unknowns, Rational(0));
    for (std::size_t t = 0; t < code.n; ++t)
      if ((support >> t) & 1) row[t] = 1;
    if (sector) row[code.n + *sector - 1] = -1;
    a.append_row(std::move(row));
    rhs.push_back(Rational(0));
  };

  for (std::uint64_t v : distinct) emit_row(v, std::nullopt);
  for (std::size_t sector = 1; sector < sectors; ++sector)
    for (std::uint64_t v : distinct) emit_row(offsets[sector] ^ v, sector);

  std::optional<AffineSolution> sol = rational_solve_affine(a, rhs);
  if (!sol) throw std::logic_error("irrational_admissibility: homogeneous system infeasible");

  IrrationalReport report;
  report.nullspace_dimension = sol->nullspace.size();
  report.logical_phase_forced_zero = true;
  for (const std::vector<Rational>& vec : sol->nullspace)
    for (std::size_t s = 0; s + 1 < sectors; ++s)
      if (vec[code.n + s] != 0) report.logical_phase_forced_zero = false;
  return report;
}

}  // namespace transversal
