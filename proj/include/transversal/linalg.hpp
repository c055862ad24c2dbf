#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace transversal {

using Int = mpz_class;
using Rational = mpq_class;

/*
 * Fixed-length bit vector packed into 64-bit words.
 * Out-of-range access throws; mixing lengths in binary ops throws.
 */
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : nbits_(length), words_((length + 63) / 64, 0) {}

  // Parse from a string of '0'/'1' characters.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return nbits_; }

  bool get(std::size_t i) const;
  void set(std::size_t i, bool v);

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  bool operator==(const BitVector&) const = default;

  std::size_t popcount() const;
  bool any() const;

  // Parity of |this & other|; the workhorse of symplectic products.
  bool parity_and(const BitVector& other) const;

  // The vector as a single word; requires size() <= 64.
  std::uint64_t as_u64() const;

  std::string str() const;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t weight(const BitVector& v) { return v.popcount(); }

// XOR-fold of a sequence of equal-length vectors. The empty fold needs an
// explicit length and yields the zero vector.
BitVector xor_fold(std::span<const BitVector> vs);
BitVector xor_fold(std::span<const BitVector> vs, std::size_t length_if_empty);

// AND-fold; the sequence must be non-empty.
BitVector wedge_fold(std::span<const BitVector> vs);

// |v1 ^ ... ^ vm| evaluated as sum_i |v_i| - 2 sum_{i<j} |v_i & v_j| + ...
// + (-2)^{m-1} |v_1 & ... & v_m|, i.e. without forming the XOR. Cost is
// 2^m; m > 20 is a hard error.
std::int64_t xor_weight_by_inclusion_exclusion(std::span<const BitVector> vs);

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
  explicit BitMatrix(std::vector<BitVector> rows);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }

  const BitVector& row(std::size_t i) const { return rows_.at(i); }
  BitVector& row(std::size_t i) { return rows_.at(i); }
  const std::vector<BitVector>& rows() const { return rows_; }

  void append_row(const BitVector& r);

  bool has_zero_column() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

// Rank over GF(2); the input is copied, not modified.
std::size_t gf2_rank(const BitMatrix& m);

// Basis of the right nullspace {v : M v = 0}, one vector per row.
BitMatrix gf2_nullspace(const BitMatrix& m);

// Is v in the GF(2) row space of m?
bool gf2_in_rowspace(const BitMatrix& m, const BitVector& v);

/*
 * Dense matrix of exact rationals. Entries are always stored reduced
 * (mpq_class canonicalizes on assignment).
 */
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows, std::vector<Rational>(cols, Rational(0))) {}

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return rows_.empty() ? 0 : rows_[0].size(); }

  Rational& at(std::size_t r, std::size_t c) { return rows_.at(r).at(c); }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }

  void append_row(std::vector<Rational> row);

 private:
  std::vector<std::vector<Rational>> rows_;
};

/*
 * Complete solution set of A x = b over the rationals: one particular
 * solution plus a basis of the homogeneous nullspace. Every returned
 * vector substitutes back with zero residual.
 */
struct AffineSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> nullspace;
};

// Exact Gaussian elimination. Returns std::nullopt iff the system is
// inconsistent (distinct from a unique solution, which has an empty
// nullspace).
std::optional<AffineSolution> rational_solve_affine(const RationalMatrix& a,
                                                    const std::vector<Rational>& b);

}  // namespace transversal
