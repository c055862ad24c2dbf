#include "transversal/linalg.hpp"

#include <bit>
#include <stdexcept>

namespace transversal {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitVector::from_string: expected only '0'/'1'");
    }
  }
  return v;
}

bool BitVector::get(std::size_t i) const {
  if (i >= nbits_) throw std::out_of_range("BitVector::get: index out of range");
  return (words_[i / 64] >> (i % 64)) & 1u;
}

void BitVector::set(std::size_t i, bool v) {
  if (i >= nbits_) throw std::out_of_range("BitVector::set: index out of range");
  std::uint64_t mask = std::uint64_t(1) << (i % 64);
  if (v) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (nbits_ != other.nbits_) throw std::invalid_argument("BitVector: length mismatch in xor");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (nbits_ != other.nbits_) throw std::invalid_argument("BitVector: length mismatch in and");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool BitVector::any() const {
  for (std::uint64_t w : words_)
    if (w) return true;
  return false;
}

bool BitVector::parity_and(const BitVector& other) const {
  if (nbits_ != other.nbits_) throw std::invalid_argument("BitVector: length mismatch in parity_and");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::uint64_t BitVector::as_u64() const {
  if (nbits_ > 64) throw std::invalid_argument("BitVector::as_u64: vector wider than 64 bits");
  return words_.empty() ? 0 : words_[0];
}

std::string BitVector::str() const {
  std::string s(nbits_, '0');
  for (std::size_t i = 0; i < nbits_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitVector xor_fold(std::span<const BitVector> vs) {
  if (vs.empty()) throw std::invalid_argument("xor_fold: empty sequence needs an explicit length");
  BitVector acc = vs[0];
  for (std::size_t i = 1; i < vs.size(); ++i) acc ^= vs[i];
  return acc;
}

BitVector xor_fold(std::span<const BitVector> vs, std::size_t length_if_empty) {
  if (vs.empty()) return BitVector(length_if_empty);
  return xor_fold(vs);
}

BitVector wedge_fold(std::span<const BitVector> vs) {
  if (vs.empty()) throw std::invalid_argument("wedge_fold: empty sequence");
  BitVector acc = vs[0];
  for (std::size_t i = 1; i < vs.size(); ++i) acc &= vs[i];
  return acc;
}

std::int64_t xor_weight_by_inclusion_exclusion(std::span<const BitVector> vs) {
  if (vs.empty()) throw std::invalid_argument("xor_weight_by_inclusion_exclusion: empty sequence");
  if (vs.size() > 20)
    throw std::invalid_argument("xor_weight_by_inclusion_exclusion: more than 20 rows (cost 2^m)");
  for (const BitVector& v : vs)
    if (v.size() != vs[0].size())
      throw std::invalid_argument("xor_weight_by_inclusion_exclusion: length mismatch");

  std::int64_t total = 0;
  const std::uint32_t full = std::uint32_t(1) << vs.size();
  for (std::uint32_t subset = 1; subset < full; ++subset) {
    BitVector acc;
    bool first = true;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!((subset >> i) & 1)) continue;
      if (first) {
        acc = vs[i];
        first = false;
      } else {
        acc &= vs[i];
      }
    }
    int m = std::popcount(subset);
    // term: (-2)^{m-1} |wedge|
    std::int64_t coeff = (m % 2 == 1) ? 1 : -1;
    coeff <<= (m - 1);
    total += coeff * static_cast<std::int64_t>(acc.popcount());
  }
  return total;
}

BitMatrix::BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
  if (!rows_.empty()) {
    cols_ = rows_[0].size();
    for (const BitVector& r : rows_)
      if (r.size() != cols_) throw std::invalid_argument("BitMatrix: ragged rows");
  }
}

void BitMatrix::append_row(const BitVector& r) {
  if (rows_.empty()) {
    cols_ = r.size();
  } else if (r.size() != cols_) {
    throw std::invalid_argument("BitMatrix::append_row: width mismatch");
  }
  rows_.push_back(r);
}

bool BitMatrix::has_zero_column() const {
  if (rows_.empty()) return cols_ > 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    bool seen = false;
    for (const BitVector& r : rows_)
      if (r.get(c)) {
        seen = true;
        break;
      }
    if (!seen) return true;
  }
  return false;
}

namespace {

// In-place row echelon over GF(2); returns rank and records pivot columns.
std::size_t gf2_echelon(std::vector<BitVector>& rows, std::size_t cols,
                        std::vector<std::size_t>* pivot_cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && !rows[pivot].get(c)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t gf2_rank(const BitMatrix& m) {
  std::vector<BitVector> rows = m.rows();
  return gf2_echelon(rows, m.col_count(), nullptr);
}

BitMatrix gf2_nullspace(const BitMatrix& m) {
  std::vector<BitVector> rows = m.rows();
  std::vector<std::size_t> pivots;
  std::size_t rank = gf2_echelon(rows, m.col_count(), &pivots);

  std::vector<bool> is_pivot(m.col_count(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  BitMatrix basis;
  for (std::size_t c = 0; c < m.col_count(); ++c) {
    if (is_pivot[c]) continue;
    BitVector v(m.col_count());
    v.set(c, true);
    for (std::size_t r = 0; r < rank; ++r)
      if (rows[r].get(c)) v.set(pivots[r], true);
    basis.append_row(v);
  }
  return basis;
}

bool gf2_in_rowspace(const BitMatrix& m, const BitVector& v) {
  std::vector<BitVector> rows = m.rows();
  std::size_t rank = gf2_echelon(rows, m.col_count(), nullptr);
  rows.resize(rank);
  rows.push_back(v);
  return gf2_echelon(rows, m.col_count(), nullptr) == rank;
}

void RationalMatrix::append_row(std::vector<Rational> row) {
  if (!rows_.empty() && row.size() != rows_[0].size())
    throw std::invalid_argument("RationalMatrix::append_row: width mismatch");
  rows_.push_back(std::move(row));
}

std::optional<AffineSolution> rational_solve_affine(const RationalMatrix& a,
                                                    const std::vector<Rational>& b) {
  const std::size_t rows = a.row_count();
  const std::size_t cols = a.col_count();
  if (b.size() != rows)
    throw std::invalid_argument("rational_solve_affine: right-hand side length mismatch");

  // Augmented matrix [A | b], reduced to RREF.
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = a.at(r, c);
    m[r][cols] = b[r];
  }

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    Rational inv = 1 / m[rank][c];
    for (std::size_t j = c; j <= cols; ++j) m[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivots.push_back(c);
    ++rank;
  }

  for (std::size_t r = rank; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  AffineSolution sol;
  sol.particular.assign(cols, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) sol.particular[pivots[r]] = m[r][cols];

  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[c] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivots[r]] = -m[r][c];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace transversal
