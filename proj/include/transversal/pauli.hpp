#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "transversal/linalg.hpp"

namespace transversal {

/*
 * n-qubit Pauli string in binary symplectic form. Qubit t carries
 * I/X/Y/Z according to (x_t, z_t) = (0,0)/(1,0)/(1,1)/(0,1), and the
 * operator is i^phase_exp times the tensor product of those letters.
 */
struct PauliString {
  std::size_t n = 0;
  BitVector x_bits;
  BitVector z_bits;
  int phase_exp = 0;  // power of i, mod 4

  PauliString() = default;
  explicit PauliString(std::size_t n_) : n(n_), x_bits(n_), z_bits(n_) {}

  // Parse "XZIY" or "-XZIY" / "+XZIY".
  static PauliString from_letters(std::string_view letters);
  static PauliString identity(std::size_t n) { return PauliString(n); }

  char letter(std::size_t t) const;
  // Letters only, no sign.
  std::string letters() const;
  // "+XZIY" / "-XZIY" / "+iXZIY" / "-iXZIY".
  std::string str() const;

  std::size_t weight() const;
  std::size_t x_weight() const { return x_bits.popcount(); }
  std::size_t y_count() const { return (x_bits & z_bits).popcount(); }

  bool is_identity() const { return !x_bits.any() && !z_bits.any(); }

  // Power of i in the X-before-Z normal form i^e * X^x Z^z.
  int xz_phase_exp() const { return static_cast<int>((phase_exp + y_count()) % 4); }

  // Symplectic inner product: false = commute, true = anticommute.
  bool anticommutes_with(const PauliString& other) const;
  bool commutes_with(const PauliString& other) const { return !anticommutes_with(other); }

  PauliString& operator*=(const PauliString& other);
  friend PauliString operator*(PauliString a, const PauliString& b) { return a *= b; }

  bool operator==(const PauliString&) const = default;

  // The 2n-bit row (x | z) used for GF(2) independence checks.
  BitVector symplectic_row() const;

  // Action on a computational basis state |b> (bit t of b = qubit t):
  // P|b> = i^k |b ^ x_bits>, with k the returned exponent mod 4.
  // Requires n <= 64.
  int phase_on_basis_state(std::uint64_t b) const;
  std::uint64_t image_of_basis_state(std::uint64_t b) const { return b ^ x_bits.as_u64(); }
};

}  // namespace transversal
