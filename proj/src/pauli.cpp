#include "transversal/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace transversal {

PauliString PauliString::from_letters(std::string_view s) {
  int phase = 0;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    if (s.front() == '-') phase = 2;
    s.remove_prefix(1);
  }
  PauliString p(s.size());
  p.phase_exp = phase;
  for (std::size_t t = 0; t < s.size(); ++t) {
    switch (s[t]) {
      case 'I':
      case '_':
        break;
      case 'X':
        p.x_bits.set(t, true);
        break;
      case 'Y':
        p.x_bits.set(t, true);
        p.z_bits.set(t, true);
        break;
      case 'Z':
        p.z_bits.set(t, true);
        break;
      default:
        throw std::invalid_argument("PauliString: unexpected letter '" + std::string(1, s[t]) + "'");
    }
  }
  return p;
}

char PauliString::letter(std::size_t t) const {
  bool x = x_bits.get(t), z = z_bits.get(t);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::letters() const {
  std::string s(n, 'I');
  for (std::size_t t = 0; t < n; ++t) s[t] = letter(t);
  return s;
}

std::string PauliString::str() const {
  static const char* signs[4] = {"+", "+i", "-", "-i"};
  return signs[((phase_exp % 4) + 4) % 4] + letters();
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t t = 0; t < n; ++t)
    if (x_bits.get(t) || z_bits.get(t)) ++w;
  return w;
}

bool PauliString::anticommutes_with(const PauliString& other) const {
  if (n != other.n) throw std::invalid_argument("PauliString: length mismatch");
  return x_bits.parity_and(other.z_bits) ^ z_bits.parity_and(other.x_bits);
}

PauliString& PauliString::operator*=(const PauliString& other) {
  if (n != other.n) throw std::invalid_argument("PauliString: length mismatch in product");
  // Work in the X-before-Z normal form: moving Z^{z1} past X^{x2} costs
  // (-1)^{|z1 & x2|}.
  int e = xz_phase_exp() + other.xz_phase_exp();
  if (z_bits.parity_and(other.x_bits)) e += 2;
  x_bits ^= other.x_bits;
  z_bits ^= other.z_bits;
  phase_exp = static_cast<int>(((e - static_cast<int>(y_count())) % 4 + 4) % 4);
  return *this;
}

BitVector PauliString::symplectic_row() const {
  BitVector row(2 * n);
  for (std::size_t t = 0; t < n; ++t) {
    if (x_bits.get(t)) row.set(t, true);
    if (z_bits.get(t)) row.set(n + t, true);
  }
  return row;
}

int PauliString::phase_on_basis_state(std::uint64_t b) const {
  // i^e X^x Z^z |b> = i^e (-1)^{|z & b|} |b ^ x>
  int e = xz_phase_exp();
  if (std::popcount(z_bits.as_u64() & b) & 1) e += 2;
  return e % 4;
}

}  // namespace transversal
