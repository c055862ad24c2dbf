#include "transversal/catalog.hpp"

#include <stdexcept>

namespace transversal {

namespace {

PauliString x_type(const BitVector& support) {
  PauliString p(support.size());
  p.x_bits = support;
  return p;
}

PauliString z_type(const BitVector& support) {
  PauliString p(support.size());
  p.z_bits = support;
  return p;
}

// Basis of the even-weight subcode of the span of `rows`: if any basis
// vector has odd weight, fold the first odd one into the others and drop
// it.
std::vector<BitVector> even_subcode_basis(std::vector<BitVector> rows) {
  std::size_t odd = rows.size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].popcount() % 2 == 1) {
      odd = i;
      break;
    }
  if (odd == rows.size()) return rows;
  std::vector<BitVector> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == odd) continue;
    out.push_back(rows[i].popcount() % 2 == 1 ? rows[i] ^ rows[odd] : rows[i]);
  }
  return out;
}

}  // namespace

StabilizerCode rm_family(int m) {
  if (m < 3) throw std::invalid_argument("rm_family: m must be at least 3");
  const std::size_t n = (std::size_t(1) << m) - 1;

  StabilizerCode code;
  code.n = n;
  code.k = 1;
  code.name = "rm" + std::to_string(n);

  BitMatrix coord_rows;
  for (int i = 0; i < m; ++i) {
    BitVector row(n);
    for (std::size_t p = 1; p <= n; ++p)
      if ((p >> i) & 1) row.set(p - 1, true);
    coord_rows.append_row(row);
    code.generators.push_back(x_type(row));
  }

  for (const BitVector& z : even_subcode_basis(gf2_nullspace(coord_rows).rows()))
    code.generators.push_back(z_type(z));

  BitVector ones(n);
  for (std::size_t t = 0; t < n; ++t) ones.set(t, true);
  code.logical_x.push_back(x_type(ones));
  code.logical_z.push_back(z_type(ones));
  return code;
}

StabilizerCode steane7() {
  StabilizerCode code = rm_family(3);
  code.name = "steane7";
  return code;
}

StabilizerCode rm15() { return rm_family(4); }

StabilizerCode fivequbit() {
  StabilizerCode code;
  code.n = 5;
  code.k = 1;
  code.name = "fivequbit";
  for (const char* g : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"})
    code.generators.push_back(PauliString::from_letters(g));
  code.logical_x.push_back(PauliString::from_letters("XXXXX"));
  code.logical_z.push_back(PauliString::from_letters("ZZZZZ"));
  return code;
}

StabilizerCode c422() {
  StabilizerCode code;
  code.n = 4;
  code.k = 2;
  code.name = "c422";
  code.generators.push_back(PauliString::from_letters("XXXX"));
  code.generators.push_back(PauliString::from_letters("ZZZZ"));
  code.logical_x.push_back(PauliString::from_letters("XXII"));
  code.logical_x.push_back(PauliString::from_letters("XIXI"));
  code.logical_z.push_back(PauliString::from_letters("ZIZI"));
  code.logical_z.push_back(PauliString::from_letters("ZZII"));
  return code;
}

std::vector<StabilizerCode> catalog() { return {steane7(), rm15(), fivequbit(), c422()}; }

std::optional<StabilizerCode> find_catalog(const std::string& name) {
  for (StabilizerCode& c : catalog())
    if (c.name == name) return std::move(c);
  return std::nullopt;
}

}  // namespace transversal
