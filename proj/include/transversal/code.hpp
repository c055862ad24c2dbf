#pragma once

#include <optional>
#include <string>
#include <vector>

#include "transversal/pauli.hpp"

namespace transversal {

/*
 * [[n, k]] stabilizer code: n - k commuting, independent generators plus
 * a chosen symplectic basis of logical X/Z pairs. Logical operators are
 * inputs, not recomputed; index order is significant and is the order
 * reports refer to.
 */
struct StabilizerCode {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<PauliString> generators;
  std::vector<PauliString> logical_x;
  std::vector<PauliString> logical_z;
  std::string name;
};

struct Violation {
  std::string message;
};

// Checks every structural invariant and returns all violations, not just
// the first: sizes, pairwise generator commutation, GF(2) independence
// (rank n-k), logicals commuting with the stabilizer, the anticommutation
// pairing [X_j, Z_l] = delta_jl, and no logical inside the stabilizer
// group.
std::vector<Violation> validate(const StabilizerCode& code);

inline bool is_valid(const StabilizerCode& code) { return validate(code).empty(); }

/*
 * X/Z-separated view of a CSS code. gx_rows holds the X substrings of the
 * X-type generators, one row per generator; likewise gz_rows for Z-type.
 * x_detecting records whether gz_rows has no zero column, z_detecting
 * whether gx_rows has none; the latter is the nontriviality hypothesis of
 * the overlap-condition analysis.
 */
struct CSSView {
  BitMatrix gx_rows;
  BitMatrix gz_rows;
  BitMatrix x_logicals;
  BitMatrix z_logicals;
  std::vector<std::size_t> x_generator_indices;  // positions in code.generators
  std::vector<std::size_t> z_generator_indices;
  bool x_detecting = false;
  bool z_detecting = false;
};

// Partition the generators by type; std::nullopt iff some generator mixes
// X and Z support.
std::optional<CSSView> css_view(const StabilizerCode& code);

// Minimal weight over N(S)\S by enumeration of Pauli strings in
// increasing weight. Throws if n exceeds n_cap.
int distance_bruteforce(const StabilizerCode& code, int n_cap = 12);

}  // namespace transversal
