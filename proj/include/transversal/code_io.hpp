#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "transversal/code.hpp"

namespace transversal {

/*
 * Code file format (UTF-8 text, '#' starts a comment to end of line):
 *
 *   n=<int> k=<int>
 *   [stabilizers]      # exactly n-k lines
 *   [logical_x]        # exactly k lines
 *   [logical_z]        # exactly k lines
 *
 * Body lines are an optional sign ('+'/'-') followed by exactly n
 * characters from {I,X,Y,Z}. Order within sections is significant: index
 * i in reports refers to file order.
 */

struct CodeIoError : std::runtime_error {
  enum class Kind { Syntax, Validation };

  CodeIoError(Kind kind_, int line_, std::vector<std::string> details_);

  Kind kind;
  int line;  // 1-based; 0 when not tied to a single line
  std::vector<std::string> details;
};

// Parses and validates; throws CodeIoError on either failure.
StabilizerCode parse_code(std::string_view text);

std::string serialize_code(const StabilizerCode& code);

// Structural equality in the file-format sense: n, k, and the exact
// operator lists (the name label is not part of the format).
bool structurally_equal(const StabilizerCode& a, const StabilizerCode& b);

}  // namespace transversal
