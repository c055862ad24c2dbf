#pragma once

#include <optional>
#include <vector>

#include "transversal/code.hpp"

namespace transversal {

// [[2^m - 1, 1, 3]] quantum Reed-Muller code, m >= 3. X stabilizers are
// the m coordinate rows of the punctured first-order Reed-Muller code
// (column p carries the binary digits of p, p = 1..2^m-1); Z stabilizers
// span the even-weight subcode of the dual; the logicals are the all-X
// and all-Z strings. m = 3 is the Steane code.
StabilizerCode rm_family(int m);

StabilizerCode steane7();    // [[7,1,3]], rm_family(3)
StabilizerCode rm15();       // [[15,1,3]], rm_family(4)
StabilizerCode fivequbit();  // [[5,1,3]] cyclic code, not CSS
StabilizerCode c422();       // [[4,2,2]] detection code

std::vector<StabilizerCode> catalog();
std::optional<StabilizerCode> find_catalog(const std::string& name);

}  // namespace transversal
