#pragma once

#include <string_view>

#include "phinil/group_spec.hpp"

namespace phinil {

// Parses the textual group grammar:
//   C(n)  D(2n)  S(n)  A(n)  E(p^3)  G375
//   prod(X, Y)  semi(N, H, action=<name>)  file(<path>)
// Throws ParseError (with the offending position) on malformed input and
// InvalidSpec when parameters violate constructor constraints.
GroupSpec parse_spec(std::string_view text);

}  // namespace phinil
