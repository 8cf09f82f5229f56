#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ccsg/gf2poly.hpp"

namespace ccsg::cli {

// Accepts "x^5 + x^2 + 1", "1+x^2+x^3" or an ascending 0/1 coefficient string.
BinaryPolynomial parse_poly(const std::string& text);

// Exit codes: 0 success, 1 usage/parse error, 2 verification failure,
// 3 inconsistency detected by the attack.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccsg::cli
