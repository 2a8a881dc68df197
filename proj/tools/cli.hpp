#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "io.hpp"

namespace gbcodes::cli {

/// Exit codes: 0 all verdicts verified/silent/sampled, 1 usage or input
/// error, 2 something falsified.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// The (9,3) ternary code with a 457-element degrevlex basis.
LinearCode ternary_9_3();
/// The (8,2) ternary code whose nonzero words all have weight 6.
LinearCode ternary_8_2();

/// Basis counts for both orders and both traversals, or the error each one
/// raised. Emitted whenever a reproduction does not match.
json order_convention_diagnostics(const LinearCode& code, const Caps& caps);

}  // namespace gbcodes::cli
