// machine_format.hpp
// Line-oriented text format for machine definitions, consumed by the CLI.
//
//   # comment
//   basis  = phi,gamma                  (radians)
//   blank  = re,im ; re,im ; ...        (one complex pair per ancilla amplitude)
//   0      = re,im ; re,im ; ...
//   1      = ...
//   psi    = ...
//   psibar = ...
//
// Whitespace-tolerant; numbers are decimal floats. `basis` and `blank` are
// required; the ancilla dimension is the number of pairs on the blank line
// and every image must match it. Errors carry 1-based line numbers.

#pragma once

#include <istream>
#include <string>

#include "nogo/machine.hpp"

namespace nogo {

Machine parse_machine(std::istream& in);

// Opens and parses a file; throws InputError if the file cannot be read.
Machine parse_machine_file(const std::string& path);

}  // namespace nogo
