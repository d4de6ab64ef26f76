#pragma once

#include <iosfwd>
#include <string>

#include "gmecrit/states.hpp"

namespace gmecrit {

// State files are JSON documents of the form
//   {"dims": [2, 2, 2], "matrix": [[[re, im], ...], ...]}
// with the matrix given row-major in the computational product basis.

// Parses and validates a state; throws std::runtime_error naming the violated
// invariant (shape, Hermiticity, trace or positivity at tolerance tol).
DensityMatrix load_state(std::istream& in, double tol = 1e-8);
DensityMatrix load_state_file(const std::string& path, double tol = 1e-8);

void save_state(const DensityMatrix& rho, std::ostream& out);
void save_state_file(const DensityMatrix& rho, const std::string& path);

}  // namespace gmecrit
