#pragma once

#include <complex>

#include <Eigen/Dense>

namespace gmecrit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

}  // namespace gmecrit
