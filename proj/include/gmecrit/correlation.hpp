#pragma once

#include <span>
#include <vector>

#include "gmecrit/bipartition.hpp"
#include "gmecrit/states.hpp"
#include "gmecrit/types.hpp"

namespace gmecrit {

// Full set of basis coefficients t_mu = tr(rho (A_{mu_1} x ... x A_{mu_n})^dagger),
// stored flat in row-major order with the last party's label varying fastest.
// Entry (0, ..., 0) equals the trace of the state.
struct CorrelationTensor {
  SystemDims dims;
  std::vector<int> extents;  // d_s^2 per party
  std::vector<Complex> coeffs;

  std::size_t size() const { return coeffs.size(); }
  std::size_t flat(std::span<const int> mu) const;
  Complex at(std::span<const int> mu) const { return coeffs[flat(mu)]; }
};

// Expands rho over the product Weyl basis.  Exploits the single non-zero
// per row of each basis operator, so each coefficient costs O(D) instead of
// a dense D x D trace.
CorrelationTensor extract_tensor(const DensityMatrix& rho);

// Inverse expansion: rho = (1 / D) sum_mu t_mu (A_{mu_1} x ... x A_{mu_n}).
DensityMatrix reconstruct(const CorrelationTensor& tensor);

// Coefficients with non-identity labels exactly on the listed parties,
// flattened with the last listed party varying fastest.
Vector t_vector(const CorrelationTensor& tensor, const std::vector<int>& part);

// Unfolding with row labels running over the left parties and column labels
// over the right parties (all in {1, ..., d^2 - 1}); parties on neither side
// keep the identity label.
Matrix s_matrix(const CorrelationTensor& tensor, const std::vector<int>& left,
                const std::vector<int>& right);

// Stacked two-block unfolding for one bipartition:
//   [ alpha * S(left | distinguished)   0 ]
//   [ beta  * S(left | right)             ]
// The zero block pads the top row of blocks to the full right-side width.
struct FMatrix {
  Bipartition split;
  double alpha = 0.0;
  double beta = 0.0;
  Matrix matrix;
  Eigen::Index top_cols = 0;  // width of the alpha block before padding
};

FMatrix f_matrix(const CorrelationTensor& tensor, const Bipartition& split,
                 double alpha, double beta);

}  // namespace gmecrit
