#pragma once

#include <vector>

#include "gmecrit/types.hpp"

namespace gmecrit {

// Flat label mu = d*i + j for the generalized Pauli (shift/phase) operator with
// phase exponent i and cyclic shift j, 0 <= i, j < d.  mu == 0 is the identity.
struct WeylIndex {
  int d = 0;
  int i = 0;
  int j = 0;

  int mu() const { return d * i + j; }
  static WeylIndex from_flat(int d, int mu);
};

struct WeylOp {
  WeylIndex index;
  Matrix matrix;
};

// omega = exp(2 pi I / d), the primitive d-th root of unity.
Complex primitive_root(int d);

// omega^e with the exponent reduced mod d (exact for any sign of e).
Complex root_power(int d, long e);

// A_{d i + j} = sum_m omega^{i m} |m><(m + j) mod d|.
WeylOp weyl_op(int d, int i, int j);

// All d^2 operators ordered by flat label; element 0 is the identity.
std::vector<WeylOp> weyl_basis(int d);

// Exhaustively verifies, for every pair of basis elements,
//   A_{di+j} A_{dk+l}  == omega^{jk} A_{d((i+k)%d) + (j+l)%d}
//   A_{di+j}^dagger    == omega^{ij} A_{d((d-i)%d) + (d-j)%d}
//   tr(A_mu A_nu^dagger) == d delta_{mu,nu}
// entrywise within tol.  Returns false on the first relation that fails.
bool check_algebra(int d, double tol = 1e-12);

}  // namespace gmecrit
