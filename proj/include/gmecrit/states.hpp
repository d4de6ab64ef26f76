#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmecrit/bipartition.hpp"
#include "gmecrit/types.hpp"

namespace gmecrit {

// Hard cap on the total Hilbert-space dimension; keeps every dense operation
// in this library comfortably in memory.
inline constexpr long kMaxTotalDim = 4096;

// Local dimensions (d_1, ..., d_n), each >= 2.
struct SystemDims {
  std::vector<int> dims;

  SystemDims() = default;
  explicit SystemDims(std::vector<int> local_dims);

  int n() const { return static_cast<int>(dims.size()); }
  int dim(int party) const;
  long total() const;
  bool uniform() const;
};

// Dense density matrix in the computational product basis, row-major with the
// last party's index varying fastest.
struct DensityMatrix {
  SystemDims dims;
  Matrix matrix;
};

// Projector onto (|001> + |010> + |100>) / sqrt(3) on three qubits.
DensityMatrix w_state();

// Projector onto sum_k |k...k> / sqrt(d) on n parties of dimension d.
DensityMatrix ghz_state(int n, int d);

// x * rho + (1 - x) * I / D for visibility x in [0, 1].
DensityMatrix white_noise_mix(const DensityMatrix& rho, double x);

// Tensor product of two factor states placed on the parties named by the
// bipartition: factor `left` covers split.left (in its listed order), factor
// `right` covers split.right.
DensityMatrix product_state(const DensityMatrix& left,
                            const DensityMatrix& right,
                            const Bipartition& split);

// Normalized G G^dagger for a D x rank matrix G of iid standard complex
// Gaussians drawn from a fixed, platform-independent generator.
DensityMatrix random_density(const SystemDims& dims, long rank,
                             std::uint64_t seed);

// Reduced state on the listed parties (traced parties summed out); the result
// keeps the listed order.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

struct Violation {
  enum class Kind { Hermiticity, Trace, Positivity };
  Kind kind;
  double magnitude;
  std::string detail;
};

// Checks Hermiticity, unit trace and positive semidefiniteness within tol;
// an empty result means the matrix is a valid state.
std::vector<Violation> validate(const DensityMatrix& rho, double tol = 1e-8);

// True when rho commutes with every exchange of two (equal-dimensional)
// parties; checked on the adjacent transpositions, which generate the rest.
bool is_permutation_invariant(const DensityMatrix& rho, double tol = 1e-8);

}  // namespace gmecrit
