#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gmecrit/states.hpp"
#include "gmecrit/types.hpp"

namespace testutil {

// Deterministic uniform source for property tests; raw engine output only,
// so trial inputs are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double symmetric() { return 2.0 * uniform() - 1.0; }  // [-1, 1)
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline gmecrit::Matrix random_complex(Rng& rng, long rows, long cols) {
  gmecrit::Matrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) {
      m(r, c) = gmecrit::Complex(rng.symmetric(), rng.symmetric());
    }
  }
  return m;
}

// Plain Kronecker product; matches the row-major, last-party-fastest basis
// convention, so chaining it in party order rebuilds a full product state.
inline gmecrit::Matrix kron(const gmecrit::Matrix& a, const gmecrit::Matrix& b) {
  gmecrit::Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long r = 0; r < a.rows(); ++r) {
    for (long c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) =
          a(r, c) * b;
    }
  }
  return out;
}

// Mixture of `terms` fully product states on the given dims, with random
// local states and weights drawn from rng-derived seeds.
inline gmecrit::DensityMatrix fully_separable(Rng& rng,
                                              const gmecrit::SystemDims& dims,
                                              int terms) {
  const long D = dims.total();
  gmecrit::Matrix sum = gmecrit::Matrix::Zero(D, D);
  double total_weight = 0.0;
  for (int k = 0; k < terms; ++k) {
    gmecrit::Matrix term = gmecrit::Matrix::Identity(1, 1);
    for (int s = 0; s < dims.n(); ++s) {
      const int d = dims.dim(s);
      const long rank = 1 + rng.below(d);
      const auto local = gmecrit::random_density(
          gmecrit::SystemDims({d}), rank, rng.raw());
      term = kron(term, local.matrix);
    }
    const double weight = 0.1 + rng.uniform();
    sum += weight * term;
    total_weight += weight;
  }
  sum /= total_weight;
  return gmecrit::DensityMatrix{dims, std::move(sum)};
}

}  // namespace testutil
