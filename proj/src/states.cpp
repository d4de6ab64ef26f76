#include "gmecrit/states.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace gmecrit {

namespace {

std::string fmt_mag(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void require_shape(const DensityMatrix& rho) {
  const long D = rho.dims.total();
  if (rho.matrix.rows() != D || rho.matrix.cols() != D) {
    throw std::invalid_argument(
        "density matrix is " + std::to_string(rho.matrix.rows()) + "x" +
        std::to_string(rho.matrix.cols()) + " but the dims give total " +
        std::to_string(D));
  }
}

// Strides of the flat product-basis index; the last party varies fastest.
std::vector<long> basis_strides(const SystemDims& dims) {
  const int n = dims.n();
  std::vector<long> stride(static_cast<std::size_t>(n), 1);
  for (int s = n - 2; s >= 0; --s) {
    stride[static_cast<std::size_t>(s)] =
        stride[static_cast<std::size_t>(s + 1)] * dims.dim(s + 1);
  }
  return stride;
}

// Deterministic standard normals: Box-Muller over the raw mt19937_64 stream,
// so seeds reproduce bit-for-bit across platforms and standard libraries.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  double uniform() {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }

  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace

SystemDims::SystemDims(std::vector<int> local_dims) : dims(std::move(local_dims)) {
  if (dims.empty()) {
    throw std::invalid_argument("system needs at least one party");
  }
  long total = 1;
  for (int d : dims) {
    if (d < 2) {
      throw std::invalid_argument("local dimension must be >= 2, got " +
                                  std::to_string(d));
    }
    total *= d;
    if (total > kMaxTotalDim) {
      throw std::invalid_argument("total dimension exceeds the cap of " +
                                  std::to_string(kMaxTotalDim));
    }
  }
}

int SystemDims::dim(int party) const {
  if (party < 0 || party >= n()) {
    throw std::out_of_range("party index " + std::to_string(party) +
                            " out of range for " + std::to_string(n()) +
                            " parties");
  }
  return dims[static_cast<std::size_t>(party)];
}

long SystemDims::total() const {
  long total = 1;
  for (int d : dims) total *= d;
  return total;
}

bool SystemDims::uniform() const {
  for (int d : dims) {
    if (d != dims.front()) return false;
  }
  return true;
}

DensityMatrix w_state() {
  Vector psi = Vector::Zero(8);
  const double amp = 1.0 / std::sqrt(3.0);
  psi(1) = amp;  // |001>
  psi(2) = amp;  // |010>
  psi(4) = amp;  // |100>
  return DensityMatrix{SystemDims({2, 2, 2}), psi * psi.adjoint()};
}

DensityMatrix ghz_state(int n, int d) {
  if (n < 2) {
    throw std::invalid_argument("GHZ state needs at least 2 parties, got " +
                                std::to_string(n));
  }
  SystemDims dims(std::vector<int>(static_cast<std::size_t>(n), d));
  const long D = dims.total();
  Vector psi = Vector::Zero(D);
  // |k...k> sits at k * (1 + d + ... + d^(n-1)).
  long diag_stride = 0;
  long power = 1;
  for (int s = 0; s < n; ++s) {
    diag_stride += power;
    power *= d;
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) psi(k * diag_stride) = amp;
  return DensityMatrix{std::move(dims), psi * psi.adjoint()};
}

DensityMatrix white_noise_mix(const DensityMatrix& rho, double x) {
  require_shape(rho);
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("visibility must lie in [0, 1], got " +
                                fmt_mag(x));
  }
  const long D = rho.dims.total();
  Matrix mixed = x * rho.matrix;
  mixed += ((1.0 - x) / static_cast<double>(D)) *
           Matrix::Identity(D, D);
  return DensityMatrix{rho.dims, std::move(mixed)};
}

DensityMatrix product_state(const DensityMatrix& left,
                            const DensityMatrix& right,
                            const Bipartition& split) {
  require_shape(left);
  require_shape(right);
  if (static_cast<int>(split.left.size()) != left.dims.n() ||
      static_cast<int>(split.right.size()) != right.dims.n()) {
    throw std::invalid_argument(
        "product_state: factor party counts do not match the bipartition");
  }
  std::vector<int> global_dims(static_cast<std::size_t>(split.n), 0);
  for (std::size_t i = 0; i < split.left.size(); ++i) {
    global_dims[static_cast<std::size_t>(split.left[i])] = left.dims.dims[i];
  }
  for (std::size_t i = 0; i < split.right.size(); ++i) {
    global_dims[static_cast<std::size_t>(split.right[i])] = right.dims.dims[i];
  }
  SystemDims dims(std::move(global_dims));
  const long D = dims.total();
  const auto gstride = basis_strides(dims);
  const auto lstride = basis_strides(left.dims);
  const auto rstride = basis_strides(right.dims);

  // Map each global basis index onto the flat indices of the two factors.
  std::vector<long> to_left(static_cast<std::size_t>(D), 0);
  std::vector<long> to_right(static_cast<std::size_t>(D), 0);
  for (long a = 0; a < D; ++a) {
    long al = 0;
    long ar = 0;
    for (std::size_t i = 0; i < split.left.size(); ++i) {
      const int p = split.left[i];
      const long digit =
          (a / gstride[static_cast<std::size_t>(p)]) % dims.dim(p);
      al += digit * lstride[i];
    }
    for (std::size_t i = 0; i < split.right.size(); ++i) {
      const int p = split.right[i];
      const long digit =
          (a / gstride[static_cast<std::size_t>(p)]) % dims.dim(p);
      ar += digit * rstride[i];
    }
    to_left[static_cast<std::size_t>(a)] = al;
    to_right[static_cast<std::size_t>(a)] = ar;
  }

  Matrix M(D, D);
  for (long a = 0; a < D; ++a) {
    for (long b = 0; b < D; ++b) {
      M(a, b) = left.matrix(to_left[static_cast<std::size_t>(a)],
                            to_left[static_cast<std::size_t>(b)]) *
                right.matrix(to_right[static_cast<std::size_t>(a)],
                             to_right[static_cast<std::size_t>(b)]);
    }
  }
  return DensityMatrix{std::move(dims), std::move(M)};
}

DensityMatrix random_density(const SystemDims& dims, long rank,
                             std::uint64_t seed) {
  const long D = dims.total();
  if (rank < 1 || rank > D) {
    throw std::invalid_argument("rank must lie in [1, " + std::to_string(D) +
                                "], got " + std::to_string(rank));
  }
  GaussianSource gauss(seed);
  Matrix G(D, rank);
  for (long r = 0; r < D; ++r) {
    for (long c = 0; c < rank; ++c) {
      G(r, c) = Complex(gauss.next(), gauss.next());
    }
  }
  Matrix rho = G * G.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix{dims, std::move(rho)};
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  require_shape(rho);
  const int n = rho.dims.n();
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep list must be non-empty");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> kept_dims;
  for (int p : keep) {
    if (p < 0 || p >= n) {
      throw std::out_of_range("partial_trace: party " + std::to_string(p) +
                              " out of range");
    }
    if (seen[static_cast<std::size_t>(p)]++) {
      throw std::invalid_argument("partial_trace: party " + std::to_string(p) +
                                  " listed twice");
    }
    kept_dims.push_back(rho.dims.dim(p));
  }
  std::vector<int> traced;
  for (int p = 0; p < n; ++p) {
    if (!seen[static_cast<std::size_t>(p)]) traced.push_back(p);
  }

  SystemDims out_dims(std::move(kept_dims));
  const long K = out_dims.total();
  long T = 1;
  for (int p : traced) T *= rho.dims.dim(p);

  const auto gstride = basis_strides(rho.dims);
  // Flat kept/traced sub-indices -> contribution to the global index.
  std::vector<long> keep_base(static_cast<std::size_t>(K), 0);
  for (long k = 0; k < K; ++k) {
    long rest = k;
    long base = 0;
    for (std::size_t i = keep.size(); i-- > 0;) {
      const int p = keep[i];
      base += (rest % rho.dims.dim(p)) * gstride[static_cast<std::size_t>(p)];
      rest /= rho.dims.dim(p);
    }
    keep_base[static_cast<std::size_t>(k)] = base;
  }
  std::vector<long> trace_base(static_cast<std::size_t>(T), 0);
  for (long t = 0; t < T; ++t) {
    long rest = t;
    long base = 0;
    for (std::size_t i = traced.size(); i-- > 0;) {
      const int p = traced[i];
      base += (rest % rho.dims.dim(p)) * gstride[static_cast<std::size_t>(p)];
      rest /= rho.dims.dim(p);
    }
    trace_base[static_cast<std::size_t>(t)] = base;
  }

  Matrix out = Matrix::Zero(K, K);
  for (long r = 0; r < K; ++r) {
    for (long c = 0; c < K; ++c) {
      Complex sum = 0.0;
      for (long t = 0; t < T; ++t) {
        sum += rho.matrix(keep_base[static_cast<std::size_t>(r)] +
                              trace_base[static_cast<std::size_t>(t)],
                          keep_base[static_cast<std::size_t>(c)] +
                              trace_base[static_cast<std::size_t>(t)]);
      }
      out(r, c) = sum;
    }
  }
  return DensityMatrix{std::move(out_dims), std::move(out)};
}

std::vector<Violation> validate(const DensityMatrix& rho, double tol) {
  require_shape(rho);
  std::vector<Violation> out;

  const double herm = (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) {
    out.push_back({Violation::Kind::Hermiticity, herm,
                   "matrix is not Hermitian: max |rho - rho^dagger| = " +
                       fmt_mag(herm)});
  }

  const double trace_dev = std::abs(rho.matrix.trace() - Complex(1.0));
  if (trace_dev > tol) {
    out.push_back({Violation::Kind::Trace, trace_dev,
                   "trace deviates from 1 by " + fmt_mag(trace_dev)});
  }

  const Matrix herm_part = 0.5 * (rho.matrix + rho.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(herm_part,
                                            Eigen::EigenvaluesOnly);
  const double lambda_min = eig.eigenvalues().minCoeff();
  if (lambda_min < -tol) {
    out.push_back({Violation::Kind::Positivity, -lambda_min,
                   "matrix is not positive semidefinite: smallest eigenvalue " +
                       fmt_mag(lambda_min)});
  }
  return out;
}

bool is_permutation_invariant(const DensityMatrix& rho, double tol) {
  require_shape(rho);
  if (!rho.dims.uniform()) {
    throw std::invalid_argument(
        "permutation invariance needs equal local dimensions");
  }
  const int n = rho.dims.n();
  if (n == 1) return true;
  const long D = rho.dims.total();
  const auto gstride = basis_strides(rho.dims);
  const int d = rho.dims.dim(0);

  std::vector<long> swapped(static_cast<std::size_t>(D));
  for (int s = 0; s + 1 < n; ++s) {
    // Index map for exchanging parties s and s+1.
    for (long a = 0; a < D; ++a) {
      const long hi = (a / gstride[static_cast<std::size_t>(s)]) % d;
      const long lo = (a / gstride[static_cast<std::size_t>(s + 1)]) % d;
      swapped[static_cast<std::size_t>(a)] =
          a + (lo - hi) * gstride[static_cast<std::size_t>(s)] +
          (hi - lo) * gstride[static_cast<std::size_t>(s + 1)];
    }
    for (long a = 0; a < D; ++a) {
      for (long b = 0; b < D; ++b) {
        const Complex diff =
            rho.matrix(a, b) -
            rho.matrix(swapped[static_cast<std::size_t>(a)],
                       swapped[static_cast<std::size_t>(b)]);
        if (std::abs(diff) > tol) return false;
      }
    }
  }
  return true;
}

}  // namespace gmecrit
