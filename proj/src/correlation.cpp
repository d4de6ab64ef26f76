#include "gmecrit/correlation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gmecrit/gpops.hpp"

namespace gmecrit {

namespace {

std::vector<long> basis_strides(const SystemDims& dims) {
  const int n = dims.n();
  std::vector<long> stride(static_cast<std::size_t>(n), 1);
  for (int s = n - 2; s >= 0; --s) {
    stride[static_cast<std::size_t>(s)] =
        stride[static_cast<std::size_t>(s + 1)] * dims.dim(s + 1);
  }
  return stride;
}

// Advances a mixed-radix counter (last slot fastest) where slot i runs over
// [lo, hi[i]); returns false once the counter wraps around.
bool advance(std::vector<int>& counter, std::span<const int> hi, int lo) {
  for (std::size_t i = counter.size(); i-- > 0;) {
    if (++counter[i] < hi[i]) return true;
    counter[i] = lo;
  }
  return false;
}

void require_parties(const SystemDims& dims, const std::vector<int>& parties,
                     const char* what) {
  if (parties.empty()) {
    throw std::invalid_argument(std::string(what) +
                                ": party list must be non-empty");
  }
  std::vector<char> seen(static_cast<std::size_t>(dims.n()), 0);
  for (int p : parties) {
    if (p < 0 || p >= dims.n()) {
      throw std::out_of_range(std::string(what) + ": party " +
                              std::to_string(p) + " out of range");
    }
    if (seen[static_cast<std::size_t>(p)]++) {
      throw std::invalid_argument(std::string(what) + ": party " +
                                  std::to_string(p) + " listed twice");
    }
  }
}

}  // namespace

std::size_t CorrelationTensor::flat(std::span<const int> mu) const {
  if (mu.size() != extents.size()) {
    throw std::invalid_argument("tensor label needs " +
                                std::to_string(extents.size()) +
                                " entries, got " + std::to_string(mu.size()));
  }
  std::size_t idx = 0;
  for (std::size_t s = 0; s < mu.size(); ++s) {
    if (mu[s] < 0 || mu[s] >= extents[s]) {
      throw std::out_of_range("tensor label " + std::to_string(mu[s]) +
                              " out of range for party " + std::to_string(s));
    }
    idx = idx * static_cast<std::size_t>(extents[s]) +
          static_cast<std::size_t>(mu[s]);
  }
  return idx;
}

CorrelationTensor extract_tensor(const DensityMatrix& rho) {
  const int n = rho.dims.n();
  const long D = rho.dims.total();
  if (rho.matrix.rows() != D || rho.matrix.cols() != D) {
    throw std::invalid_argument("density matrix shape does not match dims");
  }

  CorrelationTensor tensor;
  tensor.dims = rho.dims;
  tensor.extents.resize(static_cast<std::size_t>(n));
  std::size_t count = 1;
  for (int s = 0; s < n; ++s) {
    tensor.extents[static_cast<std::size_t>(s)] =
        rho.dims.dim(s) * rho.dims.dim(s);
    count *= static_cast<std::size_t>(tensor.extents[s]);
  }
  tensor.coeffs.resize(count);

  // Per-party table of omega^{-(i * m)}; the conjugate enters through the
  // dagger in tr(rho A^dagger).
  std::vector<Matrix> phase_conj(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    const int d = rho.dims.dim(s);
    Matrix table(d, d);
    for (int i = 0; i < d; ++i) {
      for (int m = 0; m < d; ++m) {
        table(i, m) = std::conj(root_power(d, static_cast<long>(i) * m));
      }
    }
    phase_conj[static_cast<std::size_t>(s)] = std::move(table);
  }

  const auto stride = basis_strides(rho.dims);
  std::vector<std::vector<int>> digit(
      static_cast<std::size_t>(D), std::vector<int>(static_cast<std::size_t>(n)));
  for (long a = 0; a < D; ++a) {
    for (int s = 0; s < n; ++s) {
      digit[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)] =
          static_cast<int>((a / stride[static_cast<std::size_t>(s)]) %
                           rho.dims.dim(s));
    }
  }

  std::vector<int> mu(static_cast<std::size_t>(n), 0);
  for (std::size_t q = 0; q < count; ++q) {
    // A_{di+j} maps row a_s onto column (a_s + j) mod d with phase omega^{i a_s};
    // only the matching column of each row survives the trace.
    Complex sum = 0.0;
    for (long a = 0; a < D; ++a) {
      long b = 0;
      Complex phase = 1.0;
      for (int s = 0; s < n; ++s) {
        const int d = rho.dims.dim(s);
        const int i = mu[static_cast<std::size_t>(s)] / d;
        const int j = mu[static_cast<std::size_t>(s)] % d;
        const int as =
            digit[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)];
        b += ((as + j) % d) * stride[static_cast<std::size_t>(s)];
        phase *= phase_conj[static_cast<std::size_t>(s)](i, as);
      }
      sum += rho.matrix(a, b) * phase;
    }
    tensor.coeffs[q] = sum;
    advance(mu, tensor.extents, 0);
  }
  return tensor;
}

DensityMatrix reconstruct(const CorrelationTensor& tensor) {
  const int n = tensor.dims.n();
  const long D = tensor.dims.total();
  if (tensor.coeffs.empty() || std::abs(tensor.coeffs.front() - Complex(1.0)) > 1e-6) {
    throw std::invalid_argument(
        "reconstruct needs a tensor with unit identity coefficient");
  }

  std::vector<Matrix> phase(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    const int d = tensor.dims.dim(s);
    Matrix table(d, d);
    for (int i = 0; i < d; ++i) {
      for (int m = 0; m < d; ++m) {
        table(i, m) = root_power(d, static_cast<long>(i) * m);
      }
    }
    phase[static_cast<std::size_t>(s)] = std::move(table);
  }

  const auto stride = basis_strides(tensor.dims);
  Matrix M = Matrix::Zero(D, D);
  std::vector<int> mu(static_cast<std::size_t>(n), 0);
  std::size_t q = 0;
  do {
    const Complex t = tensor.coeffs[q++];
    if (t != 0.0) {
      for (long a = 0; a < D; ++a) {
        long b = 0;
        Complex ph = 1.0;
        for (int s = 0; s < n; ++s) {
          const int d = tensor.dims.dim(s);
          const int i = mu[static_cast<std::size_t>(s)] / d;
          const int j = mu[static_cast<std::size_t>(s)] % d;
          const int as = static_cast<int>(
              (a / stride[static_cast<std::size_t>(s)]) % d);
          b += ((as + j) % d) * stride[static_cast<std::size_t>(s)];
          ph *= phase[static_cast<std::size_t>(s)](i, as);
        }
        M(a, b) += t * ph;
      }
    }
  } while (advance(mu, tensor.extents, 0));
  M /= static_cast<double>(D);
  return DensityMatrix{tensor.dims, std::move(M)};
}

Vector t_vector(const CorrelationTensor& tensor, const std::vector<int>& part) {
  require_parties(tensor.dims, part, "t_vector");
  long len = 1;
  std::vector<int> hi(part.size());
  for (std::size_t i = 0; i < part.size(); ++i) {
    hi[i] = tensor.extents[static_cast<std::size_t>(part[i])];
    len *= hi[i] - 1;
  }

  Vector v(len);
  std::vector<int> label(part.size(), 1);
  std::vector<int> mu(static_cast<std::size_t>(tensor.dims.n()), 0);
  long idx = 0;
  do {
    for (std::size_t i = 0; i < part.size(); ++i) {
      mu[static_cast<std::size_t>(part[i])] = label[i];
    }
    v(idx++) = tensor.at(mu);
  } while (advance(label, hi, 1));
  return v;
}

Matrix s_matrix(const CorrelationTensor& tensor, const std::vector<int>& left,
                const std::vector<int>& right) {
  require_parties(tensor.dims, left, "s_matrix");
  require_parties(tensor.dims, right, "s_matrix");
  for (int p : left) {
    for (int q : right) {
      if (p == q) {
        throw std::invalid_argument("s_matrix: party " + std::to_string(p) +
                                    " appears on both sides");
      }
    }
  }

  long rows = 1;
  long cols = 1;
  std::vector<int> hi_l(left.size());
  std::vector<int> hi_r(right.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    hi_l[i] = tensor.extents[static_cast<std::size_t>(left[i])];
    rows *= hi_l[i] - 1;
  }
  for (std::size_t i = 0; i < right.size(); ++i) {
    hi_r[i] = tensor.extents[static_cast<std::size_t>(right[i])];
    cols *= hi_r[i] - 1;
  }

  Matrix S(rows, cols);
  std::vector<int> mu(static_cast<std::size_t>(tensor.dims.n()), 0);
  std::vector<int> row_label(left.size(), 1);
  long r = 0;
  do {
    for (std::size_t i = 0; i < left.size(); ++i) {
      mu[static_cast<std::size_t>(left[i])] = row_label[i];
    }
    std::vector<int> col_label(right.size(), 1);
    long c = 0;
    do {
      for (std::size_t i = 0; i < right.size(); ++i) {
        mu[static_cast<std::size_t>(right[i])] = col_label[i];
      }
      S(r, c++) = tensor.at(mu);
    } while (advance(col_label, hi_r, 1));
    ++r;
  } while (advance(row_label, hi_l, 1));
  return S;
}

FMatrix f_matrix(const CorrelationTensor& tensor, const Bipartition& split,
                 double alpha, double beta) {
  if (split.n != tensor.dims.n()) {
    throw std::invalid_argument("f_matrix: bipartition covers " +
                                std::to_string(split.n) + " parties, tensor " +
                                std::to_string(tensor.dims.n()));
  }
  const Matrix top = s_matrix(tensor, split.left, {split.distinguished()});
  const Matrix bottom = s_matrix(tensor, split.left, split.right);

  FMatrix f;
  f.split = split;
  f.alpha = alpha;
  f.beta = beta;
  f.top_cols = top.cols();
  f.matrix = Matrix::Zero(2 * top.rows(), bottom.cols());
  f.matrix.topLeftCorner(top.rows(), top.cols()) = alpha * top;
  f.matrix.bottomRows(bottom.rows()) = beta * bottom;
  return f;
}

}  // namespace gmecrit
