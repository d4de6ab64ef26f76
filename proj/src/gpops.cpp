#include "gmecrit/gpops.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gmecrit {

namespace {

void require_dim(int d) {
  if (d < 2) {
    throw std::invalid_argument("local dimension must be >= 2, got " +
                                std::to_string(d));
  }
}

}  // namespace

Complex primitive_root(int d) {
  require_dim(d);
  return std::polar(1.0, 2.0 * std::numbers::pi / d);
}

Complex root_power(int d, long e) {
  require_dim(d);
  long r = e % d;
  if (r < 0) r += d;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / d);
}

WeylIndex WeylIndex::from_flat(int d, int mu) {
  require_dim(d);
  if (mu < 0 || mu >= d * d) {
    throw std::out_of_range("flat Weyl label must lie in [0, d^2), got " +
                            std::to_string(mu));
  }
  return WeylIndex{d, mu / d, mu % d};
}

WeylOp weyl_op(int d, int i, int j) {
  require_dim(d);
  if (i < 0 || i >= d || j < 0 || j >= d) {
    throw std::out_of_range("Weyl exponents must lie in [0, d)");
  }
  Matrix m = Matrix::Zero(d, d);
  for (int row = 0; row < d; ++row) {
    m(row, (row + j) % d) = root_power(d, static_cast<long>(i) * row);
  }
  return WeylOp{WeylIndex{d, i, j}, std::move(m)};
}

std::vector<WeylOp> weyl_basis(int d) {
  require_dim(d);
  std::vector<WeylOp> ops;
  ops.reserve(static_cast<std::size_t>(d) * d);
  for (int mu = 0; mu < d * d; ++mu) {
    ops.push_back(weyl_op(d, mu / d, mu % d));
  }
  return ops;
}

bool check_algebra(int d, double tol) {
  const auto ops = weyl_basis(d);

  // Product relation: the basis is closed under multiplication up to a root
  // of unity fixed by the shift of the left and the phase of the right factor.
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Matrix& a = ops[static_cast<std::size_t>(d) * i + j].matrix;
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          const Matrix& b = ops[static_cast<std::size_t>(d) * k + l].matrix;
          const Matrix expect =
              root_power(d, static_cast<long>(j) * k) *
              ops[static_cast<std::size_t>(d) * ((i + k) % d) + (j + l) % d]
                  .matrix;
          if (((a * b) - expect).cwiseAbs().maxCoeff() > tol) return false;
        }
      }
    }
  }

  // Adjoint relation.
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Matrix& a = ops[static_cast<std::size_t>(d) * i + j].matrix;
      const Matrix expect =
          root_power(d, static_cast<long>(i) * j) *
          ops[static_cast<std::size_t>(d) * ((d - i) % d) + (d - j) % d].matrix;
      if ((a.adjoint() - expect).cwiseAbs().maxCoeff() > tol) return false;
    }
  }

  // Hilbert-Schmidt orthogonality, tr(A_mu A_nu^dagger) == d delta_{mu,nu}.
  for (int mu = 0; mu < d * d; ++mu) {
    for (int nu = 0; nu < d * d; ++nu) {
      const Complex tr =
          (ops[mu].matrix * ops[nu].matrix.adjoint()).trace();
      const Complex expect = (mu == nu) ? Complex(d, 0.0) : Complex(0.0, 0.0);
      if (std::abs(tr - expect) > tol) return false;
    }
  }
  return true;
}

}  // namespace gmecrit
