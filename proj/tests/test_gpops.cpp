#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gmecrit/gpops.hpp"

using namespace gmecrit;

namespace {

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("primitive root hits the unit circle at the right angles") {
  CHECK(std::abs(primitive_root(2) - Complex(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(primitive_root(4) - Complex(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(primitive_root(3) -
                 Complex(-0.5, std::sqrt(3.0) / 2.0)) < 1e-15);
  for (int d = 2; d <= 7; ++d) {
    Complex power(1.0, 0.0);
    Complex sum(0.0, 0.0);
    const Complex omega = primitive_root(d);
    for (int k = 0; k < d; ++k) {
      CHECK(std::abs(power - root_power(d, k)) < 1e-14);
      if (k > 0) CHECK(std::abs(power - 1.0) > 0.5);  // primitive, not just a root
      sum += power;
      power *= omega;
    }
    CHECK(std::abs(power - 1.0) < 1e-13);  // omega^d == 1
    CHECK(std::abs(sum) < 1e-13);          // root powers cancel
  }
  CHECK(std::abs(root_power(5, -3) - root_power(5, 2)) < 1e-15);
  CHECK_THROWS_AS(primitive_root(1), std::invalid_argument);
  CHECK_THROWS_AS(root_power(0, 1), std::invalid_argument);
}

TEST_CASE("flat labels split into phase and shift") {
  const auto idx = WeylIndex::from_flat(3, 7);
  CHECK(idx.i == 2);
  CHECK(idx.j == 1);
  CHECK(idx.mu() == 7);
  CHECK_THROWS_AS(WeylIndex::from_flat(3, 9), std::out_of_range);
  CHECK_THROWS_AS(WeylIndex::from_flat(3, -1), std::out_of_range);
}

TEST_CASE("qubit basis is I, X, Z and their product") {
  const auto ops = weyl_basis(2);
  REQUIRE(ops.size() == 4);

  Matrix identity(2, 2), x(2, 2), z(2, 2), xz(2, 2);
  identity << 1, 0, 0, 1;
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  xz << 0, 1, -1, 0;
  CHECK(max_abs_diff(ops[0].matrix, identity) < 1e-15);
  CHECK(max_abs_diff(ops[1].matrix, x) < 1e-15);
  CHECK(max_abs_diff(ops[2].matrix, z) < 1e-15);
  CHECK(max_abs_diff(ops[3].matrix, xz) < 1e-15);
}

TEST_CASE("pure shift for d = 3 walks the cyclic basis") {
  const auto op = weyl_op(3, 0, 1);
  Matrix expect = Matrix::Zero(3, 3);
  expect(0, 1) = 1;
  expect(1, 2) = 1;
  expect(2, 0) = 1;
  CHECK(max_abs_diff(op.matrix, expect) < 1e-15);
}

TEST_CASE("one product identity, fully written out") {
  // X * Z picks up no phase and lands on the shift+phase element; Z * X
  // differs from it by omega = -1.
  const Matrix x = weyl_op(2, 0, 1).matrix;
  const Matrix z = weyl_op(2, 1, 0).matrix;
  const Matrix xz = weyl_op(2, 1, 1).matrix;
  CHECK(max_abs_diff(x * z, root_power(2, 1) * xz) < 1e-15);
  CHECK(max_abs_diff(z * x, xz) < 1e-15);
}

TEST_CASE("basis elements are unitary") {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& op : weyl_basis(d)) {
      CHECK(max_abs_diff(op.matrix * op.matrix.adjoint(),
                         Matrix::Identity(d, d)) < 1e-13);
    }
  }
}

TEST_CASE("basis is orthogonal under the Hilbert-Schmidt pairing") {
  for (int d = 2; d <= 5; ++d) {
    const auto ops = weyl_basis(d);
    for (std::size_t mu = 0; mu < ops.size(); ++mu) {
      for (std::size_t nu = 0; nu < ops.size(); ++nu) {
        const Complex inner =
            (ops[mu].matrix * ops[nu].matrix.adjoint()).trace();
        const Complex expect = mu == nu ? Complex(d, 0.0) : Complex(0.0, 0.0);
        CHECK(std::abs(inner - expect) < 1e-12);
      }
    }
  }
}

TEST_CASE("the full algebra closes for d = 2..5") {
  for (int d = 2; d <= 5; ++d) {
    CHECK(check_algebra(d, 1e-12));
  }
}

TEST_CASE("out-of-range exponents are rejected") {
  CHECK_THROWS_AS(weyl_op(2, 2, 0), std::out_of_range);
  CHECK_THROWS_AS(weyl_op(2, 0, -1), std::out_of_range);
  CHECK_THROWS_AS(weyl_basis(1), std::invalid_argument);
}
