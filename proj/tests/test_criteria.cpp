#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "gmecrit/criteria.hpp"
#include "test_util.hpp"

using namespace gmecrit;

TEST_CASE("trace norm sums singular values") {
  Matrix diag(2, 2);
  diag << 1, 0, 0, -2;
  CHECK(trace_norm(diag) == doctest::Approx(3.0).epsilon(1e-12));

  Matrix nilpotent = Matrix::Zero(2, 2);
  nilpotent(0, 1) = 1.0;
  CHECK(trace_norm(nilpotent) == doctest::Approx(1.0).epsilon(1e-12));

  // invariance under unitaries (here: a Givens rotation pair)
  testutil::Rng rng(5);
  const Matrix m = testutil::random_complex(rng, 4, 3);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Matrix rotated = svd.matrixU().adjoint() * m * svd.matrixV();
  CHECK(trace_norm(rotated) == doctest::Approx(trace_norm(m)).epsilon(1e-12));
}

TEST_CASE("product-state ceilings for correlation vectors") {
  const SystemDims qubits({2, 2, 2});
  CHECK(vector_norm_bound(qubits, std::array<int, 1>{0}) ==
        doctest::Approx(1.0));
  // pair of qubits: sqrt(3)
  CHECK(vector_norm_bound(qubits, std::array<int, 2>{1, 2}) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));

  const SystemDims four({2, 2, 2, 2});
  // qubit triple: sqrt(11/2)
  CHECK(vector_norm_bound(four, std::array<int, 3>{1, 2, 3}) ==
        doctest::Approx(std::sqrt(5.5)).epsilon(1e-15));

  const SystemDims qutrit({3, 3, 3});
  CHECK(vector_norm_bound(qutrit, std::array<int, 1>{2}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  // qutrit pair: sqrt((9 * (1 - 2/9) + 1) / 1) = sqrt(8)
  CHECK(vector_norm_bound(qutrit, std::array<int, 2>{0, 1}) ==
        doctest::Approx(std::sqrt(8.0)).epsilon(1e-14));
}

TEST_CASE("separability thresholds for named splits") {
  const SystemDims qubits({2, 2, 2});
  const auto one_vs_two = make_bipartition({0}, {1, 2});
  CHECK(threshold_w(one_vs_two, qubits, {1.0, 1.0}) ==
        doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-15));
  CHECK(threshold_w(one_vs_two, qubits, {0.5, 2.0}) ==
        doctest::Approx(0.5 + 2.0 * std::sqrt(3.0)).epsilon(1e-15));
  // weights enter through absolute values
  CHECK(threshold_w(one_vs_two, qubits, {-0.5, -2.0}) ==
        doctest::Approx(0.5 + 2.0 * std::sqrt(3.0)).epsilon(1e-15));

  const SystemDims four({2, 2, 2, 2});
  const auto pair_split = make_bipartition({0, 1}, {2, 3});
  // sqrt(3) * (0.1 + 1.2 * sqrt(3)) = 3.6 + 0.1 * sqrt(3)
  CHECK(threshold_w(pair_split, four, {0.1, 1.2}) ==
        doctest::Approx(3.6 + 0.1 * std::sqrt(3.0)).epsilon(1e-14));

  CHECK_THROWS_AS(threshold_w(make_bipartition({0}, {1}), SystemDims({2, 2}),
                              CriterionParams{1.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("global thresholds: max and mean over all splits") {
  const SystemDims qubits({2, 2, 2});
  CHECK(k_threshold(qubits, {1.0, 1.0}) ==
        doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-15));
  CHECK(k_threshold(qubits, {0.1, 2.0}) ==
        doctest::Approx(0.1 + 2.0 * std::sqrt(3.0)).epsilon(1e-15));
  // all three splits agree for equal dims, so the mean equals the max
  CHECK(j_threshold(qubits, {1.0, 1.0}) ==
        doctest::Approx(k_threshold(qubits, {1.0, 1.0})).epsilon(1e-15));

  const SystemDims four({2, 2, 2, 2});
  CHECK(k_threshold(four, {0.1, 1.2}) ==
        doctest::Approx(3.6 + 0.1 * std::sqrt(3.0)).epsilon(1e-14));
  // 4 single splits at 0.1 + 1.2 sqrt(5.5), 6 pair splits at the max
  const double mean =
      (110.0 + 12.0 * std::sqrt(22.0) + 3.0 * std::sqrt(3.0)) / 50.0;
  CHECK(j_threshold(four, {0.1, 1.2}) == doctest::Approx(mean).epsilon(1e-14));

  CHECK_THROWS_AS(j_threshold(SystemDims({2, 2, 3}), CriterionParams{1.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(k_threshold(qubits, CriterionParams{0.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("noisy W state: detection window on the visibility axis") {
  const auto base = w_state();
  const CriterionParams params{0.1, 2.0};

  const auto hot = detect(white_noise_mix(base, 0.6), params);
  CHECK(hot.gme_detected);
  CHECK(hot.T > hot.K + kVerdictTol);
  CHECK(hot.records.size() == 3);

  const auto cold = detect(white_noise_mix(base, 0.2), params);
  CHECK_FALSE(cold.gme_detected);

  // the slope of T(x) matches the pinned family value
  const auto full = detect(base, params);
  CHECK(std::abs(full.T - 6.6688) < 5e-4);
}

TEST_CASE("noisy GHZ on four qubits reproduces the pinned landscape") {
  const auto base = ghz_state(4, 2);
  const CriterionParams params{0.1, 1.2};
  const auto report = detect(base, params, true);

  REQUIRE(report.records.size() == 10);
  // single-party splits come first and carry norm 6.1
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(report.records[static_cast<std::size_t>(i)].norm - 6.1) <
          1e-9);
  }
  // the six pair splits carry norm 6.0 and set the max threshold
  for (int i = 4; i < 10; ++i) {
    CHECK(std::abs(report.records[static_cast<std::size_t>(i)].norm - 6.0) <
          1e-9);
  }
  CHECK(std::abs(report.T - 151.0 / 25.0) < 1e-12);
  CHECK(report.K ==
        doctest::Approx(3.6 + 0.1 * std::sqrt(3.0)).epsilon(1e-14));
  REQUIRE(report.J.has_value());
  CHECK(*report.J == doctest::Approx((110.0 + 12.0 * std::sqrt(22.0) +
                                      3.0 * std::sqrt(3.0)) /
                                     50.0)
                         .epsilon(1e-14));
  CHECK(report.gme_detected);  // 6.04 > 3.773...
  CHECK(*report.gme_detected_pi);

  // the averaged bound fires before the max bound as noise grows
  const auto mid = detect(white_noise_mix(base, 0.6), params, true);
  CHECK(*mid.gme_detected_pi);
  const auto low = detect(white_noise_mix(base, 0.55), params, true);
  CHECK_FALSE(*low.gme_detected_pi);
}

TEST_CASE("exclusion flag matches the recorded numbers") {
  const auto tensor = extract_tensor(white_noise_mix(w_state(), 0.7));
  for (const auto& split : enumerate_bipartitions(3)) {
    const auto rec = bipartition_check(tensor, split, {1.0, 1.0});
    CHECK(rec.excluded == (rec.norm > rec.threshold + kVerdictTol));
    CHECK(rec.threshold ==
          doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-15));
  }
}

TEST_CASE("product states across a split are never flagged on that split") {
  testutil::Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const auto splits = enumerate_bipartitions(3);
    const auto& split = splits[static_cast<std::size_t>(
        rng.below(static_cast<int>(splits.size())))];
    std::vector<int> left_dims, right_dims;
    for (int p : split.left) left_dims.push_back(SystemDims({2, 2, 2}).dim(p));
    for (int p : split.right) right_dims.push_back(2);
    const auto left =
        random_density(SystemDims(left_dims), 1 + rng.below(2), rng.raw());
    const auto right =
        random_density(SystemDims(right_dims), 1 + rng.below(4), rng.raw());
    const auto rho = product_state(left, right, split);
    const auto tensor = extract_tensor(rho);
    const auto rec = bipartition_check(tensor, split, {0.5, 2.0});
    CHECK_FALSE(rec.excluded);
    CHECK(rec.norm <= rec.threshold + 1e-9);
  }
}

TEST_CASE("eigenvalues of the Hermitian part never exceed singular values") {
  testutil::Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const long m = 2 + rng.below(6);
    const Matrix mat = testutil::random_complex(rng, m, m);
    const Matrix herm = 0.5 * (mat + mat.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(herm, Eigen::EigenvaluesOnly);
    Eigen::JacobiSVD<Matrix> svd(mat);
    // eigenvalues ascend, singular values descend
    for (long i = 0; i < m; ++i) {
      CHECK(eig.eigenvalues()(m - 1 - i) <= svd.singularValues()(i) + 1e-10);
    }
  }
}

TEST_CASE("trace norm is subadditive, also for stacked blocks") {
  testutil::Rng rng(78);
  for (int trial = 0; trial < 25; ++trial) {
    const long rows1 = 1 + rng.below(5);
    const long rows2 = 1 + rng.below(5);
    const long cols = 1 + rng.below(6);
    const Matrix s1 = testutil::random_complex(rng, rows1, cols);
    const Matrix s2 = testutil::random_complex(rng, rows2, cols);
    Matrix stacked(rows1 + rows2, cols);
    stacked.topRows(rows1) = s1;
    stacked.bottomRows(rows2) = s2;
    CHECK(trace_norm(stacked) <=
          trace_norm(s1) + trace_norm(s2) + 1e-10);

    const Matrix g1 = testutil::random_complex(rng, 4, 3);
    const Matrix g2 = testutil::random_complex(rng, 4, 2);
    const Matrix a = g1 * g1.adjoint();
    const Matrix b = g2 * g2.adjoint();
    CHECK(trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-10);
  }
}

TEST_CASE("detection rejects degenerate setups") {
  const auto bell = ghz_state(2, 2);
  CHECK_THROWS_AS(detect(bell, CriterionParams{1.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(detect(w_state(), CriterionParams{0.0, 0.0}),
                  std::invalid_argument);
  const auto uneven = random_density(SystemDims({2, 2, 3}), 4, 3);
  CHECK_THROWS_AS(detect(uneven, CriterionParams{1.0, 1.0}, true),
                  std::invalid_argument);
  // permutation-variant state with the averaged bound requested
  const auto a = random_density(SystemDims({2}), 1, 41);
  const auto rest = random_density(SystemDims({2, 2}), 4, 42);
  const auto prod = product_state(a, rest, make_bipartition({0}, {1, 2}));
  CHECK_THROWS_AS(detect(prod, CriterionParams{1.0, 1.0}, true),
                  std::invalid_argument);
}
