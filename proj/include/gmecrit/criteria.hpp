#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gmecrit/correlation.hpp"

namespace gmecrit {

// Weights of the two blocks of the stacked unfolding.  Any finite pair with
// at least one non-zero entry is admissible; larger |beta|/|alpha| shifts
// sensitivity toward the many-party correlations.
struct CriterionParams {
  double alpha = 1.0;
  double beta = 1.0;
};

// Margin applied to every verdict so that floating-point ties never flip a
// detection: a bound must be beaten by more than this to count.
inline constexpr double kVerdictTol = 1e-12;

// Permutation-invariance tolerance used when the averaged threshold is
// requested.
inline constexpr double kPiTol = 1e-8;

// Sum of singular values.
double trace_norm(const Matrix& m);

// Largest possible norm of the full correlation vector on the given parties,
// maximized over product states:
//   sqrt(d - 1)                                         for one party,
//   sqrt((prod_d * (q - 1 - sum 1/d^2) + 1) / (q - 1))  for q >= 2 parties.
double vector_norm_bound(const SystemDims& dims, std::span<const int> parties);

// Ceiling of the stacked-unfolding trace norm over states separable across
// the bipartition.
double threshold_w(const Bipartition& split, const SystemDims& dims,
                   const CriterionParams& params);

struct BipartitionRecord {
  Bipartition split;
  double norm = 0.0;       // trace norm of the stacked unfolding
  double threshold = 0.0;  // separability ceiling for this split
  bool excluded = false;   // norm > threshold + kVerdictTol
};

// Norm-versus-threshold record for one bipartition.  `excluded` means the
// state cannot be separable across this split.
BipartitionRecord bipartition_check(const CorrelationTensor& tensor,
                                    const Bipartition& split,
                                    const CriterionParams& params);

// Mean stacked-unfolding trace norm over all bipartitions.
double aggregate_t(const CorrelationTensor& tensor,
                   const CriterionParams& params);

// Largest per-bipartition threshold; exceeding it rules out every
// biseparable mixture.
double k_threshold(const SystemDims& dims, const CriterionParams& params);

// Mean threshold; valid as a biseparability ceiling only for
// permutation-invariant states (requires equal local dimensions).
double j_threshold(const SystemDims& dims, const CriterionParams& params);

struct CriterionReport {
  SystemDims dims;
  CriterionParams params;
  std::vector<BipartitionRecord> records;
  double T = 0.0;
  double K = 0.0;
  std::optional<double> J;
  bool gme_detected = false;
  std::optional<bool> gme_detected_pi;

  std::vector<std::string> excluded_labels() const;
};

// Runs every bipartition check plus the aggregate test.  use_pi additionally
// evaluates the averaged threshold and requires a permutation-invariant
// state on equal local dimensions.
CriterionReport detect(const DensityMatrix& rho, const CriterionParams& params,
                       bool use_pi = false);

}  // namespace gmecrit
