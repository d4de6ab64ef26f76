#include "gmecrit/criteria.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gmecrit {

namespace {

void require_params(const CriterionParams& params) {
  if (!std::isfinite(params.alpha) || !std::isfinite(params.beta)) {
    throw std::invalid_argument("criterion weights must be finite");
  }
  if (params.alpha == 0.0 && params.beta == 0.0) {
    throw std::invalid_argument("criterion weights must not both be zero");
  }
}

void require_multipartite(const SystemDims& dims) {
  if (dims.n() < 3) {
    throw std::invalid_argument(
        "multipartite criteria need at least 3 parties, got " +
        std::to_string(dims.n()));
  }
}

long bipartition_count(int n) {
  // sum_{s=1}^{floor(n/2)} C(n, s)
  long count = 0;
  long binom = 1;
  for (int s = 1; 2 * s <= n; ++s) {
    binom = binom * (n - s + 1) / s;
    count += binom;
  }
  return count;
}

}  // namespace

double trace_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double vector_norm_bound(const SystemDims& dims,
                         std::span<const int> parties) {
  if (parties.empty()) {
    throw std::invalid_argument("vector_norm_bound: empty party list");
  }
  if (parties.size() == 1) {
    return std::sqrt(static_cast<double>(dims.dim(parties[0]) - 1));
  }
  const double q = static_cast<double>(parties.size());
  double prod = 1.0;
  double inv_sq = 0.0;
  for (int p : parties) {
    const double d = static_cast<double>(dims.dim(p));
    prod *= d;
    inv_sq += 1.0 / (d * d);
  }
  return std::sqrt((prod * (q - 1.0 - inv_sq) + 1.0) / (q - 1.0));
}

double threshold_w(const Bipartition& split, const SystemDims& dims,
                   const CriterionParams& params) {
  require_multipartite(dims);
  require_params(params);
  if (split.n != dims.n()) {
    throw std::invalid_argument("threshold_w: bipartition covers " +
                                std::to_string(split.n) + " parties, dims " +
                                std::to_string(dims.n()));
  }
  // Left factor bounds the row vector; the right side splits into the
  // distinguished party (alpha block) and the full group (beta block).
  const double left = vector_norm_bound(dims, split.left);
  const double single =
      std::sqrt(static_cast<double>(dims.dim(split.distinguished()) - 1));
  const double group = vector_norm_bound(dims, split.right);
  return left * (std::abs(params.alpha) * single +
                 std::abs(params.beta) * group);
}

BipartitionRecord bipartition_check(const CorrelationTensor& tensor,
                                    const Bipartition& split,
                                    const CriterionParams& params) {
  BipartitionRecord rec;
  rec.split = split;
  rec.norm = trace_norm(
      f_matrix(tensor, split, params.alpha, params.beta).matrix);
  rec.threshold = threshold_w(split, tensor.dims, params);
  rec.excluded = rec.norm > rec.threshold + kVerdictTol;
  return rec;
}

double aggregate_t(const CorrelationTensor& tensor,
                   const CriterionParams& params) {
  require_multipartite(tensor.dims);
  require_params(params);
  double sum = 0.0;
  const auto splits = enumerate_bipartitions(tensor.dims.n());
  for (const auto& split : splits) {
    sum += trace_norm(
        f_matrix(tensor, split, params.alpha, params.beta).matrix);
  }
  return sum / static_cast<double>(bipartition_count(tensor.dims.n()));
}

double k_threshold(const SystemDims& dims, const CriterionParams& params) {
  require_multipartite(dims);
  require_params(params);
  double best = 0.0;
  for (const auto& split : enumerate_bipartitions(dims.n())) {
    best = std::max(best, threshold_w(split, dims, params));
  }
  return best;
}

double j_threshold(const SystemDims& dims, const CriterionParams& params) {
  require_multipartite(dims);
  require_params(params);
  if (!dims.uniform()) {
    throw std::invalid_argument(
        "averaged threshold needs equal local dimensions");
  }
  double sum = 0.0;
  for (const auto& split : enumerate_bipartitions(dims.n())) {
    sum += threshold_w(split, dims, params);
  }
  return sum / static_cast<double>(bipartition_count(dims.n()));
}

std::vector<std::string> CriterionReport::excluded_labels() const {
  std::vector<std::string> out;
  for (const auto& rec : records) {
    if (rec.excluded) out.push_back(rec.split.label());
  }
  return out;
}

CriterionReport detect(const DensityMatrix& rho, const CriterionParams& params,
                       bool use_pi) {
  require_multipartite(rho.dims);
  require_params(params);
  if (use_pi) {
    if (!rho.dims.uniform()) {
      throw std::invalid_argument(
          "averaged threshold needs equal local dimensions");
    }
    if (!is_permutation_invariant(rho, kPiTol)) {
      throw std::invalid_argument(
          "averaged threshold needs a permutation-invariant state");
    }
  }

  const auto tensor = extract_tensor(rho);

  CriterionReport report;
  report.dims = rho.dims;
  report.params = params;
  double sum = 0.0;
  for (const auto& split : enumerate_bipartitions(rho.dims.n())) {
    auto rec = bipartition_check(tensor, split, params);
    sum += rec.norm;
    report.K = std::max(report.K, rec.threshold);
    report.records.push_back(std::move(rec));
  }
  report.T = sum / static_cast<double>(bipartition_count(rho.dims.n()));
  report.gme_detected = report.T > report.K + kVerdictTol;
  if (use_pi) {
    report.J = j_threshold(rho.dims, params);
    report.gme_detected_pi = report.T > *report.J + kVerdictTol;
  }
  return report;
}

}  // namespace gmecrit
