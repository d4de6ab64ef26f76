#include "gmecrit/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "gmecrit/io.hpp"

namespace gmecrit {

namespace {

using nlohmann::json;

int resolve_n(const ScanConfig& config, int fallback) {
  return config.n > 0 ? config.n : fallback;
}

int resolve_d(const ScanConfig& config, int fallback) {
  return config.d > 0 ? config.d : fallback;
}

ScanRow row_from_report(double x, const CriterionReport& report) {
  ScanRow row;
  row.x = x;
  row.T = report.T;
  row.K = report.K;
  row.J = report.J;
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& rec : report.records) {
    margin = std::min(margin, rec.threshold - rec.norm);
  }
  row.min_margin = margin;
  row.gme_K = report.gme_detected;
  row.gme_J = report.gme_detected_pi;
  return row;
}

}  // namespace

NoiseFamily::NoiseFamily(std::string name, DensityMatrix base)
    : name_(std::move(name)), base_(std::move(base)) {}

DensityMatrix NoiseFamily::at(double x) const {
  return white_noise_mix(base_, x);
}

FamilyKind parse_family(const std::string& name) {
  if (name == "w-noise") return FamilyKind::WNoise;
  if (name == "ghz-noise") return FamilyKind::GhzNoise;
  if (name == "random-noise") return FamilyKind::RandomNoise;
  if (name == "file") return FamilyKind::File;
  throw std::invalid_argument("unknown family '" + name + "'");
}

NoiseFamily make_family(const ScanConfig& config) {
  switch (config.family) {
    case FamilyKind::WNoise: {
      const int n = resolve_n(config, 3);
      const int d = resolve_d(config, 2);
      if (n != 3 || d != 2) {
        throw std::invalid_argument(
            "w-noise is a three-qubit family; leave n and d unset");
      }
      return NoiseFamily("w-noise", w_state());
    }
    case FamilyKind::GhzNoise: {
      const int n = resolve_n(config, 4);
      const int d = resolve_d(config, 2);
      if (n < 3) {
        throw std::invalid_argument(
            "ghz-noise needs at least 3 parties for the criteria, got " +
            std::to_string(n));
      }
      return NoiseFamily("ghz-noise", ghz_state(n, d));
    }
    case FamilyKind::RandomNoise: {
      const int n = resolve_n(config, 3);
      const int d = resolve_d(config, 2);
      if (n < 3) {
        throw std::invalid_argument(
            "random-noise needs at least 3 parties, got " + std::to_string(n));
      }
      if (!config.seed) {
        throw std::invalid_argument("random-noise needs an explicit seed");
      }
      SystemDims dims(std::vector<int>(static_cast<std::size_t>(n), d));
      const long D = dims.total();
      return NoiseFamily("random-noise", random_density(dims, D, *config.seed));
    }
    case FamilyKind::File: {
      if (config.input_path.empty()) {
        throw std::invalid_argument("file family needs an input path");
      }
      return NoiseFamily("file", load_state_file(config.input_path));
    }
  }
  throw std::logic_error("unreachable family kind");
}

std::vector<ScanRow> scan(const NoiseFamily& family, const ScanConfig& config) {
  if (config.steps < 2) {
    throw std::invalid_argument("scan needs at least 2 steps, got " +
                                std::to_string(config.steps));
  }
  if (!(config.x_min >= 0.0 && config.x_min < config.x_max &&
        config.x_max <= 1.0)) {
    throw std::invalid_argument(
        "scan needs 0 <= x-min < x-max <= 1");
  }
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(config.steps));
  for (int i = 0; i < config.steps; ++i) {
    const double x = config.x_min + (config.x_max - config.x_min) * i /
                                        (config.steps - 1);
    const auto report = detect(family.at(x), config.params, config.use_pi);
    rows.push_back(row_from_report(x, report));
  }
  return rows;
}

CriticalTarget parse_target(const std::string& text, int n) {
  CriticalTarget target;
  if (text == "gme-K") {
    target.kind = CriticalTarget::Kind::GmeK;
  } else if (text == "gme-J") {
    target.kind = CriticalTarget::Kind::GmeJ;
  } else {
    target.kind = CriticalTarget::Kind::Bipartition;
    target.split = parse_bipartition(text, n);
  }
  return target;
}

CriticalResult critical_visibility(const NoiseFamily& family,
                                   const ScanConfig& config,
                                   const CriticalTarget& target, double tol) {
  if (!(tol > 0.0) || tol >= 1.0) {
    throw std::invalid_argument("bisection tolerance must lie in (0, 1)");
  }

  long split_index = -1;
  if (target.kind == CriticalTarget::Kind::Bipartition) {
    const auto splits = enumerate_bipartitions(family.base().dims.n());
    for (std::size_t i = 0; i < splits.size(); ++i) {
      if (splits[i].left == target.split.left &&
          splits[i].right == target.split.right) {
        split_index = static_cast<long>(i);
        break;
      }
    }
    if (split_index < 0) {
      throw std::invalid_argument("bipartition '" + target.split.label() +
                                  "' is not in the canonical enumeration");
    }
  }

  const bool needs_pi = target.kind == CriticalTarget::Kind::GmeJ;
  auto verdict = [&](double x) {
    const auto report = detect(family.at(x), config.params, needs_pi);
    switch (target.kind) {
      case CriticalTarget::Kind::GmeK:
        return report.gme_detected;
      case CriticalTarget::Kind::GmeJ:
        return *report.gme_detected_pi;
      case CriticalTarget::Kind::Bipartition:
        return report.records[static_cast<std::size_t>(split_index)].excluded;
    }
    return false;
  };

  CriticalResult result;
  if (!verdict(1.0)) {
    result.probe_below = result.probe_above = 1.0;
    return result;  // never fires
  }
  double lo = 0.0;
  double hi = 1.0;
  if (verdict(0.0)) {
    hi = 0.0;  // fires everywhere
  } else {
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      (verdict(mid) ? hi : lo) = mid;
    }
  }
  result.x = hi;
  result.probe_below = std::max(0.0, hi - tol);
  result.verdict_below = verdict(result.probe_below);
  result.probe_above = std::min(1.0, hi + tol);
  result.verdict_above = verdict(result.probe_above);
  return result;
}

ReproduceResult reproduce(const std::string& id) {
  ReproduceResult result;
  result.id = id;
  auto cell = [&](const std::string& name, double computed, double expected,
                  double tol) {
    result.cells.push_back(
        {name, computed, expected, tol, std::abs(computed - expected) <= tol});
  };

  if (id == "table1") {
    const double weights[3][2] = {{1.0, 1.0}, {0.5, 2.0}, {0.1, 2.0}};
    const double slopes[3] = {4.7952, 7.2704, 6.6688};
    const double ceilings[3] = {1.0 + std::sqrt(3.0), 0.5 + 2.0 * std::sqrt(3.0),
                                0.1 + 2.0 * std::sqrt(3.0)};
    const double criticals[3] = {0.5697, 0.5452, 0.5344};
    for (int r = 0; r < 3; ++r) {
      ScanConfig config;
      config.family = FamilyKind::WNoise;
      config.params = {weights[r][0], weights[r][1]};
      const auto family = make_family(config);
      const auto report = detect(family.at(1.0), config.params, false);
      const std::string tag = "(alpha=" + format_g12(weights[r][0]) +
                              ",beta=" + format_g12(weights[r][1]) + ")";
      cell("T/x " + tag, report.T, slopes[r], 5e-4);
      cell("K " + tag, report.K, ceilings[r], 1e-9);
      const auto crit = critical_visibility(
          family, config, parse_target("gme-K", 3), 1e-9);
      cell("critical-x " + tag, crit.x.value_or(-1.0), criticals[r], 1e-3);
    }
  } else if (id == "example2-bisep" || id == "example2-gme") {
    ScanConfig config;
    config.family = FamilyKind::GhzNoise;
    config.n = 4;
    config.d = 2;
    config.params = {0.1, 1.2};
    const auto family = make_family(config);
    if (id == "example2-bisep") {
      const auto report = detect(family.at(1.0), config.params, false);
      cell("norm(1|234)/x", report.records.front().norm, 6.1, 1e-3);
      cell("W(1|234)", report.records.front().threshold,
           0.1 + 1.2 * std::sqrt(5.5), 1e-9);
      const auto crit = critical_visibility(
          family, config, parse_target("1|234", 4), 1e-9);
      cell("critical-x(1|234)", crit.x.value_or(-1.0), 0.4777, 1e-3);
    } else {
      const auto report = detect(family.at(1.0), config.params, true);
      cell("T/x", report.T, 151.0 / 25.0, 1e-3);
      cell("J", report.J.value_or(-1.0),
           (110.0 + 12.0 * std::sqrt(22.0) + 3.0 * std::sqrt(3.0)) / 50.0,
           1e-9);
      const auto crit = critical_visibility(
          family, config, parse_target("gme-J", 4), 1e-9);
      cell("critical-x(gme-J)", crit.x.value_or(-1.0), 0.5678, 1e-3);
    }
  } else {
    throw std::invalid_argument(
        "unknown reproduction id '" + id +
        "' (expected table1, example2-bisep or example2-gme)");
  }

  result.all_pass = std::all_of(result.cells.begin(), result.cells.end(),
                                [](const ReproCell& c) { return c.pass; });
  return result;
}

// ---- fixed-width text formatting --------------------------------------

std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round_g12(double v) {
  return std::strtod(format_g12(v).c_str(), nullptr);
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "x,T,K,J,min_margin,gme_K,gme_J\n";
  for (const auto& row : rows) {
    out << format_g12(row.x) << ',' << format_g12(row.T) << ','
        << format_g12(row.K) << ',';
    if (row.J) out << format_g12(*row.J);
    out << ',' << format_g12(row.min_margin) << ','
        << (row.gme_K ? "true" : "false") << ',';
    if (row.gme_J) out << (*row.gme_J ? "true" : "false");
    out << '\n';
  }
}

json scan_to_json(const std::vector<ScanRow>& rows) {
  json arr = json::array();
  for (const auto& row : rows) {
    json r;
    r["x"] = round_g12(row.x);
    r["T"] = round_g12(row.T);
    r["K"] = round_g12(row.K);
    if (row.J) r["J"] = round_g12(*row.J);
    r["min_margin"] = round_g12(row.min_margin);
    r["gme_K"] = row.gme_K;
    if (row.gme_J) r["gme_J"] = *row.gme_J;
    arr.push_back(std::move(r));
  }
  return json{{"rows", std::move(arr)}};
}

json report_to_json(const CriterionReport& report) {
  json doc;
  doc["dims"] = report.dims.dims;
  doc["alpha"] = round_g12(report.params.alpha);
  doc["beta"] = round_g12(report.params.beta);
  json splits = json::array();
  for (const auto& rec : report.records) {
    splits.push_back({{"split", rec.split.label()},
                      {"norm", round_g12(rec.norm)},
                      {"W", round_g12(rec.threshold)},
                      {"margin", round_g12(rec.threshold - rec.norm)},
                      {"excluded", rec.excluded}});
  }
  doc["bipartitions"] = std::move(splits);
  doc["T"] = round_g12(report.T);
  doc["K"] = round_g12(report.K);
  if (report.J) doc["J"] = round_g12(*report.J);
  doc["gme_detected"] = report.gme_detected;
  if (report.gme_detected_pi) doc["gme_detected_pi"] = *report.gme_detected_pi;
  doc["excluded"] = report.excluded_labels();
  return doc;
}

void write_critical_text(std::ostream& out, const CriticalResult& result) {
  if (!result.x) {
    out << "critical_x none\n";
    return;
  }
  out << "critical_x " << format_g12(*result.x) << '\n'
      << "certificate x=" << format_g12(result.probe_below)
      << " verdict=" << (result.verdict_below ? "true" : "false") << '\n'
      << "certificate x=" << format_g12(result.probe_above)
      << " verdict=" << (result.verdict_above ? "true" : "false") << '\n';
}

void write_reproduce_text(std::ostream& out, const ReproduceResult& result) {
  out << "[" << result.id << "]\n";
  for (const auto& cell : result.cells) {
    out << (cell.pass ? "PASS" : "FAIL") << "  " << cell.name
        << "  computed=" << format_g12(cell.computed)
        << "  expected=" << format_g12(cell.expected)
        << "  tol=" << format_g12(cell.tol) << '\n';
  }
  out << (result.all_pass ? "all cells match\n" : "MISMATCH\n");
}

}  // namespace gmecrit
