#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmecrit/criteria.hpp"

namespace gmecrit {

// Named one-parameter state families: a fixed base state mixed with white
// noise at visibility x.
enum class FamilyKind { WNoise, GhzNoise, RandomNoise, File };

struct ScanConfig {
  FamilyKind family = FamilyKind::WNoise;
  std::string input_path;  // FamilyKind::File
  int n = 0;               // 0 picks the family default
  int d = 0;
  CriterionParams params;
  double x_min = 0.0;
  double x_max = 1.0;
  int steps = 11;
  bool use_pi = false;
  std::optional<std::uint64_t> seed;
};

class NoiseFamily {
 public:
  NoiseFamily(std::string name, DensityMatrix base);

  const std::string& name() const { return name_; }
  const DensityMatrix& base() const { return base_; }
  DensityMatrix at(double x) const;

 private:
  std::string name_;
  DensityMatrix base_;
};

FamilyKind parse_family(const std::string& name);

// Resolves the configured family into its base state.  w-noise is the
// three-qubit W projector, ghz-noise the (n, d) GHZ projector, random-noise a
// full-rank seeded random state, file the loaded input.
NoiseFamily make_family(const ScanConfig& config);

struct ScanRow {
  double x = 0.0;
  double T = 0.0;
  double K = 0.0;
  std::optional<double> J;
  double min_margin = 0.0;  // min over bipartitions of threshold - norm
  bool gme_K = false;
  std::optional<bool> gme_J;
};

// Evaluates the full criterion on an inclusive, evenly spaced visibility grid.
std::vector<ScanRow> scan(const NoiseFamily& family, const ScanConfig& config);

// What a critical-visibility search should watch for: the aggregate test
// against the max or mean threshold, or a single bipartition exclusion.
struct CriticalTarget {
  enum class Kind { GmeK, GmeJ, Bipartition };
  Kind kind = Kind::GmeK;
  Bipartition split;
};

// Accepts "gme-K", "gme-J" or a bipartition spec such as "1|234" / "1,4|2,3".
CriticalTarget parse_target(const std::string& text, int n);

struct CriticalResult {
  std::optional<double> x;  // empty when the verdict never fires on [0, 1]
  // Bracketing certificate: the verdict re-evaluated one tolerance below and
  // above the reported point.
  double probe_below = 0.0;
  bool verdict_below = false;
  double probe_above = 0.0;
  bool verdict_above = false;
};

// Bisects the verdict over x in [0, 1] down to |hi - lo| <= tol and reports
// the upper end.  Assumes the verdict is monotone in x, which holds for
// white-noise families.
CriticalResult critical_visibility(const NoiseFamily& family,
                                   const ScanConfig& config,
                                   const CriticalTarget& target, double tol);

struct ReproCell {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct ReproduceResult {
  std::string id;
  std::vector<ReproCell> cells;
  bool all_pass = false;
};

// Recomputes a pinned reference table ("table1", "example2-bisep",
// "example2-gme") and compares each cell against its expected value.
ReproduceResult reproduce(const std::string& id);

// ---- fixed-width text formatting --------------------------------------

// All CLI-facing numbers go through one 12-significant-digit formatter so
// repeat runs produce byte-identical output.
std::string format_g12(double v);
double round_g12(double v);

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);
nlohmann::json scan_to_json(const std::vector<ScanRow>& rows);
nlohmann::json report_to_json(const CriterionReport& report);
void write_critical_text(std::ostream& out, const CriticalResult& result);
void write_reproduce_text(std::ostream& out, const ReproduceResult& result);

}  // namespace gmecrit
