#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gmecrit/io.hpp"
#include "gmecrit/sweep.hpp"

namespace {

using namespace gmecrit;

// Options shared by the family-driven subcommands.
struct FamilyOpts {
  std::string family;
  std::string input;
  int n = 0;
  int d = 0;
  double alpha = 1.0;
  double beta = 1.0;
  std::optional<std::uint64_t> seed;
};

void add_family_opts(CLI::App* cmd, FamilyOpts& opts) {
  cmd->add_option("--family", opts.family,
                  "Named state family: w-noise, ghz-noise or random-noise");
  cmd->add_option("--input", opts.input, "Path to a JSON state file");
  cmd->add_option("--n", opts.n, "Party count for ghz-noise / random-noise");
  cmd->add_option("--d", opts.d, "Local dimension for ghz-noise / random-noise");
  cmd->add_option("--alpha", opts.alpha, "Weight of the single-party block")
      ->capture_default_str();
  cmd->add_option("--beta", opts.beta, "Weight of the group block")
      ->capture_default_str();
  cmd->add_option("--seed", opts.seed, "Generator seed (random-noise)");
}

ScanConfig config_from(const FamilyOpts& opts) {
  ScanConfig config;
  if (!opts.input.empty()) {
    if (!opts.family.empty()) {
      throw std::invalid_argument("--family and --input are exclusive");
    }
    config.family = FamilyKind::File;
    config.input_path = opts.input;
  } else if (!opts.family.empty()) {
    config.family = parse_family(opts.family);
    if (config.family == FamilyKind::File) {
      throw std::invalid_argument("the file family needs --input");
    }
  } else {
    throw std::invalid_argument("pick a state with --family or --input");
  }
  config.n = opts.n;
  config.d = opts.d;
  config.params = {opts.alpha, opts.beta};
  config.seed = opts.seed;
  return config;
}

// Writes to the path when given, stdout otherwise.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Multipartite entanglement detection from Weyl-basis correlation "
      "tensors"};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- detect ----------------------------------------------------------
  auto* detect_cmd =
      app.add_subcommand("detect", "Evaluate the criterion on one state");
  auto detect_opts = std::make_shared<FamilyOpts>();
  auto detect_x = std::make_shared<std::optional<double>>();
  auto detect_pi = std::make_shared<bool>(false);
  auto detect_out = std::make_shared<std::string>();
  add_family_opts(detect_cmd, *detect_opts);
  detect_cmd->add_option("--x", *detect_x, "White-noise visibility in [0, 1]");
  detect_cmd->add_flag("--use-pi", *detect_pi,
                       "Also test the averaged (permutation-invariant) bound");
  detect_cmd->add_option("--output", *detect_out, "Write the report here");
  detect_cmd->callback([=]() {
    const ScanConfig config = config_from(*detect_opts);
    DensityMatrix state = [&] {
      if (config.family == FamilyKind::File && !*detect_x) {
        return load_state_file(config.input_path);
      }
      if (!*detect_x) {
        throw std::invalid_argument("family states need --x");
      }
      return make_family(config).at(**detect_x);
    }();
    const auto report = detect(state, config.params, *detect_pi);
    emit(*detect_out, report_to_json(report).dump(2) + "\n");
  });

  // ---- scan ------------------------------------------------------------
  auto* scan_cmd =
      app.add_subcommand("scan", "Sweep the criterion over a visibility grid");
  auto scan_opts = std::make_shared<FamilyOpts>();
  auto scan_range = std::make_shared<std::pair<double, double>>(0.0, 1.0);
  auto scan_steps = std::make_shared<int>(11);
  auto scan_pi = std::make_shared<bool>(false);
  auto scan_out = std::make_shared<std::string>();
  auto scan_format = std::make_shared<std::string>("csv");
  add_family_opts(scan_cmd, *scan_opts);
  scan_cmd->add_option("--x-min", scan_range->first, "Grid start")
      ->capture_default_str();
  scan_cmd->add_option("--x-max", scan_range->second, "Grid end")
      ->capture_default_str();
  scan_cmd->add_option("--steps", *scan_steps, "Grid points (inclusive ends)")
      ->capture_default_str();
  scan_cmd->add_flag("--use-pi", *scan_pi,
                     "Also test the averaged (permutation-invariant) bound");
  scan_cmd->add_option("--output", *scan_out, "Write rows here");
  scan_cmd
      ->add_option("--format", *scan_format, "Row format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  scan_cmd->callback([=]() {
    ScanConfig config = config_from(*scan_opts);
    config.x_min = scan_range->first;
    config.x_max = scan_range->second;
    config.steps = *scan_steps;
    config.use_pi = *scan_pi;
    const auto rows = scan(make_family(config), config);
    std::ostringstream text;
    if (*scan_format == "csv") {
      write_scan_csv(text, rows);
    } else {
      text << scan_to_json(rows).dump(2) << '\n';
    }
    emit(*scan_out, text.str());
  });

  // ---- critical --------------------------------------------------------
  auto* crit_cmd = app.add_subcommand(
      "critical", "Bisect for the visibility where a verdict first fires");
  auto crit_opts = std::make_shared<FamilyOpts>();
  auto crit_target = std::make_shared<std::string>();
  auto crit_tol = std::make_shared<double>(1e-9);
  auto crit_out = std::make_shared<std::string>();
  add_family_opts(crit_cmd, *crit_opts);
  crit_cmd
      ->add_option("--target", *crit_target,
                   "gme-K, gme-J or a bipartition such as 1|234")
      ->required();
  crit_cmd->add_option("--tol", *crit_tol, "Bisection width")
      ->capture_default_str();
  crit_cmd->add_option("--output", *crit_out, "Write the result here");
  crit_cmd->callback([=]() {
    const ScanConfig config = config_from(*crit_opts);
    const auto family = make_family(config);
    const auto target = parse_target(*crit_target, family.base().dims.n());
    const auto result = critical_visibility(family, config, target, *crit_tol);
    std::ostringstream text;
    write_critical_text(text, result);
    emit(*crit_out, text.str());
  });

  // ---- reproduce -------------------------------------------------------
  auto* repro_cmd = app.add_subcommand(
      "reproduce", "Recompute a pinned reference table and compare");
  auto repro_id = std::make_shared<std::string>();
  repro_cmd
      ->add_option("id", *repro_id,
                   "table1, example2-bisep or example2-gme")
      ->required();
  repro_cmd->callback([=, &exit_code]() {
    const auto result = reproduce(*repro_id);
    write_reproduce_text(std::cout, result);
    if (!result.all_pass) exit_code = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
