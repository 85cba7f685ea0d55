#include "app.hpp"

#include <CLI11.hpp>

#include "commands.hpp"
#include "nmaw/accel/calibration.hpp"
#include "nmaw/error.hpp"
#include "nmaw/io/rng.hpp"

namespace nmaw::cli {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Near-memory workload toolkit: read filtering, weather stencils, "
               "accelerator model and roofline."};
  app.name("nmaw");
  app.set_config("--config", "", "Read option defaults from an INI/TOML file");
  app.require_subcommand(1);

  // Raw option values; converted after parsing so errors map to exit code 1.
  std::string pairs, generate, grid, kernel, pes, calibration, bandwidth;
  std::vector<std::string> platforms, kernels;
  std::string roofline_platform = "POWER9";
  int threshold = 5, channels = 0;
  unsigned workers = 1;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool corrupt = false, measure = false;

  auto* filter = app.add_subcommand("filter", "Filter sequence pairs with the snake search");
  filter->add_option("--pairs", pairs, "Pair file: <reference>TAB<query> per line");
  filter->add_option("--generate", generate, "Synthetic pairs: n,m,edits[,seed]; edits k or lo-hi");
  filter->add_option("--edit-threshold,-e", threshold, "Edit threshold E")->capture_default_str();
  filter->add_option("--workers,-w", workers, "Worker threads")->capture_default_str();
  filter->add_option("--out,-o", out_dir, "Output directory")->default_str(".");

  auto* stencil = app.add_subcommand("stencil", "Run a stencil: reference vs optimized");
  stencil->add_option("--kernel,-k", kernel, "hdiff or vadvc")->required();
  stencil->add_option("--grid", grid, "I,J,K,halo[,seed]")->default_str("64,64,16,2");
  stencil->add_option("--workers,-w", workers, "Worker threads")->capture_default_str();
  stencil->add_option("--out,-o", out_dir, "Output directory")->default_str(".");
  stencil->add_flag("--test-corrupt-optimized", corrupt)->group("");

  auto* simulate = app.add_subcommand("simulate", "Sweep the accelerator model over PE counts");
  simulate->add_option("--kernel,-k", kernel, "SneakySnake, vadvc or hdiff")->required();
  simulate->add_option("--platform,-p", platforms, "Board preset(s); default all")
      ->delimiter(',');
  simulate->add_option("--pes", pes, "PE range lo..hi; default 1..cap per board");
  simulate->add_option("--channels-per-pe", channels, "Memory channels per PE");
  simulate->add_option("--calibration,-c", calibration, "Calibration file");
  simulate->add_option("--out,-o", out_dir, "Output directory")->default_str(".");

  auto* roof = app.add_subcommand("roofline", "Place instrumented kernels on a roofline");
  roof->add_option("--platform,-p", roofline_platform, "Roofline preset")->capture_default_str();
  roof->add_option("--bandwidth", bandwidth, "Bandwidth roof label; default the first");
  roof->add_option("--kernel,-k", kernels, "Kernel(s); default all three")->delimiter(',');
  roof->add_flag("--measure", measure, "Time the kernels and report measured GFLOPS");
  roof->add_option("--seed", seed, "Input seed; default $NMAW_SEED or 42");
  roof->add_option("--out,-o", out_dir, "Output directory")->default_str(".");

  auto* report = app.add_subcommand("report", "Run the full desk-scale suite into one bundle");
  report->add_option("--out,-o", out_dir, "Output directory")->default_str("report");
  report->add_option("--calibration,-c", calibration, "Calibration file");
  report->add_option("--seed", seed, "Seed; default $NMAW_SEED or 42");
  report->add_option("--workers,-w", workers, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const auto dir = [&](const char* fallback) {
      return std::filesystem::path(out_dir.empty() ? fallback : out_dir);
    };
    const auto resolved_seed = [&](const CLI::App* sub) {
      return sub->count("--seed") > 0 ? seed : io::seed_from_env(kDefaultSeed);
    };
    const auto calibration_path = [&] {
      return calibration.empty() ? accel::default_calibration_path()
                                 : std::filesystem::path(calibration);
    };

    if (filter->parsed()) {
      FilterSpec spec;
      if (!pairs.empty()) spec.pairs = pairs;
      if (!generate.empty()) spec.generate = parse_generate(generate);
      spec.threshold = threshold;
      spec.workers = workers;
      spec.out = dir(".");
      return run_filter(spec, out, err);
    }
    if (stencil->parsed()) {
      StencilSpec spec;
      spec.kernel = parse_stencil_kind(kernel);
      spec.grid = parse_grid(grid.empty() ? "64,64,16,2" : grid);
      spec.workers = workers;
      spec.out = dir(".");
      spec.corrupt_optimized = corrupt;
      return run_stencil(spec, out, err);
    }
    if (simulate->parsed()) {
      SimulateSpec spec;
      spec.kernel = accel::parse_kernel(kernel);
      spec.platforms = platforms;
      if (!pes.empty()) spec.pes = accel::parse_pe_range(pes);
      if (simulate->count("--channels-per-pe") > 0) {
        if (channels < 1) {
          throw Error(ErrorKind::InvalidArgument, "--channels-per-pe must be >= 1");
        }
        spec.channels_per_pe = channels;
      }
      spec.calibration = calibration_path();
      spec.out = dir(".");
      return run_simulate(spec, out, err);
    }
    if (roof->parsed()) {
      RooflineSpec spec;
      spec.platform = roofline_platform;
      spec.bandwidth_label = bandwidth;
      for (const auto& k : kernels) spec.kernels.push_back(accel::parse_kernel(k));
      spec.measure = measure;
      spec.seed = resolved_seed(roof);
      spec.out = dir(".");
      return run_roofline(spec, out, err);
    }
    if (report->parsed()) {
      ReportSpec spec;
      spec.out = dir("report");
      spec.calibration = calibration_path();
      spec.seed = resolved_seed(report);
      spec.workers = workers;
      return run_report(spec, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace nmaw::cli
