#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "nmaw/accel/calibration.hpp"
#include "nmaw/accel/sweep.hpp"
#include "nmaw/accel/trends.hpp"
#include "nmaw/error.hpp"
#include "nmaw/genomics/batch.hpp"
#include "nmaw/genomics/chip_maze.hpp"
#include "nmaw/genomics/edit_distance.hpp"
#include "nmaw/genomics/snake.hpp"
#include "nmaw/io/csv.hpp"
#include "nmaw/io/generate.hpp"
#include "nmaw/roofline/roofline.hpp"
#include "workloads.hpp"

namespace nmaw::cli {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Line {
  std::string name;
  bool passed;
  std::string detail;
};

std::string fmt(const char* pattern, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

// Zero false rejects and fused/materialized agreement on a planted batch.
io::CsvTable filter_section(std::uint64_t seed, unsigned workers, std::vector<Line>& lines) {
  constexpr std::size_t kPairs = 2000;
  constexpr std::size_t kLength = 100;
  const auto batch = io::generate_pairs(kPairs, kLength, {0, 15, 0.6, 0.2, 0.2}, seed);
  io::CsvTable table;
  table.header = {"edit_threshold",   "pairs",         "accepted",
                  "rejected",         "within_threshold", "false_rejects",
                  "path_mismatches"};
  for (const int e : {1, 2, 5, 10}) {
    const auto result = genomics::filter_batch(batch, e, workers);
    std::int64_t within = 0, false_rejects = 0, mismatches = 0;
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const auto& pair = batch[i];
      const auto& decision = *result.outcomes[i].decision;
      const bool close = genomics::edit_distance_banded(pair.reference, pair.query, e).has_value();
      within += close ? 1 : 0;
      if (close && !decision.accepted()) ++false_rejects;
      const auto slow =
          genomics::snake_search(genomics::build_chip_maze(pair.reference, pair.query, e), e);
      if (!(slow == decision)) ++mismatches;
    }
    table.rows.push_back({static_cast<std::int64_t>(e), static_cast<std::int64_t>(batch.size()),
                          static_cast<std::int64_t>(result.stats.accepted),
                          static_cast<std::int64_t>(result.stats.rejected), within,
                          false_rejects, mismatches});
    lines.push_back({"filter E=" + std::to_string(e), false_rejects == 0 && mismatches == 0,
                     std::to_string(false_rejects) + " false rejects, " +
                         std::to_string(mismatches) + " path mismatches"});
  }
  return table;
}

io::CsvTable stencil_section(std::uint64_t seed, unsigned workers, std::vector<Line>& lines,
                             std::ostringstream& timing) {
  struct Case {
    StencilKind kind;
    stencil::GridDims dims;
  };
  const Case cases[] = {{StencilKind::Hdiff, {64, 64, 16}},
                        {StencilKind::Hdiff, {256, 256, 64}},
                        {StencilKind::Vadvc, {32, 32, 64}},
                        {StencilKind::Vadvc, {256, 256, 64}}};
  io::CsvTable table;
  table.header = {"kernel",        "rows",       "cols",         "depth",
                  "flops",         "bytes_read", "bytes_written", "ai_flops_per_byte",
                  "equivalent",    "max_abs_diff", "max_residual"};
  for (const auto& c : cases) {
    const GridSpec grid{c.dims, 2, seed};
    const auto o = run_stencil_check(c.kind, grid, workers);
    const std::string shape = std::to_string(c.dims.rows) + "x" + std::to_string(c.dims.cols) +
                              "x" + std::to_string(c.dims.depth);
    table.rows.push_back({std::string(to_string(c.kind)), static_cast<std::int64_t>(c.dims.rows),
                          static_cast<std::int64_t>(c.dims.cols),
                          static_cast<std::int64_t>(c.dims.depth),
                          static_cast<std::int64_t>(o.counters.flops),
                          static_cast<std::int64_t>(o.counters.bytes_read),
                          static_cast<std::int64_t>(o.counters.bytes_written),
                          o.counters.arithmetic_intensity(),
                          std::string(o.equivalent ? "yes" : "no"), o.max_abs_diff,
                          o.max_residual});
    lines.push_back({std::string(to_string(c.kind)) + " " + shape, o.equivalent,
                     c.kind == StencilKind::Hdiff ? fmt("max abs diff %.3g", o.max_abs_diff)
                                                  : fmt("max residual %.3g", o.max_residual)});
    timing << "| " << to_string(c.kind) << " " << shape << " | "
           << fmt("%.2f", o.reference_seconds * 1e3) << " | "
           << fmt("%.2f", o.optimized_seconds * 1e3) << " |\n";
  }
  return table;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << text;
}

}  // namespace

int run_report(const ReportSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    const auto start = Clock::now();
    if (spec.workers < 1) throw Error(ErrorKind::InvalidArgument, "--workers must be >= 1");
    const auto cal = accel::load_calibration(spec.calibration);
    std::error_code ec;
    fs::create_directories(spec.out, ec);
    if (ec) throw Error(ErrorKind::IoError, "cannot create " + spec.out.string());

    std::vector<Line> lines;
    std::ostringstream timing;

    out << "filter correctness sample...\n";
    io::write_csv(filter_section(spec.seed, spec.workers, lines), spec.out / "filter_check.csv");

    out << "stencil equivalence...\n";
    io::write_csv(stencil_section(spec.seed, spec.workers, lines, timing),
                  spec.out / "stencil_check.csv");

    out << "simulator sweeps...\n";
    std::vector<accel::SweepRow> rows;
    for (const auto kernel :
         {accel::KernelKind::SneakySnake, accel::KernelKind::Vadvc, accel::KernelKind::Hdiff}) {
      for (const auto& [name, pc] : cal.platforms) {
        auto part = accel::sweep(cal, kernel, {name}, {1, pc.cap_for(kernel)});
        rows.insert(rows.end(), part.begin(), part.end());
      }
    }
    io::write_csv(accel::sweep_table(rows), spec.out / "sweep.csv");

    const auto checks = accel::run_trend_checks(cal);
    io::CsvTable trends;
    trends.header = {"check", "description", "result", "detail"};
    for (const auto& c : checks) {
      trends.rows.push_back({c.id, c.description, std::string(c.passed ? "pass" : "fail"),
                             c.detail});
      lines.push_back({"trend " + c.id, c.passed, c.detail});
    }
    io::write_csv(trends, spec.out / "trends.csv");

    out << "roofline...\n";
    const auto power9 = roofline::roofline_preset("POWER9");
    const auto& label = power9.bandwidths.front().label;
    const auto placed = roofline::place_kernels(
        instrument_kernels({accel::KernelKind::SneakySnake, accel::KernelKind::Vadvc,
                            accel::KernelKind::Hdiff},
                           spec.seed, false),
        power9, label);
    io::write_csv(roofline::roofline_table(placed), spec.out / "roofline.csv");
    for (const auto& p : placed) {
      lines.push_back({"roofline " + p.kernel, p.bound == roofline::BoundClass::Memory,
                       fmt("ai %.4g flop/B, ", p.ai) + std::string(to_string(p.bound)) +
                           "-bound"});
    }

    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    std::size_t failed = 0;
    std::ostringstream md;
    md << "# nmaw report\n\n"
       << "Seed " << spec.seed << ", " << spec.workers << " worker(s), calibration `"
       << spec.calibration.filename().string() << "`.\n\n"
       << "CSV files in this directory are deterministic for a given seed and calibration; "
          "this page also carries wall-clock timings, which are not.\n\n"
       << "## Checks\n\n| check | result | detail |\n|---|---|---|\n";
    for (const auto& l : lines) {
      failed += l.passed ? 0 : 1;
      md << "| " << l.name << " | " << (l.passed ? "pass" : "**FAIL**") << " | " << l.detail
         << " |\n";
    }
    md << "\n## Stencil timings (ms)\n\n| case | reference | optimized |\n|---|---|---|\n"
       << timing.str()
       << "\n## Files\n\n"
          "- `filter_check.csv`: filter verdicts against banded edit distance\n"
          "- `stencil_check.csv`: counters and equivalence per stencil case\n"
          "- `sweep.csv`: simulated time, power and efficiency per kernel, board and PE count\n"
          "- `trends.csv`: modelled trend checks\n"
          "- `roofline.csv`: kernel placement on the POWER9 roofline\n\n"
       << fmt("Total wall time %.1f s.\n", elapsed);
    write_text(spec.out / "report.md", md.str());

    out << lines.size() - failed << '/' << lines.size() << " checks pass; report in "
        << (spec.out / "report.md").string() << fmt(" (%.1f s)\n", elapsed);
    for (const auto& l : lines) {
      if (!l.passed) err << "FAIL " << l.name << ": " << l.detail << '\n';
    }
    return failed == 0 ? kExitOk : kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace nmaw::cli
