#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "nmaw/accel/calibration.hpp"
#include "nmaw/accel/sweep.hpp"
#include "nmaw/accel/trends.hpp"
#include "nmaw/error.hpp"
#include "nmaw/genomics/batch.hpp"
#include "nmaw/genomics/chip_maze.hpp"
#include "nmaw/io/csv.hpp"
#include "nmaw/io/generate.hpp"
#include "nmaw/io/pairs.hpp"
#include "nmaw/roofline/roofline.hpp"
#include "workloads.hpp"

namespace nmaw::cli {

namespace fs = std::filesystem;

namespace {

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + dir.string() + ": " + ec.message());
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

genomics::SequencePairBatch load_batch(const FilterSpec& spec) {
  if (spec.pairs && spec.generate) {
    throw Error(ErrorKind::InvalidArgument, "give either --pairs or --generate, not both");
  }
  if (spec.pairs) return io::parse_pairs(*spec.pairs);
  if (spec.generate) {
    const auto& g = *spec.generate;
    return io::generate_pairs(g.pairs, g.length,
                              {g.min_edits, g.max_edits, 0.6, 0.2, 0.2}, g.seed);
  }
  throw Error(ErrorKind::InvalidArgument, "no input: pass --pairs or --generate");
}

}  // namespace

int run_filter(const FilterSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (spec.workers < 1) throw Error(ErrorKind::InvalidArgument, "--workers must be >= 1");
    const auto batch = load_batch(spec);
    if (batch.empty()) {
      err << "error: no pairs\n";
      return kExitInput;
    }
    // Threshold problems hit every pair alike; report them once.
    genomics::check_filter_inputs(batch[0].reference, batch[0].query, spec.threshold);

    const auto result = genomics::filter_batch(batch, spec.threshold, spec.workers);
    ensure_dir(spec.out);

    io::CsvTable decisions;
    decisions.header = {"index", "verdict", "obstacle_count", "early_exit", "error"};
    for (std::size_t i = 0; i < result.outcomes.size(); ++i) {
      const auto& o = result.outcomes[i];
      io::CsvRow row{static_cast<std::int64_t>(i)};
      if (o.decision) {
        row.insert(row.end(), {std::string(o.decision->accepted() ? "accept" : "reject"),
                               static_cast<std::int64_t>(o.decision->obstacle_count),
                               static_cast<std::int64_t>(o.decision->early_exit ? 1 : 0),
                               std::monostate{}});
      } else {
        row.insert(row.end(), {std::string("error"), std::monostate{}, std::monostate{},
                               o.error});
      }
      decisions.rows.push_back(std::move(row));
    }
    io::write_csv(decisions, spec.out / "decisions.csv");

    const auto& s = result.stats;
    io::CsvTable stats;
    stats.header = {"pairs",    "sequence_length", "edit_threshold", "accepted",
                    "rejected", "errors",          "accept_rate",    "reject_rate"};
    stats.rows.push_back({static_cast<std::int64_t>(s.pairs),
                          static_cast<std::int64_t>(batch.sequence_length()),
                          static_cast<std::int64_t>(spec.threshold),
                          static_cast<std::int64_t>(s.accepted),
                          static_cast<std::int64_t>(s.rejected),
                          static_cast<std::int64_t>(s.errors), s.accept_rate, s.reject_rate});
    io::write_csv(stats, spec.out / "stats.csv");

    out << "filtered " << s.pairs << " pairs (m=" << batch.sequence_length()
        << ", E=" << spec.threshold << ", workers=" << spec.workers << "): " << s.accepted
        << " accepted, " << s.rejected << " rejected, " << s.errors << " errors\n"
        << "throughput " << fixed(s.mpairs_per_second, 3) << " Mseq/s ("
        << fixed(s.wall_seconds * 1e3, 2) << " ms)\n";
    return s.errors == 0 ? kExitOk : kExitInput;
  });
}

int run_stencil(const StencilSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (spec.workers < 1) throw Error(ErrorKind::InvalidArgument, "--workers must be >= 1");
    const auto outcome =
        run_stencil_check(spec.kernel, spec.grid, spec.workers, spec.corrupt_optimized);
    ensure_dir(spec.out);

    const auto& d = spec.grid.dims;
    const auto& c = outcome.counters;
    io::CsvTable table;
    table.header = {"kernel", "rows",          "cols",        "depth",          "halo",
                    "seed",   "flops",         "bytes_read",  "bytes_written",  "ai_flops_per_byte",
                    "equivalent", "max_abs_diff", "max_residual"};
    table.rows.push_back(
        {std::string(to_string(spec.kernel)), static_cast<std::int64_t>(d.rows),
         static_cast<std::int64_t>(d.cols), static_cast<std::int64_t>(d.depth),
         static_cast<std::int64_t>(spec.grid.halo), static_cast<std::int64_t>(spec.grid.seed),
         static_cast<std::int64_t>(c.flops), static_cast<std::int64_t>(c.bytes_read),
         static_cast<std::int64_t>(c.bytes_written), c.arithmetic_intensity(),
         std::string(outcome.equivalent ? "yes" : "no"), outcome.max_abs_diff,
         outcome.max_residual});
    io::write_csv(table, spec.out / "stencil.csv");

    io::CsvTable timing;
    timing.header = {"kernel", "workers", "reference_s", "optimized_s", "optimized_gflops"};
    const double gflops = outcome.optimized_seconds > 0.0
                              ? static_cast<double>(c.flops) / outcome.optimized_seconds / 1e9
                              : 0.0;
    timing.rows.push_back({std::string(to_string(spec.kernel)),
                           static_cast<std::int64_t>(spec.workers), outcome.reference_seconds,
                           outcome.optimized_seconds, gflops});
    io::write_csv(timing, spec.out / "timing.csv");

    out << to_string(spec.kernel) << ' ' << d.rows << 'x' << d.cols << 'x' << d.depth
        << " halo " << spec.grid.halo << ": reference " << fixed(outcome.reference_seconds * 1e3, 2)
        << " ms, optimized " << fixed(outcome.optimized_seconds * 1e3, 2) << " ms ("
        << spec.workers << " workers)\n";
    if (!outcome.equivalent) {
      err << "verification failed: optimized differs from reference (max |diff| "
          << outcome.max_abs_diff << ", residual " << outcome.max_residual << ")\n";
      return kExitVerification;
    }
    out << "equivalence: pass\n";
    return kExitOk;
  });
}

int run_simulate(const SimulateSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto cal = accel::load_calibration(spec.calibration);
    std::vector<std::string> platforms = spec.platforms;
    if (platforms.empty()) {
      for (const auto& [name, pc] : cal.platforms) platforms.push_back(name);
    }
    std::vector<accel::SweepRow> rows;
    for (const auto& name : platforms) {
      const auto& pc = cal.platform(name);
      const accel::PeRange range = spec.pes.value_or(accel::PeRange{1, pc.cap_for(spec.kernel)});
      auto part = accel::sweep(cal, spec.kernel, {name}, range, spec.channels_per_pe);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    const bool any_valid =
        std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.result.has_value(); });
    if (!any_valid) {
      err << "error: no valid platform/PE combination";
      if (!rows.empty()) err << " (" << rows.front().error << ")";
      err << '\n';
      return kExitInput;
    }

    ensure_dir(spec.out);
    io::write_csv(accel::sweep_table(rows), spec.out / "sweep.csv");

    const auto checks = accel::run_trend_checks(cal);
    io::CsvTable trends;
    trends.header = {"check", "description", "result", "detail"};
    std::size_t passed = 0;
    for (const auto& c : checks) {
      trends.rows.push_back({c.id, c.description, std::string(c.passed ? "pass" : "fail"),
                             c.detail});
      passed += c.passed ? 1 : 0;
    }
    io::write_csv(trends, spec.out / "trends.csv");

    std::size_t errors = 0;
    for (const auto& r : rows) errors += r.result ? 0 : 1;
    out << accel::to_string(spec.kernel) << ": " << rows.size() << " configurations ("
        << errors << " invalid) -> " << (spec.out / "sweep.csv").string() << '\n';
    out << "trend checks: " << passed << '/' << checks.size() << " pass\n";
    for (const auto& c : checks) {
      out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.id << ": " << c.detail << '\n';
    }
    return kExitOk;
  });
}

int run_roofline(const RooflineSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto platform = roofline::roofline_preset(spec.platform);
    const std::string label =
        spec.bandwidth_label.empty() ? platform.bandwidths.front().label : spec.bandwidth_label;
    platform.bandwidth(label);  // reject unknown labels before running kernels
    std::vector<accel::KernelKind> kernels = spec.kernels;
    if (kernels.empty()) {
      kernels = {accel::KernelKind::SneakySnake, accel::KernelKind::Vadvc,
                 accel::KernelKind::Hdiff};
    }
    const auto rows = roofline::place_kernels(
        instrument_kernels(kernels, spec.seed, spec.measure), platform, label);
    ensure_dir(spec.out);
    io::write_csv(roofline::roofline_table(rows), spec.out / "roofline.csv");

    out << platform.name << " (" << label << " " << platform.bandwidth(label) << " GB/s, peak "
        << platform.peak_gflops << " GFLOPS, ridge " << fixed(platform.ridge(label), 3)
        << " flop/B)\n";
    for (const auto& r : rows) {
      out << "  " << r.kernel << ": ai " << fixed(r.ai, 4) << " -> " << to_string(r.bound)
          << "-bound, attainable " << fixed(r.attainable_gflops, 2) << " GFLOPS";
      if (r.measured_gflops) out << ", measured " << fixed(*r.measured_gflops, 3);
      if (r.calibration_warning) out << " (warning: measured above the roof)";
      out << '\n';
    }
    return kExitOk;
  });
}

}  // namespace nmaw::cli
