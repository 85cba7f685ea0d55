#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "nmaw/accel/calibration.hpp"
#include "nmaw/accel/model.hpp"
#include "nmaw/accel/platform.hpp"
#include "nmaw/accel/sweep.hpp"
#include "nmaw/accel/trends.hpp"
#include "nmaw/error.hpp"
#include "nmaw/io/key_value.hpp"

using namespace nmaw;
using namespace nmaw::accel;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::IoError;
}

const Calibration& shipped() {
  static const Calibration cal = load_calibration(NMAW_TEST_CALIBRATION);
  return cal;
}

PlatformConfig toy_platform() {
  PlatformConfig p;
  p.name = "toy";
  p.host_link = {"link", 512, 10.0, 10.0};
  p.memory = {MemoryKind::HBM, 4, 256, 5.0, ""};
  p.clock_mhz = 100.0;
  p.power = {2.0, 1.0, 0.5};
  p.pe_cap = {{KernelKind::Hdiff, 4}};
  return p;
}

KernelProfile toy_profile() {
  KernelProfile k;
  k.kernel = KernelKind::Hdiff;
  k.work_units = 8;
  k.bytes_in_per_unit = 1000;
  k.bytes_out_per_unit = 500;
  k.channel_bytes_per_unit = 2000;
  k.compute_cycles_per_unit = 50;
  k.divisible = true;
  k.flops_per_unit = 1e6;
  return k;
}

}  // namespace

TEST(Presets, BoardFacts) {
  const auto p = platform_presets();
  ASSERT_EQ(p.size(), 4u);
  const auto& ocapi = p.at("HBM+OCAPI");
  EXPECT_DOUBLE_EQ(ocapi.host_link.read_gbps, 22.1);
  EXPECT_DOUBLE_EQ(ocapi.host_link.write_gbps, 22.0);
  EXPECT_EQ(ocapi.host_link.bitwidth, 1024);
  EXPECT_DOUBLE_EQ(ocapi.clock_mhz, 250.0);
  EXPECT_EQ(ocapi.memory.usable_channels, 16);
  EXPECT_DOUBLE_EQ(ocapi.memory.channel_gbps, 12.8);
  EXPECT_EQ(ocapi.cap_for(KernelKind::SneakySnake), 12);
  EXPECT_EQ(ocapi.cap_for(KernelKind::Vadvc), 14);
  EXPECT_EQ(ocapi.cap_for(KernelKind::Hdiff), 16);

  const auto& capi2 = p.at("HBM+CAPI2");
  EXPECT_DOUBLE_EQ(capi2.host_link.read_gbps, 13.9);
  EXPECT_DOUBLE_EQ(capi2.host_link.write_gbps, 14.0);
  EXPECT_DOUBLE_EQ(capi2.clock_mhz, 200.0);

  const auto& ddr4 = p.at("DDR4+CAPI2");
  EXPECT_EQ(ddr4.memory.kind, MemoryKind::DDR4);
  EXPECT_DOUBLE_EQ(ddr4.memory.channel_gbps, 25.6);
  EXPECT_EQ(ddr4.cap_for(KernelKind::SneakySnake), 4);
  EXPECT_EQ(ddr4.cap_for(KernelKind::Vadvc), 4);
  EXPECT_EQ(ddr4.cap_for(KernelKind::Hdiff), 8);

  const auto& multi = p.at("HBM_multi+OCAPI");
  EXPECT_EQ(multi.channels_per_pe, 4);
  for (const auto k : {KernelKind::SneakySnake, KernelKind::Vadvc, KernelKind::Hdiff}) {
    EXPECT_EQ(multi.cap_for(k), 3);
  }
  for (const auto& [name, pc] : p) {
    EXPECT_NO_THROW(pc.validate()) << name;
    EXPECT_DOUBLE_EQ(pc.power.per_channel_w, 1.0) << name;
  }
}

TEST(AssignChannels, HbmOwnsDistinctChannels) {
  const auto p = platform_presets();
  const auto map = assign_channels(p.at("HBM+OCAPI"), 16, 1);
  std::set<int> seen;
  for (const auto& owned : map.channels_of_pe) {
    ASSERT_EQ(owned.size(), 1u);
    seen.insert(owned[0]);
  }
  EXPECT_EQ(seen, (std::set<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}));
  EXPECT_EQ(map.enabled_channels(), 16);

  const auto multi = assign_channels(p.at("HBM_multi+OCAPI"), 3, 4, KernelKind::Hdiff);
  std::set<int> multi_seen;
  for (const auto& owned : multi.channels_of_pe) multi_seen.insert(owned.begin(), owned.end());
  EXPECT_EQ(multi_seen.size(), 12u);
  EXPECT_EQ(multi.enabled_channels(), 12);
}

TEST(AssignChannels, Ddr4PesShareOneChannel) {
  const auto map = assign_channels(platform_presets().at("DDR4+CAPI2"), 4, 1);
  for (const auto& owned : map.channels_of_pe) EXPECT_EQ(owned, std::vector<int>{0});
  EXPECT_EQ(map.enabled_channels(), 1);
}

TEST(AssignChannels, Errors) {
  const auto p = platform_presets();
  EXPECT_EQ(kind_of([&] { assign_channels(p.at("HBM+OCAPI"), 17, 1); }),
            ErrorKind::ChannelsExhausted);
  EXPECT_EQ(kind_of([&] { assign_channels(p.at("HBM_multi+OCAPI"), 5, 4); }),
            ErrorKind::ChannelsExhausted);
  EXPECT_EQ(kind_of([&] { assign_channels(p.at("HBM+OCAPI"), 15, 1, KernelKind::Vadvc); }),
            ErrorKind::PeCapExceeded);
  EXPECT_EQ(kind_of([&] { assign_channels(p.at("DDR4+CAPI2"), 5, 1, KernelKind::Vadvc); }),
            ErrorKind::PeCapExceeded);
  EXPECT_EQ(kind_of([&] { assign_channels(p.at("HBM+OCAPI"), 0, 1); }),
            ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { assign_channels(p.at("HBM+OCAPI"), 1, 0); }),
            ErrorKind::InvalidArgument);
}

TEST(StreamConversion, ConservesBytes) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    const std::uint64_t bytes = rng() % 1'000'000;
    for (const auto [from, to] : {std::pair{1024, 256}, std::pair{256, 1024}, std::pair{512, 512}}) {
      const auto c = convert_stream(bytes, from, to);
      ASSERT_EQ(c.bytes_in, bytes);
      ASSERT_EQ(c.bytes_out, bytes);
      ASSERT_GE(c.beats_in * (from / 8), bytes);
      ASSERT_LT((c.beats_in - (bytes ? 1 : 0)) * (from / 8), bytes + (bytes ? 0 : 1));
    }
  }
  const auto c = convert_stream(256, 1024, 256);
  EXPECT_EQ(c.beats_in, 2u);
  EXPECT_EQ(c.beats_out, 8u);
  EXPECT_THROW(convert_stream(1, 0, 256), Error);
}

// Hand-evaluated stage arithmetic for the toy board (4 x 5 GB/s channels,
// 10 GB/s link, 100 MHz) with 8 units on 2 PEs:
//   host  8*1000 B / 10 GB/s          = 0.8 us
//   hbmw  8*1000 B / (2 * 5 GB/s)     = 0.8 us
//   rate  min(5e9/2000, 1e8/50, 5e9/500) = 2e6 units/s (compute)
//   pipe  4 units / 2e6               = 2.0 us
//   wb    8*500 B / 10 GB/s           = 0.4 us
//   fill  0.1 + 0.2 + 0.5 + 0.05      = 0.85 us
//   total 2.85 us; power 2 + 2*1 + 2*0.5 = 5 W
TEST(Simulate, HandEvaluatedToyConfiguration) {
  const auto r = simulate(toy_profile(), toy_platform(), 2, 1);
  EXPECT_NEAR(r.stages.host_transfer_ms, 0.8e-3, 1e-15);
  EXPECT_NEAR(r.stages.hbm_write_ms, 0.8e-3, 1e-15);
  EXPECT_NEAR(r.stages.pe_pipeline_ms, 2.0e-3, 1e-15);
  EXPECT_NEAR(r.stages.write_back_ms, 0.4e-3, 1e-15);
  EXPECT_NEAR(r.fill_overhead_ms, 0.85e-3, 1e-15);
  EXPECT_NEAR(r.total_ms, 2.85e-3, 1e-15);
  EXPECT_EQ(r.limiter, PeLimiter::Compute);
  EXPECT_DOUBLE_EQ(r.power_w, 5.0);
  EXPECT_NEAR(r.throughput, 8.0 / 2.85e-6, 1e-3);
  EXPECT_NEAR(r.efficiency, 8.0 / 2.85e-6 * 1e6 / 1e9 / 5.0, 1e-9);
  EXPECT_DOUBLE_EQ(efficiency(r, toy_profile()), r.efficiency);
}

TEST(Simulate, ZeroWorkTakesNoTime) {
  auto k = toy_profile();
  k.work_units = 0;
  const auto r = simulate(k, toy_platform(), 1, 1);
  EXPECT_EQ(r.total_ms, 0.0);
  EXPECT_EQ(r.stages.max(), 0.0);
}

TEST(Simulate, PropagatesAssignmentErrors) {
  EXPECT_EQ(kind_of([] { simulate(toy_profile(), toy_platform(), 5, 1); }),
            ErrorKind::ChannelsExhausted);
  auto p = toy_platform();
  p.memory.usable_channels = 16;
  EXPECT_EQ(kind_of([&] { simulate(toy_profile(), p, 5, 1); }), ErrorKind::PeCapExceeded);
}

// Closed-form stage model for hdiff on the OCAPI board, evaluated from the
// shipped profile values, against simulate() at 1 and 2 PEs.
TEST(Simulate, HdiffOcapiMatchesClosedForm) {
  const auto& k = shipped().kernel(KernelKind::Hdiff);
  const double X = static_cast<double>(k.work_units);
  const double to_ms = 1e3;
  const auto closed = [&](int n) {
    const double bw = 12.8e9;
    const double host = X * k.bytes_in_per_unit / 22.1e9 * to_ms;
    const double hbmw = X * k.bytes_in_per_unit / (n * bw) * to_ms;
    const double rate = std::min({bw / k.channel_bytes_per_unit,
                                  250e6 / k.compute_cycles_per_unit, bw / k.bytes_out_per_unit});
    const double pipe = X / n / rate * to_ms;
    const double wb = X * k.bytes_out_per_unit / 22.0e9 * to_ms;
    const double fill = (k.bytes_in_per_unit / 22.1e9 + k.bytes_in_per_unit / bw + 1.0 / rate +
                         k.bytes_out_per_unit / 22.0e9) * to_ms;
    return std::max({host, hbmw, pipe, wb}) + fill;
  };
  const auto& pc = shipped().platform("HBM+OCAPI");
  const double t1 = simulate(k, pc, 1, 1).total_ms;
  const double t2 = simulate(k, pc, 2, 1).total_ms;
  EXPECT_NEAR(t1, closed(1), 1e-12 * t1);
  EXPECT_NEAR(t2, closed(2), 1e-12 * t2);
  EXPECT_NEAR(t2 / t1, closed(2) / closed(1), 1e-12);
}

TEST(Power, ExactChannelAndPeSteps) {
  const auto& pc = shipped().platform("HBM+OCAPI");
  EXPECT_EQ(power(pc, 1, 2) - power(pc, 1, 1), 1.0);
  for (int n = 1; n < 16; ++n) {
    EXPECT_EQ(power(pc, n + 1, 1) - power(pc, n, 1), pc.power.per_channel_w + pc.power.per_pe_w);
  }
  const auto& multi = shipped().platform("HBM_multi+OCAPI");
  EXPECT_EQ(power(multi, 3, 4) - power(pc, 3, 1), 9 * pc.power.per_channel_w);

  auto bare = pc;
  bare.power = {4.0, 1.0, 0.0};
  EXPECT_EQ(power(bare, 1, 1), 5.0);
  bare.power.per_channel_w = 0.0;
  EXPECT_EQ(power(bare, 1, 1), bare.power.static_w);
}

TEST(Power, Ddr4CountsOneChannel) {
  const auto& pc = shipped().platform("DDR4+CAPI2");
  EXPECT_EQ(power(pc, 4, 1), pc.power.static_w + pc.power.per_channel_w + 4 * pc.power.per_pe_w);
}

TEST(Efficiency, SneakySnakeInMseqPerWatt) {
  SimResult r;
  r.throughput = 3e6;
  r.power_w = 2.0;
  KernelProfile k = toy_profile();
  k.kernel = KernelKind::SneakySnake;
  EXPECT_DOUBLE_EQ(efficiency(r, k), 1.5);
  r.power_w = 4.0;
  EXPECT_DOUBLE_EQ(efficiency(r, k), 0.75);
}

namespace {

void check_invariants(const SimResult& r) {
  ASSERT_GE(r.fill_overhead_ms, 0.0);
  ASSERT_GE(r.total_ms, r.stages.max());
  ASSERT_LE(r.total_ms, r.stages.sum() * (1 + 1e-12));
  ASSERT_EQ(r.total_ms, r.stages.max() + r.fill_overhead_ms);
}

KernelProfile random_profile(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> lg(0.0, 6.0);
  KernelProfile k;
  k.kernel = KernelKind::Hdiff;
  k.work_units = 1 + rng() % 5000;
  k.bytes_in_per_unit = std::pow(10.0, lg(rng));
  k.bytes_out_per_unit = std::pow(10.0, lg(rng));
  k.channel_bytes_per_unit = k.bytes_in_per_unit * (1 + rng() % 20);
  k.compute_cycles_per_unit = std::pow(10.0, lg(rng));
  k.divisible = rng() % 2 == 0;
  k.flops_per_unit = 100;
  return k;
}

}  // namespace

TEST(SimulateProperty, OverlapBoundsAndDeterminism) {
  std::mt19937_64 rng(8);
  const auto presets = shipped().platforms;
  for (int t = 0; t < 2000; ++t) {
    const auto k = random_profile(rng);
    for (const auto& [name, pc] : presets) {
      const int n = 1 + static_cast<int>(rng() % 3);
      const auto a = simulate(k, pc, n, pc.channels_per_pe);
      check_invariants(a);
      const auto b = simulate(k, pc, n, pc.channels_per_pe);
      ASSERT_EQ(a.total_ms, b.total_ms);
      ASSERT_EQ(a.efficiency, b.efficiency);
    }
  }
}

TEST(SimulateProperty, HbmTimeNonIncreasingInPes) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 500; ++t) {
    auto k = random_profile(rng);
    k.divisible = true;
    for (const char* board : {"HBM+OCAPI", "HBM+CAPI2"}) {
      const auto& pc = shipped().platform(board);
      double prev = simulate(k, pc, 1, 1).total_ms;
      for (int n = 2; n <= 16; ++n) {
        const double cur = simulate(k, pc, n, 1).total_ms;
        ASSERT_LE(cur, prev * (1 + 1e-12)) << board << " n=" << n;
        prev = cur;
      }
    }
  }
}

TEST(SimulateProperty, Ddr4BandwidthBoundTimeIsConstant) {
  std::mt19937_64 rng(10);
  const auto& pc = shipped().platform("DDR4+CAPI2");
  int checked = 0;
  for (int t = 0; t < 2000 && checked < 200; ++t) {
    auto k = random_profile(rng);
    k.divisible = true;
    k.work_units = 8 * (1 + rng() % 100);  // divisible by 1..8 PEs alike
    const auto one = simulate(k, pc, 1, 1);
    if (one.limiter == PeLimiter::Compute) continue;
    ++checked;
    for (int n = 2; n <= 8; ++n) {
      if (k.work_units % static_cast<unsigned>(n) != 0) continue;
      ASSERT_NEAR(simulate(k, pc, n, 1).total_ms, one.total_ms, 1e-12 * one.total_ms);
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(SimulateProperty, FillCapInactiveForShippedWorkloads) {
  for (const auto& [kind, k] : shipped().kernels) {
    for (const auto& [name, pc] : shipped().platforms) {
      for (int n = 1; n <= pc.cap_for(kind); ++n) {
        const auto r = simulate(k, pc, n, pc.channels_per_pe);
        EXPECT_EQ(r.fill_overhead_ms, r.unit_latency_ms) << name << " " << n;
      }
    }
  }
}

TEST(Calibration, ShippedFileLoads) {
  const auto& cal = shipped();
  ASSERT_EQ(cal.kernels.size(), 3u);
  EXPECT_EQ(cal.kernel(KernelKind::SneakySnake).work_units, 30000u);
  EXPECT_FALSE(cal.kernel(KernelKind::SneakySnake).divisible);
  // 16x16x64 block: 18 flops per point, 19K-17 per column.
  EXPECT_DOUBLE_EQ(cal.kernel(KernelKind::Hdiff).flops_per_unit, 16.0 * 16 * 64 * 18);
  EXPECT_DOUBLE_EQ(cal.kernel(KernelKind::Vadvc).flops_per_unit, 16.0 * 16 * (19 * 64 - 17));
  EXPECT_DOUBLE_EQ(cal.platform("HBM+OCAPI").power.per_pe_w, 3.0);
}

TEST(Calibration, RejectsBadInput) {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return calibration_from_keys(io::parse_key_values(in));
  };
  EXPECT_EQ(kind_of([&] { parse("kernel.hdiff.work_units = 4\n"); }),
            ErrorKind::InvalidArgument);  // incomplete profile
  EXPECT_EQ(kind_of([&] { parse("bogus = 1\n"); }), ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([&] { parse("platform.Nope.clock_mhz = 1\n"); }), ErrorKind::UnknownPlatform);
  EXPECT_EQ(kind_of([&] { parse("platform.HBM+OCAPI.clock_mhz = fast\n"); }),
            ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([&] { parse("platform.HBM+OCAPI.clock_mhz = -5\n"); }),
            ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { parse("kernel.SneakySnake.unit_grid = 1,1,1\n"); }),
            ErrorKind::MalformedLine);
  try {
    parse("# c\n\nplatform.HBM+OCAPI.cap.hdiff = 2\nplatform.HBM+OCAPI.colour = 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedLine);
    EXPECT_EQ(e.line(), 4u);
  }
  const auto cal = parse("platform.HBM+OCAPI.cap.hdiff = 2\n");
  EXPECT_EQ(cal.platform("HBM+OCAPI").cap_for(KernelKind::Hdiff), 2);
  EXPECT_TRUE(cal.kernels.empty());
}

TEST(Sweep, RowsPerPlatformAndErrorRows) {
  const auto rows = sweep(shipped(), KernelKind::Vadvc, {"HBM+OCAPI"}, {1, 14});
  ASSERT_EQ(rows.size(), 14u);
  for (const auto& r : rows) EXPECT_TRUE(r.result.has_value());

  const auto single = sweep(shipped(), KernelKind::Hdiff, {"HBM+OCAPI", "DDR4+CAPI2"}, {1, 1});
  EXPECT_EQ(single.size(), 2u);

  const auto over = sweep(shipped(), KernelKind::Vadvc, {"DDR4+CAPI2"}, {3, 6});
  ASSERT_EQ(over.size(), 4u);
  EXPECT_TRUE(over[0].result && over[1].result);
  EXPECT_FALSE(over[2].result);
  EXPECT_NE(over[2].error.find("PeCapExceeded"), std::string::npos);

  EXPECT_EQ(kind_of([] { sweep(shipped(), KernelKind::Vadvc, {"Nope"}, {1, 1}); }),
            ErrorKind::UnknownPlatform);

  const auto table = sweep_table(over);
  EXPECT_EQ(table.header.size(), 13u);
  EXPECT_EQ(table.header[4], "host_ms");
  for (const auto& row : table.rows) EXPECT_EQ(row.size(), table.header.size());
}

TEST(Sweep, PeRangeParsing) {
  EXPECT_EQ(parse_pe_range("1..14").hi, 14);
  EXPECT_EQ(parse_pe_range("3").lo, 3);
  EXPECT_EQ(kind_of([] { parse_pe_range("0"); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { parse_pe_range("0..4"); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { parse_pe_range("5..2"); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { parse_pe_range("a..b"); }), ErrorKind::InvalidArgument);
}

TEST(Trends, AllPassWithShippedCalibration) {
  for (const auto& c : run_trend_checks(shipped())) {
    EXPECT_TRUE(c.passed) << c.id << ": " << c.detail;
  }
}

TEST(Trends, EfficiencyPeakDetection) {
  std::vector<SimResult> curve(5);
  const double eff[] = {1, 3, 4, 2, 1};
  for (int i = 0; i < 5; ++i) curve[static_cast<std::size_t>(i)].efficiency = eff[i];
  auto peak = efficiency_peak(curve);
  EXPECT_EQ(peak.pe_count, 3);
  EXPECT_TRUE(peak.unimodal);
  curve[2].efficiency = 2;  // dip before the peak
  curve[3].efficiency = 5;
  curve[4].efficiency = 0.5;
  peak = efficiency_peak(curve);
  EXPECT_EQ(peak.pe_count, 4);
  EXPECT_FALSE(peak.unimodal);
}
