#include "nmaw/accel/trends.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace nmaw::accel {

namespace {

const char* const kOcapi = "HBM+OCAPI";
const char* const kCapi2 = "HBM+CAPI2";
const char* const kDdr4 = "DDR4+CAPI2";
const char* const kMulti = "HBM_multi+OCAPI";

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

double total_ms(const Calibration& cal, KernelKind k, const std::string& platform, int pes,
                int channels) {
  return simulate(cal.kernel(k), cal.platform(platform), pes, channels).total_ms;
}

}  // namespace

std::vector<SimResult> pe_curve(const Calibration& calibration, KernelKind kernel,
                                const std::string& platform) {
  const PlatformConfig& pc = calibration.platform(platform);
  std::vector<SimResult> curve;
  for (int n = 1; n <= pc.cap_for(kernel); ++n) {
    curve.push_back(simulate(calibration.kernel(kernel), pc, n, pc.channels_per_pe));
  }
  return curve;
}

Peak efficiency_peak(const std::vector<SimResult>& curve) {
  if (curve.empty()) return {};
  const auto best = std::max_element(curve.begin(), curve.end(),
                                     [](const SimResult& a, const SimResult& b) {
                                       return a.efficiency < b.efficiency;
                                     });
  const auto peak = static_cast<std::size_t>(best - curve.begin());
  bool unimodal = true;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    const bool rising = curve[i].efficiency < curve[i + 1].efficiency;
    if ((i < peak) != rising) unimodal = false;
    if (i >= peak && !(curve[i].efficiency > curve[i + 1].efficiency)) unimodal = false;
  }
  return {static_cast<int>(peak) + 1, unimodal};
}

std::vector<TrendCheck> run_trend_checks(const Calibration& cal) {
  std::vector<TrendCheck> checks;
  const KernelKind all[] = {KernelKind::SneakySnake, KernelKind::Vadvc, KernelKind::Hdiff};
  const KernelKind stencils[] = {KernelKind::Vadvc, KernelKind::Hdiff};

  for (const KernelKind k : all) {
    const double ddr4 = total_ms(cal, k, kDdr4, 1, 1);
    const double hbm = total_ms(cal, k, kCapi2, 1, 1);
    checks.push_back({"ddr4-beats-hbm." + std::string(to_string(k)),
                      "1-PE DDR4+CAPI2 faster than 1-PE HBM+CAPI2", ddr4 < hbm,
                      fmt("DDR4 %.4g ms vs HBM %.4g ms", ddr4, hbm)});
  }

  {
    const double t1 = total_ms(cal, KernelKind::SneakySnake, kDdr4, 1, 1);
    double worst = 0.0;
    for (int n = 2; n <= 4; ++n) {
      worst = std::max(worst,
                       std::abs(total_ms(cal, KernelKind::SneakySnake, kDdr4, n, 1) / t1 - 1.0));
    }
    checks.push_back({"ddr4-flat.SneakySnake", "DDR4 time constant within 5% over 1-4 PEs",
                      worst <= kDdr4FlatTolerance, fmt("max deviation %.4f", worst)});
  }

  for (const KernelKind k : stencils) {
    for (const char* board : {kOcapi, kCapi2}) {
      const auto curve = pe_curve(cal, k, board);
      double worst = 0.0;
      for (std::size_t i = 0; i < curve.size(); ++i) {
        const double ideal = curve[0].total_ms / static_cast<double>(i + 1);
        worst = std::max(worst, std::abs(curve[i].total_ms / ideal - 1.0));
      }
      checks.push_back({"hbm-linear." + std::string(to_string(k)) + "." + board,
                        "within 10% of ideal 1/N scaling up to " +
                            std::to_string(curve.size()) + " PEs",
                        worst <= kLinearScalingTolerance, fmt("max deviation %.4f", worst)});
    }
  }

  const std::pair<KernelKind, double> targets[] = {
      {KernelKind::SneakySnake, kMultiChannelSpeedupSneakySnake},
      {KernelKind::Vadvc, kMultiChannelSpeedupVadvc},
      {KernelKind::Hdiff, kMultiChannelSpeedupHdiff}};
  for (const auto& [k, target] : targets) {
    const double speedup = total_ms(cal, k, kOcapi, 1, 1) / total_ms(cal, k, kMulti, 1, 4);
    checks.push_back({"multi-channel." + std::string(to_string(k)),
                      fmt("1 PE x 4 channels speedup within 25%% of %.2gx", target),
                      std::abs(speedup / target - 1.0) <= kMultiChannelTolerance,
                      fmt("speedup %.4f", speedup)});
  }

  for (const KernelKind k : stencils) {
    const auto curve = pe_curve(cal, k, kOcapi);
    const auto best = std::min_element(curve.begin(), curve.end(),
                                       [](const SimResult& a, const SimResult& b) {
                                         return a.total_ms < b.total_ms;
                                       });
    const double multi = total_ms(cal, k, kMulti, 3, 4);
    checks.push_back({"single-beats-multi." + std::string(to_string(k)),
                      "best single-channel config beats 3 PEs x 4 channels",
                      best->total_ms < multi,
                      fmt("single %.4g ms vs multi %.4g ms", best->total_ms, multi)});
  }

  {
    const PlatformConfig& pc = cal.platform(kOcapi);
    const double step = power(pc, 1, 2) - power(pc, 1, 1);
    checks.push_back({"power-channel-step", "one more HBM channel adds exactly 1 W",
                      step == 1.0, fmt("step %.6g W", step)});
  }

  {
    const auto peak = efficiency_peak(pe_curve(cal, KernelKind::Hdiff, kOcapi));
    const bool near = std::abs(peak.pe_count - kEfficiencyPeakPes) <= kEfficiencyPeakSlack;
    checks.push_back({"hdiff-efficiency-peak",
                      "hdiff HBM+OCAPI efficiency unimodal, peak at 8 +/- 2 PEs",
                      peak.unimodal && near,
                      "peak at " + std::to_string(peak.pe_count) + " PEs" +
                          (peak.unimodal ? "" : " (not unimodal)")});
  }
  return checks;
}

}  // namespace nmaw::accel
