#pragma once

#include <string>
#include <vector>

#include "nmaw/accel/calibration.hpp"
#include "nmaw/accel/model.hpp"

namespace nmaw::accel {

// Qualitative behaviour the model is expected to show on the real boards.
struct TrendCheck {
  std::string id;           // stable key, e.g. "ddr4-beats-hbm.vadvc"
  std::string description;
  bool passed = false;
  std::string detail;       // the measured quantity
};

// Target speedups of one PE with four channels over one PE with one channel.
inline constexpr double kMultiChannelSpeedupSneakySnake = 1.4;
inline constexpr double kMultiChannelSpeedupVadvc = 1.2;
inline constexpr double kMultiChannelSpeedupHdiff = 1.8;
inline constexpr double kMultiChannelTolerance = 0.25;  // relative
inline constexpr double kDdr4FlatTolerance = 0.05;
inline constexpr double kLinearScalingTolerance = 0.10;
inline constexpr int kEfficiencyPeakPes = 8;
inline constexpr int kEfficiencyPeakSlack = 2;

// Simulates pe_count = 1..cap on one platform with its default channel grant.
std::vector<SimResult> pe_curve(const Calibration& calibration, KernelKind kernel,
                                const std::string& platform);

// 1-based position of the maximum efficiency, and whether the curve rises
// strictly up to it and falls strictly after it.
struct Peak {
  int pe_count = 0;
  bool unimodal = false;
};
Peak efficiency_peak(const std::vector<SimResult>& curve);

// Runs every check against the calibrated presets:
//   ddr4-beats-hbm.<k>      1-PE DDR4+CAPI2 faster than 1-PE HBM+CAPI2
//   ddr4-flat.SneakySnake   DDR4 time within 5% over 1-4 PEs
//   hbm-linear.<k>.<board>  within 10% of t1/N up to the cap
//   multi-channel.<k>       4-channel speedup within 25% of the target
//   single-beats-multi.<k>  best single-channel config beats 3 PE x 4 ch
//   power-channel-step      +1 channel adds exactly per_channel_w = 1 W
//   hdiff-efficiency-peak   unimodal, peak at 8 +/- 2 PEs
std::vector<TrendCheck> run_trend_checks(const Calibration& calibration);

}  // namespace nmaw::accel
