#include "nmaw/io/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "nmaw/error.hpp"
#include "nmaw/io/rng.hpp"

namespace nmaw::io {

namespace {
constexpr char kBases[] = "ACGT";

std::size_t base_index(char c) {
  return static_cast<std::size_t>(std::find(kBases, kBases + 4, c) - kBases);
}
}  // namespace

void EditProfile::validate() const {
  if (min_edits < 0 || max_edits < min_edits) {
    throw Error(ErrorKind::InvalidArgument, "edit counts need 0 <= min <= max");
  }
  if (p_substitution < 0.0 || p_insertion < 0.0 || p_deletion < 0.0) {
    throw Error(ErrorKind::InvalidArgument, "edit probabilities must be non-negative");
  }
  if (std::abs(p_substitution + p_insertion + p_deletion - 1.0) > 1e-9) {
    throw Error(ErrorKind::InvalidArgument, "edit probabilities must sum to 1");
  }
}

genomics::SequencePairBatch generate_pairs(std::size_t n, std::size_t m,
                                           const EditProfile& profile, std::uint64_t seed) {
  if (n == 0 || m == 0) {
    throw Error(ErrorKind::InvalidArgument, "pair count and length must be positive");
  }
  profile.validate();
  Rng rng(seed);
  genomics::SequencePairBatch batch;
  const auto span = static_cast<std::uint64_t>(profile.max_edits - profile.min_edits + 1);

  for (std::size_t p = 0; p < n; ++p) {
    std::string ref(m, 'A');
    for (auto& c : ref) c = kBases[rng.below(4)];
    std::string query = ref;

    auto remaining = static_cast<std::uint64_t>(profile.min_edits) + rng.below(span);
    while (remaining > 0) {
      const double r = rng.unit();
      const bool substitute = remaining == 1 || r < profile.p_substitution;
      if (substitute) {
        const auto pos = rng.below(m);
        query[pos] = kBases[(base_index(query[pos]) + 1 + rng.below(3)) % 4];
        remaining -= 1;
      } else if (r < profile.p_substitution + profile.p_insertion) {
        const auto at = rng.below(m + 1);
        query.insert(query.begin() + static_cast<std::ptrdiff_t>(at), kBases[rng.below(4)]);
        query.erase(query.begin() + static_cast<std::ptrdiff_t>(rng.below(m + 1)));
        remaining -= 2;
      } else {
        query.erase(query.begin() + static_cast<std::ptrdiff_t>(rng.below(m)));
        const auto base = kBases[rng.below(4)];
        query.insert(query.begin() + static_cast<std::ptrdiff_t>(rng.below(m)), base);
        remaining -= 2;
      }
    }
    batch.add(genomics::DnaSequence(std::move(ref)), genomics::DnaSequence(std::move(query)));
  }
  return batch;
}

template <typename T>
stencil::Grid3D<T> generate_grid(const stencil::GridDims& dims, std::size_t halo,
                                 std::uint64_t seed, GridDistribution distribution, double lo,
                                 double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw Error(ErrorKind::InvalidArgument, "grid value range needs finite lo <= hi");
  }
  stencil::check_grid_shape(dims, halo);
  Rng rng(seed);
  std::vector<T> values(dims.points());

  if (distribution == GridDistribution::Uniform) {
    for (auto& v : values) v = static_cast<T>(rng.uniform(lo, hi));
  } else {
    // Random phases per axis, then a separable sine field in [0, 1].
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    const double pi = kTwoPi * rng.unit();
    const double pj = kTwoPi * rng.unit();
    const double pk = kTwoPi * rng.unit();
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dims.depth; ++k) {
      for (std::size_t i = 0; i < dims.rows; ++i) {
        for (std::size_t j = 0; j < dims.cols; ++j) {
          const double wave = std::sin(kTwoPi * static_cast<double>(i) /
                                           static_cast<double>(dims.rows) + pi) *
                              std::cos(kTwoPi * static_cast<double>(j) /
                                           static_cast<double>(dims.cols) + pj) *
                              std::cos(kTwoPi * static_cast<double>(k) /
                                           static_cast<double>(dims.depth + 1) + pk);
          const double s = 0.9 * (0.5 + 0.5 * wave) + 0.1 * rng.unit();
          values[idx++] = static_cast<T>(lo + (hi - lo) * s);
        }
      }
    }
  }
  // Rounding to float can land a hair outside [lo, hi].
  for (auto& v : values) v = std::clamp(v, static_cast<T>(lo), static_cast<T>(hi));
  return stencil::Grid3D<T>(dims, halo, std::move(values));
}

template stencil::Grid3D<float> generate_grid<float>(const stencil::GridDims&, std::size_t,
                                                     std::uint64_t, GridDistribution, double,
                                                     double);
template stencil::Grid3D<double> generate_grid<double>(const stencil::GridDims&, std::size_t,
                                                       std::uint64_t, GridDistribution, double,
                                                       double);

HdiffInputs generate_hdiff_inputs(const stencil::GridDims& dims, std::size_t halo,
                                  std::uint64_t seed) {
  return {generate_grid<float>(dims, halo, seed, GridDistribution::Smooth, -1.0, 1.0),
          generate_grid<float>(dims, halo, seed + 1, GridDistribution::Uniform, 0.0, 0.1)};
}

stencil::VadvcFields generate_vadvc_fields(const stencil::GridDims& dims, std::size_t halo,
                                           std::uint64_t seed) {
  return stencil::make_vadvc_fields(
      generate_grid<float>(dims, halo, seed, GridDistribution::Smooth, -1.0, 1.0),
      generate_grid<float>(dims, halo, seed + 1, GridDistribution::Smooth, -1.0, 1.0),
      generate_grid<float>(dims, halo, seed + 2, GridDistribution::Smooth, 0.0, 1.0),
      generate_grid<float>(dims, halo, seed + 3, GridDistribution::Uniform, -0.02, 0.02),
      kWorkloadDtrInv);
}

}  // namespace nmaw::io
