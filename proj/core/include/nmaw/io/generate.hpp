#pragma once

#include <cstddef>
#include <cstdint>

#include "nmaw/genomics/sequence.hpp"
#include "nmaw/stencil/grid.hpp"
#include "nmaw/stencil/vadvc.hpp"

namespace nmaw::io {

// Edits planted per pair: a count drawn uniformly from [min_edits, max_edits]
// and a per-edit choice of substitution, insertion or deletion. Insertions
// and deletions come with a compensating deletion or insertion elsewhere so
// the query keeps the reference length; such a pair costs two edits. When a
// single edit remains it is always a substitution.
struct EditProfile {
  int min_edits = 0;
  int max_edits = 0;
  double p_substitution = 1.0;
  double p_insertion = 0.0;
  double p_deletion = 0.0;

  // Error{InvalidArgument}: negative or inverted counts, negative
  // probabilities, or probabilities not summing to 1 (within 1e-9).
  void validate() const;
};

// n pairs of length m over ACGT. Per pair, from one Rng(seed) stream:
//   reference: m draws of below(4) indexing "ACGT"
//   edit count: min_edits + below(max - min + 1)
//   per edit:   r = unit(); substitution if r < p_sub, insertion if
//               r < p_sub + p_ins, otherwise deletion
//   substitution: pos = below(m); new base = (old + 1 + below(3)) mod 4
//   insertion:    pos = below(m + 1), base = below(4); then delete at below(m + 1)
//   deletion:     delete at below(m); then insert below(4) at below(m)
// Levenshtein(reference, query) never exceeds the planted count.
// Error{InvalidArgument} when n or m is 0.
genomics::SequencePairBatch generate_pairs(std::size_t n, std::size_t m,
                                           const EditProfile& profile, std::uint64_t seed);

enum class GridDistribution {
  Uniform,  // independent unit() draws
  Smooth,   // low-frequency sine field plus 10% uniform jitter
};

// Every value lies in [lo, hi] and is finite. Error{InvalidArgument} when
// lo > hi or either bound is not finite; shape errors as Grid3D.
template <typename T>
stencil::Grid3D<T> generate_grid(const stencil::GridDims& dims, std::size_t halo,
                                 std::uint64_t seed,
                                 GridDistribution distribution = GridDistribution::Uniform,
                                 double lo = 0.0, double hi = 1.0);

// Seeded stencil workloads shared by the CLI, tests and benchmarks.
//   hdiff: in = Smooth in [-1, 1] (seed), coeff = Uniform in [0, 0.1] (seed + 1)
//   vadvc: u, u_stage = Smooth in [-1, 1] (seed, seed + 1), u_pos = Smooth in
//          [0, 1] (seed + 2), wcon = Uniform in [-0.02, 0.02] (seed + 3),
//          dtr_inv = kWorkloadDtrInv
struct HdiffInputs {
  stencil::Grid3D<float> in;
  stencil::Grid3D<float> coeff;
};

inline constexpr double kWorkloadDtrInv = 0.05;  // 20 s step

HdiffInputs generate_hdiff_inputs(const stencil::GridDims& dims, std::size_t halo,
                                  std::uint64_t seed);
stencil::VadvcFields generate_vadvc_fields(const stencil::GridDims& dims, std::size_t halo,
                                           std::uint64_t seed);

}  // namespace nmaw::io
