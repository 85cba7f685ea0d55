#pragma once

#include <cstdint>
#include <random>

namespace nmaw::io {

// Seeded generator with fully specified derived draws, so another language
// can replay a batch from its seed:
//
//   engine     std::mt19937_64 seeded with the 64-bit seed (standard
//              init_genrand64 seeding)
//   below(n)   draw x until x >= (2^64 - n) mod n, return x mod n
//   unit()     (x >> 11) * 2^-53, in [0, 1)
//   uniform()  lo + (hi - lo) * unit()
//
// Nothing goes through std::uniform_*_distribution, whose output is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  double unit();
  double uniform(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

// Seed from $NMAW_SEED when set (decimal or 0x-prefixed hex), else `fallback`.
// Error{InvalidArgument} on an unparsable value.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace nmaw::io
