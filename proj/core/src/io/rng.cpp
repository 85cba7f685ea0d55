#include "nmaw/io/rng.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "nmaw/error.hpp"

namespace nmaw::io {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "Rng::below needs n > 0");
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  while (true) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % n;
  }
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("NMAW_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  std::string_view text(env);
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
    base = 16;
  }
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed, base);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidArgument, "NMAW_SEED is not an integer: '" +
                                                std::string(env) + "'");
  }
  return seed;
}

}  // namespace nmaw::io
