#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace forager {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Stream tags keep seeds derived for different purposes from colliding.
namespace seed_tag {
inline constexpr std::uint64_t kSpawn = 1;
inline constexpr std::uint64_t kEpisodeNoise = 2;
inline constexpr std::uint64_t kPopulationInit = 3;
inline constexpr std::uint64_t kBreeding = 4;
inline constexpr std::uint64_t kScenario = 5;
inline constexpr std::uint64_t kTrial = 6;
inline constexpr std::uint64_t kTrialNoise = 7;
}  // namespace seed_tag

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t a = 0,
                                    std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t h = splitmix64(base);
  h = splitmix64(h ^ tag);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  h = splitmix64(h ^ c);
  return h;
}

// Deterministic random stream. The mt19937_64 output sequence is fixed by the
// standard and the value mappings below are our own, so a given seed yields
// the same draws on every platform and compiler. Copying an Rng clones the
// full stream state, including the cached Box-Muller value.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform index in [0, n); n must be positive.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * static_cast<unsigned __int128>(n)) >> 64);
  }

  /// Standard normal draw (Box-Muller, paired value cached).
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
  }

  double gaussian(double sigma) { return sigma * gaussian(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace forager
