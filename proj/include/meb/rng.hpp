#pragma once

#include <cstdint>
#include <vector>

namespace meb {

// Counter-based splittable generator: every (seed, stream, counter) triple
// opens an independent, reproducible value sequence, so per-sample streams
// are identical under any execution order. The mixer is splitmix64; all
// arithmetic is plain 64-bit integer ops.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

  std::uint64_t next_u64();
  double next_unit();      // uniform in [0, 1), 53-bit resolution
  double next_gaussian();  // standard normal via Box-Muller

 private:
  std::uint64_t state_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

std::vector<double> gaussian_draws(CounterRng& rng, int count);

}  // namespace meb
