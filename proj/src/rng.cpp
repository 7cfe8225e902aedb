#include "meb/rng.hpp"

#include <cmath>
#include <numbers>

namespace meb {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t counter) {
  std::uint64_t h = mix(seed + kGamma);
  h = mix(h + kGamma * (stream + 1));
  h = mix(h + kGamma * (counter + 1));
  state_ = h;
}

std::uint64_t CounterRng::next_u64() {
  state_ += kGamma;
  return mix(state_);
}

double CounterRng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - next_unit();  // (0, 1], keeps log finite
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

std::vector<double> gaussian_draws(CounterRng& rng, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (double& v : out) v = rng.next_gaussian();
  return out;
}

}  // namespace meb
