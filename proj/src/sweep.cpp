#include "meb/sweep.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

namespace meb {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Stream tag separating probe draws from sweep draws under the same seed.
constexpr std::uint64_t kProbeStream = 0x70726F6265ULL;

}  // namespace

CoeffVector sample_coeffs(CounterRng& rng, int m) {
  if (m < 1) throw std::invalid_argument("sample_coeffs: m must be positive");
  for (;;) {
    std::vector<double> draws = gaussian_draws(rng, m);
    double sq = 0.0;
    for (double v : draws) sq += v * v;
    if (sq > 1e-24) return CoeffVector::normalized(std::move(draws));
    // Astronomically unlikely near-zero draw; redraw.
  }
}

std::vector<CoeffVector> boundary_coeffs(int m) {
  if (m < 1) throw std::invalid_argument("boundary_coeffs: m must be positive");
  std::vector<CoeffVector> out;
  for (int i = 0; i < m; ++i) {
    CoeffVector c{std::vector<double>(static_cast<std::size_t>(m), 0.0)};
    c.values[static_cast<std::size_t>(i)] = 1.0;
    out.push_back(std::move(c));
  }
  out.push_back(CoeffVector{std::vector<double>(
      static_cast<std::size_t>(m), 1.0 / std::sqrt(static_cast<double>(m)))});
  return out;
}

StateVector superpose_states(const Subspace& sub, const CoeffVector& c) {
  if (c.size() != sub.states.size())
    throw std::invalid_argument(
        "superpose_states: coefficient count does not match subspace size");
  StateVector out = StateVector::zero(sub.states.front().num_qubits);
  for (std::size_t i = 0; i < sub.states.size(); ++i) {
    const double ci = c.values[i];
    const StateVector& s = sub.states[i];
    for (std::size_t a = 0; a < out.dim(); ++a) out.amps[a] += ci * s.amps[a];
  }
  return out;
}

SweepReport run_sweep(const SweepConfig& cfg) {
  const auto start = Clock::now();
  if (cfg.samples < 0)
    throw std::invalid_argument("run_sweep: negative sample count");

  const Measure measure = cfg.measure.value_or(family_measure(cfg.family));
  if (measure != family_measure(cfg.family))
    throw std::invalid_argument(
        std::string("run_sweep: measure '") + measure_name(measure) +
        "' is incompatible with family '" + family_info(cfg.family).name +
        "'");

  const Catalog catalog = build_catalog(cfg.family);
  std::vector<int> selected;
  if (cfg.subspace) {
    if (*cfg.subspace < 1 || *cfg.subspace > catalog.info.subspace_count)
      throw std::invalid_argument("run_sweep: subspace index outside 1..l");
    selected.push_back(*cfg.subspace);
  } else {
    for (int k = 1; k <= catalog.info.subspace_count; ++k)
      selected.push_back(k);
  }

  SweepReport rep;
  rep.config = cfg;
  rep.measure = measure;

  for (int k : selected) {
    const Subspace& sub = catalog.subspace(k);
    const int m = static_cast<int>(sub.states.size());

    SubspaceSweep ss;
    ss.subspace_index = k;

    auto consider = [&](const CoeffVector& c) {
      const StateVector s = superpose_states(sub, c);
      const double dev = measure_deviation(measure, s);
      if (ss.samples_run == 0 || dev > ss.max_deviation) {
        ss.max_deviation = dev;
        ss.worst_value = measure_value(measure, s);
        ss.worst_coeffs = c;
      }
      ++ss.samples_run;
    };

    for (const CoeffVector& c : boundary_coeffs(m)) consider(c);
    for (long i = 0; i < cfg.samples; ++i) {
      CounterRng rng(cfg.seed, static_cast<std::uint64_t>(k),
                     static_cast<std::uint64_t>(i));
      consider(sample_coeffs(rng, m));
    }

    ss.pass = ss.max_deviation <= cfg.tol;
    rep.max_deviation = std::max(rep.max_deviation, ss.max_deviation);
    rep.per_subspace.push_back(std::move(ss));
  }

  rep.pass = true;
  for (const SubspaceSweep& ss : rep.per_subspace) rep.pass &= ss.pass;
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

ProbeReport cross_subspace_probe(Family f, long samples, std::uint64_t seed) {
  const auto start = Clock::now();
  const Catalog catalog = build_catalog(f);
  const int l = catalog.info.subspace_count;
  const int m = catalog.info.subspace_size;
  if (l < 2)
    throw std::invalid_argument("cross_subspace_probe: needs >= 2 subspaces");
  if (samples < 1)
    throw std::invalid_argument("cross_subspace_probe: needs >= 1 sample");

  ProbeReport rep;
  rep.family = f;
  rep.measure = family_measure(f);
  rep.samples = samples;
  rep.seed = seed;

  double sum = 0.0;
  for (long i = 0; i < samples; ++i) {
    CounterRng rng(seed, kProbeStream, static_cast<std::uint64_t>(i));
    const int k1 = 1 + static_cast<int>(rng.next_u64() %
                                        static_cast<std::uint64_t>(l));
    int k2 = k1;
    while (k2 == k1)
      k2 = 1 + static_cast<int>(rng.next_u64() %
                                static_cast<std::uint64_t>(l));
    const int i1 = 1 + static_cast<int>(rng.next_u64() %
                                        static_cast<std::uint64_t>(m));
    const int i2 = 1 + static_cast<int>(rng.next_u64() %
                                        static_cast<std::uint64_t>(m));
    const CoeffVector c = sample_coeffs(rng, 2);

    const StateVector& sa = catalog.state(k1, i1);
    const StateVector& sb = catalog.state(k2, i2);
    StateVector mixed = StateVector::zero(sa.num_qubits);
    for (std::size_t a = 0; a < mixed.dim(); ++a)
      mixed.amps[a] = c.values[0] * sa.amps[a] + c.values[1] * sb.amps[a];

    const double value = measure_value(rep.measure, mixed);
    if (i == 0) {
      rep.min_value = rep.max_value = value;
    } else {
      rep.min_value = std::min(rep.min_value, value);
      rep.max_value = std::max(rep.max_value, value);
    }
    sum += value;
  }
  rep.mean_value = sum / static_cast<double>(samples);
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

}  // namespace meb
