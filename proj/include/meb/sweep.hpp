#pragma once

// Randomized verification driver: draws real unit-norm coefficient vectors
// uniformly from the sphere, forms within-subspace superpositions, and
// tracks the worst deviation of the family measure from its target. Each
// sweep also injects the canonical unit vectors and the uniform vector
// before sampling. A separate probe mixes states across two subspaces and
// reports the observed measure distribution without asserting anything.

#include <cstdint>
#include <optional>
#include <vector>

#include "meb/catalog.hpp"
#include "meb/pauli.hpp"
#include "meb/rng.hpp"
#include "meb/tensor.hpp"

namespace meb {

// m independent standard normal draws scaled to unit norm: uniform on the
// real (m-1)-sphere.
CoeffVector sample_coeffs(CounterRng& rng, int m);

// The deterministic vectors every sweep evaluates: e_1..e_m and the uniform
// vector (1/sqrt(m), ...).
std::vector<CoeffVector> boundary_coeffs(int m);

// sum_i c_i |phi_k^i>; unit norm since subspace states are orthonormal.
StateVector superpose_states(const Subspace& sub, const CoeffVector& c);

struct SweepConfig {
  Family family = Family::Bell2;
  std::optional<int> subspace;  // 1-based; nullopt sweeps every subspace
  long samples = 1000;
  std::uint64_t seed = 1;
  double tol = kSweepTol;
  // Defaults to the family measure; anything else is rejected.
  std::optional<Measure> measure;
};

struct SubspaceSweep {
  int subspace_index = 1;
  long samples_run = 0;  // boundary vectors + random samples
  double max_deviation = 0.0;
  double worst_value = 0.0;   // measure value at the worst sample
  CoeffVector worst_coeffs;
  bool pass = false;
};

struct SweepReport {
  SweepConfig config;
  Measure measure = Measure::Concurrence;
  std::vector<SubspaceSweep> per_subspace;
  double max_deviation = 0.0;
  bool pass = false;
  double wall_ms = 0.0;
};

// Deterministic for a fixed config: sample streams are keyed by
// (seed, subspace index, sample index).
SweepReport run_sweep(const SweepConfig& cfg);

struct ProbeReport {
  Family family = Family::Bell2;
  Measure measure = Measure::Concurrence;
  long samples = 0;
  std::uint64_t seed = 0;
  double min_value = 0.0;
  double max_value = 0.0;
  double mean_value = 0.0;
  double wall_ms = 0.0;
};

// Mixes one state from each of two distinct subspaces with a random
// two-component coefficient vector and records the family measure.
// Observational only: no pass/fail.
ProbeReport cross_subspace_probe(Family f, long samples, std::uint64_t seed);

}  // namespace meb
