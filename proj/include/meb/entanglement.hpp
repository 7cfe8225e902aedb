#pragma once

// Entanglement diagnostics: reduced-state purities and two-qubit
// concurrence. "Maximally entangled" is operationalized per system size:
// concurrence 1 for two qubits, all single-qubit purities 1/2 for three,
// and pair purity pi_12 = 1/4 for four and five.

#include <optional>
#include <vector>

#include "meb/tensor.hpp"

namespace meb {

struct PairPurity {
  int qubit_a = 0;  // 1-based, qubit_a < qubit_b
  int qubit_b = 0;
  double value = 0.0;
};

struct EntanglementFingerprint {
  std::vector<double> single_qubit_purities;  // entry q-1 for qubit q
  std::vector<PairPurity> pair_purities;      // all pairs, lexicographic
  std::optional<double> concurrence;          // two-qubit states only
};

// Purity of the reduced state on a qubit pair (order-insensitive). For a
// two-qubit state the "pair" is the whole system and the value is 1.
double pi_measure(const StateVector& s, int qubit_a, int qubit_b);

std::vector<double> single_qubit_purities(const StateVector& s);

// Pure-state concurrence 2|a00*a11 - a01*a10|; requires num_qubits == 2.
double concurrence_2q(const StateVector& s);

EntanglementFingerprint fingerprint(const StateVector& s);

// Largest entrywise difference between two fingerprints of equal layout.
double fingerprint_distance(const EntanglementFingerprint& a,
                            const EntanglementFingerprint& b);

}  // namespace meb
