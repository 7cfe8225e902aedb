#include "meb/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace meb {

double pi_measure(const StateVector& s, int qubit_a, int qubit_b) {
  if (qubit_a == qubit_b)
    throw std::invalid_argument("pi_measure: qubit indices must differ");
  if (qubit_a < 1 || qubit_a > s.num_qubits || qubit_b < 1 ||
      qubit_b > s.num_qubits)
    throw std::out_of_range("pi_measure: qubit index outside 1..n");
  return purity(partial_trace(s, {qubit_a, qubit_b}));
}

std::vector<double> single_qubit_purities(const StateVector& s) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(s.num_qubits));
  for (int q = 1; q <= s.num_qubits; ++q)
    out.push_back(purity(partial_trace(s, {q})));
  return out;
}

double concurrence_2q(const StateVector& s) {
  if (s.num_qubits != 2)
    throw std::invalid_argument("concurrence_2q: needs a two-qubit state");
  const Complex det = s.amps[0] * s.amps[3] - s.amps[1] * s.amps[2];
  return 2.0 * std::abs(det);
}

EntanglementFingerprint fingerprint(const StateVector& s) {
  EntanglementFingerprint fp;
  fp.single_qubit_purities = single_qubit_purities(s);
  for (int a = 1; a <= s.num_qubits; ++a)
    for (int b = a + 1; b <= s.num_qubits; ++b)
      fp.pair_purities.push_back({a, b, pi_measure(s, a, b)});
  if (s.num_qubits == 2) fp.concurrence = concurrence_2q(s);
  return fp;
}

double fingerprint_distance(const EntanglementFingerprint& a,
                            const EntanglementFingerprint& b) {
  if (a.single_qubit_purities.size() != b.single_qubit_purities.size() ||
      a.pair_purities.size() != b.pair_purities.size() ||
      a.concurrence.has_value() != b.concurrence.has_value())
    throw std::invalid_argument("fingerprint_distance: layouts disagree");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.single_qubit_purities.size(); ++i)
    worst = std::max(worst, std::abs(a.single_qubit_purities[i] -
                                     b.single_qubit_purities[i]));
  for (std::size_t i = 0; i < a.pair_purities.size(); ++i)
    worst = std::max(worst, std::abs(a.pair_purities[i].value -
                                     b.pair_purities[i].value));
  if (a.concurrence)
    worst = std::max(worst, std::abs(*a.concurrence - *b.concurrence));
  return worst;
}

}  // namespace meb
