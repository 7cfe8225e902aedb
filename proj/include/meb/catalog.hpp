#pragma once

// The four maximally-entangled orthogonal basis families (Bell on 2 qubits,
// GHZ on 3, cluster on 4, Brown on 5), each split into subspaces that are
// images of the first subspace under a local Pauli generator. Explicitly
// printed states are stored as verbatim amplitude tables; the remaining
// subspaces are produced by generator application. Generator relations for
// table-backed subspaces hold up to a global phase of -1, which the
// verification checks account for.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "meb/entanglement.hpp"
#include "meb/pauli.hpp"
#include "meb/tensor.hpp"

namespace meb {

enum class Family { Bell2, GHZ3, Cluster4, Brown5 };

inline constexpr std::array<Family, 4> kAllFamilies = {
    Family::Bell2, Family::GHZ3, Family::Cluster4, Family::Brown5};

struct FamilyInfo {
  Family id = Family::Bell2;
  const char* name = "";
  int num_qubits = 0;
  int subspace_count = 0;  // l
  int subspace_size = 0;   // m; m*l = 2^n

  int total_states() const { return subspace_count * subspace_size; }
};

const FamilyInfo& family_info(Family f);
std::optional<Family> parse_basis_family(std::string_view text);

// Tolerance for generator relations, which may hold only up to phase.
inline constexpr double kPhaseTol = 1e-10;

struct Subspace {
  Family family = Family::Bell2;
  int index = 1;        // 1-based subspace label k
  PauliString generator;  // maps subspace 1 onto this one; identity for k=1
  std::vector<StateVector> states;
};

struct Catalog {
  FamilyInfo info;
  std::vector<Subspace> subspaces;

  const Subspace& subspace(int k) const;           // 1-based
  const StateVector& state(int k, int i) const;    // 1-based
};

Catalog build_bell();
Catalog build_ghz();
Catalog build_cluster();
Catalog build_brown();
Catalog build_catalog(Family f);

// Applies the generator's matrix to every state of `base`; orthonormality
// is inherited. Throws on qubit-count mismatch.
Subspace generate_subspace(const Subspace& base, const PauliString& g);

// The invariant each family's states (and within-subspace superpositions)
// are held to: concurrence = 1, every single-qubit purity = 1/2, or
// pi_12 = 1/4.
enum class Measure { Concurrence, SinglePurities, Pi12 };

Measure family_measure(Family f);
const char* measure_name(Measure m);
double measure_target(Measure m);

// Scalar summary of the measure on a state: the concurrence, the worst
// single-qubit purity, or pi_12.
double measure_value(Measure m, const StateVector& s);

// Distance from the measure's target; for SinglePurities the worst marginal
// deviation from 1/2.
double measure_deviation(Measure m, const StateVector& s);

struct CatalogReport {
  double max_offdiag = 0.0;        // largest off-diagonal Gram magnitude
  double max_diag_dev = 0.0;       // largest | <s|s> - 1 |
  double max_generator_dev = 0.0;  // generator relation, phase-insensitive
  double max_measure_dev = 0.0;    // family measure vs its target
  std::vector<EntanglementFingerprint> fingerprints;  // (k, i) order
  bool pass = false;
};

// Orthonormality of all m*l states, generator relations for k >= 2, and the
// per-state family measure against its target. Gram and measure checks use
// `tol`; the generator phase check uses kPhaseTol.
CatalogReport verify_catalog(const Catalog& c, double tol);

}  // namespace meb
