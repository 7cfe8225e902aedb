#pragma once

// Command layer behind the CLI verbs. Each command assembles a RunReport;
// rendering, output routing and exit codes live in the CLI front end.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "meb/catalog.hpp"
#include "meb/pauli.hpp"
#include "meb/report.hpp"

namespace meb {

struct UnitariesOptions {
  long samples = 1000;
  std::uint64_t seed = 1;
  double tol = kAlgebraicTol;
};

// All 16 two-qubit Pauli products orthogonal in integer arithmetic; the six
// named families unitary over sampled and boundary coefficients; the
// closure criterion for each family; and the eight special-case Kronecker
// factorization identities.
RunReport cmd_verify_unitaries(const UnitariesOptions& opt);

struct BasisOptions {
  Family family = Family::Bell2;
  double tol = kAlgebraicTol;
};

// Gram identity, generator relations and the per-state family measure for
// one basis catalog.
RunReport cmd_verify_basis(const BasisOptions& opt);

struct SweepOptions {
  Family family = Family::Bell2;
  std::optional<int> subspace;  // nullopt = all subspaces
  long samples = 1000;
  std::uint64_t seed = 1;
  double tol = kSweepTol;
};

RunReport cmd_sweep(const SweepOptions& opt);

struct ProbeOptions {
  Family family = Family::Bell2;
  long samples = 1000;
  std::uint64_t seed = 1;
};

// Observational cross-subspace mixing report; never fails.
RunReport cmd_probe(const ProbeOptions& opt);

struct FactorizeOptions {
  OperatorFamilyId family = OperatorFamilyId::U1;  // U1..U4 only
  std::vector<double> coeffs;                      // 4 real coefficients
  double tol = kSweepTol;
};

// Builds the superposition and attempts a Kronecker factorization. Both
// outcomes are valid; the report fails only on a genuine invariant
// violation (non-unitary input or bad reconstruction).
RunReport cmd_factorize(const FactorizeOptions& opt);

// Catalog text export: a header describing the family, then per state a
// "state <k> <i>" line followed by one "<bitstring> <re> <im>" line per
// nonzero amplitude, printed with 17 significant digits so that re-imported
// amplitudes are bit-identical.
void write_catalog(std::ostream& out, const Catalog& catalog);

struct CatalogDump {
  std::string family_name;
  int num_qubits = 0;
  int subspace_count = 0;
  int subspace_size = 0;
  std::vector<std::vector<StateVector>> states;  // [k-1][i-1]
};

// Parses the write_catalog format; throws std::runtime_error on malformed
// input.
CatalogDump read_catalog(std::istream& in);

RunReport cmd_export_catalog(Family family, std::ostream& out);

}  // namespace meb
