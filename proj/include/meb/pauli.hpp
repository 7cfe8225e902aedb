#pragma once

// Signed Pauli words over {I, X, Y, Z} with Y taken as the real matrix
// [[0,1],[-1,0]] (i.e. i*sigma_y), so every word realizes as a signed
// permutation matrix with entries in {-1, 0, +1}. On top of that sit the
// named superposition families A, B, U1..U4, the exact pairwise closure
// criterion for superposition unitarity, and a Kronecker factorization
// detector for 4x4 operators.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meb/tensor.hpp"

namespace meb {

enum class PauliLabel : std::uint8_t { I, X, Y, Z };

char label_char(PauliLabel l);
std::optional<PauliLabel> parse_label(char c);

// Signed word of single-qubit labels; qubit 1 is the leftmost label.
struct PauliString {
  int num_qubits = 0;
  std::vector<PauliLabel> labels;
  int sign = +1;

  static PauliString identity(int num_qubits);
  // Parses e.g. "ZXI", "+YI", "-IYI". Throws std::invalid_argument on
  // malformed input.
  static PauliString parse(std::string_view text);

  std::string str() const;
  bool operator==(const PauliString&) const = default;
};

// Transpose (= conjugate transpose; the realization is real).
PauliString pauli_dagger(const PauliString& p);

// Exact product: the label set is closed under multiplication up to sign.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

// sign * (labels[1] (x) labels[2] (x) ... (x) labels[n]). All entries are
// exactly -1, 0 or +1.
DenseMatrix pauli_matrix(const PauliString& p);

// Same matrix as row-major integers, for exact arithmetic.
std::vector<int> pauli_int_matrix(const PauliString& p);

// Checks M^T M == I in integer arithmetic.
bool pauli_orthogonal_exact(const PauliString& p);

// Real superposition coefficients, kept at unit Euclidean norm.
struct CoeffVector {
  std::vector<double> values;

  // Scales raw to unit norm; throws std::domain_error on the zero vector.
  static CoeffVector normalized(std::vector<double> raw);

  std::size_t size() const { return values.size(); }
  double norm() const;
  bool operator==(const CoeffVector&) const = default;
};

enum class OperatorFamilyId { A, B, U1, U2, U3, U4 };

inline constexpr std::array<OperatorFamilyId, 6> kAllOperatorFamilies = {
    OperatorFamilyId::A,  OperatorFamilyId::B,  OperatorFamilyId::U1,
    OperatorFamilyId::U2, OperatorFamilyId::U3, OperatorFamilyId::U4};

const char* operator_family_name(OperatorFamilyId id);
std::optional<OperatorFamilyId> parse_operator_family(std::string_view text);

// An ordered list of same-width Pauli terms to be combined with real
// coefficients. Custom term lists are allowed so closure_check can be
// explored beyond the six named families.
struct SuperpositionFamily {
  std::string name;
  std::vector<PauliString> terms;
};

// A = {X, Z}; B = {Y, I}; U1 = {II, IY, YX, YZ}; U2 = {IZ, IX, YY, YI};
// U3 = {ZZ, ZX, XY, XI}; U4 = {ZI, ZY, XX, XZ}. Term order matches the
// coefficient order of the printed operators.
SuperpositionFamily named_family(OperatorFamilyId id);

SuperpositionFamily custom_family(std::string name,
                                  std::vector<PauliString> terms);

// sum_i c_i * pauli_matrix(terms[i]); throws std::invalid_argument when the
// coefficient count does not match the term count.
DenseMatrix superpose(const SuperpositionFamily& family,
                      const CoeffVector& c);

struct ClosureResult {
  bool closed = true;
  // 0-based term index pairs (i, j), i < j, violating the criterion.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

// Exact pairwise criterion: sum_i c_i T_i is unitary for every real
// unit-norm c iff T_i^dag T_j + T_j^dag T_i = 0 for all i < j. Evaluated in
// integer word arithmetic, no tolerance involved.
ClosureResult closure_check(const std::vector<PauliString>& terms);

// For a non-closed term set, searches for a unit-norm coefficient vector
// whose superposition has unitarity residual above `threshold`: first the
// two-term boundary vectors of each violating pair, then up to max_samples
// random vectors. Returns the witness, or nullopt for closed sets.
std::optional<CoeffVector> find_nonunitary_witness(
    const std::vector<PauliString>& terms, double threshold,
    std::uint64_t seed, int max_samples = 100);

struct KronFactors {
  DenseMatrix left;   // unit operator norm, largest-magnitude entry real > 0
  DenseMatrix right;
};

// Attempts to write a 4x4 matrix as kron(left, right). The matrix is
// reshuffled so that Kronecker-factorable inputs become rank-1; the rank
// decision compares the second reshuffle singular value against
// tol * (first singular value). On success kron(left, right) reproduces the
// input within 10*tol. Zero matrices report as not factorable.
std::optional<KronFactors> try_factor_kron(const DenseMatrix& m,
                                           double tol = kSweepTol);

// Singular values of the 4x4 reshuffle, descending.
std::array<double, 4> reshuffle_singular_values(const DenseMatrix& m);

}  // namespace meb
