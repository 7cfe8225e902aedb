#pragma once

// Dense complex linear algebra kernel for small multiqubit systems:
// Kronecker products, conjugate transpose, operator application, partial
// trace and purity. Everything is value-semantic and re-entrant.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace meb {

using Complex = std::complex<double>;

// Hard cap on operator dimension (2^12). The largest catalog object is
// 32-dimensional; the rest is headroom for tests.
inline constexpr int kMaxQubits = 12;
inline constexpr std::size_t kMaxDim = std::size_t{1} << kMaxQubits;

// Tolerance conventions used throughout: algebraically exact constructs get
// 1e-12, swept or derived quantities 1e-10.
inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kSweepTol = 1e-10;

// Row-major dense complex matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static DenseMatrix identity(std::size_t dim);
  // Builds a matrix from nested row lists; rows must have equal length.
  static DenseMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(Complex scale, const DenseMatrix& m);
DenseMatrix operator*(double scale, const DenseMatrix& m);

// Largest entry magnitude.
double max_abs(const DenseMatrix& m);
// Largest entrywise difference; shapes must match.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

// Normalized amplitude vector over num_qubits qubits. Basis convention is
// big-endian: the ket |q1 q2 ... qn> lives at index
// q1*2^(n-1) + q2*2^(n-2) + ... + qn, i.e. qubit 1 is the most significant
// bit. This matches kron(), whose left factor acts on qubit 1.
struct StateVector {
  int num_qubits = 0;
  std::vector<Complex> amps;

  // All-zero amplitude workspace (not yet normalized).
  static StateVector zero(int num_qubits);
  // Basis ket |index> in the convention above.
  static StateVector computational(int num_qubits, std::size_t basis_index);

  std::size_t dim() const { return amps.size(); }
  double norm() const;
  // Scales to unit norm; throws std::domain_error on the zero vector.
  StateVector& normalize();
};

// Reduced state of a subsystem, produced by partial_trace.
struct DensityMatrix {
  int num_qubits = 0;  // qubits of the kept subsystem
  DenseMatrix mat;     // Hermitian, unit trace, dim 2^num_qubits

  Complex trace() const;
};

// Kronecker product; the left factor is the higher-order qubit. Throws
// std::length_error when the result would exceed the 2^12 dimension cap.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

// Conjugate transpose.
DenseMatrix dagger(const DenseMatrix& a);

// Matrix product; throws std::invalid_argument on inner-dimension mismatch.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

struct UnitaryCheck {
  bool unitary = false;
  double residual = 0.0;  // max-abs entry of a†a - I
};

// Tests a†a = I up to tol on a square matrix.
UnitaryCheck is_unitary(const DenseMatrix& a, double tol);

// op * state, without renormalization. The operators applied in this
// artifact are unitary, so the output norm must match the input norm within
// 1e-10; a larger drift throws std::runtime_error.
StateVector apply(const DenseMatrix& op, const StateVector& state);

// <a|b>, conjugate-linear in the first argument.
Complex inner(const StateVector& a, const StateVector& b);

// Density matrix of the kept qubits (1-based indices, any order, no
// duplicates). Traced-out amplitudes are summed directly over index pairs.
DensityMatrix partial_trace(const StateVector& state,
                            const std::vector<int>& keep);

// Tr rho^2.
double purity(const DensityMatrix& rho);

}  // namespace meb
