#include "meb/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace meb {

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
  DenseMatrix m(nr, nc);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc)
      throw std::invalid_argument("from_rows: ragged row lengths");
    std::size_t c = 0;
    for (const Complex& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

static void require_same_shape(const DenseMatrix& a, const DenseMatrix& b,
                               const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(who) + ": shape mismatch");
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "operator+");
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "operator-");
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

DenseMatrix operator*(Complex scale, const DenseMatrix& m) {
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = scale * m(r, c);
  return out;
}

DenseMatrix operator*(double scale, const DenseMatrix& m) {
  return Complex(scale, 0.0) * m;
}

double max_abs(const DenseMatrix& m) {
  double worst = 0.0;
  for (const Complex& v : m.entries()) worst = std::max(worst, std::abs(v));
  return worst;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

static void require_qubit_count(int num_qubits, const char* who) {
  if (num_qubits < 1 || num_qubits > kMaxQubits)
    throw std::invalid_argument(std::string(who) + ": qubit count " +
                                std::to_string(num_qubits) +
                                " outside [1, " + std::to_string(kMaxQubits) +
                                "]");
}

StateVector StateVector::zero(int num_qubits) {
  require_qubit_count(num_qubits, "StateVector::zero");
  StateVector s;
  s.num_qubits = num_qubits;
  s.amps.assign(std::size_t{1} << num_qubits, Complex{});
  return s;
}

StateVector StateVector::computational(int num_qubits,
                                       std::size_t basis_index) {
  StateVector s = zero(num_qubits);
  if (basis_index >= s.dim())
    throw std::out_of_range("StateVector::computational: index out of range");
  s.amps[basis_index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amps) sum += std::norm(a);
  return std::sqrt(sum);
}

StateVector& StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("normalize: zero state");
  for (Complex& a : amps) a /= n;
  return *this;
}

Complex DensityMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < mat.rows(); ++i) t += mat(i, i);
  return t;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() * b.rows() > kMaxDim || a.cols() * b.cols() > kMaxDim)
    throw std::length_error("kron: result exceeds the 2^12 dimension cap");
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex scale = a(ar, ac);
      if (scale == Complex{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = scale * b(br, bc);
    }
  return out;
}

DenseMatrix dagger(const DenseMatrix& a) {
  DenseMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(c, r) = std::conj(a(r, c));
  return out;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul: inner dimensions disagree");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex arc = a(r, k);
      if (arc == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += arc * b(k, c);
    }
  return out;
}

UnitaryCheck is_unitary(const DenseMatrix& a, double tol) {
  if (!a.square()) throw std::invalid_argument("is_unitary: matrix not square");
  const std::size_t n = a.rows();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum{};
      for (std::size_t k = 0; k < n; ++k)
        sum += std::conj(a(k, i)) * a(k, j);
      if (i == j) sum -= 1.0;
      worst = std::max(worst, std::abs(sum));
    }
  return {worst <= tol, worst};
}

StateVector apply(const DenseMatrix& op, const StateVector& state) {
  if (!op.square() || op.rows() != state.dim())
    throw std::invalid_argument("apply: operator/state dimension mismatch");
  StateVector out = StateVector::zero(state.num_qubits);
  for (std::size_t r = 0; r < op.rows(); ++r) {
    Complex sum{};
    for (std::size_t c = 0; c < op.cols(); ++c)
      sum += op(r, c) * state.amps[c];
    out.amps[r] = sum;
  }
  if (std::abs(out.norm() - state.norm()) > 1e-10)
    throw std::runtime_error("apply: operator did not preserve the norm");
  return out;
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.num_qubits != b.num_qubits)
    throw std::invalid_argument("inner: qubit counts disagree");
  Complex sum{};
  for (std::size_t i = 0; i < a.dim(); ++i)
    sum += std::conj(a.amps[i]) * b.amps[i];
  return sum;
}

DensityMatrix partial_trace(const StateVector& state,
                            const std::vector<int>& keep) {
  const int n = state.num_qubits;
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw std::invalid_argument("partial_trace: duplicate qubit index");
  if (kept.front() < 1 || kept.back() > n)
    throw std::out_of_range("partial_trace: qubit index outside 1..n");

  std::vector<int> env;
  for (int q = 1; q <= n; ++q)
    if (!std::binary_search(kept.begin(), kept.end(), q)) env.push_back(q);

  const int nk = static_cast<int>(kept.size());
  const int ne = static_cast<int>(env.size());
  const std::size_t dk = std::size_t{1} << nk;
  const std::size_t de = std::size_t{1} << ne;

  // Qubit q occupies bit (n - q) of a basis index. Precompute, for each
  // reduced/environment index, its contribution to the full index.
  auto spread = [n](std::size_t packed, const std::vector<int>& qubits) {
    std::size_t full = 0;
    const int m = static_cast<int>(qubits.size());
    for (int t = 0; t < m; ++t)
      if ((packed >> (m - 1 - t)) & 1U)
        full |= std::size_t{1} << (n - qubits[static_cast<std::size_t>(t)]);
    return full;
  };
  std::vector<std::size_t> kept_bits(dk), env_bits(de);
  for (std::size_t a = 0; a < dk; ++a) kept_bits[a] = spread(a, kept);
  for (std::size_t e = 0; e < de; ++e) env_bits[e] = spread(e, env);

  DensityMatrix rho;
  rho.num_qubits = nk;
  rho.mat = DenseMatrix(dk, dk);
  for (std::size_t a = 0; a < dk; ++a)
    for (std::size_t b = a; b < dk; ++b) {
      Complex sum{};
      for (std::size_t e = 0; e < de; ++e)
        sum += state.amps[kept_bits[a] | env_bits[e]] *
               std::conj(state.amps[kept_bits[b] | env_bits[e]]);
      rho.mat(a, b) = sum;
      rho.mat(b, a) = std::conj(sum);  // Hermitian by construction
    }
  return rho;
}

double purity(const DensityMatrix& rho) {
  const std::size_t d = rho.mat.rows();
  Complex sum{};
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) sum += rho.mat(a, b) * rho.mat(b, a);
  return sum.real();
}

}  // namespace meb
