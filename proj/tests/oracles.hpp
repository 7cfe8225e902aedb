#pragma once

// Test-only oracles. Each deliberately takes a different computational
// route than the library: the partial trace goes through the full density
// matrix, singular values come from power iteration with deflation, and
// exact orthogonality is checked by a naive integer matrix product.

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "meb/pauli.hpp"
#include "meb/tensor.hpp"

namespace oracle {

using meb::Complex;
using meb::DenseMatrix;
using meb::StateVector;

// Reduced density matrix computed from the full |psi><psi| matrix by
// summing traced-out diagonal blocks.
inline meb::DensityMatrix partial_trace_bruteforce(const StateVector& s,
                                                   std::vector<int> keep) {
  const int n = s.num_qubits;
  std::sort(keep.begin(), keep.end());
  std::vector<int> env;
  for (int q = 1; q <= n; ++q)
    if (!std::binary_search(keep.begin(), keep.end(), q)) env.push_back(q);

  const std::size_t dim = s.dim();
  DenseMatrix full(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      full(r, c) = s.amps[r] * std::conj(s.amps[c]);

  auto bit_of = [n](std::size_t idx, int qubit) {
    return (idx >> (n - qubit)) & 1U;
  };
  const std::size_t dk = std::size_t{1} << keep.size();
  meb::DensityMatrix rho;
  rho.num_qubits = static_cast<int>(keep.size());
  rho.mat = DenseMatrix(dk, dk);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      bool same_env = true;
      for (int q : env)
        if (bit_of(r, q) != bit_of(c, q)) { same_env = false; break; }
      if (!same_env) continue;
      std::size_t a = 0, b = 0;
      for (int q : keep) {
        a = (a << 1) | bit_of(r, q);
        b = (b << 1) | bit_of(c, q);
      }
      rho.mat(a, b) += full(r, c);
    }
  return rho;
}

// Independent transcription of the reshuffle used for Kronecker rank tests.
inline DenseMatrix reshuffle4(const DenseMatrix& m) {
  DenseMatrix r(4, 4);
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t i2 = 0; i2 < 2; ++i2)
      for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          r(2 * i1 + j1, 2 * i2 + j2) = m(2 * i1 + i2, 2 * j1 + j2);
  return r;
}

// Largest singular value via power iteration on M^dag M, restarted from
// every basis vector. Optionally reports the right singular vector.
inline double top_singular(const DenseMatrix& m,
                           std::vector<Complex>* right = nullptr) {
  const std::size_t rows = m.rows(), cols = m.cols();
  double best = 0.0;
  std::vector<Complex> best_v(cols);
  for (std::size_t start = 0; start < cols; ++start) {
    std::vector<Complex> v(cols);
    v[start] = 1.0;
    for (int it = 0; it < 300; ++it) {
      std::vector<Complex> mv(rows);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) mv[r] += m(r, c) * v[c];
      std::vector<Complex> w(cols);
      for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r)
          w[c] += std::conj(m(r, c)) * mv[r];
      double nw = 0.0;
      for (const Complex& z : w) nw += std::norm(z);
      nw = std::sqrt(nw);
      if (nw == 0.0) break;
      for (Complex& z : w) z /= nw;
      v = std::move(w);
    }
    double sq = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
      Complex mv{};
      for (std::size_t c = 0; c < cols; ++c) mv += m(r, c) * v[c];
      sq += std::norm(mv);
    }
    const double sigma = std::sqrt(sq);
    if (sigma > best) {
      best = sigma;
      best_v = v;
    }
  }
  if (right) *right = best_v;
  return best;
}

// Top two singular values via deflation.
inline std::array<double, 2> top_two_singular(const DenseMatrix& m) {
  std::vector<Complex> v1;
  const double s1 = top_singular(m, &v1);
  if (s1 == 0.0) return {0.0, 0.0};
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Complex> u1(rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) u1[r] += m(r, c) * v1[c];
  for (Complex& z : u1) z /= s1;
  DenseMatrix deflated(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      deflated(r, c) = m(r, c) - s1 * u1[r] * std::conj(v1[c]);
  return {s1, top_singular(deflated)};
}

// Smallest eigenvalue of a small Hermitian matrix, via power iteration on
// (bound*I - H). Used for density-matrix positivity checks.
inline double min_eig_hermitian(const DenseMatrix& h) {
  const std::size_t n = h.rows();
  double bound = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < n; ++c) row += std::abs(h(r, c));
    bound = std::max(bound, row);
  }
  DenseMatrix shifted(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      shifted(r, c) = (r == c ? Complex(bound, 0.0) : Complex{}) - h(r, c);
  // shifted is Hermitian PSD with top eigenvalue bound - lambda_min.
  const double top = top_singular(shifted);
  return bound - top;
}

inline std::vector<int> int_matmul(const std::vector<int>& a,
                                   const std::vector<int>& b,
                                   std::size_t dim) {
  std::vector<int> out(dim * dim, 0);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t k = 0; k < dim; ++k) {
      if (a[r * dim + k] == 0) continue;
      for (std::size_t c = 0; c < dim; ++c)
        out[r * dim + c] += a[r * dim + k] * b[k * dim + c];
    }
  return out;
}

inline std::vector<int> int_transpose(const std::vector<int>& a,
                                      std::size_t dim) {
  std::vector<int> out(dim * dim, 0);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) out[c * dim + r] = a[r * dim + c];
  return out;
}

// --- random generators ------------------------------------------------

inline DenseMatrix random_complex(std::size_t rows, std::size_t cols,
                                  std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = Complex(dist(rng), dist(rng));
  return m;
}

inline StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  StateVector s = StateVector::zero(n);
  for (Complex& a : s.amps) a = Complex(dist(rng), dist(rng));
  return s.normalize();
}

// Random unitary by Gram-Schmidt on a random complex matrix.
inline DenseMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  for (;;) {
    DenseMatrix m = random_complex(dim, dim, rng);
    bool degenerate = false;
    for (std::size_t c = 0; c < dim && !degenerate; ++c) {
      for (std::size_t p = 0; p < c; ++p) {
        Complex overlap{};
        for (std::size_t r = 0; r < dim; ++r)
          overlap += std::conj(m(r, p)) * m(r, c);
        for (std::size_t r = 0; r < dim; ++r) m(r, c) -= overlap * m(r, p);
      }
      double nc = 0.0;
      for (std::size_t r = 0; r < dim; ++r) nc += std::norm(m(r, c));
      nc = std::sqrt(nc);
      if (nc < 1e-6) { degenerate = true; break; }
      for (std::size_t r = 0; r < dim; ++r) m(r, c) /= nc;
    }
    if (!degenerate) return m;
  }
}

inline meb::PauliString random_pauli(int n, std::mt19937_64& rng,
                                     bool with_sign = true) {
  std::uniform_int_distribution<int> label(0, 3);
  meb::PauliString p = meb::PauliString::identity(n);
  for (auto& l : p.labels) l = static_cast<meb::PauliLabel>(label(rng));
  if (with_sign && std::uniform_int_distribution<int>(0, 1)(rng))
    p.sign = -1;
  return p;
}

}  // namespace oracle
