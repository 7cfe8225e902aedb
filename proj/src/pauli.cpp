#include "meb/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "meb/rng.hpp"

namespace meb {

char label_char(PauliLabel l) {
  switch (l) {
    case PauliLabel::I: return 'I';
    case PauliLabel::X: return 'X';
    case PauliLabel::Y: return 'Y';
    case PauliLabel::Z: return 'Z';
  }
  return '?';
}

std::optional<PauliLabel> parse_label(char c) {
  switch (c) {
    case 'I': case 'i': return PauliLabel::I;
    case 'X': case 'x': return PauliLabel::X;
    case 'Y': case 'y': return PauliLabel::Y;
    case 'Z': case 'z': return PauliLabel::Z;
  }
  return std::nullopt;
}

PauliString PauliString::identity(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits)
    throw std::invalid_argument("PauliString: qubit count outside 1..12");
  PauliString p;
  p.num_qubits = num_qubits;
  p.labels.assign(static_cast<std::size_t>(num_qubits), PauliLabel::I);
  return p;
}

PauliString PauliString::parse(std::string_view text) {
  PauliString p;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    p.sign = text[pos] == '-' ? -1 : +1;
    ++pos;
  }
  for (; pos < text.size(); ++pos) {
    const auto l = parse_label(text[pos]);
    if (!l) throw std::invalid_argument("PauliString::parse: bad label '" +
                                        std::string(1, text[pos]) + "'");
    p.labels.push_back(*l);
  }
  if (p.labels.empty())
    throw std::invalid_argument("PauliString::parse: empty word");
  if (p.labels.size() > kMaxQubits)
    throw std::invalid_argument("PauliString::parse: word longer than 12");
  p.num_qubits = static_cast<int>(p.labels.size());
  return p;
}

std::string PauliString::str() const {
  std::string out;
  if (sign < 0) out.push_back('-');
  for (PauliLabel l : labels) out.push_back(label_char(l));
  return out;
}

PauliString pauli_dagger(const PauliString& p) {
  // Transpose: I, X, Z are symmetric, Y is antisymmetric.
  PauliString out = p;
  for (PauliLabel l : p.labels)
    if (l == PauliLabel::Y) out.sign = -out.sign;
  return out;
}

namespace {

struct LabelProduct {
  PauliLabel label;
  int sign;
};

// kMul[a][b] = a * b, indexed by the enum order I, X, Y, Z.
constexpr LabelProduct kMul[4][4] = {
    {{PauliLabel::I, +1}, {PauliLabel::X, +1}, {PauliLabel::Y, +1}, {PauliLabel::Z, +1}},
    {{PauliLabel::X, +1}, {PauliLabel::I, +1}, {PauliLabel::Z, -1}, {PauliLabel::Y, -1}},
    {{PauliLabel::Y, +1}, {PauliLabel::Z, +1}, {PauliLabel::I, -1}, {PauliLabel::X, -1}},
    {{PauliLabel::Z, +1}, {PauliLabel::Y, +1}, {PauliLabel::X, +1}, {PauliLabel::I, +1}},
};

struct PauliMasks {
  std::size_t flip = 0;   // X or Y positions: column = row ^ flip
  std::size_t phase = 0;  // Y or Z positions: entry sign flips per set row bit
};

PauliMasks masks_of(const PauliString& p) {
  PauliMasks mk;
  for (int q = 1; q <= p.num_qubits; ++q) {
    const std::size_t bit = std::size_t{1} << (p.num_qubits - q);
    switch (p.labels[static_cast<std::size_t>(q - 1)]) {
      case PauliLabel::I: break;
      case PauliLabel::X: mk.flip |= bit; break;
      case PauliLabel::Y: mk.flip |= bit; mk.phase |= bit; break;
      case PauliLabel::Z: mk.phase |= bit; break;
    }
  }
  return mk;
}

int entry_sign(const PauliString& p, const PauliMasks& mk, std::size_t row) {
  const int parity =
      static_cast<int>(std::popcount(row & mk.phase) & 1U);
  return parity ? -p.sign : p.sign;
}

void check_same_width(const std::vector<PauliString>& terms,
                      const char* who) {
  if (terms.empty())
    throw std::invalid_argument(std::string(who) + ": empty term list");
  for (const PauliString& t : terms)
    if (t.num_qubits != terms.front().num_qubits)
      throw std::invalid_argument(std::string(who) +
                                  ": mixed qubit counts in term list");
}

}  // namespace

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  if (a.num_qubits != b.num_qubits)
    throw std::invalid_argument("pauli_mul: qubit counts disagree");
  PauliString out;
  out.num_qubits = a.num_qubits;
  out.sign = a.sign * b.sign;
  out.labels.reserve(a.labels.size());
  for (std::size_t q = 0; q < a.labels.size(); ++q) {
    const LabelProduct prod =
        kMul[static_cast<int>(a.labels[q])][static_cast<int>(b.labels[q])];
    out.labels.push_back(prod.label);
    out.sign *= prod.sign;
  }
  return out;
}

DenseMatrix pauli_matrix(const PauliString& p) {
  const std::size_t dim = std::size_t{1} << p.num_qubits;
  const PauliMasks mk = masks_of(p);
  DenseMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    m(r, r ^ mk.flip) = static_cast<double>(entry_sign(p, mk, r));
  return m;
}

std::vector<int> pauli_int_matrix(const PauliString& p) {
  const std::size_t dim = std::size_t{1} << p.num_qubits;
  const PauliMasks mk = masks_of(p);
  std::vector<int> m(dim * dim, 0);
  for (std::size_t r = 0; r < dim; ++r)
    m[r * dim + (r ^ mk.flip)] = entry_sign(p, mk, r);
  return m;
}

bool pauli_orthogonal_exact(const PauliString& p) {
  const std::size_t dim = std::size_t{1} << p.num_qubits;
  const std::vector<int> m = pauli_int_matrix(p);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      long acc = 0;
      for (std::size_t k = 0; k < dim; ++k)
        acc += static_cast<long>(m[k * dim + i]) * m[k * dim + j];
      if (acc != (i == j ? 1 : 0)) return false;
    }
  return true;
}

CoeffVector CoeffVector::normalized(std::vector<double> raw) {
  double sq = 0.0;
  for (double v : raw) sq += v * v;
  if (sq <= 0.0)
    throw std::domain_error("CoeffVector: cannot normalize the zero vector");
  const double inv = 1.0 / std::sqrt(sq);
  for (double& v : raw) v *= inv;
  return CoeffVector{std::move(raw)};
}

double CoeffVector::norm() const {
  double sq = 0.0;
  for (double v : values) sq += v * v;
  return std::sqrt(sq);
}

const char* operator_family_name(OperatorFamilyId id) {
  switch (id) {
    case OperatorFamilyId::A: return "A";
    case OperatorFamilyId::B: return "B";
    case OperatorFamilyId::U1: return "U1";
    case OperatorFamilyId::U2: return "U2";
    case OperatorFamilyId::U3: return "U3";
    case OperatorFamilyId::U4: return "U4";
  }
  return "?";
}

std::optional<OperatorFamilyId> parse_operator_family(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "a") return OperatorFamilyId::A;
  if (lower == "b") return OperatorFamilyId::B;
  if (lower == "u1") return OperatorFamilyId::U1;
  if (lower == "u2") return OperatorFamilyId::U2;
  if (lower == "u3") return OperatorFamilyId::U3;
  if (lower == "u4") return OperatorFamilyId::U4;
  return std::nullopt;
}

SuperpositionFamily named_family(OperatorFamilyId id) {
  auto words = [](std::initializer_list<const char*> ws) {
    std::vector<PauliString> terms;
    for (const char* w : ws) terms.push_back(PauliString::parse(w));
    return terms;
  };
  switch (id) {
    case OperatorFamilyId::A:
      return {"A", words({"X", "Z"})};
    case OperatorFamilyId::B:
      return {"B", words({"Y", "I"})};
    case OperatorFamilyId::U1:
      return {"U1", words({"II", "IY", "YX", "YZ"})};
    case OperatorFamilyId::U2:
      return {"U2", words({"IZ", "IX", "YY", "YI"})};
    case OperatorFamilyId::U3:
      return {"U3", words({"ZZ", "ZX", "XY", "XI"})};
    case OperatorFamilyId::U4:
      return {"U4", words({"ZI", "ZY", "XX", "XZ"})};
  }
  throw std::invalid_argument("named_family: unknown id");
}

SuperpositionFamily custom_family(std::string name,
                                  std::vector<PauliString> terms) {
  check_same_width(terms, "custom_family");
  return {std::move(name), std::move(terms)};
}

DenseMatrix superpose(const SuperpositionFamily& family,
                      const CoeffVector& c) {
  check_same_width(family.terms, "superpose");
  if (c.size() != family.terms.size())
    throw std::invalid_argument(
        "superpose: coefficient count does not match term count");
  const std::size_t dim = std::size_t{1} << family.terms.front().num_qubits;
  DenseMatrix out(dim, dim);
  for (std::size_t t = 0; t < family.terms.size(); ++t) {
    const PauliString& term = family.terms[t];
    const PauliMasks mk = masks_of(term);
    const double ct = c.values[t];
    for (std::size_t r = 0; r < dim; ++r)
      out(r, r ^ mk.flip) += ct * entry_sign(term, mk, r);
  }
  return out;
}

ClosureResult closure_check(const std::vector<PauliString>& terms) {
  check_same_width(terms, "closure_check");
  ClosureResult res;
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      const PauliString d = pauli_mul(pauli_dagger(terms[i]), terms[j]);
      const PauliString e = pauli_mul(pauli_dagger(terms[j]), terms[i]);
      // d + e vanishes iff they are the same word with opposite signs;
      // distinct words are linearly independent.
      const bool zero = d.labels == e.labels && d.sign == -e.sign;
      if (!zero) res.violations.emplace_back(i, j);
    }
  res.closed = res.violations.empty();
  return res;
}

std::optional<CoeffVector> find_nonunitary_witness(
    const std::vector<PauliString>& terms, double threshold,
    std::uint64_t seed, int max_samples) {
  const ClosureResult closure = closure_check(terms);
  if (closure.closed) return std::nullopt;

  SuperpositionFamily fam{"witness", terms};
  const std::size_t m = terms.size();
  auto residual = [&](const CoeffVector& c) {
    return is_unitary(superpose(fam, c), 0.0).residual;
  };

  // Two-term boundary vectors isolate a single violating pair, so one of
  // them always exceeds any threshold < 1.
  const double r = 1.0 / std::sqrt(2.0);
  for (const auto& [i, j] : closure.violations)
    for (double sgn : {+1.0, -1.0}) {
      CoeffVector c{std::vector<double>(m, 0.0)};
      c.values[i] = r;
      c.values[j] = sgn * r;
      if (residual(c) > threshold) return c;
    }

  CounterRng rng(seed, 0x7761746368ULL, 0);
  for (int s = 0; s < max_samples; ++s) {
    CoeffVector c = CoeffVector::normalized(
        gaussian_draws(rng, static_cast<int>(m)));
    if (residual(c) > threshold) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Kronecker factorization via the reshuffle-to-rank-1 reduction.

namespace {

// R[(i1,j1),(i2,j2)] = M[(i1,i2),(j1,j2)]: kron(A, B) reshuffles to the
// rank-1 outer product vec(A) vec(B)^T with row-major vec.
DenseMatrix reshuffle4(const DenseMatrix& m) {
  DenseMatrix r(4, 4);
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t i2 = 0; i2 < 2; ++i2)
      for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          r(2 * i1 + j1, 2 * i2 + j2) = m(2 * i1 + i2, 2 * j1 + j2);
  return r;
}

struct SmallSvd {
  std::vector<double> sigma;  // descending
  DenseMatrix u;              // columns; m = u diag(sigma) v^dag
  DenseMatrix v;
};

// One-sided (Hestenes) Jacobi SVD for small square complex matrices.
// Columns of a working copy are pairwise orthogonalized by unitary plane
// rotations; the accumulated rotations form V and the normalized columns U.
SmallSvd jacobi_svd(const DenseMatrix& m) {
  const std::size_t n = m.rows();
  DenseMatrix a = m;
  DenseMatrix v = DenseMatrix::identity(n);

  const int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0;
        Complex apq{};
        for (std::size_t r = 0; r < n; ++r) {
          app += std::norm(a(r, p));
          aqq += std::norm(a(r, q));
          apq += std::conj(a(r, p)) * a(r, q);
        }
        const double g = std::abs(apq);
        if (g <= 1e-15 * std::sqrt(app * aqq) || g == 0.0) continue;
        rotated = true;

        const Complex phase = apq / g;
        const double tau = (aqq - app) / (2.0 * g);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) /
            (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        const Complex pconj = std::conj(phase);

        for (std::size_t r = 0; r < n; ++r) {
          const Complex up = a(r, p), uq = a(r, q);
          a(r, p) = cs * up - sn * (pconj * uq);
          a(r, q) = sn * (phase * up) + cs * uq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const Complex vp = v(r, p), vq = v(r, q);
          v(r, p) = cs * vp - sn * (pconj * vq);
          v(r, q) = sn * (phase * vp) + cs * vq;
        }
      }
    if (!rotated) break;
  }

  SmallSvd out;
  out.sigma.resize(n);
  out.u = DenseMatrix(n, n);
  out.v = DenseMatrix(n, n);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> norms(n);
  for (std::size_t c = 0; c < n; ++c) {
    double sq = 0.0;
    for (std::size_t r = 0; r < n; ++r) sq += std::norm(a(r, c));
    norms[c] = std::sqrt(sq);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return norms[x] > norms[y];
                   });
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = order[c];
    out.sigma[c] = norms[src];
    for (std::size_t r = 0; r < n; ++r) {
      out.u(r, c) = norms[src] > 0.0 ? a(r, src) / norms[src] : Complex{};
      out.v(r, c) = v(r, src);
    }
  }
  return out;
}

// Largest singular value of a 2x2 complex matrix, in closed form.
double operator_norm_2x2(const DenseMatrix& a) {
  const double p = std::norm(a(0, 0)) + std::norm(a(1, 0));
  const double r = std::norm(a(0, 1)) + std::norm(a(1, 1));
  const Complex q = std::conj(a(0, 0)) * a(0, 1) + std::conj(a(1, 0)) * a(1, 1);
  const double half = 0.5 * (p - r);
  const double lam = 0.5 * (p + r) + std::sqrt(half * half + std::norm(q));
  return std::sqrt(std::max(lam, 0.0));
}

void require_4x4(const DenseMatrix& m, const char* who) {
  if (m.rows() != 4 || m.cols() != 4)
    throw std::invalid_argument(std::string(who) + ": expects a 4x4 matrix");
}

}  // namespace

std::array<double, 4> reshuffle_singular_values(const DenseMatrix& m) {
  require_4x4(m, "reshuffle_singular_values");
  const SmallSvd svd = jacobi_svd(reshuffle4(m));
  return {svd.sigma[0], svd.sigma[1], svd.sigma[2], svd.sigma[3]};
}

std::optional<KronFactors> try_factor_kron(const DenseMatrix& m, double tol) {
  require_4x4(m, "try_factor_kron");
  const SmallSvd svd = jacobi_svd(reshuffle4(m));
  const double s1 = svd.sigma[0];
  if (s1 == 0.0) return std::nullopt;  // zero matrix
  if (svd.sigma[1] > tol * s1) return std::nullopt;

  DenseMatrix left(2, 2), right(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      left(i, j) = svd.u(2 * i + j, 0);
      right(i, j) = s1 * std::conj(svd.v(2 * i + j, 0));
    }

  // Gauge: scale the pair so the left factor has unit operator norm and its
  // largest-magnitude entry (first in row-major order on ties) is real
  // positive. Kronecker factors are only defined up to reciprocal scalars.
  const double opn = operator_norm_2x2(left);
  Complex top = left(0, 0);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (std::abs(left(i, j)) > std::abs(top)) top = left(i, j);
  const Complex gauge = opn * (top / std::abs(top));
  left = (1.0 / gauge) * left;
  right = gauge * right;
  return KronFactors{std::move(left), std::move(right)};
}

}  // namespace meb
