#include "meb/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace meb {

namespace {

const FamilyInfo kFamilyTable[] = {
    {Family::Bell2, "bell", 2, 2, 2},
    {Family::GHZ3, "ghz", 3, 4, 2},
    {Family::Cluster4, "cluster", 4, 4, 4},
    {Family::Brown5, "brown", 5, 8, 4},
};

std::size_t bits_to_index(const char* bits) {
  std::size_t idx = 0;
  for (const char* p = bits; *p; ++p) {
    if (*p != '0' && *p != '1')
      throw std::invalid_argument("bits_to_index: non-binary character");
    idx = (idx << 1) | static_cast<std::size_t>(*p - '0');
  }
  return idx;
}

struct Ket {
  const char* bits;
  int sign;
};

StateVector table_state(int n, double scale, std::initializer_list<Ket> kets) {
  StateVector s = StateVector::zero(n);
  for (const Ket& k : kets)
    s.amps[bits_to_index(k.bits)] = k.sign * scale;
  return s;
}

Subspace make_subspace(Family f, int index, const char* generator_word,
                       std::vector<StateVector> states) {
  Subspace sub;
  sub.family = f;
  sub.index = index;
  sub.generator = PauliString::parse(generator_word);
  sub.states = std::move(states);
  return sub;
}

}  // namespace

const FamilyInfo& family_info(Family f) {
  return kFamilyTable[static_cast<int>(f)];
}

std::optional<Family> parse_basis_family(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (const FamilyInfo& info : kFamilyTable)
    if (lower == info.name) return info.id;
  if (lower == "bell2") return Family::Bell2;
  if (lower == "ghz3") return Family::GHZ3;
  if (lower == "cluster4") return Family::Cluster4;
  if (lower == "brown5") return Family::Brown5;
  return std::nullopt;
}

const Subspace& Catalog::subspace(int k) const {
  if (k < 1 || k > static_cast<int>(subspaces.size()))
    throw std::out_of_range("Catalog::subspace: index outside 1..l");
  return subspaces[static_cast<std::size_t>(k - 1)];
}

const StateVector& Catalog::state(int k, int i) const {
  const Subspace& sub = subspace(k);
  if (i < 1 || i > static_cast<int>(sub.states.size()))
    throw std::out_of_range("Catalog::state: index outside 1..m");
  return sub.states[static_cast<std::size_t>(i - 1)];
}

Catalog build_bell() {
  const double r = 1.0 / std::sqrt(2.0);
  // Two sets of two Bell states; the second is the image of the first
  // under Z on qubit 1.
  StateVector phi_plus = table_state(2, r, {{"00", 1}, {"11", 1}});
  StateVector psi_minus = table_state(2, r, {{"01", 1}, {"10", -1}});
  StateVector phi_minus = table_state(2, r, {{"00", 1}, {"11", -1}});
  StateVector psi_plus = table_state(2, r, {{"01", 1}, {"10", 1}});

  Catalog c;
  c.info = family_info(Family::Bell2);
  c.subspaces.push_back(make_subspace(
      Family::Bell2, 1, "II", {std::move(phi_plus), std::move(psi_minus)}));
  c.subspaces.push_back(make_subspace(
      Family::Bell2, 2, "ZI", {std::move(phi_minus), std::move(psi_plus)}));
  return c;
}

Catalog build_ghz() {
  const double r = 1.0 / std::sqrt(2.0);
  // The eight GHZ states psi_1..psi_8, stored verbatim and grouped as
  // {1,4}, {2,3}, {5,8}, {6,7}; sets 2..4 are images of set 1 under Z1,
  // X2 and Z1 X2 up to global phase.
  StateVector psi1 = table_state(3, r, {{"000", 1}, {"111", 1}});
  StateVector psi2 = table_state(3, r, {{"000", 1}, {"111", -1}});
  StateVector psi3 = table_state(3, r, {{"001", 1}, {"110", 1}});
  StateVector psi4 = table_state(3, r, {{"001", 1}, {"110", -1}});
  StateVector psi5 = table_state(3, r, {{"010", 1}, {"101", 1}});
  StateVector psi6 = table_state(3, r, {{"010", 1}, {"101", -1}});
  StateVector psi7 = table_state(3, r, {{"100", 1}, {"011", 1}});
  StateVector psi8 = table_state(3, r, {{"100", 1}, {"011", -1}});

  Catalog c;
  c.info = family_info(Family::GHZ3);
  c.subspaces.push_back(
      make_subspace(Family::GHZ3, 1, "III", {std::move(psi1), std::move(psi4)}));
  c.subspaces.push_back(
      make_subspace(Family::GHZ3, 2, "ZII", {std::move(psi2), std::move(psi3)}));
  c.subspaces.push_back(
      make_subspace(Family::GHZ3, 3, "IXI", {std::move(psi5), std::move(psi8)}));
  c.subspaces.push_back(
      make_subspace(Family::GHZ3, 4, "ZXI", {std::move(psi6), std::move(psi7)}));
  return c;
}

Catalog build_cluster() {
  // First set of the sixteen four-qubit cluster states; the other three
  // sets are generated by Z1, X1 and X2.
  std::vector<StateVector> first = {
      table_state(4, 0.5, {{"0000", 1}, {"0101", 1}, {"1010", 1}, {"1111", -1}}),
      table_state(4, 0.5, {{"0001", -1}, {"0100", 1}, {"1011", 1}, {"1110", 1}}),
      table_state(4, 0.5, {{"0010", 1}, {"0111", 1}, {"1000", -1}, {"1101", 1}}),
      table_state(4, 0.5, {{"0011", 1}, {"0110", -1}, {"1001", 1}, {"1100", 1}}),
  };

  Catalog c;
  c.info = family_info(Family::Cluster4);
  c.subspaces.push_back(
      make_subspace(Family::Cluster4, 1, "IIII", std::move(first)));
  const char* generators[] = {"ZIII", "XIII", "IXII"};
  for (int k = 2; k <= 4; ++k) {
    Subspace sub = generate_subspace(c.subspaces.front(),
                                     PauliString::parse(generators[k - 2]));
    sub.index = k;
    c.subspaces.push_back(std::move(sub));
  }
  return c;
}

Catalog build_brown() {
  const double r = 1.0 / (2.0 * std::sqrt(2.0));
  // First set of the 32 five-qubit states seeded by the Brown state; the
  // remaining seven sets are generated by diagonal Pauli words.
  std::vector<StateVector> first = {
      table_state(5, r,
                  {{"00101", 1}, {"00110", -1}, {"01000", 1}, {"01011", -1},
                   {"10001", 1}, {"10010", 1}, {"11100", 1}, {"11111", 1}}),
      table_state(5, r,
                  {{"00001", 1}, {"00010", 1}, {"01100", -1}, {"01111", -1},
                   {"10101", -1}, {"10110", 1}, {"11000", 1}, {"11011", -1}}),
      table_state(5, r,
                  {{"00000", 1}, {"00011", -1}, {"01101", -1}, {"01110", 1},
                   {"10100", 1}, {"10111", 1}, {"11001", -1}, {"11010", -1}}),
      table_state(5, r,
                  {{"00100", 1}, {"00111", 1}, {"01001", 1}, {"01010", 1},
                   {"10000", -1}, {"10011", 1}, {"11101", -1}, {"11110", 1}}),
  };

  Catalog c;
  c.info = family_info(Family::Brown5);
  c.subspaces.push_back(
      make_subspace(Family::Brown5, 1, "IIIII", std::move(first)));
  const char* generators[] = {"ZIIII", "IZIII", "ZZIII", "IIIZI",
                              "IIIIZ", "ZIIZI", "ZIIIZ"};
  for (int k = 2; k <= 8; ++k) {
    Subspace sub = generate_subspace(c.subspaces.front(),
                                     PauliString::parse(generators[k - 2]));
    sub.index = k;
    c.subspaces.push_back(std::move(sub));
  }
  return c;
}

Catalog build_catalog(Family f) {
  switch (f) {
    case Family::Bell2: return build_bell();
    case Family::GHZ3: return build_ghz();
    case Family::Cluster4: return build_cluster();
    case Family::Brown5: return build_brown();
  }
  throw std::invalid_argument("build_catalog: unknown family");
}

Subspace generate_subspace(const Subspace& base, const PauliString& g) {
  if (base.states.empty())
    throw std::invalid_argument("generate_subspace: empty base subspace");
  if (g.num_qubits != base.states.front().num_qubits)
    throw std::invalid_argument("generate_subspace: qubit count mismatch");
  const DenseMatrix gm = pauli_matrix(g);
  Subspace out;
  out.family = base.family;
  out.index = base.index;
  out.generator = g;
  out.states.reserve(base.states.size());
  for (const StateVector& s : base.states) out.states.push_back(apply(gm, s));
  return out;
}

Measure family_measure(Family f) {
  switch (f) {
    case Family::Bell2: return Measure::Concurrence;
    case Family::GHZ3: return Measure::SinglePurities;
    case Family::Cluster4:
    case Family::Brown5: return Measure::Pi12;
  }
  throw std::invalid_argument("family_measure: unknown family");
}

const char* measure_name(Measure m) {
  switch (m) {
    case Measure::Concurrence: return "concurrence";
    case Measure::SinglePurities: return "single_purities";
    case Measure::Pi12: return "pi12";
  }
  return "?";
}

double measure_target(Measure m) {
  switch (m) {
    case Measure::Concurrence: return 1.0;
    case Measure::SinglePurities: return 0.5;
    case Measure::Pi12: return 0.25;
  }
  return 0.0;
}

double measure_value(Measure m, const StateVector& s) {
  switch (m) {
    case Measure::Concurrence:
      return concurrence_2q(s);
    case Measure::SinglePurities: {
      // Worst marginal: equals 1/2 exactly when every marginal does.
      double worst = 0.0;
      for (double p : single_qubit_purities(s)) worst = std::max(worst, p);
      return worst;
    }
    case Measure::Pi12:
      return pi_measure(s, 1, 2);
  }
  throw std::invalid_argument("measure_value: unknown measure");
}

double measure_deviation(Measure m, const StateVector& s) {
  if (m == Measure::SinglePurities) {
    double worst = 0.0;
    for (double p : single_qubit_purities(s))
      worst = std::max(worst, std::abs(p - 0.5));
    return worst;
  }
  return std::abs(measure_value(m, s) - measure_target(m));
}

CatalogReport verify_catalog(const Catalog& c, double tol) {
  CatalogReport rep;
  std::vector<const StateVector*> all;
  for (const Subspace& sub : c.subspaces)
    for (const StateVector& s : sub.states) all.push_back(&s);

  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a; b < all.size(); ++b) {
      const double mag = std::abs(inner(*all[a], *all[b]));
      if (a == b)
        rep.max_diag_dev = std::max(rep.max_diag_dev, std::abs(mag - 1.0));
      else
        rep.max_offdiag = std::max(rep.max_offdiag, mag);
    }

  const Subspace& first = c.subspaces.front();
  for (std::size_t k = 1; k < c.subspaces.size(); ++k) {
    const Subspace& sub = c.subspaces[k];
    const DenseMatrix gm = pauli_matrix(sub.generator);
    for (std::size_t i = 0; i < sub.states.size(); ++i) {
      const StateVector moved = apply(gm, first.states[i]);
      const double overlap = std::abs(inner(moved, sub.states[i]));
      rep.max_generator_dev =
          std::max(rep.max_generator_dev, std::abs(overlap - 1.0));
    }
  }

  const Measure measure = family_measure(c.info.id);
  for (const StateVector* s : all) {
    rep.fingerprints.push_back(fingerprint(*s));
    rep.max_measure_dev =
        std::max(rep.max_measure_dev, measure_deviation(measure, *s));
  }

  rep.pass = rep.max_offdiag <= tol && rep.max_diag_dev <= tol &&
             rep.max_generator_dev <= kPhaseTol && rep.max_measure_dev <= tol;
  return rep;
}

}  // namespace meb
