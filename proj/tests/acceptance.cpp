// Acceptance suite: runs every release criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "meb/catalog.hpp"
#include "meb/commands.hpp"
#include "meb/entanglement.hpp"
#include "meb/pauli.hpp"
#include "meb/rng.hpp"
#include "meb/sweep.hpp"
#include "meb/tensor.hpp"
#include "oracles.hpp"

using namespace meb;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome pauli_products_exact() {
  const char* labels = "IXYZ";
  int ok = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (pauli_orthogonal_exact(
              PauliString::parse(std::string{labels[a], labels[b]})))
        ++ok;
  return {ok == 16, "exact M^T M = I for " + std::to_string(ok) + "/16 products"};
}

Outcome superposition_unitarity() {
  double worst = 0.0;
  std::uint64_t stream = 0;
  for (OperatorFamilyId id : kAllOperatorFamilies) {
    const SuperpositionFamily fam = named_family(id);
    const int m = static_cast<int>(fam.terms.size());
    for (const CoeffVector& c : boundary_coeffs(m))
      worst = std::max(worst, is_unitary(superpose(fam, c), 0.0).residual);
    for (int s = 0; s < 1000; ++s) {
      CounterRng rng(1, stream, static_cast<std::uint64_t>(s));
      const CoeffVector c = sample_coeffs(rng, m);
      worst = std::max(worst, is_unitary(superpose(fam, c), 0.0).residual);
    }
    ++stream;
  }
  std::ostringstream detail;
  detail << "worst residual " << worst << " over 6 families x 1000 samples";
  return {worst <= 1e-12, detail.str()};
}

Outcome closure_soundness() {
  for (OperatorFamilyId id : kAllOperatorFamilies)
    if (!closure_check(named_family(id).terms).closed)
      return {false, std::string("named family ") +
                         operator_family_name(id) + " reported non-closed"};

  const std::vector<PauliString> ix = {PauliString::parse("I"),
                                       PauliString::parse("X")};
  if (closure_check(ix).closed) return {false, "{I, X} reported closed"};
  const auto ix_witness = find_nonunitary_witness(ix, 1e-6, 1);
  if (!ix_witness) return {false, "no witness found for {I, X}"};

  std::mt19937_64 rng(2025);
  int found = 0, attempts = 0;
  while (found < 20 && attempts < 500) {
    ++attempts;
    const int count = 2 + static_cast<int>(rng() % 3);
    std::vector<PauliString> terms;
    for (int i = 0; i < count; ++i)
      terms.push_back(oracle::random_pauli(2, rng));
    if (closure_check(terms).closed) continue;
    const auto witness = find_nonunitary_witness(terms, 1e-6, rng());
    if (!witness) return {false, "non-closed set without a witness"};
    const double residual =
        is_unitary(superpose(custom_family("w", terms), *witness), 0.0)
            .residual;
    if (residual <= 1e-6)
      return {false, "witness residual not above 1e-6"};
    ++found;
  }
  return {found >= 20, "witnesses exhibited for " + std::to_string(found) +
                           " random non-closed sets (+ {I, X})"};
}

Outcome factorization() {
  struct Identity {
    OperatorFamilyId id;
    bool head;
    const char* left;
    const char* rc;
    const char* rd;
  };
  const Identity identities[8] = {
      {OperatorFamilyId::U1, true, "I", "I", "Y"},
      {OperatorFamilyId::U2, true, "I", "Z", "X"},
      {OperatorFamilyId::U3, true, "Z", "Z", "X"},
      {OperatorFamilyId::U4, true, "Z", "I", "Y"},
      {OperatorFamilyId::U1, false, "Y", "X", "Z"},
      {OperatorFamilyId::U2, false, "Y", "Y", "I"},
      {OperatorFamilyId::U3, false, "X", "Y", "I"},
      {OperatorFamilyId::U4, false, "X", "X", "Z"},
  };
  double worst_identity = 0.0;
  for (const Identity& id : identities)
    for (int s = 0; s < 50; ++s) {
      CounterRng rng(4, static_cast<std::uint64_t>(s), 0);
      const CoeffVector cd = sample_coeffs(rng, 2);
      const double c = cd.values[0], d = cd.values[1];
      const CoeffVector coeffs{id.head ? std::vector<double>{c, d, 0.0, 0.0}
                                       : std::vector<double>{0.0, 0.0, c, d}};
      const DenseMatrix right =
          c * pauli_matrix(PauliString::parse(id.rc)) +
          d * pauli_matrix(PauliString::parse(id.rd));
      const double dev = max_abs_diff(
          superpose(named_family(id.id), coeffs),
          kron(pauli_matrix(PauliString::parse(id.left)), right));
      worst_identity = std::max(worst_identity, dev);
    }
  if (worst_identity > 1e-12) {
    std::ostringstream detail;
    detail << "identity deviation " << worst_identity << " > 1e-12";
    return {false, detail.str()};
  }

  std::mt19937_64 rng(4096);
  double worst_reconstruction = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const DenseMatrix m =
        kron(oracle::random_unitary(2, rng), oracle::random_unitary(2, rng));
    const auto factors = try_factor_kron(m, 1e-10);
    if (!factors) return {false, "random kron(a, b) not recognized"};
    worst_reconstruction = std::max(
        worst_reconstruction,
        max_abs_diff(kron(factors->left, factors->right), m));
  }
  if (worst_reconstruction > 1e-9) {
    std::ostringstream detail;
    detail << "reconstruction error " << worst_reconstruction << " > 1e-9";
    return {false, detail.str()};
  }

  const DenseMatrix uniform = superpose(named_family(OperatorFamilyId::U1),
                                        CoeffVector{{0.5, 0.5, 0.5, 0.5}});
  if (try_factor_kron(uniform, 1e-10))
    return {false, "uniform coefficients wrongly factorized"};
  const std::array<double, 4> sv = reshuffle_singular_values(uniform);
  if (sv[1] <= 0.1) return {false, "second reshuffle singular value <= 0.1"};

  std::ostringstream detail;
  detail << "8 identities <= " << worst_identity << ", 100 reconstructions <= "
         << worst_reconstruction << ", uniform sigma2 = " << sv[1];
  return {true, detail.str()};
}

Outcome catalog_completeness() {
  double worst_gram = 0.0, worst_gen = 0.0;
  for (Family f : kAllFamilies) {
    const CatalogReport rep = verify_catalog(build_catalog(f), 1e-12);
    worst_gram = std::max({worst_gram, rep.max_offdiag, rep.max_diag_dev});
    worst_gen = std::max(worst_gen, rep.max_generator_dev);
  }
  std::ostringstream detail;
  detail << "Gram deviation " << worst_gram << ", generator deviation "
         << worst_gen;
  return {worst_gram <= 1e-12 && worst_gen <= 1e-10, detail.str()};
}

Outcome purity_values() {
  double worst = 0.0;
  int states = 0;
  for (Family f : {Family::Cluster4, Family::Brown5}) {
    const Catalog catalog = build_catalog(f);
    for (const Subspace& sub : catalog.subspaces)
      for (const StateVector& s : sub.states) {
        worst = std::max(worst, std::abs(pi_measure(s, 1, 2) - 0.25));
        ++states;
      }
  }
  std::ostringstream detail;
  detail << "pi_12 deviation " << worst << " over " << states << " states";
  return {worst <= 1e-12 && states == 48, detail.str()};
}

Outcome invariance_sweeps() {
  double worst = 0.0;
  for (Family f : kAllFamilies) {
    SweepConfig cfg;
    cfg.family = f;
    cfg.samples = 1000;
    cfg.seed = 1;
    cfg.tol = 1e-10;
    const SweepReport rep = run_sweep(cfg);
    if (!rep.pass) {
      std::ostringstream detail;
      detail << family_info(f).name << " sweep deviation "
             << rep.max_deviation << " > 1e-10";
      return {false, detail.str()};
    }
    worst = std::max(worst, rep.max_deviation);
  }
  std::ostringstream detail;
  detail << "4 families x 1000 samples/subspace, worst deviation " << worst;
  return {true, detail.str()};
}

Outcome cross_subspace_regression() {
  const Catalog bell = build_bell();
  const StateVector& phi_plus = bell.state(1, 1);
  const StateVector& psi_plus = bell.state(2, 2);
  StateVector mix = StateVector::zero(2);
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < 4; ++i)
    mix.amps[i] = r * (phi_plus.amps[i] + psi_plus.amps[i]);
  const double c = concurrence_2q(mix);
  std::ostringstream detail;
  detail << "equal-weight cross mix concurrence " << c;
  return {c <= 1e-10, detail.str()};
}

Outcome cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path a = dir / "meb_determinism_a.json";
  const fs::path b = dir / "meb_determinism_b.json";

  const std::string base = std::string(MEBTOOL_PATH) +
                           " sweep --family brown --samples 1000 --seed 7 "
                           "--format json --out ";
  for (const fs::path& p : {a, b}) {
    const int rc = std::system((base + p.string()).c_str());
    if (rc != 0) return {false, "CLI run failed with status " +
                                    std::to_string(rc)};
  }

  auto load_without_wall = [](const fs::path& p) {
    std::ifstream in(p);
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(in);
    doc.erase("wall_ms");
    return doc.dump();
  };
  const std::string da = load_without_wall(a);
  const std::string db = load_without_wall(b);
  fs::remove(a);
  fs::remove(b);
  if (da != db) return {false, "reports differ beyond wall_ms"};
  return {true, "two runs byte-identical after dropping wall_ms"};
}

Outcome property_suites() {
  std::mt19937_64 rng(77);
  double worst_mixed = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    const DenseMatrix a = oracle::random_complex(2, 2, rng);
    const DenseMatrix b = oracle::random_complex(2, 2, rng);
    const DenseMatrix c = oracle::random_complex(2, 2, rng);
    const DenseMatrix d = oracle::random_complex(2, 2, rng);
    worst_mixed = std::max(
        worst_mixed, max_abs_diff(matmul(kron(a, b), kron(c, d)),
                                  kron(matmul(a, c), matmul(b, d))));
  }
  if (worst_mixed > 1e-12) return {false, "mixed-product law violated"};

  double worst_trace = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const StateVector s = oracle::random_state(n, rng);
    std::vector<int> keep;
    for (int q = 1; q <= n; ++q)
      if (rng() % 2) keep.push_back(q);
    if (keep.empty()) keep.push_back(1);
    worst_trace = std::max(
        worst_trace,
        std::abs(partial_trace(s, keep).trace() - Complex(1.0, 0.0)));
  }
  if (worst_trace > 1e-12) return {false, "partial trace lost trace"};

  double worst_comp = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const StateVector s = oracle::random_state(n, rng);
    std::vector<int> keep, rest;
    for (int q = 1; q <= n; ++q) (rng() % 2 ? keep : rest).push_back(q);
    if (keep.empty()) { keep.push_back(rest.back()); rest.pop_back(); }
    if (rest.empty()) { rest.push_back(keep.back()); keep.pop_back(); }
    worst_comp = std::max(worst_comp,
                          std::abs(purity(partial_trace(s, keep)) -
                                   purity(partial_trace(s, rest))));
  }
  if (worst_comp > 1e-10) return {false, "complementary purity violated"};

  double worst_fp = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const StateVector s = oracle::random_state(n, rng);
    const PauliString p = oracle::random_pauli(n, rng);
    worst_fp = std::max(worst_fp,
                        fingerprint_distance(fingerprint(s),
                                             fingerprint(apply(pauli_matrix(p),
                                                               s))));
  }
  if (worst_fp > 1e-10) return {false, "fingerprint not Pauli-invariant"};

  std::ostringstream detail;
  detail << "mixed-product " << worst_mixed << ", trace " << worst_trace
         << ", complement " << worst_comp << ", fingerprint " << worst_fp;
  return {true, detail.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"pauli product orthogonality (exact)", pauli_products_exact},
      {"superposition unitarity (1e-12)", superposition_unitarity},
      {"closure criterion soundness", closure_soundness},
      {"kronecker factorization", factorization},
      {"catalog completeness (1e-12 / 1e-10)", catalog_completeness},
      {"pi_12 = 1/4 on cluster and brown states (1e-12)", purity_values},
      {"within-subspace invariance sweeps (1e-10)", invariance_sweeps},
      {"cross-subspace product-state regression (1e-10)",
       cross_subspace_regression},
      {"CLI sweep determinism", cli_determinism},
      {"property suites (200 instances each)", property_suites},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] criterion %2zu: %s: %s (%.1f ms)\n",
                outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                outcome.detail.c_str(), ms);
    if (!outcome.pass) ++failures;
  }
  if (failures) std::printf("%d criteria FAILED\n", failures);
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
