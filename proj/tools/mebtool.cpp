// mebtool: verification CLI for superposition-unitary operator families and
// the maximally entangled basis catalogs.
//
// Exit codes: 0 = all checks pass, 1 = at least one invariant violated,
// 2 = usage or I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meb/commands.hpp"
#include "meb/report.hpp"
#include "meb/version.hpp"

namespace {

struct OutputOptions {
  std::string format = "text";
  std::string out = "-";  // "-" means stdout
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", opts.out, "Output path, or - for stdout");
}

// Returns 2 on I/O failure, otherwise 0/1 from the report's pass flag.
int emit(const meb::RunReport& rep, const OutputOptions& opts) {
  const auto format = meb::parse_format(opts.format);
  const std::string body = meb::render(rep, format.value());
  if (opts.out == "-") {
    std::cout << body;
  } else {
    std::ofstream file(opts.out);
    if (!file) {
      std::cerr << "error: cannot open '" << opts.out << "' for writing\n";
      return 2;
    }
    file << body;
    if (!file) {
      std::cerr << "error: write to '" << opts.out << "' failed\n";
      return 2;
    }
  }
  return rep.pass ? 0 : 1;
}

std::vector<double> parse_coeff_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--coeffs",
                                 "'" + item + "' is not a number");
    }
    while (used < item.size() && std::isspace(
               static_cast<unsigned char>(item[used])))
      ++used;
    if (used != item.size())
      throw CLI::ValidationError("--coeffs", "'" + item + "' is not a number");
    out.push_back(v);
  }
  return out;
}

meb::Family family_or_throw(const std::string& text) {
  const auto f = meb::parse_basis_family(text);
  if (!f)
    throw CLI::ValidationError(
        "--family", "expected one of bell, ghz, cluster, brown");
  return *f;
}

std::optional<int> subspace_or_throw(const std::string& text, int max) {
  if (text == "all") return std::nullopt;
  try {
    std::size_t used = 0;
    const int k = std::stoi(text, &used);
    if (used == text.size() && k >= 1 && k <= max) return k;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError(
      "--subspace", "expected 'all' or an integer in 1.." + std::to_string(max));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suite for superposition-unitary operator "
               "families and maximally entangled basis catalogs"};
  app.set_version_flag("--version", meb::kVersion);
  app.require_subcommand(1);

  // verify-unitaries
  meb::UnitariesOptions uni_opts;
  OutputOptions uni_out;
  auto* uni = app.add_subcommand(
      "verify-unitaries",
      "Pauli product orthogonality, sampled superposition unitarity, "
      "closure criterion and the special-case factorizations");
  uni->add_option("--samples", uni_opts.samples, "Coefficient samples per family")
      ->check(CLI::PositiveNumber);
  uni->add_option("--seed", uni_opts.seed, "Sample stream seed");
  uni->add_option("--tol", uni_opts.tol, "Residual tolerance");
  add_output_options(uni, uni_out);

  // verify-basis
  std::string basis_family = "bell";
  meb::BasisOptions basis_opts;
  OutputOptions basis_out;
  auto* basis = app.add_subcommand(
      "verify-basis",
      "Orthonormality, generator relations and entanglement targets of one "
      "basis catalog");
  basis->add_option("--family", basis_family, "bell, ghz, cluster or brown")
      ->required();
  basis->add_option("--tol", basis_opts.tol, "Residual tolerance");
  add_output_options(basis, basis_out);

  // sweep
  std::string sweep_family = "bell";
  std::string sweep_subspace = "all";
  meb::SweepOptions sweep_opts;
  OutputOptions sweep_out;
  auto* sweep = app.add_subcommand(
      "sweep", "Randomized within-subspace superposition invariance sweep");
  sweep->add_option("--family", sweep_family, "bell, ghz, cluster or brown")
      ->required();
  sweep->add_option("--subspace", sweep_subspace,
                    "Subspace index (1-based) or 'all'");
  sweep->add_option("--samples", sweep_opts.samples,
                    "Random samples per subspace")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--seed", sweep_opts.seed, "Sample stream seed");
  sweep->add_option("--tol", sweep_opts.tol, "Deviation tolerance");
  add_output_options(sweep, sweep_out);

  // probe
  std::string probe_family = "bell";
  meb::ProbeOptions probe_opts;
  OutputOptions probe_out;
  auto* probe = app.add_subcommand(
      "probe",
      "Observational cross-subspace superposition probe (no assertions)");
  probe->add_option("--family", probe_family, "bell, ghz, cluster or brown")
      ->required();
  probe->add_option("--samples", probe_opts.samples, "Number of mixes")
      ->check(CLI::PositiveNumber);
  probe->add_option("--seed", probe_opts.seed, "Sample stream seed");
  add_output_options(probe, probe_out);

  // factorize
  std::string fact_family = "u1";
  std::string fact_coeffs;
  meb::FactorizeOptions fact_opts;
  OutputOptions fact_out;
  auto* fact = app.add_subcommand(
      "factorize",
      "Superpose one of U1..U4 and attempt a Kronecker factorization");
  fact->add_option("--family", fact_family, "u1, u2, u3 or u4")->required();
  fact->add_option("--coeffs", fact_coeffs,
                   "Four comma-separated real coefficients, e.g. 0.6,0.8,0,0")
      ->required();
  fact->add_option("--tol", fact_opts.tol,
                   "Relative singular-value tolerance for the rank test");
  add_output_options(fact, fact_out);

  // export-catalog
  std::string export_family = "bell";
  OutputOptions export_out;
  auto* exp = app.add_subcommand("export-catalog",
                                 "Write a catalog as structured text");
  exp->add_option("--family", export_family, "bell, ghz, cluster or brown")
      ->required();
  exp->add_option("--out", export_out.out, "Output path, or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    if (uni->parsed()) return emit(meb::cmd_verify_unitaries(uni_opts), uni_out);

    if (basis->parsed()) {
      basis_opts.family = family_or_throw(basis_family);
      return emit(meb::cmd_verify_basis(basis_opts), basis_out);
    }

    if (sweep->parsed()) {
      sweep_opts.family = family_or_throw(sweep_family);
      sweep_opts.subspace = subspace_or_throw(
          sweep_subspace,
          meb::family_info(sweep_opts.family).subspace_count);
      return emit(meb::cmd_sweep(sweep_opts), sweep_out);
    }

    if (probe->parsed()) {
      probe_opts.family = family_or_throw(probe_family);
      return emit(meb::cmd_probe(probe_opts), probe_out);
    }

    if (fact->parsed()) {
      const auto id = meb::parse_operator_family(fact_family);
      if (!id || (*id != meb::OperatorFamilyId::U1 &&
                  *id != meb::OperatorFamilyId::U2 &&
                  *id != meb::OperatorFamilyId::U3 &&
                  *id != meb::OperatorFamilyId::U4))
        throw CLI::ValidationError("--family", "expected one of u1..u4");
      fact_opts.family = *id;
      fact_opts.coeffs = parse_coeff_list(fact_coeffs);
      if (fact_opts.coeffs.size() != 4)
        throw CLI::ValidationError("--coeffs", "exactly 4 values required");
      return emit(meb::cmd_factorize(fact_opts), fact_out);
    }

    if (exp->parsed()) {
      const meb::Family family = family_or_throw(export_family);
      if (export_out.out == "-") {
        const meb::RunReport rep = meb::cmd_export_catalog(family, std::cout);
        return rep.pass ? 0 : 1;
      }
      std::ofstream file(export_out.out);
      if (!file) {
        std::cerr << "error: cannot open '" << export_out.out
                  << "' for writing\n";
        return 2;
      }
      const meb::RunReport rep = meb::cmd_export_catalog(family, file);
      file.flush();
      if (!file) {
        std::cerr << "error: write to '" << export_out.out << "' failed\n";
        return 2;
      }
      std::cerr << rep.checks.front().observed << " states written to "
                << export_out.out << "\n";
      return rep.pass ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
