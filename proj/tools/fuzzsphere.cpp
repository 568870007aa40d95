// fuzzsphere command-line front end.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzsphere/csquant.hpp"
#include "fuzzsphere/errors.hpp"
#include "fuzzsphere/fuzzy.hpp"
#include "fuzzsphere/matrix_io.hpp"
#include "fuzzsphere/ssh.hpp"
#include "fuzzsphere/verify.hpp"
#include "fuzzsphere/wigner.hpp"

using namespace fuzzsphere;

namespace {

struct RunConfig {
  int two_j = 2;
  int two_sigma = 2;
  double psi = 0.0;
  double r = 1.0;
  std::optional<int> n_theta, n_phi;
  double tol = 1e-11;
  std::string output;
  std::string format = "json";

  SshParams ssh() const { return SshParams(two_j, two_sigma, psi); }

  SphereGrid grid(int ell_max) const {
    SphereGrid g = SphereGrid::for_spin(two_j, ell_max);
    return SphereGrid(n_theta.value_or(g.n_theta), n_phi.value_or(g.n_phi), g.phi_period);
  }
};

void add_spin_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--two-j", cfg.two_j, "twice the spin j")->required();
  cmd->add_option("--two-sigma", cfg.two_sigma, "twice the spin weight sigma")->required();
  cmd->add_option("--psi", cfg.psi, "phase angle psi");
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-o,--output", cfg.output, "matrix output path");
  cmd->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

std::string g(double v, int digits = 17) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

void print_matrix(const std::string& name, const OperatorMatrix& m) {
  for (Eigen::Index r = 0; r < m.dim(); ++r) {
    std::cout << name << "[" << r << "]=";
    for (Eigen::Index c = 0; c < m.dim(); ++c) {
      const auto z = m.entries()(r, c);
      std::cout << (c ? " " : "") << g(z.real(), 10) << (z.imag() < 0 ? "" : "+") << g(z.imag(), 10) << "i";
    }
    std::cout << "\n";
  }
}

void write_if_requested(const RunConfig& cfg, const OperatorMatrix& m) {
  if (cfg.output.empty()) return;
  export_matrix(m, cfg.two_sigma, parse_matrix_format(cfg.format), cfg.output);
  std::cout << "output=" << cfg.output << "\n";
}

// "l,m,re[,im];l,m,re[,im];..."
HarmonicExpansion parse_expansion(const std::string& text) {
  HarmonicExpansion f;
  std::stringstream terms(text);
  std::string term;
  while (std::getline(terms, term, ';')) {
    if (term.empty()) continue;
    std::stringstream parts(term);
    std::string tok;
    std::vector<double> v;
    while (std::getline(parts, tok, ',')) v.push_back(std::stod(tok));
    if (v.size() < 3 || v.size() > 4) throw DomainError("expansion term '" + term + "' must be l,m,re[,im]");
    f.add(static_cast<int>(v[0]), static_cast<int>(v[1]), {v[2], v.size() == 4 ? v[3] : 0.0});
  }
  return f;
}

int cmd_wigner3j(const std::vector<int>& two) {
  const ExactRadical v = three_j(ThreeJKey::from_twice(two[0], two[1], two[2], two[3], two[4], two[5]));
  if (v.is_zero()) {
    std::cout << "0\n";
  } else {
    std::printf("%s ≈ %.15g\n", v.str().c_str(), v.to_double());
  }
  return 0;
}

int cmd_ssh_eval(const RunConfig& cfg, int two_mu, double theta, double phi) {
  const auto y = ssh_eval(cfg.ssh(), HalfInt(two_mu), {theta, phi});
  std::cout << "re=" << g(y.real()) << "\nim=" << g(y.imag()) << "\n";
  return 0;
}

int cmd_lambda(const RunConfig& cfg) {
  const LambdaMatrices lm = lambda_matrices(cfg.two_j);
  print_matrix("lambda1", lm.l1);
  print_matrix("lambda2", lm.l2);
  print_matrix("lambda3", lm.l3);
  print_matrix("lambda_plus", lm.plus);
  print_matrix("lambda_minus", lm.minus);
  return 0;
}

int cmd_quantize(const RunConfig& cfg, const std::string& builtin, const std::vector<int>& ylm,
                 const std::string& expansion) {
  const SshParams p = cfg.ssh();
  const int sources = !builtin.empty() + !ylm.empty() + !expansion.empty();
  if (sources != 1) throw DomainError("quantize: give exactly one of a builtin, --ylm or --expansion");

  OperatorMatrix result(p.two_j());
  if (!builtin.empty()) {
    const int axis = builtin == "x1" ? 1 : builtin == "x2" ? 2 : 3;
    result = quantize_quadrature(
        p, [axis](const SpherePoint& x) { return std::complex<double>(x.cartesian()[axis - 1]); }, cfg.grid(1));
    const double j = 0.5 * p.two_j();
    const double k = p.two_j() == 0 ? 0.0 : 0.5 * p.two_sigma() / (j * (j + 1.0));
    const double dev = max_abs_diff(result, k * lambda_matrices(p).axis(axis));
    std::cout << "builtin=" << builtin << "\nk=" << g(k) << "\ndeviation_from_k_lambda=" << g(dev, 3)
              << "\ndeviation_ok=" << (dev < cfg.tol ? "true" : "false") << "\n";
    if (p.two_sigma() == 0) {
      std::cerr << "degenerate: quantization vanishes\n";
      std::cout << "degenerate=true\nquadrature_max_abs=" << g(max_abs(result), 3) << "\n";
      result = OperatorMatrix::zero(p.two_j());
    }
  } else {
    HarmonicExpansion f;
    if (!ylm.empty())
      f.add(ylm[0], ylm[1], 1.0);
    else
      f = parse_expansion(expansion);
    QuantizedExpansion q = quantize_expansion(p, f);
    result = q.matrix;
    result.symmetrize_if_hermitian(1e-12);
    for (const auto& t : q.truncated)
      std::cout << "truncated=ell:" << t.ell << ",m:" << t.m << ",coeff:" << g(t.coefficient.real()) << ","
                << g(t.coefficient.imag()) << "\n";
    std::cout << "truncated_terms=" << q.truncated.size() << "\n";
  }
  std::cout << "hermiticity_residual=" << g(result.hermiticity_residual(), 3) << "\n";
  write_if_requested(cfg, result);
  if (cfg.output.empty()) print_matrix("matrix", result);
  return 0;
}

int cmd_fuzzy_compare(const RunConfig& cfg) {
  const FuzzyParams fp(cfg.two_j, cfg.two_sigma, cfg.r);
  const SshParams p = cfg.ssh();
  std::cout << "kappa=" << g(fp.kappa()) << "\n";
  int status = 0;
  for (int ell = 0; ell <= cfg.two_j; ++ell) {
    const double c = c_of_ell_closed(fp, ell);
    const EmpiricalRatio e = c_of_ell_empirical(fp, ell);
    double dev = 0.0;
    for (int m = -ell; m <= ell; ++m)
      dev = std::max(dev, max_abs_diff(quantize_ylm_closed(p, ell, m), c * hat_ylm(fp, ell, m).matrix));
    std::cout << "ell=" << ell << " c_closed=" << g(c) << " c_printed=" << g(c_of_ell_printed(fp, ell))
              << " ratio_re=" << g(e.mean.real()) << " ratio_im=" << g(e.mean.imag()) << " spread=" << g(e.spread, 3)
              << " max_deviation=" << g(dev, 3) << "\n";
    if (!(e.spread < 1e-9 && dev < 1e-9)) status = 1;
  }
  return status;
}

int cmd_classical_limit(int two_sigma_offset, int j_max, double r) {
  if (two_sigma_offset % 2 != 0) throw DomainError("classical-limit: --two-sigma-offset must be even for integer j");
  // start at the first j with sigma = j - offset/2 >= 1
  std::vector<HalfInt> js;
  for (int j = two_sigma_offset / 2 + 1; j <= j_max; ++j) js.push_back(HalfInt::from_int(j));
  for (const auto& row : classical_limit_report(HalfInt(two_sigma_offset), js, r)) {
    std::cout << "j=" << row.j.str() << " sigma=" << row.sigma.str() << " kappa=" << g(row.kappa)
              << " commutator_norm=" << g(row.commutator_norm) << " expected=" << g(row.expected_norm)
              << " lower_symbol_deviation=" << g(row.lower_symbol_deviation, 3)
              << " ratio_to_previous=" << g(row.ratio_to_previous) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, int max_two_j) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_suite(suite, max_two_j);
  int failed = 0;
  for (const auto& c : results) {
    std::cout << format_check(c) << "\n";
    failed += !c.pass();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << suite << ": " << results.size() - failed << "/" << results.size() << " checks passed in " << g(secs, 3)
            << " s\n";
  return failed == 0 ? 0 : 1;
}

int cmd_export(const RunConfig& cfg, const std::string& what) {
  if (cfg.output.empty()) throw DomainError("export: --output is required");
  const LambdaMatrices lm = lambda_matrices(cfg.two_j);
  OperatorMatrix m = OperatorMatrix::identity(cfg.two_j);
  if (what == "lambda1") m = lm.l1;
  else if (what == "lambda2") m = lm.l2;
  else if (what == "lambda3") m = lm.l3;
  else if (what == "lambda_plus") m = lm.plus;
  else if (what == "lambda_minus") m = lm.minus;
  write_if_requested(cfg, m);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherent-state quantization and fuzzy-sphere toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::vector<int> two;
  auto* w3j = app.add_subcommand("wigner3j", "exact Wigner 3j-symbol");
  w3j->add_option("--two", two, "2j1 2j2 2j3 2m1 2m2 2m3")->required()->expected(6);

  int two_mu = 0;
  double theta = 0.0, phi = 0.0;
  auto* ssh = app.add_subcommand("ssh-eval", "evaluate a spin spherical harmonic");
  add_spin_options(ssh, cfg);
  ssh->add_option("--two-mu", two_mu, "twice mu")->required();
  ssh->add_option("--theta", theta)->required();
  ssh->add_option("--phi", phi)->required();

  auto* lam = app.add_subcommand("lambda", "spin angular momentum matrices");
  lam->add_option("--two-j", cfg.two_j)->required();
  cfg.two_sigma = 0;

  std::string builtin, expansion;
  std::vector<int> ylm;
  auto* quant = app.add_subcommand("quantize", "coherent-state quantization of an observable");
  add_spin_options(quant, cfg);
  add_output_options(quant, cfg);
  quant->add_option("builtin", builtin, "x1, x2, x3 or cos_theta")
      ->check(CLI::IsMember({"x1", "x2", "x3", "cos_theta"}));
  quant->add_option("--ylm", ylm, "ell m")->expected(2);
  quant->add_option("--expansion", expansion, "l,m,re[,im];...");
  quant->add_option("--n-theta", cfg.n_theta);
  quant->add_option("--n-phi", cfg.n_phi);
  quant->add_option("--tol", cfg.tol, "tolerance for the K Lambda deviation");

  auto* fz = app.add_subcommand("fuzzy-compare", "quantized vs fuzzy harmonics, C(ell) table");
  add_spin_options(fz, cfg);
  fz->add_option("--r", cfg.r, "sphere radius");

  int two_offset = 0, j_max = 8;
  auto* cl = app.add_subcommand("classical-limit", "commutator decay as j grows");
  cl->add_option("--two-sigma-offset", two_offset, "twice (j - sigma)");
  cl->add_option("--j-max", j_max, "largest integer j");
  cl->add_option("--r", cfg.r, "sphere radius");

  std::string suite = "default";
  int max_two_j = 4;
  auto* ver = app.add_subcommand("verify", "run invariant checks");
  ver->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  ver->add_option("--max-two-j", max_two_j);

  std::string what = "identity";
  auto* exp = app.add_subcommand("export", "write a standard matrix to a file");
  add_spin_options(exp, cfg);
  add_output_options(exp, cfg);
  exp->add_option("what", what)->check(
      CLI::IsMember({"identity", "lambda1", "lambda2", "lambda3", "lambda_plus", "lambda_minus"}));

  CLI11_PARSE(app, argc, argv);
  if (builtin == "cos_theta") builtin = "x3";

  try {
    if (*w3j) return cmd_wigner3j(two);
    if (*ssh) return cmd_ssh_eval(cfg, two_mu, theta, phi);
    if (*lam) return cmd_lambda(cfg);
    if (*quant) return cmd_quantize(cfg, builtin, ylm, expansion);
    if (*fz) return cmd_fuzzy_compare(cfg);
    if (*cl) return cmd_classical_limit(two_offset, j_max, cfg.r);
    if (*ver) return cmd_verify(suite, max_two_j);
    if (*exp) return cmd_export(cfg, what);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
