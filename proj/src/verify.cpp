#include "fuzzsphere/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "fuzzsphere/csquant.hpp"
#include "fuzzsphere/errors.hpp"
#include "fuzzsphere/fuzzy.hpp"
#include "fuzzsphere/ssh.hpp"
#include "fuzzsphere/wigner.hpp"

namespace fuzzsphere {

namespace {

using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

struct Rng {
  std::mt19937_64 gen{20240611};
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }
  Su2Element su2() {
    std::normal_distribution<double> n;
    return Su2Element::from_components(Eigen::Vector4d(n(gen), n(gen), n(gen), n(gen)));
  }
  SpherePoint point(double period) { return {std::acos(uniform(-1.0, 1.0)), uniform(0.0, period)}; }
};

// Spin pairs (2j, 2sigma) with 2j <= max.
std::vector<std::pair<int, int>> spins(int max_two_j, bool skip_sigma_zero = false) {
  std::vector<std::pair<int, int>> out;
  for (int tj = 0; tj <= max_two_j; ++tj)
    for (int ts = -tj; ts <= tj; ts += 2)
      if (!(skip_sigma_zero && ts == 0)) out.emplace_back(tj, ts);
  return out;
}

C one(const SpherePoint&) { return 1.0; }

class Suite {
 public:
  void add(std::string name, double residual, double tol) { out_.push_back({std::move(name), residual, tol}); }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::vector<CheckResult> out_;
};

void three_j_checks(Suite& s) {
  // Exact orthogonality sum_{m1,m2} (2j3+1) 3j^2 = 1 and exact symmetries, all j <= 2.
  long bad_orth = 0, bad_sym = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = std::abs(a - b); c <= std::min(a + b, 4); c += 2)
        for (int m3 = -c; m3 <= c; m3 += 2) {
          BigRational sum = 0;
          for (int m1 = -a; m1 <= a; m1 += 2)
            for (int m2 = -b; m2 <= b; m2 += 2) {
              const auto key = ThreeJKey::from_twice(a, b, c, m1, m2, m3);
              const ExactRadical v = three_j(key);
              sum += v.square();
              if (m1 + m2 + m3 != 0) continue;
              const bool odd = ((a + b + c) / 2) % 2 != 0;
              const ExactRadical cyc = three_j(ThreeJKey::from_twice(b, c, a, m2, m3, m1));
              const ExactRadical swap = three_j(ThreeJKey::from_twice(b, a, c, m2, m1, m3));
              const ExactRadical flip = three_j(ThreeJKey::from_twice(a, b, c, -m1, -m2, -m3));
              const ExactRadical signed_v = odd ? -v : v;
              if (!(cyc == v) || !(swap == signed_v) || !(flip == signed_v)) ++bad_sym;
            }
          if (sum * (c + 1) != 1) ++bad_orth;
        }
  s.add("three_j_orthogonality_exact", static_cast<double>(bad_orth), 0.5);
  s.add("three_j_symmetry_exact", static_cast<double>(bad_sym), 0.5);
}

void d_matrix_checks(Suite& s, Rng& rng, int max_two_j) {
  double forms = 0, unit = 0, hom = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const Su2Element a = rng.su2(), b = rng.su2();
    for (int tj = 0; tj <= max_two_j; ++tj) {
      const HalfInt j(tj);
      const Eigen::MatrixXcd da = wigner_D_matrix(j, a);
      for (int p = -tj; p <= tj; p += 2)
        for (int q = -tj; q <= tj; q += 2)
          forms = std::max(forms, std::abs(wigner_D(j, HalfInt(p), HalfInt(q), a) -
                                           wigner_D_jacobi(j, HalfInt(p), HalfInt(q), a)));
      unit = std::max(unit, (da * da.adjoint() - Eigen::MatrixXcd::Identity(tj + 1, tj + 1)).cwiseAbs().maxCoeff());
      hom = std::max(hom, (da * wigner_D_matrix(j, b) - wigner_D_matrix(j, a * b)).cwiseAbs().maxCoeff());
    }
  }
  s.add("d_matrix_two_forms", forms, 1e-12);
  s.add("d_matrix_unitarity", unit, 1e-12);
  s.add("d_matrix_homomorphism", hom, 1e-10);
  double haar = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) haar = std::max(haar, orthogonality_defect(HalfInt(a), HalfInt(b), 6));
  s.add("d_matrix_haar_orthogonality", haar, 1e-10);
}

void ssh_checks(Suite& s, Rng& rng, int max_two_j) {
  double sum_rule = 0, orth = 0, via_d = 0, conj = 0;
  for (const auto& [tj, ts] : spins(max_two_j)) {
    const SshParams p(tj, ts);
    const double n = cs_normalization(tj);
    for (int k = 0; k < 20; ++k) {
      const SpherePoint x = rng.point(p.phi_period());
      const Eigen::VectorXcd y = ssh_eval_all(p, x);
      sum_rule = std::max(sum_rule, std::abs(y.squaredNorm() - n));
      // sqrt((2j+1)/4pi) conj(D^j_{mu sigma}(xi)), omega = theta/2, psi1 = phi/2 + pi/2, psi2 = phi/2
      const Su2Element xi{0.5 * x.theta, 0.5 * x.phi + 0.5 * kPi, 0.5 * x.phi};
      for (int q = 0; q <= tj; ++q) {
        const HalfInt mu = p.mu_at(q);
        via_d = std::max(via_d, std::abs(y[q] - std::sqrt(n) * std::conj(wigner_D(p.j(), mu, p.sigma(), xi))));
        conj = std::max(conj, ssh_conjugation_check(p, mu, x));
      }
    }
    const Eigen::MatrixXcd gram = quantize_quadrature(p, one, 0).entries();
    orth = std::max(orth, (gram - Eigen::MatrixXcd::Identity(tj + 1, tj + 1)).cwiseAbs().maxCoeff());
  }
  s.add("ssh_sum_rule", sum_rule, 1e-11);
  s.add("ssh_orthonormality", orth, 1e-11);
  s.add("ssh_matches_d_matrix", via_d, 1e-12);
  s.add("ssh_conjugation", conj, 1e-12);
}

void quantization_checks(Suite& s, Rng& rng, int max_two_j) {
  double ident = 0, cart = 0, degenerate = 0, closed = 0, selection = 0, cov = 0, l3 = 0, l2 = 0, cs_norm = 0,
         cs_cov = 0;
  for (const auto& [tj, ts] : spins(max_two_j)) {
    const SshParams p(tj, ts);
    ident = std::max(ident, max_abs_diff(quantize_quadrature(p, one, 0), OperatorMatrix::identity(tj)));
    const LambdaMatrices lm = lambda_matrices(p);
    for (int a = 1; a <= 3; ++a) {
      const OperatorMatrix q =
          quantize_quadrature(p, [a](const SpherePoint& x) { return C(x.cartesian()[a - 1]); }, 1);
      if (ts == 0) {
        degenerate = std::max(degenerate, max_abs(q));
      } else if (tj > 0) {
        const double k = 0.5 * ts / (0.5 * tj * (0.5 * tj + 1.0));
        cart = std::max(cart, max_abs_diff(q, k * lm.axis(a)));
      }
    }
    const Su2Element xi = rng.su2();
    const OperatorMatrix u = rotation_operator(p, xi);
    for (int ell = 0; ell <= tj; ++ell) {
      std::vector<OperatorMatrix> ys;
      for (int m = -ell; m <= ell; ++m) {
        const OperatorMatrix closed_m = quantize_ylm_closed(p, ell, m);
        const SshParams harmonic(2 * ell, 0);
        const OperatorMatrix quad = quantize_quadrature(
            p, [&](const SpherePoint& x) { return ssh_eval(harmonic, HalfInt(2 * m), x); }, ell);
        closed = std::max(closed, max_abs_diff(closed_m, quad));
        for (int r = 0; r <= tj; ++r)
          for (int c = 0; c <= tj; ++c)
            if (r - c != m) selection = std::max(selection, std::abs(quad.entries()(r, c)));
        l3 = std::max(l3, max_abs_diff(superop_action(p, 3, closed_m), static_cast<double>(m) * closed_m));
        l2 = std::max(l2, max_abs_diff(superop_casimir(p, closed_m), static_cast<double>(ell * (ell + 1)) * closed_m));
        ys.push_back(closed_m);
      }
      const Eigen::MatrixXcd dk = wigner_D_matrix(HalfInt(2 * ell), xi);
      for (int n = 0; n <= 2 * ell; ++n) {
        Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(tj + 1, tj + 1);
        for (int np = 0; np <= 2 * ell; ++np) rhs += ys[np].entries() * dk(np, n);
        const Eigen::MatrixXcd lhs = u.entries() * ys[n].entries() * u.entries().adjoint();
        cov = std::max(cov, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
    const Eigen::Matrix3d rot = rotation_matrix(xi);
    for (int k = 0; k < 5; ++k) {
      const SpherePoint x = rng.point(2.0 * kPi);
      const CoherentState a = coherent_state(p, x);
      const CoherentState b = coherent_state(p, SpherePoint::from_cartesian(rot * x.cartesian()));
      cs_norm = std::max(cs_norm, std::abs(a.norm() - 1.0));
      cs_cov = std::max(cs_cov, 1.0 - std::abs(b.amplitudes.dot(u.entries() * a.amplitudes)));
    }
  }
  s.add("resolution_of_identity", ident, 1e-12);
  s.add("cartesian_identification", cart, 1e-11);
  s.add("sigma_zero_degeneracy", degenerate, 1e-12);
  s.add("closed_form_vs_quadrature", closed, 1e-10);
  s.add("wigner_eckart_selection_rule", selection, 1e-12);
  s.add("operator_rotation_covariance", cov, 1e-9);
  s.add("superop_l3_eigen", l3, 1e-10);
  s.add("superop_casimir_eigen", l2, 1e-9);
  s.add("coherent_state_norm", cs_norm, 1e-12);
  s.add("coherent_state_covariance", cs_cov, 1e-10);
}

void fuzzy_checks(Suite& s, int max_two_j) {
  double corr = 0, spread = 0, closed_c = 0, comm = 0, casimir = 0;
  for (const auto& [tj, ts] : spins(std::max(max_two_j, 1), true)) {
    if (tj < 1) continue;
    const FuzzyParams fp(tj, ts);
    const SshParams p(tj, ts);
    for (int ell = 0; ell <= tj; ++ell) {
      const double c = c_of_ell_closed(fp, ell);
      const EmpiricalRatio e = c_of_ell_empirical(fp, ell);
      spread = std::max(spread, e.spread);
      closed_c = std::max(closed_c, std::abs(e.mean - c));
      for (int m = -ell; m <= ell; ++m)
        corr = std::max(corr, max_abs_diff(quantize_ylm_closed(p, ell, m), c * hat_ylm(fp, ell, m).matrix));
    }
    const LambdaMatrices lm = lambda_matrices(tj);
    const double k = fp.kappa();
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        OperatorMatrix expected(tj);
        for (int c = 1; c <= 3; ++c) {
          const int eps = (a == b || b == c || a == c) ? 0 : (((b - a + 3) % 3 == 1) ? 1 : -1);
          if (eps) expected = expected + C(0.0, eps * k * k) * lm.axis(c);
        }
        comm = std::max(comm, max_abs_diff(commutator(k * lm.axis(a), k * lm.axis(b)), expected));
      }
    const Polynomial3 r2{{2, 0, 0, 1.0}, {0, 2, 0, 1.0}, {0, 0, 2, 1.0}};
    if (tj >= 2) casimir = std::max(casimir, max_abs_diff(hat_map(fp, r2).matrix, OperatorMatrix::identity(tj)));
  }
  s.add("fuzzy_correspondence", corr, 1e-9);
  s.add("c_of_ell_m_spread", spread, 1e-9);
  s.add("c_of_ell_closed_vs_ratio", closed_c, 1e-8);
  s.add("fuzzy_commutation_relations", comm, 1e-13);
  s.add("fuzzy_radius_casimir", casimir, 1e-12);

  std::vector<HalfInt> js;
  for (int j = 1; j <= 8; ++j) js.push_back(HalfInt::from_int(j));
  double limit = 0, mono = 0;
  const auto rows = classical_limit_report(HalfInt(0), js, 1.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    limit = std::max(limit, std::abs(rows[i].commutator_norm - rows[i].expected_norm));
    if (i > 0 && !(rows[i].commutator_norm < rows[i - 1].commutator_norm)) mono = 1.0;
  }
  s.add("classical_limit_commutator_norm", limit, 1e-12);
  s.add("classical_limit_monotone", mono, 0.5);
}

void appendix_b_checks(Suite& s) {
  for (int tj : {2, 3, 4}) {
    for (int axis = 1; axis <= 3; ++axis) {
      double worst = 0;
      for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b)
          for (int c = 0; a + b + c <= 5; ++c)
            worst = std::max(worst, symmetrization_commutator_check(HalfInt(tj), {a, b, c}, axis));
      s.add("appendix_b_j" + HalfInt(tj).str() + "_axis" + std::to_string(axis), worst, 1e-12);
    }
  }
}

void fock_checks(Suite& s) {
  const FockDemoResult f = fock_demo(8, PlaneGrid(12, 24));
  s.add("fock_lowering_exact", f.report.lowering_exact ? 0.0 : 1.0, 0.5);
  s.add("fock_quadrature_a", f.report.quadrature_deviation, 1e-8);
  s.add("fock_commutator_block", f.report.commutator_block_deviation, 1e-12);
  s.add("fock_commutator_corner", std::abs(f.report.commutator_corner - C(0.0, -8.0)), 1e-12);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"default", "fock", "appendix-b", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, int max_two_j) {
  Suite s;
  Rng rng;
  const bool all = suite == "all";
  if (suite == "default" || all) {
    three_j_checks(s);
    d_matrix_checks(s, rng, max_two_j);
    ssh_checks(s, rng, max_two_j);
    quantization_checks(s, rng, max_two_j);
    fuzzy_checks(s, max_two_j);
  }
  if (suite == "appendix-b" || all) appendix_b_checks(s);
  if (suite == "fock" || all) fock_checks(s);
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw DomainError("unknown verify suite '" + suite + "'");
  return s.take();
}

std::string format_check(const CheckResult& c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "check=%s residual=%.3e tolerance=%.1e status=%s", c.name.c_str(), c.residual,
                c.tolerance, c.pass() ? "pass" : "fail");
  return buf;
}

}  // namespace fuzzsphere
