#include "fuzzsphere/ssh.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fuzzsphere/errors.hpp"
#include "fuzzsphere/specfun.hpp"

namespace fuzzsphere {

namespace {

using C = std::complex<double>;

// i^k for integer k
C i_power(int k) {
  static constexpr std::array<C, 4> table{C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
  return table[static_cast<std::size_t>(((k % 4) + 4) % 4)];
}

}  // namespace

SshParams::SshParams(int two_j, int two_sigma, double psi) : two_j_(two_j), two_sigma_(two_sigma), psi_(psi) {
  if (two_j < 0) throw DomainError("SshParams: negative j");
  if (std::abs(two_sigma) > two_j) throw DomainError("SshParams: |sigma| > j");
  if ((two_j - two_sigma) % 2 != 0) throw DomainError("SshParams: sigma and j must both be integer or half-integer");
}

std::complex<double> ssh_eval(const SshParams& params, HalfInt mu, const SpherePoint& x) {
  const int tj = params.two_j(), ts = params.two_sigma(), tm = mu.twice;
  if (std::abs(tm) > tj || (tj - tm) % 2 != 0)
    throw DomainError("ssh_eval: mu=" + mu.str() + " not admissible for j=" + params.j().str());
  const int n = (tj - tm) / 2;      // j - mu
  const int alpha = (tm - ts) / 2;  // mu - sigma
  const int beta = (tm + ts) / 2;   // mu + sigma
  const double norm = std::sqrt((tj + 1) / (4.0 * std::numbers::pi) * factorial_real<double>((tj - tm) / 2) *
                                factorial_real<double>((tj + tm) / 2) /
                                (factorial_real<double>((tj - ts) / 2) * factorial_real<double>((tj + ts) / 2)));
  const double mu_v = mu.value();
  const double radial = std::pow(2.0, -mu_v) * jacobi_weighted(JacobiParams{n, alpha, beta}, x.theta);
  // (-1)^mu = e^{i pi mu} = i^{2 mu}
  const C phase = i_power(tm) * std::polar(1.0, 0.5 * ts * params.psi()) * std::polar(1.0, mu_v * x.phi);
  return phase * (norm * radial);
}

Eigen::VectorXcd ssh_eval_all(const SshParams& params, const SpherePoint& x) {
  Eigen::VectorXcd out(params.dim());
  for (int k = 0; k < params.dim(); ++k) out[k] = ssh_eval(params, params.mu_at(k), x);
  return out;
}

const OperatorMatrix& LambdaMatrices::axis(int a) const {
  switch (a) {
    case 1:
      return l1;
    case 2:
      return l2;
    case 3:
      return l3;
    default:
      throw DomainError("LambdaMatrices: axis must be 1, 2 or 3");
  }
}

LambdaMatrices lambda_matrices(int two_j) {
  if (two_j < 0) throw DomainError("lambda_matrices: negative j");
  const int d = two_j + 1;
  const double j = 0.5 * two_j;
  OperatorMatrix::Matrix l3 = OperatorMatrix::Matrix::Zero(d, d);
  OperatorMatrix::Matrix lp = OperatorMatrix::Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double mu = k - j;
    l3(k, k) = mu;
    if (k + 1 < d) lp(k + 1, k) = std::sqrt((j - mu) * (j + mu + 1.0));
  }
  const OperatorMatrix::Matrix lm = lp.adjoint();
  LambdaMatrices out{OperatorMatrix(two_j, (lp + lm) / 2.0), OperatorMatrix(two_j, (lp - lm) / C(0, 2)),
                     OperatorMatrix(two_j, l3), OperatorMatrix(two_j, lp), OperatorMatrix(two_j, lm)};
  out.l1.symmetrize_if_hermitian(1e-15);
  out.l2.symmetrize_if_hermitian(1e-15);
  out.l3.symmetrize_if_hermitian(1e-15);
  return out;
}

LambdaMatrices lambda_matrices(const SshParams& params) { return lambda_matrices(params.two_j()); }

OperatorMatrix rotation_operator(const SshParams& params, const Su2Element& xi) {
  return {params.two_j(), wigner_D_matrix(params.j(), xi)};
}

double ssh_conjugation_check(const SshParams& params, HalfInt mu, const SpherePoint& x) {
  const SshParams p(params.two_j(), params.two_sigma(), 0.0);
  const SshParams q(params.two_j(), -params.two_sigma(), 0.0);
  const int sign_exp = (params.two_sigma() - mu.twice) / 2;
  const double sign = (sign_exp % 2 == 0) ? 1.0 : -1.0;
  return std::abs(std::conj(ssh_eval(p, mu, x)) - sign * ssh_eval(q, -mu, x));
}

}  // namespace fuzzsphere
