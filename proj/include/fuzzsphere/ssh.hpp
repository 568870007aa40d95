#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "fuzzsphere/half_int.hpp"
#include "fuzzsphere/operator_matrix.hpp"
#include "fuzzsphere/sphere_point.hpp"
#include "fuzzsphere/wigner.hpp"

namespace fuzzsphere {

/// Spin j and spin weight sigma (both as twice-values) plus the free phase
/// angle psi multiplying every harmonic by e^{i sigma psi}.
class SshParams {
 public:
  SshParams(int two_j, int two_sigma, double psi = 0.0);

  int two_j() const { return two_j_; }
  int two_sigma() const { return two_sigma_; }
  double psi() const { return psi_; }
  HalfInt j() const { return HalfInt(two_j_); }
  HalfInt sigma() const { return HalfInt(two_sigma_); }
  int dim() const { return two_j_ + 1; }
  double phi_period() const { return phi_period_for(two_j_); }

  /// Projection mu for row/column index k = mu + j.
  HalfInt mu_at(int k) const { return HalfInt(2 * k - two_j_); }

 private:
  int two_j_;
  int two_sigma_;
  double psi_;
};

/// Spin-sigma spherical harmonic sigma_Y_{j mu}(theta, phi) through the
/// Jacobi-polynomial closed form; negative Jacobi parameters go through the
/// reflection identity, so theta = 0 and theta = pi need no special casing.
///
/// (-1)^mu is read as e^{i pi mu}. For half-integer j, phi is a coordinate on
/// the doubled sphere (period 4 pi); the value is not rescaled by 1/sqrt2 (the
/// doubled-sphere measure carries the 1/2 instead, see quad.hpp).
std::complex<double> ssh_eval(const SshParams& params, HalfInt mu, const SpherePoint& x);

/// All 2j+1 values at once, index mu + j.
Eigen::VectorXcd ssh_eval_all(const SshParams& params, const SpherePoint& x);

/// Spin angular momentum operators on the SSH basis: Lambda_3 = diag(mu),
/// Lambda_+ |mu> = sqrt((j-mu)(j+mu+1)) |mu+1>, Lambda_- = Lambda_+^dagger,
/// Lambda_1 = (L+ + L-)/2, Lambda_2 = (L+ - L-)/(2i).
struct LambdaMatrices {
  OperatorMatrix l1, l2, l3, plus, minus;

  /// axis 1, 2 or 3
  const OperatorMatrix& axis(int a) const;
};

LambdaMatrices lambda_matrices(const SshParams& params);
LambdaMatrices lambda_matrices(int two_j);

/// Matrix of the rotation operator on the SSH span: entry (nu, mu) = D^j_{nu mu}(xi).
OperatorMatrix rotation_operator(const SshParams& params, const Su2Element& xi);

/// |conj(sigma_Y_{j mu}(x)) - (-1)^{sigma - mu} (-sigma)_Y_{j,-mu}(x)| with psi = 0.
double ssh_conjugation_check(const SshParams& params, HalfInt mu, const SpherePoint& x);

}  // namespace fuzzsphere
