#include "fuzzsphere/csquant.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

#include "fuzzsphere/errors.hpp"
#include "fuzzsphere/specfun.hpp"
#include "fuzzsphere/wigner.hpp"

namespace fuzzsphere {

namespace {

using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void require_period(const SphereGrid& grid, int two_j_needed, const char* who) {
  if (grid.phi_period < phi_period_for(two_j_needed) - 1e-12)
    throw DomainError(std::string(who) + ": half-integer spin needs a grid on the doubled sphere (phi period 4 pi)");
}

}  // namespace

double cs_normalization(int two_j) { return (two_j + 1) / (4.0 * kPi); }

CoherentState coherent_state(const SshParams& params, const SpherePoint& x) {
  const Eigen::VectorXcd y = ssh_eval_all(params, x);
  const double n = cs_normalization(params.two_j());
  // Sum rule recheck of the hardcoded N(x).
  assert(std::abs(y.squaredNorm() - n) < 1e-10 * n);
  return {params.two_j(), params.two_sigma(), y.conjugate() / std::sqrt(n)};
}

std::complex<double> reproducing_kernel(const SshParams& params, const SpherePoint& x, const SpherePoint& xp) {
  return ssh_eval_all(params, xp).dot(ssh_eval_all(params, x));
}

OperatorMatrix quantize_quadrature(const SshParams& params, const SphereFunction& f, const SphereGrid& grid) {
  require_period(grid, params.two_j(), "quantize_quadrature");
  const int d = params.dim();
  CompensatedMatrixSum acc(d, d);
  bool real = true;
  std::size_t index = 0;
  for (const auto& node : grid.nodes()) {
    const C v = f(node.point);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NonFiniteSample("quantize_quadrature: non-finite sample at " + detail::node_label(node.point, index));
    real = real && v.imag() == 0.0;
    const Eigen::VectorXcd y = ssh_eval_all(params, node.point);
    acc.add((4.0 * kPi * node.weight) * v * (y.conjugate() * y.transpose()));
    ++index;
  }
  OperatorMatrix out(params.two_j(), acc.value());
  if (real) out.symmetrize_if_hermitian(1e-12);
  return out;
}

OperatorMatrix quantize_quadrature(const SshParams& params, const SphereFunction& f, int ell_max) {
  return quantize_quadrature(params, f, SphereGrid::for_spin(params.two_j(), ell_max));
}

OperatorMatrix quantize_ylm_closed(const SshParams& params, int ell, int m) {
  if (ell < 0 || std::abs(m) > ell) throw DomainError("quantize_ylm_closed: need |m| <= ell");
  const int tj = params.two_j(), ts = params.two_sigma();
  OperatorMatrix out(tj);
  if (ell > tj) return out;
  const ExactRadical sigma_part = three_j(ThreeJKey::from_twice(tj, tj, 2 * ell, -ts, ts, 0));
  if (sigma_part.is_zero()) return out;
  const double scale = (tj + 1) * std::sqrt((2 * ell + 1) / (4.0 * kPi));
  auto& e = out.mutable_entries();
  for (int r = 0; r < params.dim(); ++r) {
    const int tmu = 2 * r - tj;
    const int tnu = tmu - 2 * m;  // selection rule mu = nu + m
    if (std::abs(tnu) > tj) continue;
    const ExactRadical prod = three_j(ThreeJKey::from_twice(tj, tj, 2 * ell, -tmu, tnu, 2 * m)) * sigma_part;
    const int sign_exp = (ts - tmu) / 2;
    e(r, (tnu + tj) / 2) = ((sign_exp % 2 == 0) ? 1.0 : -1.0) * scale * prod.to_double();
  }
  return out;
}

HarmonicExpansion::HarmonicExpansion(std::initializer_list<std::pair<const Key, std::complex<double>>> terms) {
  for (const auto& [key, c] : terms) add(key.first, key.second, c);
}

void HarmonicExpansion::add(int ell, int m, std::complex<double> c) {
  if (ell < 0 || std::abs(m) > ell)
    throw DomainError("HarmonicExpansion: (" + std::to_string(ell) + ", " + std::to_string(m) + ") has |m| > ell");
  terms_[{ell, m}] += c;
}

std::complex<double> HarmonicExpansion::operator()(const SpherePoint& x) const {
  C acc = 0.0;
  for (const auto& [key, c] : terms_) acc += c * ssh_eval(SshParams(2 * key.first, 0), HalfInt(2 * key.second), x);
  return acc;
}

QuantizedExpansion quantize_expansion(const SshParams& params, const HarmonicExpansion& f) {
  QuantizedExpansion out{OperatorMatrix(params.two_j()), {}};
  for (const auto& [key, c] : f.terms()) {
    const auto [ell, m] = key;
    if (ell > params.two_j()) {
      out.truncated.push_back({ell, m, c});
      continue;
    }
    out.matrix.mutable_entries() += c * quantize_ylm_closed(params, ell, m).entries();
  }
  return out;
}

OperatorMatrix quantize_ssh_general(const SshParams& params, HalfInt nu, HalfInt k, HalfInt n, const SphereGrid& grid) {
  if (k.twice < 0 || std::abs(n.twice) > k.twice || !same_parity(n, k))
    throw DomainError("quantize_ssh_general: n=" + n.str() + " not admissible for k=" + k.str());
  const SshParams harmonic(k.twice, nu.twice, 0.0);  // checks |nu| <= k and parity
  require_period(grid, params.two_j() % 2 != 0 ? params.two_j() : k.twice, "quantize_ssh_general");
  return quantize_quadrature(params, [&](const SpherePoint& x) { return ssh_eval(harmonic, n, x); }, grid);
}

OperatorMatrix quantize_ssh_general(const SshParams& params, HalfInt nu, HalfInt k, HalfInt n) {
  const int ell = (k.twice + 1) / 2;
  SphereGrid grid = SphereGrid::for_spin(params.two_j(), ell);
  if (params.two_j() % 2 != 0 || k.twice % 2 != 0) grid.phi_period = 4.0 * kPi;
  return quantize_ssh_general(params, nu, k, n, grid);
}

std::complex<double> lower_symbol(const SshParams& params, const OperatorMatrix& op, const SpherePoint& x) {
  if (op.two_j() != params.two_j())
    throw DimensionMismatch("lower_symbol: operator has 2j=" + std::to_string(op.two_j()) + ", params 2j=" +
                            std::to_string(params.two_j()));
  const Eigen::VectorXcd v = coherent_state(params, x).amplitudes;
  return v.dot(op.entries() * v);
}

OperatorMatrix superop_action(const SshParams& params, int axis, const OperatorMatrix& op) {
  return commutator(lambda_matrices(params).axis(axis), op);
}

OperatorMatrix superop_casimir(const SshParams& params, const OperatorMatrix& op) {
  const LambdaMatrices lm = lambda_matrices(params);
  OperatorMatrix out(op.two_j());
  for (int a = 1; a <= 3; ++a) out = out + commutator(lm.axis(a), commutator(lm.axis(a), op));
  return out;
}

FockDemoResult fock_demo(int n_max, const PlaneGrid& grid) {
  if (n_max < 2) throw DomainError("fock_demo: n_max must be >= 2");
  const int d = n_max + 1;
  FockDemoSpace s;
  s.n_max = n_max;
  s.a = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 1; n < d; ++n) s.a(n - 1, n) = std::sqrt(static_cast<double>(n));
  s.adag = s.a.adjoint();
  s.q = (s.a + s.adag) / std::sqrt(2.0);
  s.p = (s.a - s.adag) / C(0.0, std::sqrt(2.0));
  s.number = s.adag * s.a;

  FockDemoReport rep{};
  rep.lowering_exact = true;
  for (int n = 1; n < d; ++n) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(d);
    e[n] = 1.0;
    const Eigen::VectorXcd image = s.a * e;
    for (int k = 0; k < d; ++k) {
      const C expected = (k == n - 1) ? C(std::sqrt(static_cast<double>(n))) : C(0.0);
      rep.lowering_exact = rep.lowering_exact && image[k] == expected;
    }
  }
  if ((s.a.col(0).array() != C(0.0)).any()) rep.lowering_exact = false;

  // Gaussian measure weights already include e^{-|z|^2}; |z><z| contributes
  // z^m conj(z)^n / sqrt(m! n!) at (m, n).
  std::vector<double> inv_sqrt_fact(d);
  double f = 1.0;
  for (int n = 0; n < d; ++n) {
    if (n > 0) f *= n;
    inv_sqrt_fact[n] = 1.0 / std::sqrt(f);
  }
  rep.a_quadrature = Eigen::MatrixXcd::Zero(d, d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      rep.a_quadrature(m, n) = integrate_plane(
          [&](C z) { return z * ipow(z, m) * ipow(std::conj(z), n) * inv_sqrt_fact[m] * inv_sqrt_fact[n]; },
          grid);
  rep.quadrature_deviation = (rep.a_quadrature - s.a).cwiseAbs().maxCoeff();

  const Eigen::MatrixXcd comm = s.q * s.p - s.p * s.q;
  const Eigen::MatrixXcd block = comm.topLeftCorner(n_max, n_max) - C(0, 1) * Eigen::MatrixXcd::Identity(n_max, n_max);
  rep.commutator_block_deviation = block.cwiseAbs().maxCoeff();
  rep.commutator_corner = comm(n_max, n_max);
  return {std::move(s), std::move(rep)};
}

FockDemoResult fock_demo(int n_max) { return fock_demo(n_max, PlaneGrid(n_max + 4, 2 * n_max + 4)); }

}  // namespace fuzzsphere
