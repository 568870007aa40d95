#pragma once

#include <complex>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fuzzsphere/operator_matrix.hpp"
#include "fuzzsphere/quad.hpp"
#include "fuzzsphere/ssh.hpp"

namespace fuzzsphere {

/// N(x) = (2j+1)/(4 pi), constant on the sphere.
double cs_normalization(int two_j);

/// |x> with components conj(sigma_Y_{j mu}(x)) / sqrt(N).
struct CoherentState {
  int two_j = 0;
  int two_sigma = 0;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

CoherentState coherent_state(const SshParams& params, const SpherePoint& x);

/// K(x, x') = sqrt(N(x) N(x')) <x|x'> = sum_mu Y_mu(x) conj(Y_mu(x')).
std::complex<double> reproducing_kernel(const SshParams& params, const SpherePoint& x, const SpherePoint& xp);

using SphereFunction = std::function<std::complex<double>(const SpherePoint&)>;

/// A_f with entries int f conj(Y_mu) Y_nu over the (unnormalized) sphere,
/// evaluated on `grid`. A real f (within 1e-12 Hermiticity residual) yields a
/// matrix flagged Hermitian. The grid's phi period must cover the doubled
/// sphere when j is half-integer.
OperatorMatrix quantize_quadrature(const SshParams& params, const SphereFunction& f, const SphereGrid& grid);

/// Same as above on SphereGrid::for_spin(two_j, ell_max).
OperatorMatrix quantize_quadrature(const SshParams& params, const SphereFunction& f, int ell_max);

/// Quantized Y_{ell m} from the product of two exact 3j-symbols; zero for ell > 2j.
OperatorMatrix quantize_ylm_closed(const SshParams& params, int ell, int m);

/// Finite harmonic expansion f = sum f_{ell m} Y_{ell m}.
class HarmonicExpansion {
 public:
  using Key = std::pair<int, int>;

  HarmonicExpansion() = default;
  HarmonicExpansion(std::initializer_list<std::pair<const Key, std::complex<double>>> terms);

  /// Adds c to the (ell, m) coefficient. Throws DomainError unless |m| <= ell.
  void add(int ell, int m, std::complex<double> c);
  const std::map<Key, std::complex<double>>& terms() const { return terms_; }
  std::complex<double> operator()(const SpherePoint& x) const;

 private:
  std::map<Key, std::complex<double>> terms_;
};

struct TruncatedTerm {
  int ell;
  int m;
  std::complex<double> coefficient;
};

struct QuantizedExpansion {
  OperatorMatrix matrix;
  std::vector<TruncatedTerm> truncated;  // ell > 2j terms, in key order
};

QuantizedExpansion quantize_expansion(const SshParams& params, const HarmonicExpansion& f);

/// Quantization of the spin-nu harmonic nu_Y_{k n} by quadrature only.
/// Requires |n| <= k, |nu| <= k and matching parities of nu, n with k.
OperatorMatrix quantize_ssh_general(const SshParams& params, HalfInt nu, HalfInt k, HalfInt n, const SphereGrid& grid);
OperatorMatrix quantize_ssh_general(const SshParams& params, HalfInt nu, HalfInt k, HalfInt n);

/// <x|O|x>
std::complex<double> lower_symbol(const SshParams& params, const OperatorMatrix& op, const SpherePoint& x);

/// L_a O = [Lambda_a, O]
OperatorMatrix superop_action(const SshParams& params, int axis, const OperatorMatrix& op);
/// L^2 O = sum_a L_a L_a O
OperatorMatrix superop_casimir(const SshParams& params, const OperatorMatrix& op);

/// Truncated Fock space n = 0..n_max with the standard operators.
struct FockDemoSpace {
  int n_max = 0;
  Eigen::MatrixXcd a, adag, q, p, number;
};

struct FockDemoReport {
  double quadrature_deviation;  // max |A_z(quadrature) - a|
  bool lowering_exact;          // a|n> = sqrt(n)|n-1> bit-exactly
  double commutator_block_deviation;  // max |[Q,P] - i Id| on the n_max x n_max block
  std::complex<double> commutator_corner;  // [Q,P] at (n_max, n_max)
  Eigen::MatrixXcd a_quadrature;
};

struct FockDemoResult {
  FockDemoSpace space;
  FockDemoReport report;
};

/// Builds a algebraically and A_z = int z |z><z| dmu(z) over truncated
/// standard coherent states on `grid`.
FockDemoResult fock_demo(int n_max, const PlaneGrid& grid);
FockDemoResult fock_demo(int n_max);

}  // namespace fuzzsphere
