#pragma once

#include <array>
#include <complex>
#include <vector>

#include "fuzzsphere/half_int.hpp"
#include "fuzzsphere/operator_matrix.hpp"
#include "fuzzsphere/sphere_point.hpp"

namespace fuzzsphere {

/// coefficient * (x1)^alpha (x2)^beta (x3)^gamma
struct Monomial3 {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  std::complex<double> coefficient = 1.0;

  int degree() const { return alpha + beta + gamma; }
};

using Polynomial3 = std::vector<Monomial3>;

/// Merges equal exponent triples, drops exact zeros, sorts by (alpha, beta, gamma).
Polynomial3 simplify(const Polynomial3& poly);
std::complex<double> evaluate(const Polynomial3& poly, const Eigen::Vector3d& x);

class FuzzyParams {
 public:
  FuzzyParams(int two_j, int two_sigma, double r = 1.0);

  int two_j() const { return two_j_; }
  int two_sigma() const { return two_sigma_; }
  double r() const { return r_; }
  double j() const { return 0.5 * two_j_; }
  /// r / sqrt(j(j+1))
  double kappa() const { return kappa_; }

 private:
  int two_j_;
  int two_sigma_;
  double r_;
  double kappa_;
};

/// (1/l!) sum over all orderings of the product, computed as
/// (prod of multiplicities!)/l! times the sum over distinct sequences;
/// operators with identical entries are treated as one letter.
OperatorMatrix sym_product(const std::vector<OperatorMatrix>& ops);

/// l!/(prod of multiplicities!) for the same grouping.
long distinct_sequence_count(const std::vector<OperatorMatrix>& ops);

/// S(A1^a A2^b A3^c) for three fixed operators (all of one dimension).
OperatorMatrix sym_monomial(const std::array<const OperatorMatrix*, 3>& letters, const std::array<int, 3>& exponents);

struct HatResult {
  OperatorMatrix matrix;
  Polynomial3 truncated;  // monomials of degree > 2j, left out
};

/// Replace x^a by kappa Lambda_a inside symmetrized products.
HatResult hat_map(const FuzzyParams& params, const Polynomial3& poly);

/// Y_{ell m} restricted from a harmonic homogeneous polynomial of degree ell.
/// The polynomial part is built in exact rational arithmetic; only the
/// normalization square root is floating point.
Polynomial3 ylm_as_polynomial(int ell, int m);

HatResult hat_ylm(const FuzzyParams& params, int ell, int m);

/// Orbital J_a f = -i eps_{abc} x^b d_c f on monomials.
Polynomial3 orbital_action(int axis, const Polynomial3& poly);

/// C(ell) with the sign (-1)^{j+sigma+ell}, which is what the ratio of the two
/// constructions gives. Throws DomainError for sigma = 0 (quantized harmonics
/// vanish there and no ratio exists) and for ell outside 0..2j.
double c_of_ell_closed(const FuzzyParams& params, int ell);

/// Same magnitude with the sign (-1)^{j+sigma-2 ell} as usually printed.
double c_of_ell_printed(const FuzzyParams& params, int ell);

struct EmpiricalRatio {
  std::vector<std::complex<double>> per_m;  // index m + ell
  std::complex<double> mean;
  double spread;  // max pairwise |difference| across m
};

/// quantize_ylm_closed / hat_ylm per m, read at the largest entry of hat_ylm.
EmpiricalRatio c_of_ell_empirical(const FuzzyParams& params, int ell);

/// Frobenius norm of S([Lambda_a, monomial]) - [Lambda_a, S(monomial)], the
/// left side expanded by the Leibniz rule with [Lambda_a, Lambda_b] = i eps_{abc} Lambda_c
/// and each resulting word symmetrized.
double symmetrization_commutator_check(HalfInt j_rep, const std::array<int, 3>& exponents, int axis = 3);

struct ClassicalLimitRow {
  HalfInt j;
  HalfInt sigma;
  double kappa;
  double commutator_norm;     // ||[x^1, x^2]||
  double expected_norm;       // r^2 / (j+1)
  double lower_symbol_deviation;  // max_x |<x| x~^3 |x> - sigma/(j+1) cos theta|
  double ratio_to_previous;   // commutator_norm / previous row's, NaN on the first row
};

/// sigma = j - sigma_offset for every j in the list.
std::vector<ClassicalLimitRow> classical_limit_report(HalfInt sigma_offset, const std::vector<HalfInt>& j_list,
                                                      double r = 1.0);

/// Dimension of the joint eigenspace of (L_3, L^2) at (m, ell(ell+1)) on all
/// (2j+1)x(2j+1) matrices, from a numerical rank.
int joint_eigenspace_dimension(int two_j, int ell, int m, double tol = 1e-9);

}  // namespace fuzzsphere
