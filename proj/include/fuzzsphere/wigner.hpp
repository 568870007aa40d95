#pragma once

#include <complex>
#include <compare>
#include <cstddef>

#include <Eigen/Dense>

#include "fuzzsphere/exact.hpp"
#include "fuzzsphere/half_int.hpp"

namespace fuzzsphere {

/// Arguments of a 3j-symbol ( j1 j2 j3 ; m1 m2 m3 ).
struct ThreeJKey {
  HalfInt j1, j2, j3, m1, m2, m3;

  static ThreeJKey from_twice(int tj1, int tj2, int tj3, int tm1, int tm2, int tm3) {
    return {HalfInt(tj1), HalfInt(tj2), HalfInt(tj3), HalfInt(tm1), HalfInt(tm2), HalfInt(tm3)};
  }
  friend auto operator<=>(const ThreeJKey&, const ThreeJKey&) = default;
};

/// Exact Wigner 3j-symbol (Racah single-sum form, real convention).
///
/// Zero when the m's do not sum to zero, the triangle inequality fails,
/// j1+j2+j3 is not an integer, or some |mi| > ji / parity of mi != ji.
/// Throws DomainError for a negative j. Results are memoized in a shared
/// cache keyed by the symmetry-canonical form of the key.
ExactRadical three_j(const ThreeJKey& key);

/// Same value, evaluated directly without touching the cache.
ExactRadical three_j_uncached(const ThreeJKey& key);

inline double three_j_double(const ThreeJKey& key) { return three_j(key).to_double(); }

/// Number of canonical entries currently memoized.
std::size_t three_j_cache_size();
void three_j_cache_clear();

/// SU(2) element in bicomplex angular coordinates:
///   xi0 + i xi3 = cos(omega) e^{i psi1},  xi1 + i xi2 = sin(omega) e^{i psi2},
/// omega in [0, pi/2], psi1, psi2 in [0, 2pi).
struct Su2Element {
  double omega = 0.0;
  double psi1 = 0.0;
  double psi2 = 0.0;

  static Su2Element identity() { return {}; }

  /// [[xi0 + i xi3, -xi2 + i xi1], [xi2 + i xi1, xi0 - i xi3]]
  Eigen::Matrix2cd matrix() const;
  /// (xi0, xi1, xi2, xi3)
  Eigen::Vector4d components() const;

  static Su2Element from_components(const Eigen::Vector4d& xi);
  /// Reads the angles back from a matrix of the form produced by matrix().
  static Su2Element from_matrix(const Eigen::Matrix2cd& m);
};

/// Group product via 2x2 matrix multiplication and re-extraction of the angles.
Su2Element operator*(const Su2Element& a, const Su2Element& b);

/// An SU(2) preimage of the rotation by `angle` about the unit vector `axis`:
/// xi0 = cos(angle/2), (xi1, xi2, xi3) = sin(angle/2) axis. The sign branch
/// has xi0 >= 0; when xi0 = 0 the first nonzero of xi3, xi2, xi1 is positive.
/// Throws DomainError when |axis| deviates from 1 by more than 1e-12.
Su2Element su2_from_rotation(const Eigen::Vector3d& axis, double angle);

/// The SO(3) rotation induced by xi through X -> xi X xi^dagger on
/// X(x) = [[i x3, -x2 + i x1], [x2 + i x1, -i x3]].
Eigen::Matrix3d rotation_matrix(const Su2Element& xi);

/// D^j_{m1 m2}(xi) by the finite factorial sum over t.
std::complex<double> wigner_D(HalfInt j, HalfInt m1, HalfInt m2, const Su2Element& xi);

/// D^j_{m1 m2}(xi) through the Jacobi polynomial P_{j-m1}^{(m1-m2, m1+m2)}(cos 2 omega).
std::complex<double> wigner_D_jacobi(HalfInt j, HalfInt m1, HalfInt m2, const Su2Element& xi);

/// Full (2j+1)x(2j+1) representation matrix, rows m1 and columns m2
/// ascending from -j.
Eigen::MatrixXcd wigner_D_matrix(HalfInt j, const Su2Element& xi);

/// Max deviation of the numerically integrated D-matrix inner products from
/// (8 pi^2 / (2j+1)) delta delta delta. The Haar measure is normalized to
/// total volume 8 pi^2. `order` is the node count per coordinate
/// (Gauss-Legendre in cos 2 omega, uniform in psi1 and psi2).
double orthogonality_defect(HalfInt j, HalfInt jp, int order);

}  // namespace fuzzsphere
