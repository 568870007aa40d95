#pragma once

// Deterministic quadrature on the sphere (Gauss-Legendre in cos(theta) times
// uniform trapezoid in phi) and on the plane with the Gaussian measure
// (Gauss-Laguerre in |z|^2 times uniform angle).

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fuzzsphere/errors.hpp"
#include "fuzzsphere/sphere_point.hpp"

namespace fuzzsphere {

template <typename Scalar>
struct GaussRule {
  std::vector<Scalar> nodes;
  std::vector<Scalar> weights;
};

/// Gauss-Legendre rule on [-1, 1], exact for polynomials of degree 2n - 1.
/// Nodes ascending.
template <typename Scalar = double>
GaussRule<Scalar> gauss_legendre(int n) {
  using std::abs;
  using std::cos;
  if (n < 1) throw DomainError("gauss_legendre: need n >= 1");
  GaussRule<Scalar> rule;
  rule.nodes.assign(n, Scalar(0));
  rule.weights.assign(n, Scalar(0));
  const Scalar pi = std::numbers::pi_v<Scalar>;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Scalar x = cos(pi * (Scalar(i) + Scalar(0.75)) / (Scalar(n) + Scalar(0.5)));
    Scalar dp(0);
    for (int iter = 0; iter < 100; ++iter) {
      // three-term recurrence for P_n and P_n'
      Scalar p0(1), p1 = x;
      for (int k = 2; k <= n; ++k) {
        const Scalar p2 = ((Scalar(2 * k - 1)) * x * p1 - Scalar(k - 1) * p0) / Scalar(k);
        p0 = p1;
        p1 = p2;
      }
      dp = Scalar(n) * (x * p1 - p0) / (x * x - Scalar(1));
      const Scalar dx = p1 / dp;
      x -= dx;
      if (abs(dx) <= Scalar(4) * std::numeric_limits<Scalar>::epsilon()) break;
    }
    // recompute derivative at the converged node
    Scalar p0(1), p1 = x;
    for (int k = 2; k <= n; ++k) {
      const Scalar p2 = ((Scalar(2 * k - 1)) * x * p1 - Scalar(k - 1) * p0) / Scalar(k);
      p0 = p1;
      p1 = p2;
    }
    dp = (n == 1) ? Scalar(1) : Scalar(n) * (x * p1 - p0) / (x * x - Scalar(1));
    const Scalar w = Scalar(2) / ((Scalar(1) - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = Scalar(0);
  return rule;
}

/// Gauss-Laguerre rule for int_0^inf e^{-x} g(x) dx (Golub-Welsch, then
/// Newton polish of the nodes). Exact for polynomials of degree 2n - 1.
template <typename Scalar = double>
GaussRule<Scalar> gauss_laguerre(int n) {
  using std::abs;
  if (n < 1) throw DomainError("gauss_laguerre: need n >= 1");
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Mat jac = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    jac(i, i) = Scalar(2 * i + 1);
    if (i + 1 < n) jac(i, i + 1) = jac(i + 1, i) = Scalar(i + 1);
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(jac);
  GaussRule<Scalar> rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    Scalar x = eig.eigenvalues()(i);
    Scalar dl(1);
    for (int iter = 0; iter < 20; ++iter) {
      Scalar l0(1), l1 = Scalar(1) - x;
      for (int k = 1; k < n; ++k) {
        const Scalar l2 = ((Scalar(2 * k + 1) - x) * l1 - Scalar(k) * l0) / Scalar(k + 1);
        l0 = l1;
        l1 = l2;
      }
      dl = Scalar(n) * (l1 - l0) / x;
      const Scalar dx = l1 / dl;
      x -= dx;
      if (abs(dx) <= Scalar(4) * std::numeric_limits<Scalar>::epsilon() * (Scalar(1) + abs(x))) break;
    }
    // w_i = x_i / ((n+1)^2 L_{n+1}(x_i)^2), and L_{n+1} = -n L_{n-1}/(n+1) at a root of L_n
    Scalar l0(1), l1 = Scalar(1) - x;
    for (int k = 1; k < n; ++k) {
      const Scalar l2 = ((Scalar(2 * k + 1) - x) * l1 - Scalar(k) * l0) / Scalar(k + 1);
      l0 = l1;
      l1 = l2;
    }
    const Scalar lnp1 = ((Scalar(2 * n + 1) - x) * l1 - Scalar(n) * l0) / Scalar(n + 1);
    rule.nodes[i] = x;
    rule.weights[i] = x / (Scalar(n + 1) * Scalar(n + 1) * lnp1 * lnp1);
  }
  return rule;
}

/// Neumaier-compensated running sum. Works for double and std::complex<double>
/// (components compensated independently).
class CompensatedSum {
 public:
  void add(double x) { add_component(sum_re_, comp_re_, x); }
  void add(std::complex<double> z) {
    add_component(sum_re_, comp_re_, z.real());
    add_component(sum_im_, comp_im_, z.imag());
  }
  double real() const { return sum_re_ + comp_re_; }
  std::complex<double> value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_component(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double sum_re_ = 0.0, comp_re_ = 0.0, sum_im_ = 0.0, comp_im_ = 0.0;
};

/// Entrywise compensated accumulation of complex matrices.
class CompensatedMatrixSum {
 public:
  CompensatedMatrixSum(Eigen::Index rows, Eigen::Index cols) : cells_(rows * cols), rows_(rows), cols_(cols) {}

  template <typename Derived>
  void add(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index c = 0; c < cols_; ++c)
      for (Eigen::Index r = 0; r < rows_; ++r) cells_[c * rows_ + r].add(std::complex<double>(m(r, c)));
  }

  Eigen::MatrixXcd value() const {
    Eigen::MatrixXcd out(rows_, cols_);
    for (Eigen::Index c = 0; c < cols_; ++c)
      for (Eigen::Index r = 0; r < rows_; ++r) out(r, c) = cells_[c * rows_ + r].value();
    return out;
  }

 private:
  std::vector<CompensatedSum> cells_;
  Eigen::Index rows_, cols_;
};

/// Product grid on S^2 (or on the doubled sphere when phi_period = 4pi).
/// Weights are normalized: they sum to one, i.e. they realize
/// sin(theta) dtheta dphi / (2 phi_period).
struct SphereGrid {
  int n_theta = 1;
  int n_phi = 1;
  double phi_period = 2.0 * std::numbers::pi;

  struct Node {
    SpherePoint point;
    double weight;
  };

  SphereGrid() = default;
  SphereGrid(int nt, int np, double period = 2.0 * std::numbers::pi) : n_theta(nt), n_phi(np), phi_period(period) {
    if (nt < 1 || np < 1) throw DomainError("SphereGrid: node counts must be >= 1");
  }

  /// Default grid for products of two spin-j harmonics with an observable of
  /// degree ell_max: n_theta = 2j + ell_max + 4, n_phi = 4j + 2 ell_max + 4.
  static SphereGrid for_spin(int two_j, int ell_max) {
    return SphereGrid(two_j + ell_max + 4, 2 * two_j + 2 * ell_max + 4, phi_period_for(two_j));
  }

  /// Nodes in fixed order: theta-major (ascending cos theta), then phi.
  std::vector<Node> nodes() const {
    const auto rule = gauss_legendre<double>(n_theta);
    std::vector<Node> out;
    out.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    for (int i = 0; i < n_theta; ++i) {
      const double theta = std::acos(rule.nodes[i]);
      for (int k = 0; k < n_phi; ++k) {
        out.push_back({{theta, phi_period * k / n_phi}, 0.5 * rule.weights[i] / n_phi});
      }
    }
    return out;
  }
};

namespace detail {
inline std::string node_label(const SpherePoint& p, std::size_t index) {
  std::ostringstream os;
  os << "node " << index << " (theta=" << p.theta << ", phi=" << p.phi << ")";
  return os.str();
}
}  // namespace detail

/// Normalized-measure average of f over the grid. Throws NonFiniteSample naming
/// the first node where f is not finite.
template <typename F>
std::complex<double> integrate_sphere(F&& f, const SphereGrid& grid) {
  CompensatedSum acc;
  std::size_t index = 0;
  for (const auto& node : grid.nodes()) {
    const std::complex<double> v = f(node.point);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NonFiniteSample("integrate_sphere: non-finite sample at " + detail::node_label(node.point, index));
    acc.add(node.weight * v);
    ++index;
  }
  return acc.value();
}

/// Quadrature for the Gaussian measure (1/pi) e^{-|z|^2} d^2z on C.
struct PlaneGrid {
  int n_radial = 1;
  int n_angular = 1;

  struct Node {
    std::complex<double> z;
    double weight;
  };

  PlaneGrid() = default;
  PlaneGrid(int nr, int na) : n_radial(nr), n_angular(na) {
    if (nr < 1 || na < 1) throw DomainError("PlaneGrid: node counts must be >= 1");
  }

  std::vector<Node> nodes() const {
    const auto rule = gauss_laguerre<double>(n_radial);
    std::vector<Node> out;
    out.reserve(static_cast<std::size_t>(n_radial) * n_angular);
    for (int i = 0; i < n_radial; ++i) {
      const double r = std::sqrt(rule.nodes[i]);
      for (int k = 0; k < n_angular; ++k) {
        const double a = 2.0 * std::numbers::pi * k / n_angular;
        out.push_back({std::polar(r, a), rule.weights[i] / n_angular});
      }
    }
    return out;
  }
};

template <typename F>
std::complex<double> integrate_plane(F&& f, const PlaneGrid& grid) {
  CompensatedSum acc;
  for (const auto& node : grid.nodes()) acc.add(node.weight * std::complex<double>(f(node.z)));
  return acc.value();
}

}  // namespace fuzzsphere
