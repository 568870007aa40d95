#include "fuzzsphere/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>

#include "fuzzsphere/errors.hpp"
#include "fuzzsphere/quad.hpp"
#include "fuzzsphere/specfun.hpp"

namespace fuzzsphere {

namespace {

constexpr double kPi = std::numbers::pi;

bool admissible_projection(HalfInt j, HalfInt m) { return same_parity(j, m) && abs(m) <= j; }

// (a + b - c) etc. for twice-valued labels whose combination is known to be even
int half(int twice) { return twice / 2; }

struct Variant {
  ThreeJKey key;
  bool negate;
};

// The 12 keys related by column permutations and m -> -m, each with the sign
// that relates its value to the original one when J = j1+j2+j3 is odd.
std::array<Variant, 12> symmetry_variants(const ThreeJKey& k) {
  const std::array<std::pair<HalfInt, HalfInt>, 3> cols{{{k.j1, k.m1}, {k.j2, k.m2}, {k.j3, k.m3}}};
  static constexpr std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  std::array<Variant, 12> out;
  std::size_t n = 0;
  for (std::size_t p = 0; p < perms.size(); ++p) {
    const bool odd = p >= 3;
    for (int flip = 0; flip < 2; ++flip) {
      const auto& pm = perms[p];
      ThreeJKey v{cols[pm[0]].first, cols[pm[1]].first, cols[pm[2]].first,
                  cols[pm[0]].second, cols[pm[1]].second, cols[pm[2]].second};
      if (flip) {
        v.m1 = -v.m1;
        v.m2 = -v.m2;
        v.m3 = -v.m3;
      }
      out[n++] = {v, odd != static_cast<bool>(flip)};
    }
  }
  return out;
}

class ThreeJCache {
 public:
  static ThreeJCache& instance() {
    static ThreeJCache cache;
    return cache;
  }

  ExactRadical get(const ThreeJKey& key) {
    const auto variants = symmetry_variants(key);
    const auto canonical =
        *std::min_element(variants.begin(), variants.end(), [](const Variant& a, const Variant& b) { return a.key < b.key; });
    const int twice_sum = key.j1.twice + key.j2.twice + key.j3.twice;
    const bool odd_sum = twice_sum % 4 != 0;  // J odd (J integer whenever the value is nonzero)
    const bool flip_sign = canonical.negate && odd_sum;

    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(canonical.key); it != table_.end()) return flip_sign ? -it->second : it->second;
    }
    ExactRadical value = three_j_uncached(canonical.key);
    {
      std::unique_lock lock(mutex_);
      table_.emplace(canonical.key, value);
    }
    return flip_sign ? -value : value;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<ThreeJKey, ExactRadical> table_;
};

}  // namespace

ExactRadical three_j_uncached(const ThreeJKey& k) {
  if (k.j1.twice < 0 || k.j2.twice < 0 || k.j3.twice < 0) throw DomainError("three_j: negative j");
  if (!admissible_projection(k.j1, k.m1) || !admissible_projection(k.j2, k.m2) || !admissible_projection(k.j3, k.m3))
    return {};
  if (k.m1.twice + k.m2.twice + k.m3.twice != 0) return {};
  const int tj = k.j1.twice + k.j2.twice + k.j3.twice;
  if (tj % 2 != 0) return {};
  if (k.j3 < abs(k.j1 - k.j2) || k.j3 > k.j1 + k.j2) return {};

  const int a = half(k.j1.twice + k.j2.twice - k.j3.twice);  // j1+j2-j3
  const int b = half(k.j1.twice - k.j2.twice + k.j3.twice);  // j1-j2+j3
  const int c = half(-k.j1.twice + k.j2.twice + k.j3.twice);  // -j1+j2+j3
  const int jsum = half(tj);

  PrimeExponents radicand;
  accumulate_factorial(radicand, a, 1);
  accumulate_factorial(radicand, b, 1);
  accumulate_factorial(radicand, c, 1);
  accumulate_factorial(radicand, jsum + 1, -1);
  for (auto [j, m] : {std::pair{k.j1, k.m1}, std::pair{k.j2, k.m2}, std::pair{k.j3, k.m3}}) {
    accumulate_factorial(radicand, half(j.twice + m.twice), 1);
    accumulate_factorial(radicand, half(j.twice - m.twice), 1);
  }

  // Denominator arguments as functions of t:
  // t, j3-j2+t+m1, j3-j1+t-m2, j1+j2-j3-t, j1-t-m1, j2-t+m2
  const int d1 = half(k.j3.twice - k.j2.twice + k.m1.twice);
  const int d2 = half(k.j3.twice - k.j1.twice - k.m2.twice);
  const int d3 = a;
  const int d4 = half(k.j1.twice - k.m1.twice);
  const int d5 = half(k.j2.twice + k.m2.twice);
  const int tmin = std::max({0, -d1, -d2});
  const int tmax = std::min({d3, d4, d5});

  BigRational sum = 0;
  for (int t = tmin; t <= tmax; ++t) {
    BigInt den = factorial(t) * factorial(d1 + t) * factorial(d2 + t) * factorial(d3 - t) * factorial(d4 - t) *
                 factorial(d5 - t);
    BigRational term(1, den);
    sum += (t % 2 == 0) ? term : BigRational(-term);
  }
  const int phase = half(k.j1.twice - k.j2.twice - k.m3.twice);
  if (phase % 2 != 0) sum = -sum;
  return ExactRadical::from_prime_exponents(sum, radicand);
}

ExactRadical three_j(const ThreeJKey& key) {
  if (key.j1.twice < 0 || key.j2.twice < 0 || key.j3.twice < 0) throw DomainError("three_j: negative j");
  return ThreeJCache::instance().get(key);
}

std::size_t three_j_cache_size() { return ThreeJCache::instance().size(); }
void three_j_cache_clear() { ThreeJCache::instance().clear(); }

Eigen::Matrix2cd Su2Element::matrix() const {
  using C = std::complex<double>;
  const double c = std::cos(omega), s = std::sin(omega);
  Eigen::Matrix2cd m;
  m << c * std::polar(1.0, psi1), C(0, 1) * s * std::polar(1.0, psi2), C(0, 1) * s * std::polar(1.0, -psi2),
      c * std::polar(1.0, -psi1);
  return m;
}

Eigen::Vector4d Su2Element::components() const {
  const double c = std::cos(omega), s = std::sin(omega);
  return {c * std::cos(psi1), s * std::cos(psi2), s * std::sin(psi2), c * std::sin(psi1)};
}

namespace {
double wrap_2pi(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  if (a >= 2.0 * kPi) a = 0.0;
  return a;
}
}  // namespace

Su2Element Su2Element::from_components(const Eigen::Vector4d& xi_in) {
  const Eigen::Vector4d xi = xi_in.normalized();
  const std::complex<double> a(xi[0], xi[3]);
  const std::complex<double> b(xi[1], xi[2]);
  Su2Element out;
  out.omega = std::atan2(std::abs(b), std::abs(a));
  out.psi1 = std::abs(a) > 0.0 ? wrap_2pi(std::arg(a)) : 0.0;
  out.psi2 = std::abs(b) > 0.0 ? wrap_2pi(std::arg(b)) : 0.0;
  return out;
}

Su2Element Su2Element::from_matrix(const Eigen::Matrix2cd& m) {
  const std::complex<double> a = m(0, 0);                                  // xi0 + i xi3
  const std::complex<double> b = std::complex<double>(0, -1) * m(0, 1);  // xi1 + i xi2
  return from_components({a.real(), b.real(), b.imag(), a.imag()});
}

Su2Element operator*(const Su2Element& a, const Su2Element& b) {
  return Su2Element::from_matrix(a.matrix() * b.matrix());
}

Su2Element su2_from_rotation(const Eigen::Vector3d& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-12) throw DomainError("su2_from_rotation: axis is not a unit vector");
  Eigen::Vector4d xi;
  xi << std::cos(angle / 2), std::sin(angle / 2) * axis;
  // branch: xi0 >= 0, ties broken toward xi3 >= 0, then xi2, then xi1
  bool negate = false;
  if (xi[0] < 0.0) {
    negate = true;
  } else if (xi[0] == 0.0) {
    for (int idx : {3, 2, 1}) {
      if (xi[idx] != 0.0) {
        negate = xi[idx] < 0.0;
        break;
      }
    }
  }
  if (negate) xi = -xi;
  return Su2Element::from_components(xi);
}

Eigen::Matrix3d rotation_matrix(const Su2Element& xi) {
  using C = std::complex<double>;
  const Eigen::Matrix2cd u = xi.matrix();
  Eigen::Matrix3d r;
  for (int k = 0; k < 3; ++k) {
    Eigen::Vector3d e = Eigen::Vector3d::Unit(k);
    Eigen::Matrix2cd x;
    x << C(0, e[2]), C(-e[1], e[0]), C(e[1], e[0]), C(0, -e[2]);
    const Eigen::Matrix2cd xp = u * x * u.adjoint();
    r.col(k) << xp(1, 0).imag(), xp(1, 0).real(), xp(0, 0).imag();
  }
  return r;
}

std::complex<double> wigner_D(HalfInt j, HalfInt m1, HalfInt m2, const Su2Element& xi) {
  using C = std::complex<double>;
  if (j.twice < 0 || !admissible_projection(j, m1) || !admissible_projection(j, m2))
    throw DomainError("wigner_D: need |m1|, |m2| <= j with matching parity");
  const double c = std::cos(xi.omega), s = std::sin(xi.omega);
  const C a = c * std::polar(1.0, xi.psi1);                // xi0 + i xi3
  const C ac = c * std::polar(1.0, -xi.psi1);              // xi0 - i xi3
  const C bm = C(0, 1) * s * std::polar(1.0, xi.psi2);    // -xi2 + i xi1
  const C bp = C(0, 1) * s * std::polar(1.0, -xi.psi2);   // xi2 + i xi1
  const int e1 = half(j.twice - m2.twice);                // j - m2 - t
  const int e2 = half(j.twice + m1.twice);                // j + m1 - t
  const int e3 = half(m2.twice - m1.twice);               // t + m2 - m1
  C sum(0.0);
  for (int t = std::max(0, -e3); t <= std::min(e1, e2); ++t) {
    sum += ipow(a, e1 - t) / factorial_real<double>(e1 - t) * ipow(ac, e2 - t) / factorial_real<double>(e2 - t) *
           ipow(bm, t + e3) / factorial_real<double>(t + e3) * ipow(bp, t) / factorial_real<double>(t);
  }
  const double pre = std::sqrt(factorial_real<double>(half(j.twice + m1.twice)) *
                               factorial_real<double>(half(j.twice - m1.twice)) *
                               factorial_real<double>(half(j.twice + m2.twice)) *
                               factorial_real<double>(half(j.twice - m2.twice)));
  const int sign_exp = half(m1.twice - m2.twice);
  return ((sign_exp % 2 == 0) ? 1.0 : -1.0) * pre * sum;
}

std::complex<double> wigner_D_jacobi(HalfInt j, HalfInt m1, HalfInt m2, const Su2Element& xi) {
  using C = std::complex<double>;
  if (j.twice < 0 || !admissible_projection(j, m1) || !admissible_projection(j, m2))
    throw DomainError("wigner_D_jacobi: need |m1|, |m2| <= j with matching parity");
  const int n = half(j.twice - m1.twice);
  const int alpha = half(m1.twice - m2.twice);
  const int beta = half(m1.twice + m2.twice);
  const double m1v = m1.value(), m2v = m2.value();
  // i^{m2 - m1}, integer exponent
  static const std::array<C, 4> ipowers{C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
  const C phase = std::polar(1.0, -m1v * (xi.psi1 + xi.psi2)) * std::polar(1.0, -m2v * (xi.psi1 - xi.psi2)) *
                  ipowers[static_cast<std::size_t>(((-alpha) % 4 + 4) % 4)];
  const double ratio = std::sqrt(factorial_real<double>(half(j.twice - m1.twice)) *
                                 factorial_real<double>(half(j.twice + m1.twice)) /
                                 (factorial_real<double>(half(j.twice - m2.twice)) *
                                  factorial_real<double>(half(j.twice + m2.twice))));
  // 2^{-m1} (1 + cos 2w)^{(m1+m2)/2} (1 - cos 2w)^{(m1-m2)/2} P(cos 2w)
  const double weighted = jacobi_weighted(JacobiParams{n, alpha, beta}, 2.0 * xi.omega);
  return phase * ratio * std::pow(2.0, -m1v) * weighted;
}

Eigen::MatrixXcd wigner_D_matrix(HalfInt j, const Su2Element& xi) {
  const int dim = j.twice + 1;
  Eigen::MatrixXcd d(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) d(r, c) = wigner_D(j, HalfInt(2 * r - j.twice), HalfInt(2 * c - j.twice), xi);
  return d;
}

double orthogonality_defect(HalfInt j, HalfInt jp, int order) {
  if (order < 1) throw DomainError("orthogonality_defect: order must be >= 1");
  const int d = j.twice + 1, dp = jp.twice + 1;
  const auto rule = gauss_legendre<double>(order);
  // Haar measure 2 sin(2w) dw dpsi1 dpsi2 has volume 8 pi^2; with u = cos 2w,
  // 2 sin(2w) dw = du.
  std::vector<CompensatedMatrixSum> acc;
  acc.reserve(static_cast<std::size_t>(d * d));
  for (int i = 0; i < d * d; ++i) acc.emplace_back(dp, dp);
  const double dpsi = 2.0 * kPi / order;
  for (int iu = 0; iu < order; ++iu) {
    const double omega = 0.5 * std::acos(rule.nodes[iu]);
    for (int a = 0; a < order; ++a) {
      for (int b = 0; b < order; ++b) {
        const Su2Element xi{omega, a * dpsi, b * dpsi};
        const double w = rule.weights[iu] * dpsi * dpsi;
        const Eigen::MatrixXcd dj = wigner_D_matrix(j, xi);
        const Eigen::MatrixXcd djp = wigner_D_matrix(jp, xi);
        for (int m1 = 0; m1 < d; ++m1)
          for (int m2 = 0; m2 < d; ++m2)
            acc[m1 * d + m2].add((w * dj(m1, m2)) * djp.conjugate());
      }
    }
  }
  double defect = 0.0;
  const double norm = 8.0 * kPi * kPi / (j.twice + 1);
  for (int m1 = 0; m1 < d; ++m1) {
    for (int m2 = 0; m2 < d; ++m2) {
      const Eigen::MatrixXcd got = acc[m1 * d + m2].value();
      for (int n1 = 0; n1 < dp; ++n1)
        for (int n2 = 0; n2 < dp; ++n2) {
          const bool diag = j == jp && m1 == n1 && m2 == n2;
          defect = std::max(defect, std::abs(got(n1, n2) - (diag ? norm : 0.0)));
        }
    }
  }
  return defect;
}

}  // namespace fuzzsphere
