#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "fuzzsphere/errors.hpp"
#include "fuzzsphere/wigner.hpp"
#include "oracles.hpp"

using namespace fuzzsphere;
using C = std::complex<double>;

namespace {

ExactRadical tj(int a, int b, int c, int d, int e, int f) { return three_j(ThreeJKey::from_twice(a, b, c, d, e, f)); }

Su2Element random_su2(std::mt19937_64& gen) {
  std::normal_distribution<double> n;
  return Su2Element::from_components(Eigen::Vector4d(n(gen), n(gen), n(gen), n(gen)));
}

// Sum over t of the Racah formula in plain doubles.
double racah_float(int a, int b, int c, int d, int e, int f) {
  if (d + e + f != 0) return 0.0;
  const int j1 = a, j2 = b, j3 = c, m1 = d, m2 = e;  // twice values
  auto F = [](int twice) { return oracle::fact(twice / 2); };
  const double pref = std::sqrt(F(j1 + j2 - j3) * F(j1 - j2 + j3) * F(-j1 + j2 + j3) / F(j1 + j2 + j3 + 2) *
                                F(j1 + m1) * F(j1 - m1) * F(j2 + m2) * F(j2 - m2) * F(j3 + f) * F(j3 - f));
  double sum = 0;
  for (int t = 0; t <= 40; ++t) {
    const int x[5] = {(j3 - j2 + m1) / 2 + t, (j3 - j1 - m2) / 2 + t, (j1 + j2 - j3) / 2 - t, (j1 - m1) / 2 - t,
                      (j2 + m2) / 2 - t};
    bool ok = true;
    for (int v : x) ok = ok && v >= 0;
    if (!ok) continue;
    double den = oracle::fact(t);
    for (int v : x) den *= oracle::fact(v);
    sum += ((t % 2) ? -1.0 : 1.0) / den;
  }
  const int phase = (j1 - j2 - f) / 2;
  return ((phase % 2 + 2) % 2 ? -1.0 : 1.0) * pref * sum;
}

}  // namespace

TEST_CASE("three_j examples") {
  const ExactRadical v = tj(2, 2, 0, 0, 0, 0);
  CHECK(v.str() == "-(1/3)·√3");
  CHECK(std::abs(v.to_double() + 0.5773502692) < 1e-10);
  CHECK(tj(2, 2, 2, 0, 0, 0).is_zero());
  CHECK_FALSE(tj(2, 2, 4, 2, -2, 0).is_zero());
  CHECK(tj(2, 2, 4, 2, 0, 0).is_zero());
  CHECK(tj(2, 2, 6, 0, 0, 0).is_zero());
  CHECK(tj(1, 1, 1, 1, -1, 0).is_zero());  // j sum not an integer
  CHECK(tj(2, 2, 2, 4, -4, 0).is_zero());  // |m| > j
  CHECK_THROWS_AS(tj(-2, 2, 0, 0, 0, 0), DomainError);
}

TEST_CASE("three_j agrees with a floating Racah sum") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = std::abs(a - b); c <= a + b; c += 2)
        for (int d = -a; d <= a; d += 2)
          for (int e = -b; e <= b; e += 2) {
            const int f = -d - e;
            if (std::abs(f) > c) continue;
            CHECK(std::abs(tj(a, b, c, d, e, f).to_double() - racah_float(a, b, c, d, e, f)) < 1e-13);
          }
}

TEST_CASE("three_j orthogonality and symmetries are exact") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = std::abs(a - b); c <= std::min(a + b, 4); c += 2)
        for (int m3 = -c; m3 <= c; m3 += 2) {
          BigRational sum = 0;
          for (int m1 = -a; m1 <= a; m1 += 2)
            for (int m2 = -b; m2 <= b; m2 += 2) {
              const ExactRadical v = tj(a, b, c, m1, m2, m3);
              sum += v.square();
              const ExactRadical s = (((a + b + c) / 2) % 2) ? -v : v;
              CHECK(tj(b, c, a, m2, m3, m1) == v);
              CHECK(tj(c, a, b, m3, m1, m2) == v);
              CHECK(tj(b, a, c, m2, m1, m3) == s);
              CHECK(tj(a, c, b, m1, m3, m2) == s);
              CHECK(tj(a, b, c, -m1, -m2, -m3) == s);
            }
          CHECK(sum * (c + 1) == 1);
        }
}

TEST_CASE("three_j cache is consistent and thread safe") {
  three_j_cache_clear();
  CHECK(three_j_cache_size() == 0);
  const ExactRadical a = tj(4, 2, 2, 2, -2, 0);
  const std::size_t n = three_j_cache_size();
  CHECK(n >= 1);
  CHECK(tj(2, 4, 2, -2, 2, 0) == (((4 + 2 + 2) / 2) % 2 ? -a : a));
  CHECK(three_j_cache_size() == n);  // symmetric variant hits the same entry
  CHECK(a == three_j_uncached(ThreeJKey::from_twice(4, 2, 2, 2, -2, 0)));

  three_j_cache_clear();
  std::vector<std::thread> pool;
  std::vector<int> mismatches(4, 0);
  for (int w = 0; w < 4; ++w)
    pool.emplace_back([w, &mismatches] {
      for (int a = 0; a <= 4; ++a)
        for (int c = 0; c <= 4; c += 2)
          for (int m = -a; m <= a; m += 2) {
            const auto key = ThreeJKey::from_twice(a, a, c, (w % 2 ? -m : m), (w % 2 ? m : -m), 0);
            if (!(three_j(key) == three_j_uncached(key))) ++mismatches[w];
          }
    });
  for (auto& t : pool) t.join();
  for (int m : mismatches) CHECK(m == 0);
}

TEST_CASE("su2 element matrix") {
  std::mt19937_64 gen(3);
  for (int k = 0; k < 20; ++k) {
    const Su2Element xi = random_su2(gen);
    const Eigen::Matrix2cd m = xi.matrix();
    CHECK((m * m.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(m.determinant() - 1.0) < 1e-14);
    const Su2Element back = Su2Element::from_matrix(m);
    CHECK((back.matrix() - m).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("wigner_D") {
  std::mt19937_64 gen(5);
  for (int twoj = 0; twoj <= 4; ++twoj) {
    const Eigen::MatrixXcd id = wigner_D_matrix(HalfInt(twoj), Su2Element::identity());
    CHECK((id - Eigen::MatrixXcd::Identity(twoj + 1, twoj + 1)).cwiseAbs().maxCoeff() < 1e-15);
  }
  for (int k = 0; k < 10; ++k) {
    const Su2Element xi = random_su2(gen), eta = random_su2(gen);
    // j = 1/2 reproduces the defining matrix up to the sign of the m = +1/2 basis vector
    const Eigen::Matrix2cd s = Eigen::Vector2cd(1.0, -1.0).asDiagonal();
    CHECK((wigner_D_matrix(HalfInt(1), xi) - s * xi.matrix() * s).cwiseAbs().maxCoeff() < 1e-14);
    for (int twoj = 0; twoj <= 4; ++twoj) {
      const HalfInt j(twoj);
      const Eigen::MatrixXcd d = wigner_D_matrix(j, xi);
      CHECK((d * d.adjoint() - Eigen::MatrixXcd::Identity(twoj + 1, twoj + 1)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((d * wigner_D_matrix(j, eta) - wigner_D_matrix(j, xi * eta)).cwiseAbs().maxCoeff() < 1e-10);
      for (int p = -twoj; p <= twoj; p += 2)
        for (int q = -twoj; q <= twoj; q += 2)
          CHECK(std::abs(wigner_D(j, HalfInt(p), HalfInt(q), xi) - wigner_D_jacobi(j, HalfInt(p), HalfInt(q), xi)) <
                1e-12);
    }
  }
}

TEST_CASE("su2_from_rotation") {
  const Su2Element id = su2_from_rotation({0, 0, 1}, 0.0);
  CHECK(std::abs(id.omega) < 1e-15);
  CHECK((id.matrix() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  const Eigen::Matrix3d half = rotation_matrix(su2_from_rotation({0, 0, 1}, std::numbers::pi));
  CHECK((half * Eigen::Vector3d(1, 0, 0) - Eigen::Vector3d(-1, 0, 0)).norm() < 1e-15);
  const Eigen::Vector4d c = su2_from_rotation({0, 0, 1}, std::numbers::pi).components();
  CHECK(c[0] >= 0.0);
  CHECK(c[3] >= 0.0);

  std::mt19937_64 gen(9);
  std::normal_distribution<double> n;
  std::uniform_real_distribution<double> ua(-2 * std::numbers::pi, 2 * std::numbers::pi);
  for (int k = 0; k < 50; ++k) {
    const Eigen::Vector3d axis = Eigen::Vector3d(n(gen), n(gen), n(gen)).normalized();
    const double angle = ua(gen);
    const Su2Element xi = su2_from_rotation(axis, angle);
    CHECK(xi.components()[0] >= 0.0);
    const Eigen::Matrix3d r = rotation_matrix(xi);
    CHECK((r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(r.determinant() - 1.0) < 1e-12);
    CHECK((r - oracle::rodrigues(axis, angle)).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(su2_from_rotation({1, 1, 0}, 0.3), DomainError);
}

TEST_CASE("haar orthogonality") {
  CHECK(orthogonality_defect(HalfInt(1), HalfInt(1), 4) < 1e-10);
  CHECK(orthogonality_defect(HalfInt(0), HalfInt(2), 4) < 1e-10);
  CHECK(orthogonality_defect(HalfInt(3), HalfInt(4), 6) < 1e-10);
  CHECK(orthogonality_defect(HalfInt(2), HalfInt(2), 1) > 1e-3);
}
