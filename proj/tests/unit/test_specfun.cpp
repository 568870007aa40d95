#include <doctest.h>

#include <cmath>
#include <random>

#include "fuzzsphere/errors.hpp"
#include "fuzzsphere/specfun.hpp"
#include "oracles.hpp"

using namespace fuzzsphere;

TEST_CASE("jacobi basics") {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) CHECK(jacobi<double>({0, a, b}, 0.37) == 1.0);
  for (double x : {-1.0, -0.4, 0.0, 0.8, 1.0}) CHECK(jacobi<double>({1, 0, 0}, x) == doctest::Approx(x));
  const double v = jacobi<double>({3, 2, -1}, 0.3);
  CHECK(std::abs(v - oracle::jacobi_hypergeometric(3, 2, -1, 0.3)) < 1e-13);
}

TEST_CASE("jacobi matches the hypergeometric series for nonnegative alpha") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  for (int n = 0; n <= 10; ++n)
    for (int a = 0; a <= 4; ++a)
      for (int b = -3; b <= 4; ++b) {
        const double x = ux(gen);
        const double ref = oracle::jacobi_hypergeometric(n, a, b, x);
        CHECK(std::abs(jacobi<double>({n, a, b}, x) - ref) < 1e-11 * std::max(1.0, std::abs(ref)));
      }
}

TEST_CASE("reflection for negative alpha") {
  // P^{(-l,b)}_n = [C(n+b,l)/C(n,l)] ((x-1)/2)^l P^{(l,b)}_{n-l}
  for (int n = 1; n <= 6; ++n)
    for (int l = 1; l <= n; ++l)
      for (int b = 0; b <= 3; ++b)
        for (double x : {-0.7, 0.1, 0.55}) {
          const double ratio = oracle::choose(n + b, l) / oracle::choose(n, l);
          const double ref = ratio * std::pow(0.5 * (x - 1.0), l) * oracle::jacobi_hypergeometric(n - l, l, b, x);
          CHECK(std::abs(jacobi<double>({n, -l, b}, x) - ref) < 1e-12);
        }
}

TEST_CASE("three-term recurrence") {
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> ui(-3, 3);
  std::uniform_int_distribution<int> un(2, 10);
  std::uniform_real_distribution<double> ux(-0.99, 0.99);
  auto p = [](int n, int a, int b, double x) { return jacobi<double>({n, a, b}, x); };
  int done = 0;
  while (done < 100) {
    const int n = un(gen), a = ui(gen), b = ui(gen);
    // skip parameter sets where the leading coefficient or a denominator vanishes
    if (n + a + b == 0 || 2 * n + a + b - 2 == 0 || 2 * n + a + b == 0 || n + a <= 0 || n + b <= 0) continue;
    const double x = ux(gen);
    double scale = std::abs(p(n, a, b, x)) + std::abs(p(n - 1, a, b, x)) + 1.0;
    scale *= std::pow(2.0 * n + std::abs(a) + std::abs(b), 3);
    CHECK(oracle::jacobi_recurrence_residual(p, n, a, b, x) / scale < 1e-12);
    ++done;
  }
}

TEST_CASE("associated Legendre") {
  for (double z : {-0.9, -0.2, 0.0, 0.5, 1.0}) CHECK(assoc_legendre(1, 0, z) == doctest::Approx(z));
  CHECK(assoc_legendre(1, 1, 0.0) == doctest::Approx(-1.0));
  for (double z : {-0.6, 0.3, 0.8})
    CHECK(std::abs(assoc_legendre(2, -1, z) + assoc_legendre(2, 1, z) / 6.0) < 1e-14);
  for (int j = 0; j <= 5; ++j)
    for (int m = 0; m <= j; ++m)
      for (double z : {-0.95, -0.3, 0.0, 0.4, 0.99}) {
        CHECK(std::abs(assoc_legendre(j, m, z) - oracle::legendre_recurrence(j, m, z)) < 1e-12);
        // (-1)^m 2^-m (1-z^2)^{m/2} (j+m)!/j! P_{j-m}^{(m,m)}(z)
        const double via_jacobi = ((m % 2) ? -1.0 : 1.0) * std::pow(2.0, -m) * std::pow(1 - z * z, 0.5 * m) *
                                  oracle::fact(j + m) / oracle::fact(j) * jacobi<double>({j - m, m, m}, z);
        CHECK(std::abs(assoc_legendre(j, m, z) - via_jacobi) < 1e-12);
      }
  CHECK_THROWS_AS(assoc_legendre(1, 2, 0.3), DomainError);
}
