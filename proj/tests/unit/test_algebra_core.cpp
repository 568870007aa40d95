#include <doctest.h>

#include <cmath>

#include "fuzzsphere/errors.hpp"
#include "fuzzsphere/exact.hpp"
#include "fuzzsphere/half_int.hpp"
#include "oracles.hpp"

using namespace fuzzsphere;

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  for (int n = 0; n <= 40; ++n) CHECK(factorial(n) == oracle::factorial_loop(n));
  CHECK_THROWS_AS(factorial(-1), DomainError);
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(5, -1) == 0);
  for (int n = 0; n <= 25; ++n)
    for (int k = -2; k <= n + 2; ++k) CHECK(binomial(n, k) == oracle::pascal(n, k));
  // generalized upper index: C(-1, k) = (-1)^k, C(-3, 2) = 6
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-3, 2) == 6);
}

TEST_CASE("radical_mul") {
  const ExactRadical r2(BigRational(1), BigRational(2));
  const ExactRadical two = radical_mul(r2, r2);
  CHECK(two.coeff() == 2);
  CHECK(two.radicand() == 1);

  const ExactRadical third_r3(BigRational(1, 3), BigRational(3));
  const ExactRadical r3(BigRational(1), BigRational(3));
  const ExactRadical prod = radical_mul(third_r3, r3);
  CHECK(prod.coeff() == 1);
  CHECK(prod.radicand() == 1);

  const ExactRadical x(BigRational(-1, 3), BigRational(3));
  const ExactRadical sq = radical_mul(x, x);
  CHECK(sq.coeff() == BigRational(1, 3));
  CHECK(sq.radicand() == 1);
  CHECK(std::abs(sq.to_double() - x.to_double() * x.to_double()) < 1e-15);
}

TEST_CASE("radical normalization") {
  // sqrt(12) = 2 sqrt(3); sqrt(1/2) = (1/2) sqrt(2); 0 is 0 * sqrt(1)
  const ExactRadical a(BigRational(1), BigRational(12));
  CHECK(a.coeff() == 2);
  CHECK(a.radicand() == 3);
  const ExactRadical b(BigRational(1), BigRational(1, 2));
  CHECK(b.coeff() == BigRational(1, 2));
  CHECK(b.radicand() == 2);
  const ExactRadical z(BigRational(0), BigRational(7));
  CHECK(z.is_zero());
  CHECK(z.radicand() == 1);
  CHECK(ExactRadical(BigRational(5), BigRational(0)).is_zero());
  CHECK(a == ExactRadical(BigRational(2), BigRational(3)));
  CHECK(ExactRadical(BigRational(-1, 3), BigRational(3)).str() == "-(1/3)·√3");
  CHECK(ExactRadical(BigRational(1), BigRational(3)).str() == "√3");
  CHECK(ExactRadical(BigRational(2)).str() == "2");
  CHECK(ExactRadical().str() == "0");
}

TEST_CASE("squared value matches product of floats") {
  for (int p = -7; p <= 7; ++p)
    for (int q = 1; q <= 5; ++q)
      for (int r = 1; r <= 30; ++r) {
        const ExactRadical x(BigRational(p, q), BigRational(r, q + 1));
        const double f = x.to_double();
        const double sq = radical_mul(x, x).to_double();
        CHECK(std::abs(f * f - sq) <= 1e-14 * std::max(1.0, std::abs(sq)));
      }
}

TEST_CASE("prime exponent construction") {
  // 3! * 5! / 2! = 360 = 6^2 * 10
  PrimeExponents e;
  accumulate_factorial(e, 3, 1);
  accumulate_factorial(e, 5, 1);
  accumulate_factorial(e, 2, -1);
  const ExactRadical v = ExactRadical::from_prime_exponents(BigRational(1), e);
  CHECK(v.coeff() == 6);
  CHECK(v.radicand() == 10);
  const auto [out, sf] = squarefree_split(BigInt(360));
  CHECK(out == 6);
  CHECK(sf == 10);
}

TEST_CASE("HalfInt arithmetic") {
  for (int a = -8; a <= 8; ++a)
    for (int b = -8; b <= 8; ++b) {
      const HalfInt x(a), y(b);
      CHECK(x + y == y + x);
      CHECK((x + y).twice == a + b);
      CHECK((x - y).twice == a - b);
      CHECK(same_parity(x, y) == ((a - b) % 2 == 0));
      for (int c = -8; c <= 8; ++c) CHECK((x + y) + HalfInt(c) == x + (y + HalfInt(c)));
    }
  CHECK(HalfInt(3).str() == "3/2");
  CHECK(HalfInt(-4).str() == "-2");
  CHECK(HalfInt(3).value() == 1.5);
  CHECK_FALSE(HalfInt(3).is_integer());
  CHECK(abs(HalfInt(-5)) == HalfInt(5));
}
