#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace fuzzsphere {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// n! exactly. Throws DomainError for n < 0.
BigInt factorial(int n);

/// Binomial coefficient C(n, k). For n >= 0 this is zero outside 0 <= k <= n;
/// for n < 0 the generalized value (-1)^k C(k - n - 1, k) is returned, and
/// zero for k < 0.
BigInt binomial(long n, long k);

/// Prime factorization of a product of factorials, as exponent map p -> e.
/// Negative exponents encode factorials in the denominator.
using PrimeExponents = std::map<int, long>;

/// Adds sign * exponents of n! to `acc` (Legendre's formula).
void accumulate_factorial(PrimeExponents& acc, int n, int sign);

/// Exact number coeff * sqrt(radicand) with a squarefree integer radicand.
///
/// Rational radicands r/s passed to the constructor are folded as
/// sqrt(r*s)/s and square factors are moved into the coefficient, so two
/// equal values always have identical representations. Zero is stored as
/// coeff = 0, radicand = 1.
class ExactRadical {
 public:
  ExactRadical() = default;
  explicit ExactRadical(BigRational coeff);
  ExactRadical(BigRational coeff, const BigRational& radicand);

  /// Builds coeff * sqrt(prod p^e) without factoring any large integer.
  static ExactRadical from_prime_exponents(BigRational coeff, const PrimeExponents& radicand);

  const BigRational& coeff() const { return coeff_; }
  const BigInt& radicand() const { return radicand_; }

  bool is_zero() const { return coeff_ == 0; }
  int sign() const { return coeff_ > 0 ? 1 : (coeff_ < 0 ? -1 : 0); }

  /// coeff^2 * radicand, exact.
  BigRational square() const { return coeff_ * coeff_ * BigRational(radicand_); }

  double to_double() const;

  /// "(p/q)·√r", "p·√r", "√r", "p/q" style rendering; "0" for zero.
  std::string str() const;

  ExactRadical operator-() const;
  friend ExactRadical operator*(const ExactRadical& a, const ExactRadical& b);
  friend ExactRadical operator*(const ExactRadical& a, const BigRational& r);
  friend bool operator==(const ExactRadical& a, const ExactRadical& b) {
    return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
  }

 private:
  void normalize_zero();

  BigRational coeff_{0};
  BigInt radicand_{1};
};

inline ExactRadical radical_mul(const ExactRadical& a, const ExactRadical& b) { return a * b; }

/// Splits n >= 1 into (outside, squarefree) with n = outside^2 * squarefree.
std::pair<BigInt, BigInt> squarefree_split(BigInt n);

double to_double(const BigRational& r);

}  // namespace fuzzsphere
