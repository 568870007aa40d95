#include "fuzzsphere/exact.hpp"

#include <cmath>
#include <sstream>

#include "fuzzsphere/errors.hpp"

namespace fuzzsphere {

namespace mp = boost::multiprecision;

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  if (n < 0) {
    BigInt v = binomial(k - n - 1, k);
    return (k % 2 == 0) ? v : BigInt(-v);
  }
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

BigInt ipow(const BigInt& base, long e) {
  BigInt out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

void accumulate_factorial(PrimeExponents& acc, int n, int sign) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  for (int p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    long e = 0;
    for (long pk = p; pk <= n; pk *= p) e += n / pk;
    acc[p] += sign * e;
  }
}

std::pair<BigInt, BigInt> squarefree_split(BigInt n) {
  if (n < 1) throw DomainError("squarefree_split needs a positive integer");
  BigInt outside = 1;
  BigInt squarefree = 1;
  for (BigInt p = 2; p * p * p <= n; ++p) {
    const BigInt p2 = p * p;
    while (n % p2 == 0) {
      n /= p2;
      outside *= p;
    }
    if (n % p == 0) {
      n /= p;
      squarefree *= p;
    }
  }
  // n now has at most two prime factors, none repeated except possibly q^2.
  const BigInt r = mp::sqrt(n);
  if (r * r == n) {
    outside *= r;
  } else {
    squarefree *= n;
  }
  return {outside, squarefree};
}

ExactRadical::ExactRadical(BigRational coeff) : coeff_(std::move(coeff)) {}

ExactRadical::ExactRadical(BigRational coeff, const BigRational& radicand) : coeff_(std::move(coeff)) {
  if (radicand < 0) throw DomainError("ExactRadical: negative radicand");
  if (radicand == 0 || coeff_ == 0) {
    normalize_zero();
    return;
  }
  // sqrt(r/s) = sqrt(r*s)/s
  const BigInt num = mp::numerator(radicand);
  const BigInt den = mp::denominator(radicand);
  auto [outside, squarefree] = squarefree_split(num * den);
  coeff_ *= BigRational(outside, den);
  radicand_ = squarefree;
}

ExactRadical ExactRadical::from_prime_exponents(BigRational coeff, const PrimeExponents& radicand) {
  ExactRadical out;
  if (coeff == 0) return out;
  BigInt sq_num = 1, sq_den = 1, rad = 1;
  for (const auto& [p, e] : radicand) {
    // e = 2q + r with r in {0, 1}
    long q = e >= 0 ? e / 2 : -((-e + 1) / 2);
    long r = e - 2 * q;
    if (q > 0) sq_num *= ipow(BigInt(p), q);
    if (q < 0) sq_den *= ipow(BigInt(p), -q);
    if (r == 1) rad *= p;
  }
  out.coeff_ = coeff * BigRational(sq_num, sq_den);
  out.radicand_ = rad;
  return out;
}

void ExactRadical::normalize_zero() {
  coeff_ = 0;
  radicand_ = 1;
}

double to_double(const BigRational& r) { return r.convert_to<double>(); }

double ExactRadical::to_double() const {
  if (is_zero()) return 0.0;
  return fuzzsphere::to_double(coeff_) * std::sqrt(radicand_.convert_to<double>());
}

std::string ExactRadical::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (coeff_ < 0) os << '-';
  const BigRational mag = mp::abs(coeff_);
  const BigInt num = mp::numerator(mag);
  const BigInt den = mp::denominator(mag);
  const bool has_root = radicand_ != 1;
  if (den != 1) {
    os << '(' << num << '/' << den << ')';
    if (has_root) os << "·";
  } else if (num != 1 || !has_root) {
    os << num;
    if (has_root) os << "·";
  }
  if (has_root) os << "√" << radicand_;
  return os.str();
}

ExactRadical ExactRadical::operator-() const {
  ExactRadical out = *this;
  out.coeff_ = -out.coeff_;
  return out;
}

ExactRadical operator*(const ExactRadical& a, const ExactRadical& b) {
  ExactRadical out;
  if (a.is_zero() || b.is_zero()) return out;
  // Both radicands squarefree: sqrt(a)sqrt(b) = g sqrt((a/g)(b/g)), g = gcd(a, b),
  // and (a/g)(b/g) is again squarefree.
  const BigInt g = mp::gcd(a.radicand_, b.radicand_);
  out.coeff_ = a.coeff_ * b.coeff_ * BigRational(g);
  out.radicand_ = (a.radicand_ / g) * (b.radicand_ / g);
  return out;
}

ExactRadical operator*(const ExactRadical& a, const BigRational& r) {
  if (r == 0 || a.is_zero()) return ExactRadical();
  ExactRadical out = a;
  out.coeff_ *= r;
  return out;
}

}  // namespace fuzzsphere
