#pragma once

// Jacobi polynomials with integer (possibly negative) parameters and the
// associated Legendre functions built on them.

#include <cmath>
#include <string>

#include "fuzzsphere/errors.hpp"

namespace fuzzsphere {

struct JacobiParams {
  int n = 0;
  int alpha = 0;
  int beta = 0;
};

/// Integer power with 0^0 = 1; negative exponents allowed for nonzero base.
template <typename Scalar>
Scalar ipow(Scalar base, int e) {
  if (e < 0) return Scalar(1) / ipow(base, -e);
  Scalar out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

template <typename Scalar>
Scalar factorial_real(int n) {
  if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
  Scalar out(1);
  for (int k = 2; k <= n; ++k) out *= Scalar(k);
  return out;
}

/// Generalized binomial coefficient for integer arguments (zero for k < 0,
/// and for k > n when n >= 0).
template <typename Scalar>
Scalar binomial_real(long n, long k) {
  if (k < 0) return Scalar(0);
  if (n >= 0 && k > n) return Scalar(0);
  if (n >= 0 && k > n - k) k = n - k;
  Scalar out(1);
  for (long i = 1; i <= k; ++i) out = out * Scalar(n - k + i) / Scalar(i);
  return out;
}

/// P_n^{(alpha,beta)}(x) by the explicit finite sum
///   sum_s C(n+alpha, n-s) C(n+beta, s) ((x-1)/2)^s ((x+1)/2)^(n-s),
/// a polynomial identity in alpha and beta, valid for all integer parameters.
template <typename Scalar>
Scalar jacobi_sum(const JacobiParams& p, Scalar x) {
  if (p.n < 0) throw DomainError("jacobi: negative degree");
  const Scalar xm = (x - Scalar(1)) / Scalar(2);
  const Scalar xp = (x + Scalar(1)) / Scalar(2);
  Scalar out(0);
  for (int s = 0; s <= p.n; ++s) {
    out += binomial_real<Scalar>(p.n + p.alpha, p.n - s) * binomial_real<Scalar>(p.n + p.beta, s) *
           ipow(xm, s) * ipow(xp, p.n - s);
  }
  return out;
}

/// Jacobi polynomial. A negative upper index alpha = -l with n >= l is reduced by
///   P_n^{(-l,beta)}(x) = [C(n+beta,l)/C(n,l)] ((x-1)/2)^l P_{n-l}^{(l,beta)}(x).
template <typename Scalar>
Scalar jacobi(const JacobiParams& p, Scalar x) {
  if (p.n < 0) throw DomainError("jacobi: negative degree");
  if (p.n == 0) return Scalar(1);
  if (p.alpha <= -1 && p.n >= -p.alpha) {
    const int l = -p.alpha;
    const Scalar ratio = binomial_real<Scalar>(p.n + p.beta, l) / binomial_real<Scalar>(p.n, l);
    return ratio * ipow((x - Scalar(1)) / Scalar(2), l) * jacobi(JacobiParams{p.n - l, l, p.beta}, x);
  }
  return jacobi_sum(p, x);
}

namespace detail {

// (sqrt2 c)^beta (sqrt2 s)^alpha P_n^{(alpha,beta)}(c^2 - s^2)
template <typename Scalar>
Scalar jacobi_weighted_cs(int n, int alpha, int beta, Scalar c, Scalar s) {
  using std::sqrt;
  if (n == 0 && alpha >= 0 && beta >= 0) {
    const Scalar r2 = sqrt(Scalar(2));
    return ipow(r2 * c, beta) * ipow(r2 * s, alpha);
  }
  if (alpha < 0 && n >= -alpha) {
    const int l = -alpha;
    const Scalar ratio = binomial_real<Scalar>(n + beta, l) / binomial_real<Scalar>(n, l);
    const Scalar sign = (l % 2 == 0) ? Scalar(1) : Scalar(-1);
    return ratio * sign * ipow(Scalar(2), -l) * jacobi_weighted_cs(n - l, l, beta, c, s);
  }
  if (beta < 0 && n >= -beta) {
    // P_n^{(a,b)}(x) = (-1)^n P_n^{(b,a)}(-x); x -> -x swaps c and s.
    const Scalar sign = (n % 2 == 0) ? Scalar(1) : Scalar(-1);
    return sign * jacobi_weighted_cs(n, beta, alpha, s, c);
  }
  const Scalar r2 = sqrt(Scalar(2));
  const Scalar x = (c - s) * (c + s);
  return ipow(r2 * c, beta) * ipow(r2 * s, alpha) * jacobi(JacobiParams{n, alpha, beta}, x);
}

}  // namespace detail

/// (1 + cos t)^{beta/2} (1 - cos t)^{alpha/2} P_n^{(alpha,beta)}(cos t).
///
/// Negative parameters are reflected away before any power is taken, so the
/// result is finite at t = 0 and t = pi whenever the product is a polynomial
/// in cos(t/2), sin(t/2).
template <typename Scalar>
Scalar jacobi_weighted(const JacobiParams& p, Scalar t) {
  using std::cos;
  using std::sin;
  return detail::jacobi_weighted_cs(p.n, p.alpha, p.beta, cos(t / Scalar(2)), sin(t / Scalar(2)));
}

/// Associated Legendre function P_j^m(z) with the Condon-Shortley phase,
///   P_j^m(z) = (-1)^m 2^{-m} (1-z^2)^{m/2} (j+m)!/j! P_{j-m}^{(m,m)}(z),  m >= 0,
///   P_j^{-m} = (-1)^m (j-m)!/(j+m)! P_j^m.
template <typename Scalar>
Scalar assoc_legendre(int j, int m, Scalar z) {
  using std::sqrt;
  if (j < 0 || m > j || -m > j)
    throw DomainError("assoc_legendre: need |m| <= j, got j=" + std::to_string(j) + " m=" + std::to_string(m));
  if (m < 0) {
    const int k = -m;
    const Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
    return sign * factorial_real<Scalar>(j - k) / factorial_real<Scalar>(j + k) * assoc_legendre(j, k, z);
  }
  const Scalar sign = (m % 2 == 0) ? Scalar(1) : Scalar(-1);
  const Scalar w = ipow(sqrt(Scalar(1) - z * z), m);
  return sign * ipow(Scalar(2), -m) * w * factorial_real<Scalar>(j + m) / factorial_real<Scalar>(j) *
         jacobi(JacobiParams{j - m, m, m}, z);
}

}  // namespace fuzzsphere
