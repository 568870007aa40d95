#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fuzzsphere/csquant.hpp"
#include "fuzzsphere/errors.hpp"
#include "fuzzsphere/ssh.hpp"
#include "oracles.hpp"

using namespace fuzzsphere;
using C = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::pair<int, int>> all_spins(int max_two_j) {
  std::vector<std::pair<int, int>> out;
  for (int tj = 0; tj <= max_two_j; ++tj)
    for (int ts = -tj; ts <= tj; ts += 2) out.emplace_back(tj, ts);
  return out;
}

SpherePoint random_point(std::mt19937_64& gen, double period) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), p(0.0, period);
  return {std::acos(u(gen)), p(gen)};
}

Su2Element random_su2(std::mt19937_64& gen) {
  std::normal_distribution<double> n;
  return Su2Element::from_components(Eigen::Vector4d(n(gen), n(gen), n(gen), n(gen)));
}

}  // namespace

TEST_CASE("params validation") {
  CHECK_THROWS_AS(SshParams(2, 1), DomainError);
  CHECK_THROWS_AS(SshParams(2, 4), DomainError);
  CHECK_THROWS_AS(SshParams(-1, 1), DomainError);
  CHECK_THROWS_AS(ssh_eval(SshParams(2, 0), HalfInt(1), {0.3, 0.2}), DomainError);
  CHECK_THROWS_AS(ssh_eval(SshParams(2, 0), HalfInt(4), {0.3, 0.2}), DomainError);
}

TEST_CASE("low-order values") {
  const SshParams p(2, 0);
  for (double th : {0.0, 0.4, 1.9, kPi}) {
    const C y = ssh_eval(p, HalfInt(0), {th, 0.7});
    CHECK(std::abs(y - std::sqrt(3 / (4 * kPi)) * std::cos(th)) < 1e-15);
    const C y11 = ssh_eval(p, HalfInt(2), {th, 0.7});
    CHECK(std::abs(y11 + std::sqrt(3 / (4 * kPi)) / std::sqrt(2.0) * std::sin(th) * std::polar(1.0, 0.7)) < 1e-15);
  }
}

TEST_CASE("sigma = j closed form") {
  std::mt19937_64 gen(1);
  for (int tj = 1; tj <= 6; ++tj) {
    const double psi = 0.3 * tj;
    const SshParams p(tj, tj, psi);
    for (int k = 0; k < 10; ++k) {
      const SpherePoint x = random_point(gen, p.phi_period());
      for (int tm = -tj; tm <= tj; tm += 2) {
        const double j = 0.5 * tj, mu = 0.5 * tm;
        const C ref = std::polar(1.0, kPi * j) * std::polar(1.0, j * psi) * std::sqrt((tj + 1) / (4 * kPi)) *
                      std::sqrt(oracle::choose(tj, (tj + tm) / 2)) * std::pow(std::cos(0.5 * x.theta), j + mu) *
                      std::pow(std::sin(0.5 * x.theta), j - mu) * std::polar(1.0, mu * x.phi);
        CHECK(std::abs(ssh_eval(p, HalfInt(tm), x) - ref) < 1e-12);
      }
    }
  }
}

TEST_CASE("poles") {
  for (const auto& [tj, ts] : all_spins(6)) {
    const SshParams p(tj, ts);
    for (int tm = -tj; tm <= tj; tm += 2) {
      const C north = ssh_eval(p, HalfInt(tm), {0.0, 1.1});
      if (tm != ts) CHECK(std::abs(north) == 0.0);
      if (tm == ts) CHECK(std::abs(std::abs(north) - std::sqrt((tj + 1) / (4 * kPi))) < 1e-14);
      const C south = ssh_eval(p, HalfInt(tm), {kPi, 1.1});
      CHECK(std::isfinite(south.real()));
      if (tm != -ts) CHECK(std::abs(south) < 1e-15);
    }
  }
}

TEST_CASE("sigma = 0 reduces to the classical harmonics") {
  std::mt19937_64 gen(2);
  for (int l = 0; l <= 5; ++l)
    for (int m = -l; m <= l; ++m)
      for (int k = 0; k < 10; ++k) {
        const SpherePoint x = random_point(gen, 2 * kPi);
        CHECK(std::abs(ssh_eval(SshParams(2 * l, 0), HalfInt(2 * m), x) -
                       oracle::ylm_classical(l, m, x.theta, x.phi)) < 1e-12);
      }
}

TEST_CASE("jacobi form agrees with the binomial-sum form") {
  std::mt19937_64 gen(3);
  for (const auto& [tj, ts] : all_spins(6)) {
    const SshParams p(tj, ts);
    for (int k = 0; k < 20; ++k) {
      const SpherePoint x = random_point(gen, p.phi_period());
      for (int tm = -tj; tm <= tj; tm += 2)
        CHECK(std::abs(ssh_eval(p, HalfInt(tm), x) - oracle::ssh_binomial(tj, ts, tm, x.theta, x.phi)) < 1e-12);
    }
  }
}

TEST_CASE("psi phase") {
  const SpherePoint x{0.8, 2.1};
  for (const auto& [tj, ts] : all_spins(4))
    for (int tm = -tj; tm <= tj; tm += 2) {
      const C a = ssh_eval(SshParams(tj, ts, 0.9), HalfInt(tm), x);
      const C b = ssh_eval(SshParams(tj, ts, 0.0), HalfInt(tm), x) * std::polar(1.0, 0.5 * ts * 0.9);
      CHECK(std::abs(a - b) < 1e-15);
    }
}

TEST_CASE("sum rule") {
  std::mt19937_64 gen(4);
  for (const auto& [tj, ts] : all_spins(6)) {
    const SshParams p(tj, ts);
    for (int k = 0; k < 100; ++k) {
      const Eigen::VectorXcd y = ssh_eval_all(p, random_point(gen, p.phi_period()));
      CHECK(std::abs(y.squaredNorm() - (tj + 1) / (4 * kPi)) < 1e-11);
    }
  }
}

TEST_CASE("orthonormality, including the doubled sphere") {
  for (const auto& [tj, ts] : all_spins(6)) {
    const SshParams p(tj, ts);
    const SphereGrid grid = SphereGrid::for_spin(tj, 0);
    for (int a = -tj; a <= tj; a += 2)
      for (int b = -tj; b <= tj; b += 2) {
        const C ip = 4 * kPi * integrate_sphere(
                                   [&](const SpherePoint& x) {
                                     return std::conj(ssh_eval(p, HalfInt(a), x)) * ssh_eval(p, HalfInt(b), x);
                                   },
                                   grid);
        CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-11);
      }
  }
}

TEST_CASE("ladder operators match the differential operators") {
  const double h = 1e-5;
  for (const auto& [tj, ts] : all_spins(5)) {
    const SshParams p(tj, ts);
    const LambdaMatrices lm = lambda_matrices(p);
    const double sigma = 0.5 * ts;
    for (double th : {0.35, 1.2, 2.7})
      for (double ph : {0.4, 3.3}) {
        for (int tm = -tj; tm <= tj; tm += 2) {
          auto f = [&](double t, double q) { return ssh_eval(p, HalfInt(tm), {t, q}); };
          const C dth = (f(th + h, ph) - f(th - h, ph)) / (2 * h);
          const C dph = (f(th, ph + h) - f(th, ph - h)) / (2 * h);
          const C cot(1.0 / std::tan(th)), csc(1.0 / std::sin(th));
          const C plus = std::polar(1.0, ph) * (dth + C(0, 1) * cot * dph) + sigma * csc * std::polar(1.0, ph) * f(th, ph);
          const C minus =
              -std::polar(1.0, -ph) * (dth - C(0, 1) * cot * dph) + sigma * csc * std::polar(1.0, -ph) * f(th, ph);
          const C three = C(0, -1) * dph;
          // Lambda Y_mu = sum_nu Y_nu (Lambda)_{nu mu}
          const Eigen::VectorXcd y = ssh_eval_all(p, {th, ph});
          const int col = (tm + tj) / 2;
          CHECK(std::abs(plus - y.cwiseProduct(lm.plus.entries().col(col)).sum()) < 1e-6);
          CHECK(std::abs(minus - y.cwiseProduct(lm.minus.entries().col(col)).sum()) < 1e-6);
          CHECK(std::abs(three - y.cwiseProduct(lm.l3.entries().col(col)).sum()) < 1e-6);
        }
      }
  }
}

TEST_CASE("lambda matrices") {
  const LambdaMatrices half = lambda_matrices(1);
  CHECK(half.l3.entries()(0, 0) == C(-0.5));
  CHECK(half.l3.entries()(1, 1) == C(0.5));
  CHECK(half.plus.entries()(1, 0) == C(1.0));
  CHECK(max_abs(half.plus) == 1.0);

  const LambdaMatrices one = lambda_matrices(2);
  CHECK(std::abs(one.plus.entries()(1, 0) - std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(one.plus.entries()(2, 1) - std::sqrt(2.0)) < 1e-15);

  for (int tj = 0; tj <= 6; ++tj) {
    const LambdaMatrices lm = lambda_matrices(tj);
    CHECK(max_abs_diff(commutator(lm.plus, lm.minus), 2.0 * lm.l3) < 1e-14);
    CHECK(max_abs_diff(commutator(lm.l1, lm.l2), C(0, 1) * lm.l3) < 1e-14);
    CHECK(lm.l1.hermitian());
    CHECK(lm.l2.hermitian());
    CHECK(lm.l3.hermitian());
    CHECK(lm.l1.hermiticity_residual() == 0.0);
  }
}

TEST_CASE("rotation operator") {
  std::mt19937_64 gen(6);
  for (int tj = 0; tj <= 4; ++tj) {
    const SshParams p(tj, tj % 2);
    CHECK(max_abs_diff(rotation_operator(p, Su2Element::identity()), OperatorMatrix::identity(tj)) < 1e-15);
    const OperatorMatrix u = rotation_operator(p, random_su2(gen));
    CHECK(max_abs_diff(u * adjoint(u), OperatorMatrix::identity(tj)) < 1e-12);
  }
}

TEST_CASE("harmonics transform with the D-matrix at transposed rotation") {
  // sigma = 0: Y_mu(R^T x) = sum_nu Y_nu(x) D_{nu mu}. For sigma != 0 the two
  // sides differ by a mu-independent phase.
  std::mt19937_64 gen(7);
  for (const auto& [tj, ts] : all_spins(4)) {
    const SshParams p(tj, ts);
    for (int k = 0; k < 5; ++k) {
      const Su2Element xi = random_su2(gen);
      const Eigen::MatrixXcd d = rotation_operator(p, xi).entries();
      const SpherePoint x = random_point(gen, 2 * kPi);
      const SpherePoint y = SpherePoint::from_cartesian(rotation_matrix(xi).transpose() * x.cartesian());
      const Eigen::VectorXcd lhs = ssh_eval_all(p, y);
      const Eigen::VectorXcd rhs = d.transpose() * ssh_eval_all(p, x);
      if (ts == 0) {
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
      } else {
        CHECK(std::abs(lhs.norm() - rhs.norm()) < 1e-10);
        CHECK(std::abs(std::abs(lhs.dot(rhs)) - lhs.norm() * rhs.norm()) < 1e-10);
      }
    }
  }
}

TEST_CASE("conjugation") {
  std::mt19937_64 gen(8);
  for (int k = 0; k < 10; ++k) {
    const SpherePoint x = random_point(gen, 4 * kPi);
    CHECK(ssh_conjugation_check(SshParams(2, 0), HalfInt(0), x) < 1e-13);
    CHECK(ssh_conjugation_check(SshParams(1, 1), HalfInt(1), x) < 1e-12);
    CHECK(ssh_conjugation_check(SshParams(1, 1), HalfInt(-1), x) < 1e-12);
    CHECK(ssh_conjugation_check(SshParams(2, 2), HalfInt(-2), x) < 1e-12);
    for (const auto& [tj, ts] : all_spins(6))
      for (int tm = -tj; tm <= tj; tm += 2) CHECK(ssh_conjugation_check(SshParams(tj, ts, 1.3), HalfInt(tm), x) < 1e-12);
  }
}
