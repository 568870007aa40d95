#include "fuzzsphere/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <tuple>

#include "fuzzsphere/csquant.hpp"
#include "fuzzsphere/errors.hpp"
#include "fuzzsphere/exact.hpp"
#include "fuzzsphere/specfun.hpp"
#include "fuzzsphere/ssh.hpp"
#include "fuzzsphere/wigner.hpp"

namespace fuzzsphere {

namespace {

using C = std::complex<double>;
using Triple = std::tuple<int, int, int>;
constexpr double kPi = std::numbers::pi;

// Sum over the distinct orderings of `labels` of the product of letters[label].
Eigen::MatrixXcd distinct_sequence_sum(std::vector<int> labels, const std::vector<const Eigen::MatrixXcd*>& letters,
                                       Eigen::Index dim) {
  std::sort(labels.begin(), labels.end());
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(dim, dim);
  do {
    Eigen::MatrixXcd prod = *letters[static_cast<std::size_t>(labels.front())];
    for (std::size_t k = 1; k < labels.size(); ++k) prod = prod * (*letters[static_cast<std::size_t>(labels[k])]);
    total += prod;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return total;
}

// prod(multiplicities!) / l!
double multiplicity_weight(const std::vector<int>& counts) {
  int l = 0;
  double w = 1.0;
  for (int c : counts) {
    for (int k = 1; k <= c; ++k) w *= k;
    l += c;
  }
  for (int k = 2; k <= l; ++k) w /= k;
  return w;
}

int epsilon(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  return ((b - a + 3) % 3 == 1) ? 1 : -1;  // (1,2,3) and its cyclic shifts are even
}

void require_axis(int axis) {
  if (axis < 1 || axis > 3) throw DomainError("axis must be 1, 2 or 3, got " + std::to_string(axis));
}

}  // namespace

Polynomial3 simplify(const Polynomial3& poly) {
  std::map<Triple, C> acc;
  for (const auto& t : poly) {
    if (t.alpha < 0 || t.beta < 0 || t.gamma < 0) throw DomainError("Monomial3: negative exponent");
    acc[{t.alpha, t.beta, t.gamma}] += t.coefficient;
  }
  Polynomial3 out;
  for (const auto& [k, c] : acc)
    if (c != C(0.0)) out.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), c});
  return out;
}

std::complex<double> evaluate(const Polynomial3& poly, const Eigen::Vector3d& x) {
  C acc = 0.0;
  for (const auto& t : poly) acc += t.coefficient * ipow(x[0], t.alpha) * ipow(x[1], t.beta) * ipow(x[2], t.gamma);
  return acc;
}

FuzzyParams::FuzzyParams(int two_j, int two_sigma, double r) : two_j_(two_j), two_sigma_(two_sigma), r_(r) {
  if (two_j < 1) throw DomainError("FuzzyParams: need j >= 1/2");
  if (std::abs(two_sigma) > two_j || (two_j - two_sigma) % 2 != 0)
    throw DomainError("FuzzyParams: sigma must satisfy |sigma| <= j with the parity of j");
  if (!(r > 0.0)) throw DomainError("FuzzyParams: radius must be positive");
  kappa_ = r / std::sqrt(j() * (j() + 1.0));
}

OperatorMatrix sym_product(const std::vector<OperatorMatrix>& ops) {
  if (ops.empty()) throw DomainError("sym_product: empty operator list");
  std::vector<const Eigen::MatrixXcd*> letters;
  std::vector<int> labels, counts;
  for (const auto& op : ops) {
    require_same_dim(ops.front(), op);
    std::size_t k = 0;
    while (k < letters.size() && *letters[k] != op.entries()) ++k;
    if (k == letters.size()) {
      letters.push_back(&op.entries());
      counts.push_back(0);
    }
    labels.push_back(static_cast<int>(k));
    ++counts[k];
  }
  return {ops.front().two_j(),
          multiplicity_weight(counts) * distinct_sequence_sum(labels, letters, ops.front().dim())};
}

long distinct_sequence_count(const std::vector<OperatorMatrix>& ops) {
  std::vector<const Eigen::MatrixXcd*> letters;
  std::vector<int> counts;
  for (const auto& op : ops) {
    std::size_t k = 0;
    while (k < letters.size() && *letters[k] != op.entries()) ++k;
    if (k == letters.size()) {
      letters.push_back(&op.entries());
      counts.push_back(0);
    }
    ++counts[k];
  }
  return std::lround(1.0 / multiplicity_weight(counts));
}

OperatorMatrix sym_monomial(const std::array<const OperatorMatrix*, 3>& letters, const std::array<int, 3>& exponents) {
  const OperatorMatrix& first = *letters[0];
  require_same_dim(first, *letters[1]);
  require_same_dim(first, *letters[2]);
  std::vector<int> labels, counts;
  for (int a = 0; a < 3; ++a) {
    if (exponents[a] < 0) throw DomainError("sym_monomial: negative exponent");
    labels.insert(labels.end(), static_cast<std::size_t>(exponents[a]), a);
    counts.push_back(exponents[a]);
  }
  if (labels.empty()) return OperatorMatrix::identity(first.two_j());
  const std::vector<const Eigen::MatrixXcd*> mats{&letters[0]->entries(), &letters[1]->entries(),
                                                  &letters[2]->entries()};
  return {first.two_j(), multiplicity_weight(counts) * distinct_sequence_sum(labels, mats, first.dim())};
}

HatResult hat_map(const FuzzyParams& params, const Polynomial3& poly) {
  const LambdaMatrices lm = lambda_matrices(params.two_j());
  const double k = params.kappa();
  HatResult out{OperatorMatrix(params.two_j()), {}};
  auto& acc = out.matrix.mutable_entries();
  for (const auto& t : simplify(poly)) {
    if (t.degree() > params.two_j()) {
      out.truncated.push_back(t);
      continue;
    }
    const OperatorMatrix s = sym_monomial({&lm.l1, &lm.l2, &lm.l3}, {t.alpha, t.beta, t.gamma});
    acc += (t.coefficient * ipow(k, t.degree())) * s.entries();
  }
  return out;
}

Polynomial3 ylm_as_polynomial(int ell, int m) {
  if (ell < 0 || std::abs(m) > ell) throw DomainError("ylm_as_polynomial: need |m| <= ell");
  const int am = std::abs(m);
  // Legendre P_ell(z) = 2^-ell sum_k (-1)^k C(ell,k) C(2ell-2k, ell) z^(ell-2k), then d^am/dz^am.
  std::map<int, BigRational> dz;  // power of z -> coefficient
  for (int k = 0; 2 * k <= ell; ++k) {
    const int p = ell - 2 * k;
    if (p < am) continue;
    BigRational c(binomial(ell, k) * binomial(2 * ell - 2 * k, ell), BigInt(1) << ell);
    if (k % 2) c = -c;
    c *= BigRational(factorial(p) / factorial(p - am));
    dz[p - am] = c;
  }
  // (x + i y)^am * d^am P / dz^am * (x^2 + y^2 + z^2)^((ell - am - p)/2), as re/im rational parts.
  std::map<Triple, std::pair<BigRational, BigRational>> acc;
  for (int k = 0; k <= am; ++k) {
    const BigRational bin(binomial(am, k));
    for (const auto& [p, cz] : dz) {
      const int half = (ell - am - p) / 2;
      for (int u = 0; u <= half; ++u)
        for (int v = 0; u + v <= half; ++v) {
          const int w = half - u - v;
          const BigRational mult(factorial(half) / (factorial(u) * factorial(v) * factorial(w)));
          const BigRational c = bin * cz * mult;
          auto& cell = acc[{am - k + 2 * u, k + 2 * v, p + 2 * w}];
          switch (k % 4) {  // i^k
            case 0: cell.first += c; break;
            case 1: cell.second += c; break;
            case 2: cell.first -= c; break;
            default: cell.second -= c; break;
          }
        }
    }
  }
  const double norm = ((am % 2) ? -1.0 : 1.0) *
                      std::sqrt((2 * ell + 1) / (4.0 * kPi) * factorial_real<double>(ell - am) /
                                factorial_real<double>(ell + am));
  Polynomial3 out;
  for (const auto& [key, c] : acc) {
    if (c.first == 0 && c.second == 0) continue;
    C value(norm * to_double(c.first), norm * to_double(c.second));
    if (m < 0) value = ((am % 2) ? -1.0 : 1.0) * std::conj(value);
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), value});
  }
  return out;
}

HatResult hat_ylm(const FuzzyParams& params, int ell, int m) { return hat_map(params, ylm_as_polynomial(ell, m)); }

Polynomial3 orbital_action(int axis, const Polynomial3& poly) {
  require_axis(axis);
  Polynomial3 out;
  for (const auto& t : poly) {
    const std::array<int, 3> e{t.alpha, t.beta, t.gamma};
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        const int eps = epsilon(axis, b, c);
        if (eps == 0 || e[c - 1] == 0) continue;
        std::array<int, 3> f = e;
        f[c - 1] -= 1;
        f[b - 1] += 1;
        out.push_back({f[0], f[1], f[2], C(0.0, -1.0) * static_cast<double>(eps * e[c - 1]) * t.coefficient});
      }
  }
  return simplify(out);
}

namespace {

double c_of_ell_magnitude_part(const FuzzyParams& params, int ell) {
  if (params.two_sigma() == 0)
    throw DomainError(
        "C(ell) is undefined for sigma = 0: the quantized harmonics carry the factor 3j(j,j,ell;0,0,0) "
        "and the quantized cartesian coordinates vanish, so there is no ratio to the fuzzy harmonics");
  if (ell < 0 || ell > params.two_j()) throw DomainError("C(ell) needs 0 <= ell <= 2j");
  const int tj = params.two_j(), ts = params.two_sigma();
  const double three = three_j_double(ThreeJKey::from_twice(tj, tj, 2 * ell, -ts, ts, 0));
  return std::pow(2.0, ell) * (tj + 1) / std::pow(params.kappa(), ell) *
         std::sqrt(factorial_real<double>(tj - ell) / factorial_real<double>(tj + ell + 1)) * three;
}

}  // namespace

double c_of_ell_closed(const FuzzyParams& params, int ell) {
  const double mag = c_of_ell_magnitude_part(params, ell);
  const int e = (params.two_j() + params.two_sigma()) / 2 + ell;
  return (e % 2 == 0) ? mag : -mag;
}

double c_of_ell_printed(const FuzzyParams& params, int ell) {
  const double mag = c_of_ell_magnitude_part(params, ell);
  const int e = (params.two_j() + params.two_sigma()) / 2;
  return (e % 2 == 0) ? mag : -mag;
}

EmpiricalRatio c_of_ell_empirical(const FuzzyParams& params, int ell) {
  if (params.two_sigma() == 0) c_of_ell_magnitude_part(params, ell);  // throws with the explanation
  if (ell < 0 || ell > params.two_j()) throw DomainError("C(ell) needs 0 <= ell <= 2j");
  const SshParams sp(params.two_j(), params.two_sigma());
  EmpiricalRatio out{{}, 0.0, 0.0};
  for (int m = -ell; m <= ell; ++m) {
    const OperatorMatrix tilde = quantize_ylm_closed(sp, ell, m);
    const OperatorMatrix hat = hat_ylm(params, ell, m).matrix;
    Eigen::Index r = 0, c = 0;
    hat.entries().cwiseAbs().maxCoeff(&r, &c);
    out.per_m.push_back(tilde.entries()(r, c) / hat.entries()(r, c));
  }
  for (const C& a : out.per_m) {
    out.mean += a;
    for (const C& b : out.per_m) out.spread = std::max(out.spread, std::abs(a - b));
  }
  out.mean /= static_cast<double>(out.per_m.size());
  return out;
}

double symmetrization_commutator_check(HalfInt j_rep, const std::array<int, 3>& exponents, int axis) {
  require_axis(axis);
  if (exponents[0] + exponents[1] + exponents[2] > 6)
    throw DomainError("symmetrization_commutator_check: total degree above 6");
  const LambdaMatrices lm = lambda_matrices(j_rep.twice);
  const std::array<const OperatorMatrix*, 3> letters{&lm.l1, &lm.l2, &lm.l3};

  Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(lm.l1.dim(), lm.l1.dim());
  for (int b = 1; b <= 3; ++b) {
    if (exponents[b - 1] == 0) continue;
    for (int c = 1; c <= 3; ++c) {
      const int eps = epsilon(axis, b, c);
      if (eps == 0) continue;
      std::array<int, 3> e = exponents;
      e[b - 1] -= 1;
      e[c - 1] += 1;
      lhs += C(0.0, eps * exponents[b - 1]) * sym_monomial(letters, e).entries();
    }
  }
  const OperatorMatrix rhs = commutator(lm.axis(axis), sym_monomial(letters, exponents));
  return (lhs - rhs.entries()).norm();
}

std::vector<ClassicalLimitRow> classical_limit_report(HalfInt sigma_offset, const std::vector<HalfInt>& j_list,
                                                      double r) {
  if (!sigma_offset.is_integer()) throw DomainError("classical_limit_report: sigma offset must be an integer");
  std::vector<ClassicalLimitRow> rows;
  for (const HalfInt j : j_list) {
    const HalfInt sigma = j - sigma_offset;
    if (sigma.twice == 0 || std::abs(sigma.twice) > j.twice)
      throw DomainError("classical_limit_report: sigma = " + sigma.str() + " not admissible (nonzero, |sigma| <= j) for j = " +
                        j.str());
    const FuzzyParams fp(j.twice, sigma.twice, r);
    const SshParams sp(j.twice, sigma.twice);
    const LambdaMatrices lm = lambda_matrices(j.twice);
    const double k = fp.kappa();
    const OperatorMatrix comm = commutator(k * lm.l1, k * lm.l2);

    const OperatorMatrix x3 = std::sqrt(4.0 * kPi / 3.0) * quantize_ylm_closed(sp, 1, 0);
    double dev = 0.0;
    for (int s = 0; s <= 32; ++s) {
      const SpherePoint x{kPi * s / 32.0, 0.7};
      const double target = sigma.value() / (j.value() + 1.0) * std::cos(x.theta);
      dev = std::max(dev, std::abs(lower_symbol(sp, x3, x) - target));
    }
    const double norm = operator_norm(comm);
    const double ratio = rows.empty() ? std::numeric_limits<double>::quiet_NaN() : norm / rows.back().commutator_norm;
    rows.push_back({j, sigma, k, norm, r * r / (j.value() + 1.0), dev, ratio});
  }
  return rows;
}

int joint_eigenspace_dimension(int two_j, int ell, int m, double tol) {
  const LambdaMatrices lm = lambda_matrices(two_j);
  const Eigen::Index d = two_j + 1, n = d * d;
  // column-major vec: vec(AX - XA) = (I (x) A - A^T (x) I) vec X
  auto super = [&](const Eigen::MatrixXcd& a) {
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index p = 0; p < d; ++p)
      for (Eigen::Index q = 0; q < d; ++q)
        for (Eigen::Index k = 0; k < d; ++k) {
          s(q * d + p, q * d + k) += a(p, k);  // I (x) A
          s(q * d + p, k * d + p) -= a(k, q);  // A^T (x) I
        }
    return s;
  };
  const Eigen::MatrixXcd s1 = super(lm.l1.entries()), s2 = super(lm.l2.entries()), s3 = super(lm.l3.entries());
  const Eigen::MatrixXcd casimir = s1 * s1 + s2 * s2 + s3 * s3;
  Eigen::MatrixXcd stacked(2 * n, n);
  stacked << s3 - static_cast<double>(m) * Eigen::MatrixXcd::Identity(n, n),
      casimir - static_cast<double>(ell * (ell + 1)) * Eigen::MatrixXcd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
  int null_dim = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()(k) < tol) ++null_dim;
  return null_dim;
}

}  // namespace fuzzsphere
