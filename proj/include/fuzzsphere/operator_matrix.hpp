#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "fuzzsphere/errors.hpp"
#include "fuzzsphere/half_int.hpp"

namespace fuzzsphere {

/// Operator on the (2j+1)-dimensional space spanned by the spin harmonics,
/// as a dense complex matrix. Row/column index is mu + j, so mu ascends from -j.
template <typename Scalar>
class BasicOperatorMatrix {
 public:
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

  BasicOperatorMatrix() = default;
  explicit BasicOperatorMatrix(int two_j) : two_j_(check_two_j(two_j)), entries_(Matrix::Zero(two_j + 1, two_j + 1)) {}
  BasicOperatorMatrix(int two_j, Matrix entries) : two_j_(check_two_j(two_j)), entries_(std::move(entries)) {
    if (entries_.rows() != two_j + 1 || entries_.cols() != two_j + 1)
      throw DimensionMismatch("OperatorMatrix: entries are " + std::to_string(entries_.rows()) + "x" +
                              std::to_string(entries_.cols()) + ", expected " + std::to_string(two_j + 1));
  }

  static BasicOperatorMatrix identity(int two_j) { return {two_j, Matrix::Identity(two_j + 1, two_j + 1)}; }
  static BasicOperatorMatrix zero(int two_j) { return BasicOperatorMatrix(two_j); }

  int two_j() const { return two_j_; }
  Eigen::Index dim() const { return two_j_ + 1; }

  const Matrix& entries() const { return entries_; }
  /// Mutable access drops the Hermitian flag.
  Matrix& mutable_entries() {
    hermitian_ = false;
    return entries_;
  }

  Complex operator()(HalfInt mu, HalfInt nu) const { return entries_(index(mu), index(nu)); }

  bool hermitian() const { return hermitian_; }

  /// max |A - A^dagger| entry.
  Scalar hermiticity_residual() const { return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff(); }

  /// If the Hermiticity residual is below `tol`, replace the entries by
  /// (A + A^dagger)/2 and set the flag. Returns whether the flag was set.
  bool symmetrize_if_hermitian(Scalar tol) {
    if (hermiticity_residual() >= tol) return false;
    entries_ = (entries_ + entries_.adjoint()).eval() / Scalar(2);
    hermitian_ = true;
    return true;
  }

 private:
  static int check_two_j(int two_j) {
    if (two_j < 0) throw DomainError("OperatorMatrix: negative two_j");
    return two_j;
  }
  Eigen::Index index(HalfInt mu) const {
    if (((mu.twice + two_j_) % 2) != 0 || mu.twice < -two_j_ || mu.twice > two_j_)
      throw DomainError("OperatorMatrix: index " + mu.str() + " outside -j..j");
    return (mu.twice + two_j_) / 2;
  }

  int two_j_ = 0;
  Matrix entries_ = Matrix::Zero(1, 1);
  bool hermitian_ = false;
};

using OperatorMatrix = BasicOperatorMatrix<double>;

template <typename Scalar>
void require_same_dim(const BasicOperatorMatrix<Scalar>& a, const BasicOperatorMatrix<Scalar>& b) {
  if (a.two_j() != b.two_j())
    throw DimensionMismatch("operator dimensions differ: 2j=" + std::to_string(a.two_j()) + " vs 2j=" +
                            std::to_string(b.two_j()));
}

template <typename Scalar>
BasicOperatorMatrix<Scalar> operator+(const BasicOperatorMatrix<Scalar>& a, const BasicOperatorMatrix<Scalar>& b) {
  require_same_dim(a, b);
  return {a.two_j(), a.entries() + b.entries()};
}

template <typename Scalar>
BasicOperatorMatrix<Scalar> operator-(const BasicOperatorMatrix<Scalar>& a, const BasicOperatorMatrix<Scalar>& b) {
  require_same_dim(a, b);
  return {a.two_j(), a.entries() - b.entries()};
}

template <typename Scalar>
BasicOperatorMatrix<Scalar> operator*(const BasicOperatorMatrix<Scalar>& a, const BasicOperatorMatrix<Scalar>& b) {
  require_same_dim(a, b);
  return {a.two_j(), a.entries() * b.entries()};
}

template <typename Scalar>
BasicOperatorMatrix<Scalar> operator*(std::complex<Scalar> s, const BasicOperatorMatrix<Scalar>& a) {
  return {a.two_j(), s * a.entries()};
}

template <typename Scalar>
BasicOperatorMatrix<Scalar> operator*(Scalar s, const BasicOperatorMatrix<Scalar>& a) {
  return {a.two_j(), s * a.entries()};
}

template <typename Scalar>
BasicOperatorMatrix<Scalar> adjoint(const BasicOperatorMatrix<Scalar>& a) {
  return {a.two_j(), a.entries().adjoint()};
}

/// [A, B] = AB - BA
template <typename Scalar>
BasicOperatorMatrix<Scalar> commutator(const BasicOperatorMatrix<Scalar>& a, const BasicOperatorMatrix<Scalar>& b) {
  require_same_dim(a, b);
  return {a.two_j(), a.entries() * b.entries() - b.entries() * a.entries()};
}

/// max |A - B| over entries.
template <typename Scalar>
Scalar max_abs_diff(const BasicOperatorMatrix<Scalar>& a, const BasicOperatorMatrix<Scalar>& b) {
  require_same_dim(a, b);
  return (a.entries() - b.entries()).cwiseAbs().maxCoeff();
}

template <typename Scalar>
Scalar max_abs(const BasicOperatorMatrix<Scalar>& a) {
  return a.entries().cwiseAbs().maxCoeff();
}

/// Largest singular value.
template <typename Scalar>
Scalar operator_norm(const BasicOperatorMatrix<Scalar>& a) {
  Eigen::JacobiSVD<typename BasicOperatorMatrix<Scalar>::Matrix> svd(a.entries());
  return svd.singularValues()(0);
}

}  // namespace fuzzsphere
