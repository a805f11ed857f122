#pragma once

#include <Eigen/Dense>
#include <vector>

#include "slicecalc/errors.hpp"
#include "slicecalc/quaternion.hpp"

namespace slicecalc {

using QVector = std::vector<Quaternion>;

// Quaternionic m x m matrix acting right-linearly on H^m: A(v q) = (A v) q.
// Scalar multiples of the identity act by left multiplication v -> s v,
// realized by scalar_matrix(m, s).
class QMatrix {
public:
  QMatrix() = default;
  explicit QMatrix(int m) : m_(m), a_(static_cast<std::size_t>(m) * m) {}

  static QMatrix identity(int m);
  static QMatrix zero(int m) { return QMatrix(m); }
  static QMatrix diag(const QVector& d);
  // I * s: diagonal matrix with entry s, the right-linear realization of a
  // scalar multiple of the identity.
  static QMatrix scalar_matrix(int m, const Quaternion& s);

  int size() const { return m_; }

  Quaternion& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * m_ + j]; }
  const Quaternion& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * m_ + j];
  }

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator-() const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(double s) const;
  QVector operator*(const QVector& v) const;

  QMatrix& operator+=(const QMatrix& o) { return *this = *this + o; }
  QMatrix& operator-=(const QMatrix& o) { return *this = *this - o; }

  // Entrywise left/right multiplication by a quaternion scalar; left_scalar(s)
  // equals scalar_matrix(m, s) * A, right_scalar(s) equals A * scalar_matrix(m, s).
  QMatrix left_scalar(const Quaternion& s) const;
  QMatrix right_scalar(const Quaternion& s) const;

  QMatrix adjoint() const;  // conjugate transpose

  double frobenius_norm() const;
  double max_abs() const;

private:
  int m_ = 0;
  QVector a_;
};

inline QMatrix operator*(double s, const QMatrix& A) { return A * s; }

// Complex adjoint over the reference plane C_{e1} with perpendicular unit e2:
// entry q = z1 + z2 e2 maps to the block matrix [[Z1, -Z2], [conj Z2, conj Z1]].
// The map is real-linear, injective, multiplicative, and *-compatible.
Eigen::MatrixXcd embed(const QMatrix& A);
Eigen::VectorXcd embed_vector(const QVector& v);

// Inverse of embed; throws DimensionMismatch/ConditionViolated when the input
// lacks the block symmetry pattern (checked to `tol` relative).
QMatrix unembed(const Eigen::MatrixXcd& X, double tol = 1e-9);
QVector unembed_vector(const Eigen::VectorXcd& x);

// Largest singular value of embed(A).
double op_norm(const QMatrix& A);

// sigma_max / sigma_min of the embedding; infinity when singular.
double cond(const QMatrix& A);

// Solve A x = b. Throws Singular when sigma_min < 1e-12 * sigma_max.
QVector qsolve(const QMatrix& A, const QVector& b);
QMatrix qinv(const QMatrix& A);

// <x, y> = sum_k conj(y_k) x_k; right-linear in x: <x a, y> = <x, y> a.
Quaternion inner(const QVector& x, const QVector& y);
double vec_norm(const QVector& x);

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const QVector& v, const Quaternion& s);  // componentwise right mult

}  // namespace slicecalc
