#include "slicecalc/qmatrix.hpp"

#include <cmath>

namespace slicecalc {

namespace {
constexpr double kSingularRatio = 1e-12;  // sigma_min / sigma_max floor

void check_same_size(const QMatrix& a, const QMatrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch("matrix size mismatch");
}
}  // namespace

QMatrix QMatrix::identity(int m) {
  QMatrix a(m);
  for (int i = 0; i < m; ++i) a(i, i) = Quaternion(1.0);
  return a;
}

QMatrix QMatrix::diag(const QVector& d) {
  QMatrix a(static_cast<int>(d.size()));
  for (int i = 0; i < a.m_; ++i) a(i, i) = d[static_cast<std::size_t>(i)];
  return a;
}

QMatrix QMatrix::scalar_matrix(int m, const Quaternion& s) {
  QMatrix a(m);
  for (int i = 0; i < m; ++i) a(i, i) = s;
  return a;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  check_same_size(*this, o);
  QMatrix out(m_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + o.a_[k];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  check_same_size(*this, o);
  QMatrix out(m_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - o.a_[k];
  return out;
}

QMatrix QMatrix::operator-() const {
  QMatrix out(m_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = -a_[k];
  return out;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  check_same_size(*this, o);
  QMatrix out(m_);
  for (int i = 0; i < m_; ++i) {
    for (int l = 0; l < m_; ++l) {
      const Quaternion& ail = (*this)(i, l);
      if (ail.norm_sq() == 0.0) continue;
      for (int j = 0; j < m_; ++j) out(i, j) += ail * o(l, j);
    }
  }
  return out;
}

QMatrix QMatrix::operator*(double s) const {
  QMatrix out(m_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * s;
  return out;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (static_cast<int>(v.size()) != m_) throw DimensionMismatch("matvec size mismatch");
  QVector out(static_cast<std::size_t>(m_));
  for (int i = 0; i < m_; ++i) {
    Quaternion acc;
    for (int j = 0; j < m_; ++j) acc += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

QMatrix QMatrix::left_scalar(const Quaternion& s) const {
  QMatrix out(m_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = s * a_[k];
  return out;
}

QMatrix QMatrix::right_scalar(const Quaternion& s) const {
  QMatrix out(m_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * s;
  return out;
}

QMatrix QMatrix::adjoint() const {
  QMatrix out(m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) out(i, j) = (*this)(j, i).conj();
  return out;
}

double QMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& q : a_) s += q.norm_sq();
  return std::sqrt(s);
}

double QMatrix::max_abs() const {
  double s = 0.0;
  for (const auto& q : a_) s = std::max(s, q.norm());
  return s;
}

Eigen::MatrixXcd embed(const QMatrix& A) {
  const int m = A.size();
  Eigen::MatrixXcd X(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      auto z1 = A(i, j).z1();
      auto z2 = A(i, j).z2();
      X(i, j) = z1;
      X(i, m + j) = -z2;
      X(m + i, j) = std::conj(z2);
      X(m + i, m + j) = std::conj(z1);
    }
  }
  return X;
}

Eigen::VectorXcd embed_vector(const QVector& v) {
  const int m = static_cast<int>(v.size());
  Eigen::VectorXcd x(2 * m);
  for (int i = 0; i < m; ++i) {
    x(i) = v[static_cast<std::size_t>(i)].z1();
    x(m + i) = std::conj(v[static_cast<std::size_t>(i)].z2());
  }
  return x;
}

QMatrix unembed(const Eigen::MatrixXcd& X, double tol) {
  if (X.rows() != X.cols() || X.rows() % 2 != 0) {
    throw DimensionMismatch("unembed expects an even square matrix");
  }
  const int m = static_cast<int>(X.rows()) / 2;
  const double scale = std::max(1.0, X.norm());
  double defect = 0.0;
  QMatrix A(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      auto z1 = 0.5 * (X(i, j) + std::conj(X(m + i, m + j)));
      auto z2 = 0.5 * (-X(i, m + j) + std::conj(X(m + i, j)));
      defect = std::max(defect, std::abs(X(i, j) - std::conj(X(m + i, m + j))));
      defect = std::max(defect, std::abs(X(i, m + j) + std::conj(X(m + i, j))));
      A(i, j) = Quaternion::from_split(z1, z2);
    }
  }
  if (defect > tol * scale) {
    throw ConditionViolated("matrix lacks the quaternionic block symmetry (defect " +
                            std::to_string(defect) + ")");
  }
  return A;
}

QVector unembed_vector(const Eigen::VectorXcd& x) {
  if (x.size() % 2 != 0) throw DimensionMismatch("unembed_vector expects even length");
  const int m = static_cast<int>(x.size()) / 2;
  QVector v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    v[static_cast<std::size_t>(i)] = Quaternion::from_split(x(i), std::conj(x(m + i)));
  }
  return v;
}

double op_norm(const QMatrix& A) {
  if (A.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(embed(A));
  return svd.singularValues()(0);
}

double cond(const QMatrix& A) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(embed(A));
  const auto& s = svd.singularValues();
  double smin = s(s.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

namespace {

Eigen::PartialPivLU<Eigen::MatrixXcd> checked_lu(const QMatrix& A) {
  Eigen::MatrixXcd X = embed(A);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(X);
  const auto& s = svd.singularValues();
  if (s(s.size() - 1) < kSingularRatio * s(0) || s(0) == 0.0) {
    throw Singular("sigma_min/sigma_max below 1e-12");
  }
  return Eigen::PartialPivLU<Eigen::MatrixXcd>(X);
}

}  // namespace

QVector qsolve(const QMatrix& A, const QVector& b) {
  if (A.size() != static_cast<int>(b.size())) throw DimensionMismatch("qsolve size mismatch");
  auto lu = checked_lu(A);
  return unembed_vector(lu.solve(embed_vector(b)));
}

QMatrix qinv(const QMatrix& A) {
  auto lu = checked_lu(A);
  Eigen::MatrixXcd inv = lu.solve(Eigen::MatrixXcd::Identity(2 * A.size(), 2 * A.size()));
  return unembed(inv, 1e-6);
}

Quaternion inner(const QVector& x, const QVector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("inner product length mismatch");
  Quaternion acc;
  for (std::size_t k = 0; k < x.size(); ++k) acc += y[k].conj() * x[k];
  return acc;
}

double vec_norm(const QVector& x) {
  double s = 0.0;
  for (const auto& q : x) s += q.norm_sq();
  return std::sqrt(s);
}

QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  QVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  QVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

QVector operator*(const QVector& v, const Quaternion& s) {
  QVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] * s;
  return out;
}

}  // namespace slicecalc
