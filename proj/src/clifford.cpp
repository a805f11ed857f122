#include "slicecalc/clifford.hpp"

#include <ostream>

namespace slicecalc {

namespace {

void check_dim(int n) {
  if (n < 1 || n > CliffordElement::kMaxDim) {
    throw DimensionMismatch("Clifford dimension must be in [1, 5], got " + std::to_string(n));
  }
}

}  // namespace

CliffordElement::CliffordElement(int n) : n_(n) {
  check_dim(n);
  c_.assign(std::size_t{1} << n, 0.0);
}

CliffordElement::CliffordElement(int n, std::vector<double> coeffs) : n_(n), c_(std::move(coeffs)) {
  check_dim(n);
  if (c_.size() != (std::size_t{1} << n)) {
    throw DimensionMismatch("expected 2^n coefficients");
  }
}

CliffordElement CliffordElement::scalar(int n, double value) {
  CliffordElement a(n);
  a.c_[0] = value;
  return a;
}

CliffordElement CliffordElement::basis(int n, std::uint32_t mask) {
  CliffordElement a(n);
  if (mask >= a.c_.size()) throw DimensionMismatch("blade mask out of range");
  a.c_[mask] = 1.0;
  return a;
}

CliffordElement CliffordElement::generator(int n, int j) {
  if (j < 1 || j > n) throw DimensionMismatch("generator index out of range");
  return basis(n, std::uint32_t{1} << (j - 1));
}

double CliffordElement::norm() const {
  double s = 0.0;
  for (double v : c_) s += v * v;
  return std::sqrt(s);
}

CliffordElement CliffordElement::conj() const {
  CliffordElement out(n_);
  for (std::uint32_t a = 0; a < c_.size(); ++a) {
    int k = std::popcount(a);
    double sgn = ((k * (k + 1) / 2) & 1) ? -1.0 : 1.0;
    out.c_[a] = sgn * c_[a];
  }
  return out;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement out(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
  return out;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  if (n_ != o.n_) throw DimensionMismatch("Clifford dimension mismatch in +");
  CliffordElement out(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
  return out;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
  if (n_ != o.n_) throw DimensionMismatch("Clifford dimension mismatch in -");
  CliffordElement out(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
  return out;
}

CliffordElement CliffordElement::operator*(double s) const {
  CliffordElement out(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * s;
  return out;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
  if (n_ != o.n_) throw DimensionMismatch("Clifford dimension mismatch in *");
  CliffordElement out(n_);
  for (std::uint32_t a = 0; a < c_.size(); ++a) {
    if (c_[a] == 0.0) continue;
    for (std::uint32_t b = 0; b < o.c_.size(); ++b) {
      if (o.c_[b] == 0.0) continue;
      out.c_[a ^ b] += blade_sign(a, b) * c_[a] * o.c_[b];
    }
  }
  return out;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  return *this = *this + o;
}

std::ostream& operator<<(std::ostream& os, const CliffordElement& a) {
  os << "[";
  for (int i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << a[static_cast<std::uint32_t>(i)];
  }
  return os << "]";
}

Paravector::Paravector(int n_in, std::vector<double> coeffs) : n(n_in), c(std::move(coeffs)) {
  check_dim(n);
  if (c.size() != static_cast<std::size_t>(n + 1)) {
    throw DimensionMismatch("paravector needs n+1 coefficients");
  }
}

Paravector Paravector::real(int n, double value) {
  Paravector p(n);
  p.c[0] = value;
  return p;
}

Paravector Paravector::unit(int n, int j) {
  if (j < 1 || j > n) throw DimensionMismatch("paravector unit index out of range");
  Paravector p(n);
  p.c[j] = 1.0;
  return p;
}

double Paravector::norm_sq() const {
  double s = 0.0;
  for (double v : c) s += v * v;
  return s;
}

double Paravector::im_norm() const {
  double s = 0.0;
  for (int j = 1; j <= n; ++j) s += c[j] * c[j];
  return std::sqrt(s);
}

Paravector Paravector::conj() const {
  Paravector out(n);
  out.c[0] = c[0];
  for (int j = 1; j <= n; ++j) out.c[j] = -c[j];
  return out;
}

Paravector Paravector::operator-() const {
  Paravector out(n);
  for (int j = 0; j <= n; ++j) out.c[j] = -c[j];
  return out;
}

Paravector Paravector::operator+(const Paravector& o) const {
  if (n != o.n) throw DimensionMismatch("paravector dimension mismatch");
  Paravector out(n);
  for (int j = 0; j <= n; ++j) out.c[j] = c[j] + o.c[j];
  return out;
}

Paravector Paravector::operator-(const Paravector& o) const {
  if (n != o.n) throw DimensionMismatch("paravector dimension mismatch");
  Paravector out(n);
  for (int j = 0; j <= n; ++j) out.c[j] = c[j] - o.c[j];
  return out;
}

Paravector Paravector::operator*(double s) const {
  Paravector out(n);
  for (int j = 0; j <= n; ++j) out.c[j] = c[j] * s;
  return out;
}

CliffordElement Paravector::to_clifford() const {
  CliffordElement a(n);
  a[0] = c[0];
  for (int j = 1; j <= n; ++j) a[std::uint32_t{1} << (j - 1)] = c[j];
  return a;
}

CliffordElement operator*(const Paravector& a, const Paravector& b) {
  return a.to_clifford() * b.to_clifford();
}

std::ostream& operator<<(std::ostream& os, const Paravector& p) {
  os << "(";
  for (int j = 0; j <= p.n; ++j) {
    if (j) os << ", ";
    os << p.c[j];
  }
  return os << ")";
}

ParavectorDecomposition slice_decompose(const Paravector& x) {
  ParavectorDecomposition d;
  d.u = x.c[0];
  d.v = x.im_norm();
  d.i = Paravector::unit(x.n, 1);
  if (d.v > 0.0) {
    Paravector im = x;
    im.c[0] = 0.0;
    d.i = im * (1.0 / d.v);
  }
  return d;
}

Paravector slice_compose(const ParavectorDecomposition& d) {
  return Paravector::real(d.i.n, d.u) + d.i * d.v;
}

double arg(const Paravector& s) {
  if (s.norm_sq() == 0.0) throw ZeroInput("arg of zero");
  return std::atan2(s.im_norm(), s.re());
}

SpectralSphere sphere_of(const Paravector& x) { return {x.re(), x.im_norm(), 1}; }

bool sphere_contains(const SpectralSphere& sphere, const Paravector& p, double tol) {
  return std::abs(p.re() - sphere.u) <= tol && std::abs(p.im_norm() - sphere.v) <= tol;
}

CliffordElement quaternion_to_r2(const Quaternion& q) {
  return CliffordElement(2, {q.w, q.x, q.y, q.z});
}

Quaternion r2_to_quaternion(const CliffordElement& a) {
  if (a.dim() != 2) throw DimensionMismatch("expected an R_2 element");
  return {a[0b00], a[0b01], a[0b10], a[0b11]};
}

}  // namespace slicecalc
