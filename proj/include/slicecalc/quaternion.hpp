#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>

#include "slicecalc/errors.hpp"

namespace slicecalc {

// Quaternion q = w + x e1 + y e2 + z e3 with e1 e2 = e3 and e_k^2 = -1.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr Quaternion(double real) : w(real) {}  // NOLINT: implicit by design, reals embed in H

  static constexpr Quaternion e1() { return {0, 1, 0, 0}; }
  static constexpr Quaternion e2() { return {0, 0, 1, 0}; }
  static constexpr Quaternion e3() { return {0, 0, 0, 1}; }

  // Splitting q = z1 + z2 e2 over the reference plane C_{e1}.
  std::complex<double> z1() const { return {w, x}; }
  std::complex<double> z2() const { return {y, z}; }
  static Quaternion from_split(std::complex<double> a, std::complex<double> b) {
    return {a.real(), a.imag(), b.real(), b.imag()};
  }

  // Lift of a complex number into the plane C_i spanned by 1 and the slice unit i.
  static Quaternion lift(std::complex<double> c, const Quaternion& i) {
    return Quaternion(c.real()) + i * c.imag();
  }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double re() const { return w; }
  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }
  double im_norm() const { return std::sqrt(x * x + y * y + z * z); }

  Quaternion inverse() const {
    double n2 = norm_sq();
    if (n2 == 0.0) throw ZeroInput("inverse of zero quaternion");
    return conj() / n2;
  }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion operator+(const Quaternion& o) const {
    return {w + o.w, x + o.x, y + o.y, z + o.z};
  }
  constexpr Quaternion operator-(const Quaternion& o) const {
    return {w - o.w, x - o.x, y - o.y, z - o.z};
  }
  constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  constexpr Quaternion operator/(double s) const { return {w / s, x / s, y / s, z / s}; }

  constexpr Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }

  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }
  Quaternion& operator*=(double s) { return *this = *this * s; }

  bool operator==(const Quaternion& o) const {
    return w == o.w && x == o.x && y == o.y && z == o.z;
  }
};

inline constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

inline double abs(const Quaternion& q) { return q.norm(); }
inline Quaternion conj(const Quaternion& q) { return q.conj(); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

// Decomposition q = u + i v with v >= 0 and i a slice unit (i^2 = -1).
// Real inputs get the default unit e1 so that results are deterministic.
struct SliceDecomposition {
  double u = 0.0;
  double v = 0.0;
  Quaternion i = Quaternion::e1();
};

SliceDecomposition slice_decompose(const Quaternion& q);

// Reassembly u + i v; inverse of slice_decompose.
inline Quaternion slice_compose(const SliceDecomposition& d) { return Quaternion(d.u) + d.i * d.v; }

// arg(s) in [0, pi], the unique angle with s = |s| e^{arg(s) i_s}. Throws on s = 0.
double arg(const Quaternion& s);

// The 2-sphere [q] = { u + i v : i in S }, stored by its half-plane representative.
struct SpectralSphere {
  double u = 0.0;
  double v = 0.0;  // >= 0
  int multiplicity = 1;
};

SpectralSphere sphere_of(const Quaternion& q);
bool sphere_contains(const SpectralSphere& sphere, const Quaternion& p, double tol = 1e-9);

// Distance between sphere representatives in half-plane coordinates.
inline double sphere_distance(const SpectralSphere& a, const SpectralSphere& b) {
  return std::hypot(a.u - b.u, a.v - b.v);
}

}  // namespace slicecalc
