#include "slicecalc/quaternion.hpp"

#include <ostream>

namespace slicecalc {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

SliceDecomposition slice_decompose(const Quaternion& q) {
  SliceDecomposition d;
  d.u = q.w;
  d.v = q.im_norm();
  if (d.v > 0.0) {
    d.i = Quaternion{0, q.x, q.y, q.z} / d.v;
  }
  return d;
}

double arg(const Quaternion& s) {
  if (s.norm_sq() == 0.0) throw ZeroInput("arg of zero");
  return std::atan2(s.im_norm(), s.re());
}

SpectralSphere sphere_of(const Quaternion& q) { return {q.re(), q.im_norm(), 1}; }

bool sphere_contains(const SpectralSphere& sphere, const Quaternion& p, double tol) {
  return std::abs(p.re() - sphere.u) <= tol && std::abs(p.im_norm() - sphere.v) <= tol;
}

}  // namespace slicecalc
