#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace slicecalc {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Axially symmetric s-domain, described in half-plane coordinates (u, v >= 0)
// by radial bounds and a sector half-angle. This single shape covers balls,
// annuli, sectors and sector-annuli and is closed under intersection.
struct SliceDomain {
  double rmin = 0.0;
  double rmax = std::numeric_limits<double>::infinity();
  double mu = kPi;  // half-angle; pi means no angular restriction

  static SliceDomain whole() { return {}; }
  static SliceDomain ball(double r) { return {0.0, r, kPi}; }
  static SliceDomain annulus(double r0, double r1) { return {r0, r1, kPi}; }
  static SliceDomain sector(double mu_) { return {0.0, std::numeric_limits<double>::infinity(), mu_}; }
  static SliceDomain sector_annulus(double mu_, double r0, double r1) { return {r0, r1, mu_}; }

  // Membership of the sphere [u + iv]; v >= 0 expected.
  bool contains(double u, double v) const {
    double r = std::hypot(u, v);
    if (r == 0.0) return rmin == 0.0 && rmax > 0.0;
    if (r <= rmin || r >= rmax) return false;
    if (mu >= kPi) return true;
    return std::atan2(v, u) < mu;
  }

  // Whether the closed ball of the given radius lies inside the domain.
  bool contains_closed_ball(double r) const { return rmin == 0.0 && mu >= kPi && r < rmax; }

  SliceDomain intersect(const SliceDomain& o) const {
    return {std::max(rmin, o.rmin), std::min(rmax, o.rmax), std::min(mu, o.mu)};
  }

  SliceDomain scaled(double t) const {  // preimage under s -> t s
    return {rmin / t, rmax / t, mu};
  }

  std::string describe() const;
};

// Certificate |f(s)| <= c |s|^alpha / (1 + |s|^{2 alpha}) on a sector.
struct DecayBound {
  double alpha = 0.0;
  double c = 0.0;
};

// Certificate |f(s)| <= C (|s|^k + |s|^{-k}) on a sector.
struct GrowthBound {
  double k = 0.0;
  double C = 0.0;
};

}  // namespace slicecalc
