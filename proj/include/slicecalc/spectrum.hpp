#pragma once

#include <vector>

#include "slicecalc/qmatrix.hpp"
#include "slicecalc/quaternion.hpp"

namespace slicecalc {

// S-spectrum of a quaternionic matrix: the set of spheres [u + iv] on which
// the pencil T^2 - 2 Re(s) T + |s|^2 I is singular, one representative per
// sphere (v >= 0) with multiplicity.
struct SSpectrum {
  std::vector<SpectralSphere> spheres;

  double spectral_radius() const;
  // Minimal sector angle containing every sphere; zero spheres are ignored
  // (0 belongs to every sector).
  double omega() const;
  double min_distance(const SpectralSphere& p) const;
  bool contains(const SpectralSphere& p, double tol) const;
};

// Spheres [lambda] over the eigenvalues of the complex adjoint. Each returned
// representative is verified against the sigma_min characterization.
SSpectrum s_spectrum(const QMatrix& T);

// Q_s(T) = (T^2 - 2 Re(s) T + |s|^2 I)^{-1}. Throws OnSpectrum.
QMatrix pseudo_resolvent(const QMatrix& T, const Quaternion& s);

// S_L^{-1}(s,T) = Q_s(T) sbar - T Q_s(T);  S_R^{-1}(s,T) = -(T - I sbar) Q_s(T).
// The scalar term acts by left multiplication v -> sbar v.
QMatrix s_resolvent_left(const QMatrix& T, const Quaternion& s);
QMatrix s_resolvent_right(const QMatrix& T, const Quaternion& s);

// Residual norm of the S-resolvent equation applied to v:
//   S_R^{-1}(s,T) S_L^{-1}(p,T) v
//     = [(S_R^{-1}(s,T) - S_L^{-1}(p,T)) p
//        - sbar (S_R^{-1}(s,T) - S_L^{-1}(p,T))] (p^2 - 2 s0 p + |s|^2)^{-1} v.
// Throws SphereCollision when s lies on [p].
double resolvent_equation_residual(const QMatrix& T, const Quaternion& s, const Quaternion& p,
                                   const QVector& v);

struct SectorSample {
  double theta = 0.0;
  double C = 0.0;            // sup over samples of |s| * max(resolvent norms)
  Quaternion witness;        // sample attaining the sup
};

struct SectorProfile {
  double omega = 0.0;
  std::vector<SectorSample> samples;
};

// omega plus empirical resolvent bounds C_theta sampled on a log-radial grid
// outside each requested sector angle.
SectorProfile classify_sector(const QMatrix& T, const std::vector<double>& thetas,
                              int n_radii = 60, int n_angles = 24);

}  // namespace slicecalc
