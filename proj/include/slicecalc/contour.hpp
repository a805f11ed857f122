#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "slicecalc/qmatrix.hpp"
#include "slicecalc/slice_function.hpp"
#include "slicecalc/spectrum.hpp"

namespace slicecalc {

// Quadrature node on a path in a slice plane. `s` is the node in C_i and `w`
// encodes the oriented measure ds_i = -i ds, so that the discrete analogue of
// int g(s) ds_i h(s) is sum g(s_k) w_k h(s_k) with w_k lifted into C_i.
struct ContourNode {
  Complex s;
  Complex w;
};

struct Contour {
  enum class Kind { Circle, SectorPath };

  Kind kind = Kind::Circle;
  Quaternion slice_unit = Quaternion::e1();
  double radius = 0.0;          // circle
  double theta = 0.0;           // sector path ray angle
  double eps = 0.0;             // sector path inner radius
  double R = 0.0;               // sector path outer radius
  std::vector<ContourNode> nodes;

  // Estimated truncation contributions for sector paths, from the decay of
  // the integrand at the endpoints; reported, never silently dropped.
  double head_estimate = 0.0;
  double tail_estimate = 0.0;

  Quaternion point(std::size_t k) const {
    return Quaternion::lift(nodes[k].s, slice_unit);
  }
};

// Positively oriented circle of radius r, trapezoidal nodes (spectrally
// accurate for integrands analytic in an annulus around the circle).
Contour build_circle(const Quaternion& slice_unit, double r, int n_nodes);

// Path from R e^{i theta} inward to eps e^{i theta}, across the chord to
// eps e^{-i theta}, then outward to R e^{-i theta}; Gauss-Legendre panels,
// log-spaced in radius on the rays.
Contour build_sector_path(const Quaternion& slice_unit, double theta, double eps, double R,
                          int panels_per_decade = 12, int gl_order = 8);

// Truncation bounds for a Psi-class integrand against a resolvent scaled by
// C_theta/|s|: head <= C c eps^alpha / (2 pi alpha) and
// tail <= C c R^{-alpha} / (2 pi alpha). Stores them on the contour.
void estimate_truncation(Contour& c, const DecayBound& decay, double c_theta);

// (1/2pi) sum S_L^{-1}(s_k, T) w_k f(s_k)  — factor order is fixed.
// When a spectrum is supplied, any node within `tol` of a spectral sphere
// raises PathHitsSpectrum.
QMatrix integrate_left(const Contour& c, const QMatrix& T, const SliceFunction& f,
                       const SSpectrum* spectrum = nullptr, double tol = 1e-9);

// (1/2pi) sum f(s_k) w_k S_R^{-1}(s_k, T).
QMatrix integrate_right(const Contour& c, const QMatrix& T, const SliceFunction& f,
                        const SSpectrum* spectrum = nullptr, double tol = 1e-9);

// Scalar contour integral (1/2pi) sum S_L^{-1}(s_k, q) w_k f(s_k) used to
// reproduce function values from the Cauchy formula.
Quaternion cauchy_reproduce(const Contour& c, const Quaternion& q, const SliceFunction& f);

// Scalar integral sum g(s_k) w_k over the contour, for quadrature tests.
Complex integrate_scalar(const Contour& c, const std::function<Complex(Complex)>& g);

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace slicecalc
