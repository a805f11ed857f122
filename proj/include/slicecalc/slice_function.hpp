#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "slicecalc/clifford.hpp"
#include "slicecalc/errors.hpp"
#include "slicecalc/quaternion.hpp"
#include "slicecalc/slice_domain.hpp"

namespace slicecalc {

using Complex = std::complex<double>;
using StemFn = std::function<Complex(Complex)>;

enum class Side { Intrinsic, Left, Right };

// Exact polynomial coefficients per stem component, ascending degree.
struct PolyData {
  std::vector<std::vector<Complex>> comps;
  int degree() const;
};

// Intrinsic rational P/Q with real coefficients, ascending degree.
struct RationalData {
  std::vector<double> num;
  std::vector<double> den;
};

// A slice hyperholomorphic function represented by its holomorphic stem
// components on the reference plane C_{e1}. A function over the algebra with
// n generators (n = 2 is the quaternionic case via H ~ R_2) carries 2^{n-1}
// stems F_A indexed by subsets A of the completion units {e_2, ..., e_n}:
// the restriction to the reference plane is
//     f(u + e1 v) = sum_A F_A(u + iv) e_A        (left / intrinsic)
//     f(u + e1 v) = sum_A e_A F_A(u + iv)        (right)
// and values elsewhere come from the representation formula.
class SliceFunction {
public:
  SliceFunction() = default;
  SliceFunction(Side side, int n, SliceDomain domain, std::vector<StemFn> stems);

  Side side() const { return side_; }
  bool intrinsic() const { return side_ == Side::Intrinsic; }
  int generators() const { return n_; }
  int components() const { return static_cast<int>(stems_.size()); }
  const SliceDomain& domain() const { return domain_; }

  // Whether the function can be evaluated over any algebra: a single-stem
  // intrinsic function is algebra-generic.
  bool algebra_generic() const { return intrinsic() && components() == 1; }

  Complex stem(int comp, Complex z) const;

  const std::optional<PolyData>& poly() const { return poly_; }
  const std::optional<RationalData>& rational() const { return rational_; }
  int psi_power() const { return psi_power_; }

  const std::optional<DecayBound>& decay() const { return decay_; }
  double decay_mu() const { return decay_mu_; }
  const std::optional<GrowthBound>& growth() const { return growth_; }
  double growth_mu() const { return growth_mu_; }

  SliceFunction& with_poly(PolyData p);
  SliceFunction& with_rational(RationalData r);
  SliceFunction& with_psi_power(int k);
  SliceFunction& with_decay(DecayBound b, double valid_mu);
  SliceFunction& with_growth(GrowthBound b, double valid_mu);
  SliceFunction& with_domain(SliceDomain d);
  SliceFunction& with_zero_threshold_degree(int deg);

  int zero_threshold_degree() const { return zero_deg_hint_; }

private:
  Side side_ = Side::Intrinsic;
  int n_ = 2;
  SliceDomain domain_ = SliceDomain::whole();
  std::vector<StemFn> stems_;
  std::optional<PolyData> poly_;
  std::optional<RationalData> rational_;
  int psi_power_ = 0;
  std::optional<DecayBound> decay_;
  double decay_mu_ = 0.0;
  std::optional<GrowthBound> growth_;
  double growth_mu_ = 0.0;
  int zero_deg_hint_ = 1;
};

// Evaluation via the representation formula. Throws OutOfDomain when the
// sphere of the argument is not contained in the domain.
Quaternion eval(const SliceFunction& f, const Quaternion& q);
CliffordElement eval(const SliceFunction& f, const Paravector& x);

// Value of an intrinsic function on a slice, identified with C.
Complex eval_intrinsic(const SliceFunction& f, Complex z);

// Slice hyperholomorphic product. Defined for pairs of left (or intrinsic)
// functions and pairs of right (or intrinsic) functions; mixing left and
// right sides is an error.
SliceFunction star_mul(const SliceFunction& f, const SliceFunction& g);

// Slice hyperholomorphic conjugate f^c.
SliceFunction conjugate(const SliceFunction& f);

// Symmetrization f^s: the scalar part of f * f^c; always intrinsic.
SliceFunction symmetrize(const SliceFunction& f);

// Star inverse f^{-*} = (f^s)^{-1} f^c, defined off the zero set of f^s.
// For non-intrinsic functions over n >= 3 generators the construction needs
// f_i * f_i^c to be C_i-valued; this is checked on sample points and
// ConditionViolated is thrown when it fails.
SliceFunction star_inv(const SliceFunction& f);

// Cauchy kernels. Throw OnSpectrumSphere when q lies on the sphere [s].
Quaternion cauchy_kernel_left(const Quaternion& s, const Quaternion& q);
Quaternion cauchy_kernel_right(const Quaternion& s, const Quaternion& q);
CliffordElement cauchy_kernel_left(const Paravector& s, const Paravector& x);
CliffordElement cauchy_kernel_right(const Paravector& s, const Paravector& x);

// Pole spheres of a rational function (complex roots of the denominator).
std::vector<SpectralSphere> rational_poles(const SliceFunction& f);
std::vector<SpectralSphere> real_poly_roots_as_spheres(const std::vector<double>& coeffs);

// f(t s) for t > 0.
SliceFunction scale_argument(const SliceFunction& f, double t);

// Finite-difference residual of the stem Cauchy-Riemann operator d/d(conj z).
double holomorphy_residual(const SliceFunction& f, int comp, Complex z, double h = 1e-5);

namespace catalog {

SliceFunction one();
SliceFunction constant(double c);
SliceFunction pow(int m);                                  // s^m, m >= 0
SliceFunction poly_real(const std::vector<double>& coeffs);
SliceFunction poly_quat(const std::vector<Quaternion>& coeffs, Side side);
SliceFunction rational(const std::vector<double>& num, const std::vector<double>& den);
SliceFunction psi(int k);         // (s / (1 + s^2))^k
SliceFunction frac_pow(double alpha);  // principal branch s^alpha on the slit sector
SliceFunction exp_neg();          // e^{-s}, bounded on sectors mu < pi/2

}  // namespace catalog

// Empirical growth classification on the sector S_mu^0, on a log-radial by
// angular sample grid. Reported constants satisfy their inequality on every
// sample; they are estimates, not proofs.
struct ClassifyOptions {
  int n_radii = 40;
  int n_angles = 33;
  double rmin = 1e-4;
  double rmax = 1e4;
};

struct ClassifyReport {
  bool in_psi = false;
  DecayBound psi_bound;
  Complex psi_witness;  // sample point violating decay, when in_psi is false

  bool in_shinf = false;
  double sup_norm = 0.0;
  Complex shinf_witness;

  bool in_f = false;
  GrowthBound f_bound;

  double slope_at_zero = 0.0;
  double slope_at_infinity = 0.0;
};

ClassifyReport classify(const SliceFunction& f, double mu, const ClassifyOptions& opts = {});

}  // namespace slicecalc
