#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicecalc/contour.hpp"
#include "slicecalc/qmatrix.hpp"
#include "slicecalc/slice_function.hpp"
#include "slicecalc/spectrum.hpp"

namespace slicecalc {

enum class CalculusMethod { Contour, SectorContour, Rational, Hinf, EigenOracle };

std::string to_string(CalculusMethod m);

struct CalculusOptions {
  Quaternion slice_unit = Quaternion::e1();
  std::optional<double> theta;           // sector path angle, omega < theta < mu
  std::optional<double> mu;              // sector the integrand is analytic on
  std::optional<double> eps;             // sector path inner radius
  std::optional<double> R;               // sector path outer radius
  int panels_per_decade = 12;
  int gl_order = 8;
  int circle_nodes = 256;
  std::optional<double> circle_radius;
  std::optional<int> regularizer_k;      // growth exponent override for hinf
  double convergence_tol = 1e-9;         // relative change accepted under refinement
  bool adaptive = true;
};

struct CalculusDiagnostics {
  double omega = 0.0;
  double theta = 0.0;
  double head_estimate = 0.0;
  double tail_estimate = 0.0;
  double refine_delta = 0.0;
  int nodes = 0;
  int regularizer_k = 0;
  double regularizer_cond = 0.0;
  bool possibly_unbounded = false;
  std::string notes;
};

struct CalculusReport {
  QMatrix result;
  CalculusMethod method = CalculusMethod::Contour;
  CalculusDiagnostics diagnostics;
};

// Bounded S-functional calculus: closed circle around the whole S-spectrum.
// Agrees with direct polynomial evaluation for polynomials.
CalculusReport bounded_calculus(const SliceFunction& f, const QMatrix& T,
                                const CalculusOptions& opts = {});

// S-functional calculus for (finite-dimensional models of) operators of type
// omega: sector-boundary path, integrand of class Psi.
CalculusReport omega_calculus(const SliceFunction& f, const QMatrix& T,
                              const CalculusOptions& opts = {});

// Intrinsic rational calculus R(T) = P(T) Q(T)^{-1} = Q(T)^{-1} P(T).
CalculusReport rational_calculus(const SliceFunction& f, const QMatrix& T);

// H^infinity calculus by regularization: f(T) = psi(T)^{-1} (psi f)(T) with
// psi(s) = (s/(1+s^2))^{k+1}.
CalculusReport hinf_calculus(const SliceFunction& f, const QMatrix& T,
                             const CalculusOptions& opts = {});

// Independent verification path: apply the stem of an intrinsic function to
// the eigenvalues of the complex adjoint in its eigenbasis.
QMatrix eigen_oracle(const SliceFunction& f, const QMatrix& T);

// Direct evaluation of a polynomial in T: sum T^l a_l (left coefficients act
// after the power, i.e. as scalar matrices on the right factor).
QMatrix poly_apply(const std::vector<Quaternion>& coeffs, const QMatrix& T, Side side);

// || (psi phi)(T) - psi(T) phi(T) || with everything through the sector calculus.
double verify_product_rule(const SliceFunction& psi, const SliceFunction& phi, const QMatrix& T,
                           const CalculusOptions& opts = {});

// || f(T)_{k1} - f(T)_{k2} || / max(1, ||f(T)_{k1}||) across regularizer exponents.
double verify_regularizer_independence(const SliceFunction& f, const QMatrix& T, int k1, int k2,
                                       const CalculusOptions& opts = {});

struct SumProductReport {
  double sum_residual = 0.0;
  double product_residual = 0.0;
};

// Finite-dimensional form of the sum/product inclusions (equalities here).
SumProductReport verify_sum_product_subset(const SliceFunction& f, const SliceFunction& g,
                                           const QMatrix& T, const CalculusOptions& opts = {});

// Hausdorff distance between psi(sigma_S(T)) and sigma_S(psi(T)).
double verify_spectral_mapping(const SliceFunction& psi, const QMatrix& T);

double hausdorff_distance(const std::vector<SpectralSphere>& a,
                          const std::vector<SpectralSphere>& b);

struct ConvergenceReport {
  std::vector<double> errors;       // ||f_j(T)u - f(T)u|| per sequence member
  double uniform_bound = 0.0;       // max_j ||f_j(T)||
  double grid_sup_final = 0.0;      // sup |f_j - f| on the annulus grid, last j
  double limit_norm = 0.0;          // ||f(T)||
  bool errors_decreasing = false;
  bool bound_respected = false;     // ||f(T)|| <= M (1 + tol)
  bool passed = false;
};

// Empirical check of the convergence theorem hypotheses and conclusion.
ConvergenceReport convergence_check(const std::vector<SliceFunction>& seq,
                                    const SliceFunction& limit, const QMatrix& T, const QVector& u,
                                    double tol, const CalculusOptions& opts = {});

}  // namespace slicecalc
