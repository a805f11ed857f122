#pragma once

#include <cstdint>
#include <optional>

#include "slicecalc/calculus.hpp"
#include "slicecalc/qmatrix.hpp"
#include "slicecalc/slice_function.hpp"

namespace slicecalc {

struct QuadraticOptions {
  double eps = 1e-6;   // scaled by 1 / ||T||
  double R = 1e6;      // scaled by 1 / ||T||
  int panels_per_decade = 20;
  int gl_order = 8;
  bool scale_by_norm = true;
};

struct QuadraticResult {
  double value = 0.0;       // int_eps^R ||psi(tT) u||^2 dt/t
  double head_estimate = 0.0;
  double tail_estimate = 0.0;
  double refine_delta = 0.0;
};

// Quadratic estimate integrand for one vector. psi must be intrinsic, of
// class Psi on a sector containing the spectrum, and positive on (0, inf).
QuadraticResult quadratic_integral(const QMatrix& T, const SliceFunction& psi, const QVector& u,
                                   const QuadraticOptions& opts = {});

// beta estimate: max over random unit vectors of sqrt(quadratic_integral).
// Deterministic given the seed.
double estimate_beta(const QMatrix& T, const SliceFunction& psi, int trials, std::uint64_t seed,
                     bool adjoint = false, const QuadraticOptions& opts = {});

struct HinfBoundReport {
  double beta = 0.0;
  double beta_adjoint = 0.0;
  double f_norm = 0.0;      // ||f(T)||
  double f_sup = 0.0;       // ||f||_inf on the working sector
  double ratio = 0.0;       // f_norm / f_sup
  bool within_bound = false;
};

// Empirical check of ||f(T)|| <= C ||f||_inf under quadratic estimates.
HinfBoundReport hinf_bound_check(const QMatrix& T, const SliceFunction& f, double C,
                                 int beta_trials = 4, std::uint64_t seed = 1,
                                 const CalculusOptions& copts = {},
                                 const QuadraticOptions& qopts = {});

}  // namespace slicecalc
