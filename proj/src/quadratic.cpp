#include "slicecalc/quadratic.hpp"

#include <cmath>

#include "slicecalc/rng.hpp"

namespace slicecalc {

namespace {

void require_psi_plus(const SliceFunction& psi) {
  if (!psi.intrinsic()) throw NotPsiPlus("psi must be intrinsic");
  for (double t : {1e-3, 0.04, 0.31, 1.0, 3.7, 29.0, 1e3}) {
    Complex v = psi.stem(0, Complex{t, 0.0});
    if (!(v.real() > 0.0) || std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real()))) {
      throw NotPsiPlus("psi is not positive on (0, inf) at t = " + std::to_string(t));
    }
  }
  if (!psi.decay()) {
    ClassifyReport rep = classify(psi, kPi / 4);
    if (!rep.in_psi) throw NotPsiPlus("psi is not of class Psi");
  }
}

QMatrix psi_of_tT(const SliceFunction& psi, const QMatrix& T, double t) {
  if (psi.rational()) return rational_calculus(psi, T * t).result;
  CalculusOptions opts;
  return omega_calculus(psi, T * t, opts).result;
}

double integrate_log_grid(const QMatrix& T, const SliceFunction& psi, const QVector& u,
                          double eps, double R, int panels_per_decade, int gl_order) {
  std::vector<double> gx, gw;
  gauss_legendre(gl_order, gx, gw);
  const double x0 = std::log(eps);
  const double x1 = std::log(R);
  const int panels =
      std::max(4, static_cast<int>(std::ceil((x1 - x0) / std::log(10.0) * panels_per_decade)));
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    double a = x0 + (x1 - x0) * p / panels;
    double b = x0 + (x1 - x0) * (p + 1) / panels;
    double half = 0.5 * (b - a);
    double mid = 0.5 * (a + b);
    for (int k = 0; k < gl_order; ++k) {
      double t = std::exp(mid + half * gx[static_cast<std::size_t>(k)]);
      double nrm = vec_norm(psi_of_tT(psi, T, t) * u);
      acc += half * gw[static_cast<std::size_t>(k)] * nrm * nrm;
    }
  }
  return acc;
}

}  // namespace

QuadraticResult quadratic_integral(const QMatrix& T, const SliceFunction& psi, const QVector& u,
                                   const QuadraticOptions& opts) {
  require_psi_plus(psi);
  if (vec_norm(u) == 0.0) return {};

  double scale = opts.scale_by_norm ? 1.0 / std::max(op_norm(T), 1e-12) : 1.0;
  double eps = opts.eps * scale;
  double R = opts.R * scale;

  QuadraticResult out;
  out.value = integrate_log_grid(T, psi, u, eps, R, opts.panels_per_decade, opts.gl_order);
  double coarse = integrate_log_grid(T, psi, u, eps, R, opts.panels_per_decade / 2, opts.gl_order);
  out.refine_delta = std::abs(out.value - coarse);

  // endpoint remainders: ||psi(tT)u||^2 ~ decays like t^{2 alpha} at 0 and
  // t^{-2 alpha} at infinity for Psi integrands
  double head_val = vec_norm(psi_of_tT(psi, T, eps) * u);
  double tail_val = vec_norm(psi_of_tT(psi, T, R) * u);
  double alpha = psi.decay() ? psi.decay()->alpha : 1.0;
  out.head_estimate = head_val * head_val / (2.0 * alpha);
  out.tail_estimate = tail_val * tail_val / (2.0 * alpha);
  return out;
}

double estimate_beta(const QMatrix& T, const SliceFunction& psi, int trials, std::uint64_t seed,
                     bool adjoint, const QuadraticOptions& opts) {
  if (trials < 1) throw ParseError("estimate_beta needs at least one trial");
  QMatrix M = adjoint ? T.adjoint() : T;
  Rng rng(seed);
  double beta_sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    QVector u(static_cast<std::size_t>(M.size()));
    double n = 0.0;
    while (n < 1e-9) {
      for (auto& q : u) q = rng.quaternion();
      n = vec_norm(u);
    }
    for (auto& q : u) q = q / n;
    beta_sq = std::max(beta_sq, quadratic_integral(M, psi, u, opts).value);
  }
  return std::sqrt(beta_sq);
}

HinfBoundReport hinf_bound_check(const QMatrix& T, const SliceFunction& f, double C,
                                 int beta_trials, std::uint64_t seed,
                                 const CalculusOptions& copts, const QuadraticOptions& qopts) {
  HinfBoundReport rep;
  SliceFunction psi1 = catalog::psi(1);
  rep.beta = estimate_beta(T, psi1, beta_trials, seed, false, qopts);
  rep.beta_adjoint = estimate_beta(T, psi1, beta_trials, seed + 1, true, qopts);

  rep.f_norm = op_norm(hinf_calculus(f, T, copts).result);
  SSpectrum spec = s_spectrum(T);
  double mu_work = std::min(f.domain().mu, kPi / 2 * (1.0 - 1e-9));
  if (!(spec.omega() < mu_work)) throw NotTypeOmega("omega too large for the bound check");
  ClassifyReport cls = classify(f, mu_work);
  if (!cls.in_shinf) throw NotInFClass("f is not bounded on the working sector");
  rep.f_sup = cls.sup_norm;
  rep.ratio = rep.f_norm / rep.f_sup;
  rep.within_bound = rep.f_norm <= C * rep.f_sup * (1.0 + 1e-9) + 1e-12;
  return rep;
}

}  // namespace slicecalc
