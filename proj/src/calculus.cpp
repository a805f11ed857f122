#include "slicecalc/calculus.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace slicecalc {

std::string to_string(CalculusMethod m) {
  switch (m) {
    case CalculusMethod::Contour: return "contour";
    case CalculusMethod::SectorContour: return "sector";
    case CalculusMethod::Rational: return "rational";
    case CalculusMethod::Hinf: return "hinf";
    case CalculusMethod::EigenOracle: return "oracle";
  }
  return "?";
}

namespace {

double path_tolerance(const QMatrix& T) { return 1e-9 * (1.0 + op_norm(T)); }

QMatrix integrate_by_side(const Contour& c, const QMatrix& T, const SliceFunction& f,
                          const SSpectrum& spec, double tol) {
  if (f.side() == Side::Right) return integrate_right(c, T, f, &spec, tol);
  return integrate_left(c, T, f, &spec, tol);
}

// Crude resolvent-scale estimate max |s| * ||S_L^{-1}(s,T)|| over a few nodes,
// used only for the reported head/tail truncation estimates.
double resolvent_scale_estimate(const QMatrix& T, const Contour& c) {
  double best = 0.0;
  std::size_t stride = std::max<std::size_t>(1, c.nodes.size() / 7);
  for (std::size_t k = 0; k < c.nodes.size(); k += stride) {
    Quaternion s = c.point(k);
    best = std::max(best, s.norm() * op_norm(s_resolvent_left(T, s)));
  }
  return best;
}

double endpoint_decay_estimate(const SliceFunction& f, const Contour& c, bool at_head,
                               double c_theta) {
  // |f| at the two extreme radii of the ray, local slope, integral remainder
  double r1 = at_head ? c.eps : c.R;
  double r2 = at_head ? c.eps * 10.0 : c.R / 10.0;
  auto val = [&](double r) {
    Complex z = std::polar(r, c.theta);
    if (f.algebra_generic()) return std::abs(f.stem(0, z));
    return eval(f, Quaternion::lift(z, Quaternion::e1())).norm();
  };
  double v1 = val(r1);
  double v2 = val(r2);
  double slope = std::log(std::max(v2, 1e-300) / std::max(v1, 1e-300)) / std::log(r2 / r1);
  double alpha = at_head ? std::max(slope, 0.1) : std::max(-slope, 0.1);
  return c_theta * v1 / alpha;
}

}  // namespace

QMatrix poly_apply(const std::vector<Quaternion>& coeffs, const QMatrix& T, Side side) {
  const int m = T.size();
  QMatrix acc(m);
  QMatrix power = QMatrix::identity(m);
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    if (l > 0) power = power * T;
    if (coeffs[l].norm_sq() == 0.0) continue;
    if (side == Side::Right) {
      acc += power.left_scalar(coeffs[l]);  // sum a_l T^l
    } else {
      acc += power.right_scalar(coeffs[l]);  // sum T^l a_l
    }
  }
  return acc;
}

CalculusReport bounded_calculus(const SliceFunction& f, const QMatrix& T,
                                const CalculusOptions& opts) {
  SSpectrum spec = s_spectrum(T);
  double rho = spec.spectral_radius();

  double r_cap = f.domain().rmax;
  for (const auto& pole : rational_poles(f)) {
    r_cap = std::min(r_cap, std::hypot(pole.u, pole.v));
  }
  if (f.domain().rmin > 0.0 || f.domain().mu < kPi) {
    throw DomainTooSmall("function domain does not contain a ball around the spectrum");
  }
  if (rho >= r_cap) {
    throw DomainTooSmall("spectral radius " + std::to_string(rho) +
                         " reaches the function domain boundary");
  }
  double r;
  if (opts.circle_radius) {
    r = *opts.circle_radius;
    if (r <= rho || r >= r_cap) throw DomainTooSmall("requested circle radius is inadmissible");
  } else if (rho == 0.0) {
    r = std::isfinite(r_cap) ? 0.5 * r_cap : 1.0;
  } else {
    r = (2.0 * rho < r_cap) ? 2.0 * rho : 0.5 * (rho + r_cap);
  }

  const double tol = path_tolerance(T);
  Contour c = build_circle(opts.slice_unit, r, opts.circle_nodes);
  QMatrix result = integrate_by_side(c, T, f, spec, tol);
  CalculusReport rep;
  rep.method = CalculusMethod::Contour;
  rep.diagnostics.omega = spec.omega();
  rep.diagnostics.nodes = static_cast<int>(c.nodes.size());
  if (opts.adaptive) {
    Contour c2 = build_circle(opts.slice_unit, r, 2 * opts.circle_nodes);
    QMatrix r2 = integrate_by_side(c2, T, f, spec, tol);
    double delta = op_norm(r2 - result);
    rep.diagnostics.refine_delta = delta;
    rep.diagnostics.nodes = static_cast<int>(c2.nodes.size());
    if (delta > opts.convergence_tol * (1.0 + op_norm(r2))) {
      throw ConvergenceFailure("circle quadrature did not settle under refinement (delta " +
                               std::to_string(delta) + ")");
    }
    result = r2;
  }
  rep.result = result;
  return rep;
}

namespace {

struct SectorSetup {
  double theta;
  double eps;
  double R;
};

SectorSetup sector_setup(const SliceFunction& f, const QMatrix& T, const SSpectrum& spec,
                         const CalculusOptions& opts, double extra_mu_cap) {
  double omega = spec.omega();
  double mu_limit = std::min({f.domain().mu, kPi, extra_mu_cap});
  if (opts.mu) mu_limit = std::min(mu_limit, *opts.mu);
  if (f.rational()) {
    for (const auto& pole : rational_poles(f)) {
      double pa = std::atan2(pole.v, pole.u);
      if (pa > omega) mu_limit = std::min(mu_limit, pa);
      else throw NotInPsiClass("pole of the integrand inside every admissible sector");
    }
  } else if (!opts.mu) {
    // unknown singularity structure: stay inside the right half sector,
    // where every catalog Psi-class integrand is analytic
    mu_limit = std::min(mu_limit, kPi / 2 * (1.0 - 1e-9));
  }
  if (!(omega < mu_limit)) {
    throw NotTypeOmega("no admissible sector: omega = " + std::to_string(omega));
  }
  double theta = opts.theta ? *opts.theta : 0.5 * (omega + mu_limit);
  if (!(theta > omega) || !(theta < mu_limit)) {
    throw NotTypeOmega("path angle must satisfy omega < theta < mu");
  }
  double scale = std::max(op_norm(T), 1e-3);
  double eps = opts.eps ? *opts.eps : 1e-8 * scale;
  double R = opts.R ? *opts.R : 1e8 * scale;
  if (!(eps > 0.0) || !(eps < R)) throw ParseError("invalid sector path radii");
  return {theta, eps, R};
}

void require_psi_class(const SliceFunction& f, double theta, double mu_limit) {
  if (f.decay() && f.decay_mu() >= theta) return;
  double mu_class = std::min(mu_limit, theta + 0.25 * (mu_limit - theta));
  ClassifyReport rep = classify(f, mu_class);
  if (!rep.in_psi) {
    throw NotInPsiClass("integrand not of class Psi on the sector (witness near |s| = " +
                        std::to_string(std::abs(rep.psi_witness)) + ")");
  }
}

}  // namespace

CalculusReport omega_calculus(const SliceFunction& f, const QMatrix& T,
                              const CalculusOptions& opts) {
  SSpectrum spec = s_spectrum(T);
  SectorSetup setup = sector_setup(f, T, spec, opts, kPi);

  double mu_limit = std::min(f.domain().mu, kPi);
  require_psi_class(f, setup.theta, mu_limit);

  const double tol = path_tolerance(T);
  Contour c = build_sector_path(opts.slice_unit, setup.theta, setup.eps, setup.R,
                                opts.panels_per_decade, opts.gl_order);
  QMatrix result = integrate_by_side(c, T, f, spec, tol);

  CalculusReport rep;
  rep.method = CalculusMethod::SectorContour;
  rep.diagnostics.omega = spec.omega();
  rep.diagnostics.theta = setup.theta;
  rep.diagnostics.nodes = static_cast<int>(c.nodes.size());

  double c_theta = resolvent_scale_estimate(T, c);
  if (f.decay() && f.decay_mu() >= setup.theta) {
    estimate_truncation(c, *f.decay(), c_theta);
    rep.diagnostics.head_estimate = c.head_estimate;
    rep.diagnostics.tail_estimate = c.tail_estimate;
  } else {
    rep.diagnostics.head_estimate = endpoint_decay_estimate(f, c, true, c_theta) / (2.0 * kPi);
    rep.diagnostics.tail_estimate = endpoint_decay_estimate(f, c, false, c_theta) / (2.0 * kPi);
  }

  if (opts.adaptive) {
    Contour c2 = build_sector_path(opts.slice_unit, setup.theta, setup.eps, setup.R,
                                   2 * opts.panels_per_decade, opts.gl_order);
    QMatrix r2 = integrate_by_side(c2, T, f, spec, tol);
    double delta = op_norm(r2 - result);
    rep.diagnostics.refine_delta = delta;
    rep.diagnostics.nodes = static_cast<int>(c2.nodes.size());
    if (delta > opts.convergence_tol * (1.0 + op_norm(r2))) {
      throw ConvergenceFailure("sector quadrature did not settle under refinement (delta " +
                               std::to_string(delta) + ")");
    }
    result = r2;
  }
  rep.result = result;
  return rep;
}

CalculusReport rational_calculus(const SliceFunction& f, const QMatrix& T) {
  if (!f.intrinsic()) throw SideMismatch("rational calculus needs an intrinsic function");
  if (!f.rational()) throw ParseError("function carries no rational representation");

  SSpectrum spec = s_spectrum(T);
  const double tol = 1e-8 * (1.0 + spec.spectral_radius());
  for (const auto& pole : rational_poles(f)) {
    if (spec.min_distance(pole) <= tol) {
      throw PoleOnSpectrum("pole sphere (" + std::to_string(pole.u) + ", " +
                           std::to_string(pole.v) + ") meets the S-spectrum");
    }
  }

  CalculusReport rep;
  rep.method = CalculusMethod::Rational;
  rep.diagnostics.omega = spec.omega();

  const int m = T.size();
  if (f.psi_power() > 0) {
    // psi(T) = (T (I + T^2)^{-1})^k
    QMatrix base = T * qinv(QMatrix::identity(m) + T * T);
    QMatrix acc = QMatrix::identity(m);
    for (int i = 0; i < f.psi_power(); ++i) acc = acc * base;
    rep.result = acc;
    rep.diagnostics.regularizer_cond = cond(QMatrix::identity(m) + T * T);
    return rep;
  }

  std::vector<Quaternion> num(f.rational()->num.begin(), f.rational()->num.end());
  std::vector<Quaternion> den(f.rational()->den.begin(), f.rational()->den.end());
  QMatrix P = poly_apply(num, T, Side::Left);
  QMatrix Q = poly_apply(den, T, Side::Left);
  rep.diagnostics.regularizer_cond = cond(Q);
  rep.result = qinv(Q) * P;
  return rep;
}

QMatrix eigen_oracle(const SliceFunction& f, const QMatrix& T) {
  if (!f.intrinsic()) throw SideMismatch("eigen oracle needs an intrinsic function");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(embed(T), /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success) throw EigenFailure("eigenvalue solve failed");
  Eigen::MatrixXcd V = es.eigenvectors();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(V);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-9 * sv(0)) {
    throw DefectiveMatrix("eigenvector basis is numerically defective");
  }
  Eigen::VectorXcd vals(es.eigenvalues().size());
  for (int i = 0; i < vals.size(); ++i) {
    Complex lam = es.eigenvalues()(i);
    SliceDecomposition d{lam.real(), std::abs(lam.imag()), Quaternion::e1()};
    if (!f.domain().contains(d.u, d.v)) {
      throw OutOfDomain("eigenvalue outside the function domain");
    }
    // intrinsic stems satisfy F(conj z) = conj F(z); evaluate in the half
    // plane of the eigenvalue itself to keep conjugate pairs exactly paired
    vals(i) = f.stem(0, lam);
  }
  Eigen::MatrixXcd X = V * vals.asDiagonal() * V.inverse();
  return unembed(X, 1e-6);
}

namespace {

int growth_exponent_for(const SliceFunction& f, double mu_work) {
  if (f.growth() && f.growth_mu() >= mu_work) {
    return std::max(1, static_cast<int>(std::ceil(f.growth()->k - 1e-12)));
  }
  ClassifyReport rep = classify(f, mu_work);
  if (!rep.in_f) throw NotInFClass("function is not polynomially bounded on the sector");
  return std::max(1, static_cast<int>(std::ceil(rep.f_bound.k - 1e-12)));
}

}  // namespace

CalculusReport hinf_calculus(const SliceFunction& f, const QMatrix& T,
                             const CalculusOptions& opts) {
  SSpectrum spec = s_spectrum(T);
  double omega = spec.omega();
  const double scale = 1.0 + spec.spectral_radius();

  // T must be injective with dense range (invertible here), and the
  // regularizer pole sphere [i] must avoid the S-spectrum.
  if (spec.min_distance({0.0, 0.0, 1}) <= 1e-8 * scale) {
    throw RegularizerSingular("0 lies in the S-spectrum");
  }
  if (spec.min_distance({0.0, 1.0, 1}) <= 1e-8 * scale) {
    throw RegularizerSingular("the sphere [i] meets the S-spectrum");
  }

  double mu_work = std::min(f.domain().mu, kPi / 2 * (1.0 - 1e-9));
  if (!(omega < mu_work)) {
    throw NotTypeOmega("hinf with the rational regularizer needs omega < pi/2");
  }

  int k = opts.regularizer_k ? *opts.regularizer_k : growth_exponent_for(f, mu_work);
  int k_min = growth_exponent_for(f, mu_work);
  if (k < k_min) throw HypothesisFailed("regularizer exponent below the growth exponent");

  SliceFunction psi = catalog::psi(k + 1);
  SliceFunction psif = star_mul(psi, f);

  CalculusOptions inner = opts;
  inner.regularizer_k.reset();
  if (!inner.theta) {
    inner.theta = 0.5 * (omega + mu_work);
  }
  CalculusReport reg = omega_calculus(psif, T, inner);
  CalculusReport rat = rational_calculus(psi, T);

  double c = cond(rat.result);
  CalculusReport rep;
  rep.method = CalculusMethod::Hinf;
  rep.result = qinv(rat.result) * reg.result;
  rep.diagnostics = reg.diagnostics;
  rep.diagnostics.regularizer_k = k;
  rep.diagnostics.regularizer_cond = c;
  rep.diagnostics.possibly_unbounded = c > 1e8;
  if (rep.diagnostics.possibly_unbounded) {
    rep.diagnostics.notes = "regularizer nearly singular; unbounded analog suspected";
  }
  return rep;
}

double verify_product_rule(const SliceFunction& psi, const SliceFunction& phi, const QMatrix& T,
                           const CalculusOptions& opts) {
  if (!psi.intrinsic()) throw SideMismatch("product rule needs an intrinsic first factor");
  SliceFunction prod = star_mul(psi, phi);
  QMatrix lhs = omega_calculus(prod, T, opts).result;
  QMatrix rhs = omega_calculus(psi, T, opts).result * omega_calculus(phi, T, opts).result;
  return op_norm(lhs - rhs);
}

double verify_regularizer_independence(const SliceFunction& f, const QMatrix& T, int k1, int k2,
                                       const CalculusOptions& opts) {
  CalculusOptions o1 = opts;
  o1.regularizer_k = k1;
  CalculusOptions o2 = opts;
  o2.regularizer_k = k2;
  QMatrix a = hinf_calculus(f, T, o1).result;
  QMatrix b = hinf_calculus(f, T, o2).result;
  return op_norm(a - b) / std::max(1.0, op_norm(a));
}

SumProductReport verify_sum_product_subset(const SliceFunction& f, const SliceFunction& g,
                                           const QMatrix& T, const CalculusOptions& opts) {
  if (!f.intrinsic() || !g.intrinsic()) {
    throw SideMismatch("sum/product verification expects intrinsic functions");
  }
  QMatrix fT = hinf_calculus(f, T, opts).result;
  QMatrix gT = hinf_calculus(g, T, opts).result;

  SliceFunction sum(Side::Intrinsic, 2, f.domain().intersect(g.domain()),
                    {[f, g](Complex z) { return f.stem(0, z) + g.stem(0, z); }});
  if (f.growth() && g.growth()) {
    sum.with_growth({std::max(f.growth()->k, g.growth()->k), f.growth()->C + g.growth()->C},
                    std::min(f.growth_mu(), g.growth_mu()));
  }
  SliceFunction prod = star_mul(f, g);

  SumProductReport rep;
  rep.sum_residual = op_norm(hinf_calculus(sum, T, opts).result - (fT + gT));
  rep.product_residual = op_norm(hinf_calculus(prod, T, opts).result - fT * gT);
  return rep;
}

double hausdorff_distance(const std::vector<SpectralSphere>& a,
                          const std::vector<SpectralSphere>& b) {
  auto one_sided = [](const std::vector<SpectralSphere>& xs, const std::vector<SpectralSphere>& ys) {
    double worst = 0.0;
    for (const auto& x : xs) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& y : ys) best = std::min(best, sphere_distance(x, y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  return std::max(one_sided(a, b), one_sided(b, a));
}

double verify_spectral_mapping(const SliceFunction& psi, const QMatrix& T) {
  if (!psi.intrinsic()) throw SideMismatch("spectral mapping holds for intrinsic functions");
  SSpectrum spec = s_spectrum(T);
  std::vector<SpectralSphere> mapped;
  for (const auto& s : spec.spheres) {
    Complex w = psi.stem(0, Complex{s.u, s.v});
    mapped.push_back({w.real(), std::abs(w.imag()), s.multiplicity});
  }
  QMatrix psiT = rational_calculus(psi, T).result;
  SSpectrum image = s_spectrum(psiT);
  return hausdorff_distance(mapped, image.spheres);
}

ConvergenceReport convergence_check(const std::vector<SliceFunction>& seq,
                                    const SliceFunction& limit, const QMatrix& T, const QVector& u,
                                    double tol, const CalculusOptions& opts) {
  if (seq.empty()) throw ParseError("empty function sequence");
  ConvergenceReport rep;

  auto apply = [&](const SliceFunction& f) -> QMatrix {
    if (f.rational() && f.intrinsic()) return rational_calculus(f, T).result;
    return hinf_calculus(f, T, opts).result;
  };

  QMatrix fT = apply(limit);
  rep.limit_norm = op_norm(fT);
  QVector fu = fT * u;

  SSpectrum spec = s_spectrum(T);
  double rho = std::max(spec.spectral_radius(), 1e-3);
  const int grid_n = 24;

  double prev_err = std::numeric_limits<double>::infinity();
  rep.errors_decreasing = true;
  for (const auto& fj : seq) {
    QMatrix fjT = apply(fj);
    rep.uniform_bound = std::max(rep.uniform_bound, op_norm(fjT));
    double err = vec_norm(fjT * u - fu);
    rep.errors.push_back(err);
    if (err > prev_err * (1.0 + 1e-12)) rep.errors_decreasing = false;
    prev_err = err;

    double sup = 0.0;
    for (int i = 0; i < grid_n; ++i) {
      double r = 1e-3 * rho * std::pow(1e6, static_cast<double>(i) / (grid_n - 1));
      Complex z{r, 0.0};
      sup = std::max(sup, std::abs(fj.stem(0, z) - limit.stem(0, z)));
    }
    rep.grid_sup_final = sup;
  }
  // max_j ||f_j(T)|| over a finite net approaches the uniform bound from
  // below; allow finite-net slack before declaring the hypothesis violated
  rep.bound_respected = rep.limit_norm <= rep.uniform_bound * (1.0 + 1e-3) + tol;
  rep.passed = rep.errors_decreasing && rep.bound_respected && rep.errors.back() <= tol;
  if (rep.limit_norm > rep.uniform_bound * 1.05 + tol) {
    throw HypothesisFailed("||f(T)|| exceeds the uniform bound of the sequence");
  }
  return rep;
}

}  // namespace slicecalc
