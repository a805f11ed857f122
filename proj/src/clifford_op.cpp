#include "slicecalc/clifford_op.hpp"

#include <cmath>

namespace slicecalc {

namespace {
constexpr int kMaxRepSize = 512;
}

ParavectorOperator::ParavectorOperator(int n, std::vector<RealMatrix> components)
    : n_(n), comp_(std::move(components)) {
  if (n_ < 1 || n_ > 4) throw DimensionMismatch("paravector operator needs 1 <= n <= 4");
  if (comp_.size() != static_cast<std::size_t>(n_) + 1) {
    throw DimensionMismatch("paravector operator needs n+1 components");
  }
  m_ = static_cast<int>(comp_[0].rows());
  for (const auto& c : comp_) {
    if (c.rows() != m_ || c.cols() != m_) {
      throw DimensionMismatch("paravector components must be square of equal size");
    }
  }
  if (rep_size() > kMaxRepSize) {
    throw DimensionMismatch("representation size m 2^n exceeds the 512 guard");
  }
}

double ParavectorOperator::component_norm_sum() const {
  double s = 0.0;
  for (const auto& c : comp_) {
    Eigen::JacobiSVD<RealMatrix> svd(c);
    if (svd.singularValues().size() > 0) s += svd.singularValues()(0);
  }
  return s;
}

RealMatrix to_real_matrix(const ParavectorOperator& T) {
  const int n = T.clifford_dim();
  const int m = T.base_size();
  const int blocks = 1 << n;
  RealMatrix M = RealMatrix::Zero(T.rep_size(), T.rep_size());
  for (int j = 0; j <= n; ++j) {
    const std::uint32_t amask = j == 0 ? 0u : (std::uint32_t{1} << (j - 1));
    for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(blocks); ++b) {
      const std::uint32_t c = amask ^ b;
      const double sign = blade_sign(amask, b);
      M.block(static_cast<int>(c) * m, static_cast<int>(b) * m, m, m) += sign * T.component(j);
    }
  }
  return M;
}

RealMatrix left_mult_matrix(const CliffordElement& a, int m) {
  const int blocks = a.size();
  RealMatrix M = RealMatrix::Zero(blocks * m, blocks * m);
  for (std::uint32_t amask = 0; amask < static_cast<std::uint32_t>(blocks); ++amask) {
    const double ca = a[amask];
    if (ca == 0.0) continue;
    for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(blocks); ++b) {
      const std::uint32_t c = amask ^ b;
      M.block(static_cast<int>(c) * m, static_cast<int>(b) * m, m, m) +=
          blade_sign(amask, b) * ca * RealMatrix::Identity(m, m);
    }
  }
  return M;
}

RealMatrix left_mult_matrix(const Paravector& s, int m) {
  return left_mult_matrix(s.to_clifford(), m);
}

namespace {

RealMatrix real_pencil(const RealMatrix& M, double u, double norm_sq) {
  const int n = static_cast<int>(M.rows());
  return M * M - 2.0 * u * M + norm_sq * RealMatrix::Identity(n, n);
}

double real_sigma_min(const RealMatrix& M) {
  Eigen::JacobiSVD<RealMatrix> svd(M);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

double real_op_norm(const RealMatrix& M) {
  Eigen::JacobiSVD<RealMatrix> svd(M);
  return svd.singularValues()(0);
}

}  // namespace

SSpectrum real_matrix_s_spectrum(const RealMatrix& M) {
  Eigen::EigenSolver<RealMatrix> es(M, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw EigenFailure("real eigenvalue solve failed");
  const double scale = std::max(1.0, M.norm());
  const double tol = 1e-9 * scale;

  SSpectrum out;
  std::vector<int> counts;
  std::vector<int> pair_counts;  // samples with Im != 0
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double u = es.eigenvalues()(i).real();
    double vraw = es.eigenvalues()(i).imag();
    double v = std::abs(vraw);
    bool merged = false;
    for (std::size_t k = 0; k < out.spheres.size(); ++k) {
      if (std::hypot(out.spheres[k].u - u, out.spheres[k].v - v) <= tol) {
        counts[k] += 1;
        pair_counts[k] += (v > tol) ? 1 : 0;
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.spheres.push_back({u, v, 0});
      counts.push_back(1);
      pair_counts.push_back((v > tol) ? 1 : 0);
    }
  }
  for (std::size_t k = 0; k < out.spheres.size(); ++k) {
    // complex eigenvalues come in conjugate pairs and map to one sphere
    out.spheres[k].multiplicity =
        pair_counts[k] > 0 ? std::max(1, counts[k] / 2) : counts[k];
  }
  std::sort(out.spheres.begin(), out.spheres.end(), [](const auto& a, const auto& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return out;
}

SSpectrum clifford_s_spectrum(const ParavectorOperator& T) {
  RealMatrix M = to_real_matrix(T);
  SSpectrum spec = real_matrix_s_spectrum(M);
  const double scale = std::max(1.0, real_op_norm(M));
  for (const auto& s : spec.spheres) {
    double smin = real_sigma_min(real_pencil(M, s.u, s.u * s.u + s.v * s.v));
    if (smin > 1e-8 * scale * scale) {
      throw EigenFailure("clifford sphere representative failed the sigma_min verification");
    }
  }
  return spec;
}

RealMatrix clifford_pseudo_resolvent(const RealMatrix& M, const Paravector& s) {
  RealMatrix P = real_pencil(M, s.re(), s.norm_sq());
  Eigen::FullPivLU<RealMatrix> lu(P);
  if (!lu.isInvertible()) throw OnSpectrum("pseudo-resolvent pencil is singular at s");
  return lu.inverse();
}

CliffordResolvents clifford_resolvents(const ParavectorOperator& T, const Paravector& s) {
  RealMatrix M = to_real_matrix(T);
  RealMatrix Q = clifford_pseudo_resolvent(M, s);
  RealMatrix Ls = left_mult_matrix(s.conj(), T.base_size());
  CliffordResolvents out;
  out.left = Q * Ls - M * Q;
  out.right = -(M - Ls) * Q;
  return out;
}

double clifford_resolvent_equation_residual(const ParavectorOperator& T, const Paravector& s,
                                            const Paravector& p, const RealVector& v) {
  if (sphere_contains(sphere_of(p), s, 1e-10 * (1.0 + p.norm()))) {
    throw SphereCollision("s lies on the sphere [p]");
  }
  const int m = T.base_size();
  RealMatrix M = to_real_matrix(T);
  RealMatrix Qs = clifford_pseudo_resolvent(M, s);
  RealMatrix Qp = clifford_pseudo_resolvent(M, p);
  RealMatrix Lsbar = left_mult_matrix(s.conj(), m);
  RealMatrix Lp = left_mult_matrix(p, m);

  RealMatrix SR = -(M - Lsbar) * Qs;
  RealMatrix SL = Qp * left_mult_matrix(p.conj(), m) - M * Qp;

  RealVector lhs = SR * (SL * v);

  // c = p^2 - 2 s0 p + |s|^2 is an invertible element of C_{i_p}
  CliffordElement c = p.to_clifford() * p.to_clifford() +
                      (p * (-2.0 * s.re())).to_clifford() +
                      CliffordElement::scalar(p.n, s.norm_sq());
  Paravector cpv(p.n);
  cpv.c[0] = c[0];
  for (int j = 1; j <= p.n; ++j) cpv.c[j] = c[std::uint32_t{1} << (j - 1)];
  double n2 = cpv.norm_sq();
  if (n2 == 0.0) throw SphereCollision("degenerate pencil scalar");
  RealMatrix Lcinv = left_mult_matrix(cpv.conj() * (1.0 / n2), m);

  RealMatrix D = SR - SL;
  RealVector w = Lcinv * v;
  RealVector rhs = D * (Lp * w) - Lsbar * (D * w);
  return (lhs - rhs).norm();
}

namespace {

// Lift of a slice value a + b i into the left-multiplication representation.
RealMatrix lift_mult(Complex value, const Paravector& unit, int m) {
  Paravector p = unit * value.imag();
  p.c[0] += value.real();
  return left_mult_matrix(p, m);
}

CliffordElement eval_on(const SliceFunction& f, const Paravector& x) { return eval(f, x); }

struct RealIntegrator {
  const ParavectorOperator& T;
  RealMatrix M;
  Paravector unit;
  SSpectrum spec;
  double tol;

  RealMatrix left_sum(const Contour& c, const SliceFunction& f) const {
    const int m = T.base_size();
    RealMatrix acc = RealMatrix::Zero(M.rows(), M.cols());
    for (const auto& node : c.nodes) {
      SpectralSphere nodal{node.s.real(), std::abs(node.s.imag()), 1};
      if (spec.contains(nodal, tol)) {
        throw PathHitsSpectrum("contour node within tolerance of a spectral sphere");
      }
      Paravector s = unit * node.s.imag();
      s.c[0] += node.s.real();
      RealMatrix Q = clifford_pseudo_resolvent(M, s);
      RealMatrix SL = Q * left_mult_matrix(s.conj(), m) - M * Q;
      RealMatrix W = lift_mult(node.w, unit, m);
      RealMatrix F;
      if (f.algebra_generic()) {
        F = lift_mult(f.stem(0, node.s), unit, m);
      } else {
        F = left_mult_matrix(eval_on(f, s), m);
      }
      acc += SL * W * F;
    }
    return acc / (2.0 * kPi);
  }
};

}  // namespace

CliffordCalculusReport clifford_rational_calculus(const SliceFunction& f,
                                                  const ParavectorOperator& T) {
  if (!f.intrinsic()) throw SideMismatch("rational calculus needs an intrinsic function");
  if (!f.rational()) throw ParseError("function carries no rational representation");
  SSpectrum spec = clifford_s_spectrum(T);
  const double tol = 1e-8 * (1.0 + spec.spectral_radius());
  for (const auto& pole : rational_poles(f)) {
    if (spec.min_distance(pole) <= tol) {
      throw PoleOnSpectrum("pole sphere meets the S-spectrum");
    }
  }
  RealMatrix M = to_real_matrix(T);
  const int sz = static_cast<int>(M.rows());
  auto horner = [&](const std::vector<double>& coeffs) {
    RealMatrix acc = RealMatrix::Zero(sz, sz);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      acc = acc * M + *it * RealMatrix::Identity(sz, sz);
    }
    return acc;
  };
  RealMatrix P = horner(f.rational()->num);
  RealMatrix Q = horner(f.rational()->den);
  Eigen::FullPivLU<RealMatrix> lu(Q);
  if (!lu.isInvertible()) throw PoleOnSpectrum("denominator is singular at T");
  CliffordCalculusReport rep;
  rep.method = CalculusMethod::Rational;
  rep.result = lu.solve(P);
  rep.diagnostics.omega = spec.omega();
  return rep;
}

namespace {

CliffordCalculusReport clifford_contour_common(const SliceFunction& f,
                                               const ParavectorOperator& T,
                                               const CalculusOptions& opts, bool sector) {
  if (f.side() == Side::Right) {
    throw SideMismatch("clifford contour calculus implemented for left/intrinsic functions");
  }
  SSpectrum spec = clifford_s_spectrum(T);
  RealMatrix M = to_real_matrix(T);
  const double norm = real_op_norm(M);
  const int n = T.clifford_dim();
  Paravector unit = Paravector::unit(n, 1);

  RealIntegrator integ{T, M, unit, spec, 1e-9 * (1.0 + norm)};

  CliffordCalculusReport rep;
  rep.diagnostics.omega = spec.omega();

  if (sector) {
    double omega = spec.omega();
    double mu_limit = std::min(f.domain().mu, kPi);
    for (const auto& pole : rational_poles(f)) {
      double pa = std::atan2(pole.v, pole.u);
      if (pa > omega) mu_limit = std::min(mu_limit, pa);
      else throw NotInPsiClass("pole of the integrand inside every admissible sector");
    }
    if (!(omega < mu_limit)) throw NotTypeOmega("no admissible sector for the path");
    double theta = opts.theta ? *opts.theta : 0.5 * (omega + mu_limit);
    if (!(theta > omega) || !(theta < mu_limit)) {
      throw NotTypeOmega("path angle must satisfy omega < theta < mu");
    }
    double scale = std::max(norm, 1e-3);
    double eps = opts.eps ? *opts.eps : 1e-8 * scale;
    double R = opts.R ? *opts.R : 1e8 * scale;
    Contour c = build_sector_path(Quaternion::e1(), theta, eps, R, opts.panels_per_decade,
                                  opts.gl_order);
    rep.result = integ.left_sum(c, f);
    rep.method = CalculusMethod::SectorContour;
    rep.diagnostics.theta = theta;
    rep.diagnostics.nodes = static_cast<int>(c.nodes.size());
    if (opts.adaptive) {
      Contour c2 = build_sector_path(Quaternion::e1(), theta, eps, R, 2 * opts.panels_per_decade,
                                     opts.gl_order);
      RealMatrix r2 = integ.left_sum(c2, f);
      double delta = (r2 - rep.result).norm();
      rep.diagnostics.refine_delta = delta;
      if (delta > opts.convergence_tol * (1.0 + r2.norm())) {
        throw ConvergenceFailure("clifford sector quadrature did not settle");
      }
      rep.result = r2;
    }
  } else {
    double rho = spec.spectral_radius();
    double r_cap = f.domain().rmax;
    for (const auto& pole : rational_poles(f)) {
      r_cap = std::min(r_cap, std::hypot(pole.u, pole.v));
    }
    if (f.domain().rmin > 0.0 || f.domain().mu < kPi) {
      throw DomainTooSmall("function domain does not contain a ball around the spectrum");
    }
    if (rho >= r_cap) throw DomainTooSmall("spectral radius reaches the domain boundary");
    double r = opts.circle_radius
                   ? *opts.circle_radius
                   : (rho == 0.0 ? (std::isfinite(r_cap) ? 0.5 * r_cap : 1.0)
                                 : ((2.0 * rho < r_cap) ? 2.0 * rho : 0.5 * (rho + r_cap)));
    Contour c = build_circle(Quaternion::e1(), r, opts.circle_nodes);
    rep.result = integ.left_sum(c, f);
    rep.method = CalculusMethod::Contour;
    rep.diagnostics.nodes = static_cast<int>(c.nodes.size());
    if (opts.adaptive) {
      Contour c2 = build_circle(Quaternion::e1(), r, 2 * opts.circle_nodes);
      RealMatrix r2 = integ.left_sum(c2, f);
      double delta = (r2 - rep.result).norm();
      rep.diagnostics.refine_delta = delta;
      if (delta > opts.convergence_tol * (1.0 + r2.norm())) {
        throw ConvergenceFailure("clifford circle quadrature did not settle");
      }
      rep.result = r2;
    }
  }
  return rep;
}

}  // namespace

CliffordCalculusReport clifford_bounded_calculus(const SliceFunction& f,
                                                 const ParavectorOperator& T,
                                                 const CalculusOptions& opts) {
  return clifford_contour_common(f, T, opts, /*sector=*/false);
}

CliffordCalculusReport clifford_omega_calculus(const SliceFunction& f,
                                               const ParavectorOperator& T,
                                               const CalculusOptions& opts) {
  return clifford_contour_common(f, T, opts, /*sector=*/true);
}

RealMatrix clifford_eigen_oracle(const SliceFunction& f, const ParavectorOperator& T) {
  if (!f.intrinsic()) throw SideMismatch("eigen oracle needs an intrinsic function");
  RealMatrix M = to_real_matrix(T);
  Eigen::EigenSolver<RealMatrix> es(M, /*computeEigenvectors=*/true);
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
    if (!f.domain().contains(lam.real(), std::abs(lam.imag()))) {
      throw OutOfDomain("eigenvalue outside the function domain");
    }
    vals(i) = f.stem(0, lam);
  }
  Eigen::MatrixXcd X = V * vals.asDiagonal() * V.inverse();
  if (X.imag().norm() > 1e-8 * (1.0 + X.real().norm())) {
    throw EigenFailure("oracle produced a non-real matrix");
  }
  return X.real();
}

CliffordCalculusReport clifford_hinf_calculus(const SliceFunction& f, const ParavectorOperator& T,
                                              const CalculusOptions& opts) {
  SSpectrum spec = clifford_s_spectrum(T);
  const double scale = 1.0 + spec.spectral_radius();
  if (spec.min_distance({0.0, 0.0, 1}) <= 1e-8 * scale) {
    throw RegularizerSingular("0 lies in the S-spectrum");
  }
  if (spec.min_distance({0.0, 1.0, 1}) <= 1e-8 * scale) {
    throw RegularizerSingular("the sphere [i] meets the S-spectrum");
  }
  double omega = spec.omega();
  double mu_work = std::min(f.domain().mu, kPi / 2 * (1.0 - 1e-9));
  if (!(omega < mu_work)) {
    throw NotTypeOmega("hinf with the rational regularizer needs omega < pi/2");
  }
  int k;
  if (opts.regularizer_k) {
    k = *opts.regularizer_k;
  } else if (f.growth() && f.growth_mu() >= mu_work) {
    k = std::max(1, static_cast<int>(std::ceil(f.growth()->k - 1e-12)));
  } else {
    ClassifyReport rep = classify(f, mu_work);
    if (!rep.in_f) throw NotInFClass("function is not polynomially bounded on the sector");
    k = std::max(1, static_cast<int>(std::ceil(rep.f_bound.k - 1e-12)));
  }

  SliceFunction psi = catalog::psi(k + 1);
  SliceFunction psif = star_mul(psi, f);

  CalculusOptions inner = opts;
  inner.regularizer_k.reset();
  if (!inner.theta) inner.theta = 0.5 * (omega + mu_work);

  CliffordCalculusReport reg = clifford_omega_calculus(psif, T, inner);
  CliffordCalculusReport rat = clifford_rational_calculus(psi, T);

  Eigen::FullPivLU<RealMatrix> lu(rat.result);
  if (!lu.isInvertible()) throw RegularizerSingular("psi(T) is singular");

  CliffordCalculusReport rep;
  rep.method = CalculusMethod::Hinf;
  rep.result = lu.solve(reg.result);
  rep.diagnostics = reg.diagnostics;
  rep.diagnostics.regularizer_k = k;
  rep.diagnostics.regularizer_cond = real_op_norm(rat.result) * real_op_norm(lu.inverse());
  rep.diagnostics.possibly_unbounded = rep.diagnostics.regularizer_cond > 1e8;
  return rep;
}

ParavectorOperator dirac_demo(int n, int N, double mass) {
  if (n < 1 || n > 3) throw ParseError("dirac_demo needs 1 <= n <= 3");
  if (N < 4) throw ParseError("dirac_demo needs N >= 4");
  long m_long = 1;
  for (int j = 0; j < n; ++j) m_long *= N;
  if (m_long << n > kMaxRepSize) throw ParseError("dirac_demo grid exceeds the size guard");
  const int m = static_cast<int>(m_long);

  RealMatrix C = RealMatrix::Zero(N, N);
  for (int k = 0; k < N; ++k) {
    C(k, (k + 1) % N) = 0.5;
    C(k, (k + N - 1) % N) = -0.5;
  }

  std::vector<RealMatrix> comps;
  comps.push_back(mass * RealMatrix::Identity(m, m));
  for (int axis = 0; axis < n; ++axis) {
    // I (x) ... (x) C (x) ... (x) I with C at position `axis`
    RealMatrix D = RealMatrix::Identity(1, 1);
    for (int j = 0; j < n; ++j) {
      const RealMatrix& factor = (j == axis) ? C : RealMatrix::Identity(N, N);
      RealMatrix next(D.rows() * N, D.cols() * N);
      for (int a = 0; a < D.rows(); ++a) {
        for (int b = 0; b < D.cols(); ++b) {
          next.block(a * N, b * N, N, N) = D(a, b) * factor;
        }
      }
      D = next;
    }
    comps.push_back(D);
  }
  return ParavectorOperator(n, std::move(comps));
}

}  // namespace slicecalc
