#include "slicecalc/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "slicecalc/slice_domain.hpp"

namespace slicecalc {

double SSpectrum::spectral_radius() const {
  double r = 0.0;
  for (const auto& s : spheres) r = std::max(r, std::hypot(s.u, s.v));
  return r;
}

double SSpectrum::omega() const {
  double w = 0.0;
  for (const auto& s : spheres) {
    if (std::hypot(s.u, s.v) == 0.0) continue;
    w = std::max(w, std::atan2(s.v, s.u));
  }
  return w;
}

double SSpectrum::min_distance(const SpectralSphere& p) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& s : spheres) d = std::min(d, sphere_distance(s, p));
  return d;
}

bool SSpectrum::contains(const SpectralSphere& p, double tol) const {
  return min_distance(p) <= tol;
}

namespace {

QMatrix pencil(const QMatrix& T, const Quaternion& s) {
  return T * T - 2.0 * s.re() * T + QMatrix::identity(T.size()) * s.norm_sq();
}

double pencil_sigma_min(const QMatrix& T, double u, double v) {
  QMatrix M = pencil(T, Quaternion(u) + Quaternion::e1() * v);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(embed(M));
  return svd.singularValues()(svd.singularValues().size() - 1);
}

}  // namespace

SSpectrum s_spectrum(const QMatrix& T) {
  const int m = T.size();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(embed(T), /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw EigenFailure("complex adjoint eigenvalue solve failed");

  const double scale = std::max(1.0, op_norm(T));
  const double tol = 1e-10 * scale;

  SSpectrum out;
  std::vector<int> counts;
  for (int i = 0; i < 2 * m; ++i) {
    double u = es.eigenvalues()(i).real();
    double v = std::abs(es.eigenvalues()(i).imag());
    bool merged = false;
    for (std::size_t k = 0; k < out.spheres.size(); ++k) {
      if (std::hypot(out.spheres[k].u - u, out.spheres[k].v - v) <= tol * 10.0) {
        counts[k] += 1;
        // running mean to stabilize the representative
        out.spheres[k].u += (u - out.spheres[k].u) / counts[k];
        out.spheres[k].v += (v - out.spheres[k].v) / counts[k];
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.spheres.push_back({u, v, 0});
      counts.push_back(1);
    }
  }
  for (std::size_t k = 0; k < out.spheres.size(); ++k) {
    // the adjoint eigenvalues pair as (lambda, conj lambda): one quaternionic
    // sphere per pair
    out.spheres[k].multiplicity = std::max(1, counts[k] / 2);
    if (out.spheres[k].v < tol) out.spheres[k].v = std::abs(out.spheres[k].v);
  }
  std::sort(out.spheres.begin(), out.spheres.end(), [](const auto& a, const auto& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  for (const auto& s : out.spheres) {
    double smin = pencil_sigma_min(T, s.u, s.v);
    if (smin > 1e-8 * scale * scale) {
      throw EigenFailure("sphere representative failed the sigma_min verification");
    }
  }
  return out;
}

QMatrix pseudo_resolvent(const QMatrix& T, const Quaternion& s) {
  QMatrix M = pencil(T, s);
  try {
    return qinv(M);
  } catch (const Singular&) {
    throw OnSpectrum("pseudo-resolvent pencil is singular at s");
  }
}

QMatrix s_resolvent_left(const QMatrix& T, const Quaternion& s) {
  QMatrix Q = pseudo_resolvent(T, s);
  return Q.right_scalar(s.conj()) - T * Q;
}

QMatrix s_resolvent_right(const QMatrix& T, const Quaternion& s) {
  QMatrix Q = pseudo_resolvent(T, s);
  return -((T - QMatrix::scalar_matrix(T.size(), s.conj())) * Q);
}

double resolvent_equation_residual(const QMatrix& T, const Quaternion& s, const Quaternion& p,
                                   const QVector& v) {
  if (sphere_contains(sphere_of(p), s, 1e-10 * (1.0 + p.norm()))) {
    throw SphereCollision("s lies on the sphere [p]");
  }
  QMatrix SR = s_resolvent_right(T, s);
  QMatrix SL = s_resolvent_left(T, p);
  QVector lhs = SR * (SL * v);

  QMatrix D = SR - SL;
  Quaternion c = p * p - 2.0 * s.re() * p + Quaternion(s.norm_sq());
  QVector w = (QMatrix::scalar_matrix(T.size(), c.inverse()) * v);
  QVector rhs = D * (QMatrix::scalar_matrix(T.size(), p) * w) -
                QMatrix::scalar_matrix(T.size(), s.conj()) * (D * w);
  return vec_norm(lhs - rhs);
}

SectorProfile classify_sector(const QMatrix& T, const std::vector<double>& thetas, int n_radii,
                              int n_angles) {
  SectorProfile prof;
  SSpectrum spec = s_spectrum(T);
  prof.omega = spec.omega();

  const double norm = std::max(op_norm(T), 1e-12);
  for (double theta : thetas) {
    if (theta <= prof.omega || theta > kPi) {
      throw NotTypeOmega("requested sector angle does not exceed omega");
    }
    SectorSample sample;
    sample.theta = theta;
    for (int i = 0; i < n_radii; ++i) {
      double t = n_radii == 1 ? 0.5 : static_cast<double>(i) / (n_radii - 1);
      double r = 1e-3 * norm * std::pow(1e6, t);
      for (int j = 0; j < n_angles; ++j) {
        double a = theta + (kPi - theta) * (j + 0.5) / n_angles;
        for (double sign : {1.0, -1.0}) {  // both half-planes of the slice
          Quaternion s =
              Quaternion(r * std::cos(a)) + Quaternion::e1() * (sign * r * std::sin(a));
          double nl = op_norm(s_resolvent_left(T, s));
          double nr = op_norm(s_resolvent_right(T, s));
          double c = r * std::max(nl, nr);
          if (c > sample.C) {
            sample.C = c;
            sample.witness = s;
          }
        }
      }
    }
    prof.samples.push_back(sample);
  }
  return prof;
}

}  // namespace slicecalc
