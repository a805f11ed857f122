#include "slicecalc/random_gen.hpp"

#include <cmath>

namespace slicecalc {

QMatrix random_qmatrix(Rng& rng, int m, double scale) {
  QMatrix A(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) A(i, j) = rng.quaternion(scale);
  return A;
}

QVector random_qvector(Rng& rng, int m, double scale) {
  QVector v(static_cast<std::size_t>(m));
  for (auto& q : v) q = rng.quaternion(scale);
  return v;
}

QVector random_unit_qvector(Rng& rng, int m) {
  QVector v = random_qvector(rng, m);
  double n = vec_norm(v);
  while (n < 1e-9) {
    v = random_qvector(rng, m);
    n = vec_norm(v);
  }
  for (auto& q : v) q = q / n;
  return v;
}

QMatrix random_unitary(Rng& rng, int m) {
  // Gram-Schmidt on random columns; right-linear column operations
  std::vector<QVector> cols;
  for (int j = 0; j < m; ++j) {
    QVector c = random_qvector(rng, m);
    for (const auto& prev : cols) {
      Quaternion proj = inner(c, prev);  // <c, prev>
      c = c - prev * proj;
    }
    double n = vec_norm(c);
    while (n < 1e-8) {
      c = random_qvector(rng, m);
      for (const auto& prev : cols) c = c - prev * inner(c, prev);
      n = vec_norm(c);
    }
    for (auto& q : c) q = q / n;
    cols.push_back(std::move(c));
  }
  QMatrix U(m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) U(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return U;
}

QMatrix random_normal_qmatrix(Rng& rng, int m, const std::vector<SpectralSphere>& spheres) {
  if (static_cast<int>(spheres.size()) != m) throw DimensionMismatch("need m eigenvalue spheres");
  QMatrix U = random_unitary(rng, m);
  QVector d(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const auto& s = spheres[static_cast<std::size_t>(j)];
    Quaternion unit = rng.unit_imaginary();
    d[static_cast<std::size_t>(j)] = Quaternion(s.u) + unit * s.v;
  }
  return U * QMatrix::diag(d) * U.adjoint();
}

QMatrix random_sectorial_qmatrix(Rng& rng, int m, double omega_max, double rmin, double rmax) {
  std::vector<SpectralSphere> spheres;
  for (int j = 0; j < m; ++j) {
    double r = rmin * std::pow(rmax / rmin, rng.uniform());
    double a = omega_max * rng.uniform();
    spheres.push_back({r * std::cos(a), r * std::sin(a), 1});
  }
  return random_normal_qmatrix(rng, m, spheres);
}

QMatrix random_hermitian_pd(Rng& rng, int m, double lmin, double lmax) {
  std::vector<SpectralSphere> spheres;
  for (int j = 0; j < m; ++j) spheres.push_back({rng.uniform(lmin, lmax), 0.0, 1});
  return random_normal_qmatrix(rng, m, spheres);
}

ParavectorOperator random_paravector_operator(Rng& rng, int n, int m, double scale) {
  std::vector<RealMatrix> comps;
  for (int j = 0; j <= n; ++j) {
    RealMatrix C(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) C(a, b) = scale * rng.normal();
    comps.push_back(std::move(C));
  }
  return ParavectorOperator(n, std::move(comps));
}

}  // namespace slicecalc
