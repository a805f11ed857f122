#pragma once

#include "slicecalc/clifford_op.hpp"
#include "slicecalc/qmatrix.hpp"
#include "slicecalc/rng.hpp"

namespace slicecalc {

// Deterministic generators for verification suites and tests.

QMatrix random_qmatrix(Rng& rng, int m, double scale = 1.0);
QVector random_qvector(Rng& rng, int m, double scale = 1.0);
QVector random_unit_qvector(Rng& rng, int m);

// Unitary quaternionic matrix via Gram-Schmidt with right coefficients.
QMatrix random_unitary(Rng& rng, int m);

// U diag(lambda) U^* with prescribed eigenvalue spheres (u_j, v_j).
QMatrix random_normal_qmatrix(Rng& rng, int m, const std::vector<SpectralSphere>& spheres);

// Normal matrix with spectrum in the sector |arg| <= omega_max, radii in
// [rmin, rmax]; sectorial with omega <= omega_max.
QMatrix random_sectorial_qmatrix(Rng& rng, int m, double omega_max, double rmin, double rmax);

// Hermitian positive definite with eigenvalues in [lmin, lmax].
QMatrix random_hermitian_pd(Rng& rng, int m, double lmin, double lmax);

ParavectorOperator random_paravector_operator(Rng& rng, int n, int m, double scale = 1.0);

}  // namespace slicecalc
