#pragma once

#include <Eigen/Dense>
#include <vector>

#include "slicecalc/calculus.hpp"
#include "slicecalc/clifford.hpp"
#include "slicecalc/slice_function.hpp"
#include "slicecalc/spectrum.hpp"

namespace slicecalc {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Paravector operator T = T0 + e1 T1 + ... + en Tn with real m x m
// components, acting on V_n = R^m (x) R_n. Vectors are stored as 2^n stacked
// m-blocks indexed by the basis-blade mask.
class ParavectorOperator {
public:
  ParavectorOperator(int n, std::vector<RealMatrix> components);

  int clifford_dim() const { return n_; }
  int base_size() const { return m_; }
  int rep_size() const { return m_ << n_; }
  const RealMatrix& component(int j) const { return comp_[static_cast<std::size_t>(j)]; }

  // Sum of component operator norms; an upper bound for the norm of the
  // real-matrix representation.
  double component_norm_sum() const;

private:
  int n_;
  int m_;
  std::vector<RealMatrix> comp_;  // T0 .. Tn
};

// Faithful real-matrix representation of the action on V_n.
RealMatrix to_real_matrix(const ParavectorOperator& T);

// Real-matrix representation of left multiplication by a Clifford element on
// V_n (kron of the left-regular representation with I_m).
RealMatrix left_mult_matrix(const CliffordElement& a, int m);
RealMatrix left_mult_matrix(const Paravector& s, int m);

// The S-spectrum as paravector spheres (u, v). Multiplicities are counted in
// the real representation, conjugate pairs counted once.
SSpectrum clifford_s_spectrum(const ParavectorOperator& T);
SSpectrum real_matrix_s_spectrum(const RealMatrix& M);

// Q_s = (M^2 - 2 Re(s) M + |s|^2 I)^{-1} on the real representation.
RealMatrix clifford_pseudo_resolvent(const RealMatrix& M, const Paravector& s);

struct CliffordResolvents {
  RealMatrix left;
  RealMatrix right;
};

CliffordResolvents clifford_resolvents(const ParavectorOperator& T, const Paravector& s);

// Residual of the S-resolvent equation on the real representation.
double clifford_resolvent_equation_residual(const ParavectorOperator& T, const Paravector& s,
                                            const Paravector& p, const RealVector& v);

struct CliffordCalculusReport {
  RealMatrix result;
  CalculusMethod method = CalculusMethod::Rational;
  CalculusDiagnostics diagnostics;
};

CliffordCalculusReport clifford_rational_calculus(const SliceFunction& f,
                                                  const ParavectorOperator& T);
CliffordCalculusReport clifford_bounded_calculus(const SliceFunction& f,
                                                 const ParavectorOperator& T,
                                                 const CalculusOptions& opts = {});
CliffordCalculusReport clifford_omega_calculus(const SliceFunction& f,
                                               const ParavectorOperator& T,
                                               const CalculusOptions& opts = {});
CliffordCalculusReport clifford_hinf_calculus(const SliceFunction& f, const ParavectorOperator& T,
                                              const CalculusOptions& opts = {});
RealMatrix clifford_eigen_oracle(const SliceFunction& f, const ParavectorOperator& T);

// Discrete Dirac-type demo operator: T0 = mass * I and T_j the (skew)
// central-difference circulant along direction j of an N-point torus grid,
// so m = N^n. With mass above the component norms the spectrum is positive
// real and the sector calculi apply.
ParavectorOperator dirac_demo(int n, int N, double mass);

}  // namespace slicecalc
