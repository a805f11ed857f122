#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "slicecalc/errors.hpp"
#include "slicecalc/quaternion.hpp"

namespace slicecalc {

// Sign of the blade product e_A e_B = sign * e_{A xor B} in the Clifford
// algebra R_n with e_i e_j + e_j e_i = 0 (i != j) and e_i^2 = -1.
// Masks index generators: bit k <-> e_{k+1}.
inline int blade_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  std::uint32_t rest = a >> 1;
  while (rest != 0) {
    swaps += std::popcount(rest & b);
    rest >>= 1;
  }
  swaps += std::popcount(a & b);  // e_i^2 = -1 for each shared generator
  return (swaps & 1) ? -1 : 1;
}

// Element of R_n, n <= 5: one real coefficient per basis blade e_A,
// stored at index equal to the subset mask A.
class CliffordElement {
public:
  static constexpr int kMaxDim = 5;

  explicit CliffordElement(int n);
  CliffordElement(int n, std::vector<double> coeffs);

  static CliffordElement scalar(int n, double value);
  static CliffordElement basis(int n, std::uint32_t mask);  // e_A
  static CliffordElement generator(int n, int j);           // e_j, 1-based

  int dim() const { return n_; }
  int size() const { return static_cast<int>(c_.size()); }
  double operator[](std::uint32_t mask) const { return c_[mask]; }
  double& operator[](std::uint32_t mask) { return c_[mask]; }
  const std::vector<double>& coeffs() const { return c_; }

  double scalar_part() const { return c_[0]; }
  // Euclidean norm of the coefficient vector.
  double norm() const;

  // Main involution-composed-with-reversion (Clifford conjugation): on a
  // blade of grade k this multiplies by (-1)^{k(k+1)/2}. Restricted to
  // paravectors it is x0 + x_ -> x0 - x_.
  CliffordElement conj() const;

  CliffordElement operator-() const;
  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement operator*(double s) const;
  CliffordElement operator*(const CliffordElement& o) const;
  CliffordElement& operator+=(const CliffordElement& o);

private:
  int n_;
  std::vector<double> c_;
};

inline CliffordElement operator*(double s, const CliffordElement& a) { return a * s; }

std::ostream& operator<<(std::ostream& os, const CliffordElement& a);

// Paravector x = x0 + x1 e1 + ... + xn en in R_n, identified with R^{n+1}.
struct Paravector {
  int n = 1;
  std::vector<double> c;  // size n+1: x0, x1, ..., xn

  Paravector() : c(2, 0.0) {}
  explicit Paravector(int n_) : n(n_), c(n_ + 1, 0.0) {}
  Paravector(int n_, std::vector<double> coeffs);

  static Paravector real(int n, double value);
  static Paravector unit(int n, int j);  // e_j, 1-based

  double re() const { return c[0]; }
  double norm_sq() const;
  double norm() const { return std::sqrt(norm_sq()); }
  double im_norm() const;

  Paravector conj() const;

  Paravector operator-() const;
  Paravector operator+(const Paravector& o) const;
  Paravector operator-(const Paravector& o) const;
  Paravector operator*(double s) const;

  CliffordElement to_clifford() const;
};

// Product of paravectors lands in the full algebra (scalar + vector + bivector).
CliffordElement operator*(const Paravector& a, const Paravector& b);

std::ostream& operator<<(std::ostream& os, const Paravector& p);

// x = u + i v with v >= 0, i a unit 1-vector; default unit e1 for real x.
struct ParavectorDecomposition {
  double u = 0.0;
  double v = 0.0;
  Paravector i;
};

ParavectorDecomposition slice_decompose(const Paravector& x);
Paravector slice_compose(const ParavectorDecomposition& d);

double arg(const Paravector& s);
SpectralSphere sphere_of(const Paravector& x);
bool sphere_contains(const SpectralSphere& sphere, const Paravector& p, double tol = 1e-9);

// Identification H ~ R_2 with e3 = e1 e2.
CliffordElement quaternion_to_r2(const Quaternion& q);
Quaternion r2_to_quaternion(const CliffordElement& a);

}  // namespace slicecalc
