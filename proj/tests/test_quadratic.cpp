#include "doctest.h"

#include <cmath>

#include "slicecalc/quadratic.hpp"
#include "slicecalc/random_gen.hpp"
#include "test_support.hpp"

using namespace slicecalc;
using namespace slicecalc::testing;

namespace {

// Independent oracle for the scalar integral int_0^infty (t^k/(1+t^2)^k)^2 dt/t:
// adaptive Simpson in log t, no shared code with the library quadrature.
double scalar_integral_oracle(int k) {
  auto g = [k](double x) {
    double t = std::exp(x);
    double psi = std::pow(t / (1.0 + t * t), k);
    return psi * psi;
  };
  double a = std::log(1e-8), b = std::log(1e8);
  int n = 1 << 16;
  double h = (b - a) / n;
  double acc = g(a) + g(b);
  for (int i = 1; i < n; ++i) acc += g(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace

TEST_CASE("scalar quadratic integrals match the Beta closed form") {
  // frozen expected values, cross-checked by the Simpson oracle:
  // (1/2) Gamma(k)^2 / Gamma(2k) for k = 1..4
  const double expected[] = {0.5, 1.0 / 12.0, 1.0 / 60.0, 1.0 / 280.0};
  for (int k = 1; k <= 4; ++k) {
    double gamma_form = 0.5 * std::exp(2.0 * std::lgamma(k) - std::lgamma(2.0 * k));
    CHECK(gamma_form == doctest::Approx(expected[k - 1]).epsilon(1e-12));
    CHECK(scalar_integral_oracle(k) == doctest::Approx(expected[k - 1]).epsilon(1e-9));

    QMatrix T = QMatrix::diag({Quaternion(1.0)});
    QuadraticResult qr = quadratic_integral(T, catalog::psi(k), {Quaternion(1.0)});
    CHECK(std::abs(qr.value - expected[k - 1]) <= 1e-6);
  }
}

TEST_CASE("scalar integral is independent of lambda") {
  for (int k : {1, 2}) {
    double base = 0.0;
    for (double lambda : {0.1, 1.0, 10.0}) {
      QMatrix T = QMatrix::diag({Quaternion(lambda)});
      double v = quadratic_integral(T, catalog::psi(k), {Quaternion(1.0)}).value;
      if (base == 0.0) base = v;
      CHECK(std::abs(v - base) <= 1e-8 * base);
    }
  }
}

TEST_CASE("quadratic integral basics") {
  QMatrix T = QMatrix::diag({Quaternion(1.0), Quaternion(2.0)});
  SUBCASE("zero vector gives zero") {
    CHECK(quadratic_integral(T, catalog::psi(1), QVector(2)).value == 0.0);
  }
  SUBCASE("psi plus is required") {
    // -psi(1) is negative on (0, inf)
    SliceFunction neg(Side::Intrinsic, 2, SliceDomain::whole(),
                      {[](Complex z) { return -z / (1.0 + z * z); }});
    CHECK_THROWS_AS(quadratic_integral(T, neg, {Quaternion(1.0), Quaternion(0.0)}), NotPsiPlus);
    CHECK_THROWS_AS(
        quadratic_integral(T, catalog::poly_quat({Quaternion::e1()}, Side::Left),
                           {Quaternion(1.0), Quaternion(0.0)}),
        NotPsiPlus);
  }
  SUBCASE("refinement is settled") {
    QuadraticResult qr = quadratic_integral(T, catalog::psi(1), {Quaternion(1.0), Quaternion(1.0)});
    CHECK(qr.refine_delta <= 1e-9 * (1.0 + qr.value));
    CHECK(qr.head_estimate >= 0.0);
    CHECK(qr.tail_estimate >= 0.0);
  }
}

TEST_CASE("beta estimates") {
  SUBCASE("hermitian diagonal: lambda independence makes beta = sqrt(1/2)") {
    QMatrix T = QMatrix::diag({Quaternion(1.0), Quaternion(10.0)});
    double beta = estimate_beta(T, catalog::psi(1), 4, 31);
    CHECK(beta == doctest::Approx(std::sqrt(0.5)).epsilon(1e-6));
  }
  SUBCASE("beta is nonnegative and deterministic") {
    Rng rng(503);
    QMatrix T = random_hermitian_pd(rng, 2, 0.5, 3.0);
    double b1 = estimate_beta(T, catalog::psi(1), 3, 7);
    double b2 = estimate_beta(T, catalog::psi(1), 3, 7);
    CHECK(b1 >= 0.0);
    CHECK(b1 == b2);
  }
  SUBCASE("normal operators have beta(T) = beta(T*)") {
    Rng rng(509);
    QMatrix T = random_sectorial_qmatrix(rng, 2, 0.6, 0.5, 2.0);
    double b = estimate_beta(T, catalog::psi(1), 4, 11, false);
    double bs = estimate_beta(T, catalog::psi(1), 4, 11, true);
    CHECK(std::abs(b - bs) <= 1e-6 * (1.0 + b));
  }
}

TEST_CASE("hinf bound check") {
  SUBCASE("hermitian positive definite with exp_neg") {
    Rng rng(521);
    QMatrix T = random_hermitian_pd(rng, 3, 0.5, 3.0);
    HinfBoundReport rep = hinf_bound_check(T, catalog::exp_neg(), 1.0, 2, 3);
    CHECK(rep.within_bound);
    CHECK(rep.ratio <= 1.0 + 1e-6);
    CHECK(rep.f_sup == doctest::Approx(1.0).epsilon(1e-3));
  }
  SUBCASE("constant one has ratio one") {
    QMatrix T = QMatrix::diag({Quaternion(1.0), Quaternion(2.0)});
    HinfBoundReport rep = hinf_bound_check(T, catalog::constant(1.0), 1.0, 2, 5);
    CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("non-normal operator reports a finite ratio") {
    QMatrix T(2);
    T(0, 0) = Quaternion(1.0);
    T(0, 1) = Quaternion{0.0, 0.4, 0.0, 0.0};
    T(1, 1) = Quaternion(2.0);
    HinfBoundReport rep = hinf_bound_check(T, catalog::exp_neg(), 10.0, 2, 13);
    CHECK(std::isfinite(rep.ratio));
    CHECK(rep.within_bound);
  }
}
