#include "doctest.h"

#include <complex>

#include "slicecalc/rng.hpp"
#include "slicecalc/slice_function.hpp"
#include "test_support.hpp"

using namespace slicecalc;
using namespace slicecalc::testing;

namespace {

SliceFunction random_left_poly(Rng& rng, int deg) {
  std::vector<Quaternion> coeffs;
  for (int l = 0; l <= deg; ++l) coeffs.push_back(rng.quaternion());
  return catalog::poly_quat(coeffs, Side::Left);
}

// Clifford left-polynomial oracle: sum x^l a_l by raw algebra products.
CliffordElement clifford_poly_oracle(const std::vector<CliffordElement>& coeffs,
                                     const Paravector& x) {
  CliffordElement acc(x.n);
  CliffordElement power = CliffordElement::scalar(x.n, 1.0);
  CliffordElement xc = x.to_clifford();
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    if (l > 0) power = power * xc;
    acc += power * coeffs[l];
  }
  return acc;
}

}  // namespace

TEST_CASE("evaluation by the representation formula") {
  SUBCASE("intrinsic square") {
    SliceFunction f = catalog::pow(2);
    Quaternion q{1, 0, 1, 0};  // 1 + e2
    CHECK(approx(eval(f, q), q * q, 1e-14));             // (1+e2)^2 = 2 e2
    CHECK(approx(eval(f, q), Quaternion{0, 0, 2, 0}, 1e-14));
  }
  SUBCASE("intrinsic functions are real on the reals") {
    SliceFunction f = catalog::poly_real({1.0, -2.0, 3.0});
    Quaternion v = eval(f, Quaternion(1.7));
    CHECK(std::abs(v.x) + std::abs(v.y) + std::abs(v.z) == 0.0);
  }
  SUBCASE("left coefficient polynomial") {
    SliceFunction f = catalog::poly_quat({Quaternion(0.0), Quaternion::e1()}, Side::Left);
    CHECK(approx(eval(f, Quaternion::e2()), -Quaternion::e3(), 1e-15));  // e2 e1 = -e3
  }
  SUBCASE("matches the direct polynomial oracle") {
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Quaternion> coeffs;
      int deg = 1 + static_cast<int>(rng.uniform() * 3.999);
      for (int l = 0; l <= deg; ++l) coeffs.push_back(rng.quaternion());
      Quaternion q = rng.quaternion(1.5);
      Quaternion expect_left = poly_oracle(coeffs, q, true);
      Quaternion expect_right = poly_oracle(coeffs, q, false);
      CHECK(approx(eval(catalog::poly_quat(coeffs, Side::Left), q), expect_left,
                   1e-12 * (1.0 + expect_left.norm())));
      CHECK(approx(eval(catalog::poly_quat(coeffs, Side::Right), q), expect_right,
                   1e-12 * (1.0 + expect_right.norm())));
    }
  }
  SUBCASE("reference formula with the opposite unit agrees") {
    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
      SliceFunction f = random_left_poly(rng, 3);
      Quaternion q = rng.quaternion(1.2);
      SliceDecomposition d = slice_decompose(q);
      Complex z{d.u, d.v};
      // f(u + j v) from the stems, for j = e1 and j = -e1
      auto value_at = [&](Complex w) {
        return Quaternion::lift(f.stem(0, w), Quaternion::e1()) +
               Quaternion::lift(f.stem(1, w), Quaternion::e1()) * Quaternion::e2();
      };
      Quaternion fp = value_at(z);
      Quaternion fm = value_at(std::conj(z));
      Quaternion with_j = (fp + fm) * 0.5 + d.i * (Quaternion::e1() * (fm - fp)) * 0.5;
      // with j -> -j the roles of f(u+jv) and f(u-jv) swap
      Quaternion with_mj = (fm + fp) * 0.5 + d.i * ((-Quaternion::e1()) * (fp - fm)) * 0.5;
      CHECK(approx(with_j, with_mj, 1e-12 * (1.0 + with_j.norm())));
      CHECK(approx(eval(f, q), with_j, 1e-12 * (1.0 + with_j.norm())));
    }
  }
  SUBCASE("intrinsic values have slice independent components") {
    Rng rng(41);
    SliceFunction f = catalog::rational({0.0, 1.0}, {1.0, 0.0, 1.0});  // psi(1) shape
    double u = 0.3, v = 0.9;
    Complex base = eval_intrinsic(f, Complex{u, v});
    for (int k = 0; k < 5; ++k) {
      Quaternion i = rng.unit_imaginary();
      Quaternion q = Quaternion(u) + i * v;
      Quaternion val = eval(f, q);
      // value must be alpha + i beta with the same alpha, beta for every i
      CHECK(std::abs(val.w - base.real()) <= 1e-12);
      Quaternion imag_part = val - Quaternion(val.w);
      CHECK(approx(imag_part, i * base.imag(), 1e-12));
    }
  }
  SUBCASE("domain violations throw") {
    SliceFunction f = catalog::frac_pow(0.5);
    CHECK_THROWS_AS(eval(f, Quaternion(-2.0)), OutOfDomain);
    SliceFunction g(Side::Intrinsic, 2, SliceDomain::ball(1.0), {[](Complex z) { return z; }});
    CHECK_THROWS_AS(eval(g, Quaternion(3.0)), OutOfDomain);
  }
}

TEST_CASE("star product") {
  SUBCASE("monomials with quaternionic coefficients") {
    // (q e1) * (q e2) = q^2 e3
    SliceFunction f = catalog::poly_quat({Quaternion(0.0), Quaternion::e1()}, Side::Left);
    SliceFunction g = catalog::poly_quat({Quaternion(0.0), Quaternion::e2()}, Side::Left);
    SliceFunction h = star_mul(f, g);
    Rng rng(43);
    for (int i = 0; i < 20; ++i) {
      Quaternion q = rng.quaternion();
      CHECK(approx(eval(h, q), q * q * Quaternion::e3(), 1e-12 * (1.0 + q.norm_sq())));
    }
  }
  SUBCASE("intrinsic left factor multiplies pointwise") {
    SliceFunction f = catalog::pow(2);
    SliceFunction g = catalog::poly_quat({Quaternion(0.0), Quaternion::e1()}, Side::Left);
    SliceFunction h = star_mul(f, g);
    Rng rng(47);
    for (int i = 0; i < 20; ++i) {
      Quaternion q = rng.quaternion();
      CHECK(approx(eval(h, q), eval(f, q) * eval(g, q), 1e-12 * (1.0 + std::pow(q.norm(), 3))));
      CHECK(approx(eval(h, q), q * q * q * Quaternion::e1(), 1e-12 * (1.0 + std::pow(q.norm(), 3))));
    }
  }
  SUBCASE("one is the unit") {
    Rng rng(53);
    SliceFunction g = random_left_poly(rng, 3);
    SliceFunction h = star_mul(catalog::one(), g);
    Quaternion q = rng.quaternion();
    CHECK(approx(eval(h, q), eval(g, q), 1e-13 * (1.0 + eval(g, q).norm())));
  }
  SUBCASE("coefficient convolution is exact on integer polynomials") {
    Rng rng(59);
    for (int trial = 0; trial < 40; ++trial) {
      auto int_quat = [&]() {
        return Quaternion{std::floor(rng.uniform(-4, 5)), std::floor(rng.uniform(-4, 5)),
                          std::floor(rng.uniform(-4, 5)), std::floor(rng.uniform(-4, 5))};
      };
      int da = 1 + static_cast<int>(rng.uniform() * 3.0);
      int db = 1 + static_cast<int>(rng.uniform() * 3.0);
      std::vector<Quaternion> a, b;
      for (int l = 0; l <= da; ++l) a.push_back(int_quat());
      for (int l = 0; l <= db; ++l) b.push_back(int_quat());

      SliceFunction h = star_mul(catalog::poly_quat(a, Side::Left),
                                 catalog::poly_quat(b, Side::Left));
      REQUIRE(h.poly().has_value());
      // quaternion coefficient convolution c_n = sum a_{n-k} b_k
      std::vector<Quaternion> expect(a.size() + b.size() - 1, Quaternion(0.0));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) expect[i + j] += a[i] * b[j];
      const auto& comps = h.poly()->comps;
      for (std::size_t nn = 0; nn < expect.size(); ++nn) {
        Complex z1 = nn < comps[0].size() ? comps[0][nn] : Complex{0, 0};
        Complex z2 = nn < comps[1].size() ? comps[1][nn] : Complex{0, 0};
        Quaternion got = Quaternion::from_split(z1, z2);
        CHECK(got == expect[nn]);  // exact integer arithmetic
      }
    }
  }
  SUBCASE("associativity and left distributivity on polynomials") {
    Rng rng(61);
    for (int trial = 0; trial < 25; ++trial) {
      SliceFunction a = random_left_poly(rng, 2);
      SliceFunction b = random_left_poly(rng, 2);
      SliceFunction c = random_left_poly(rng, 2);
      SliceFunction lhs = star_mul(star_mul(a, b), c);
      SliceFunction rhs = star_mul(a, star_mul(b, c));
      Quaternion q = rng.quaternion();
      double scale = 1.0 + eval(lhs, q).norm();
      CHECK(approx(eval(lhs, q), eval(rhs, q), 1e-11 * scale));

      auto sum_ab = [&](const SliceFunction& x, const SliceFunction& y) {
        std::vector<StemFn> stems;
        for (int comp = 0; comp < 2; ++comp) {
          stems.push_back([x, y, comp](Complex z) { return x.stem(comp, z) + y.stem(comp, z); });
        }
        return SliceFunction(Side::Left, 2, SliceDomain::whole(), std::move(stems));
      };
      SliceFunction dist_lhs = star_mul(a, sum_ab(b, c));
      Quaternion expect = eval(star_mul(a, b), q) + eval(star_mul(a, c), q);
      CHECK(approx(eval(dist_lhs, q), expect, 1e-11 * (1.0 + expect.norm())));
    }
  }
  SUBCASE("side rules") {
    SliceFunction l = catalog::poly_quat({Quaternion::e1()}, Side::Left);
    SliceFunction r = catalog::poly_quat({Quaternion::e1()}, Side::Right);
    CHECK_THROWS_AS(star_mul(l, r), SideMismatch);
  }
}

TEST_CASE("conjugate and symmetrization") {
  SUBCASE("f = q - e1") {
    SliceFunction f = catalog::poly_quat({-Quaternion::e1(), Quaternion(1.0)}, Side::Left);
    SliceFunction fs = symmetrize(f);
    SliceFunction fc = conjugate(f);
    REQUIRE(fs.poly().has_value());
    // f^s = q^2 + 1 exactly
    const auto& sc = fs.poly()->comps[0];
    REQUIRE(sc.size() == 3);
    CHECK(sc[0] == Complex{1, 0});
    CHECK(sc[1] == Complex{0, 0});
    CHECK(sc[2] == Complex{1, 0});
    // f^c = q + e1
    Rng rng(67);
    for (int i = 0; i < 10; ++i) {
      Quaternion q = rng.quaternion();
      CHECK(approx(eval(fc, q), q + Quaternion::e1(), 1e-13 * (1.0 + q.norm())));
      CHECK(approx(eval(fs, q), q * q + Quaternion(1.0), 1e-13 * (1.0 + q.norm_sq())));
    }
  }
  SUBCASE("intrinsic conjugate is the identity and f^s = f^2") {
    SliceFunction f = catalog::poly_real({0.5, 0.0, 2.0});
    SliceFunction fc = conjugate(f);
    SliceFunction fs = symmetrize(f);
    Rng rng(71);
    for (int i = 0; i < 10; ++i) {
      Quaternion q = rng.quaternion();
      Quaternion v = eval(f, q);
      CHECK(approx(eval(fc, q), v, 1e-13 * (1.0 + v.norm())));
      CHECK(approx(eval(fs, q), v * v, 1e-12 * (1.0 + v.norm_sq())));
    }
  }
  SUBCASE("f^s commutes through the star product") {
    Rng rng(73);
    for (int trial = 0; trial < 20; ++trial) {
      SliceFunction f = random_left_poly(rng, 2);
      SliceFunction g = random_left_poly(rng, 2);
      SliceFunction fs = symmetrize(f);
      Quaternion q = rng.quaternion();
      Quaternion a = eval(star_mul(fs, g), q);
      Quaternion b = eval(star_mul(g, fs), q);
      CHECK(approx(a, b, 1e-11 * (1.0 + a.norm())));
      CHECK(approx(a, eval(fs, q) * eval(g, q), 1e-11 * (1.0 + a.norm())));
    }
  }
}

TEST_CASE("star inverse") {
  SUBCASE("worked example at a real point") {
    SliceFunction f = catalog::poly_quat({-Quaternion::e1(), Quaternion(1.0)}, Side::Left);
    SliceFunction finv = star_inv(f);
    Quaternion expect = (Quaternion(2.0) + Quaternion::e1()) / 5.0;
    CHECK(approx(eval(finv, Quaternion(2.0)), expect, 1e-14));
  }
  SUBCASE("inverse of one and of the identity function") {
    CHECK(approx(eval(star_inv(catalog::one()), Quaternion{0.3, 1, 0, 0}), Quaternion(1.0), 1e-14));
    SliceFunction id_inv = star_inv(catalog::pow(1));
    Rng rng(79);
    for (int i = 0; i < 10; ++i) {
      Quaternion q = rng.quaternion();
      if (q.norm() < 0.2) continue;
      CHECK(approx(eval(id_inv, q), q.inverse(), 1e-12 / q.norm()));
    }
  }
  SUBCASE("star inverse times f is one") {
    Rng rng(83);
    int checked = 0;
    while (checked < 100) {
      SliceFunction f = random_left_poly(rng, 2);
      SliceFunction prod = star_mul(star_inv(f), f);
      for (int i = 0; i < 5 && checked < 100; ++i) {
        Quaternion q = rng.quaternion(1.5);
        try {
          Quaternion v = eval(prod, q);
          CHECK(approx(v, Quaternion(1.0), 1e-10));
          ++checked;
        } catch (const ZeroDivisor&) {
        }
      }
    }
  }
  SUBCASE("zero divisor near the zero set") {
    // f = q - e1 has f^s = q^2 + 1 vanishing on the sphere [e1]
    SliceFunction f = catalog::poly_quat({-Quaternion::e1(), Quaternion(1.0)}, Side::Left);
    SliceFunction finv = star_inv(f);
    CHECK_THROWS_AS(eval(finv, Quaternion::e2()), ZeroDivisor);
  }
  SUBCASE("intrinsic rational inverse swaps numerator and denominator") {
    SliceFunction psi = catalog::psi(1);
    SliceFunction inv = star_inv(psi);
    REQUIRE(inv.rational().has_value());
    CHECK(approx(eval_intrinsic(inv, Complex{2.0, 0.0}).real(), 2.5, 1e-14));
  }
}

TEST_CASE("condition (52) guards the clifford star inverse") {
  Rng rng(89);
  // generic non-intrinsic n=3 functions violate the slice-value condition
  PolyData p;
  p.comps.assign(4, {});
  for (auto& comp : p.comps) {
    comp = {Complex{rng.normal(), rng.normal()}, Complex{rng.normal(), rng.normal()}};
  }
  std::vector<StemFn> stems;
  for (int c = 0; c < 4; ++c) {
    auto coeffs = p.comps[static_cast<std::size_t>(c)];
    stems.push_back([coeffs](Complex z) { return coeffs[0] + coeffs[1] * z; });
  }
  SliceFunction f(Side::Left, 3, SliceDomain::whole(), std::move(stems));
  CHECK_THROWS_AS(star_inv(f), ConditionViolated);

  // intrinsic functions always pass
  CHECK_NOTHROW(star_inv(catalog::psi(1)));
}

TEST_CASE("cauchy kernels") {
  SUBCASE("worked example") {
    Quaternion expect = (Quaternion(2.0) + Quaternion::e1()) / 5.0;
    CHECK(approx(cauchy_kernel_left(Quaternion(2.0), Quaternion::e1()), expect, 1e-15));
  }
  SUBCASE("matches the geometric series oracle") {
    Rng rng(97);
    for (int trial = 0; trial < 50; ++trial) {
      Quaternion q = rng.quaternion(0.4);
      Quaternion s = rng.quaternion(1.0) + Quaternion(3.0);
      if (q.norm() >= 0.8 * s.norm()) continue;
      Quaternion series = kernel_series_oracle(s, q, 220);
      CHECK(approx(cauchy_kernel_left(s, q), series, 1e-12 * (1.0 + series.norm())));
    }
  }
  SUBCASE("kernel at zero is the inverse") {
    Quaternion s{1, 2, -1, 0.5};
    CHECK(approx(cauchy_kernel_left(s, Quaternion(0.0)), s.inverse(), 1e-14));
  }
  SUBCASE("left/right antisymmetry under swapping") {
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
      Quaternion s = rng.quaternion(1.5);
      Quaternion q = rng.quaternion(1.5);
      if (sphere_distance(sphere_of(s), sphere_of(q)) < 0.05) continue;
      Quaternion lhs = cauchy_kernel_right(s, q);
      Quaternion rhs = -cauchy_kernel_left(q, s);
      CHECK(approx(lhs, rhs, 1e-12 * (1.0 + lhs.norm())));
    }
    CHECK(approx(cauchy_kernel_right(Quaternion(2.0), Quaternion::e1()),
                 -cauchy_kernel_left(Quaternion::e1(), Quaternion(2.0)), 1e-15));
  }
  SUBCASE("on-sphere rejection") {
    CHECK_THROWS_AS(cauchy_kernel_left(Quaternion::e1(), Quaternion::e2()), OnSpectrumSphere);
  }
  SUBCASE("slice hyperholomorphy of the kernel in q") {
    // restriction to C_{e1}: K(z) = F(z) + G(z) e2; central-difference CR test
    Quaternion s{1.5, 0.7, 0.3, -0.2};
    auto F = [&](Complex z) {
      Quaternion k = cauchy_kernel_left(s, Quaternion::lift(z, Quaternion::e1()));
      return Complex{k.w, k.x};
    };
    auto G = [&](Complex z) {
      Quaternion k = cauchy_kernel_left(s, Quaternion::lift(z, Quaternion::e1()));
      return Complex{k.y, k.z};
    };
    const Complex i{0, 1};
    std::vector<std::function<Complex(Complex)>> stems{F, G};
    for (Complex z : {Complex{0.2, 0.1}, Complex{-0.4, 0.5}, Complex{0.1, -0.6}}) {
      double h = 1e-5;
      for (const auto& stem : stems) {
        Complex du = (stem(z + h) - stem(z - h)) / (2 * h);
        Complex dv = (stem(z + i * h) - stem(z - i * h)) / (2 * h);
        CHECK(std::abs(0.5 * (du + i * dv)) <= 1e-6);
      }
    }
  }
  SUBCASE("paravector kernel reduces to the quaternion kernel in R_2") {
    Rng rng(103);
    for (int trial = 0; trial < 30; ++trial) {
      Paravector s(2), x(2);
      for (int j = 0; j <= 2; ++j) {
        s.c[j] = rng.normal();
        x.c[j] = rng.normal();
      }
      if (sphere_distance(sphere_of(s), sphere_of(x)) < 0.05) continue;
      Quaternion qs{s.c[0], s.c[1], s.c[2], 0.0};
      Quaternion qx{x.c[0], x.c[1], x.c[2], 0.0};
      CliffordElement k = cauchy_kernel_left(s, x);
      Quaternion expect = cauchy_kernel_left(qs, qx);
      CHECK(approx(r2_to_quaternion(k), expect, 1e-12 * (1.0 + expect.norm())));
    }
  }
}

TEST_CASE("catalog values and bounds") {
  CHECK(eval_intrinsic(catalog::psi(1), Complex{2, 0}).real() == doctest::Approx(0.4));
  CHECK(eval_intrinsic(catalog::frac_pow(0.5), Complex{9, 0}).real() == doctest::Approx(3.0));
  CHECK(eval_intrinsic(catalog::exp_neg(), Complex{1, 0}).real() ==
        doctest::Approx(std::exp(-1.0)));
  CHECK(eval_intrinsic(catalog::pow(3), Complex{2, 0}).real() == doctest::Approx(8.0));

  SUBCASE("psi decay certificate holds on its sector") {
    SliceFunction psi = catalog::psi(2);
    REQUIRE(psi.decay().has_value());
    double alpha = psi.decay()->alpha;
    double c = psi.decay()->c;
    Rng rng(107);
    for (int i = 0; i < 200; ++i) {
      double r = std::pow(10.0, rng.uniform(-4, 4));
      double a = rng.uniform(-kPi / 4, kPi / 4);
      Complex z = std::polar(r, a);
      double bound = c * std::pow(r, alpha) / (1.0 + std::pow(r, 2 * alpha));
      CHECK(std::abs(eval_intrinsic(psi, z)) <= bound * (1.0 + 1e-12));
    }
  }
  SUBCASE("psi equals its rational expansion") {
    SliceFunction psi = catalog::psi(3);
    Rng rng(109);
    for (int i = 0; i < 50; ++i) {
      Complex z{rng.normal(), rng.normal()};
      Complex direct = std::pow(z / (1.0 + z * z), 3);
      CHECK(std::abs(eval_intrinsic(psi, z) - direct) <= 1e-12 * (1.0 + std::abs(direct)));
    }
  }
  SUBCASE("stems satisfy the Cauchy-Riemann test") {
    for (const auto& f : {catalog::psi(2), catalog::exp_neg(), catalog::frac_pow(0.5)}) {
      for (Complex z : {Complex{0.5, 0.2}, Complex{2.0, 1.0}, Complex{0.1, -0.05}}) {
        double scale = std::abs(f.stem(0, z)) + 1.0;
        CHECK(holomorphy_residual(f, 0, z) <= 1e-6 * scale);
      }
    }
  }
}

TEST_CASE("growth classification") {
  SUBCASE("psi(2) is of class Psi on the half sector") {
    ClassifyReport rep = classify(catalog::psi(2), kPi / 2);
    CHECK(rep.in_psi);
    CHECK(rep.psi_bound.alpha > 0.5);
  }
  SUBCASE("exp_neg is bounded but not Psi") {
    ClassifyReport rep = classify(catalog::exp_neg(), kPi / 4);
    CHECK(rep.in_shinf);
    CHECK(rep.sup_norm == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_FALSE(rep.in_psi);
    CHECK(std::abs(rep.psi_witness) <= 1e-2);  // witness at the small-|s| end
  }
  SUBCASE("pow(3) grows like k = 3") {
    ClassifyReport rep = classify(catalog::pow(3), kPi / 3);
    CHECK_FALSE(rep.in_shinf);
    CHECK(rep.in_f);
    CHECK(rep.f_bound.k == doctest::Approx(3.0).epsilon(0.15));
  }
  SUBCASE("scaled argument") {
    SliceFunction f = scale_argument(catalog::psi(1), 2.0);
    CHECK(eval_intrinsic(f, Complex{1, 0}).real() == doctest::Approx(0.4));
  }
}

TEST_CASE("clifford evaluation") {
  SUBCASE("left polynomial over R_3 matches the direct oracle") {
    Rng rng(113);
    for (int trial = 0; trial < 30; ++trial) {
      // coefficients restricted to the span of {1, e2, e3, e23}: these are
      // exactly the values the 4 stems can produce on the reference plane
      PolyData p;
      p.comps.assign(4, {});
      std::vector<CliffordElement> coeffs;
      int deg = 2;
      for (int l = 0; l <= deg; ++l) {
        CliffordElement a(3);
        Complex c0{rng.normal(), rng.normal()};
        Complex c2{rng.normal(), rng.normal()};
        Complex c3{rng.normal(), rng.normal()};
        Complex c23{rng.normal(), rng.normal()};
        // a = lift(c0) + lift(c2) e2 + lift(c3) e3 + lift(c23) e23 with
        // lift(x+iy) = x + y e1
        auto lift_into = [&](Complex c, std::uint32_t blade) {
          CliffordElement unit = CliffordElement::basis(3, blade);
          CliffordElement e1 = CliffordElement::generator(3, 1);
          return (CliffordElement::scalar(3, c.real()) + e1 * c.imag()) * unit;
        };
        a = lift_into(c0, 0b000);
        a += lift_into(c2, 0b010);
        a += lift_into(c3, 0b100);
        a += lift_into(c23, 0b110);
        coeffs.push_back(a);
        p.comps[0].push_back(c0);
        p.comps[1].push_back(c2);
        p.comps[2].push_back(c3);
        p.comps[3].push_back(c23);
      }
      std::vector<StemFn> stems;
      for (int c = 0; c < 4; ++c) {
        auto cc = p.comps[static_cast<std::size_t>(c)];
        stems.push_back([cc](Complex z) { return (cc[2] * z + cc[1]) * z + cc[0]; });
      }
      SliceFunction f(Side::Left, 3, SliceDomain::whole(), std::move(stems));

      Paravector x(3);
      for (int j = 0; j <= 3; ++j) x.c[j] = rng.normal();
      CliffordElement got = eval(f, x);
      CliffordElement expect = clifford_poly_oracle(coeffs, x);
      CHECK((got - expect).norm() <= 1e-11 * (1.0 + expect.norm()));
    }
  }
  SUBCASE("clifford star product reduces to the quaternionic one for n = 2") {
    Rng rng(127);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Quaternion> ca, cb;
      for (int l = 0; l <= 2; ++l) {
        ca.push_back(rng.quaternion());
        cb.push_back(rng.quaternion());
      }
      SliceFunction fa = catalog::poly_quat(ca, Side::Left);
      SliceFunction fb = catalog::poly_quat(cb, Side::Left);
      SliceFunction h = star_mul(fa, fb);
      // evaluate on an R_2 paravector and as a quaternion with x3 = 0
      Paravector x(2);
      x.c[0] = rng.normal();
      x.c[1] = rng.normal();
      x.c[2] = rng.normal();
      Quaternion q{x.c[0], x.c[1], x.c[2], 0.0};
      // rebuild dimension-2 clifford variants of the same stems
      std::vector<StemFn> stems{[h](Complex z) { return h.stem(0, z); },
                                [h](Complex z) { return h.stem(1, z); }};
      SliceFunction h2(Side::Left, 2, SliceDomain::whole(), std::move(stems));
      CliffordElement vc = eval(h2, x);
      Quaternion vq = eval(h, q);
      CHECK(approx(r2_to_quaternion(vc), vq, 1e-11 * (1.0 + vq.norm())));
    }
  }
}

TEST_CASE("kernel is right slice hyperholomorphic in s") {
  // restriction s -> S_L^{-1}(s, q) to C_{e1} splits as F(z) + e2 G(z); both
  // stems must pass the Cauchy-Riemann test
  Quaternion q{0.3, 0.2, -0.7, 0.4};
  auto F = [&](Complex z) {
    Quaternion k = cauchy_kernel_left(Quaternion::lift(z, Quaternion::e1()), q);
    return Complex{k.w, k.x};
  };
  auto G = [&](Complex z) {
    // f = z1 + e2 conj(z2) form: the right splitting stem is conj(z2)
    Quaternion k = cauchy_kernel_left(Quaternion::lift(z, Quaternion::e1()), q);
    return Complex{k.y, -k.z};
  };
  const Complex i{0, 1};
  std::vector<std::function<Complex(Complex)>> stems{F, G};
  for (Complex z : {Complex{2.0, 0.3}, Complex{1.5, -1.0}, Complex{-2.0, 0.8}}) {
    double h = 1e-5;
    for (const auto& stem : stems) {
      Complex du = (stem(z + h) - stem(z - h)) / (2 * h);
      Complex dv = (stem(z + i * h) - stem(z - i * h)) / (2 * h);
      CHECK(std::abs(0.5 * (du + i * dv)) <= 1e-6);
    }
  }
}

TEST_CASE("star associativity is exact on integer coefficients") {
  Rng rng(131);
  for (int trial = 0; trial < 15; ++trial) {
    auto int_quat = [&]() {
      return Quaternion{std::floor(rng.uniform(-3, 4)), std::floor(rng.uniform(-3, 4)),
                        std::floor(rng.uniform(-3, 4)), std::floor(rng.uniform(-3, 4))};
    };
    std::vector<Quaternion> ca, cb, cc;
    for (int l = 0; l <= 2; ++l) {
      ca.push_back(int_quat());
      cb.push_back(int_quat());
      cc.push_back(int_quat());
    }
    SliceFunction ab_c = star_mul(
        star_mul(catalog::poly_quat(ca, Side::Left), catalog::poly_quat(cb, Side::Left)),
        catalog::poly_quat(cc, Side::Left));
    SliceFunction a_bc = star_mul(
        catalog::poly_quat(ca, Side::Left),
        star_mul(catalog::poly_quat(cb, Side::Left), catalog::poly_quat(cc, Side::Left)));
    REQUIRE(ab_c.poly().has_value());
    REQUIRE(a_bc.poly().has_value());
    for (int comp = 0; comp < 2; ++comp) {
      const auto& x = ab_c.poly()->comps[static_cast<std::size_t>(comp)];
      const auto& y = a_bc.poly()->comps[static_cast<std::size_t>(comp)];
      std::size_t len = std::max(x.size(), y.size());
      for (std::size_t l = 0; l < len; ++l) {
        Complex xv = l < x.size() ? x[l] : Complex{0, 0};
        Complex yv = l < y.size() ? y[l] : Complex{0, 0};
        CHECK(xv == yv);  // integer products stay exact in doubles
      }
    }
  }
}
