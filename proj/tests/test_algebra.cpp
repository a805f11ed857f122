#include "doctest.h"

#include "slicecalc/clifford.hpp"
#include "slicecalc/quaternion.hpp"
#include "slicecalc/rng.hpp"
#include "slicecalc/slice_domain.hpp"
#include "test_support.hpp"

using namespace slicecalc;
using namespace slicecalc::testing;

TEST_CASE("quaternion multiplication table") {
  CHECK(approx(Quaternion::e1() * Quaternion::e2(), Quaternion::e3(), 0.0));
  CHECK(approx(Quaternion::e2() * Quaternion::e1(), -Quaternion::e3(), 0.0));
  CHECK(approx(Quaternion::e1() * Quaternion::e1(), Quaternion(-1.0), 0.0));
  CHECK(approx(Quaternion::e2() * Quaternion::e2(), Quaternion(-1.0), 0.0));
  CHECK(approx(Quaternion::e3() * Quaternion::e3(), Quaternion(-1.0), 0.0));

  Quaternion q{1, 2, 0, 0};
  CHECK(approx(q * q.conj(), Quaternion(5.0), 0.0));  // |1 + 2 e1|^2 = 5
  CHECK(approx(Quaternion(1.0) * q, q, 0.0));
}

TEST_CASE("quaternion norm is multiplicative") {
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    Quaternion p = rng.quaternion(2.0);
    Quaternion q = rng.quaternion(2.0);
    double lhs = (p * q).norm();
    double rhs = p.norm() * q.norm();
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + rhs));
  }
}

TEST_CASE("clifford blade products") {
  const int n = 3;
  auto e1 = CliffordElement::generator(n, 1);
  auto e2 = CliffordElement::generator(n, 2);
  auto e12 = CliffordElement::basis(n, 0b011);

  CHECK((e1 * e2 - e12).norm() == 0.0);
  CHECK((e12 * e12 + CliffordElement::scalar(n, 1.0)).norm() == 0.0);  // e12^2 = -1

  Rng rng(7);
  CliffordElement a(n);
  for (int i = 0; i < a.size(); ++i) a[static_cast<std::uint32_t>(i)] = rng.normal();
  CHECK((CliffordElement::scalar(n, 1.0) * a - a).norm() == 0.0);
}

TEST_CASE("clifford product is associative") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform() * 2.999);  // n in {2,3,4}
    CliffordElement a(n), b(n), c(n);
    for (int i = 0; i < a.size(); ++i) {
      a[static_cast<std::uint32_t>(i)] = rng.normal();
      b[static_cast<std::uint32_t>(i)] = rng.normal();
      c[static_cast<std::uint32_t>(i)] = rng.normal();
    }
    auto lhs = (a * b) * c;
    auto rhs = a * (b * c);
    double scale = a.norm() * b.norm() * c.norm();
    CHECK((lhs - rhs).norm() <= 1e-12 * (1.0 + scale));
  }
}

TEST_CASE("clifford product dimension mismatch") {
  CHECK_THROWS_AS(CliffordElement(2) * CliffordElement(3), DimensionMismatch);
}

TEST_CASE("quaternions are R_2") {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    Quaternion p = rng.quaternion();
    Quaternion q = rng.quaternion();
    CliffordElement prod = quaternion_to_r2(p) * quaternion_to_r2(q);
    CHECK(approx(r2_to_quaternion(prod), p * q, 1e-14 * (1.0 + (p * q).norm())));
  }
}

TEST_CASE("paravector arithmetic") {
  Paravector x(3, {1.0, 2.0, 0.0, 2.0});
  CHECK(x.norm_sq() == doctest::Approx(9.0));
  CHECK(x.conj().c[0] == 1.0);
  CHECK(x.conj().c[1] == -2.0);
  CliffordElement xxbar = x * x.conj();
  CHECK(xxbar[0] == doctest::Approx(9.0));
  for (int i = 1; i < xxbar.size(); ++i) {
    CHECK(std::abs(xxbar[static_cast<std::uint32_t>(i)]) <= 1e-14);
  }
}

TEST_CASE("slice decomposition") {
  SUBCASE("generic point") {
    auto d = slice_decompose(Quaternion{1, 2, 0, 0});
    CHECK(d.u == 1.0);
    CHECK(d.v == 2.0);
    CHECK(approx(d.i, Quaternion::e1(), 0.0));
  }
  SUBCASE("real input gets the default unit e1") {
    auto d = slice_decompose(Quaternion(3.0));
    CHECK(d.u == 3.0);
    CHECK(d.v == 0.0);
    CHECK(approx(d.i, Quaternion::e1(), 0.0));
  }
  SUBCASE("diagonal imaginary direction") {
    auto d = slice_decompose(Quaternion{0, 1, 1, 0});
    CHECK(d.u == 0.0);
    CHECK(d.v == doctest::Approx(std::sqrt(2.0)));
    CHECK(approx(d.i, Quaternion{0, 1, 1, 0} / std::sqrt(2.0), 1e-15));
  }
  SUBCASE("round trip is the identity") {
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
      Quaternion q = rng.quaternion(3.0);
      CHECK(approx(slice_compose(slice_decompose(q)), q, 1e-14 * (1.0 + q.norm())));
    }
  }
}

TEST_CASE("paravector slice decomposition round trip") {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    Paravector x(3);
    for (int j = 0; j <= 3; ++j) x.c[j] = rng.normal();
    auto d = slice_decompose(x);
    Paravector back = slice_compose(d);
    CHECK((back - x).norm() <= 1e-14 * (1.0 + x.norm()));
    CHECK(d.v >= 0.0);
  }
}

TEST_CASE("argument function") {
  CHECK(arg(Quaternion(-2.0)) == doctest::Approx(kPi));
  CHECK(arg(Quaternion::e1()) == doctest::Approx(kPi / 2));
  CHECK(arg(Quaternion{1, 1, 0, 0}) == doctest::Approx(kPi / 4));
  CHECK_THROWS_AS(arg(Quaternion(0.0)), ZeroInput);

  // s = |s| (cos t + i_s sin t)
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    Quaternion s = rng.quaternion(2.0);
    if (s.norm() < 1e-3) continue;
    double t = arg(s);
    CHECK(t >= 0.0);
    CHECK(t <= kPi);
    Quaternion i_s = slice_decompose(s).i;
    CHECK(approx(testing::polar_quaternion(s.norm(), i_s, t), s, 1e-12 * (1.0 + s.norm())));
  }
}

TEST_CASE("spectral spheres") {
  CHECK(sphere_contains(sphere_of(Quaternion::e1()), Quaternion::e2()));
  CHECK(sphere_contains(sphere_of(Quaternion(2.0)), Quaternion(2.0)));
  CHECK_FALSE(sphere_contains(sphere_of(Quaternion(2.0)), Quaternion{2, 1, 0, 0}));
  CHECK(sphere_contains(sphere_of(Quaternion{1, 1, 0, 0}), Quaternion{1, 0, 0, 1}));
}

TEST_CASE("slice domains") {
  SliceDomain ball = SliceDomain::ball(2.0);
  CHECK(ball.contains(1.0, 0.5));
  CHECK_FALSE(ball.contains(2.0, 1.0));
  CHECK(ball.contains(-1.5, 0.0));

  SliceDomain sector = SliceDomain::sector(kPi / 4);
  CHECK(sector.contains(1.0, 0.5));
  CHECK_FALSE(sector.contains(0.0, 1.0));
  CHECK_FALSE(sector.contains(-1.0, 0.0));

  SliceDomain meet = ball.intersect(sector);
  CHECK(meet.contains(1.0, 0.5));
  CHECK_FALSE(meet.contains(3.0, 0.5));
}
