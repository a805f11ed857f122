#include "doctest.h"

#include "slicecalc/qmatrix.hpp"
#include "slicecalc/random_gen.hpp"
#include "test_support.hpp"

using namespace slicecalc;
using namespace slicecalc::testing;

TEST_CASE("embedding of scalar units") {
  QMatrix A(1);
  A(0, 0) = Quaternion::e1();
  Eigen::MatrixXcd X = embed(A);
  CHECK(std::abs(X(0, 0) - Complex{0, 1}) == 0.0);
  CHECK(std::abs(X(1, 1) - Complex{0, -1}) == 0.0);
  CHECK(std::abs(X(0, 1)) == 0.0);
  CHECK(std::abs(X(1, 0)) == 0.0);

  CHECK((embed(QMatrix::identity(3)) - Eigen::MatrixXcd::Identity(6, 6)).norm() == 0.0);
}

TEST_CASE("embedding is multiplicative and *-compatible") {
  Rng rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    QMatrix A = random_qmatrix(rng, 3);
    QMatrix B = random_qmatrix(rng, 3);
    Eigen::MatrixXcd lhs = embed(A * B);
    Eigen::MatrixXcd rhs = embed(A) * embed(B);
    CHECK((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
    CHECK((embed(A.adjoint()) - embed(A).adjoint()).norm() <= 1e-14 * (1.0 + embed(A).norm()));
  }
}

TEST_CASE("embedding round trip and pattern check") {
  Rng rng(103);
  QMatrix A = random_qmatrix(rng, 4);
  CHECK(approx(unembed(embed(A)), A, 1e-14 * (1.0 + A.frobenius_norm())));

  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 0) = Complex{1, 0};
  bad(1, 1) = Complex{2, 0};  // breaks conj symmetry
  CHECK_THROWS_AS(unembed(bad), ConditionViolated);

  // matvec consistency with the embedding
  QVector v = random_qvector(rng, 4);
  Eigen::VectorXcd ev = embed(A) * embed_vector(v);
  CHECK(vec_norm(unembed_vector(ev) - A * v) <= 1e-12 * (1.0 + vec_norm(A * v)));
}

TEST_CASE("qsolve and qinv") {
  Rng rng(107);
  SUBCASE("identity") {
    QVector b = random_qvector(rng, 3);
    CHECK(vec_norm(qsolve(QMatrix::identity(3), b) - b) <= 1e-14);
  }
  SUBCASE("scalar") {
    QMatrix A(1);
    A(0, 0) = Quaternion(2.0);
    QVector b{Quaternion::e1()};
    QVector x = qsolve(A, b);
    CHECK(approx(x[0], Quaternion::e1() / 2.0, 1e-15));
  }
  SUBCASE("random residual") {
    for (int trial = 0; trial < 20; ++trial) {
      QMatrix A = random_qmatrix(rng, 4) + QMatrix::identity(4) * 3.0;
      QVector b = random_qvector(rng, 4);
      QVector x = qsolve(A, b);
      CHECK(vec_norm(A * x - b) <= 1e-10 * (1.0 + vec_norm(b)) * cond(A));
    }
  }
  SUBCASE("inverse") {
    for (int trial = 0; trial < 10; ++trial) {
      QMatrix A = random_qmatrix(rng, 4) + QMatrix::identity(4) * 2.5;
      if (cond(A) > 1e6) continue;
      CHECK(approx(qinv(A) * A, QMatrix::identity(4), 1e-10 * cond(A)));
    }
  }
  SUBCASE("singular matrix rejected") {
    QMatrix A(2);  // zero matrix
    CHECK_THROWS_AS(qinv(A), Singular);
  }
}

TEST_CASE("operator norm") {
  CHECK(op_norm(QMatrix::identity(5)) == doctest::Approx(1.0));
  QMatrix D = QMatrix::diag({Quaternion(2.0), Quaternion::e1() * 3.0});
  CHECK(op_norm(D) == doctest::Approx(3.0));

  Rng rng(109);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix A = random_qmatrix(rng, 3) + QMatrix::identity(3) * 2.0;
    CHECK(op_norm(A) * op_norm(qinv(A)) >= 1.0 - 1e-12);
  }
}

TEST_CASE("inner product") {
  QVector a{Quaternion(1.0), Quaternion(0.0)};
  QVector b{Quaternion(0.0), Quaternion(1.0)};
  CHECK(inner(a, b).norm() == 0.0);

  // <e1, e2> = conj(e2) e1 = e3
  CHECK(approx(inner({Quaternion::e1()}, {Quaternion::e2()}), Quaternion::e3(), 0.0));

  Rng rng(113);
  for (int trial = 0; trial < 100; ++trial) {
    QVector x = random_qvector(rng, 3);
    QVector y = random_qvector(rng, 3);
    QVector z = random_qvector(rng, 3);
    Quaternion alpha = rng.quaternion();
    Quaternion beta = rng.quaternion();
    double scale = 1.0 + vec_norm(x) * vec_norm(y) * (alpha.norm() + beta.norm());

    // conjugate symmetry
    CHECK(approx(inner(x, y), inner(y, x).conj(), 1e-13 * scale));
    // positivity
    Quaternion xx = inner(x, x);
    CHECK(xx.w >= 0.0);
    CHECK(std::abs(xx.x) + std::abs(xx.y) + std::abs(xx.z) <= 1e-13 * (1.0 + xx.w));
    // right linearity in the first slot
    Quaternion lhs = inner(x * alpha + y * beta, z);
    Quaternion rhs = inner(x, z) * alpha + inner(y, z) * beta;
    CHECK(approx(lhs, rhs, 1e-12 * scale));
    // conjugate linearity in the second slot
    Quaternion lhs2 = inner(x, y * alpha + z * beta);
    Quaternion rhs2 = alpha.conj() * inner(x, y) + beta.conj() * inner(x, z);
    CHECK(approx(lhs2, rhs2, 1e-12 * scale));
  }
  CHECK(vec_norm(QVector{}) == 0.0);
  CHECK_THROWS_AS(inner(QVector(2), QVector(3)), DimensionMismatch);
}

TEST_CASE("matrices act right-linearly") {
  Rng rng(127);
  QMatrix A = random_qmatrix(rng, 3);
  QVector v = random_qvector(rng, 3);
  Quaternion lambda = rng.quaternion();
  QVector lhs = A * (v * lambda);
  QVector rhs = (A * v) * lambda;
  CHECK(vec_norm(lhs - rhs) <= 1e-13 * (1.0 + vec_norm(rhs)));
}
