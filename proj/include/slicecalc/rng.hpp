#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "slicecalc/clifford.hpp"
#include "slicecalc/quaternion.hpp"

namespace slicecalc {

// Deterministic random source. All draws go through explicit arithmetic on
// mt19937_64 output so that results are identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPiLocal * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPiLocal * u2);
  }

  Quaternion quaternion(double scale = 1.0) {
    return {scale * normal(), scale * normal(), scale * normal(), scale * normal()};
  }

  Quaternion unit_imaginary() {
    while (true) {
      Quaternion q{0.0, normal(), normal(), normal()};
      double n = q.norm();
      if (n > 1e-6) return q / n;
    }
  }

  Paravector unit_imaginary_paravector(int n) {
    while (true) {
      Paravector p(n);
      for (int j = 1; j <= n; ++j) p.c[j] = normal();
      double nn = p.norm();
      if (nn > 1e-6) return p * (1.0 / nn);
    }
  }

private:
  static constexpr double kPiLocal = 3.141592653589793238462643383279502884;
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace slicecalc
