#include "slicecalc/slice_function.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace slicecalc {

namespace {

int comps_for(int n) { return 1 << (n - 1); }

// Completion-unit blade of a component mask, as an element of the algebra:
// component bit k corresponds to the generator e_{k+2}.
Quaternion comp_blade_quat(std::uint32_t mask) {
  return mask ? Quaternion::e2() : Quaternion(1.0);
}

CliffordElement comp_blade_clifford(std::uint32_t mask, int n) {
  return CliffordElement::basis(n, mask << 1);
}

StemFn reflect(StemFn f) {
  return [f = std::move(f)](Complex z) { return std::conj(f(std::conj(z))); };
}

std::vector<Complex> conj_coeffs(std::vector<Complex> c) {
  for (auto& v : c) v = std::conj(v);
  return c;
}

std::vector<Complex> convolve(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Complex> out(a.size() + b.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex horner_real(const std::vector<double>& coeffs, Complex z) {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<StemFn> stems_from_poly(const PolyData& p) {
  std::vector<StemFn> stems;
  stems.reserve(p.comps.size());
  for (const auto& c : p.comps) {
    stems.push_back([c](Complex z) { return horner(c, z); });
  }
  return stems;
}

void check_in_domain(const SliceDomain& d, double u, double v) {
  if (!d.contains(u, v)) {
    throw OutOfDomain("sphere (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") outside the function domain");
  }
}

}  // namespace

std::string SliceDomain::describe() const {
  return "{rmin=" + std::to_string(rmin) + ", rmax=" + std::to_string(rmax) +
         ", mu=" + std::to_string(mu) + "}";
}

int PolyData::degree() const {
  int deg = 0;
  for (const auto& c : comps) {
    for (std::size_t l = 0; l < c.size(); ++l) {
      if (std::abs(c[l]) != 0.0) deg = std::max(deg, static_cast<int>(l));
    }
  }
  return deg;
}

SliceFunction::SliceFunction(Side side, int n, SliceDomain domain, std::vector<StemFn> stems)
    : side_(side), n_(n), domain_(domain), stems_(std::move(stems)) {
  if (n_ < 1 || n_ > CliffordElement::kMaxDim) {
    throw DimensionMismatch("slice function: algebra dimension out of range");
  }
  const auto want = static_cast<std::size_t>(comps_for(n_));
  if (stems_.size() != want && !(side_ == Side::Intrinsic && stems_.size() == 1)) {
    throw DimensionMismatch("slice function: expected 2^{n-1} stem components");
  }
}

Complex SliceFunction::stem(int comp, Complex z) const {
  if (comp < 0) throw DimensionMismatch("negative stem index");
  if (comp >= components()) return {0.0, 0.0};
  return stems_[static_cast<std::size_t>(comp)](z);
}

SliceFunction& SliceFunction::with_poly(PolyData p) {
  poly_ = std::move(p);
  zero_deg_hint_ = std::max(1, poly_->degree());
  return *this;
}
SliceFunction& SliceFunction::with_rational(RationalData r) {
  rational_ = std::move(r);
  return *this;
}
SliceFunction& SliceFunction::with_psi_power(int k) {
  psi_power_ = k;
  return *this;
}
SliceFunction& SliceFunction::with_decay(DecayBound b, double valid_mu) {
  decay_ = b;
  decay_mu_ = valid_mu;
  return *this;
}
SliceFunction& SliceFunction::with_growth(GrowthBound b, double valid_mu) {
  growth_ = b;
  growth_mu_ = valid_mu;
  return *this;
}
SliceFunction& SliceFunction::with_domain(SliceDomain d) {
  domain_ = d;
  return *this;
}
SliceFunction& SliceFunction::with_zero_threshold_degree(int deg) {
  zero_deg_hint_ = std::max(1, deg);
  return *this;
}

Quaternion eval(const SliceFunction& f, const Quaternion& q) {
  if (!f.algebra_generic() && f.generators() != 2) {
    throw DimensionMismatch("function is not defined over the quaternions");
  }
  const SliceDecomposition d = slice_decompose(q);
  check_in_domain(f.domain(), d.u, d.v);
  const Complex z{d.u, d.v};

  Quaternion fp, fm;
  for (int c = 0; c < f.components(); ++c) {
    const auto mask = static_cast<std::uint32_t>(c);
    Quaternion blade = comp_blade_quat(mask);
    Quaternion vp = Quaternion::lift(f.stem(c, z), Quaternion::e1());
    Quaternion vm = Quaternion::lift(f.stem(c, std::conj(z)), Quaternion::e1());
    if (f.side() == Side::Right) {
      fp += blade * vp;
      fm += blade * vm;
    } else {
      fp += vp * blade;
      fm += vm * blade;
    }
  }
  if (f.side() == Side::Right) {
    return (fp + fm) * 0.5 + ((fm - fp) * Quaternion::e1()) * 0.5 * d.i;
  }
  return (fp + fm) * 0.5 + d.i * (Quaternion::e1() * (fm - fp)) * 0.5;
}

CliffordElement eval(const SliceFunction& f, const Paravector& x) {
  const int n = f.algebra_generic() ? x.n : f.generators();
  if (n != x.n) throw DimensionMismatch("function/paravector algebra mismatch");
  const ParavectorDecomposition d = slice_decompose(x);
  check_in_domain(f.domain(), d.u, d.v);
  const Complex z{d.u, d.v};
  const CliffordElement e1 = CliffordElement::generator(n, 1);

  CliffordElement fp(n), fm(n);
  for (int c = 0; c < f.components(); ++c) {
    const auto mask = static_cast<std::uint32_t>(c);
    CliffordElement blade = comp_blade_clifford(mask, n);
    Complex sp = f.stem(c, z);
    Complex sm = f.stem(c, std::conj(z));
    CliffordElement vp = e1 * sp.imag() + CliffordElement::scalar(n, sp.real());
    CliffordElement vm = e1 * sm.imag() + CliffordElement::scalar(n, sm.real());
    if (f.side() == Side::Right) {
      fp += blade * vp;
      fm += blade * vm;
    } else {
      fp += vp * blade;
      fm += vm * blade;
    }
  }
  CliffordElement ix = d.i.to_clifford();
  if (f.side() == Side::Right) {
    return (fp + fm) * 0.5 + ((fm - fp) * e1) * 0.5 * ix;
  }
  return (fp + fm) * 0.5 + ix * (e1 * (fm - fp)) * 0.5;
}

Complex eval_intrinsic(const SliceFunction& f, Complex z) {
  if (!f.intrinsic()) throw SideMismatch("eval_intrinsic needs an intrinsic function");
  check_in_domain(f.domain(), z.real(), std::abs(z.imag()));
  return f.stem(0, z);
}

SliceFunction star_mul(const SliceFunction& f, const SliceFunction& g) {
  if ((f.side() == Side::Left && g.side() == Side::Right) ||
      (f.side() == Side::Right && g.side() == Side::Left)) {
    throw SideMismatch("star product of a left and a right function");
  }
  Side side = Side::Intrinsic;
  if (f.side() != Side::Intrinsic) side = f.side();
  if (g.side() != Side::Intrinsic) side = g.side();

  int n;
  if (f.algebra_generic() && g.algebra_generic()) {
    n = std::max(f.generators(), g.generators());
  } else if (f.algebra_generic()) {
    n = g.generators();
  } else if (g.algebra_generic()) {
    n = f.generators();
  } else if (f.generators() == g.generators()) {
    n = f.generators();
  } else {
    throw DimensionMismatch("star product: algebra dimension mismatch");
  }
  SliceDomain domain = f.domain().intersect(g.domain());

  std::vector<StemFn> stems;
  // Intrinsic factors multiply pointwise on every component (the reflection
  // twist is the identity on conjugate-symmetric stems).
  if (f.intrinsic() && f.components() == 1) {
    stems.reserve(static_cast<std::size_t>(g.components()));
    for (int c = 0; c < g.components(); ++c) {
      stems.push_back([f, g, c](Complex z) { return f.stem(0, z) * g.stem(c, z); });
    }
  } else if (g.intrinsic() && g.components() == 1) {
    stems.reserve(static_cast<std::size_t>(f.components()));
    for (int c = 0; c < f.components(); ++c) {
      stems.push_back([f, g, c](Complex z) { return f.stem(c, z) * g.stem(0, z); });
    }
  } else {
    // Full componentwise product: the C_i-valued coefficient that crosses an
    // odd blade picks up the holomorphic reflection z -> conj(F(conj z)).
    struct Term {
      int a, b;
      double sign;
      bool twist_a, twist_b;
    };
    const int nc = comps_for(n);
    std::vector<std::vector<Term>> terms(static_cast<std::size_t>(nc));
    const bool right = (side == Side::Right);
    for (int a = 0; a < nc; ++a) {
      for (int b = 0; b < nc; ++b) {
        const auto ma = static_cast<std::uint32_t>(a);
        const auto mb = static_cast<std::uint32_t>(b);
        double sign = blade_sign(ma, mb);
        bool odd_a = std::popcount(ma) & 1;
        bool odd_b = std::popcount(mb) & 1;
        // Left: f_A crosses nothing, g_B crosses i_A. Right: i_B crosses f_A.
        Term t{a, b, sign, right && odd_b, !right && odd_a};
        terms[static_cast<std::size_t>(a ^ b)].push_back(t);
      }
    }
    stems.reserve(static_cast<std::size_t>(nc));
    for (int c = 0; c < nc; ++c) {
      auto list = terms[static_cast<std::size_t>(c)];
      stems.push_back([f, g, list](Complex z) {
        Complex acc{0.0, 0.0};
        for (const auto& t : list) {
          Complex va = t.twist_a ? std::conj(f.stem(t.a, std::conj(z))) : f.stem(t.a, z);
          Complex vb = t.twist_b ? std::conj(g.stem(t.b, std::conj(z))) : g.stem(t.b, z);
          acc += t.sign * va * vb;
        }
        return acc;
      });
    }
  }

  SliceFunction out(side, n, domain, std::move(stems));

  if (f.poly() && g.poly()) {
    const int nc = out.components();
    PolyData p;
    p.comps.assign(static_cast<std::size_t>(nc), {});
    const bool right = (side == Side::Right);
    const auto& fa = f.poly()->comps;
    const auto& gb = g.poly()->comps;
    for (std::size_t a = 0; a < fa.size(); ++a) {
      for (std::size_t b = 0; b < gb.size(); ++b) {
        if (fa[a].empty() || gb[b].empty()) continue;
        const auto ma = static_cast<std::uint32_t>(a);
        const auto mb = static_cast<std::uint32_t>(b);
        double sign = blade_sign(ma, mb);
        bool odd_a = std::popcount(ma) & 1;
        bool odd_b = std::popcount(mb) & 1;
        auto ca = (right && odd_b) ? conj_coeffs(fa[a]) : fa[a];
        auto cb = (!right && odd_a) ? conj_coeffs(gb[b]) : gb[b];
        auto prod = convolve(ca, cb);
        auto& dst = p.comps[a ^ b];
        if (dst.size() < prod.size()) dst.resize(prod.size(), Complex{0.0, 0.0});
        for (std::size_t l = 0; l < prod.size(); ++l) dst[l] += sign * prod[l];
      }
    }
    out.with_poly(std::move(p));
  }

  if (f.rational() && g.rational() && out.intrinsic()) {
    auto rn = convolve(std::vector<Complex>(f.rational()->num.begin(), f.rational()->num.end()),
                       std::vector<Complex>(g.rational()->num.begin(), g.rational()->num.end()));
    auto rd = convolve(std::vector<Complex>(f.rational()->den.begin(), f.rational()->den.end()),
                       std::vector<Complex>(g.rational()->den.begin(), g.rational()->den.end()));
    RationalData r;
    for (auto v : rn) r.num.push_back(v.real());
    for (auto v : rd) r.den.push_back(v.real());
    out.with_rational(std::move(r));
  }

  if (f.decay() && g.decay()) {
    double mu = std::min(f.decay_mu(), g.decay_mu());
    out.with_decay({f.decay()->alpha + g.decay()->alpha, f.decay()->c * g.decay()->c}, mu);
  } else if (f.decay() && g.growth() && f.decay()->alpha > g.growth()->k) {
    double mu = std::min(f.decay_mu(), g.growth_mu());
    out.with_decay({f.decay()->alpha - g.growth()->k, 2.0 * f.decay()->c * g.growth()->C}, mu);
  } else if (g.decay() && f.growth() && g.decay()->alpha > f.growth()->k) {
    double mu = std::min(g.decay_mu(), f.growth_mu());
    out.with_decay({g.decay()->alpha - f.growth()->k, 2.0 * g.decay()->c * f.growth()->C}, mu);
  }
  if (f.growth() && g.growth()) {
    double mu = std::min(f.growth_mu(), g.growth_mu());
    out.with_growth({f.growth()->k + g.growth()->k, f.growth()->C * g.growth()->C}, mu);
  }
  return out;
}

SliceFunction conjugate(const SliceFunction& f) {
  std::vector<StemFn> stems;
  stems.reserve(static_cast<std::size_t>(f.components()));
  for (int c = 0; c < f.components(); ++c) {
    int grade = std::popcount(static_cast<std::uint32_t>(c));
    StemFn base = [f, c](Complex z) { return f.stem(c, z); };
    switch (grade & 3) {
      case 0: stems.push_back(reflect(base)); break;
      case 1: stems.push_back([base](Complex z) { return -base(z); }); break;
      case 2: {
        auto r = reflect(base);
        stems.push_back([r](Complex z) { return -r(z); });
        break;
      }
      default: stems.push_back(base); break;
    }
  }
  SliceFunction out(f.side(), f.generators(), f.domain(), std::move(stems));
  if (f.poly()) {
    PolyData p = *f.poly();
    for (std::size_t c = 0; c < p.comps.size(); ++c) {
      int grade = std::popcount(static_cast<std::uint32_t>(c));
      switch (grade & 3) {
        case 0: p.comps[c] = conj_coeffs(p.comps[c]); break;
        case 1:
          for (auto& v : p.comps[c]) v = -v;
          break;
        case 2:
          p.comps[c] = conj_coeffs(p.comps[c]);
          for (auto& v : p.comps[c]) v = -v;
          break;
        default: break;
      }
    }
    out.with_poly(std::move(p));
  }
  if (f.rational()) out.with_rational(*f.rational());
  if (f.decay()) out.with_decay(*f.decay(), f.decay_mu());
  if (f.growth()) out.with_growth(*f.growth(), f.growth_mu());
  return out;
}

SliceFunction symmetrize(const SliceFunction& f) {
  if (f.intrinsic() && f.components() == 1) {
    return star_mul(f, f);
  }
  SliceFunction h = star_mul(f, conjugate(f));
  std::vector<StemFn> stems{[h](Complex z) { return h.stem(0, z); }};
  SliceFunction out(Side::Intrinsic, f.generators(), f.domain(), std::move(stems));
  if (h.poly() && !h.poly()->comps.empty()) {
    out.with_poly(PolyData{{h.poly()->comps[0]}});
  }
  out.with_zero_threshold_degree(2 * f.zero_threshold_degree());
  return out;
}

namespace {

// Scale-aware zero-set threshold for f^s.
double zero_threshold(Complex z, int deg) {
  return 1e-12 * (1.0 + std::pow(std::abs(z), 2.0 * deg));
}

// Condition check for the star inverse of non-intrinsic functions over
// n >= 3 generators: f_i * f_i^c must be C_i-valued.
void check_star_inverse_condition(const SliceFunction& f, const SliceFunction& h) {
  if (f.generators() <= 2 || f.intrinsic()) return;
  const double radii[] = {0.31, 0.77, 1.3, 2.9};
  const double angles[] = {0.13, 0.71, 1.9, 2.6, -0.9};
  for (double r : radii) {
    for (double a : angles) {
      if (!f.domain().contains(r * std::cos(a), std::abs(r * std::sin(a)))) continue;
      Complex z = std::polar(r, a);
      double scale = std::abs(h.stem(0, z)) + 1.0;
      for (int c = 1; c < h.components(); ++c) {
        if (std::abs(h.stem(c, z)) > 1e-8 * scale) {
          throw ConditionViolated("f * f^c is not slice-valued; star inverse undefined");
        }
      }
    }
  }
}

}  // namespace

SliceFunction star_inv(const SliceFunction& f) {
  SliceFunction fc = conjugate(f);
  SliceFunction h = star_mul(f, fc);
  check_star_inverse_condition(f, h);
  const int deg = 2 * f.zero_threshold_degree();

  std::vector<StemFn> stems;
  stems.reserve(static_cast<std::size_t>(fc.components()));
  for (int c = 0; c < fc.components(); ++c) {
    stems.push_back([h, fc, c, deg](Complex z) {
      Complex fs = h.stem(0, z);
      if (std::abs(fs) < zero_threshold(z, deg)) {
        throw ZeroDivisor("evaluation point lies on (or near) the zero set of f^s");
      }
      return fc.stem(c, z) / fs;
    });
  }
  const bool single_intrinsic = f.intrinsic() && f.components() == 1;
  SliceFunction out(f.side(), f.generators(), f.domain(),
                    single_intrinsic ? std::vector<StemFn>{stems[0]} : std::move(stems));
  if (f.rational() && f.intrinsic()) {
    out.with_rational(RationalData{f.rational()->den, f.rational()->num});
  }
  return out;
}

Quaternion cauchy_kernel_left(const Quaternion& s, const Quaternion& q) {
  if (sphere_contains(sphere_of(s), q, 1e-13 * (1.0 + s.norm()))) {
    throw OnSpectrumSphere("Cauchy kernel evaluated on the sphere of s");
  }
  Quaternion pencil = q * q - 2.0 * s.re() * q + Quaternion(s.norm_sq());
  return -(pencil.inverse() * (q - s.conj()));
}

Quaternion cauchy_kernel_right(const Quaternion& s, const Quaternion& q) {
  if (sphere_contains(sphere_of(s), q, 1e-13 * (1.0 + s.norm()))) {
    throw OnSpectrumSphere("Cauchy kernel evaluated on the sphere of s");
  }
  Quaternion pencil = q * q - 2.0 * s.re() * q + Quaternion(s.norm_sq());
  return -((q - s.conj()) * pencil.inverse());
}

namespace {

Paravector paravector_square(const Paravector& x) {
  // (x0 + x_)^2 = x0^2 - |x_|^2 + 2 x0 x_
  Paravector out(x.n);
  double v2 = 0.0;
  for (int j = 1; j <= x.n; ++j) v2 += x.c[j] * x.c[j];
  out.c[0] = x.c[0] * x.c[0] - v2;
  for (int j = 1; j <= x.n; ++j) out.c[j] = 2.0 * x.c[0] * x.c[j];
  return out;
}

Paravector paravector_pencil(const Paravector& s, const Paravector& x) {
  if (sphere_contains(sphere_of(s), x, 1e-13 * (1.0 + s.norm()))) {
    throw OnSpectrumSphere("Cauchy kernel evaluated on the sphere of s");
  }
  Paravector p = paravector_square(x) - x * (2.0 * s.re());
  p.c[0] += s.norm_sq();
  return p;
}

Paravector paravector_inverse(const Paravector& p) {
  double n2 = p.norm_sq();
  if (n2 == 0.0) throw ZeroInput("inverse of zero paravector");
  return p.conj() * (1.0 / n2);
}

}  // namespace

CliffordElement cauchy_kernel_left(const Paravector& s, const Paravector& x) {
  Paravector p = paravector_pencil(s, x);
  return -(paravector_inverse(p).to_clifford() * (x - s.conj()).to_clifford());
}

CliffordElement cauchy_kernel_right(const Paravector& s, const Paravector& x) {
  Paravector p = paravector_pencil(s, x);
  return -((x - s.conj()).to_clifford() * paravector_inverse(p).to_clifford());
}

std::vector<SpectralSphere> real_poly_roots_as_spheres(const std::vector<double>& coeffs) {
  // strip leading (highest-degree) zeros
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg > 0 && coeffs[static_cast<std::size_t>(deg)] == 0.0) --deg;
  if (deg <= 0) {
    if (deg == 0 && coeffs[0] == 0.0) throw ZeroInput("zero polynomial has no root set");
    return {};
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  double lead = coeffs[static_cast<std::size_t>(deg)];
  for (int i = 0; i < deg; ++i) {
    companion(i, deg - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;
    if (i > 0) companion(i, i - 1) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion);
  if (es.info() != Eigen::Success) throw EigenFailure("companion eigenvalue solve failed");
  std::vector<SpectralSphere> spheres;
  for (int i = 0; i < deg; ++i) {
    Complex root = es.eigenvalues()(i);
    double u = root.real();
    double v = std::abs(root.imag());
    bool merged = false;
    for (auto& sp : spheres) {
      if (std::hypot(sp.u - u, sp.v - v) < 1e-8 * (1.0 + std::abs(u) + v)) {
        sp.multiplicity += 1;
        merged = true;
        break;
      }
    }
    if (!merged) spheres.push_back({u, v, 1});
  }
  // complex roots appear as conjugate pairs; count each sphere once per pair
  for (auto& sp : spheres) {
    if (sp.v > 1e-12) sp.multiplicity = std::max(1, sp.multiplicity / 2);
  }
  return spheres;
}

std::vector<SpectralSphere> rational_poles(const SliceFunction& f) {
  if (!f.rational()) return {};
  return real_poly_roots_as_spheres(f.rational()->den);
}

SliceFunction scale_argument(const SliceFunction& f, double t) {
  if (!(t > 0.0)) throw ParseError("scale_argument needs t > 0");
  std::vector<StemFn> stems;
  for (int c = 0; c < f.components(); ++c) {
    stems.push_back([f, c, t](Complex z) { return f.stem(c, t * z); });
  }
  SliceFunction out(f.side(), f.generators(), f.domain().scaled(t), std::move(stems));
  if (f.poly()) {
    PolyData p = *f.poly();
    for (auto& comp : p.comps) {
      double tl = 1.0;
      for (auto& c : comp) {
        c *= tl;
        tl *= t;
      }
    }
    out.with_poly(std::move(p));
  }
  if (f.rational()) {
    RationalData r = *f.rational();
    double tl = 1.0;
    for (auto& c : r.num) {
      c *= tl;
      tl *= t;
    }
    tl = 1.0;
    for (auto& c : r.den) {
      c *= tl;
      tl *= t;
    }
    out.with_rational(std::move(r));
  }
  double boost = std::max(t, 1.0 / t);
  if (f.decay()) {
    out.with_decay({f.decay()->alpha, f.decay()->c * std::pow(boost, f.decay()->alpha)},
                   f.decay_mu());
  }
  if (f.growth()) {
    out.with_growth({f.growth()->k, f.growth()->C * std::pow(boost, f.growth()->k)},
                    f.growth_mu());
  }
  return out;
}

double holomorphy_residual(const SliceFunction& f, int comp, Complex z, double h) {
  const Complex i{0.0, 1.0};
  Complex du = (f.stem(comp, z + h) - f.stem(comp, z - h)) / (2.0 * h);
  Complex dv = (f.stem(comp, z + i * h) - f.stem(comp, z - i * h)) / (2.0 * h);
  return std::abs(0.5 * (du + i * dv));
}

namespace catalog {

SliceFunction one() { return constant(1.0); }

SliceFunction constant(double c) {
  SliceFunction f(Side::Intrinsic, 2, SliceDomain::whole(),
                  {[c](Complex) { return Complex{c, 0.0}; }});
  f.with_poly(PolyData{{{Complex{c, 0.0}}}});
  f.with_rational(RationalData{{c}, {1.0}});
  f.with_growth({0.5, std::abs(c)}, kPi);
  return f;
}

SliceFunction pow(int m) {
  if (m < 0) throw ParseError("pow(m) needs m >= 0");
  if (m == 0) return one();
  std::vector<double> coeffs(static_cast<std::size_t>(m) + 1, 0.0);
  coeffs.back() = 1.0;
  return poly_real(coeffs);
}

SliceFunction poly_real(const std::vector<double>& coeffs) {
  if (coeffs.empty()) throw ParseError("empty coefficient list");
  std::vector<Complex> cc(coeffs.begin(), coeffs.end());
  SliceFunction f(Side::Intrinsic, 2, SliceDomain::whole(),
                  {[cc](Complex z) { return horner(cc, z); }});
  f.with_poly(PolyData{{cc}});
  f.with_rational(RationalData{coeffs, {1.0}});
  double sum = 0.0;
  for (double c : coeffs) sum += std::abs(c);
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg > 0 && coeffs[static_cast<std::size_t>(deg)] == 0.0) --deg;
  f.with_growth({std::max<double>(deg, 0.5), sum}, kPi);
  return f;
}

SliceFunction poly_quat(const std::vector<Quaternion>& coeffs, Side side) {
  if (coeffs.empty()) throw ParseError("empty coefficient list");
  PolyData p;
  p.comps.assign(2, {});
  p.comps[0].reserve(coeffs.size());
  p.comps[1].reserve(coeffs.size());
  for (const auto& a : coeffs) {
    p.comps[0].push_back(a.z1());
    // left  f = sum q^l a_l:   f_i(z) = sum z^l z1 + (sum z^l z2) e2
    // right f = sum a_l q^l:   f_i(z) = sum z1 z^l + e2 (sum conj(z2) z^l)
    p.comps[1].push_back(side == Side::Right ? std::conj(a.z2()) : a.z2());
  }
  if (side == Side::Intrinsic) throw SideMismatch("quaternionic coefficients need a side");
  SliceFunction f(side, 2, SliceDomain::whole(), stems_from_poly(p));
  f.with_poly(std::move(p));
  return f;
}

SliceFunction rational(const std::vector<double>& num, const std::vector<double>& den) {
  if (num.empty() || den.empty()) throw ParseError("rational needs nonempty coefficients");
  bool den_zero = true;
  for (double c : den) den_zero = den_zero && c == 0.0;
  if (den_zero) throw ParseError("zero denominator");
  SliceFunction f(Side::Intrinsic, 2, SliceDomain::whole(),
                  {[num, den](Complex z) { return horner_real(num, z) / horner_real(den, z); }});
  f.with_rational(RationalData{num, den});
  int dn = static_cast<int>(num.size()) - 1;
  f.with_zero_threshold_degree(std::max(1, dn));
  return f;
}

SliceFunction psi(int k) {
  if (k < 1) throw ParseError("psi(k) needs k >= 1");
  // (s / (1 + s^2))^k = s^k / (1 + s^2)^k
  std::vector<double> num(static_cast<std::size_t>(k) + 1, 0.0);
  num.back() = 1.0;
  std::vector<double> den(static_cast<std::size_t>(2 * k) + 1, 0.0);
  double binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    den[static_cast<std::size_t>(2 * j)] = binom;
    binom = binom * (k - j) / (j + 1);
  }
  SliceFunction f = rational(num, den);
  f.with_psi_power(k);
  // |1 + s^2| >= (1 + |s|^2)/sqrt(2) holds for |arg s| <= pi/4.
  f.with_decay({static_cast<double>(k), std::pow(2.0, 0.5 * k)}, kPi / 4);
  f.with_growth({0.5, std::pow(2.0, 0.5 * k)}, kPi / 4);
  return f;
}

SliceFunction frac_pow(double alpha) {
  if (!(alpha > 0.0)) throw ParseError("frac_pow(alpha) needs alpha > 0");
  SliceFunction f(Side::Intrinsic, 2, SliceDomain::sector(kPi * (1.0 - 1e-12)),
                  {[alpha](Complex z) { return std::pow(z, alpha); }});
  f.with_growth({alpha, 1.0}, kPi);
  return f;
}

SliceFunction exp_neg() {
  SliceFunction f(Side::Intrinsic, 2, SliceDomain::whole(),
                  {[](Complex z) { return std::exp(-z); }});
  // bounded by 1 on sectors with mu < pi/2
  f.with_growth({0.5, 1.0}, kPi / 2 * (1.0 - 1e-9));
  return f;
}

}  // namespace catalog

ClassifyReport classify(const SliceFunction& f, double mu, const ClassifyOptions& opts) {
  ClassifyReport rep;
  const SliceDomain& dom = f.domain();
  double mu_eff = std::min(mu, dom.mu) * (1.0 - 1e-9);
  double r0 = std::max(opts.rmin, dom.rmin * (1.0 + 1e-9));
  double r1 = std::min(opts.rmax, dom.rmax * (1.0 - 1e-9));
  if (!(r0 < r1) || !(mu_eff > 0.0)) throw OutOfDomain("classification grid is empty");

  const int nr = opts.n_radii;
  const int na = opts.n_angles;
  std::vector<double> radii(static_cast<std::size_t>(nr));
  std::vector<double> sup(static_cast<std::size_t>(nr), 0.0);
  std::vector<Complex> sup_at(static_cast<std::size_t>(nr));

  auto value_norm = [&](Complex z) -> double {
    if (f.algebra_generic() || f.generators() == 2) {
      Quaternion q = Quaternion::lift(z, Quaternion::e1());
      return eval(f, q).norm();
    }
    Paravector x = Paravector::real(f.generators(), z.real()) +
                   Paravector::unit(f.generators(), 1) * z.imag();
    return eval(f, x).norm();
  };

  for (int i = 0; i < nr; ++i) {
    double t = nr == 1 ? 0.0 : static_cast<double>(i) / (nr - 1);
    double r = r0 * std::pow(r1 / r0, t);
    radii[static_cast<std::size_t>(i)] = r;
    for (int j = 0; j < na; ++j) {
      double a = na == 1 ? 0.0 : mu_eff * (2.0 * j / (na - 1) - 1.0);
      Complex z = std::polar(r, a);
      double v = value_norm(z);
      if (v > sup[static_cast<std::size_t>(i)] || j == 0) {
        sup[static_cast<std::size_t>(i)] = v;
        sup_at[static_cast<std::size_t>(i)] = z;
      }
    }
  }

  auto decade_slope = [&](bool at_zero) -> double {
    double edge = at_zero ? radii.front() : radii.back();
    double lo = at_zero ? edge : edge / 10.0;
    double hi = at_zero ? edge * 10.0 : edge;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int i = 0; i < nr; ++i) {
      double r = radii[static_cast<std::size_t>(i)];
      if (r < lo || r > hi) continue;
      double lx = std::log(r);
      double ly = std::log(std::max(sup[static_cast<std::size_t>(i)], 1e-300));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
      ++count;
    }
    if (count < 2) return 0.0;
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
  };

  rep.slope_at_zero = decade_slope(true);
  rep.slope_at_infinity = decade_slope(false);

  double grid_sup = 0.0;
  Complex grid_sup_at;
  bool all_finite = true;
  for (int i = 0; i < nr; ++i) {
    double v = sup[static_cast<std::size_t>(i)];
    if (!std::isfinite(v)) all_finite = false;
    if (v > grid_sup) {
      grid_sup = v;
      grid_sup_at = sup_at[static_cast<std::size_t>(i)];
    }
  }
  if (grid_sup == 0.0) {  // the zero function sits in every class
    rep.in_psi = rep.in_shinf = rep.in_f = true;
    return rep;
  }

  constexpr double kSlopeTol = 0.05;

  rep.in_shinf = all_finite && rep.slope_at_infinity <= kSlopeTol &&
                 rep.slope_at_zero >= -kSlopeTol;
  rep.sup_norm = grid_sup;
  rep.shinf_witness = grid_sup_at;

  rep.in_psi = all_finite && rep.slope_at_zero >= kSlopeTol &&
               rep.slope_at_infinity <= -kSlopeTol;
  if (rep.in_psi) {
    double alpha = std::min(rep.slope_at_zero, -rep.slope_at_infinity);
    alpha = std::min(alpha, 20.0);
    double c = 0.0;
    for (int i = 0; i < nr; ++i) {
      double r = radii[static_cast<std::size_t>(i)];
      double bound = std::pow(r, alpha) / (1.0 + std::pow(r, 2.0 * alpha));
      c = std::max(c, sup[static_cast<std::size_t>(i)] / bound);
    }
    rep.psi_bound = {alpha, c};
  } else {
    rep.psi_witness = rep.slope_at_zero < kSlopeTol ? sup_at.front() : sup_at.back();
  }

  rep.in_f = all_finite;
  if (rep.in_f) {
    double k = std::max({0.05, rep.slope_at_infinity, -rep.slope_at_zero}) * 1.05 + 0.01;
    double C = 0.0;
    for (int i = 0; i < nr; ++i) {
      double r = radii[static_cast<std::size_t>(i)];
      double bound = std::pow(r, k) + std::pow(r, -k);
      C = std::max(C, sup[static_cast<std::size_t>(i)] / bound);
    }
    rep.f_bound = {k, C};
  }
  return rep;
}

}  // namespace slicecalc
