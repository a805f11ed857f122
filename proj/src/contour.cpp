#include "slicecalc/contour.hpp"

#include <cmath>

namespace slicecalc {

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(order), 0.0);
  weights.assign(static_cast<std::size_t>(order), 0.0);
  // Newton iteration on Legendre polynomials from the Chebyshev initial guess.
  for (int i = 0; i < order; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = order * (x * p1 - p0) / (x * x - 1.0);
    nodes[static_cast<std::size_t>(order - 1 - i)] = x;
    weights[static_cast<std::size_t>(order - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

Contour build_circle(const Quaternion& slice_unit, double r, int n_nodes) {
  if (!(r > 0.0)) throw ParseError("circle radius must be positive");
  if (n_nodes < 8) throw ParseError("need at least 8 circle nodes");
  Contour c;
  c.kind = Contour::Kind::Circle;
  c.slice_unit = slice_unit;
  c.radius = r;
  c.nodes.reserve(static_cast<std::size_t>(n_nodes));
  const Complex minus_i{0.0, -1.0};
  for (int k = 0; k < n_nodes; ++k) {
    double a = 2.0 * kPi * k / n_nodes;
    Complex s = std::polar(r, a);
    // ds = i s da; ds_i = -i ds
    Complex w = minus_i * (Complex{0.0, 1.0} * s) * (2.0 * kPi / n_nodes);
    c.nodes.push_back({s, w});
  }
  return c;
}

namespace {

// Appends Gauss-Legendre panels for s(t), t in [a, b], with derivative ds/dt.
template <typename Fs, typename Fds>
void append_panels(std::vector<ContourNode>& nodes, Fs s_of, Fds ds_of, double a, double b,
                   int panels, int order) {
  std::vector<double> gx, gw;
  gauss_legendre(order, gx, gw);
  const Complex minus_i{0.0, -1.0};
  for (int p = 0; p < panels; ++p) {
    double t0 = a + (b - a) * p / panels;
    double t1 = a + (b - a) * (p + 1) / panels;
    double half = 0.5 * (t1 - t0);
    double mid = 0.5 * (t0 + t1);
    for (int k = 0; k < order; ++k) {
      double t = mid + half * gx[static_cast<std::size_t>(k)];
      Complex w = minus_i * ds_of(t) * (half * gw[static_cast<std::size_t>(k)]);
      nodes.push_back({s_of(t), w});
    }
  }
}

}  // namespace

Contour build_sector_path(const Quaternion& slice_unit, double theta, double eps, double R,
                          int panels_per_decade, int gl_order) {
  if (!(theta > 0.0) || !(theta < kPi)) throw ParseError("sector path needs theta in (0, pi)");
  if (!(eps > 0.0) || !(eps < R)) throw ParseError("sector path needs 0 < eps < R");
  Contour c;
  c.kind = Contour::Kind::SectorPath;
  c.slice_unit = slice_unit;
  c.theta = theta;
  c.eps = eps;
  c.R = R;

  const double decades = std::log10(R / eps);
  const int ray_panels = std::max(4, static_cast<int>(std::ceil(decades * panels_per_decade)));
  const Complex eip = std::polar(1.0, theta);
  const Complex eim = std::polar(1.0, -theta);

  // incoming ray: s = e^x e^{i theta}, x from log R down to log eps
  append_panels(
      c.nodes, [&](double x) { return std::exp(x) * eip; },
      [&](double x) { return std::exp(x) * eip; }, std::log(R), std::log(eps), ray_panels,
      gl_order);
  // chord from eps e^{i theta} to eps e^{-i theta}
  {
    Complex a = eps * eip;
    Complex b = eps * eim;
    append_panels(
        c.nodes, [&](double t) { return a + (b - a) * t; }, [&](double) { return (b - a); }, 0.0,
        1.0, std::max(4, gl_order), gl_order);
  }
  // outgoing ray: s = e^x e^{-i theta}, x from log eps up to log R
  append_panels(
      c.nodes, [&](double x) { return std::exp(x) * eim; },
      [&](double x) { return std::exp(x) * eim; }, std::log(eps), std::log(R), ray_panels,
      gl_order);
  return c;
}

void estimate_truncation(Contour& c, const DecayBound& decay, double c_theta) {
  if (c.kind != Contour::Kind::SectorPath) return;
  double a = std::max(decay.alpha, 1e-6);
  c.head_estimate = c_theta * decay.c * std::pow(c.eps, a) / (2.0 * kPi * a);
  c.tail_estimate = c_theta * decay.c * std::pow(c.R, -a) / (2.0 * kPi * a);
}

namespace {

void check_path(const Contour& c, const SSpectrum* spectrum, double tol) {
  if (spectrum == nullptr) return;
  for (const auto& node : c.nodes) {
    SpectralSphere p{node.s.real(), std::abs(node.s.imag()), 1};
    if (spectrum->contains(p, tol)) {
      throw PathHitsSpectrum("contour node within tolerance of a spectral sphere");
    }
  }
}

Quaternion f_value(const SliceFunction& f, const Contour& c, std::size_t k) {
  if (f.algebra_generic()) {
    // values of intrinsic functions stay in the slice plane
    return Quaternion::lift(f.stem(0, c.nodes[k].s), c.slice_unit);
  }
  return eval(f, c.point(k));
}

}  // namespace

QMatrix integrate_left(const Contour& c, const QMatrix& T, const SliceFunction& f,
                       const SSpectrum* spectrum, double tol) {
  if (f.side() == Side::Right) throw SideMismatch("integrate_left needs a left/intrinsic function");
  check_path(c, spectrum, tol);
  QMatrix acc(T.size());
  for (std::size_t k = 0; k < c.nodes.size(); ++k) {
    Quaternion s = c.point(k);
    Quaternion w = Quaternion::lift(c.nodes[k].w, c.slice_unit);
    Quaternion fv = f_value(f, c, k);
    QMatrix kern = s_resolvent_left(T, s);
    // kernel * ds_i * f(s): right-multiply entries by w fv, order preserved
    acc += kern.right_scalar(w * fv);
  }
  return acc * (1.0 / (2.0 * kPi));
}

QMatrix integrate_right(const Contour& c, const QMatrix& T, const SliceFunction& f,
                        const SSpectrum* spectrum, double tol) {
  if (f.side() == Side::Left) throw SideMismatch("integrate_right needs a right/intrinsic function");
  check_path(c, spectrum, tol);
  QMatrix acc(T.size());
  for (std::size_t k = 0; k < c.nodes.size(); ++k) {
    Quaternion s = c.point(k);
    Quaternion w = Quaternion::lift(c.nodes[k].w, c.slice_unit);
    Quaternion fv = f_value(f, c, k);
    QMatrix kern = s_resolvent_right(T, s);
    // f(s) * ds_i * kernel: left-multiply entries by fv w
    acc += kern.left_scalar(fv * w);
  }
  return acc * (1.0 / (2.0 * kPi));
}

Quaternion cauchy_reproduce(const Contour& c, const Quaternion& q, const SliceFunction& f) {
  Quaternion acc;
  for (std::size_t k = 0; k < c.nodes.size(); ++k) {
    Quaternion s = c.point(k);
    Quaternion w = Quaternion::lift(c.nodes[k].w, c.slice_unit);
    Quaternion fv = f_value(f, c, k);
    acc += cauchy_kernel_left(s, q) * w * fv;
  }
  return acc / (2.0 * kPi);
}

Complex integrate_scalar(const Contour& c, const std::function<Complex(Complex)>& g) {
  Complex acc{0.0, 0.0};
  for (const auto& node : c.nodes) acc += g(node.s) * node.w;
  return acc;
}

}  // namespace slicecalc
