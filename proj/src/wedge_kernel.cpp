#include "heatpoly/wedge_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "heatpoly/coefficients.hpp"

namespace heatpoly::wedge {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Contour height is chosen so the integrand exceeds the result by at most e^3.
constexpr double kContourSlack = 3.0;
// exp(-40) relative to the integrand's peak.
constexpr double kCutoffExponent = 40.0;
constexpr double kMaxGreenOrder = 150.0;

struct Contour {
  double y0;      // Im w of the shifted path
  double cos_y0;
  double sin_y0;
};

Contour contour_for(double theta, double x) {
  double eta = kHalfPi;
  if (theta > x) eta = std::min(kHalfPi, kContourSlack / (theta - x));
  const double y0 = kHalfPi - eta;
  return {y0, std::sin(eta), std::cos(eta)};
}

std::string format_params(std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ", ";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

IdentityCheck make_check(std::string name, std::string params, double lhs, double rhs) {
  return {std::move(name), std::move(params), lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace

double bessel_K_imag_unchecked(double theta, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_K_imag: x must be positive");
  theta = std::abs(theta);
  const Contour c = contour_for(theta, x);
  const double peak = std::exp(-x * c.cos_y0);
  const double upper = std::acosh(1.0 + kCutoffExponent / (x * c.cos_y0));
  auto integrand = [theta, x, c](double u) {
    return std::exp(-x * std::cosh(u) * c.cos_y0) *
           std::cos(theta * u - x * std::sinh(u) * c.sin_y0);
  };
  numerics::QuadConfig cfg;
  // Roundoff in the phase theta u grows with theta.
  cfg.abs_tol = 1e-15 * peak * std::max(1.0, theta * upper);
  cfg.rel_tol = 1e-13;
  cfg.max_evaluations = 400'000;
  const double shifted = numerics::integrate_finite(integrand, 0.0, upper, cfg).value;
  return std::exp(-theta * c.y0) * shifted;
}

double bessel_K_imag(double theta, double x) {
  if (!(theta >= 0.0 && theta <= kMaxOrder))
    throw DomainError("bessel_K_imag: order theta must lie in [0, 30]");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_K_imag: x must be positive");
  return bessel_K_imag_unchecked(theta, x);
}

double bessel_K_imag_envelope(double theta, double x) {
  const Contour c = contour_for(std::abs(theta), x);
  return std::exp(-std::abs(theta) * c.y0) * std::cyl_bessel_k(0.0, x * c.cos_y0);
}

double free_space_green(double r, double s) {
  if (!(s > 0.0)) throw DomainError("free_space_green: s must be positive");
  return bessel_K_imag_unchecked(0.0, std::sqrt(s) * r) / kTwoPi;
}

double green_hat_wedge(PolarPoint p1, PolarPoint p2, const WedgeSpec& spec,
                       const numerics::QuadConfig& cfg) {
  const double alpha = spec.alpha;
  if (!(alpha > 0.0 && alpha <= kTwoPi)) throw DomainError("wedge angle must lie in (0, 2pi]");
  if (!(spec.s > 0.0)) throw DomainError("Laplace parameter s must be positive");
  for (const PolarPoint& p : {p1, p2}) {
    if (!(p.a > 0.0) || !std::isfinite(p.a)) throw DomainError("wedge point radius must be positive");
    if (!(p.phi > 0.0 && p.phi < alpha))
      throw DomainError("wedge point must lie strictly inside the wedge");
  }

  const double x1 = std::sqrt(spec.s) * p1.a;
  const double x2 = std::sqrt(spec.s) * p2.a;
  const double diff = p1.phi - p2.phi;
  const double sum = p1.phi + p2.phi;
  const bool full_plane = alpha == kTwoPi;

  // Each term separately, for the truncation envelope.
  auto terms = [&](double th, double out[3]) {
    out[0] = std::cosh((kPi - std::abs(diff)) * th);
    if (full_plane) {
      const double w = 0.5 / std::cosh(kPi * th);
      out[1] = -w * std::cosh((kTwoPi - sum) * th);
      out[2] = -w * std::cosh(diff * th);
    } else {
      out[1] = -std::sinh(kPi * th) / std::sinh(alpha * th) * std::cosh((alpha - sum) * th);
      out[2] = std::sinh((kPi - alpha) * th) / std::sinh(alpha * th) * std::cosh(diff * th);
    }
  };
  auto bracket = [&](double th) {
    if (th < 1e-12) return 0.0;  // the bracket vanishes at theta = 0
    double t[3];
    terms(th, t);
    return t[0] + t[1] + t[2];
  };
  auto envelope = [&](double th) {
    double t[3];
    terms(th, t);
    const double b = std::abs(t[0]) + std::abs(t[1]) + std::abs(t[2]);
    return bessel_K_imag_envelope(th, x1) * bessel_K_imag_envelope(th, x2) * b;
  };

  // Scan for the point past which the envelope stays under tolerance.
  const double target = 1e-2 * cfg.abs_tol * kPi * kPi;
  double cutoff = std::max({1.0, x1, x2});
  while (envelope(cutoff) > target || envelope(cutoff + 1.0) > target) {
    cutoff += 0.5;
    if (cutoff > kMaxGreenOrder)
      throw DomainError("green_hat_wedge: points too close in angle for the truncated KL integral");
  }

  auto integrand = [&](double th) {
    return bessel_K_imag_unchecked(th, x1) * bessel_K_imag_unchecked(th, x2) * bracket(th);
  };
  const double integral = numerics::integrate_finite(integrand, 0.0, cutoff, cfg).value;
  return integral / (kPi * kPi);
}

IdentityCheck check_radial_moment_identity(double theta, double s) {
  if (!(theta > 0.0) || !(s > 0.0)) throw DomainError("radial-moment check requires theta > 0 and s > 0");
  const double root = std::sqrt(s);
  auto integrand = [theta, root](double a) {
    if (a == 0.0) return 0.0;
    return a * bessel_K_imag_unchecked(theta, root * a);
  };
  numerics::QuadConfig cfg;
  cfg.abs_tol = 1e-10;
  cfg.rel_tol = 1e-10;
  // a K(sqrt(s) a) ~ a exp(-sqrt(s) a); the lowered rate absorbs the prefactor.
  const double lhs = numerics::integrate_semi_infinite(integrand, 0.5 * root, cfg).value;
  const double rhs = kPi * theta / (2.0 * s * std::sinh(kHalfPi * theta));
  return make_check("radial-moment", format_params({{"theta", theta}, {"s", s}}), lhs, rhs);
}

IdentityCheck check_cosine_transform_identity(double a, double b) {
  if (!(a > 0.0)) throw DomainError("cosine-transform check requires a > 0");
  auto integrand = [a, b](double th) { return std::cos(b * th) * bessel_K_imag_unchecked(th, a); };
  numerics::QuadConfig cfg;
  cfg.abs_tol = 1e-10;
  cfg.rel_tol = 1e-10;
  cfg.tail_scale = 64.0;
  // |K_{i th}(a)| decays like exp(-pi th / 2).
  const double lhs = numerics::integrate_semi_infinite(integrand, 0.9 * kHalfPi, cfg).value;
  const double rhs = kHalfPi * std::exp(-a * std::cosh(b));
  return make_check("cosine-transform", format_params({{"a", a}, {"b", b}}), lhs, rhs);
}

IdentityCheck check_sinh_cosh_identity(double a, double beta, double gamma) {
  if (!(a >= 0.0)) throw DomainError("sinh-cosh-log check requires a >= 0");
  if (!(std::abs(beta) < gamma)) throw DomainError("sinh-cosh-log check requires |beta| < gamma");
  const double ab = std::abs(beta);
  auto integrand = [a, beta, ab, gamma](double th) {
    if (th < 1e-10) return beta;
    if (ab == 0.0) return 0.0;
    // sinh(beta th) / cosh(gamma th) without overflow.
    const double ratio = std::copysign(-std::expm1(-2.0 * ab * th), beta) *
                         std::exp((ab - gamma) * th) / (1.0 + std::exp(-2.0 * gamma * th));
    return std::cos(a * th) / th * ratio;
  };
  numerics::QuadConfig cfg;
  cfg.abs_tol = 1e-12;
  cfg.rel_tol = 1e-12;
  const double lhs = numerics::integrate_semi_infinite(integrand, gamma - ab, cfg).value;
  const double ch = std::cosh(a * kPi / (2.0 * gamma));
  const double sn = std::sin(beta * kPi / (2.0 * gamma));
  const double rhs = 0.5 * std::log((ch + sn) / (ch - sn));
  return make_check("sinh-cosh-log", format_params({{"a", a}, {"beta", beta}, {"gamma", gamma}}), lhs,
                    rhs);
}

IdentityCheck check_tanh_identity(double a, double beta) {
  if (!(a > 0.0)) throw DomainError("tanh-log-coth check requires a > 0 (the integral diverges at a = 0)");
  if (!(beta > 0.0)) throw DomainError("tanh-log-coth check requires beta > 0");
  numerics::QuadConfig cfg;
  cfg.abs_tol = 1e-12;
  cfg.rel_tol = 1e-12;
  const double split = 1.0 / beta;

  auto head = [a, beta](double th) {
    if (th < 1e-10) return beta;
    return std::cos(a * th) * std::tanh(beta * th) / th;
  };
  const double near = numerics::integrate_finite(head, 0.0, split, cfg).value;

  // tanh(beta th) - 1 = -2 e^{-2 beta th} / (1 + e^{-2 beta th}), exponentially small.
  auto tail = [a, beta, split](double u) {
    const double th = split + u;
    const double e = std::exp(-2.0 * beta * th);
    return std::cos(a * th) / th * (-2.0 * e / (1.0 + e));
  };
  const double far = numerics::integrate_semi_infinite(tail, 2.0 * beta, cfg).value;

  // int_T^inf cos(a th) / th d th = -Ci(a T).
  const double lhs = near + far - numerics::cosine_integral(a * split);
  const double rhs = std::log(1.0 / std::tanh(a * kPi / (4.0 * beta)));
  return make_check("tanh-log-coth", format_params({{"a", a}, {"beta", beta}}), lhs, rhs);
}

std::vector<IdentityCheck> identity_suite() {
  std::vector<IdentityCheck> out;
  for (double theta : {0.5, 1.0, 2.0})
    for (double s : {1.0, 4.0}) out.push_back(check_radial_moment_identity(theta, s));
  for (double b : {0.0, 0.5, 1.0}) out.push_back(check_cosine_transform_identity(1.0, b));
  for (double a : {0.0, 1.0}) out.push_back(check_sinh_cosh_identity(a, kHalfPi, kPi));
  out.push_back(check_tanh_identity(1.0, kPi));
  return out;
}

}  // namespace heatpoly::wedge
