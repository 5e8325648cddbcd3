#include "heatpoly/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace heatpoly {

std::string_view to_string(AngleClass c) {
  switch (c) {
    case AngleClass::A: return "A";
    case AngleClass::B: return "B";
    case AngleClass::C: return "C";
  }
  return "?";
}

}  // namespace heatpoly

namespace heatpoly::coefficients {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Below this theta the integrands are replaced by their theta -> 0 limits;
// the O(theta^2) discrepancy is under double resolution.
constexpr double kSmallTheta = 1e-8;

[[noreturn]] void reject(std::string_view what, double radians, std::string_view interval) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": angle " << radians << " rad outside valid interval " << interval;
  throw DomainError(os.str());
}

// 1 - exp(-x) for x >= 0 without cancellation.
double one_minus_exp(double x) { return -std::expm1(-x); }

// sinh(c th) / (sinh(pi th) cosh(g th)) in overflow-free form, th > 0.
double c_ratio(double c, double g, double th) {
  const double ac = std::abs(c);
  if (ac == 0.0) return 0.0;
  const double num = std::copysign(one_minus_exp(2.0 * ac * th), c);
  const double den = one_minus_exp(2.0 * kPi * th) * (1.0 + std::exp(-2.0 * g * th));
  return 2.0 * std::exp((ac - kPi - g) * th) * num / den;
}

// sinh^2(c th) / (sinh^2(pi th / 2) cosh(pi th)) in overflow-free form, th > 0.
double a_ratio(double c, double th) {
  const double ac = std::abs(c);
  if (ac == 0.0) return 0.0;
  const double num = one_minus_exp(2.0 * ac * th);
  const double half = one_minus_exp(kPi * th);
  const double den = half * half * (1.0 + std::exp(-2.0 * kPi * th));
  return 2.0 * std::exp((2.0 * ac - 2.0 * kPi) * th) * num * num / den;
}

}  // namespace

void check_domain(AngleClass cls, Angle angle) {
  const double r = angle.radians;
  if (!std::isfinite(r)) reject("angle", r, cls == AngleClass::C ? "(0, 2pi]" : "(0, 2pi)");
  switch (cls) {
    case AngleClass::C:
      if (!(r > 0.0 && r <= kTwoPi)) reject("coeff_c", r, "(0, 2pi]");
      break;
    case AngleClass::B:
      if (!(r > 0.0 && r < kTwoPi)) reject("coeff_b", r, "(0, 2pi)");
      break;
    case AngleClass::A:
      if (!(r > 0.0 && r < kTwoPi)) reject("coeff_a", r, "(0, 2pi)");
      break;
  }
}

numerics::QuadResult coeff_c_quad(Angle gamma, const numerics::QuadConfig& cfg) {
  check_domain(AngleClass::C, gamma);
  const double g = gamma.radians;
  const double c = kPi - g;
  auto integrand = [g, c](double th) {
    if (th < kSmallTheta) return 4.0 * c / kPi;
    return 4.0 * c_ratio(c, g, th);
  };
  // Tail ~ exp(-(pi + g - |pi - g|) th) = exp(-2 min(pi, g) th).
  return numerics::integrate_semi_infinite(integrand, 2.0 * std::min(kPi, g), cfg);
}

double coeff_c(Angle gamma, const numerics::QuadConfig& cfg) {
  return coeff_c_quad(gamma, cfg).value;
}

double coeff_b(Angle beta) {
  check_domain(AngleClass::B, beta);
  const double b = beta.radians;
  if (b == kPi) return 0.0;
  // e = pi - b carried past double precision; 1 - b/pi cancels near pi.
  constexpr double kPiLow = 1.2246467991473532e-16;
  const double e = (kPi - b) + kPiLow;
  if (std::abs(e) < 1e-3) {
    // 1 - e cot(e) = e^2/3 + e^4/45 + 2e^6/945 + ...
    const double e2 = e * e;
    return e2 * (1.0 / 3.0 + e2 * (1.0 / 45.0 + e2 * (2.0 / 945.0))) / kPi;
  }
  return 1.0 / kPi + (e / kPi) / std::tan(b);
}

numerics::QuadResult coeff_a_integral_quad(Angle alpha, const numerics::QuadConfig& cfg) {
  check_domain(AngleClass::A, alpha);
  const double a = alpha.radians;
  const double c1 = kPi - 0.5 * a;
  const double c2 = kPi - a;
  auto integrand = [c1, c2](double th) {
    if (th < kSmallTheta) return (4.0 * c1 * c1 - c2 * c2) * 4.0 / (kPi * kPi);
    return 4.0 * a_ratio(c1, th) - a_ratio(c2, th);
  };
  const double rate = std::min(a, kTwoPi - a);
  numerics::QuadResult r = numerics::integrate_semi_infinite(integrand, rate, cfg);
  r.value = -0.75 + 0.25 * r.value;
  r.error_bound *= 0.25;
  return r;
}

double coeff_a_integral(Angle alpha, const numerics::QuadConfig& cfg) {
  return coeff_a_integral_quad(alpha, cfg).value;
}

double coeff_a_closed(Angle alpha) {
  const double a = alpha.radians;
  if (!(a > kPi && a < 1.5 * kPi)) reject("coeff_a_closed", a, "(pi, 3pi/2)");
  const double t = std::tan(a);
  return -3.0 / 8.0 + 3.0 / (4.0 * kPi) - 1.0 / (8.0 * std::cos(a)) +
         1.0 / (2.0 * std::cos(0.5 * a)) + (7.0 / 4.0 - 3.0 * a / (4.0 * kPi)) / t +
         (0.25 - a / (4.0 * kPi)) * t;
}

double coeff_for(AngleClass cls, Angle angle, const numerics::QuadConfig& cfg) {
  switch (cls) {
    case AngleClass::A: return coeff_a_integral(angle, cfg);
    case AngleClass::B: return coeff_b(angle);
    case AngleClass::C: return coeff_c(angle, cfg);
  }
  throw DomainError("coeff_for: unknown angle class");
}

}  // namespace heatpoly::coefficients
