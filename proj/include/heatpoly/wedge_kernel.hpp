#pragma once

#include <string>
#include <vector>

#include "heatpoly/numerics.hpp"

namespace heatpoly::wedge {

struct PolarPoint {
  double a = 0.0;    // radius
  double phi = 0.0;  // angle measured from the face phi = 0
};

struct WedgeSpec {
  double alpha = 0.0;  // opening angle, (0, 2pi]
  double s = 1.0;      // Laplace parameter
};

/// Supported envelope for the public Bessel evaluation.
inline constexpr double kMaxOrder = 30.0;

/// K_{i theta}(x) = int_0^inf cos(w theta) exp(-x cosh w) dw, 0 <= theta <= 30, x > 0.
double bessel_K_imag(double theta, double x);

/// Same integral without the envelope check. For theta > x the contour is
/// moved to Im w = y0 < pi/2, where the integrand's size tracks the
/// exponentially small result instead of cancelling down to it.
double bessel_K_imag_unchecked(double theta, double x);

/// Rigorous bound |K_{i theta}(x)| <= exp(-theta y0) K_0(x cos y0) for the
/// contour used above.
double bessel_K_imag_envelope(double theta, double x);

/// Laplace transform in time of the Dirichlet heat kernel of the wedge
/// 0 < phi < alpha, via its Kontorovich-Lebedev representation.
double green_hat_wedge(PolarPoint p1, PolarPoint p2, const WedgeSpec& spec,
                       const numerics::QuadConfig& cfg = {});

/// Free-space resolvent kernel (1 / 2pi) K_0(sqrt(s) r), computed through
/// bessel_K_imag at order zero.
double free_space_green(double r, double s);

struct IdentityCheck {
  std::string identity;
  std::string parameters;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
};

/// int_0^inf a K_{i theta}(sqrt(s) a) da  vs  pi theta / (2 s sinh(pi theta / 2)).
IdentityCheck check_radial_moment_identity(double theta, double s);

/// int_0^inf cos(b theta) K_{i theta}(a) d theta  vs  (pi/2) exp(-a cosh b), real b.
IdentityCheck check_cosine_transform_identity(double a, double b);

/// int_0^inf cos(a th)/th sinh(beta th)/cosh(gamma th) d th  vs  the log closed form.
IdentityCheck check_sinh_cosh_identity(double a, double beta, double gamma);

/// int_0^inf cos(a th) tanh(beta th) / th d th  vs  log coth(a pi / (4 beta)).
IdentityCheck check_tanh_identity(double a, double beta);

/// Default identity suite.
std::vector<IdentityCheck> identity_suite();

}  // namespace heatpoly::wedge
