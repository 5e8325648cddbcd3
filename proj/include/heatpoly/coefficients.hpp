#pragma once

#include <stdexcept>
#include <string_view>

#include "heatpoly/numerics.hpp"

namespace heatpoly {

/// Vertex class by the boundary conditions of its two incident edges.
enum class AngleClass {
  A,  // Dirichlet-open
  B,  // open-open
  C,  // Dirichlet-Dirichlet
};

std::string_view to_string(AngleClass c);

/// Interior angle in radians.
struct Angle {
  double radians = 0.0;
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace heatpoly

namespace heatpoly::coefficients {

/// Dirichlet-Dirichlet vertex coefficient, gamma in (0, 2pi].
double coeff_c(Angle gamma, const numerics::QuadConfig& cfg = {});
numerics::QuadResult coeff_c_quad(Angle gamma, const numerics::QuadConfig& cfg = {});

/// Open-open vertex coefficient, closed form, beta in (0, 2pi).
/// Exactly zero at beta = pi.
double coeff_b(Angle beta);

/// Dirichlet-open vertex coefficient from its integral representation,
/// alpha in (0, 2pi). Accuracy degrades outside [0.01, 2pi - 0.01] because
/// the integrand's tail decay rate min(alpha, 2pi - alpha) collapses.
double coeff_a_integral(Angle alpha, const numerics::QuadConfig& cfg = {});
numerics::QuadResult coeff_a_integral_quad(Angle alpha, const numerics::QuadConfig& cfg = {});

/// Closed form of the Dirichlet-open coefficient; valid only on (pi, 3pi/2).
double coeff_a_closed(Angle alpha);

/// Dispatch by vertex class; class A always uses the integral form.
double coeff_for(AngleClass cls, Angle angle, const numerics::QuadConfig& cfg = {});

/// Throws DomainError unless the angle lies in the domain of the class's coefficient.
void check_domain(AngleClass cls, Angle angle);

}  // namespace heatpoly::coefficients
