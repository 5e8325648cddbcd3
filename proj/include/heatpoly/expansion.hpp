#pragma once

#include <vector>

#include "heatpoly/coefficients.hpp"
#include "heatpoly/geometry.hpp"
#include "heatpoly/numerics.hpp"

namespace heatpoly::expansion {

struct VertexContribution {
  VertexAngle angle;
  double coefficient = 0.0;
};

/// Small-time heat content G(t) = area + sqrt_t_coeff t^{1/2} + t_coeff t + O(e^{-g/t}).
struct ExpansionCoefficients {
  double area = 0.0;
  double sqrt_t_coeff = 0.0;  // -(2 L_minus + L_plus) / sqrt(pi)
  double t_coeff = 0.0;       // sum of per-vertex coefficients
  double decay_rate = 0.0;    // remainder-scale rate from the partition parameters
  BoundaryLengths lengths;
  std::vector<VertexContribution> per_vertex;
};

struct ExpansionValue {
  double value = 0.0;
  // exp(-decay_rate / t): indicator of the neglected exponentially small term.
  double remainder_scale = 0.0;
};

ExpansionCoefficients heat_content_coeffs(const Polygon& polygon,
                                          const numerics::QuadConfig& cfg = {});

ExpansionValue eval_expansion(const ExpansionCoefficients& coeffs, double t);

/// I(R, t) = int_1^inf dw/w^2 int_0^1 v (1-v^2)^{-1/2} exp(-R^2 v^2 w^2 / (4t)) dv.
double cusp_double_integral(double R, double t, const numerics::QuadConfig& cfg = {});

/// Same double integral with the inner range cut at v = v_max (0 < v_max <= 1).
double cusp_double_integral_truncated(double R, double t, double v_max,
                                      const numerics::QuadConfig& cfg = {});

/// Circular sector with a Dirichlet face along phi = 0 and an open face along phi = alpha.
struct SectorSpec {
  double R = 1.0;
  double alpha = 0.0;
};

struct SectorBreakdown {
  double area_term = 0.0;   //  alpha R^2 / 2
  double edge_term = 0.0;   // -3 R t^{1/2} / sqrt(pi)
  double angle_term = 0.0;  //  a(alpha) t
  double cusp_term = 0.0;   //  3 R t^{1/2} / sqrt(pi) * I(R, t)
  double total = 0.0;
  double remainder_scale = 0.0;  // exp(-R^2 / (4t))
};

SectorBreakdown sector_heat_content_DO(const SectorSpec& spec, double t,
                                       const numerics::QuadConfig& cfg = {});

/// |E(delta, R)|: area between the edge, the arc |x| = R and the line x2 = delta.
double cusp_area(double delta, double R);

/// Model heat content of a cusp next to a Dirichlet (k = 2) or open (k = 1) edge,
/// with exponentially small tails dropped.
double cusp_correction(double delta, double R, double t, BoundaryCondition bc,
                       const numerics::QuadConfig& cfg = {});

/// L delta - k L t^{1/2} / sqrt(pi), k = 2 Dirichlet, 1 open.
double rectangle_correction(double L, double delta, double t, BoundaryCondition bc);

/// Half-plane solution at height x2: erf(x2 / sqrt(4t)) for a Dirichlet
/// boundary, 1 - erfc(x2 / sqrt(4t)) / 2 for an open one.
double half_space_solution(double x2, double t, BoundaryCondition bc);

}  // namespace heatpoly::expansion
