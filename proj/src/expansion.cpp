#include "heatpoly/expansion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heatpoly::expansion {

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError(std::string(what) + " must be positive and finite");
}

double edge_weight(BoundaryCondition bc) { return bc == BoundaryCondition::Dirichlet ? 2.0 : 1.0; }

// int_1^inf exp(-c w^2) / w^2 dw = exp(-c) - sqrt(pi c) erfc(sqrt c).
double outer_w_integral(double c) {
  if (c == 0.0) return 1.0;
  const double r = std::sqrt(c);
  return std::exp(-c) - kSqrtPi * r * numerics::erfc(r);
}

}  // namespace

ExpansionCoefficients heat_content_coeffs(const Polygon& polygon,
                                          const numerics::QuadConfig& cfg) {
  ExpansionCoefficients out;
  out.area = area(polygon);
  out.lengths = lengths_by_type(polygon);
  out.sqrt_t_coeff = -(2.0 * out.lengths.dirichlet + out.lengths.open) / kSqrtPi;
  for (const auto& va : classify_vertices(polygon)) {
    const double coefficient = coefficients::coeff_for(va.cls, Angle{va.radians}, cfg);
    out.per_vertex.push_back({va, coefficient});
    out.t_coeff += coefficient;
  }
  out.decay_rate = partition_params(polygon).decay_rate;
  return out;
}

ExpansionValue eval_expansion(const ExpansionCoefficients& coeffs, double t) {
  require_positive(t, "time t");
  return {coeffs.area + coeffs.sqrt_t_coeff * std::sqrt(t) + coeffs.t_coeff * t,
          std::exp(-coeffs.decay_rate / t)};
}

double cusp_double_integral_truncated(double R, double t, double v_max,
                                      const numerics::QuadConfig& cfg) {
  require_positive(R, "radius R");
  require_positive(t, "time t");
  if (!(v_max > 0.0 && v_max <= 1.0)) throw DomainError("v_max must lie in (0, 1]");
  // v = sin(phi) removes the (1 - v^2)^{-1/2} endpoint singularity; the w
  // integral is done in closed form.
  const double k = R * R / (4.0 * t);
  auto integrand = [k](double phi) {
    const double s = std::sin(phi);
    return s * outer_w_integral(k * s * s);
  };
  return numerics::integrate_finite(integrand, 0.0, std::asin(v_max), cfg).value;
}

double cusp_double_integral(double R, double t, const numerics::QuadConfig& cfg) {
  return cusp_double_integral_truncated(R, t, 1.0, cfg);
}

SectorBreakdown sector_heat_content_DO(const SectorSpec& spec, double t,
                                       const numerics::QuadConfig& cfg) {
  require_positive(spec.R, "radius R");
  require_positive(t, "time t");
  coefficients::check_domain(AngleClass::A, Angle{spec.alpha});
  SectorBreakdown b;
  const double edge = 3.0 * spec.R * std::sqrt(t) / kSqrtPi;
  b.area_term = 0.5 * spec.alpha * spec.R * spec.R;
  b.edge_term = -edge;
  b.angle_term = coefficients::coeff_a_integral(Angle{spec.alpha}, cfg) * t;
  b.cusp_term = edge * cusp_double_integral(spec.R, t, cfg);
  b.total = b.area_term + b.edge_term + b.angle_term + b.cusp_term;
  b.remainder_scale = std::exp(-spec.R * spec.R / (4.0 * t));
  return b;
}

double cusp_area(double delta, double R) {
  require_positive(delta, "cusp height delta");
  require_positive(R, "radius R");
  if (delta > R) throw DomainError("cusp height delta must not exceed R");
  return R * delta - 0.5 * (delta * std::sqrt(R * R - delta * delta) + R * R * std::asin(delta / R));
}

double cusp_correction(double delta, double R, double t, BoundaryCondition bc,
                       const numerics::QuadConfig& cfg) {
  require_positive(t, "time t");
  if (!(delta < R)) throw DomainError("cusp_correction requires delta < R");
  const double truncated = cusp_double_integral_truncated(R, t, delta / R, cfg);
  return cusp_area(delta, R) - edge_weight(bc) * R * std::sqrt(t) / kSqrtPi * truncated;
}

double rectangle_correction(double L, double delta, double t, BoundaryCondition bc) {
  require_positive(L, "rectangle length L");
  require_positive(delta, "rectangle height delta");
  require_positive(t, "time t");
  return L * delta - edge_weight(bc) * L * std::sqrt(t) / kSqrtPi;
}

double half_space_solution(double x2, double t, BoundaryCondition bc) {
  require_positive(t, "time t");
  if (!(x2 >= 0.0)) throw DomainError("height x2 must be nonnegative");
  const double z = x2 / std::sqrt(4.0 * t);
  return bc == BoundaryCondition::Dirichlet ? numerics::erf(z) : 1.0 - 0.5 * numerics::erfc(z);
}

}  // namespace heatpoly::expansion
