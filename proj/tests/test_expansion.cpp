#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "heatpoly/expansion.hpp"

using namespace heatpoly;
using namespace heatpoly::expansion;
using std::numbers::pi;
constexpr auto D = BoundaryCondition::Dirichlet;
constexpr auto N = BoundaryCondition::Open;

namespace {

const double kSqrtPi = std::sqrt(pi);

Polygon square(std::vector<BoundaryCondition> bc) {
  return validate({{{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, std::move(bc)}}});
}

template <class F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

// I(R, t) on a tensor grid: w = 1/u maps dw/w^2 to du on (0, 1], and v = sin(phi).
double cusp_grid_oracle(double R, double t, int n) {
  const double c = R * R / (4.0 * t);
  auto inner = [c, n](double u) {
    if (u == 0.0) return 0.0;
    return simpson([c, u](double phi) {
      const double s = std::sin(phi);
      return s * std::exp(-c * s * s / (u * u));
    }, 0.0, pi / 2, n);
  };
  return simpson(inner, 0.0, 1.0, n);
}

// Exact model heat content of the cusp: integrate u_H over x1 analytically,
// then over the height y.
double cusp_content_oracle(double delta, double R, double t, BoundaryCondition bc) {
  const double k = bc == D ? 2.0 : 1.0;
  const double loss = simpson([&](double y) {
    return (R - std::sqrt(R * R - y * y)) * std::erfc(y / std::sqrt(4.0 * t));
  }, 0.0, delta, 20000);
  return cusp_area(delta, R) - 0.5 * k * loss;
}

// The exponentially small piece that cusp_correction omits (it only adds heat).
double cusp_dropped_term(double delta, double R, double t, BoundaryCondition bc) {
  const double k = bc == D ? 2.0 : 1.0;
  const double c = delta * delta / (4.0 * t);
  const double tail = simpson([c](double u) {
    return u == 0.0 ? 0.0 : std::exp(-c / (u * u));
  }, 0.0, 1.0, 20000);
  return 0.5 * k * (2.0 * std::sqrt(t) / kSqrtPi) * (R - std::sqrt(R * R - delta * delta)) * tail;
}

}  // namespace

TEST_CASE("coefficients of the unit squares") {
  auto q = heat_content_coeffs(square({D, D, D, D}));
  CHECK(q.area == doctest::Approx(1.0));
  CHECK(std::abs(q.sqrt_t_coeff + 8.0 / kSqrtPi) < 1e-14);
  CHECK(std::abs(q.t_coeff - 16.0 / pi) < 1e-10);
  CHECK(q.per_vertex.size() == 4);
  CHECK(q.decay_rate == doctest::Approx(0.25 * 0.5 / 16));

  auto h = heat_content_coeffs(square({N, N, N, N}));
  CHECK(std::abs(h.sqrt_t_coeff + 4.0 / kSqrtPi) < 1e-14);
  CHECK(std::abs(h.t_coeff - 4.0 / pi) < 1e-12);

  auto g = heat_content_coeffs(square({D, D, N, N}));
  CHECK(std::abs(g.sqrt_t_coeff + 6.0 / kSqrtPi) < 1e-14);
  CHECK(std::abs(g.t_coeff - (7.0 / pi - 0.75 + std::sqrt(2.0))) < 1e-10);
}

TEST_CASE("eval_expansion") {
  const auto q = heat_content_coeffs(square({D, D, D, D}));
  CHECK(std::abs(eval_expansion(q, 0.01).value - (1.0 - 0.8 / kSqrtPi + 0.16 / pi)) < 1e-11);
  CHECK(eval_expansion(q, 0.01).value == doctest::Approx(0.59958).epsilon(1e-5));
  CHECK(std::abs(eval_expansion(q, 1e-14).value - 1.0) < 1e-6);
  CHECK(eval_expansion(q, 1e-3).remainder_scale == doctest::Approx(std::exp(-q.decay_rate / 1e-3)));

  ExpansionCoefficients c;
  c.area = 1.0;
  c.sqrt_t_coeff = -1.0;
  CHECK(eval_expansion(c, 0.25).value == 0.5);
  CHECK_THROWS_AS(eval_expansion(c, 0.0), DomainError);
  CHECK_THROWS_AS(eval_expansion(c, -1.0), DomainError);
}

TEST_CASE("specialization and ordering on random polygons") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> radius(0.5, 1.5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial;
    Loop loop;
    for (int k = 0; k < n; ++k) {
      const double phi = 2 * pi * k / n;
      const double r = radius(rng);
      loop.vertices.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    loop.edge_bc.assign(n, D);
    const Polygon pd = validate({{loop}});
    loop.edge_bc.assign(n, N);
    const Polygon pn = validate({{loop}});
    for (int k = 0; k < n; ++k) loop.edge_bc[k] = k % 3 == 0 ? D : N;
    const Polygon pm = validate({{loop}});

    double perimeter = 0.0, sum_c = 0.0, sum_b = 0.0;
    for (const auto& e : edges(pd)) perimeter += norm(e.b - e.a);
    for (const auto& va : classify_vertices(pd)) {
      sum_c += coefficients::coeff_c({va.radians});
      sum_b += coefficients::coeff_b({va.radians});
    }
    const auto q = heat_content_coeffs(pd);
    const auto h = heat_content_coeffs(pn);
    const auto g = heat_content_coeffs(pm);
    CHECK(std::abs(q.sqrt_t_coeff + 2.0 * perimeter / kSqrtPi) < 1e-12);
    CHECK(std::abs(q.t_coeff - sum_c) < 1e-12);
    CHECK(std::abs(h.sqrt_t_coeff + perimeter / kSqrtPi) < 1e-12);
    CHECK(std::abs(h.t_coeff - sum_b) < 1e-12);
    CHECK(h.sqrt_t_coeff >= g.sqrt_t_coeff);
    CHECK(g.sqrt_t_coeff >= q.sqrt_t_coeff);
  }
}

TEST_CASE("cusp double integral") {
  CHECK(cusp_double_integral(1e-8, 1.0) == doctest::Approx(1.0).epsilon(1e-7));
  const double grid = cusp_grid_oracle(1.0, 0.1, 4000);
  CHECK(std::abs(cusp_double_integral(1.0, 0.1) - grid) < 1e-8);

  double prev = 1.0;
  for (double t : {10.0, 1.0, 0.1, 0.01, 1e-3, 1e-4}) {
    const double I = cusp_double_integral(1.0, t);
    CHECK(I > 0.0);
    CHECK(I < prev);
    prev = I;
  }
  // Inner integral ~ 1/(2c) for large c = R^2 / (4t), so I ~ 2t / (3 R^2).
  const double t = 1e-5;
  CHECK(cusp_double_integral(1.0, t) / (2.0 * t / 3.0) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(cusp_double_integral_truncated(1.0, 0.1, 1.0) == cusp_double_integral(1.0, 0.1));
  CHECK(cusp_double_integral_truncated(1.0, 0.1, 0.5) < cusp_double_integral(1.0, 0.1));
  CHECK_THROWS_AS(cusp_double_integral_truncated(1.0, 0.1, 1.5), DomainError);
  CHECK_THROWS_AS(cusp_double_integral(0.0, 0.1), DomainError);
}

TEST_CASE("Dirichlet-open sector") {
  const double a = pi / 2;
  CHECK(std::abs(sector_heat_content_DO({1.0, a}, 1e-14).total - a / 2) < 1e-6);

  const double t = 0.01;
  const auto s = sector_heat_content_DO({1.0, pi}, t);
  const double expected =
      pi / 2 - 0.3 / kSqrtPi - 0.0025 + 0.3 / kSqrtPi * cusp_double_integral(1.0, t);
  CHECK(std::abs(s.total - expected) < 1e-10);
  CHECK(s.total == doctest::Approx(s.area_term + s.edge_term + s.angle_term + s.cusp_term));
  CHECK(s.remainder_scale == doctest::Approx(std::exp(-25.0)));

  for (double alpha : {0.5, 1.5, 3.0, 4.5, 6.0})
    for (double R : {0.5, 1.0, 2.0})
      for (double f : {1e-4, 1e-2, 0.125}) {
        CAPTURE(alpha);
        CAPTURE(R);
        const auto b = sector_heat_content_DO({R, alpha}, f * R * R);
        CHECK(b.total < 0.5 * alpha * R * R);
      }
  CHECK_THROWS_AS(sector_heat_content_DO({1.0, 2 * pi}, t), DomainError);
  CHECK_THROWS_AS(sector_heat_content_DO({-1.0, 1.0}, t), DomainError);
}

TEST_CASE("cusp correction") {
  const double delta = 0.1, R = 1.0;
  CHECK(cusp_area(delta, R) == doctest::Approx(simpson([R](double y) {
          return R - std::sqrt(R * R - y * y);
        }, 0.0, delta, 2000)).epsilon(1e-12));
  CHECK(std::abs(cusp_correction(delta, R, 1e-16, D) - cusp_area(delta, R)) < 1e-9);

  for (double t : {1e-3, 1e-2, 0.1}) {
    const double area = cusp_area(delta, R);
    CHECK(cusp_correction(delta, R, t, D) - area ==
          doctest::Approx(2.0 * (cusp_correction(delta, R, t, N) - area)).epsilon(1e-12));
  }

  // Restoring the dropped term reproduces the exact cusp content.
  for (auto bc : {D, N})
    for (double t : {1e-3, 1e-2, 0.1}) {
      CAPTURE(t);
      const double model = cusp_correction(delta, R, t, bc) + cusp_dropped_term(delta, R, t, bc);
      CHECK(std::abs(model - cusp_content_oracle(delta, R, t, bc)) < 1e-10);
    }

  // Once delta^2 / (4t) is large the dropped term is negligible.
  const double t = 5e-4;
  CHECK(std::abs(cusp_correction(delta, R, t, D) - cusp_content_oracle(delta, R, t, D)) < 1e-6);

  CHECK_THROWS_AS(cusp_correction(1.0, 1.0, 0.01, D), DomainError);
  CHECK_THROWS_AS(cusp_area(2.0, 1.0), DomainError);
}

TEST_CASE("rectangle correction and half-space solution") {
  CHECK(rectangle_correction(1.0, 0.5, 1e-300, D) == doctest::Approx(0.5));
  CHECK(std::abs(rectangle_correction(1.0, 0.5, 0.01, D) - (0.5 - 0.2 / kSqrtPi)) < 1e-15);
  CHECK(rectangle_correction(2.0, 0.5, 0.01, N) - 1.0 ==
        doctest::Approx(0.5 * (rectangle_correction(2.0, 0.5, 0.01, D) - 1.0)));

  CHECK(half_space_solution(0.0, 0.01, D) == 0.0);
  CHECK(half_space_solution(0.0, 0.01, N) == 0.5);
  CHECK(half_space_solution(0.2, 0.01, D) == doctest::Approx(0.842701).epsilon(1e-6));
  CHECK_THROWS_AS(half_space_solution(-0.1, 0.01, D), DomainError);
  CHECK_THROWS_AS(half_space_solution(0.1, 0.0, D), DomainError);
}
