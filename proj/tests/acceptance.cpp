// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "heatpoly/coefficients.hpp"
#include "heatpoly/expansion.hpp"
#include "heatpoly/geometry.hpp"
#include "heatpoly/mc_oracle.hpp"
#include "heatpoly/wedge_kernel.hpp"

using namespace heatpoly;
using std::numbers::pi;
constexpr auto D = BoundaryCondition::Dirichlet;
constexpr auto N = BoundaryCondition::Open;

namespace {

const double kSqrtPi = std::sqrt(pi);

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Polygon make(std::vector<Point> v, std::vector<BoundaryCondition> bc) {
  return validate({{{std::move(v), std::move(bc)}}});
}

Polygon unit_square(std::vector<BoundaryCondition> bc) {
  return make({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, std::move(bc));
}

Polygon l_hexagon() {
  return make({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}, std::vector(6, D));
}

// Star-shaped about the origin with jittered angles, hence simple.
std::vector<Point> random_star(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> radius(0.4, 1.6), jitter(-0.3, 0.3);
  std::vector<Point> v;
  for (int k = 0; k < n; ++k) {
    const double phi = 2 * pi * (k + 0.5 + jitter(rng)) / n;
    const double r = radius(rng);
    v.push_back({r * std::cos(phi), r * std::sin(phi)});
  }
  return v;
}

Outcome criterion1() {
  const double r2 = std::sqrt(2.0);
  const double e1 = std::abs(coefficients::coeff_a_integral({pi}) + 0.25);
  const double e2 = std::abs(coefficients::coeff_a_integral({pi / 2}) - (-0.375 + 1 / pi + r2 / 2));
  const double e3 = std::abs(coefficients::coeff_a_integral({1.5 * pi}) - (-0.375 + 1 / pi - r2 / 2));
  const double worst = std::max({e1, e2, e3});
  return {worst <= 1e-10, fmt("a(pi), a(pi/2), a(3pi/2) max abs err %.3g (tol 1e-10)", worst)};
}

Outcome criterion2() {
  double worst = 0.0;
  for (int k = 0; k < 64; ++k) {
    const double a = pi * (1.01 + 0.48 * k / 63.0);
    worst = std::max(worst, std::abs(coefficients::coeff_a_closed({a}) -
                                     coefficients::coeff_a_integral({a})));
  }
  return {worst <= 1e-8, fmt("closed vs integral over 64 points of (1.01pi, 1.49pi): max %.3g (tol 1e-8)", worst)};
}

Outcome criterion3() {
  const double e0 = std::abs(coefficients::coeff_c({pi}));
  const double e1 = std::abs(coefficients::coeff_c({pi / 2}) - 4 / pi);
  const double e2 = std::abs(coefficients::coeff_c({2 * pi}) + 1);
  return {e0 <= 1e-12 && e1 <= 1e-10 && e2 <= 1e-10,
          fmt("|c(pi)| %.3g (1e-12), |c(pi/2)-4/pi| %.3g, |c(2pi)+1| %.3g (1e-10)", e0, e1, e2)};
}

Outcome criterion4() {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto v = random_star(rng, 3 + trial);
    const Polygon pd = make(v, std::vector(v.size(), D));
    const Polygon pn = make(v, std::vector(v.size(), N));
    double perimeter = 0.0, sum_c = 0.0, sum_b = 0.0;
    for (const auto& e : edges(pd)) perimeter += norm(e.b - e.a);
    for (const auto& va : classify_vertices(pd)) {
      sum_c += coefficients::coeff_c({va.radians});
      sum_b += coefficients::coeff_b({va.radians});
    }
    const auto q = expansion::heat_content_coeffs(pd);
    const auto h = expansion::heat_content_coeffs(pn);
    worst = std::max({worst, std::abs(q.sqrt_t_coeff + 2 * perimeter / kSqrtPi),
                      std::abs(q.t_coeff - sum_c), std::abs(h.sqrt_t_coeff + perimeter / kSqrtPi),
                      std::abs(h.t_coeff - sum_b)});
  }
  return {worst <= 1e-12,
          fmt("10 random all-Dirichlet and all-open polygons: max deviation %.3g (tol 1e-12)", worst)};
}

Outcome criterion5() {
  std::vector<Polygon> polys{unit_square({D, D, D, D}), unit_square({N, N, N, N}),
                             unit_square({D, D, N, N}), l_hexagon()};
  std::mt19937_64 rng(99);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = random_star(rng, 3 + trial % 8);
    std::vector<BoundaryCondition> bc;
    for (std::size_t i = 0; i < v.size(); ++i) bc.push_back(coin(rng) ? D : N);
    polys.push_back(make(v, bc));
  }
  bool ok = true;
  for (const auto& p : polys) {
    const auto L = lengths_by_type(p);
    const double total = L.total();
    const double mixed = 2 * L.dirichlet + L.open;
    ok = ok && total <= mixed && mixed <= 2 * total;
    const double h = -total / kSqrtPi, g = expansion::heat_content_coeffs(p).sqrt_t_coeff,
                 q = -2 * total / kSqrtPi;
    ok = ok && h >= g && g >= q;
  }
  return {ok, fmt("L <= 2L_- + L_+ <= 2L and H >= G >= Q sqrt(t)-coefficients on %zu polygons", polys.size())};
}

Outcome criterion6() {
  const Polygon box = make({{-5, 0}, {5, 0}, {5, 10}, {-5, 10}}, {D, N, N, N});
  mc::MCConfig cfg;
  cfg.n_paths = 100'000;
  cfg.n_steps = 256;
  cfg.seed = 6;
  const double t = 0.01;
  bool ok = true;
  std::string detail = "z-scores";
  for (double x2 : {0.05, 0.1, 0.2}) {
    const auto e = mc::estimate_solution_at(box, {0.0, x2}, t, cfg);
    const double z = (e.mean - std::erf(x2 / std::sqrt(4 * t))) / e.std_error;
    ok = ok && std::abs(z) <= 3.0;
    detail += fmt(" x2=%g:%.2f", x2, z);
  }
  return {ok, detail + " (|z| <= 3, 1e5 paths, bridge on)"};
}

Outcome criterion7() {
  struct Case {
    const char* name;
    Polygon polygon;
  };
  const std::vector<Case> cases{{"square DDDD", unit_square({D, D, D, D})},
                                {"square DDNN", unit_square({D, D, N, N})},
                                {"L hexagon", l_hexagon()}};
  const double t = 0.001;
  mc::MCConfig cfg;
  cfg.n_paths = 1'000'000;
  cfg.n_steps = 256;
  bool ok = true;
  std::string detail;
  std::uint64_t seed = 70;
  for (const auto& c : cases) {
    cfg.seed = seed++;
    const double asym = expansion::eval_expansion(expansion::heat_content_coeffs(c.polygon), t).value;
    const auto e = mc::estimate_heat_content(c.polygon, t, cfg);
    const double diff = std::abs(asym - e.mean);
    const double allowed = 3 * e.std_error + 5e-4;
    ok = ok && diff <= allowed;
    detail += fmt("%s%s: |%.6f - %.6f| = %.2e <= %.2e", detail.empty() ? "" : "; ", c.name, asym,
                  e.mean, diff, allowed);
  }
  return {ok, detail};
}

Outcome criterion8() {
  const double alpha = pi / 2, R = 1.0, t = 0.005;
  const double formula = expansion::sector_heat_content_DO({R, alpha}, t).total;
  mc::MCConfig cfg;
  cfg.n_paths = 400'000;
  cfg.n_steps = 256;
  cfg.seed = 8;
  const auto e = mc::estimate_sector_content_DO(alpha, R, t, cfg);
  const double diff = std::abs(formula - e.mean);
  const double allowed = 3 * e.std_error + 1e-3;
  return {diff <= allowed,
          fmt("sector alpha=pi/2 R=1 t=0.005: formula %.6f, MC %.6f +- %.2e, |diff| %.2e <= %.2e",
              formula, e.mean, e.std_error, diff, allowed)};
}

Outcome criterion9() {
  double worst = 0.0;
  std::size_t n = 0;
  for (const auto& c : wedge::identity_suite()) {
    worst = std::max(worst, c.abs_err);
    ++n;
  }
  return {n == 12 && worst <= 1e-6, fmt("%zu identity rows, max abs_err %.3g (tol 1e-6)", n, worst)};
}

Outcome criterion10() {
  numerics::QuadConfig cfg;
  cfg.abs_tol = 1e-10;
  cfg.rel_tol = 1e-10;
  const wedge::WedgeSpec full{2 * pi, 1.0};

  const wedge::PolarPoint p{1.0, 1.0}, q{1.3, 2.5};
  const double pq = wedge::green_hat_wedge(p, q, full, cfg);
  const double asym = std::abs(pq - wedge::green_hat_wedge(q, p, full, cfg));
  const double edge = std::abs(wedge::green_hat_wedge({1.0, 1e-4}, q, full, cfg));

  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> radius(0.3, 2.0), angle(0.05, 2 * pi - 0.05);
  int dominated = 0, sampled = 0;
  while (sampled < 20) {
    const wedge::PolarPoint a{radius(rng), angle(rng)}, b{radius(rng), angle(rng)};
    // The truncated integral needs the points separated in angle.
    if (std::abs(a.phi - b.phi) < 0.3) continue;
    ++sampled;
    const double g = wedge::green_hat_wedge(a, b, full, cfg);
    const double r = std::sqrt(a.a * a.a + b.a * b.a - 2 * a.a * b.a * std::cos(a.phi - b.phi));
    dominated += g >= 0.0 && g <= wedge::free_space_green(r, 1.0);
  }
  const bool ok = asym <= 1e-10 && edge < 1e-3 * pq && dominated == 20;
  return {ok, fmt("symmetry %.2e (1e-10), boundary ratio %.2e (< 1e-3), free-space domination %d/20",
                  asym, edge / pq, dominated)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"coefficient spot values", criterion1},
      {"closed form vs integral", criterion2},
      {"derived c values", criterion3},
      {"specialization identities", criterion4},
      {"coefficient ordering", criterion5},
      {"half-plane oracle", criterion6},
      {"polygon end-to-end", criterion7},
      {"Dirichlet-open sector", criterion8},
      {"kernel identity suite", criterion9},
      {"Green function properties", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("[%s] criterion %zu (%s): %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
