#include "heatpoly/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace heatpoly::mc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Bridge crossing probabilities below exp(-40) are ignored.
constexpr double kMaxBridgeExponent = 40.0;

struct DirichletEdge {
  Point a;
  Point dir;     // unit tangent
  Point normal;  // unit normal
  double length;
};

class Walker {
 public:
  Walker(const Polygon& polygon, double t, const MCConfig& cfg)
      : polygon_(polygon),
        h_(t / cfg.n_steps),
        step_sd_(std::sqrt(2.0 * t / cfg.n_steps)),
        n_steps_(cfg.n_steps),
        bridge_(cfg.bridge_correction),
        bridge_scale_(cfg.bridge_exponent_scale) {
    for (const auto& e : edges(polygon)) {
      if (e.bc != BoundaryCondition::Dirichlet) continue;
      const Point d = e.b - e.a;
      const double len = norm(d);
      const Point u = (1.0 / len) * d;
      dirichlet_.push_back({e.a, u, {-u.y, u.x}, len});
    }
  }

  PathOutcome run(Point p, Rng& rng) const {
    std::normal_distribution<double> gauss(0.0, step_sd_);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (std::uint32_t k = 0; k < n_steps_; ++k) {
      const double dx = gauss(rng);
      const double dy = gauss(rng);
      const Point q{p.x + dx, p.y + dy};
      double survive = 1.0;
      if (step_kills(p, q, survive)) return PathOutcome::Killed;
      if (survive < 1.0 && uniform(rng) >= survive) return PathOutcome::Killed;
      p = q;
    }
    return point_in_domain(polygon_, p) ? PathOutcome::SurvivedInside
                                        : PathOutcome::SurvivedOutside;
  }

 private:
  // True if the straight step touches a Dirichlet edge; otherwise multiplies
  // `survive` by the bridge non-crossing probability of each nearby edge.
  bool step_kills(Point p, Point q, double& survive) const {
    for (const auto& e : dirichlet_) {
      const Point rp = p - e.a;
      const Point rq = q - e.a;
      const double d1 = dot(rp, e.normal);
      const double d2 = dot(rq, e.normal);
      const double s1 = dot(rp, e.dir);
      const double s2 = dot(rq, e.dir);
      if (d1 == 0.0 && d2 == 0.0) {
        if (std::max(s1, s2) >= 0.0 && std::min(s1, s2) <= e.length) return true;
        continue;
      }
      if ((d1 > 0.0) != (d2 > 0.0) || d1 == 0.0 || d2 == 0.0) {
        const double s = s1 + (s2 - s1) * d1 / (d1 - d2);
        if (s >= 0.0 && s <= e.length) return true;
        continue;
      }
      if (!bridge_) continue;
      const double exponent = bridge_scale_ * d1 * d2 / h_;
      if (exponent > kMaxBridgeExponent) continue;
      // The bridge most likely meets the line nearer the closer endpoint.
      const double w = std::abs(d1) / (std::abs(d1) + std::abs(d2));
      const double s = s1 + (s2 - s1) * w;
      if (s >= 0.0 && s <= e.length) survive *= -std::expm1(-exponent);
    }
    return false;
  }

  const Polygon& polygon_;
  double h_;
  double step_sd_;
  std::uint32_t n_steps_;
  bool bridge_;
  double bridge_scale_;
  std::vector<DirichletEdge> dirichlet_;
};

void check_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("time t must be positive");
}

struct Counts {
  std::uint64_t survivors = 0;
  std::uint64_t attempts = 0;
};

Counts count_survivors(const Walker& walker, const StartSampler& sampler, const MCConfig& cfg,
                       Execution exec) {
  const auto n = static_cast<std::int64_t>(cfg.n_paths);
  std::uint64_t survivors = 0;
  std::uint64_t attempts = 0;
  auto one = [&](std::int64_t i, std::uint64_t& surv, std::uint64_t& att) {
    Rng rng = rng_for_path(cfg.seed, static_cast<std::uint64_t>(i));
    const Point start = sampler(rng, att);
    if (walker.run(start, rng) == PathOutcome::SurvivedInside) ++surv;
  };
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < n; ++i) one(i, survivors, attempts);
  } else {
    // Integer sums make the result independent of the thread schedule.
#pragma omp parallel for schedule(dynamic, 1024) reduction(+ : survivors, attempts)
    for (std::int64_t i = 0; i < n; ++i) one(i, survivors, attempts);
  }
  return {survivors, attempts};
}

MCEstimate make_estimate(Counts c, double scale, const MCConfig& cfg) {
  MCEstimate est;
  const double n = static_cast<double>(cfg.n_paths);
  const double p = static_cast<double>(c.survivors) / n;
  est.mean = scale * p;
  est.std_error = scale * std::sqrt(p * (1.0 - p) / n);
  est.n_paths = cfg.n_paths;
  est.survivors = c.survivors;
  est.start_attempts = c.attempts;
  est.config = cfg;
  return est;
}

}  // namespace

Rng rng_for_path(std::uint64_t seed, std::uint64_t path_index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(path_index + 0x632BE59BD9B4E019ULL)));
}

void MCConfig::check() const {
  if (n_paths < 1) throw std::invalid_argument("MCConfig: n_paths must be >= 1");
  if (n_steps < 1) throw std::invalid_argument("MCConfig: n_steps must be >= 1");
  if (!(bridge_exponent_scale > 0.0))
    throw std::invalid_argument("MCConfig: bridge_exponent_scale must be positive");
}

PathOutcome simulate_path(const Polygon& polygon, Point start, double t, const MCConfig& cfg,
                          std::uint64_t path_index) {
  cfg.check();
  check_time(t);
  if (!point_in_domain(polygon, start))
    throw std::invalid_argument("simulate_path: start point is not inside the domain");
  Rng rng = rng_for_path(cfg.seed, path_index);
  return Walker(polygon, t, cfg).run(start, rng);
}

MCEstimate estimate_solution_at(const Polygon& polygon, Point x, double t, const MCConfig& cfg,
                                Execution exec) {
  cfg.check();
  check_time(t);
  if (!point_in_domain(polygon, x))
    throw std::invalid_argument("estimate_solution_at: point is not inside the domain");
  const Walker walker(polygon, t, cfg);
  const StartSampler fixed = [x](Rng&, std::uint64_t& attempts) {
    ++attempts;
    return x;
  };
  return make_estimate(count_survivors(walker, fixed, cfg, exec), 1.0, cfg);
}

MCEstimate estimate_region_content(const Polygon& polygon, const StartSampler& sampler,
                                   double region_area, double t, const MCConfig& cfg,
                                   Execution exec) {
  cfg.check();
  check_time(t);
  if (!(region_area > 0.0)) throw std::invalid_argument("region area must be positive");
  const Walker walker(polygon, t, cfg);
  return make_estimate(count_survivors(walker, sampler, cfg, exec), region_area, cfg);
}

MCEstimate estimate_heat_content(const Polygon& polygon, double t, const MCConfig& cfg,
                                 Execution exec) {
  const auto [lo, hi] = bounding_box(polygon);
  const StartSampler uniform_in_domain = [&polygon, lo, hi](Rng& rng, std::uint64_t& attempts) {
    std::uniform_real_distribution<double> ux(lo.x, hi.x);
    std::uniform_real_distribution<double> uy(lo.y, hi.y);
    for (;;) {
      ++attempts;
      const Point p{ux(rng), uy(rng)};
      if (point_in_domain(polygon, p)) return p;
    }
  };
  return estimate_region_content(polygon, uniform_in_domain, area(polygon), t, cfg, exec);
}

Polygon dirichlet_open_wedge(double alpha, double far_radius) {
  constexpr double kPi = std::numbers::pi;
  if (!(alpha > 0.0 && alpha < 2.0 * kPi)) throw DomainError("wedge angle must lie in (0, 2pi)");
  const int arc_segments = std::max(2, static_cast<int>(std::ceil(alpha / (kPi / 8.0))));
  Loop loop;
  loop.vertices.push_back({0.0, 0.0});
  loop.edge_bc.push_back(BoundaryCondition::Dirichlet);
  for (int k = 0; k <= arc_segments; ++k) {
    const double phi = alpha * k / arc_segments;
    loop.vertices.push_back({far_radius * std::cos(phi), far_radius * std::sin(phi)});
    loop.edge_bc.push_back(BoundaryCondition::Open);
  }
  return validate(RawPolygon{{loop}});
}

MCEstimate estimate_sector_content_DO(double alpha, double R, double t, const MCConfig& cfg,
                                      Execution exec) {
  check_time(t);
  if (!(R > 0.0)) throw std::invalid_argument("sector radius must be positive");
  // Inscribed chords of the far arc stay above cos(pi/16) of the radius; 14
  // diffusion lengths beyond the sector is out of reach in time t.
  const double far = (R + 14.0 * std::sqrt(4.0 * t)) / std::cos(std::numbers::pi / 16.0);
  const Polygon wedge = dirichlet_open_wedge(alpha, far);
  const StartSampler in_sector = [alpha, R](Rng& rng, std::uint64_t& attempts) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ++attempts;
    const double r = R * std::sqrt(u(rng));
    const double phi = alpha * u(rng);
    return Point{r * std::cos(phi), r * std::sin(phi)};
  };
  return estimate_region_content(wedge, in_sector, 0.5 * alpha * R * R, t, cfg, exec);
}

}  // namespace heatpoly::mc
