#include "heatpoly/numerics.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

namespace heatpoly::numerics {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
using Gauss = boost::math::quadrature::gauss<double, 7>;

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

double sample(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) throw NonFiniteSample(x);
  return y;
}

// Kronrod abscissae at even indices coincide with the 7-point Gauss nodes.
Panel kronrod_panel(const Integrand& f, double lo, double hi) {
  static const auto& xk = Kronrod::abscissa();
  static const auto& wk = Kronrod::weights();
  static const auto& wg = Gauss::weights();

  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = sample(f, center);
  double kronrod = wk[0] * fc;
  double gauss = wg[0] * fc;
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double dx = half * xk[i];
    const double pair = sample(f, center - dx) + sample(f, center + dx);
    kronrod += wk[i] * pair;
    if (i % 2 == 0) gauss += wg[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

void QuadConfig::check() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw std::invalid_argument("QuadConfig: tolerances must be positive");
  if (max_evaluations < 16)
    throw std::invalid_argument("QuadConfig: max_evaluations must be >= 16");
  if (!(tail_scale > 0.0))
    throw std::invalid_argument("QuadConfig: tail_scale must be positive");
}

NonFiniteSample::NonFiniteSample(double abscissa)
    : std::runtime_error([abscissa] {
        std::ostringstream os;
        os.precision(17);
        os << "non-finite integrand sample at x = " << abscissa;
        return os.str();
      }()),
      abscissa_(abscissa) {}

QuadResult integrate_finite(const Integrand& f, double lo, double hi,
                            const QuadConfig& cfg) {
  cfg.check();
  if (!(lo < hi)) throw std::invalid_argument("integrate_finite: require lo < hi");

  constexpr std::size_t kPanelCost = 15;
  const double min_width = 64 * std::numeric_limits<double>::epsilon() * (hi - lo);

  std::priority_queue<Panel> heap;
  std::vector<Panel> settled;  // panels too narrow to split further
  Panel first = kronrod_panel(f, lo, hi);
  std::size_t evaluations = kPanelCost;
  double value = first.value;
  double error = first.error;
  heap.push(first);

  auto tolerance = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value)); };
  std::size_t iteration = 0;

  while (error > tolerance() && !heap.empty()) {
    if (evaluations + 2 * kPanelCost > cfg.max_evaluations) {
      throw BudgetExhausted({value, error, evaluations});
    }
    Panel worst = heap.top();
    heap.pop();
    if (worst.hi - worst.lo < min_width) {
      settled.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel left = kronrod_panel(f, worst.lo, mid);
    Panel right = kronrod_panel(f, mid, worst.hi);
    evaluations += 2 * kPanelCost;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);

    // Re-sum from scratch now and then so incremental drift never dominates.
    if (++iteration % 256 == 0) {
      auto copy = heap;
      value = 0.0;
      error = 0.0;
      while (!copy.empty()) {
        value += copy.top().value;
        error += copy.top().error;
        copy.pop();
      }
      for (const auto& p : settled) {
        value += p.value;
        error += p.error;
      }
    }
  }

  // An empty heap means every remaining panel hit the width floor; the
  // reported bound is then roundoff-limited rather than budget-limited.
  return {value, error, evaluations};
}

double tail_cutoff(double decay_rate, const QuadConfig& cfg) {
  const double ratio = cfg.tail_scale / (cfg.abs_tol * decay_rate);
  return std::max(1.0, std::log(std::max(ratio, 1.0)) / decay_rate);
}

QuadResult integrate_semi_infinite(const Integrand& f, double decay_rate,
                                   const QuadConfig& cfg) {
  cfg.check();
  if (!(decay_rate > 0.0) || !std::isfinite(decay_rate))
    throw std::invalid_argument("integrate_semi_infinite: decay_rate must be positive");
  const double cutoff = tail_cutoff(decay_rate, cfg);
  QuadResult r = integrate_finite(f, 0.0, cutoff, cfg);
  r.error_bound += cfg.tail_scale * std::exp(-decay_rate * cutoff) / decay_rate;
  return r;
}

double erf(double x) { return std::erf(x); }
double erfc(double x) { return std::erfc(x); }

double cosine_integral(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("cosine_integral: x must be positive");
  // (1 - cos s)/s = 2 sin^2(s/2)/s has no cancellation near s = 0.
  auto integrand = [](double s) {
    if (s == 0.0) return 0.0;
    const double h = std::sin(0.5 * s);
    return 2.0 * h * h / s;
  };
  QuadConfig cfg;
  cfg.abs_tol = 1e-15;
  cfg.rel_tol = 1e-14;
  const double tail = integrate_finite(integrand, 0.0, x, cfg).value;
  return std::numbers::egamma + std::log(x) - tail;
}

}  // namespace heatpoly::numerics
