#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace heatpoly::numerics {

struct QuadResult {
  double value = 0.0;
  double error_bound = 0.0;  // absolute
  std::size_t evaluations = 0;
};

struct QuadConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::size_t max_evaluations = 2'000'000;
  // Semi-infinite truncation: the caller asserts |f(x)| <= tail_scale * exp(-rate * x)
  // beyond x = 1; the range is cut where the neglected tail drops under abs_tol.
  double tail_scale = 16.0;

  void check() const;
};

using Integrand = std::function<double(double)>;

/// Thrown when the evaluation budget runs out before the tolerance is met.
/// Carries the best estimate available at that point.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(QuadResult best)
      : std::runtime_error("quadrature budget exhausted"), best_(best) {}
  const QuadResult& best() const noexcept { return best_; }

 private:
  QuadResult best_;
};

class NonFiniteSample : public std::runtime_error {
 public:
  explicit NonFiniteSample(double abscissa);
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature with bisection of the
/// panel carrying the largest error estimate.
QuadResult integrate_finite(const Integrand& f, double lo, double hi,
                            const QuadConfig& cfg = {});

/// Integral over [0, inf) of an integrand with exponential decay
/// |f(x)| <= cfg.tail_scale * exp(-decay_rate * x).
QuadResult integrate_semi_infinite(const Integrand& f, double decay_rate,
                                   const QuadConfig& cfg = {});

/// Truncation point used by integrate_semi_infinite.
double tail_cutoff(double decay_rate, const QuadConfig& cfg);

double erf(double x);
double erfc(double x);

/// Cosine integral Ci(x) = gamma + log x + int_0^x (cos s - 1)/s ds, x > 0.
double cosine_integral(double x);

}  // namespace heatpoly::numerics
