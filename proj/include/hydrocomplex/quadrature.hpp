#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hydrocomplex/specfun.hpp"

namespace hydrocomplex::quadrature {

enum class WeightKind { GenLaguerre, Gegenbauer, Legendre };

/// Weight function of a Gauss rule. `param` is α for GenLaguerre, λ for
/// Gegenbauer and unused for Legendre.
struct WeightFunction {
    WeightKind kind = WeightKind::Legendre;
    double param = 0.0;

    static WeightFunction gen_laguerre(double alpha) { return {WeightKind::GenLaguerre, alpha}; }
    static WeightFunction gegenbauer(double lambda) { return {WeightKind::Gegenbauer, lambda}; }
    static WeightFunction legendre() { return {WeightKind::Legendre, 0.0}; }

    double operator()(double x) const;
    std::string describe() const;

    friend bool operator==(WeightFunction const&, WeightFunction const&) = default;
};

/// Closed or half-open integration range; `upper` may be +infinity.
struct Interval {
    double lower = 0.0;
    double upper = 0.0;

    bool semi_infinite() const;
};

Interval domain_of(WeightFunction const& weight);

struct QuadratureRule {
    std::vector<double> nodes;   // strictly increasing, interior
    std::vector<double> weights; // positive (may underflow for very large Laguerre rules)
    Interval domain;
    WeightFunction weight;

    int order() const { return static_cast<int>(nodes.size()); }

    /// Σ w_i f(x_i)
    template <typename F>
    double apply(F&& f) const {
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i]*f(nodes[i]);
        return sum;
    }
};

inline constexpr int max_rule_points = 512;

/// Golub–Welsch rule with `n_points` nodes, exact for polynomials of degree
/// 2n-1 against the weight.
QuadratureRule gauss_rule(WeightFunction const& weight, int n_points);

/// Memoized gauss_rule; safe for concurrent callers.
std::shared_ptr<QuadratureRule const> cached_gauss_rule(WeightFunction const& weight, int n_points);

struct IntegrationOptions {
    double rel_tol = 1e-10;
    /// extra absolute floor; the integrator always adds a roundoff floor
    /// proportional to ∫|f|
    double abs_tol = 0.0;
    int max_depth = 60;
    std::size_t max_panels = 1u << 17;
    /// length scale s of the map x = lower + s t/(1-t) for semi-infinite ranges
    double scale = 1.0;
};

struct IntegrationResult {
    double value = 0.0;
    double err_est = 0.0;
    bool converged = false;
    std::size_t evaluations = 0;
};

/// Thrown by callers that require convergence; carries the best estimate.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(std::string const& what, IntegrationResult best)
        : std::runtime_error(what), best_(best) {}
    IntegrationResult const& best_estimate() const { return best_; }

  private:
    IntegrationResult best_;
};

/// Composite Gauss–Legendre integration: each panel is estimated with 30 and
/// 15 points, and the panel with the largest disagreement is bisected until
/// the summed disagreement meets the tolerance. Panels never straddle a
/// breakpoint. Semi-infinite ranges are mapped onto (0, 1) first.
IntegrationResult integrate_adaptive(std::function<double(double)> const& f, Interval interval,
                                     std::span<double const> breakpoints, IntegrationOptions const& options);

IntegrationResult integrate_adaptive(std::function<double(double)> const& f, Interval interval,
                                     std::span<double const> breakpoints, double rel_tol);

/// integrate_adaptive that throws ConvergenceError when the tolerance is not met.
IntegrationResult integrate_or_throw(std::function<double(double)> const& f, Interval interval,
                                     std::span<double const> breakpoints, IntegrationOptions const& options,
                                     std::string const& what);

} // namespace hydrocomplex::quadrature
