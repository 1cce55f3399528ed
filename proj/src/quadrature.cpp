#include "hydrocomplex/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <tuple>
#include <shared_mutex>
#include <utility>

namespace hydrocomplex::quadrature {

namespace {

    specfun::PolyFamily family_of(WeightFunction const& w) {
        return w.kind == WeightKind::GenLaguerre ? specfun::PolyFamily::LaguerreOrthonormal
                                                 : specfun::PolyFamily::GegenbauerOrthonormal;
    }

    double family_param(WeightFunction const& w) { return w.kind == WeightKind::Legendre ? 0.5 : w.param; }

    struct Panel {
        double a, b;
        double value, err, abs_value;
        int depth;
        bool operator<(Panel const& other) const { return err < other.err; }
    };

    QuadratureRule const& legendre_rule(int n) {
        // function-local statics: initialized once, then read-only
        if (n == 30) {
            static QuadratureRule const rule30 = gauss_rule(WeightFunction::legendre(), 30);
            return rule30;
        }
        static QuadratureRule const rule15 = gauss_rule(WeightFunction::legendre(), 15);
        return rule15;
    }

} // namespace

double WeightFunction::operator()(double x) const {
    switch (kind) {
    case WeightKind::GenLaguerre: return x > 0.0 ? std::exp(param*std::log(x) - x) : (param == 0.0 ? 1.0 : 0.0);
    case WeightKind::Gegenbauer: return std::pow(1.0 - x*x, param - 0.5);
    case WeightKind::Legendre: return 1.0;
    }
    return 0.0;
}

std::string WeightFunction::describe() const {
    switch (kind) {
    case WeightKind::GenLaguerre: return "GenLaguerre(" + std::to_string(param) + ")";
    case WeightKind::Gegenbauer: return "Gegenbauer(" + std::to_string(param) + ")";
    case WeightKind::Legendre: return "Legendre";
    }
    return "?";
}

bool Interval::semi_infinite() const { return std::isinf(upper); }

Interval domain_of(WeightFunction const& weight) {
    if (weight.kind == WeightKind::GenLaguerre) return {0.0, std::numeric_limits<double>::infinity()};
    return {-1.0, 1.0};
}

QuadratureRule gauss_rule(WeightFunction const& weight, int n_points) {
    if (n_points < 1 || n_points > max_rule_points)
        throw DomainError("gauss_rule: n_points must lie in [1, " + std::to_string(max_rule_points) + "], got " +
                          std::to_string(n_points));
    auto const family = family_of(weight);
    double const param = family_param(weight);
    specfun::validate_param(family, param);

    QuadratureRule rule;
    rule.weight = weight;
    rule.domain = domain_of(weight);
    rule.nodes = specfun::poly_roots({family, n_points, param});
    rule.weights.resize(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        rule.weights[i] = specfun::christoffel_weight(family, param, n_points, rule.nodes[i]);
    if (family == specfun::PolyFamily::GegenbauerOrthonormal) {
        auto const n = rule.weights.size();
        for (std::size_t i = 0; i < n/2; ++i) {
            double const w = 0.5*(rule.weights[i] + rule.weights[n - 1 - i]);
            rule.weights[i] = rule.weights[n - 1 - i] = w;
        }
    }
    return rule;
}

std::shared_ptr<QuadratureRule const> cached_gauss_rule(WeightFunction const& weight, int n_points) {
    using Key = std::tuple<int, double, int>;
    static std::shared_mutex mutex;
    static std::map<Key, std::shared_ptr<QuadratureRule const>> cache;

    Key const key{static_cast<int>(weight.kind), weight.param, n_points};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto rule = std::make_shared<QuadratureRule const>(gauss_rule(weight, n_points));
    std::unique_lock lock(mutex);
    return cache.try_emplace(key, std::move(rule)).first->second;
}

IntegrationResult integrate_adaptive(std::function<double(double)> const& f, Interval interval,
                                     std::span<double const> breakpoints, IntegrationOptions const& options) {
    if (!(options.rel_tol >= 1e-13))
        throw DomainError("integrate_adaptive: rel_tol must be at least 1e-13");
    if (!(interval.lower < interval.upper) || std::isinf(interval.lower))
        throw DomainError("integrate_adaptive: need a finite lower bound below the upper bound");
    if (!(options.scale > 0.0)) throw DomainError("integrate_adaptive: mapping scale must be positive");
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        double const x = breakpoints[i];
        if (!(x > interval.lower && x < interval.upper))
            throw DomainError("integrate_adaptive: breakpoint " + std::to_string(x) + " is not interior");
        if (i > 0 && !(x > breakpoints[i - 1]))
            throw DomainError("integrate_adaptive: breakpoints must be strictly increasing");
    }

    bool const mapped = interval.semi_infinite();
    double const lower = interval.lower;
    double const s = options.scale;
    // integrand in the working variable t
    auto g = [&](double t) -> double {
        if (!mapped) return f(t);
        double const one_minus = 1.0 - t;
        return f(lower + s*t/one_minus)*s/(one_minus*one_minus);
    };
    auto to_working = [&](double x) { return mapped ? (x - lower)/(s + x - lower) : x; };

    auto const& r30 = legendre_rule(30);
    auto const& r15 = legendre_rule(15);

    IntegrationResult result;
    bool finite = true;
    auto evaluate = [&](double a, double b, int depth) {
        double const half = 0.5*(b - a), mid = 0.5*(a + b);
        double i30 = 0.0, abs30 = 0.0, i15 = 0.0;
        for (int i = 0; i < r30.order(); ++i) {
            double const v = g(mid + half*r30.nodes[i]);
            i30 += r30.weights[i]*v;
            abs30 += r30.weights[i]*std::abs(v);
        }
        for (int i = 0; i < r15.order(); ++i) i15 += r15.weights[i]*g(mid + half*r15.nodes[i]);
        result.evaluations += r30.order() + r15.order();
        i30 *= half;
        i15 *= half;
        abs30 *= half;
        if (!std::isfinite(i30) || !std::isfinite(i15)) finite = false;
        return Panel{a, b, i30, std::abs(i30 - i15), abs30, depth};
    };

    std::vector<double> edges;
    edges.push_back(to_working(interval.lower));
    for (double x : breakpoints) edges.push_back(to_working(x));
    edges.push_back(mapped ? 1.0 : interval.upper);

    std::priority_queue<Panel> active;
    std::vector<Panel> frozen;
    double total_value = 0.0, total_err = 0.0, total_abs = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        auto p = evaluate(edges[i], edges[i + 1], 0);
        total_value += p.value;
        total_err += p.err;
        total_abs += p.abs_value;
        active.push(p);
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::size_t panel_count = active.size();
    while (finite) {
        double const tol = std::max({options.rel_tol*std::abs(total_value), options.abs_tol, 50.0*eps*total_abs});
        if (total_err <= tol) {
            result.converged = true;
            break;
        }
        if (active.empty()) break;
        Panel worst = active.top();
        active.pop();
        if (worst.depth >= options.max_depth || panel_count >= options.max_panels) {
            frozen.push_back(worst);
            continue;
        }
        double const mid = 0.5*(worst.a + worst.b);
        auto left = evaluate(worst.a, mid, worst.depth + 1);
        auto right = evaluate(mid, worst.b, worst.depth + 1);
        total_value += left.value + right.value - worst.value;
        total_err = std::max(0.0, total_err + left.err + right.err - worst.err);
        total_abs += left.abs_value + right.abs_value - worst.abs_value;
        active.push(left);
        active.push(right);
        ++panel_count;
    }

    if (!finite) {
        result.value = std::numeric_limits<double>::quiet_NaN();
        result.err_est = std::numeric_limits<double>::infinity();
        result.converged = false;
        return result;
    }

    // resum from scratch to shed incremental drift
    double value = 0.0, err = 0.0;
    for (auto const& p : frozen) {
        value += p.value;
        err += p.err;
    }
    while (!active.empty()) {
        value += active.top().value;
        err += active.top().err;
        active.pop();
    }
    result.value = value;
    result.err_est = err;
    return result;
}

IntegrationResult integrate_adaptive(std::function<double(double)> const& f, Interval interval,
                                     std::span<double const> breakpoints, double rel_tol) {
    IntegrationOptions options;
    options.rel_tol = rel_tol;
    return integrate_adaptive(f, interval, breakpoints, options);
}

IntegrationResult integrate_or_throw(std::function<double(double)> const& f, Interval interval,
                                     std::span<double const> breakpoints, IntegrationOptions const& options,
                                     std::string const& what) {
    auto result = integrate_adaptive(f, interval, breakpoints, options);
    if (!result.converged)
        throw ConvergenceError(what + ": adaptive quadrature did not reach rel_tol " + std::to_string(options.rel_tol),
                               result);
    return result;
}

} // namespace hydrocomplex::quadrature
