#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <future>
#include <limits>
#include <numbers>

#include "hydrocomplex/quadrature.hpp"
#include "hydrocomplex/specfun.hpp"
#include "oracles.hpp"

using namespace hydrocomplex;
using namespace hydrocomplex::quadrature;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double pi = std::numbers::pi;
constexpr double euler_gamma = 0.57721566490153286061;

} // namespace

TEST_CASE("gauss_rule examples") {
    auto r = gauss_rule(WeightFunction::gen_laguerre(0.0), 1);
    CHECK(r.nodes[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

    r = gauss_rule(WeightFunction::legendre(), 2);
    CHECK(r.nodes[0] == doctest::Approx(-1.0/std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r.nodes[1] == doctest::Approx(1.0/std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.weights[1] == doctest::Approx(1.0).epsilon(1e-15));

    r = gauss_rule(WeightFunction::gegenbauer(1.0), 1);
    CHECK(std::abs(r.nodes[0]) < 1e-16);
    CHECK(r.weights[0] == doctest::Approx(pi/2).epsilon(1e-15));

    CHECK_THROWS_AS(gauss_rule(WeightFunction::legendre(), 0), DomainError);
    CHECK_THROWS_AS(gauss_rule(WeightFunction::gen_laguerre(-1.0), 3), DomainError);
    CHECK_THROWS_AS(gauss_rule(WeightFunction::legendre(), max_rule_points + 1), DomainError);
}

TEST_CASE("rules are ordered, interior and positive") {
    for (auto w : {WeightFunction::gen_laguerre(0.0), WeightFunction::gen_laguerre(3.5), WeightFunction::gegenbauer(0.75),
                   WeightFunction::gegenbauer(4.0), WeightFunction::legendre()}) {
        for (int n : {1, 5, 40, 128}) {
            auto const r = gauss_rule(w, n);
            REQUIRE(r.order() == n);
            for (int i = 0; i < n; ++i) {
                CHECK(r.nodes[i] > r.domain.lower);
                CHECK(r.nodes[i] < r.domain.upper);
                CHECK(r.weights[i] > 0.0);
                if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
            }
        }
    }
}

TEST_CASE("exactness to degree 2n-1 against analytic moments") {
    // Σ w x^j vs the moment, in log form so degree 127 does not overflow
    auto check_rule = [](WeightFunction const& w, int n) {
        auto const r = gauss_rule(w, n);
        double worst = 0.0;
        for (int j = 0; j <= 2*n - 1; ++j) {
            if (w.kind == WeightKind::GenLaguerre) {
                double const ln_m = std::lgamma(w.param + j + 1.0);
                double s = 0.0;
                for (int i = 0; i < n; ++i) s += std::exp(std::log(r.weights[i]) + j*std::log(r.nodes[i]) - ln_m);
                worst = std::max(worst, std::abs(s - 1.0));
                continue;
            }
            double const lambda = w.kind == WeightKind::Legendre ? 0.5 : w.param;
            double s = 0.0, mag = 0.0;
            for (int i = 0; i < n; ++i) {
                double const t = r.weights[i]*std::pow(r.nodes[i], j);
                s += t;
                mag += std::abs(t);
            }
            if (j % 2 == 1) {
                worst = std::max(worst, std::abs(s)/mag);
            } else {
                double const m =
                    std::exp(std::lgamma(0.5*(j + 1)) + std::lgamma(lambda + 0.5) - std::lgamma(0.5*j + lambda + 1.0));
                worst = std::max(worst, std::abs(s/m - 1.0));
            }
        }
        return worst;
    };
    for (int n : {4, 16, 64}) {
        for (double a : {0.0, 0.5, 1.0, 3.5}) CHECK(check_rule(WeightFunction::gen_laguerre(a), n) <= 1e-12);
        for (double l : {0.5, 1.0, 1.5, 3.0}) CHECK(check_rule(WeightFunction::gegenbauer(l), n) <= 1e-12);
        CHECK(check_rule(WeightFunction::legendre(), n) <= 1e-12);
    }
}

TEST_CASE("cached rules are shared and safe under concurrent use") {
    auto const a = cached_gauss_rule(WeightFunction::gegenbauer(2.5), 24);
    auto const b = cached_gauss_rule(WeightFunction::gegenbauer(2.5), 24);
    CHECK(a.get() == b.get());
    std::vector<std::future<double>> jobs;
    for (int t = 0; t < 8; ++t)
        jobs.push_back(std::async(std::launch::async, [t] {
            double sum = 0.0;
            for (int n = 1; n <= 40; ++n) sum += cached_gauss_rule(WeightFunction::gen_laguerre(0.5*(t % 3)), n)->order();
            return sum;
        }));
    for (auto& j : jobs) CHECK(j.get() == 820.0);
}

TEST_CASE("integrate_adaptive examples") {
    auto r = integrate_adaptive([](double x) { return x*x; }, {0.0, 1.0}, {}, 1e-12);
    CHECK(r.converged);
    CHECK(std::abs(r.value - 1.0/3.0) <= 1e-15);

    double const zero[] = {0.0};
    r = integrate_adaptive([](double x) { return std::log(std::abs(x)); }, {-1.0, 1.0}, zero, 1e-12);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(-2.0).epsilon(1e-12));

    // x e^{-x} ln²x on (0, ∞): closed value and a trapezoid oracle
    auto f = [](double x) { return x > 0 ? x*std::exp(-x)*std::log(x)*std::log(x) : 0.0; };
    double const one[] = {1.0};
    r = integrate_adaptive(f, {0.0, inf}, one, 1e-12);
    double const exact = (1.0 - euler_gamma)*(1.0 - euler_gamma) + pi*pi/6.0 - 1.0;
    double const brute = oracle::half_line(f, 1'000'000, -40.0, 5.0);
    CHECK(r.converged);
    CHECK(std::abs(r.value - brute) <= 1e-9);
    CHECK(std::abs(r.value - exact) <= 1e-12);
}

TEST_CASE("polynomial times weight reproduces the Gauss result") {
    auto const rule = gauss_rule(WeightFunction::gegenbauer(1.5), 10);
    auto poly = [](double x) { return 3*std::pow(x, 8) - x*x*x + 0.5*x - 2; };
    double const gauss = rule.apply(poly);
    auto r = integrate_adaptive([&](double x) { return poly(x)*(1 - x*x); }, {-1.0, 1.0}, {}, 1e-13);
    CHECK(std::abs(r.value - gauss) <= 1e-12*std::abs(gauss));

    auto const lag = gauss_rule(WeightFunction::gen_laguerre(2.0), 10);
    auto p2 = [](double x) { return x*x*x - 4*x + 1; };
    double const g2 = lag.apply(p2);
    IntegrationOptions opt;
    opt.rel_tol = 1e-13;
    opt.scale = 5.0;
    r = integrate_adaptive([&](double x) { return p2(x)*x*x*std::exp(-x); }, {0.0, inf}, {}, opt);
    CHECK(std::abs(r.value - g2) <= 1e-12*std::abs(g2));
}

TEST_CASE("error estimates are honest on known integrals") {
    struct Case {
        char const* name;
        std::function<double(double)> f;
        Interval interval;
        std::vector<double> breaks;
        double exact;
    };
    std::vector<Case> const cases = {
        {"x^5", [](double x) { return std::pow(x, 5); }, {0, 1}, {}, 1.0/6},
        {"sqrt", [](double x) { return std::sqrt(x); }, {0, 1}, {}, 2.0/3},
        {"1/sqrt", [](double x) { return 1/std::sqrt(x); }, {0, 1}, {}, 2.0},
        {"ln", [](double x) { return std::log(x); }, {0, 1}, {}, -1.0},
        {"exp", [](double x) { return std::exp(x); }, {0, 2}, {}, std::exp(2.0) - 1},
        {"runge", [](double x) { return 1/(1 + 25*x*x); }, {-1, 1}, {}, 0.4*std::atan(5.0)},
        {"kink", [](double x) { return std::abs(x - 1.0/3); }, {0, 1}, {}, 5.0/18},
        {"cos20", [](double x) { return std::cos(20*x); }, {0, pi}, {}, 0.0},
        {"sin2", [](double x) { return std::sin(x)*std::sin(x); }, {0, pi}, {}, pi/2},
        {"exp tail", [](double x) { return std::exp(-x); }, {0, inf}, {}, 1.0},
        {"lorentz", [](double x) { return 1/(1 + x*x); }, {0, inf}, {}, pi/2},
        {"gamma half", [](double x) { return std::exp(-x)/std::sqrt(x); }, {0, inf}, {}, std::sqrt(pi)},
        {"ln exp", [](double x) { return std::log(x)*std::exp(-x); }, {0, inf}, {}, -euler_gamma},
        {"gauss", [](double x) { return std::exp(-x*x); }, {0, inf}, {}, std::sqrt(pi)/2},
        {"x^4 over (1+x^2)^4", [](double x) { return std::pow(x, 4)/std::pow(1 + x*x, 4); }, {0, inf}, {}, pi/32},
        {"ln|x-r|", [](double x) { return std::log(std::abs(x - 0.3)); }, {0, 1}, {0.3},
         0.3*std::log(0.3) + 0.7*std::log(0.7) - 1},
        {"x ln x", [](double x) { return x*std::log(x); }, {0, 1}, {}, -0.25},
        {"sin/x tail", [](double x) { return x == 0 ? 1.0 : std::exp(-x)*std::sin(x)/x; }, {0, inf}, {}, pi/4},
        {"step", [](double x) { return x < 0.5 ? 1.0 : 3.0; }, {0, 1}, {0.5}, 2.0},
        {"x^2 ln^2", [](double x) { return x*x*std::log(x)*std::log(x); }, {0, 1}, {}, 2.0/27},
    };
    REQUIRE(cases.size() == 20);
    for (auto const& c : cases) {
        auto const r = integrate_adaptive(c.f, c.interval, c.breaks, 1e-10);
        double const err = std::abs(r.value - c.exact);
        INFO(c.name << ": value " << r.value << " err " << err << " est " << r.err_est);
        CHECK(r.converged);
        CHECK(err <= 10*r.err_est + 4*std::numeric_limits<double>::epsilon()*std::max(1.0, std::abs(c.exact)));
        CHECK(err <= 1e-9*std::max(1.0, std::abs(c.exact)));
    }
}

TEST_CASE("preconditions and failure reporting") {
    auto f = [](double x) { return x; };
    double const outside[] = {2.0};
    double const unsorted[] = {0.6, 0.4};
    CHECK_THROWS_AS(integrate_adaptive(f, {0, 1}, outside, 1e-10), DomainError);
    CHECK_THROWS_AS(integrate_adaptive(f, {0, 1}, unsorted, 1e-10), DomainError);
    CHECK_THROWS_AS(integrate_adaptive(f, {0, 1}, {}, 1e-14), DomainError);
    CHECK_THROWS_AS(integrate_adaptive(f, {1, 0}, {}, 1e-10), DomainError);

    // 1/x is not integrable at 0: depth runs out, the result is flagged
    IntegrationOptions opt;
    opt.max_depth = 20;
    auto const r = integrate_adaptive([](double x) { return 1/x; }, {0, 1}, {}, opt);
    CHECK_FALSE(r.converged);
    try {
        integrate_or_throw([](double x) { return 1/x; }, {0, 1}, {}, opt, "pole");
        FAIL("expected ConvergenceError");
    } catch (ConvergenceError const& e) {
        CHECK(std::string(e.what()).find("pole") != std::string::npos);
        CHECK(e.best_estimate().value > 10.0);
    }

    auto const nan = integrate_adaptive([](double) { return std::nan(""); }, {0, 1}, {}, 1e-10);
    CHECK_FALSE(nan.converged);
    CHECK(std::isnan(nan.value));
}
