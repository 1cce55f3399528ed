#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hydrocomplex/quadrature.hpp"
#include "hydrocomplex/specfun.hpp"
#include "oracles.hpp"

using namespace hydrocomplex;
using namespace hydrocomplex::specfun;

namespace {

constexpr double euler_gamma = 0.57721566490153286061;
constexpr auto Laguerre = PolyFamily::LaguerreOrthonormal;
constexpr auto Gegenbauer = PolyFamily::GegenbauerOrthonormal;

} // namespace

TEST_CASE("lngamma anchors") {
    CHECK(lngamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(lngamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-14));
    CHECK(lngamma(6.0) == doctest::Approx(std::log(120.0)).epsilon(1e-14));

    double factorial = 1.0;
    for (int n = 1; n <= 15; ++n) {
        CHECK(std::abs(std::exp(lngamma(n))/factorial - 1.0) <= 1e-13);
        factorial *= n;
    }
    CHECK_THROWS_AS(lngamma(0.0), DomainError);
    CHECK_THROWS_AS(lngamma(-1.5), DomainError);
}

TEST_CASE("digamma anchors") {
    CHECK(digamma(1.0) == doctest::Approx(-euler_gamma).epsilon(1e-14));
    CHECK(digamma(0.5) == doctest::Approx(-euler_gamma - 2.0*std::numbers::ln2).epsilon(1e-14));
    CHECK(digamma(4.0) == doctest::Approx(-euler_gamma + 11.0/6.0).epsilon(1e-14));
    // the root of ψ
    CHECK(std::abs(digamma(1.4616321449683623)) < 1e-14);
    CHECK_THROWS_AS(digamma(0.0), DomainError);
}

TEST_CASE("digamma recurrence and duplication on random points") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> dist(1e-3, 50.0);
    for (int i = 0; i < 100; ++i) {
        double const x = dist(rng);
        double const rec = digamma(x + 1.0) - digamma(x) - 1.0/x;
        double const dup = digamma(2.0*x) - 0.5*digamma(x) - 0.5*digamma(x + 0.5) - std::numbers::ln2;
        CHECK(std::abs(rec) <= 1e-12*std::max(1.0, 1.0/x));
        CHECK(std::abs(dup) <= 1e-12*std::max(1.0, 1.0/x));
    }
}

TEST_CASE("poly_eval examples") {
    CHECK(poly_eval({Laguerre, 0, 1.0}, 3.7) == doctest::Approx(1.0).epsilon(1e-15));
    // x - 1: the textbook 1 - x with the sign flipped to a positive leading coefficient
    CHECK(poly_eval({Laguerre, 1, 0.0}, 0.0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(poly_eval({Laguerre, 1, 0.0}, 2.5) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(poly_eval({Gegenbauer, 0, 1.0}, -0.3) == doctest::Approx(std::sqrt(2.0/std::numbers::pi)).epsilon(1e-15));
    // U_2(x) = 4x² - 1 with norm² π/2
    CHECK(poly_eval({Gegenbauer, 2, 1.0}, 0.3) ==
          doctest::Approx((4*0.09 - 1.0)*std::sqrt(2.0/std::numbers::pi)).epsilon(1e-14));
    CHECK_THROWS_AS(poly_eval({Laguerre, 2, -1.0}, 1.0), DomainError);
    CHECK_THROWS_AS(poly_eval({Gegenbauer, 2, 0.0}, 0.1), DomainError);
    CHECK_THROWS_AS(poly_eval({Gegenbauer, -1, 1.0}, 0.1), DomainError);
}

TEST_CASE("normalization constants against direct quadrature of the weight") {
    // 1/sqrt(∫ w) for degree 0, with the weight integrated by brute force
    for (double lambda : {0.5, 1.0, 1.5, 2.5}) {
        double const mass = oracle::trapezoid(
            [&](double t) { return std::pow(std::sin(t), 2.0*lambda); }, 0.0, std::numbers::pi, 200000);
        CHECK(poly_eval({Gegenbauer, 0, lambda}, 0.2) == doctest::Approx(1.0/std::sqrt(mass)).epsilon(1e-10));
    }
    for (double alpha : {0.0, 0.5, 2.0}) {
        double const mass = oracle::half_line([&](double x) { return std::pow(x, alpha)*std::exp(-x); });
        CHECK(poly_eval({Laguerre, 0, alpha}, 1.0) == doctest::Approx(1.0/std::sqrt(mass)).epsilon(1e-10));
    }
}

TEST_CASE("recurrence coefficients") {
    auto const lag = poly_recurrence_coeffs(Laguerre, 0.0, 5);
    for (int k = 0; k <= 5; ++k) {
        CHECK(lag.a[k] == doctest::Approx(2*k + 1));
        if (k > 0) CHECK(lag.b[k] == doctest::Approx(k*k));
    }
    auto const cheb = poly_recurrence_coeffs(Gegenbauer, 1.0, 6);
    for (int k = 1; k <= 6; ++k) {
        CHECK(cheb.a[k] == 0.0);
        CHECK(cheb.b[k] == doctest::Approx(0.25).epsilon(1e-15));
    }
    auto const leg = poly_recurrence_coeffs(Gegenbauer, 0.5, 2);
    CHECK(leg.a[1] == 0.0);
    CHECK(leg.b[1] == doctest::Approx(1.0/3.0).epsilon(1e-15));
    CHECK(leg.b[0] == doctest::Approx(2.0).epsilon(1e-15));

    // monic polynomials built from the coefficients are orthogonal (j ≠ k ≤ 5)
    for (auto [family, param] : {std::pair{Laguerre, 0.0}, std::pair{Laguerre, 1.5}, std::pair{Gegenbauer, 1.0},
                                 std::pair{Gegenbauer, 0.5}, std::pair{Gegenbauer, 2.5}}) {
        auto const rec = poly_recurrence_coeffs(family, param, 6);
        auto monic = [&](int k, double x) {
            double prev = 0.0, cur = 1.0;
            for (int j = 0; j < k; ++j) {
                double const next = (x - rec.a[j])*cur - (j > 0 ? rec.b[j]*prev : 0.0);
                prev = cur;
                cur = next;
            }
            return cur;
        };
        for (int j = 0; j <= 5; ++j)
            for (int k = 0; k < j; ++k) {
                double inner = 0.0, scale = 0.0;
                if (family == Laguerre) {
                    auto f = [&](double x) { return std::pow(x, param)*std::exp(-x)*monic(j, x)*monic(k, x); };
                    auto g = [&](double x) { return std::pow(x, param)*std::exp(-x)*std::abs(monic(j, x)*monic(k, x)); };
                    inner = oracle::half_line(f, 200000, -40.0, 4.5);
                    scale = oracle::half_line(g, 200000, -40.0, 4.5);
                } else {
                    auto f = [&](double t) {
                        double const x = std::cos(t);
                        return std::pow(std::sin(t), 2.0*param)*monic(j, x)*monic(k, x);
                    };
                    auto g = [&](double t) {
                        double const x = std::cos(t);
                        return std::pow(std::sin(t), 2.0*param)*std::abs(monic(j, x)*monic(k, x));
                    };
                    inner = oracle::trapezoid_richardson(f, 0.0, std::numbers::pi, 200000);
                    scale = oracle::trapezoid(g, 0.0, std::numbers::pi, 200000);
                }
                CHECK(std::abs(inner) <= 1e-10*scale);
            }
    }
}

TEST_CASE("orthonormality up to degree 20 on a parameter grid") {
    for (auto family : {Laguerre, Gegenbauer}) {
        auto const params = family == Laguerre ? std::vector<double>{0.0, 0.5, 1.0, 1.5, 3.0, 6.5, 10.0}
                                               : std::vector<double>{0.25, 0.5, 1.0, 1.5, 2.0, 3.5, 6.0};
        for (double p : params) {
            auto const w = family == Laguerre ? quadrature::WeightFunction::gen_laguerre(p)
                                              : quadrature::WeightFunction::gegenbauer(p);
            auto const rule = quadrature::gauss_rule(w, 30);
            double worst = 0.0;
            for (int j = 0; j <= 20; ++j)
                for (int k = 0; k <= j; ++k) {
                    double const s = rule.apply([&](double x) {
                        return poly_eval({family, j, p}, x)*poly_eval({family, k, p}, x);
                    });
                    worst = std::max(worst, std::abs(s - (j == k ? 1.0 : 0.0)));
                }
            INFO("param " << p);
            CHECK(worst <= 1e-11);
        }
    }
}

TEST_CASE("roots") {
    auto r = poly_roots({Laguerre, 1, 0.0});
    REQUIRE(r.size() == 1);
    CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-15));

    for (double lambda : {0.5, 1.0, 3.5}) {
        r = poly_roots({Gegenbauer, 1, lambda});
        REQUIRE(r.size() == 1);
        CHECK(std::abs(r[0]) < 1e-15);
    }
    r = poly_roots({Gegenbauer, 2, 1.0});
    REQUIRE(r.size() == 2);
    CHECK(r[0] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(r[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(poly_roots({Laguerre, 0, 2.0}).empty());
}

TEST_CASE("roots interlace and are zeros") {
    for (auto family : {Laguerre, Gegenbauer}) {
        for (double p : {0.5, 1.0, 2.5}) {
            for (int k = 1; k < 30; ++k) {
                auto const lo = poly_roots({family, k, p});
                auto const hi = poly_roots({family, k + 1, p});
                REQUIRE(hi.size() == lo.size() + 1);
                for (std::size_t i = 0; i < lo.size(); ++i) {
                    CHECK(hi[i] < lo[i]);
                    CHECK(lo[i] < hi[i + 1]);
                }
                for (double x : lo) {
                    auto const vd = poly_eval_with_derivative({family, k, p}, x);
                    CHECK(std::abs(vd.value) <= 1e-12*std::abs(vd.derivative)*std::max(1.0, std::abs(x)));
                }
            }
        }
    }
}

TEST_CASE("derivative matches a central difference") {
    for (auto [family, p, x] : {std::tuple{Laguerre, 1.5, 2.3}, std::tuple{Gegenbauer, 2.0, 0.37}}) {
        for (int k : {1, 4, 9}) {
            double const h = 1e-6;
            double const fd = (poly_eval({family, k, p}, x + h) - poly_eval({family, k, p}, x - h))/(2*h);
            CHECK(poly_eval_with_derivative({family, k, p}, x).derivative == doctest::Approx(fd).epsilon(1e-7));
            CHECK(poly_eval_with_derivative({family, k, p}, x).value == poly_eval({family, k, p}, x));
        }
    }
}

TEST_CASE("scaled evaluation survives high degree") {
    // at x far outside the bulk the orthonormal values overflow double
    auto const big = poly_eval_scaled({Laguerre, 400, 0.5}, 5000.0);
    CHECK(std::isfinite(big.log_abs()));
    CHECK(big.log_abs() > 700.0);
    auto const mid = poly_eval_scaled({Laguerre, 20, 0.5}, 3.0);
    CHECK(mid.value() == doctest::Approx(poly_eval({Laguerre, 20, 0.5}, 3.0)).epsilon(1e-14));
    CHECK(std::isinf(poly_eval_scaled({Gegenbauer, 2, 1.0}, 0.5).log_abs()));
}

TEST_CASE("christoffel weights sum to the zeroth moment") {
    for (auto [family, p] : {std::pair{Laguerre, 0.0}, std::pair{Laguerre, 2.5}, std::pair{Gegenbauer, 1.5}}) {
        int const n = 12;
        double sum = 0.0;
        for (double x : poly_roots({family, n, p})) sum += christoffel_weight(family, p, n, x);
        CHECK(sum == doctest::Approx(zeroth_moment(family, p)).epsilon(1e-13));
    }
}
