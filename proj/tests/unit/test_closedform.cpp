#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hydrocomplex/closedform.hpp"
#include "hydrocomplex/measures.hpp"

using namespace hydrocomplex;
using namespace hydrocomplex::closedform;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double e = std::numbers::e;

} // namespace

TEST_CASE("ground state") {
    for (int D = 2; D <= 10; ++D) {
        double const expected = std::pow(e/2, D);
        CHECK(std::abs(ground_report(D).complexity_pos.value - expected) <= 4*expected*1e-16*2.3);
    }
    CHECK(ground_report(3).complexity_pos.value == doctest::Approx(2.5106921).epsilon(1e-7));
    // the printed momentum values and their closed expressions
    CHECK(std::abs(ground_report(2).complexity_mom.value - 1.7926) < 1e-4);
    CHECK(std::abs(ground_report(3).complexity_mom.value - 2.3545) < 1e-4);
    CHECK(std::abs(ground_report(4).complexity_mom.value - 3.0799) < 1e-4);
    CHECK(ground_report(2).complexity_mom.value == doctest::Approx(2*std::exp(1.5)/5).epsilon(1e-14));
    CHECK(ground_report(3).complexity_mom.value == doctest::Approx(66*std::exp(-10.0/3)).epsilon(1e-14));
    CHECK(ground_report(4).complexity_mom.value == doctest::Approx(std::exp(35.0/12)/6).epsilon(1e-14));

    auto const h = ground_report(3);
    CHECK(h.shannon_pos.value == doctest::Approx(3 + std::log(pi)).epsilon(1e-15));
    CHECK(h.disequilibrium_pos.value == doctest::Approx(1/(8*pi)).epsilon(1e-15));
    CHECK(h.disequilibrium_mom.value == doctest::Approx(33/(16*pi*pi)).epsilon(1e-14));
    CHECK(h.method == Method::ClosedForm);
    CHECK(h.complexity_pos.err_est == 0.0);

    for (int D = 2; D < 12; ++D)
        CHECK(ground_report(D + 1).complexity_pos.value > ground_report(D).complexity_pos.value);
}

TEST_CASE("charge dependence") {
    for (int D : {2, 3, 6}) {
        auto const a = ground_report(D, 1.0), b = ground_report(D, 3.0);
        CHECK(b.shannon_pos.value == doctest::Approx(a.shannon_pos.value - D*std::log(3.0)).epsilon(1e-14));
        CHECK(b.shannon_mom.value == doctest::Approx(a.shannon_mom.value + D*std::log(3.0)).epsilon(1e-14));
        CHECK(b.disequilibrium_pos.value == doctest::Approx(std::pow(3.0, D)*a.disequilibrium_pos.value).epsilon(1e-13));
        CHECK(b.complexity_pos.value == doctest::Approx(a.complexity_pos.value).epsilon(1e-14));
        CHECK(b.complexity_mom.value == doctest::Approx(a.complexity_mom.value).epsilon(1e-14));
        auto const c = circular_report(D, 3, 1.0), d = circular_report(D, 3, 7.0);
        CHECK(d.complexity_pos.value == doctest::Approx(c.complexity_pos.value).epsilon(1e-13));
        CHECK(d.complexity_mom.value == doctest::Approx(c.complexity_mom.value).epsilon(1e-13));
    }
    CHECK_THROWS_AS(ground_report(3, 0.0), DomainError);
}

TEST_CASE("circular states") {
    for (int D = 2; D <= 10; ++D) {
        auto const c = circular_report(D, 1), g = ground_report(D);
        CHECK(std::abs(c.complexity_pos.value/g.complexity_pos.value - 1) <= 1e-12);
        CHECK(std::abs(c.complexity_mom.value/g.complexity_mom.value - 1) <= 1e-12);
        CHECK(std::abs(c.shannon_pos.value - g.shannon_pos.value) <= 1e-12);
        CHECK(std::abs(c.shannon_mom.value - g.shannon_mom.value) <= 1e-12);
    }
    auto const c32 = circular_report(3, 2);
    CHECK(c32.complexity_pos.value == doctest::Approx(1.8115096077840).epsilon(1e-11));
    auto const pipe = measures::analytic_report(QuantumState::circular(3, 2), 1.0);
    CHECK(std::abs(c32.complexity_mom.value/pipe.complexity_mom.value - 1) <= 1e-6);
    CHECK(std::abs(c32.complexity_pos.value/pipe.complexity_pos.value - 1) <= 1e-6);
    CHECK(c32.state.mu() == std::vector<int>{1, 1});
}

TEST_CASE("large quantum numbers stay finite") {
    for (int D : {2, 10, 50})
        for (int n : {1, 20, 50}) {
            auto const r = circular_report(D, n);
            INFO("D=" << D << " n=" << n);
            CHECK(std::isfinite(r.complexity_pos.value));
            CHECK(std::isfinite(r.complexity_mom.value));
            CHECK(std::isfinite(r.shannon_pos.value));
            CHECK(std::isfinite(std::log(r.disequilibrium_pos.value)));
        }
    CHECK(std::isfinite(ground_report(50).complexity_mom.value));
}

TEST_CASE("dispatch") {
    CHECK(has_closed_form(QuantumState::ground(5)));
    CHECK(has_closed_form(QuantumState(3, 3, {2, -2})));
    CHECK_FALSE(has_closed_form(QuantumState(3, 3, {2, 1})));
    CHECK_THROWS_AS(closed_report(QuantumState(3, 3, {2, 1}), 1.0), DomainError);
    auto const neg = closed_report(QuantumState(3, 3, {2, -2}), 1.0);
    CHECK(neg.state.m() == -2);
    CHECK(neg.complexity_pos.value == doctest::Approx(circular_report(3, 3).complexity_pos.value).epsilon(1e-15));
}
