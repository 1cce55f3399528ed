#include "hydrocomplex/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "hydrocomplex/quadrature.hpp"
#include "hydrocomplex/specfun.hpp"

namespace hydrocomplex::measures {

namespace {

    using quadrature::Interval;
    using quadrature::IntegrationOptions;
    using specfun::digamma;
    using specfun::lngamma;
    using specfun::PolyFamily;

    constexpr double pi = std::numbers::pi;
    constexpr double ln2 = std::numbers::ln2;
    constexpr double inf = std::numeric_limits<double>::infinity();

    // (k, l) from (D, η, L): k = η - L - 1, l = L - (D-3)/2
    struct RadialIndices {
        int k;
        int l;
    };

    int as_index(double v, char const* what) {
        double const r = std::round(v);
        if (std::abs(v - r) > 1e-9 || r < 0.0)
            throw DomainError(std::string(what) + " must be a nonnegative integer, got " + std::to_string(v));
        return static_cast<int>(r);
    }

    RadialIndices radial_indices(int D, double eta, double L) {
        if (D < 2) throw DomainError("dimension must satisfy D >= 2");
        return {as_index(eta - L - 1.0, "eta - L - 1"), as_index(L - 0.5*(D - 3), "L - (D-3)/2")};
    }

    IntegrationOptions integration(double rel_tol, double scale = 1.0) {
        IntegrationOptions o;
        o.rel_tol = rel_tol;
        o.scale = scale;
        return o;
    }

    MeasureResult pipeline(double value, double err) { return {value, err, Method::AnalyticPipeline}; }

    double rel_err(MeasureResult const& m) { return m.value != 0.0 ? m.err_est/std::abs(m.value) : 0.0; }

    // θ-space breakpoints for roots of a Gegenbauer factor, ascending in θ
    std::vector<double> theta_breakpoints(specfun::PolySpec const& spec) {
        std::vector<double> out;
        if (spec.degree < 1) return out;
        for (double x : specfun::poly_roots(spec)) out.push_back(std::acos(x));
        std::sort(out.begin(), out.end());
        return out;
    }

    // -p² ln p² from a scaled polynomial value, times exp(log_weight)
    double entropy_kernel(specfun::ScaledValue const& p, double log_weight) {
        if (p.mantissa == 0.0) return 0.0;
        double const log_p2 = 2.0*p.log_abs();
        return -std::exp(log_weight + log_p2)*log_p2;
    }

} // namespace

// ---------------------------------------------------------------------------

MeasureResult K1(int D, double eta, double L, PipelineOptions const& options) {
    auto const [k, l] = radial_indices(D, eta, L);
    (void)l;
    double const alpha = 2.0*L + 1.0;
    // x^{3-D} x^{4L+2} e^{-2x} or, as printed, x^{-D-5} x^{4L+2} e^{-2x}
    double const power = options.k1_exponent == K1Exponent::Corrected ? 4.0*L + 5.0 - D : 4.0*L - 3.0 - D;
    if (power <= -1.0) return pipeline(inf, 0.0); // non-integrable at the origin

    // s = 2x: 2^{-(power+1)} ∫ s^power e^{-s} L̃⁴(s/2) ds, exact with 2k+1 nodes
    auto const rule = quadrature::cached_gauss_rule(quadrature::WeightFunction::gen_laguerre(power), 2*k + 1);
    specfun::PolySpec const poly{PolyFamily::LaguerreOrthonormal, k, alpha};
    double const sum = rule->apply([&](double s) {
        double const p = specfun::poly_eval(poly, 0.5*s);
        double const p2 = p*p;
        return p2*p2;
    });
    return pipeline(std::exp(-(power + 1.0)*ln2)*sum, 0.0);
}

MeasureResult K2(std::span<int const> mu, int D) {
    QuantumState const state(D, std::max(1, std::abs(mu.empty() ? 0 : mu.front()) + 1),
                             std::vector<int>(mu.begin(), mu.end()));
    double value = 1.0/(2.0*pi);
    for (auto const& f : hydrogenic::angular_factors(state)) {
        // ∫ (1-x²)^{λ-1/2} C̃⁴ (1-x²)^s dx: a polynomial of degree 4k+2s against the weight
        int const n_points = 2*f.degree + f.sin_power + 1;
        auto const rule = quadrature::cached_gauss_rule(quadrature::WeightFunction::gegenbauer(f.lambda), n_points);
        auto const poly = f.poly();
        value *= rule->apply([&](double x) {
            double const c = specfun::poly_eval(poly, x);
            return c*c*c*c*std::pow(1.0 - x*x, f.sin_power);
        });
    }
    return pipeline(value, 0.0);
}

MeasureResult K3(int D, double eta, double L, PipelineOptions const& options) {
    auto const [k, l] = radial_indices(D, eta, L);
    specfun::PolySpec const poly{PolyFamily::GegenbauerOrthonormal, k, L + 1.0};
    // u = tan(θ/2): ½ ∫_0^π sin^{4l+D-1}(θ/2) cos^{4l+3D+3}(θ/2) C̃⁴(cos θ) dθ
    double const sin_power = 4.0*l + D - 1.0;
    double const cos_power = 4.0*l + 3.0*D + 3.0;
    auto integrand = [&](double theta) {
        double const c = specfun::poly_eval(poly, std::cos(theta));
        double const c2 = c*c;
        double const h = 0.5*theta;
        return std::exp(sin_power*std::log(std::sin(h)) + cos_power*std::log(std::cos(h)))*c2*c2;
    };
    auto const r = quadrature::integrate_or_throw(integrand, {0.0, pi}, theta_breakpoints(poly),
                                                  integration(options.rel_tol), "K3");
    return pipeline(0.5*r.value, 0.5*r.err_est);
}

MeasureResult E1_laguerre(int k, double alpha, PipelineOptions const& options) {
    specfun::validate({PolyFamily::LaguerreOrthonormal, k, alpha});
    if (k == 0) return pipeline((alpha + 1.0)*lngamma(alpha + 1.0), 0.0);
    return E1_laguerre_quadrature(k, alpha, options);
}

MeasureResult E1_laguerre_quadrature(int k, double alpha, PipelineOptions const& options) {
    specfun::PolySpec const poly{PolyFamily::LaguerreOrthonormal, k, alpha};
    specfun::validate(poly);
    std::vector<double> breaks;
    if (k > 0) breaks = specfun::poly_roots(poly);
    auto integrand = [&](double x) {
        if (x <= 0.0) return 0.0;
        return entropy_kernel(specfun::poly_eval_scaled(poly, x), (alpha + 1.0)*std::log(x) - x);
    };
    auto const r = quadrature::integrate_or_throw(integrand, {0.0, inf}, breaks,
                                                  integration(options.rel_tol, 2.0*k + alpha + 1.0), "E1");
    return pipeline(r.value, r.err_est);
}

MeasureResult E2_gegenbauer(int k, double lambda, PipelineOptions const& options) {
    specfun::validate({PolyFamily::GegenbauerOrthonormal, k, lambda});
    if (k == 0) return pipeline(std::log(specfun::zeroth_moment(PolyFamily::GegenbauerOrthonormal, lambda)), 0.0);
    return E2_gegenbauer_quadrature(k, lambda, options);
}

MeasureResult E2_gegenbauer_quadrature(int k, double lambda, PipelineOptions const& options) {
    specfun::PolySpec const poly{PolyFamily::GegenbauerOrthonormal, k, lambda};
    specfun::validate(poly);
    // x = cos θ turns (1-x²)^{λ-1/2} dx into sin^{2λ} θ dθ
    auto integrand = [&](double theta) {
        double const s = std::sin(theta);
        if (s <= 0.0) return 0.0;
        return entropy_kernel(specfun::poly_eval_scaled(poly, std::cos(theta)), 2.0*lambda*std::log(s));
    };
    auto const r = quadrature::integrate_or_throw(integrand, {0.0, pi}, theta_breakpoints(poly),
                                                  integration(options.rel_tol), "E2");
    return pipeline(r.value, r.err_est);
}

double A_const(int n, int l, int D) {
    QuantumState const probe(D, n, std::vector<int>(D - 1, 0)); // validates D, n
    if (l < 0 || l > n - 1) throw DomainError("A_const: need 0 <= l <= n-1");
    (void)probe;
    double const eta = n + 0.5*(D - 3);
    double const L = l + 0.5*(D - 3);
    return -2.0*l*((2.0*eta - 2.0*L - 1.0)/(2.0*eta) + digamma(eta + L + 1.0)) + (3.0*eta*eta - L*(L + 1.0))/eta +
           (D + 1.0)*std::log(eta) - (D - 1.0)*ln2;
}

double B_const(std::span<int const> mu, int D) {
    if (static_cast<int>(mu.size()) != D - 1) throw DomainError("B_const: tower must hold D-1 entries");
    double sum = 0.0;
    for (int j = 1; j <= D - 2; ++j) {
        double const alpha = 0.5*(D - j - 1);
        double const upper = mu[j - 1];
        double const lower = std::abs(mu[j]);
        if (lower == 0.0) continue;
        sum += lower*(digamma(2.0*alpha + upper + lower) - digamma(alpha + upper) - ln2 - 0.5/(alpha + upper));
    }
    return std::log(2.0*pi) - 2.0*sum;
}

double F_const(int n, int l, int D) {
    if (D < 2 || n < 1 || l < 0 || l > n - 1) throw DomainError("F_const: need D >= 2 and 0 <= l <= n-1");
    double const eta = n + 0.5*(D - 3);
    double const L = l + 0.5*(D - 3);
    // 2η(2L+1)/(4η²-1); for n - l - 1 = 0 we have 2L+1 = 2η-1 and the ratio is 2η/(2η+1),
    // which stays finite at η = 1/2 (D = 2 ground state)
    double const ratio = (n - l - 1 == 0) ? 2.0*eta/(2.0*eta + 1.0) : 2.0*eta*(2.0*L + 1.0)/(4.0*eta*eta - 1.0);
    return -D*std::log(eta) + (2.0*L + 4.0)*ln2 - (2.0*L + 4.0)*(digamma(eta + L + 1.0) - digamma(eta)) +
           (L + 2.0)/eta - (D + 1.0)*(1.0 - ratio);
}

// ---------------------------------------------------------------------------

MeasureResult shannon_angular(QuantumState const& state, PipelineOptions const& options) {
    double value = B_const(state.mu(), state.dim());
    double err2 = 0.0;
    for (auto const& f : hydrogenic::angular_factors(state)) {
        auto const e = E2_gegenbauer(f.degree, f.lambda, options);
        value += e.value;
        err2 += e.err_est*e.err_est;
    }
    return pipeline(value, std::sqrt(err2));
}

namespace {

    struct PipelineParts {
        MeasureResult k1, k2, k3, e1, e2_radial, s_angular;
    };

    PipelineParts pipeline_parts(QuantumState const& state, PipelineOptions const& options, bool position,
                                 bool momentum) {
        int const D = state.dim();
        double const eta = state.eta(), L = state.grand_l();
        int const k = state.radial_degree();
        PipelineParts parts{};
        parts.k2 = K2(state.mu(), D);
        parts.s_angular = shannon_angular(state, options);
        if (position) {
            parts.k1 = K1(D, eta, L, options);
            parts.e1 = E1_laguerre(k, 2.0*L + 1.0, options);
        }
        if (momentum) {
            parts.k3 = K3(D, eta, L, options);
            parts.e2_radial = E2_gegenbauer(k, L + 1.0, options);
        }
        return parts;
    }

    // ln[2^{D-2}/η^{D+2}]
    double log_position_prefactor(QuantumState const& s) {
        return (s.dim() - 2.0)*ln2 - (s.dim() + 2.0)*std::log(s.eta());
    }

    // ln[2^{4L+8} η^D]
    double log_momentum_prefactor(QuantumState const& s) {
        return (4.0*s.grand_l() + 8.0)*ln2 + s.dim()*std::log(s.eta());
    }

    MeasureResult diseq_position(QuantumState const& s, double Z, PipelineParts const& p) {
        double const v = std::exp(log_position_prefactor(s) + s.dim()*std::log(Z))*p.k1.value*p.k2.value;
        return pipeline(v, std::abs(v)*std::hypot(rel_err(p.k1), rel_err(p.k2)));
    }

    MeasureResult diseq_momentum(QuantumState const& s, double Z, PipelineParts const& p) {
        double const v = std::exp(log_momentum_prefactor(s) - s.dim()*std::log(Z))*p.k3.value*p.k2.value;
        return pipeline(v, std::abs(v)*std::hypot(rel_err(p.k3), rel_err(p.k2)));
    }

    MeasureResult entropy_position(QuantumState const& s, double Z, PipelineParts const& p) {
        double const two_eta = 2.0*s.eta();
        double const v = A_const(s.n(), s.l(), s.dim()) + p.e1.value/two_eta - s.dim()*std::log(Z) + p.s_angular.value;
        return pipeline(v, std::hypot(p.e1.err_est/two_eta, p.s_angular.err_est));
    }

    MeasureResult entropy_momentum(QuantumState const& s, double Z, PipelineParts const& p) {
        double const v = F_const(s.n(), s.l(), s.dim()) + p.e2_radial.value + s.dim()*std::log(Z) + p.s_angular.value;
        return pipeline(v, std::hypot(p.e2_radial.err_est, p.s_angular.err_est));
    }

    void require_charge(double Z) {
        if (!(Z > 0.0) || !std::isfinite(Z)) throw DomainError("nuclear charge Z must be positive and finite");
    }

} // namespace

MeasureResult shannon_position(QuantumState const& state, double Z, PipelineOptions const& options) {
    require_charge(Z);
    return entropy_position(state, Z, pipeline_parts(state, options, true, false));
}

MeasureResult shannon_momentum(QuantumState const& state, double Z, PipelineOptions const& options) {
    require_charge(Z);
    return entropy_momentum(state, Z, pipeline_parts(state, options, false, true));
}

MeasureResult disequilibrium_position(QuantumState const& state, double Z, PipelineOptions const& options) {
    require_charge(Z);
    return diseq_position(state, Z, pipeline_parts(state, options, true, false));
}

MeasureResult disequilibrium_momentum(QuantumState const& state, double Z, PipelineOptions const& options) {
    require_charge(Z);
    return diseq_momentum(state, Z, pipeline_parts(state, options, false, true));
}

MeasureResult complexity_position(QuantumState const& state, PipelineOptions const& options) {
    auto const p = pipeline_parts(state, options, true, false);
    double const two_eta = 2.0*state.eta();
    double const exponent = A_const(state.n(), state.l(), state.dim()) + p.e1.value/two_eta + p.s_angular.value;
    double const v = std::exp(log_position_prefactor(state) + exponent)*p.k1.value*p.k2.value;
    double const rel = std::sqrt(rel_err(p.k1)*rel_err(p.k1) + rel_err(p.k2)*rel_err(p.k2) +
                                 std::pow(p.e1.err_est/two_eta, 2) + std::pow(p.s_angular.err_est, 2));
    return pipeline(v, std::abs(v)*rel);
}

MeasureResult complexity_momentum(QuantumState const& state, PipelineOptions const& options) {
    auto const p = pipeline_parts(state, options, false, true);
    double const exponent = F_const(state.n(), state.l(), state.dim()) + p.e2_radial.value + p.s_angular.value;
    double const v = std::exp(log_momentum_prefactor(state) + exponent)*p.k3.value*p.k2.value;
    double const rel = std::sqrt(rel_err(p.k3)*rel_err(p.k3) + rel_err(p.k2)*rel_err(p.k2) +
                                 std::pow(p.e2_radial.err_est, 2) + std::pow(p.s_angular.err_est, 2));
    return pipeline(v, std::abs(v)*rel);
}

ComplexityReport analytic_report(QuantumState const& state, double Z, PipelineOptions const& options) {
    require_charge(Z);
    auto const parts = pipeline_parts(state, options, true, true);
    ComplexityReport report{state, Z, Method::AnalyticPipeline, {}, {}, {}, {}, {}, {}, {}, {}, {}};
    report.disequilibrium_pos = diseq_position(state, Z, parts);
    report.shannon_pos = entropy_position(state, Z, parts);
    report.disequilibrium_mom = diseq_momentum(state, Z, parts);
    report.shannon_mom = entropy_momentum(state, Z, parts);
    assemble_complexities(report);
    return report;
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

    // f(x) = g(x)² x^{D-1} with g the radial wavefunction; all three integrals
    // are taken in log form so that huge x with vanishing g gives 0, not NaN
    DensityMoments radial_moments(std::function<double(double)> const& wavefunction, int D, double scale,
                                  std::vector<double> const& breaks, double rel_tol, char const* label) {
        auto log_density = [&](double x, double& log_g2) {
            double const g = wavefunction(x);
            if (g == 0.0 || x <= 0.0) return false;
            log_g2 = 2.0*std::log(std::abs(g));
            return true;
        };
        auto const opts = integration(rel_tol, scale);
        Interval const half_line{0.0, inf};
        double const m = D - 1.0;

        auto norm = quadrature::integrate_or_throw(
            [&](double x) {
                double lg;
                return log_density(x, lg) ? std::exp(m*std::log(x) + lg) : 0.0;
            },
            half_line, breaks, opts, std::string(label) + " normalization");
        auto quartic = quadrature::integrate_or_throw(
            [&](double x) {
                double lg;
                return log_density(x, lg) ? std::exp(m*std::log(x) + 2.0*lg) : 0.0;
            },
            half_line, breaks, opts, std::string(label) + " fourth moment");
        auto entropy = quadrature::integrate_or_throw(
            [&](double x) {
                double lg;
                return log_density(x, lg) ? -std::exp(m*std::log(x) + lg)*lg : 0.0;
            },
            half_line, breaks, opts, std::string(label) + " entropy");
        return {norm.value, quartic.value, entropy.value, quartic.err_est, entropy.err_est};
    }

} // namespace

DensityMoments oracle_radial_position(QuantumState const& state, double Z, OracleOptions const& options) {
    require_charge(Z);
    double const lambda = state.eta()/(2.0*Z);
    std::vector<double> breaks;
    if (state.radial_degree() > 0) {
        for (double x : specfun::poly_roots(
                 {PolyFamily::LaguerreOrthonormal, state.radial_degree(), 2.0*state.grand_l() + 1.0}))
            breaks.push_back(lambda*x);
    }
    return radial_moments([&](double r) { return hydrogenic::radial_position(state, Z, r); }, state.dim(),
                          2.0*state.eta()*lambda, breaks, options.rel_tol, "radial position");
}

DensityMoments oracle_radial_momentum(QuantumState const& state, double Z, OracleOptions const& options) {
    require_charge(Z);
    double const p_unit = Z/state.eta();
    std::vector<double> breaks;
    if (state.radial_degree() > 0) {
        for (double y : specfun::poly_roots(
                 {PolyFamily::GegenbauerOrthonormal, state.radial_degree(), state.grand_l() + 1.0}))
            breaks.push_back(p_unit*std::sqrt((1.0 - y)/(1.0 + y)));
        std::sort(breaks.begin(), breaks.end());
    }
    return radial_moments([&](double p) { return hydrogenic::radial_momentum(state, Z, p); }, state.dim(), p_unit,
                          breaks, options.rel_tol, "radial momentum");
}

DensityMoments oracle_angular(QuantumState const& state, OracleOptions const& options) {
    // azimuthal factor: uniform density 1/2π on [0, 2π)
    DensityMoments out{1.0, 1.0/(2.0*pi), std::log(2.0*pi), 0.0, 0.0};
    double quartic_rel2 = 0.0, entropy_err2 = 0.0;
    auto const opts = integration(options.rel_tol);
    for (auto const& f : hydrogenic::angular_factors(state)) {
        auto const breaks = theta_breakpoints(f.poly());
        auto measure = [&](double theta) { return std::pow(std::sin(theta), f.measure_power); };
        std::string const label = "hyperangle theta_" + std::to_string(f.j);
        auto norm = quadrature::integrate_or_throw([&](double t) { return measure(t)*f.density(t); }, {0.0, pi},
                                                   breaks, opts, label + " normalization");
        auto quartic = quadrature::integrate_or_throw(
            [&](double t) {
                double const g = f.density(t);
                return measure(t)*g*g;
            },
            {0.0, pi}, breaks, opts, label + " fourth moment");
        auto entropy = quadrature::integrate_or_throw(
            [&](double t) {
                double const g = f.density(t);
                return g > 0.0 ? -measure(t)*g*std::log(g) : 0.0;
            },
            {0.0, pi}, breaks, opts, label + " entropy");
        out.norm *= norm.value;
        out.quartic *= quartic.value;
        out.entropy += entropy.value;
        quartic_rel2 += std::pow(quartic.err_est/quartic.value, 2);
        entropy_err2 += entropy.err_est*entropy.err_est;
    }
    out.quartic_err = out.quartic*std::sqrt(quartic_rel2);
    out.entropy_err = std::sqrt(entropy_err2);
    return out;
}

ComplexityReport oracle_measures(QuantumState const& state, double Z, OracleOptions const& options) {
    require_charge(Z);
    auto const angular = oracle_angular(state, options);
    auto const pos = oracle_radial_position(state, Z, options);
    auto const mom = oracle_radial_momentum(state, Z, options);

    ComplexityReport report{state, Z, Method::Oracle, {}, {}, {}, {}, {}, {}, {}, {}, {}};
    auto const rel_ang = angular.quartic_err/angular.quartic;
    auto make = [](double v, double e) { return MeasureResult{v, e, Method::Oracle}; };

    double const dpos = pos.quartic*angular.quartic;
    report.disequilibrium_pos = make(dpos, dpos*std::hypot(pos.quartic_err/pos.quartic, rel_ang));
    report.shannon_pos = make(pos.entropy + angular.entropy, std::hypot(pos.entropy_err, angular.entropy_err));
    double const dmom = mom.quartic*angular.quartic;
    report.disequilibrium_mom = make(dmom, dmom*std::hypot(mom.quartic_err/mom.quartic, rel_ang));
    report.shannon_mom = make(mom.entropy + angular.entropy, std::hypot(mom.entropy_err, angular.entropy_err));
    report.normalization_pos = pos.norm*angular.norm;
    report.normalization_mom = mom.norm*angular.norm;
    assemble_complexities(report);
    return report;
}

} // namespace hydrocomplex::measures
