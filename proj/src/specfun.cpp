#include "hydrocomplex/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

namespace hydrocomplex::specfun {

namespace {

    // running recurrence values are pulled back into range once they pass this
    constexpr double rescale_threshold = 1e150;
    constexpr double rescale_factor = 1e-150;
    double const log_rescale_factor = std::log(rescale_factor);

    std::string family_name(PolyFamily family) {
        return family == PolyFamily::LaguerreOrthonormal ? "Laguerre" : "Gegenbauer";
    }

    double coeff_a(PolyFamily family, double param, int k) {
        if (family == PolyFamily::LaguerreOrthonormal) return 2.0*k + param + 1.0;
        return 0.0;
    }

    // b_k for k >= 1
    double coeff_b(PolyFamily family, double param, int k) {
        if (family == PolyFamily::LaguerreOrthonormal) return k*(k + param);
        double const lambda = param;
        return k*(k + 2.0*lambda - 1.0)/(4.0*(k + lambda)*(k + lambda - 1.0));
    }

    // Runs the orthonormal recurrence up to `degree`, optionally with the
    // derivative. Both sequences share the scale so their ratio is exact.
    struct RecurrenceState {
        double p = 0.0, dp = 0.0;
        double log_scale = 0.0;
    };

    RecurrenceState run_recurrence(PolySpec const& spec, double x, bool with_derivative) {
        double p_prev = 0.0, dp_prev = 0.0;
        double p = 1.0/std::sqrt(zeroth_moment(spec.family, spec.param));
        double dp = 0.0;
        double log_scale = 0.0;
        double sqrt_b = 0.0; // sqrt(b_k) of the current step, b_0 term multiplies p_{-1} = 0
        for (int k = 0; k < spec.degree; ++k) {
            double const a = coeff_a(spec.family, spec.param, k);
            double const sqrt_b_next = std::sqrt(coeff_b(spec.family, spec.param, k + 1));
            double const p_next = ((x - a)*p - sqrt_b*p_prev)/sqrt_b_next;
            if (with_derivative) {
                double const dp_next = ((x - a)*dp + p - sqrt_b*dp_prev)/sqrt_b_next;
                dp_prev = dp;
                dp = dp_next;
            }
            p_prev = p;
            p = p_next;
            sqrt_b = sqrt_b_next;
            if (std::abs(p) > rescale_threshold || std::abs(dp) > rescale_threshold) {
                p *= rescale_factor;
                p_prev *= rescale_factor;
                dp *= rescale_factor;
                dp_prev *= rescale_factor;
                log_scale -= log_rescale_factor;
            }
        }
        return {p, dp, log_scale};
    }

} // namespace

double lngamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("lngamma: argument must be positive and finite, got " + std::to_string(x));
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign); // reentrant, no write to the global signgam
#else
    return std::lgamma(x);
#endif
}

double digamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("digamma: argument must be positive and finite, got " + std::to_string(x));
    double shift = 0.0;
    while (x < 8.0) {
        shift -= 1.0/x;
        x += 1.0;
    }
    // ψ(x) ~ ln x - 1/(2x) - Σ B_{2k}/(2k x^{2k}), k = 1..7
    static constexpr double c[] = {1.0/12.0,  -1.0/120.0,    1.0/252.0, -1.0/240.0,
                                   1.0/132.0, -691.0/32760.0, 1.0/12.0};
    double const inv2 = 1.0/(x*x);
    double series = 0.0;
    for (int k = 6; k >= 0; --k) series = (series + c[k])*inv2;
    return shift + std::log(x) - 0.5/x - series;
}

void validate_param(PolyFamily family, double param) {
    if (!std::isfinite(param))
        throw DomainError(family_name(family) + " parameter must be finite");
    if (family == PolyFamily::LaguerreOrthonormal && !(param > -1.0))
        throw DomainError("Laguerre parameter must satisfy alpha > -1, got " + std::to_string(param));
    if (family == PolyFamily::GegenbauerOrthonormal && !(param > 0.0))
        throw DomainError("Gegenbauer parameter must satisfy lambda > 0, got " + std::to_string(param));
}

void validate(PolySpec const& spec) {
    validate_param(spec.family, spec.param);
    if (spec.degree < 0) throw DomainError("polynomial degree must be nonnegative");
}

double zeroth_moment(PolyFamily family, double param) {
    validate_param(family, param);
    if (family == PolyFamily::LaguerreOrthonormal) return std::exp(lngamma(param + 1.0));
    double const lambda = param;
    return std::sqrt(std::numbers::pi)*std::exp(lngamma(lambda + 0.5) - lngamma(lambda + 1.0));
}

Support support(PolyFamily family) {
    if (family == PolyFamily::LaguerreOrthonormal) return {0.0, HUGE_VAL};
    return {-1.0, 1.0};
}

Recurrence poly_recurrence_coeffs(PolyFamily family, double param, int n_max) {
    validate_param(family, param);
    if (n_max < 1) throw DomainError("poly_recurrence_coeffs: n_max must be at least 1");
    Recurrence rec;
    rec.a.resize(n_max + 1);
    rec.b.resize(n_max + 1);
    for (int k = 0; k <= n_max; ++k) {
        rec.a[k] = coeff_a(family, param, k);
        rec.b[k] = k == 0 ? zeroth_moment(family, param) : coeff_b(family, param, k);
    }
    return rec;
}

double ScaledValue::value() const { return mantissa*std::exp(log_scale); }

double ScaledValue::log_abs() const {
    if (mantissa == 0.0) return -HUGE_VAL;
    return std::log(std::abs(mantissa)) + log_scale;
}

ScaledValue poly_eval_scaled(PolySpec const& spec, double x) {
    validate(spec);
    auto const s = run_recurrence(spec, x, false);
    return {s.p, s.log_scale};
}

double poly_eval(PolySpec const& spec, double x) { return poly_eval_scaled(spec, x).value(); }

ValueAndDerivative poly_eval_with_derivative(PolySpec const& spec, double x) {
    validate(spec);
    auto const s = run_recurrence(spec, x, true);
    double const scale = std::exp(s.log_scale);
    return {s.p*scale, s.dp*scale};
}

std::vector<double> poly_roots(PolySpec const& spec) {
    validate(spec);
    int const k = spec.degree;
    if (k == 0) return {};

    Eigen::VectorXd diag(k);
    Eigen::VectorXd sub(std::max(k - 1, 0));
    for (int i = 0; i < k; ++i) diag[i] = coeff_a(spec.family, spec.param, i);
    for (int i = 0; i + 1 < k; ++i) sub[i] = std::sqrt(coeff_b(spec.family, spec.param, i + 1));

    std::vector<double> roots(k);
    if (k == 1) {
        roots[0] = diag[0];
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) throw std::runtime_error("poly_roots: eigenvalue solver failed");
        for (int i = 0; i < k; ++i) roots[i] = solver.eigenvalues()[i];
    }

    auto const lo = support(spec.family).lower;
    auto const hi = support(spec.family).upper;
    for (auto& x : roots) {
        // ratio p/p' is scale-free, so take it straight from the recurrence state
        auto const s = run_recurrence(spec, x, true);
        if (s.dp != 0.0) {
            double const polished = x - s.p/s.dp;
            if (std::isfinite(polished) && polished > lo && polished < hi && std::abs(polished - x) < 1e-6*(1.0 + std::abs(x)))
                x = polished;
        }
    }
    std::sort(roots.begin(), roots.end());
    if (spec.family == PolyFamily::GegenbauerOrthonormal) {
        // exact symmetry about the origin
        for (int i = 0; i < k/2; ++i) {
            double const m = 0.5*(roots[k - 1 - i] - roots[i]);
            roots[i] = -m;
            roots[k - 1 - i] = m;
        }
        if (k % 2 == 1) roots[k/2] = 0.0;
    }
    return roots;
}

double christoffel_weight(PolyFamily family, double param, int n, double x) {
    validate_param(family, param);
    if (n < 1) throw DomainError("christoffel_weight: n must be at least 1");
    double p_prev = 0.0;
    double p = 1.0/std::sqrt(zeroth_moment(family, param));
    double sum = p*p;
    double log_scale = 0.0; // true p = p*exp(log_scale), true sum = sum*exp(2*log_scale)
    double sqrt_b = 0.0;
    for (int k = 0; k + 1 < n; ++k) {
        double const sqrt_b_next = std::sqrt(coeff_b(family, param, k + 1));
        double const p_next = ((x - coeff_a(family, param, k))*p - sqrt_b*p_prev)/sqrt_b_next;
        p_prev = p;
        p = p_next;
        sqrt_b = sqrt_b_next;
        sum += p*p;
        if (std::abs(p) > rescale_threshold) {
            p *= rescale_factor;
            p_prev *= rescale_factor;
            sum *= rescale_factor*rescale_factor;
            log_scale -= log_rescale_factor;
        }
    }
    return std::exp(-std::log(sum) - 2.0*log_scale);
}

} // namespace hydrocomplex::specfun
