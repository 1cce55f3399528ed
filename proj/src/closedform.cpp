#include "hydrocomplex/closedform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hydrocomplex/specfun.hpp"

namespace hydrocomplex::closedform {

namespace {

    using specfun::digamma;
    using specfun::lngamma;

    constexpr double ln2 = std::numbers::ln2;
    double const ln_pi = std::log(std::numbers::pi);

    void require(int D, double Z) {
        if (D < 2) throw InvalidState("dimension must satisfy D >= 2, got D = " + std::to_string(D));
        if (!(Z > 0.0) || !std::isfinite(Z)) throw DomainError("nuclear charge Z must be positive and finite");
    }

    MeasureResult closed(double v) { return {v, 0.0, Method::ClosedForm}; }

    void finish(ComplexityReport& r) {
        r.product = closed(r.complexity_pos.value*r.complexity_mom.value);
    }

} // namespace

ComplexityReport ground_report(int D, double Z) {
    require(D, Z);
    double const d = D;
    double const lnZ = std::log(Z);
    double const ln_dm1 = std::log(d - 1.0);
    double const lg_half = lngamma(0.5*(d + 1.0)); // ln Γ((D+1)/2)
    double const psi_gap = digamma(d + 1.0) - digamma(0.5*d + 1.0);

    ComplexityReport r{QuantumState::ground(D), Z, Method::ClosedForm, {}, {}, {}, {}, {}, {}, {}, {}, {}};
    r.disequilibrium_pos = closed(std::exp(d*lnZ - d*ln_dm1 - 0.5*(d - 1.0)*ln_pi - lg_half));
    r.shannon_pos = closed(d*ln_dm1 - d*ln2 + 0.5*(d - 1.0)*ln_pi + lg_half + d - d*lnZ);
    r.complexity_pos = closed(std::pow(std::numbers::e/2.0, d));

    double const lg_mom = 2.0*lg_half + lngamma(2.0 + 1.5*d) - lngamma(2.0*d + 2.0);
    r.disequilibrium_mom = closed(std::exp(d*std::log(2.0*d - 2.0) - d*lnZ - 0.5*(d + 2.0)*ln_pi + lg_mom));
    r.shannon_mom = closed(0.5*(d + 1.0)*ln_pi - d*ln_dm1 - lg_half + (d + 1.0)*psi_gap + d*lnZ);
    r.complexity_mom = closed(std::exp(d*ln2 + lg_half + lngamma(2.0 + 1.5*d) - 0.5*ln_pi - lngamma(2.0*d + 2.0) +
                                       (d + 1.0)*psi_gap));
    finish(r);
    return r;
}

double circular_momentum_constant(int D, int n) {
    if (D < 2 || n < 1) throw DomainError("circular_momentum_constant: need D >= 2 and n >= 1");
    double const d = D, m = n;
    return (2.0*m + d - 1.0)/(2.0*m + d - 3.0) - (d + 1.0)/(2.0*m + d - 2.0) - (m - 1.0)*digamma(m) -
           0.5*(d + 1.0)*digamma(m + 0.5*(d - 2.0)) + (m + 0.5*(d - 1.0))*digamma(m + 0.5*(d - 3.0));
}

ComplexityReport circular_report(int D, int n, double Z) {
    require(D, Z);
    if (n < 1) throw InvalidState("principal number must satisfy n >= 1, got n = " + std::to_string(n));
    double const d = D, m = n;
    double const lnZ = std::log(Z);
    double const ln_scale = std::log(2.0*m + d - 3.0); // ln(2n+D-3) = ln(2η)
    double const lg_n = lngamma(m);
    double const lg_shift = lngamma(m + 0.5*(d - 1.0)); // ln Γ(n+(D-1)/2)
    double const lg_quarter = lngamma(m - 0.5) + lngamma(2.0*m + 0.5*(d - 3.0));
    double const lg_mom = lngamma(2.0*m - 1.0) + lngamma(2.0*m + 1.5*d) - lngamma(4.0*m + 2.0*d - 2.0);
    double const digamma_pos = 2.0*m + d - 2.0 - (m - 1.0)*(digamma(m) + digamma(m + 0.5*(d - 1.0)));
    double const a_nd = circular_momentum_constant(D, n);

    ComplexityReport r{QuantumState::circular(D, n), Z, Method::ClosedForm, {}, {}, {}, {}, {}, {}, {}, {}, {}};
    r.disequilibrium_pos = closed(std::exp(d*lnZ + lg_quarter - (2.0*m - 2.0)*ln2 - 0.5*d*ln_pi - d*ln_scale - lg_n -
                                           2.0*lg_shift));
    // π^{(D-1)/2} inside the logarithm; this is the value that reduces to the
    // ground-state entropy at n = 1 and agrees with ⟨ρ⟩ exp(S) = C[ρ]
    r.shannon_pos = closed(digamma_pos - d*ln2 + d*ln_scale + 0.5*(d - 1.0)*ln_pi + lg_n + lg_shift - d*lnZ);
    r.complexity_pos =
        closed(std::exp(lg_quarter - (2.0*m + d - 2.0)*ln2 - 0.5*ln_pi - lg_shift + digamma_pos));

    r.disequilibrium_mom = closed(std::exp((4.0*m + d - 4.0)*ln2 + d*ln_scale + 2.0*lg_shift + lg_mom - d*lnZ -
                                           0.5*(d + 2.0)*ln_pi - 2.0*lg_n));
    r.shannon_mom =
        closed(a_nd + (d + 1.0)*ln2 + d*lnZ + 0.5*(d + 1.0)*ln_pi + lg_n - d*ln_scale - lg_shift);
    r.complexity_mom =
        closed(std::exp((4.0*m + 2.0*d - 3.0)*ln2 + lg_shift + lg_mom - 0.5*ln_pi - lg_n + a_nd));
    finish(r);
    return r;
}

bool has_closed_form(QuantumState const& state) { return state.is_ground() || state.is_circular(); }

ComplexityReport closed_report(QuantumState const& state, double Z) {
    if (state.is_ground()) return ground_report(state.dim(), Z);
    if (state.is_circular()) {
        auto r = circular_report(state.dim(), state.n(), Z);
        r.state = state; // keeps a negative m as given
        return r;
    }
    throw DomainError("no closed form for state D=" + std::to_string(state.dim()) + " n=" + std::to_string(state.n()) +
                      " mu=" + state.mu_string() + " (only ground and circular states)");
}

} // namespace hydrocomplex::closedform
