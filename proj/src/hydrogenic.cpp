#include "hydrocomplex/hydrogenic.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

namespace hydrocomplex {

namespace {

    void require_positive_charge(double Z) {
        if (!(Z > 0.0) || !std::isfinite(Z)) throw DomainError("nuclear charge Z must be positive and finite");
    }

    std::string str(int v) { return std::to_string(v); }

} // namespace

QuantumState::QuantumState(int dim, int n, std::vector<int> mu) : dim_(dim), n_(n), mu_(std::move(mu)) {
    if (dim_ < 2) throw InvalidState("dimension must satisfy D >= 2, got D = " + str(dim_));
    if (n_ < 1) throw InvalidState("principal number must satisfy n >= 1, got n = " + str(n_));
    if (static_cast<int>(mu_.size()) != dim_ - 1)
        throw InvalidState("tower must hold D-1 = " + str(dim_ - 1) + " numbers (mu_1..mu_{D-1}), got " +
                           str(static_cast<int>(mu_.size())));
    int const l = std::abs(mu_.front());
    if (dim_ > 2 && mu_.front() < 0) throw InvalidState("requires l = mu_1 >= 0, got mu_1 = " + str(mu_.front()));
    if (l > n_ - 1)
        throw InvalidState("requires n - l - 1 >= 0, got n = " + str(n_) + ", l = " + str(l));
    for (int j = 1; j + 1 < dim_ - 1; ++j) {
        // mu_j >= mu_{j+1} for j = 1..D-3 (1-based)
        if (mu_[j - 1] < mu_[j])
            throw InvalidState("requires mu_" + str(j) + " >= mu_" + str(j + 1) + ", got " + str(mu_[j - 1]) + " < " +
                               str(mu_[j]));
    }
    if (dim_ > 2) {
        int const last = dim_ - 1;
        if (mu_[last - 2] < std::abs(mu_[last - 1]))
            throw InvalidState("requires mu_" + str(last - 1) + " >= |mu_" + str(last) + "|, got " +
                               str(mu_[last - 2]) + " < |" + str(mu_[last - 1]) + "|");
    }
}

QuantumState QuantumState::ground(int dim) {
    if (dim < 2) throw InvalidState("dimension must satisfy D >= 2, got D = " + str(dim));
    return QuantumState(dim, 1, std::vector<int>(dim - 1, 0));
}

QuantumState QuantumState::circular(int dim, int n) {
    if (dim < 2) throw InvalidState("dimension must satisfy D >= 2, got D = " + str(dim));
    if (n < 1) throw InvalidState("principal number must satisfy n >= 1, got n = " + str(n));
    return QuantumState(dim, n, std::vector<int>(dim - 1, n - 1));
}

DerivedParams QuantumState::derived() const {
    DerivedParams d{eta(), grand_l(), {}};
    for (int j = 1; j <= dim_ - 2; ++j) d.alpha.push_back(0.5*(dim_ - j - 1));
    return d;
}

bool QuantumState::is_ground() const {
    if (n_ != 1) return false;
    for (int v : mu_)
        if (v != 0) return false;
    return true;
}

bool QuantumState::is_circular() const {
    for (int v : mu_)
        if (std::abs(v) != n_ - 1) return false;
    // sign only allowed on the last entry
    for (std::size_t i = 0; i + 1 < mu_.size(); ++i)
        if (mu_[i] < 0) return false;
    return true;
}

std::string QuantumState::mu_string() const {
    std::string out;
    for (std::size_t i = 0; i < mu_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(mu_[i]);
    }
    return out;
}

std::vector<int> parse_mu_tower(std::string const& text) {
    std::vector<int> mu;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (std::exception const&) {
            throw InvalidState("malformed tower entry '" + item + "' in '" + text + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw InvalidState("malformed tower entry '" + item + "' in '" + text + "'");
        mu.push_back(v);
    }
    if (mu.empty()) throw InvalidState("empty tower");
    return mu;
}

namespace {

    void enumerate_tail(int dim, int n, std::vector<int>& prefix, std::vector<QuantumState>& out) {
        int const pos = static_cast<int>(prefix.size()); // 0-based index of the next entry
        if (pos == dim - 1) {
            out.emplace_back(dim, n, prefix);
            return;
        }
        int const upper = pos == 0 ? n - 1 : prefix.back();
        bool const last = pos == dim - 2;
        int const lower = last ? -upper : 0;
        for (int v = upper; v >= lower; --v) {
            prefix.push_back(v);
            enumerate_tail(dim, n, prefix, out);
            prefix.pop_back();
        }
    }

} // namespace

std::vector<QuantumState> enumerate_states(int dim, int n) {
    if (dim < 2) throw InvalidState("dimension must satisfy D >= 2, got D = " + str(dim));
    if (n < 1) throw InvalidState("principal number must satisfy n >= 1, got n = " + str(n));
    std::vector<QuantumState> out;
    std::vector<int> prefix;
    enumerate_tail(dim, n, prefix, out);
    return out;
}

namespace hydrogenic {

    double energy(QuantumState const& state, double Z) {
        require_positive_charge(Z);
        double const eta = state.eta();
        return -Z*Z/(2.0*eta*eta);
    }

    double radial_position(QuantumState const& state, double Z, double r) {
        require_positive_charge(Z);
        if (!(r >= 0.0)) throw DomainError("radial_position: r must be nonnegative");
        int const D = state.dim();
        int const l = state.l();
        double const eta = state.eta();
        double const lambda = eta/(2.0*Z);
        double const x = r/lambda;
        // R = (λ^{-D}/2η)^{1/2} x^l e^{-x/2} L̃_k^{2L+1}(x); the power law is pulled out of the
        // quotient so the origin needs no special care beyond l > 0
        if (x == 0.0 && l > 0) return 0.0;
        auto const poly = specfun::poly_eval_scaled(
            {specfun::PolyFamily::LaguerreOrthonormal, state.radial_degree(), 2.0*state.grand_l() + 1.0}, x);
        if (poly.mantissa == 0.0) return 0.0;
        double const log_prefactor = 0.5*(-D*std::log(lambda) - std::log(2.0*eta));
        double const log_power = l == 0 ? 0.0 : l*std::log(x);
        double const log_mag = log_prefactor + log_power - 0.5*x + std::log(std::abs(poly.mantissa)) + poly.log_scale;
        return std::copysign(std::exp(log_mag), poly.mantissa);
    }

    double radial_momentum(QuantumState const& state, double Z, double p) {
        require_positive_charge(Z);
        if (!(p >= 0.0)) throw DomainError("radial_momentum: p must be nonnegative");
        int const D = state.dim();
        int const l = state.l();
        double const eta = state.eta();
        double const L = state.grand_l();
        double const u = eta*p/Z;
        if (u == 0.0 && l > 0) return 0.0;
        double const y = u > 1e150 ? -1.0 : (1.0 - u)*(1.0 + u)/(1.0 + u*u);
        auto const poly =
            specfun::poly_eval_scaled({specfun::PolyFamily::GegenbauerOrthonormal, state.radial_degree(), L + 1.0}, y);
        if (poly.mantissa == 0.0) return 0.0;
        double const log_u2p1 = u > 1e150 ? 2.0*std::log(u) : std::log1p(u*u);
        double const log_mag = (L + 2.0)*std::numbers::ln2 + 0.5*D*std::log(eta/Z) + (l == 0 ? 0.0 : l*std::log(u)) -
                               (L + 2.0)*log_u2p1 + std::log(std::abs(poly.mantissa)) + poly.log_scale;
        return std::copysign(std::exp(log_mag), poly.mantissa);
    }

    double radial_momentum_y_form(QuantumState const& state, double Z, double p) {
        require_positive_charge(Z);
        if (!(p >= 0.0)) throw DomainError("radial_momentum_y_form: p must be nonnegative");
        int const D = state.dim();
        double const eta = state.eta();
        double const L = state.grand_l();
        double const u = eta*p/Z;
        double const y = (1.0 - u)*(1.0 + u)/(1.0 + u*u);
        // (1+y) and (1-y) from u to keep full relative precision near y = ±1
        double const one_plus_y = 2.0/(1.0 + u*u);
        double const one_minus_y = 2.0*u*u/(1.0 + u*u);
        double const c = specfun::poly_eval({specfun::PolyFamily::GegenbauerOrthonormal, state.radial_degree(), L + 1.0}, y);
        // (η/Z)^{D/2} (1+y)^{3/2} ((1+y)/(1-y))^{(D-2)/4} [(1-y²)^{L+1/2}]^{1/2} C̃(y)
        double const exp_plus = 1.5 + 0.25*(D - 2) + 0.5*(L + 0.5);
        double const exp_minus = -0.25*(D - 2) + 0.5*(L + 0.5);
        double minus_part;
        if (one_minus_y == 0.0)
            minus_part = state.l() == 0 ? 1.0 : 0.0; // net exponent of (1-y) is l/2
        else
            minus_part = std::exp(exp_minus*std::log(one_minus_y));
        return std::pow(eta/Z, 0.5*D)*std::exp(exp_plus*std::log(one_plus_y))*minus_part*c;
    }

    double AngularFactor::density(double theta) const {
        double const c = specfun::poly_eval(poly(), std::cos(theta));
        double const s = std::sin(theta);
        return c*c*(sin_power == 0 ? 1.0 : std::pow(s*s, sin_power));
    }

    std::vector<AngularFactor> angular_factors(QuantumState const& state) {
        int const D = state.dim();
        auto const& mu = state.mu();
        std::vector<AngularFactor> out;
        for (int j = 1; j <= D - 2; ++j) {
            int const upper = mu[j - 1];
            int const lower = std::abs(mu[j]);
            double const alpha = 0.5*(D - j - 1);
            out.push_back({j, upper - lower, alpha + lower, lower, D - 1 - j});
        }
        return out;
    }

    double hypersph_sq(QuantumState const& state, std::span<double const> polar, double azimuth) {
        (void)azimuth; // the e^{imφ} phase drops out of the modulus
        auto const factors = angular_factors(state);
        if (polar.size() != factors.size())
            throw DomainError("hypersph_sq: expected " + std::to_string(factors.size()) + " polar angles, got " +
                              std::to_string(polar.size()));
        double value = 1.0/(2.0*std::numbers::pi);
        for (std::size_t i = 0; i < factors.size(); ++i) value *= factors[i].density(polar[i]);
        return value;
    }

    double density_position(QuantumState const& state, double Z, double r, std::span<double const> polar,
                            double azimuth) {
        double const R = radial_position(state, Z, r);
        return R*R*hypersph_sq(state, polar, azimuth);
    }

    double density_momentum(QuantumState const& state, double Z, double p, std::span<double const> polar,
                            double azimuth) {
        double const M = radial_momentum(state, Z, p);
        return M*M*hypersph_sq(state, polar, azimuth);
    }

} // namespace hydrogenic

} // namespace hydrocomplex
