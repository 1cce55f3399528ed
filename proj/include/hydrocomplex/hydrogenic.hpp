#pragma once

#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hydrocomplex/specfun.hpp"

namespace hydrocomplex {

/// A quantum-number tower that violates one of the state inequalities.
class InvalidState : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters that follow from (D, n, l): η = n + (D-3)/2, L = l + (D-3)/2
/// and the hyperangular α_j = (D-j-1)/2, j = 1..D-2.
struct DerivedParams {
    double eta;
    double grand_l;
    std::vector<double> alpha;

    /// λ = η/(2Z), the radial length unit
    double length_scale(double Z) const { return eta/(2.0*Z); }
};

/// Stationary state of the D-dimensional hydrogenic system. `mu` holds
/// (μ_1, ..., μ_{D-1}) with l = μ_1 and m = μ_{D-1}; m may be negative.
class QuantumState {
  public:
    /// Validates D >= 2, n >= 1, 0 <= l <= n-1 and μ_1 >= μ_2 >= ... >= |μ_{D-1}|.
    QuantumState(int dim, int n, std::vector<int> mu);

    static QuantumState ground(int dim);
    /// all hyperangular numbers maximal, μ_i = n - 1
    static QuantumState circular(int dim, int n);

    int dim() const { return dim_; }
    int n() const { return n_; }
    std::vector<int> const& mu() const { return mu_; }
    int l() const { return std::abs(mu_.front()); }
    int m() const { return mu_.back(); }
    /// degree n - l - 1 of the radial Laguerre and momentum Gegenbauer factors
    int radial_degree() const { return n_ - l() - 1; }

    DerivedParams derived() const;
    double eta() const { return n_ + 0.5*(dim_ - 3); }
    double grand_l() const { return l() + 0.5*(dim_ - 3); }

    bool is_ground() const;
    bool is_circular() const;

    /// "1,0,-1" style tower
    std::string mu_string() const;

    friend bool operator==(QuantumState const&, QuantumState const&) = default;

  private:
    int dim_;
    int n_;
    std::vector<int> mu_;
};

/// Parses "1,1,-1" into a tower; throws InvalidState on malformed text.
std::vector<int> parse_mu_tower(std::string const& text);

/// Every valid tower for (D, n), including signed m, in lexicographic order
/// with larger numbers first.
std::vector<QuantumState> enumerate_states(int dim, int n);

namespace hydrogenic {

    /// E = -Z²/(2η²) in atomic units.
    double energy(QuantumState const& state, double Z);

    /// R_{n,l}(r), normalized as ∫ R² r^{D-1} dr = 1.
    double radial_position(QuantumState const& state, double Z, double r);

    /// M_{n,l}(p), normalized as ∫ M² p^{D-1} dp = 1 (direct form).
    double radial_momentum(QuantumState const& state, double Z, double p);

    /// M_{n,l}(p) from the y-substituted form, y = (1 - η²p̃²)/(1 + η²p̃²).
    double radial_momentum_y_form(QuantumState const& state, double Z, double p);

    /// One θ_j factor of |Y|²: C̃²_{k}^{λ}(cos θ) sin^{2s}(θ) with k = μ_j - μ_{j+1},
    /// λ = α_j + μ_{j+1}, s = |μ_{j+1}|, normalized against sin^{D-1-j}(θ) dθ.
    struct AngularFactor {
        int j;
        int degree;
        double lambda;
        int sin_power;     // s
        int measure_power; // D - 1 - j

        specfun::PolySpec poly() const {
            return {specfun::PolyFamily::GegenbauerOrthonormal, degree, lambda};
        }
        double density(double theta) const;
    };

    std::vector<AngularFactor> angular_factors(QuantumState const& state);

    /// |Y_{l,{μ}}(Ω)|² for polar angles θ_1..θ_{D-2} and azimuth φ.
    double hypersph_sq(QuantumState const& state, std::span<double const> polar, double azimuth);

    /// ρ(r⃗) = R²(r) |Y(Ω)|²
    double density_position(QuantumState const& state, double Z, double r, std::span<double const> polar,
                            double azimuth);

    /// γ(p⃗) = M²(p) |Y(Ω)|²
    double density_momentum(QuantumState const& state, double Z, double p, std::span<double const> polar,
                            double azimuth);

} // namespace hydrogenic

} // namespace hydrocomplex
