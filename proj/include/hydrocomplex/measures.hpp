#pragma once

#include <span>

#include "hydrocomplex/hydrogenic.hpp"
#include "hydrocomplex/report.hpp"

namespace hydrocomplex::measures {

inline constexpr double default_rel_tol = 1e-10;

/// Power of x in the radial fourth-moment integral K1. `Corrected` is x^{3-D},
/// which follows from the radial wavefunction; `AsPrinted` is x^{-D-5} and
/// exists only as a negative control (it diverges at the origin for ground
/// states).
enum class K1Exponent { Corrected, AsPrinted };

struct PipelineOptions {
    double rel_tol = default_rel_tol;
    K1Exponent k1_exponent = K1Exponent::Corrected;
};

// ---------------------------------------------------------------------------
// Integrals of the analytic pipeline. D, η and L must describe a valid state:
// η - L - 1 and L - (D-3)/2 are nonnegative integers.

/// K1 = ∫_0^∞ x^{3-D} {x^{2L+1} e^{-x} [L̃_{η-L-1}^{2L+1}(x)]²}² dx, by an exact
/// Gauss–Laguerre rule. Returns +inf when the chosen exponent makes it diverge.
MeasureResult K1(int D, double eta, double L, PipelineOptions const& options = {});

/// K2 = ∫ |Y_{l,{μ}}|⁴ dΩ as (1/2π) times one exact Gauss–Gegenbauer integral per θ_j.
MeasureResult K2(std::span<int const> mu, int D);

/// K3 = ∫_0^∞ u^{4l+D-1} (1+u²)^{-4L-8} [C̃_{η-L-1}^{L+1}((1-u²)/(1+u²))]⁴ du, taken
/// through t = (1-u²)/(1+u²) = cos θ so the integrand is smooth on (0, π).
MeasureResult K3(int D, double eta, double L, PipelineOptions const& options = {});

/// E1[L̃_k^α] = -∫_0^∞ x ω_α(x) L̃² ln L̃² dx; degree 0 is taken analytically.
MeasureResult E1_laguerre(int k, double alpha, PipelineOptions const& options = {});
/// Same functional by root-subdivided adaptive quadrature for every degree.
MeasureResult E1_laguerre_quadrature(int k, double alpha, PipelineOptions const& options = {});

/// E2[C̃_k^λ] = -∫_{-1}^{1} ω*_λ(x) C̃² ln C̃² dx; degree 0 is taken analytically.
MeasureResult E2_gegenbauer(int k, double lambda, PipelineOptions const& options = {});
MeasureResult E2_gegenbauer_quadrature(int k, double lambda, PipelineOptions const& options = {});

// Closed-form constants of the entropy decomposition.
double A_const(int n, int l, int D);
double B_const(std::span<int const> mu, int D);
double F_const(int n, int l, int D);

/// S[Y] = B + Σ_j E2[C̃_{μ_j-μ_{j+1}}^{α_j+μ_{j+1}}]
MeasureResult shannon_angular(QuantumState const& state, PipelineOptions const& options = {});

MeasureResult shannon_position(QuantumState const& state, double Z, PipelineOptions const& options = {});
MeasureResult shannon_momentum(QuantumState const& state, double Z, PipelineOptions const& options = {});
MeasureResult disequilibrium_position(QuantumState const& state, double Z, PipelineOptions const& options = {});
MeasureResult disequilibrium_momentum(QuantumState const& state, double Z, PipelineOptions const& options = {});

/// C[ρ] and C[γ] assembled without any reference to Z.
MeasureResult complexity_position(QuantumState const& state, PipelineOptions const& options = {});
MeasureResult complexity_momentum(QuantumState const& state, PipelineOptions const& options = {});

/// All six measures through the Z-dependent intermediates.
ComplexityReport analytic_report(QuantumState const& state, double Z, PipelineOptions const& options = {});

// ---------------------------------------------------------------------------
// Definitional route: ∫ρ², -∫ρ ln ρ (and the momentum analogues) by direct
// quadrature of the densities, factorized into the radial integral and one
// integral per hyperangle. None of the constants above are used.

struct OracleOptions {
    double rel_tol = default_rel_tol;
};

ComplexityReport oracle_measures(QuantumState const& state, double Z, OracleOptions const& options = {});

/// Factor-wise pieces of the oracle, exposed for tests.
struct DensityMoments {
    double norm;       // ∫ f r^{D-1} dr with f = R² (or M²)
    double quartic;    // ∫ f² r^{D-1} dr
    double entropy;    // -∫ f ln f r^{D-1} dr
    double quartic_err;
    double entropy_err;
};

DensityMoments oracle_radial_position(QuantumState const& state, double Z, OracleOptions const& options = {});
DensityMoments oracle_radial_momentum(QuantumState const& state, double Z, OracleOptions const& options = {});
/// Product over θ_j (with the 1/2π azimuthal factor): norm, ∫|Y|⁴, S[Y].
DensityMoments oracle_angular(QuantumState const& state, OracleOptions const& options = {});

} // namespace hydrocomplex::measures
