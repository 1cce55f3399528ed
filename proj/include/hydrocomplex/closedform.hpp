#pragma once

#include "hydrocomplex/report.hpp"

namespace hydrocomplex::closedform {

/// Ground state (n = 1, all μ = 0) in D >= 2 dimensions, quadrature-free.
ComplexityReport ground_report(int D, double Z = 1.0);

/// Circular state (μ_i = n - 1 for every i). For n = 1 this is the ground state.
ComplexityReport circular_report(int D, int n, double Z = 1.0);

/// Momentum-entropy constant A(n, D) of circular states,
///   (2n+D-1)/(2n+D-3) - (D+1)/(2n+D-2) - (n-1)ψ(n)
///   - (D+1)/2 ψ(n+(D-2)/2) + (n+(D-1)/2) ψ(n+(D-3)/2)
double circular_momentum_constant(int D, int n);

/// True when the report's state admits a closed form (ground or circular).
bool has_closed_form(QuantumState const& state);

/// ground_report or circular_report for the state; throws DomainError otherwise.
ComplexityReport closed_report(QuantumState const& state, double Z);

} // namespace hydrocomplex::closedform
