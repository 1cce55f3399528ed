#pragma once

#include <stdexcept>
#include <vector>

namespace hydrocomplex {

/// Raised when an argument lies outside the domain of a function or violates
/// a documented precondition.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

} // namespace hydrocomplex

namespace hydrocomplex::specfun {

/// ln Γ(x) for x > 0.
double lngamma(double x);

/// ψ(x) = Γ'(x)/Γ(x) for x > 0.
double digamma(double x);

enum class PolyFamily {
    LaguerreOrthonormal,   // weight x^α e^{-x} on (0, ∞), α > -1
    GegenbauerOrthonormal, // weight (1 - x²)^{λ - 1/2} on (-1, 1), λ > 0
};

/// Identifies one orthonormal polynomial: family, degree and family parameter
/// (α for Laguerre, λ for Gegenbauer).
struct PolySpec {
    PolyFamily family;
    int degree;
    double param;
};

void validate_param(PolyFamily family, double param);
void validate(PolySpec const& spec);

/// ∫ w(x) dx for the family weight.
double zeroth_moment(PolyFamily family, double param);

/// Support interval of the family weight.
struct Support {
    double lower;
    double upper;
};
Support support(PolyFamily family);

/// Jacobi-matrix recurrence of the monic family
///   π_{k+1}(x) = (x - a_k) π_k(x) - b_k π_{k-1}(x),
/// with a, b holding k = 0..n_max and b[0] set to the zeroth moment.
struct Recurrence {
    std::vector<double> a;
    std::vector<double> b;
};

Recurrence poly_recurrence_coeffs(PolyFamily family, double param, int n_max);

/// A value stored as mantissa * exp(log_scale); the recurrence rescales
/// whenever the running values leave a safe range.
struct ScaledValue {
    double mantissa = 0.0;
    double log_scale = 0.0;

    double value() const;
    /// ln |value|, -inf for an exact zero.
    double log_abs() const;
};

/// Orthonormal polynomial, positive leading coefficient, evaluated by the
/// forward three-term recurrence.
double poly_eval(PolySpec const& spec, double x);
ScaledValue poly_eval_scaled(PolySpec const& spec, double x);

/// Value and first derivative of the orthonormal polynomial, sharing a scale.
struct ValueAndDerivative {
    double value;
    double derivative;
};
ValueAndDerivative poly_eval_with_derivative(PolySpec const& spec, double x);

/// The k real zeros, ascending, from the Jacobi matrix eigenvalues with one
/// Newton correction each.
std::vector<double> poly_roots(PolySpec const& spec);

/// 1 / Σ_{j<n} p_j(x)² over the orthonormal family; the Gauss weight when x is
/// a zero of p_n.
double christoffel_weight(PolyFamily family, double param, int n, double x);

} // namespace hydrocomplex::specfun
