#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hydrocomplex/hydrogenic.hpp"

namespace hydrocomplex {

enum class Method { ClosedForm, AnalyticPipeline, Oracle };

std::string_view method_name(Method method); // "closed", "pipeline", "oracle"
Method parse_method(std::string_view name);

struct MeasureResult {
    double value = 0.0;
    double err_est = 0.0;
    Method method = Method::Oracle;
};

/// Both densities' disequilibrium ⟨·⟩, Shannon entropy S and shape complexity
/// C = ⟨·⟩ exp(S), plus the product C[ρ]·C[γ], all from one route.
struct ComplexityReport {
    QuantumState state;
    double Z = 1.0;
    Method method = Method::Oracle;

    MeasureResult disequilibrium_pos;
    MeasureResult shannon_pos;
    MeasureResult complexity_pos;
    MeasureResult disequilibrium_mom;
    MeasureResult shannon_mom;
    MeasureResult complexity_mom;
    MeasureResult product;

    /// ∫ρ and ∫γ; only the quadrature oracle fills these
    std::optional<double> normalization_pos;
    std::optional<double> normalization_mom;
};

/// Builds the complexity and product entries from the disequilibria and
/// entropies, propagating relative errors in quadrature.
void assemble_complexities(ComplexityReport& report);

enum class Space { Position, Momentum };
std::string_view space_name(Space space);

/// Fixed CSV layout, one row per (space, method).
inline constexpr std::string_view csv_header =
    "D,n,mu,Z,space,method,disequilibrium,shannon,complexity,product,err_est,error";

std::string csv_row(ComplexityReport const& report, Space space);
/// Row for a state whose computation failed; numeric fields are left empty.
std::string csv_error_row(QuantumState const& state, double Z, Space space, Method method, std::string const& error);

/// JSON object with stable key order and 17 significant digits.
std::string report_json(ComplexityReport const& report, int indent = 2);

/// printf-style "%.{digits}g" without locale surprises
std::string format_number(double value, int digits);

} // namespace hydrocomplex
