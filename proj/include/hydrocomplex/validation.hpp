#pragma once

#include <string>
#include <vector>

#include "hydrocomplex/measures.hpp"

namespace hydrocomplex::validation {

struct CheckResult {
    std::string name;
    std::string description;
    double tolerance = 0.0;
    double max_residual = 0.0; // +inf when some case threw or produced a non-finite value
    std::size_t cases = 0;
    bool passed = false;
    std::string worst_case;
};

struct ValidationConfig {
    std::vector<int> dims{2, 3, 4, 5};
    int n_max = 3;
    std::vector<double> z_list{1.0, 2.0, 5.0, 10.0};
    double rel_tol = measures::default_rel_tol;
    measures::K1Exponent k1_exponent = measures::K1Exponent::Corrected;
    unsigned threads = 0; // 0: hardware concurrency
};

struct ValidationSummary {
    ValidationConfig config;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::string to_json(int indent = 2) const;
};

/// |a - b| / max(|a|, |b|); +inf if either is not finite
double relative_residual(double a, double b);
/// |a - b| / max(1, |a|, |b|), for entropies, which can cross zero
double entropy_residual(double a, double b);
/// Worst residual over the six measures of two reports, entropies compared
/// with entropy_residual.
double report_residual(ComplexityReport const& a, ComplexityReport const& b, std::string* worst_measure = nullptr);

// Individual checks. Each runs its own fixed matrix unless noted.

/// closed-form C[ρ] of the ground state against pow(e/2, D), D = 2..10
CheckResult ground_closed_form(int max_dim = 10);
/// pipeline and oracle against the closed form for ground states, D = 2..6
CheckResult ground_route_agreement(ValidationConfig const& config, int max_dim = 6);
/// C[γ] of the ground state in D = 2, 3, 4 against 1.7926, 2.3545, 3.0799, every route
CheckResult ground_momentum_printed(ValidationConfig const& config);
/// C[ρ], C[γ] at each Z in config.z_list against Z = 1, ground and circular n <= 4
CheckResult z_invariance(ValidationConfig const& config, int max_circular_n = 4);
/// circular_report(D, 1) against ground_report(D), D = 2..10
CheckResult circular_reduction(int max_dim = 10);
/// ∫ρ and ∫γ over every tower of config.dims × n <= config.n_max
CheckResult normalization(ValidationConfig const& config);
/// pipeline against oracle (and the closed form where one exists) on every tower
CheckResult route_agreement(ValidationConfig const& config);
/// closed = pipeline = oracle for circular states, D = 2..6, n = 1..5
CheckResult circular_route_agreement(ValidationConfig const& config);
/// D = 3 ground-state entropies and disequilibria, by the oracle
CheckResult hydrogen_anchors(ValidationConfig const& config);
/// orthonormality, Gauss exactness and the degree-0 entropic anchors
CheckResult polynomial_infrastructure();

ValidationSummary run_validation(ValidationConfig const& config);

} // namespace hydrocomplex::validation
