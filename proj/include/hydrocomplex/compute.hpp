#pragma once

#include "hydrocomplex/measures.hpp"

namespace hydrocomplex {

/// One report by the chosen route. ClosedForm throws DomainError for states
/// other than ground and circular ones.
ComplexityReport compute_report(QuantumState const& state, double Z, Method method,
                                double rel_tol = measures::default_rel_tol);

} // namespace hydrocomplex
