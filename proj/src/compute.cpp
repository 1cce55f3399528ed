#include "hydrocomplex/compute.hpp"

#include <stdexcept>

#include "hydrocomplex/closedform.hpp"

namespace hydrocomplex {

ComplexityReport compute_report(QuantumState const& state, double Z, Method method, double rel_tol) {
    switch (method) {
    case Method::ClosedForm: return closedform::closed_report(state, Z);
    case Method::AnalyticPipeline: return measures::analytic_report(state, Z, {rel_tol});
    case Method::Oracle: return measures::oracle_measures(state, Z, {rel_tol});
    }
    throw std::logic_error("unhandled method");
}

} // namespace hydrocomplex
