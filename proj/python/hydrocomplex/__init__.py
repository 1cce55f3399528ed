"""Shape complexity of D-dimensional hydrogenic states."""

import json as _json

from ._core import (
    ComplexityReport,
    ConvergenceError,
    DomainError,
    InvalidState,
    MeasureResult,
    Method,
    QuantumState,
    circular_report,
    compute,
    density_momentum,
    density_position,
    energy,
    enumerate_states,
    ground_report,
    has_closed_form,
)
from ._core import validate_json as _validate_json

__version__ = "0.1.0"


def report_dict(report):
    """The report as plain Python data (same layout as the CLI's JSON)."""
    return _json.loads(report.to_json(0))


def validate(dims=(2, 3, 4, 5), n_max=3, z_list=(1.0, 2.0, 5.0, 10.0), rel_tol=1e-10,
             k1_exponent="corrected", threads=0):
    """Run the self-checks and return the summary as a dict."""
    return _json.loads(_validate_json(list(dims), n_max, list(z_list), rel_tol, k1_exponent, threads))


__all__ = [
    "ComplexityReport", "ConvergenceError", "DomainError", "InvalidState", "MeasureResult", "Method",
    "QuantumState", "circular_report", "compute", "density_momentum", "density_position", "energy",
    "enumerate_states", "ground_report", "has_closed_form", "report_dict", "validate",
]
