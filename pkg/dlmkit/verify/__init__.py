from dlmkit.verify.cospectral import ds_check
from dlmkit.verify.properties import interlacing_check, property_suite
from dlmkit.verify.sweep import classify_sweep, extremal_check, formulas_check, small_case_sweeps

__all__ = [
    "classify_sweep",
    "ds_check",
    "extremal_check",
    "formulas_check",
    "interlacing_check",
    "property_suite",
    "small_case_sweeps",
]
