from .evaluation import (
    SeriesResult,
    Weight,
    bilateral_ratios,
    direct_term,
    evaluate,
    partial_sum,
    phi_eval,
    psi_eval,
    term_range,
    weighted_sum,
)
from .reindex import reflect_params, shift_reflect_params
from .spec import Kind, SeriesSpec, TermRange, phi, psi
