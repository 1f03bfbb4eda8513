from .ball import DEFAULT_PREC, Ball
from .context import DEFAULT_MAX_TERMS, DEFAULT_TOL_BITS, EvalContext
from .exceptions import (
    BudgetError,
    DivergenceError,
    DomainError,
    EvaluationError,
    PoleError,
    PrecisionError,
    QSeriesException,
)
from .qpoch import INFINITY, QPochSpec, qfac_ratio, qpoch, qpoch_inf
from .scalars import ComplexRational, Scalar, sqrt, to_ball, to_scalar

