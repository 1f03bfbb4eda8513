from .exceptions import ExhaustionError, InvalidSampleSpec, VerifierException
from .limits import LimitRow, limit_rows, monotone, parse_epsilons
from .report import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    REJECTED,
    SampleRecord,
    VerificationReport,
    dumps_csv,
    dumps_json,
    render_text,
)
from .sampling import Sample, SampleSpec, sample
from .verification import (
    FoldVerifier,
    IdentityVerifier,
    parse_params,
    verify,
    verify_exact,
    verify_fold,
    verify_many,
    verify_point,
)
