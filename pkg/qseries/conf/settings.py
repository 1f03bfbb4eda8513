import typing as _typing


debug: bool = False  # log debugging information, also set by --verbose


logging: dict[str, _typing.Any] = {
    'version': 1,
    'formatters': {
        'default': {
            'format': '%(asctime)s: %(levelname)7s: [%(name)s] %(message)s',
            'datefmt': '%Y-%m-%d %H:%M:%S'
        }
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'default'
        }
    },
    'loggers': {
        # Double quotes are necessary to avoid HOCON key split
        '"asyncio"': {'level': 'INFO'},
        '"qseries.series"': {'level': 'INFO'},
        '"qseries.qcore"': {'level': 'INFO'}
    },
    'root': {
        'level': 'INFO',
        'handlers': ['console']
    }
}


class evaluation:
    precision_ladder: list[int] = [64, 128, 256]
    tol_bits: int = 16  # per-rung series tolerance is 2^(-P + tol_bits)
    max_terms: int = 100_000


class sampling:
    q_range: list[float] = [0.1, 0.8]
    param_range: list[float] = [0.2, 5.0]
    n_range: list[int] = [0, 5]
    allow_complex: bool = True
    margin_bits: int = 16
    ratio_limit: float = 0.85  # samples whose series converge more slowly are redrawn
    resample_factor: int = 100


class verification:
    precision_cap: int = 256
    tol_rel: float = 1e-20
    samples: int = 10
    seed: int = 0
    jobs: int = 1


class report:
    format: str = 'text'
    digits: int = 30
