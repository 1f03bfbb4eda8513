import argparse
import dataclasses
import logging.config
import os
import sys
import types

from fractions import Fraction
from typing import Optional

from qseries import identities, version
from qseries.conf import settings
from qseries.identities.exceptions import UnknownIdentity
from qseries.qcore.exceptions import QSeriesException
from qseries.typing import GenericJSONDict, ParamStrings
from qseries.utils import conf as conf_utils
from qseries.verifier import parse_epsilons


PRECISION_CAP_ENV = 'QSERIES_PRECISION_CAP'
FORMATS = ('text', 'json', 'csv')

logger: Optional[logging.Logger] = None
options: Optional[types.SimpleNamespace] = None


class ConfigError(QSeriesException):
    def __init__(self, message: str) -> None:
        self.message: str = message

        super().__init__(message)

    def to_json(self) -> GenericJSONDict:
        return {
            'reason': 'config',
            'message': self.message
        }


@dataclasses.dataclass
class RunConfig:
    command: str
    identities: list[str]
    format: str = 'text'
    out: Optional[str] = None
    exact: bool = False
    fold: bool = False
    limit_eps: list[Fraction] = dataclasses.field(default_factory=list)
    params: Optional[ParamStrings] = None
    verbose: bool = False


def _range(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(p) for p in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected "low,high", got "{text}"') from None

    return lo, hi


def _n_range(text: str) -> tuple[int, int]:
    try:
        if '..' in text:
            lo, hi = (int(p) for p in text.split('..'))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected "N" or "LOW..HIGH", got "{text}"') from None

    return lo, hi


def _params(text: str) -> ParamStrings:
    params = {}
    for item in text.split(','):
        name, sep, value = item.partition('=')
        if not sep or not name.strip() or not value.strip():
            raise argparse.ArgumentTypeError(f'expected "name=value", got "{item}"')

        params[name.strip()] = value.strip()

    return params


def _epsilons(text: str) -> list[Fraction]:
    try:
        epsilons = parse_epsilons(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid limit offsets "{text}"') from None
    if any(e <= 0 for e in epsilons):
        raise argparse.ArgumentTypeError('limit offsets must be positive')

    return epsilons


def make_parser() -> argparse.ArgumentParser:
    description = f'qseries {version.VERSION}'

    class VersionAction(argparse.Action):
        def __call__(self, *args, **kwargs) -> None:
            sys.stdout.write(f'{description}\n')
            sys.exit()

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--identity', help='identity ids, comma separated', type=str, dest='identity')
    common.add_argument('--format', help='output format', choices=FORMATS, dest='format')
    common.add_argument('--out', help='write the output to this file instead of stdout', type=str, dest='out')

    parser = argparse.ArgumentParser(
        prog='qseries',
        description=description,
        add_help=False,
        formatter_class=argparse.RawTextHelpFormatter
    )
    parser.add_argument('-c', help='specify the configuration file', type=str, dest='config_file')
    parser.add_argument('-h', '--help', help='print this help and exit', action='help', default=argparse.SUPPRESS)
    parser.add_argument(
        '--version',
        help='print program version and exit',
        action=VersionAction,
        default=argparse.SUPPRESS,
        nargs=0
    )
    parser.add_argument('-v', '--verbose', help='log debugging information', action='store_true', dest='verbose')
    parser.add_argument('-q', '--quiet', help='only log warnings and errors', action='store_true', dest='quiet')

    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    commands.add_parser('list', parents=[common], help='list the identity catalog')

    verify = commands.add_parser('verify', parents=[common], help='verify identities at sampled parameters')
    verify.add_argument('--all', help='verify the whole catalog', action='store_true', dest='all')
    verify.add_argument('--samples', help='admissible samples per identity', type=int, dest='samples')
    verify.add_argument('--seed', help='random seed', type=int, dest='seed')
    verify.add_argument('--precision', help='precision cap, in bits', type=int, dest='precision')
    verify.add_argument('--tol', help='relative pass tolerance', type=float, dest='tol')
    verify.add_argument('--exact', help='rational samples, exact evaluation', action='store_true', dest='exact')
    verify.add_argument('--n', help='terminating index, "N" or "LOW..HIGH"', type=_n_range, dest='n')
    verify.add_argument('--fold', help='also check the folded forms of the theorems', action='store_true', dest='fold')
    verify.add_argument('--limit-eps', help='limit offsets, comma separated', type=_epsilons, dest='limit_eps')
    verify.add_argument('--q-range', help='range of |q|, "low,high"', type=_range, dest='q_range')
    verify.add_argument('--param-range', help='range of parameter moduli, "low,high"', type=_range, dest='param_range')
    verify.add_argument('--real-only', help='real parameters only', action='store_true', dest='real_only')
    verify.add_argument('--params', help='single point, e.g. "q=1/2,b=3"', type=_params, dest='params')
    verify.add_argument('--jobs', help='worker processes', type=int, dest='jobs')

    return parser


def parse_args(argv: Optional[list[str]] = None) -> None:
    global options

    options = make_parser().parse_args(argv)


def init_settings() -> None:
    if options.config_file:
        try:
            parsed_config = conf_utils.config_from_file(options.config_file)
        except IOError as e:
            raise ConfigError(f'failed to open config file "{options.config_file}": {e}') from e
        except Exception as e:
            raise ConfigError(f'failed to load config file "{options.config_file}": {e}') from e
    else:
        parsed_config = None

    conf_utils.apply_config(settings, parsed_config)

    cap = os.environ.get(PRECISION_CAP_ENV)
    if cap:
        try:
            settings.verification.precision_cap = int(cap)
        except ValueError:
            raise ConfigError(f'{PRECISION_CAP_ENV} must be an integer, got "{cap}"') from None

    apply_options()


def apply_options() -> None:
    """Command line flags override both the defaults and the configuration file."""

    def given(name: str) -> bool:
        value = getattr(options, name, None)
        return value is not None and value is not False

    if given('samples'):
        settings.verification.samples = options.samples
    if given('seed'):
        settings.verification.seed = options.seed
    if given('precision'):
        settings.verification.precision_cap = options.precision
    if given('tol'):
        settings.verification.tol_rel = options.tol
    if given('jobs'):
        settings.verification.jobs = options.jobs
    if given('q_range'):
        settings.sampling.q_range = list(options.q_range)
    if given('param_range'):
        settings.sampling.param_range = list(options.param_range)
    if given('n'):
        settings.sampling.n_range = list(options.n)
    if given('real_only'):
        settings.sampling.allow_complex = False
    if given('format'):
        settings.report.format = options.format
    if given('verbose'):
        settings.debug = True


def init_logging() -> None:
    global logger

    settings.logging['disable_existing_loggers'] = False
    if settings.debug:
        settings.logging['root']['level'] = 'DEBUG'
    elif options.quiet:
        settings.logging['root']['level'] = 'WARNING'

    logging.config.dictConfig(settings.logging)

    logger = logging.getLogger('qseries')

    logger.debug('hello!')
    logger.debug('this is qseries %s', version.VERSION)

    # Not in init_settings() because there is no logging there
    if options.config_file:
        logger.info('using config from %s', options.config_file)


def run_config() -> RunConfig:
    ids = [i.strip() for i in (options.identity or '').split(',') if i.strip()]
    for i in ids:
        if i not in identities.ids():
            raise ConfigError(str(UnknownIdentity(i)))

    if options.command == 'verify':
        if options.all:
            ids = identities.ids()
        elif not ids:
            raise ConfigError('verify needs --identity or --all')
        if options.params and len(ids) != 1:
            raise ConfigError('--params needs exactly one identity')

    return RunConfig(
        command=options.command,
        identities=ids,
        format=settings.report.format,
        out=options.out,
        exact=getattr(options, 'exact', False),
        fold=getattr(options, 'fold', False),
        limit_eps=getattr(options, 'limit_eps', None) or [],
        params=getattr(options, 'params', None),
        verbose=options.verbose
    )


def init(argv: Optional[list[str]] = None) -> RunConfig:
    parse_args(argv)

    init_settings()
    init_logging()

    return run_config()
