import asyncio
import sys

from typing import Awaitable, Callable, Optional

from qseries import startup


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_INCONCLUSIVE = 3


def run(main_func: Callable[[startup.RunConfig], Awaitable[int]], argv: Optional[list[str]] = None) -> int:
    try:
        config = startup.init(argv)
    except startup.ConfigError as e:
        sys.stderr.write(f'{e}\n')
        return EXIT_CONFIG

    loop = asyncio.new_event_loop()
    try:
        return loop.run_until_complete(main_func(config))

    finally:
        loop.close()


def execute(main_func: Callable[[startup.RunConfig], Awaitable[int]]) -> None:
    code = run(main_func)
    if startup.logger:
        startup.logger.debug('bye!')

    sys.exit(code)
