#!/usr/bin/env python

import json
import logging
import sys
import time

from typing import Optional

from qseries import commands, identities, verifier, version
from qseries.conf import settings
from qseries.identities.proofs import THEOREMS
from qseries.qcore.exceptions import EvaluationError
from qseries.startup import RunConfig
from qseries.typing import GenericJSONList


logger = logging.getLogger(__name__)


def cmd_list(config: RunConfig) -> str:
    entries: GenericJSONList = [identities.get(i).describe() for i in config.identities or identities.ids()]
    if config.format == 'json':
        return json.dumps(entries, indent=2) + '\n'

    lines = []
    for e in entries:
        lines.append(f'{e["id"]:<10} {e["title"]}')
        lines.append(f'{"":<10} free: {" ".join(e["free_params"])}')
        if e['constraint']:
            lines.append(f'{"":<10} constraint: {e["constraint"]}')
        if e['conditions']:
            lines.append(f'{"":<10} conditions: {", ".join(e["conditions"])}')

    return '\n'.join(lines) + '\n'


def _write(text: str, out: Optional[str]) -> None:
    if not out:
        sys.stdout.write(text)
        return

    with open(out, 'w') as f:
        f.write(text)

    logger.info('report written to %s', out)


def _exit_code(reports: list[verifier.VerificationReport], limits: list[verifier.LimitRow]) -> int:
    if any(r.failed for r in reports) or not verifier.monotone(limits):
        return commands.EXIT_FAILURE
    if any(r.inconclusive for r in reports):
        return commands.EXIT_INCONCLUSIVE

    return commands.EXIT_OK


def render(
    config: RunConfig,
    spec: verifier.SampleSpec,
    reports: list[verifier.VerificationReport],
    limits: list[verifier.LimitRow],
    elapsed: float
) -> str:
    if config.format == 'json':
        extra = {
            'version': version.VERSION,
            'seed': spec.seed,
            'samples': spec.count,
            'precision_cap': spec.precision_cap,
            'limits': [row.to_json() for row in limits]
        }
        return verifier.dumps_json(reports, extra)

    if config.format == 'csv':
        return verifier.dumps_csv(reports)

    return verifier.render_text(
        reports,
        version=version.VERSION,
        seed=spec.seed,
        samples=spec.count,
        precision_cap=spec.precision_cap,
        tol_rel=spec.tol_rel,
        limits=limits,
        elapsed=f'{elapsed:.2f}',
        verbose=config.verbose
    )


async def cmd_verify(config: RunConfig) -> int:
    started = time.monotonic()
    try:
        spec = verifier.SampleSpec.from_settings(exact=config.exact)
        if config.params:
            identity = config.identities[0]
            params = verifier.parse_params(config.params, identity)
            reports = [verifier.verify_point(identity, params, spec)]
        else:
            reports = await verifier.verify_many(
                config.identities,
                spec,
                jobs=settings.verification.jobs,
                fold=config.fold
            )

        limits = []
        if config.limit_eps:
            theorems = [i for i in config.identities if i in THEOREMS]
            if not theorems:
                logger.error('limit offsets given without any of %s', ', '.join(THEOREMS))
                return commands.EXIT_CONFIG
            for theorem_id in theorems:
                limits += verifier.limit_rows(theorem_id, config.limit_eps, spec)

    except (verifier.VerifierException, EvaluationError, ValueError) as e:
        logger.error('%s', e)
        return commands.EXIT_CONFIG

    text = render(config, spec, reports, limits, time.monotonic() - started)
    try:
        _write(text, config.out)
    except OSError as e:
        logger.error('failed to write report: %s', e)
        return commands.EXIT_CONFIG

    return _exit_code(reports, limits)


async def main(config: RunConfig) -> int:
    if config.command == 'list':
        try:
            _write(cmd_list(config), config.out)
        except OSError as e:
            logger.error('failed to write catalog: %s', e)
            return commands.EXIT_CONFIG

        return commands.EXIT_OK

    return await cmd_verify(config)


def execute() -> None:
    commands.execute(main)


if __name__ == '__main__':
    execute()
