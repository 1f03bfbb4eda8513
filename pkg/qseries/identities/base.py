from __future__ import annotations

import abc
import dataclasses
import logging

from fractions import Fraction
from typing import Any, Callable, Iterable, Optional, Sequence, Union

import mpmath

from qseries.qcore import bounds
from qseries.qcore.context import EvalContext
from qseries.qcore.exceptions import DomainError, EvaluationError
from qseries.qcore.qpoch import INFINITY, qfac_ratio
from qseries.qcore.scalars import (
    Scalar,
    abs_lower,
    abs_upper,
    is_exact,
    is_zero,
    magnitude,
    power,
    radius,
    sqrt,
    to_complex,
    to_scalar,
)
from qseries.series import Kind, SeriesSpec, evaluate, term_range
from qseries.typing import GenericJSONDict

from . import exceptions, formulas
from .formulas import Monomial


ADMISSIBILITY_MARGIN = Fraction(1, 2 ** 16)
SCAN_PREC = 64
SCAN_LIMIT = 4096

IDENTITIES: dict[str, type[Identity]] = {}

FormulaLike = Union[str, Monomial]

logger = logging.getLogger(__name__)


def _monomial(f: FormulaLike) -> Monomial:
    return f if isinstance(f, Monomial) else formulas.parse(f)


def _monomials(fs: Iterable[FormulaLike]) -> tuple[Monomial, ...]:
    return tuple(_monomial(f) for f in fs)


class Environment:
    """Symbol values of one evaluation. Monomials are evaluated once each, and so is the square root of a symbol,
    which keeps the branch choice consistent throughout an evaluation."""

    def __init__(self, values: dict[str, Any], ctx: EvalContext) -> None:
        self.values: dict[str, Any] = values
        self.ctx: EvalContext = ctx
        self.n: Optional[int] = values.get(formulas.N_SYMBOL)
        self._cache: dict[Monomial, Scalar] = {}
        self._roots: dict[str, Scalar] = {}

    def root(self, symbol: str) -> Scalar:
        r = self._roots.get(symbol)
        if r is None:
            r = self._roots[symbol] = sqrt(self.values[symbol], self.ctx.prec)

        return r

    def monomial(self, m: Monomial) -> Scalar:
        v = self._cache.get(m)
        if v is not None:
            return v

        v = m.coefficient
        for symbol, e in m.powers:
            exp = e.evaluate(self.n)
            if exp.denominator == 1:
                v = v * power(self.values[symbol], int(exp))
            elif exp.denominator == 2:
                v = v * power(self.root(symbol), int(exp * 2))
            else:
                raise DomainError(f'exponent {exp} of {symbol}')

        self._cache[m] = v
        return v

    def perturbed(self, symbol: str, factor: Fraction) -> Environment:
        values = dict(self.values)
        values[symbol] = values[symbol] * factor

        return Environment(values, self.ctx)


@dataclasses.dataclass(frozen=True)
class Prefactor:
    """A monomial times a product of (1 - monomial) factors."""

    monomial: Monomial = formulas.ONE
    one_minus: tuple[Monomial, ...] = ()

    def evaluate(self, env: Environment) -> Scalar:
        v = env.monomial(self.monomial)
        for m in self.one_minus:
            v = v * (1 - env.monomial(m))

        return v

    def is_one(self) -> bool:
        return self.monomial == formulas.ONE and not self.one_minus

    def __str__(self) -> str:
        parts = [] if self.monomial == formulas.ONE and self.one_minus else [str(self.monomial)]
        parts += [f'(1-{m})' for m in self.one_minus]

        return '*'.join(parts)


@dataclasses.dataclass(frozen=True)
class Bracket:
    """The ratio (a_1, ..., a_r; q)_N / (b_1, ..., b_s; q)_N with N either `n` or infinity."""

    numer: tuple[Monomial, ...]
    denom: tuple[Monomial, ...]
    finite: bool = False

    def order(self, env: Environment) -> Union[int, float]:
        return env.n if self.finite else INFINITY

    def evaluate(self, env: Environment) -> Scalar:
        return qfac_ratio(
            [env.monomial(m) for m in self.numer],
            [env.monomial(m) for m in self.denom],
            env.values['q'],
            self.order(env),
            ctx=env.ctx
        )

    def __str__(self) -> str:
        order = 'n' if self.finite else 'inf'
        numer = ', '.join(str(m) for m in self.numer)
        denom = ', '.join(str(m) for m in self.denom)

        return f'({numer}; q)_{order}/({denom}; q)_{order}'


@dataclasses.dataclass(frozen=True)
class SeriesTemplate:
    kind: Kind
    numer: tuple[Monomial, ...]
    denom: tuple[Monomial, ...]
    argument: Monomial

    def instantiate(self, env: Environment) -> SeriesSpec:
        return SeriesSpec(
            kind=self.kind,
            numer=tuple(env.monomial(m) for m in self.numer),
            denom=tuple(env.monomial(m) for m in self.denom),
            q=env.values['q'],
            z=env.monomial(self.argument)
        )

    @property
    def name(self) -> str:
        if self.kind == Kind.UNILATERAL:
            return f'{len(self.numer)}phi{len(self.denom)}'

        return f'{len(self.numer)}psi{len(self.denom)}'

    def __str__(self) -> str:
        numer = ', '.join(str(m) for m in self.numer)
        denom = ', '.join(str(m) for m in self.denom)

        return f'{self.name}({numer}; {denom}; q, {self.argument})'


@dataclasses.dataclass(frozen=True)
class Term:
    sign: int = 1
    prefactor: Prefactor = Prefactor()
    bracket: Optional[Bracket] = None
    series: Optional[SeriesTemplate] = None

    def monomials(self) -> list[Monomial]:
        ms = [self.prefactor.monomial, *self.prefactor.one_minus]
        if self.bracket:
            ms += [*self.bracket.numer, *self.bracket.denom]
        if self.series:
            ms += [*self.series.numer, *self.series.denom, self.series.argument]

        return ms

    def evaluate(self, env: Environment) -> Scalar:
        value = self.prefactor.evaluate(env)
        if self.bracket:
            value = value * self.bracket.evaluate(env)
        if self.series and not is_zero(value):
            value = value * evaluate(self.series.instantiate(env), env.ctx).value

        return value if self.sign > 0 else -value

    def __str__(self) -> str:
        parts = []
        if not self.prefactor.is_one():
            parts.append(str(self.prefactor))
        if self.bracket:
            parts.append(str(self.bracket))
        if self.series:
            parts.append(str(self.series))

        return ' * '.join(parts) or '1'


@dataclasses.dataclass(frozen=True)
class Expression:
    terms: tuple[Term, ...] = ()

    def __str__(self) -> str:
        if not self.terms:
            return '0'

        s = ''
        for i, t in enumerate(self.terms):
            if t.sign < 0:
                s += ' - ' if i else '-'
            elif i:
                s += ' + '
            s += str(t)

        return s


def _prefactor(prefactor: FormulaLike, one_minus: Sequence[FormulaLike]) -> Prefactor:
    return Prefactor(_monomial(prefactor), _monomials(one_minus))


def phi(numer: Sequence[FormulaLike], denom: Sequence[FormulaLike], argument: FormulaLike) -> SeriesTemplate:
    return SeriesTemplate(Kind.UNILATERAL, _monomials(numer), _monomials(denom), _monomial(argument))


def psi(numer: Sequence[FormulaLike], denom: Sequence[FormulaLike], argument: FormulaLike) -> SeriesTemplate:
    return SeriesTemplate(Kind.BILATERAL, _monomials(numer), _monomials(denom), _monomial(argument))


def infinite(numer: Sequence[FormulaLike], denom: Sequence[FormulaLike]) -> Bracket:
    return Bracket(_monomials(numer), _monomials(denom), finite=False)


def finite(numer: Sequence[FormulaLike], denom: Sequence[FormulaLike]) -> Bracket:
    return Bracket(_monomials(numer), _monomials(denom), finite=True)


def term(
    series: Optional[SeriesTemplate] = None,
    bracket: Optional[Bracket] = None,
    prefactor: FormulaLike = '1',
    one_minus: Sequence[FormulaLike] = (),
    sign: int = 1
) -> Term:
    return Term(sign=sign, prefactor=_prefactor(prefactor, one_minus), bracket=bracket, series=series)


@dataclasses.dataclass
class Admissibility:
    ok: bool
    diagnostics: list[str]

    def __bool__(self) -> bool:
        return self.ok


@dataclasses.dataclass
class SideValues:
    lhs: Scalar
    rhs: Scalar
    lhs_terms: list[Scalar]
    rhs_terms: list[Scalar]
    terms_used: int
    precision: int

    @property
    def residual(self) -> Scalar:
        return self.lhs - self.rhs

    @property
    def exact(self) -> bool:
        return is_exact(self.residual)

    def _scales(self) -> list[Scalar]:
        return [self.lhs, self.rhs, *self.lhs_terms, *self.rhs_terms]

    @property
    def abs_residual(self) -> Union[Fraction, mpmath.mpf]:
        r = self.residual
        return abs(Fraction(r)) if is_exact(r) else magnitude(r)

    @property
    def rel_residual(self) -> Union[Fraction, mpmath.mpf]:
        """|lhs - rhs| relative to the largest of |lhs|, |rhs| and the magnitudes of the individual terms."""

        r = self.residual
        if is_exact(r):
            scale = max(abs(Fraction(s)) for s in self._scales())
            return abs(Fraction(r)) / scale if scale else abs(Fraction(r))

        scale = max(magnitude(s) for s in self._scales())
        return magnitude(r) / scale if scale else magnitude(r)

    @property
    def radius(self) -> mpmath.mpf:
        return radius(self.residual)

    def certify(self, tol_rel: Union[Fraction, float]) -> Optional[bool]:
        """`True` for a certified pass, `False` for a certified failure, `None` when the residual ball straddles the
        threshold."""

        r = self.residual
        if is_exact(r):
            return r == 0

        scale_low = bounds.maximum(*(abs_lower(s) for s in self._scales()))
        scale_up = bounds.maximum(*(abs_upper(s) for s in self._scales()))
        tol = bounds.down(tol_rel)
        if bounds.lt(abs_upper(r), bounds.mul_down(tol, scale_low)):
            return True
        if bounds.gt(abs_lower(r), bounds.mul_up(bounds.up(tol_rel), scale_up)):
            return False

        return None


def identity(identity_id: str) -> Callable:
    def decorator(identity_class: type) -> type:
        identity_class.ID = identity_id
        identity_class.compile()
        IDENTITIES[identity_id] = identity_class

        return identity_class

    return decorator


class Identity(metaclass=abc.ABCMeta):
    ID: str = None
    TITLE: str = ''
    FREE: tuple[str, ...] = ()
    SOLVED: Optional[tuple[str, FormulaLike]] = None
    DERIVED: tuple[tuple[str, FormulaLike], ...] = ()
    CONSTRAINT: Optional[str] = None
    CONDITIONS: tuple[tuple[str, FormulaLike], ...] = ()
    INTEGER: tuple[str, ...] = ()
    SYMMETRIC: tuple[tuple[str, ...], ...] = ()
    LHS: tuple[Term, ...] = ()
    RHS: tuple[Term, ...] = ()

    # Set on corrupted copies: (symbol, factor) applied to the values the right-hand side sees
    CORRUPTION: Optional[tuple[str, Fraction]] = None

    _solved: Optional[tuple[str, Monomial]] = None
    _derived: tuple[tuple[str, Monomial], ...] = ()
    _conditions: tuple[tuple[str, Monomial], ...] = ()

    @classmethod
    def compile(cls) -> None:
        cls._solved = (cls.SOLVED[0], _monomial(cls.SOLVED[1])) if cls.SOLVED else None
        cls._derived = tuple((s, _monomial(f)) for s, f in cls.DERIVED)
        cls._conditions = tuple((label, _monomial(f)) for label, f in cls.CONDITIONS)

        known = set(cls.symbols())
        used = []
        for t in (*cls.LHS, *cls.RHS):
            used += t.monomials()
        used += [m for _, m in cls._conditions]
        if cls._solved:
            used.append(cls._solved[1])
        used += [m for _, m in cls._derived]

        for m in used:
            for s in m.symbols:
                if s not in known:
                    raise exceptions.UnknownSymbol(s, 0)

    @classmethod
    def symbols(cls) -> list[str]:
        symbols = list(cls.FREE)
        if cls.SOLVED:
            symbols.append(cls.SOLVED[0])
        symbols += [s for s, _ in cls.DERIVED]

        return symbols

    @classmethod
    def lhs(cls) -> Expression:
        return Expression(tuple(cls.LHS))

    @classmethod
    def rhs(cls) -> Expression:
        return Expression(tuple(cls.RHS))

    @classmethod
    def is_finite(cls) -> bool:
        return formulas.N_SYMBOL in cls.INTEGER

    @classmethod
    def solve(cls, assignment: dict[str, Any], prec: int = 128) -> dict[str, Any]:
        """Converts the free parameters to scalars and adds the solved and derived symbols."""

        values = {}
        for name in cls.FREE:
            if name not in assignment:
                raise DomainError(f'missing parameter {name}')

            value = to_scalar(assignment[name], prec)
            if is_zero(value):
                raise DomainError(f'zero parameter {name}')

            values[name] = value

        for name in cls.INTEGER:
            if name not in assignment:
                raise DomainError(f'missing parameter {name}')

            n = int(assignment[name])
            if n < 0:
                raise DomainError(f'negative {name}')

            values[name] = n

        env = Environment(values, EvalContext(prec=prec))
        if cls._solved:
            values[cls._solved[0]] = env.monomial(cls._solved[1])
        for name, m in cls._derived:
            values[name] = env.monomial(m)

        return values

    @classmethod
    def environment(cls, params: dict[str, Any], ctx: EvalContext) -> Environment:
        values = {k: v if k in cls.INTEGER else to_scalar(v, ctx.prec) for k, v in params.items()}

        return Environment(values, ctx)

    @classmethod
    def _side_environments(cls, env: Environment) -> tuple[list[Environment], list[Environment]]:
        lhs_envs = [env] * len(cls.LHS)
        rhs_envs = [env] * len(cls.RHS)
        if cls.CORRUPTION:
            symbol, factor = cls.CORRUPTION
            perturbed = env.perturbed(symbol, factor)
            if rhs_envs:
                rhs_envs = [perturbed] * len(rhs_envs)
            else:
                lhs_envs[-1] = perturbed

        return lhs_envs, rhs_envs

    @classmethod
    def eval_sides(cls, params: dict[str, Any], ctx: EvalContext) -> SideValues:
        env = cls.environment(params, ctx)
        lhs_envs, rhs_envs = cls._side_environments(env)
        start = ctx.terms_used

        sides = {}
        for side, terms, envs in (('lhs', cls.LHS, lhs_envs), ('rhs', cls.RHS, rhs_envs)):
            values = []
            for i, (t, e) in enumerate(zip(terms, envs)):
                try:
                    values.append(t.evaluate(e))
                except EvaluationError as ex:
                    raise exceptions.TermEvaluationError(side, i, ex) from ex

            sides[side] = values

        lhs = Fraction(0)
        for v in sides['lhs']:
            lhs = lhs + v
        rhs = Fraction(0)
        for v in sides['rhs']:
            rhs = rhs + v

        return SideValues(
            lhs=lhs,
            rhs=rhs,
            lhs_terms=sides['lhs'],
            rhs_terms=sides['rhs'],
            terms_used=ctx.terms_used - start,
            precision=ctx.prec
        )

    @classmethod
    def series_specs(cls, params: dict[str, Any], side: str = 'lhs', prec: int = 128) -> list[Optional[SeriesSpec]]:
        env = cls.environment(params, EvalContext(prec=prec))
        terms = cls.LHS if side == 'lhs' else cls.RHS

        return [t.series.instantiate(env) if t.series else None for t in terms]

    @classmethod
    def admissible(
        cls,
        params: dict[str, Any],
        margin: Fraction = ADMISSIBILITY_MARGIN,
        ratio_limit: Optional[float] = None
    ) -> Admissibility:
        """Checks the stated convergence conditions, the ratio tests of every series and scans every denominator
        factor for proximity to zero, all with `margin`. A `ratio_limit` below `1 - margin` tightens the convergence
        conditions and ratio tests, turning away samples whose series would need too many terms."""

        diagnostics = []
        limit = 1 - float(margin)
        ratio = limit if ratio_limit is None else min(limit, ratio_limit)
        m = float(margin)

        for name, value in params.items():
            if name not in cls.INTEGER and is_zero(value):
                diagnostics.append(f'zero parameter {name}')
        if diagnostics:
            return Admissibility(False, diagnostics)

        env = cls.environment(params, EvalContext(prec=SCAN_PREC))
        try:
            q = to_complex(env.values['q'])
            if abs(q) >= limit:
                return Admissibility(False, ['|q|<1'])

            for label, cond in cls._conditions:
                if abs(to_complex(env.monomial(cond))) >= ratio:
                    diagnostics.append(label)

            for side, terms in (('lhs', cls.LHS), ('rhs', cls.RHS)):
                for i, t in enumerate(terms):
                    diagnostics += _scan_term(side, i, t, env, q, ratio, m)

        except EvaluationError as e:
            diagnostics.append(f'evaluation: {e}')

        return Admissibility(not diagnostics, diagnostics)

    @classmethod
    def describe(cls) -> GenericJSONDict:
        d = {
            'id': cls.ID,
            'title': cls.TITLE,
            'free_params': list(cls.FREE) + list(cls.INTEGER),
            'constraint': cls.CONSTRAINT,
            'conditions': [label for label, _ in cls._conditions],
            'lhs': str(cls.lhs()),
            'rhs': str(cls.rhs())
        }
        if cls._solved:
            d['solved'] = f'{cls._solved[0]} = {cls._solved[1]}'
        if cls._derived:
            d['derived'] = {s: str(m) for s, m in cls._derived}

        return d


def _scan_factors(label: str, x: complex, q: complex, k_range: range, m: float) -> Optional[str]:
    # |1 - x q^k| below the margin anywhere in the range; the scan ends once |x q^k| is clearly away from 1
    xk = x * q ** k_range.start
    step = q if k_range.step > 0 else 1 / q
    for k in k_range:
        if abs(1 - xk) < m:
            return f'pole: factor 1 - ({label}) q^{k} vanishes'
        if k_range.step > 0 and abs(xk) < 0.5:
            break
        if k_range.step < 0 and abs(xk) > 2:
            break
        xk *= step

    return None


def _scan_term(side: str, index: int, t: Term, env: Environment, q: complex, limit: float, m: float) -> list[str]:
    diagnostics = []
    where = f'{side} term {index}'

    if t.bracket:
        n = env.n if t.bracket.finite else None
        k_range = range(0, n if n is not None else SCAN_LIMIT)
        for mono in t.bracket.denom:
            d = _scan_factors(str(mono), to_complex(env.monomial(mono)), q, k_range, m)
            if d:
                diagnostics.append(f'{where}: {d}')

    if not t.series:
        return diagnostics

    spec = t.series.instantiate(env)
    rng = term_range(spec, SCAN_PREC)
    upper = int(rng.kmax) if rng.upper_finite else SCAN_LIMIT
    # Factors 1 - b q^k with k < kmax enter the terms up to kmax
    for mono, v in zip(t.series.denom, spec.denom):
        d = _scan_factors(str(mono), to_complex(v), q, range(0, upper), m)
        if d:
            diagnostics.append(f'{where}: {d}')

    if not rng.upper_finite and spec.exponent == 0 and abs(to_complex(spec.z)) >= limit:
        diagnostics.append(f'{where}: |{t.series.argument}|<1')

    if spec.kind == Kind.BILATERAL:
        lower = int(rng.kmin) if rng.lower_finite else -SCAN_LIMIT
        for mono, v in zip(t.series.numer, spec.numer):
            d = _scan_factors(str(mono), to_complex(v), q, range(-1, lower - 1, -1), m)
            if d:
                diagnostics.append(f'{where}: {d}')

        if not rng.lower_finite:
            if spec.r != spec.s:
                diagnostics.append(f'{where}: r != s')
            else:
                num = 1
                for v in spec.denom:
                    num *= to_complex(v)
                den = to_complex(spec.z)
                for v in spec.numer:
                    den *= to_complex(v)
                if abs(num / den) >= limit:
                    diagnostics.append(f'{where}: backward ratio |{_backward_label(t.series)}|<1')

    return diagnostics


def _backward_label(series: SeriesTemplate) -> str:
    num = formulas.ONE
    for mono in series.denom:
        num = num * mono
    den = series.argument
    for mono in series.numer:
        den = den * mono

    return str(num / den)


def each(template: str, symbols: Iterable[str]) -> list[str]:
    """Expands `template` once per symbol, e.g. `each('b*q/{}', 'cde')` gives `['b*q/c', 'b*q/d', 'b*q/e']`."""

    return [template.format(s) for s in symbols]
