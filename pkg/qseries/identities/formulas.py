"""A small formula language for identity parameters.

A formula is a signed monomial in the identity's symbols: a rational coefficient times symbols raised to integer or
half-integer exponents, where exponents may be affine in the integer `n`. Examples: `b*q/c`, `q^(n+1)/(b*c*d)`,
`-q*sqrt(u)`, `b*c*d/q^n`, `q^-n`. Formulas are kept structurally so that they can be printed back, compared and
evaluated with a consistent choice of square roots."""

from __future__ import annotations

import dataclasses
import math

from fractions import Fraction
from typing import Iterable, Optional

from . import exceptions


N_SYMBOL = 'n'
SQRT = 'sqrt'


@dataclasses.dataclass(frozen=True)
class Exponent:
    const: Fraction = Fraction(0)
    n: Fraction = Fraction(0)

    def __add__(self, other: Exponent) -> Exponent:
        return Exponent(self.const + other.const, self.n + other.n)

    def __neg__(self) -> Exponent:
        return Exponent(-self.const, -self.n)

    def __mul__(self, other: Exponent) -> Exponent:
        if self.n and other.n:
            raise ValueError('Exponent would not be affine in n')

        return Exponent(self.const * other.const, self.const * other.n + self.n * other.const)

    def is_zero(self) -> bool:
        return not self.const and not self.n

    def is_constant(self) -> bool:
        return not self.n

    def evaluate(self, n: Optional[int] = None) -> Fraction:
        if self.n and n is None:
            raise ValueError('Exponent depends on n but no n was given')

        return self.const + self.n * (n or 0)

    def __str__(self) -> str:
        if not self.n:
            return _format_fraction(self.const)

        parts = []
        if self.n == 1:
            parts.append('n')
        elif self.n == -1:
            parts.append('-n')
        else:
            parts.append(f'{_format_fraction(self.n)}*n')
        if self.const > 0:
            parts.append(f'+{_format_fraction(self.const)}')
        elif self.const < 0:
            parts.append(_format_fraction(self.const))

        return ''.join(parts)


def _format_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f'{f.numerator}/{f.denominator}'


@dataclasses.dataclass(frozen=True)
class Monomial:
    coefficient: Fraction
    powers: tuple[tuple[str, Exponent], ...]

    @classmethod
    def build(cls, coefficient: Fraction, powers: dict[str, Exponent]) -> Monomial:
        items = tuple(sorted((s, e) for s, e in powers.items() if not e.is_zero()))
        return cls(Fraction(coefficient), items)

    @property
    def symbols(self) -> set[str]:
        return {s for s, _ in self.powers}

    def depends_on_n(self) -> bool:
        return any(e.n for _, e in self.powers)

    def scaled(self, factor: Fraction) -> Monomial:
        return Monomial(self.coefficient * factor, self.powers)

    def __mul__(self, other: Monomial) -> Monomial:
        powers = dict(self.powers)
        for s, e in other.powers:
            powers[s] = powers.get(s, Exponent()) + e

        return Monomial.build(self.coefficient * other.coefficient, powers)

    def __truediv__(self, other: Monomial) -> Monomial:
        return self * other.inverse()

    def inverse(self) -> Monomial:
        return Monomial.build(1 / self.coefficient, {s: -e for s, e in self.powers})

    def raised(self, e: Exponent) -> Monomial:
        if not e.is_constant() and self.coefficient != 1:
            raise ValueError('Coefficient raised to a power depending on n')

        coefficient = self.coefficient
        if e.is_constant():
            exp = e.const
            if exp.denominator != 1:
                coefficient = _rational_sqrt(coefficient ** exp.numerator) if exp.denominator == 2 else None
                if coefficient is None:
                    raise ValueError('Coefficient has no rational power')
            else:
                coefficient = coefficient ** int(exp)

        return Monomial.build(coefficient, {s: se * e for s, se in self.powers})

    def __str__(self) -> str:
        num = []
        den = []
        for s, e in self.powers:
            positive = e.n > 0 or (not e.n and e.const > 0)
            target = num if positive else den
            e = e if positive else -e
            if e == Exponent(Fraction(1)):
                target.append(s)
            elif e == Exponent(Fraction(1, 2)):
                target.append(f'{SQRT}({s})')
            elif e.is_constant() and e.const.denominator == 1:
                target.append(f'{s}^{e}')
            else:
                target.append(f'{s}^({e})')

        coefficient = abs(self.coefficient)
        sign = '-' if self.coefficient < 0 else ''
        if coefficient.numerator != 1 or not num:
            num.insert(0, str(coefficient.numerator))
        if coefficient.denominator != 1:
            den.insert(0, str(coefficient.denominator))

        text = '*'.join(num)
        if len(den) == 1:
            text += f'/{den[0]}'
        elif den:
            text += '/(' + '*'.join(den) + ')'

        return sign + text


ONE = Monomial(Fraction(1), ())


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None

    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None

    return Fraction(num, den)


class _Parser:
    def __init__(self, text: str, symbols: Optional[Iterable[str]], pos: int) -> None:
        self.text: str = text
        self.symbols: Optional[set[str]] = set(symbols) if symbols is not None else None
        self.base_pos: int = pos
        self.tokens: list[tuple[str, str, int]] = self._tokenize()
        self.index: int = 0

    def _tokenize(self) -> list[tuple[str, str, int]]:
        tokens = []
        text = self.text
        i = 0
        level = 0
        while i < len(text):
            c = text[i]
            pos = self.base_pos + i
            if c.isspace():
                i += 1
                continue
            if c.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                tokens.append(('num', text[i:j], pos))
                i = j
                continue
            if c.isalpha() or c == '_':
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == '_'):
                    j += 1
                tokens.append(('name', text[i:j], pos))
                i = j
                continue
            if c == '(':
                level += 1
            elif c == ')':
                level -= 1
                if level < 0:
                    raise exceptions.UnbalancedParentheses(pos)
            elif c not in '*/^+-':
                raise exceptions.UnexpectedCharacter(c, pos)

            tokens.append(('op', c, pos))
            i += 1

        if level:
            raise exceptions.UnbalancedParentheses(self.base_pos + len(text))

        return tokens

    def _peek(self) -> Optional[tuple[str, str, int]]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _peek_after(self) -> Optional[tuple[str, str, int]]:
        return self.tokens[self.index + 1] if self.index + 1 < len(self.tokens) else None

    def _next(self) -> tuple[str, str, int]:
        token = self._peek()
        if token is None:
            raise exceptions.UnexpectedCharacter('<end>', self.base_pos + len(self.text))

        self.index += 1
        return token

    def _expect(self, value: str) -> None:
        kind, v, pos = self._next()
        if kind != 'op' or v != value:
            raise exceptions.UnexpectedCharacter(v, pos)

    def _is_op(self, value: str) -> bool:
        token = self._peek()
        return token is not None and token[0] == 'op' and token[1] == value

    def parse(self) -> Monomial:
        if not self.tokens:
            raise exceptions.EmptyFormula()

        sign = Fraction(1)
        if self._is_op('-'):
            self._next()
            sign = Fraction(-1)
        elif self._is_op('+'):
            self._next()

        result = self._product().scaled(sign)
        token = self._peek()
        if token is not None:
            raise exceptions.UnexpectedCharacter(token[1], token[2])

        return result

    def _product(self) -> Monomial:
        result = self._power()
        while self._is_op('*') or self._is_op('/'):
            _, op, _ = self._next()
            factor = self._power()
            result = result * factor if op == '*' else result / factor

        return result

    def _power(self) -> Monomial:
        base = self._primary()
        if not self._is_op('^'):
            return base

        _, _, pos = self._next()
        exponent = self._exponent()
        try:
            return base.raised(exponent)
        except ValueError:
            raise exceptions.UnexpectedCharacter('^', pos)

    def _primary(self) -> Monomial:
        kind, value, pos = self._next()
        if kind == 'num':
            return Monomial(Fraction(int(value)), ())

        if kind == 'name':
            if value == SQRT:
                self._expect('(')
                inner = self._product()
                self._expect(')')
                try:
                    return inner.raised(Exponent(Fraction(1, 2)))
                except ValueError:
                    raise exceptions.UnexpectedCharacter(value, pos)

            if value == N_SYMBOL or (self.symbols is not None and value not in self.symbols):
                raise exceptions.UnknownSymbol(value, pos)

            return Monomial(Fraction(1), ((value, Exponent(Fraction(1))),))

        if value == '(':
            inner = self._product()
            self._expect(')')
            return inner

        raise exceptions.UnexpectedCharacter(value, pos)

    def _exponent(self) -> Exponent:
        if self._is_op('('):
            self._next()
            e = self._affine()
            self._expect(')')
            return e

        sign = 1
        if self._is_op('-'):
            self._next()
            sign = -1

        return self._affine_term(sign)

    def _affine(self) -> Exponent:
        sign = 1
        if self._is_op('-') or self._is_op('+'):
            sign = -1 if self._next()[1] == '-' else 1

        e = self._affine_term(sign)
        while self._is_op('+') or self._is_op('-'):
            sign = -1 if self._next()[1] == '-' else 1
            e = e + self._affine_term(sign)

        return e

    def _affine_term(self, sign: int) -> Exponent:
        kind, value, pos = self._next()
        if kind == 'name' and value == N_SYMBOL:
            return Exponent(n=Fraction(sign))

        if kind != 'num':
            raise exceptions.UnexpectedCharacter(value, pos)

        # A numeric exponent only takes `/<num>` and `*n`; any other operator ends it
        number = Fraction(sign * int(value))
        following = self._peek_after()
        if self._is_op('/') and following is not None and following[0] == 'num':
            self._next()
            number /= int(self._next()[1])
            following = self._peek_after()

        if self._is_op('*') and following is not None and following[:2] == ('name', N_SYMBOL):
            self._next()
            self._next()

            return Exponent(n=number)

        return Exponent(const=number)


def parse(text: str, symbols: Optional[Iterable[str]] = None, pos: int = 1) -> Monomial:
    """Parses a formula into a `Monomial`. When `symbols` is given, any other symbol is an error."""

    return _Parser(text, symbols, pos).parse()
