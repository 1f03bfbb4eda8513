from __future__ import annotations

import dataclasses
import enum
import math

from fractions import Fraction
from typing import Sequence, Union

from qseries.qcore.scalars import Scalar, all_exact, format_scalar, unify


class Kind(str, enum.Enum):
    UNILATERAL = 'unilateral'
    BILATERAL = 'bilateral'


@dataclasses.dataclass(frozen=True)
class SeriesSpec:
    """A unilateral (r+1)phi(s) or bilateral (r)psi(s) series, times `scale`."""

    kind: Kind
    numer: tuple[Scalar, ...]
    denom: tuple[Scalar, ...]
    q: Scalar
    z: Scalar
    scale: Scalar = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, 'kind', Kind(self.kind))
        object.__setattr__(self, 'numer', tuple(self.numer))
        object.__setattr__(self, 'denom', tuple(self.denom))

    @property
    def r(self) -> int:
        if self.kind == Kind.UNILATERAL:
            return len(self.numer) - 1

        return len(self.numer)

    @property
    def s(self) -> int:
        return len(self.denom)

    @property
    def exponent(self) -> int:
        """The power of the (-1)^k q^(k(k-1)/2) factor."""

        return self.s - self.r

    @property
    def is_bilateral(self) -> bool:
        return self.kind == Kind.BILATERAL

    def is_exact(self) -> bool:
        return all_exact(*self.numer, *self.denom, self.q, self.z, self.scale)

    def values(self) -> list[Scalar]:
        return [*self.numer, *self.denom, self.q, self.z, self.scale]

    def with_prec(self, prec: int) -> SeriesSpec:
        values = unify(self.values(), prec)
        nr, ns = len(self.numer), len(self.denom)

        return SeriesSpec(
            kind=self.kind,
            numer=tuple(values[:nr]),
            denom=tuple(values[nr:nr + ns]),
            q=values[nr + ns],
            z=values[nr + ns + 1],
            scale=values[nr + ns + 2]
        )

    def scaled(self, factor: Scalar) -> SeriesSpec:
        return dataclasses.replace(self, scale=self.scale * factor)

    def __str__(self) -> str:
        numer = ', '.join(format_scalar(a, 8) for a in self.numer)
        denom = ', '.join(format_scalar(b, 8) for b in self.denom)
        name = f'{len(self.numer)}phi{self.s}' if self.kind == Kind.UNILATERAL else f'{self.r}psi{self.s}'

        return f'{name}({numer}; {denom}; {format_scalar(self.q, 8)}, {format_scalar(self.z, 8)})'


def phi(numer: Sequence[Scalar], denom: Sequence[Scalar], q: Scalar, z: Scalar) -> SeriesSpec:
    return SeriesSpec(Kind.UNILATERAL, tuple(numer), tuple(denom), q, z)


def psi(numer: Sequence[Scalar], denom: Sequence[Scalar], q: Scalar, z: Scalar) -> SeriesSpec:
    return SeriesSpec(Kind.BILATERAL, tuple(numer), tuple(denom), q, z)


Bound = Union[int, float]


@dataclasses.dataclass(frozen=True)
class TermRange:
    kmin: Bound = -math.inf
    kmax: Bound = math.inf

    def __post_init__(self) -> None:
        if self.kmin > self.kmax:
            raise ValueError(f'Empty term range {self.kmin}..{self.kmax}')

    @property
    def lower_finite(self) -> bool:
        return self.kmin != -math.inf

    @property
    def upper_finite(self) -> bool:
        return self.kmax != math.inf

    def is_finite(self) -> bool:
        return self.lower_finite and self.upper_finite

    def __contains__(self, k: int) -> bool:
        return self.kmin <= k <= self.kmax

    def __str__(self) -> str:
        return f'{self.kmin}..{self.kmax}'
