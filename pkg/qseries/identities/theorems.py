"""Transformations of well-poised 7psi7 series into sums of very-well-poised 10phi9 series.

Both follow from the four-term transformation, the first in the limit a -> 1 and the second in the limit a -> q,
after folding the resulting unilateral series into a bilateral one."""

from .base import Identity, SeriesTemplate, Term, each, identity, infinite, phi, psi, term


SEVEN = 'bcdefgh'
SIX = 'cdefgh'


def psi77(denominator: str, argument: str) -> Term:
    return term(psi(SEVEN, each(denominator + '/{}', SEVEN), argument))


# a -> 1
def vwp_phi_1(symbols: str) -> SeriesTemplate:
    return phi(['b^2', '-q*b', *each('b*{}', symbols)], ['-b', *each('b*q/{}', symbols)], 'q')


def vwp_term_1() -> Term:
    return term(
        vwp_phi_1(SIX),
        bracket=infinite(
            ['q', 'b', *SIX, *each('b*q/{}', SIX)],
            ['b^2*q', '1/b', *each('q/{}', SIX), *each('b*{}', SIX)]
        )
    )


def u_term_1() -> Term:
    return term(
        phi(
            ['u', 'q*sqrt(u)', '-q*sqrt(u)', 'b', *each('u*{}', 'cde'), *'fgh'],
            ['sqrt(u)', '-sqrt(u)', 'u*q/b', *each('q/{}', 'cde'), *each('u*q/{}', 'fgh')],
            'q'
        ),
        bracket=infinite(
            ['q', 'b', *each('u*q/{}', 'fgh'), *each('b*{}/u', 'fgh')],
            ['u*q', 'b/u', *each('q/{}', 'fgh'), *each('b*{}', 'fgh')]
        )
    )


def u_term_2() -> Term:
    return term(
        phi(
            ['b^2/u', 'q*b/sqrt(u)', '-q*b/sqrt(u)', 'b', *each('b*{}', 'cde'), *each('b*{}/u', 'fgh')],
            ['b/sqrt(u)', '-b/sqrt(u)', 'b*q/u', *each('b*q/(u*{})', 'cde'), *each('b*q/{}', 'fgh')],
            'q'
        ),
        bracket=infinite(
            ['q', 'b', *'fgh', *each('b*q/{}', 'fgh'), *each('u*{}', 'cde'), *each('b*q/(u*{})', 'cde')],
            ['b^2*q/u', 'u/b', *each('q/{}', SIX), *each('b*{}', SIX)]
        )
    )


# a -> q
def vwp_phi_2(symbols: str) -> SeriesTemplate:
    return phi(
        ['b^2/q', 'b*sqrt(q)', '-b*sqrt(q)', *each('b*{}/q', symbols)],
        ['b/sqrt(q)', '-b/sqrt(q)', *each('b*q/{}', symbols)],
        'q'
    )


def vwp_term_2() -> Term:
    return term(
        vwp_phi_2(SIX),
        bracket=infinite(
            ['q', 'b/q', *SIX, *each('b*q/{}', SIX)],
            ['b^2', 'q/b', *each('q^2/{}', SIX), *each('b*{}/q', SIX)]
        )
    )


def v_term_1(prefactor: str = '1') -> Term:
    return term(
        phi(
            ['v', 'q*sqrt(v)', '-q*sqrt(v)', 'b', *each('v*{}/q', 'cde'), *'fgh'],
            ['sqrt(v)', '-sqrt(v)', 'v*q/b', *each('q^2/{}', 'cde'), *each('v*q/{}', 'fgh')],
            'q'
        ),
        bracket=infinite(
            ['q', 'b/q', *each('v*q/{}', 'fgh'), *each('b*{}/v', 'fgh')],
            ['v*q', 'b/v', *each('q^2/{}', 'fgh'), *each('b*{}/q', 'fgh')]
        ),
        prefactor=prefactor
    )


def v_term_2(prefactor: str = '1') -> Term:
    return term(
        phi(
            ['b^2/v', 'q*b/sqrt(v)', '-q*b/sqrt(v)', 'b', *each('b*{}/q', 'cde'), *each('b*{}/v', 'fgh')],
            ['b/sqrt(v)', '-b/sqrt(v)', 'b*q/v', *each('b*q^2/(v*{})', 'cde'), *each('b*q/{}', 'fgh')],
            'q'
        ),
        bracket=infinite(
            ['q', 'b/q', *'fgh', *each('b*q/{}', 'fgh'), *each('v*{}/q', 'cde'), *each('b*q^2/(v*{})', 'cde')],
            ['b^2*q/v', 'v/b', *each('q^2/{}', SIX), *each('b*{}/q', SIX)]
        ),
        prefactor=prefactor
    )


class _SevenParameters(Identity):
    FREE = ('q', 'b', 'c', 'd', 'e', 'f', 'g')
    SYMMETRIC = (('c', 'd', 'e'), ('f', 'g'))


class TheoremA(_SevenParameters):
    SOLVED = ('h', 'q^2/(b*c*d*e*f*g)')
    DERIVED = (('u', 'q/(c*d*e)'),)
    CONSTRAINT = 'q^2 = b c d e f g h'


class TheoremB(_SevenParameters):
    SOLVED = ('h', 'q^5/(b*c*d*e*f*g)')
    DERIVED = (('v', 'q^3/(c*d*e)'),)
    CONSTRAINT = 'q^5 = b c d e f g h'


@identity('thm-a')
class Psi77A(TheoremA):
    TITLE = '7psi7 transformation, argument q'
    LHS = (psi77('q', 'q'), vwp_term_1())
    RHS = (u_term_1(), u_term_2())


@identity('thm-b')
class Psi77B(TheoremB):
    TITLE = '7psi7 transformation with q^2 denominators, argument q'
    LHS = (psi77('q^2', 'q'), vwp_term_2())
    RHS = (v_term_1(), v_term_2())
