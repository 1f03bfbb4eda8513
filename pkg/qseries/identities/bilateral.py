"""Summation formulas for well-poised 3psi3 series and their terminating 5psi5 forms.

The forms with argument q^2/bcd resp. q^4/bcd (and q^2 resp. q^3 for the terminating ones) are the images of the
others under k -> -k resp. k -> -k - 1."""

from .base import Identity, Term, each, finite, identity, infinite, psi, term


class _WellPoised(Identity):
    FREE = ('q', 'b', 'c', 'd')
    SYMMETRIC = (('b', 'c', 'd'),)


class _Terminating(_WellPoised):
    INTEGER = ('n',)


_PRODUCT_1 = (['q', 'q/(b*c)', 'q/(b*d)', 'q/(c*d)'], ['q/b', 'q/c', 'q/d', 'q/(b*c*d)'])
_PRODUCT_2 = (['q^2/(b*c)', 'q^2/(b*d)', 'q^2/(c*d)'], ['q^2/b', 'q^2/c', 'q^2/d', 'q^2/(b*c*d)'])


@identity('p33-a')
class Sum33A(_WellPoised):
    TITLE = '3psi3 summation, argument q/bcd'
    CONDITIONS = (('|q/bcd|<1', 'q/(b*c*d)'),)
    LHS = (term(psi('bcd', each('q/{}', 'bcd'), 'q/(b*c*d)')),)
    RHS = (term(bracket=infinite(*_PRODUCT_1)),)


@identity('p33-b')
class Sum33B(_WellPoised):
    TITLE = '3psi3 summation with q^2 denominators, argument q^2/bcd'
    CONDITIONS = (('|q^2/bcd|<1', 'q^2/(b*c*d)'),)
    LHS = (term(psi('bcd', each('q^2/{}', 'bcd'), 'q^2/(b*c*d)')),)
    RHS = (term(bracket=infinite(['q', *_PRODUCT_2[0]], _PRODUCT_2[1])),)


@identity('p33-c')
class Sum33C(_WellPoised):
    TITLE = '3psi3 summation, argument q^2/bcd'
    CONDITIONS = (('|q/bcd|<1', 'q/(b*c*d)'),)
    LHS = (term(psi('bcd', each('q/{}', 'bcd'), 'q^2/(b*c*d)')),)
    RHS = (term(bracket=infinite(*_PRODUCT_1)),)


@identity('p33-d')
class Sum33D(_WellPoised):
    TITLE = '3psi3 summation with q^2 denominators, argument q^4/bcd'
    CONDITIONS = (('|q^2/bcd|<1', 'q^2/(b*c*d)'),)
    LHS = (term(psi('bcd', each('q^2/{}', 'bcd'), 'q^4/(b*c*d)')),)
    RHS = (term(bracket=infinite(['q', *_PRODUCT_2[0]], _PRODUCT_2[1]), prefactor='-1/q'),)


def _psi55_1(argument: str) -> Term:
    return term(psi([*'bcd', 'q^(n+1)/(b*c*d)', 'q^-n'], [*each('q/{}', 'bcd'), 'b*c*d/q^n', 'q^(n+1)'], argument))


def _psi55_2(argument: str) -> Term:
    return term(
        psi([*'bcd', 'q^(n+3)/(b*c*d)', 'q^-n'], [*each('q^2/{}', 'bcd'), 'b*c*d/q^(n+1)', 'q^(n+2)'], argument)
    )


@identity('p55-a')
class Sum55A(_Terminating):
    TITLE = 'terminating 5psi5 summation, argument q'
    LHS = (_psi55_1('q'),)
    RHS = (term(bracket=finite(*_PRODUCT_1)),)


@identity('p55-b')
class Sum55B(_Terminating):
    TITLE = 'terminating 5psi5 summation with q^2 denominators, argument q'
    LHS = (_psi55_2('q'),)
    RHS = (term(bracket=finite(['q^2', *_PRODUCT_2[0]], _PRODUCT_2[1]), one_minus=['q']),)


@identity('p55-c')
class Sum55C(_Terminating):
    TITLE = 'terminating 5psi5 summation, argument q^2'
    LHS = (_psi55_1('q^2'),)
    RHS = (term(bracket=finite(*_PRODUCT_1)),)


@identity('p55-d')
class Sum55D(_Terminating):
    TITLE = 'terminating 5psi5 summation with q^2 denominators, argument q^3'
    LHS = (_psi55_2('q^3'),)
    RHS = (term(bracket=finite(['q^2', *_PRODUCT_2[0]], _PRODUCT_2[1]), prefactor='-1/q', one_minus=['q']),)
