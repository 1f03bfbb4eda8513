"""Transformations of 5psi5 series, obtained from the 7psi7 transformations either by letting one parameter pair
run off to q^-n, n -> infinity, or by pairing two parameters so that they cancel (c = q/d resp. c = q^2/d)."""

import itertools

from .base import Identity, Term, each, identity, infinite, phi, psi, term
from .theorems import vwp_phi_1, vwp_phi_2


FIVE = 'bcdef'


def psi55(denominator: str, argument: str) -> Term:
    return term(psi(FIVE, each(denominator + '/{}', FIVE), argument))


def pairs(template: str, symbols: str) -> list[str]:
    return [template.format(x, y) for x, y in itertools.combinations(symbols, 2)]


class _Nonterminating(Identity):
    FREE = ('q', 'b', 'c', 'd', 'e', 'f')
    SYMMETRIC = (('b', 'c', 'd'), ('e', 'f'))


class _MuForm(_Nonterminating):
    DERIVED = (('mu', 'q/(b*c*d)'),)
    CONDITIONS = (('|q^2/bcdef|<1', 'q^2/(b*c*d*e*f)'), ('|q/ef|<1', 'q/(e*f)'))


class _ThetaForm(_Nonterminating):
    DERIVED = (('theta', 'q^3/(b*c*d)'),)
    CONDITIONS = (('|q^4/bcdef|<1', 'q^4/(b*c*d*e*f)'), ('|q^2/ef|<1', 'q^2/(e*f)'))


class _BalancedForm(Identity):
    FREE = ('q', 'b', 'c', 'd', 'e')
    SYMMETRIC = (('c', 'd', 'e'),)


def mu_term() -> Term:
    return term(
        phi(
            ['mu', 'q*sqrt(mu)', '-q*sqrt(mu)', *each('mu*{}', 'bcd'), 'e', 'f'],
            ['sqrt(mu)', '-sqrt(mu)', *each('q/{}', 'bcd'), 'mu*q/e', 'mu*q/f'],
            'q/(e*f)'
        ),
        bracket=infinite(['q', 'q/(e*f)', 'mu*q/e', 'mu*q/f'], ['q/e', 'q/f', 'mu*q/(e*f)', 'mu*q'])
    )


def theta_term(prefactor: str = '1') -> Term:
    return term(
        phi(
            ['theta', 'q*sqrt(theta)', '-q*sqrt(theta)', *each('theta*{}/q', 'bcd'), 'e', 'f'],
            ['sqrt(theta)', '-sqrt(theta)', *each('q^2/{}', 'bcd'), 'theta*q/e', 'theta*q/f'],
            'q^2/(e*f)'
        ),
        bracket=infinite(['q', 'q^2/(e*f)', 'theta*q/e', 'theta*q/f'], ['q^2/e', 'q^2/f', 'theta*q/(e*f)', 'theta*q']),
        prefactor=prefactor
    )


def paired_terms_1() -> tuple[Term, Term]:
    return (
        term(
            vwp_phi_1('cdef'),
            bracket=infinite(
                ['q', 'b*q', *'cdef', *each('b*q/{}', 'cdef')],
                ['b^2*q', 'q/b', *each('q/{}', 'cdef'), *each('b*{}', 'cdef')]
            ),
            prefactor='b'
        ),
        term(bracket=infinite(['q', 'b', *pairs('q/({}*{})', 'cdef')], [*each('q/{}', 'cdef'), *each('b*{}', 'cdef')]))
    )


def paired_terms_2(prefactor_1: str, prefactor_2: str) -> tuple[Term, Term]:
    return (
        term(
            vwp_phi_2('cdef'),
            bracket=infinite(
                ['q', 'b', *'cdef', *each('b*q/{}', 'cdef')],
                ['b^2', 'q^2/b', *each('q^2/{}', 'cdef'), *each('b*{}/q', 'cdef')]
            ),
            prefactor=prefactor_1
        ),
        term(
            bracket=infinite(
                ['q', 'b/q', *pairs('q^2/({}*{})', 'cdef')],
                [*each('q^2/{}', 'cdef'), *each('b*{}/q', 'cdef')]
            ),
            prefactor=prefactor_2
        )
    )


@identity('corl-a')
class Psi55A(_MuForm):
    TITLE = '5psi5 into 8phi7, argument q^2/bcdef'
    LHS = (psi55('q', 'q^2/(b*c*d*e*f)'),)
    RHS = (mu_term(),)


@identity('corl-b')
class Psi55B(_BalancedForm):
    TITLE = '5psi5 into 6phi5, argument q'
    SOLVED = ('f', 'q/(b*c*d*e)')
    CONSTRAINT = 'q = b c d e f'
    LHS = (psi55('q', 'q'),)
    RHS = paired_terms_1()


@identity('corl-c')
class Psi55C(_ThetaForm):
    TITLE = '5psi5 with q^2 denominators into 8phi7, argument q^4/bcdef'
    LHS = (psi55('q^2', 'q^4/(b*c*d*e*f)'),)
    RHS = (theta_term(),)


@identity('corl-d')
class Psi55D(_BalancedForm):
    TITLE = '5psi5 with q^2 denominators into 7phi6, argument q'
    SOLVED = ('f', 'q^3/(b*c*d*e)')
    CONSTRAINT = 'q^3 = b c d e f'
    LHS = (psi55('q^2', 'q'),)
    RHS = paired_terms_2('b/q', '1')


@identity('corl-e')
class Psi55E(_MuForm):
    TITLE = '5psi5 into 8phi7, argument q^3/bcdef'
    LHS = (psi55('q', 'q^3/(b*c*d*e*f)'),)
    RHS = (mu_term(),)


@identity('corl-f')
class Psi55F(_BalancedForm):
    TITLE = '5psi5 into 6phi5, argument q^2'
    SOLVED = ('f', 'q/(b*c*d*e)')
    CONSTRAINT = 'q = b c d e f'
    LHS = (psi55('q', 'q^2'),)
    RHS = paired_terms_1()


@identity('corl-g')
class Psi55G(_ThetaForm):
    TITLE = '5psi5 with q^2 denominators and 8phi7 summing to zero, argument q^6/bcdef'
    LHS = (psi55('q^2', 'q^6/(b*c*d*e*f)'), theta_term('1/q'))


@identity('corl-h')
class Psi55H(_BalancedForm):
    TITLE = '5psi5 with q^2 denominators and 7phi6 summing to zero, argument q^3'
    SOLVED = ('f', 'q^3/(b*c*d*e)')
    CONSTRAINT = 'q^3 = b c d e f'
    LHS = (psi55('q^2', 'q^3'), *paired_terms_2('b/q^2', '1/q'))
