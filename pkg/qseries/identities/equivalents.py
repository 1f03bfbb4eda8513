"""The 7psi7 transformations with the bilateral summation index reversed (k -> -k resp. k -> -k - 1)."""

from .base import each, identity, infinite, term
from .theorems import SIX, TheoremA, TheoremB, psi77, u_term_1, u_term_2, v_term_1, v_term_2, vwp_phi_2, vwp_term_1


@identity('prop-a')
class Psi77C(TheoremA):
    TITLE = '7psi7 transformation, argument q^2'
    LHS = (psi77('q', 'q^2'), vwp_term_1())
    RHS = (u_term_1(), u_term_2())


@identity('prop-b')
class Psi77D(TheoremB):
    TITLE = '7psi7 with q^2 denominators and 10phi9 series summing to zero, argument q^3'
    LHS = (
        psi77('q^2', 'q^3'),
        term(
            vwp_phi_2(SIX),
            bracket=infinite(
                ['q', 'b', *SIX, *each('b*q/{}', SIX)],
                ['b^2', 'q^2/b', *each('q^2/{}', SIX), *each('b*{}/q', SIX)]
            ),
            prefactor='b/q^2'
        ),
        v_term_1('1/q'),
        v_term_2('1/q')
    )
