from .base import Identity, each, identity, infinite, phi, term


@identity('four-term')
class FourTerm(Identity):
    TITLE = 'four-term transformation of very-well-poised 10phi9 series'
    FREE = ('q', 'a', 'b', 'c', 'd', 'e', 'f', 'g')
    SOLVED = ('h', 'q^2*a^3/(b*c*d*e*f*g)')
    DERIVED = (('lambda', 'q*a^2/(c*d*e)'),)
    CONSTRAINT = 'q^2 a^3 = b c d e f g h'
    SYMMETRIC = (('c', 'd', 'e'), ('f', 'g'))

    LHS = (
        term(
            phi(
                ['a', 'q*sqrt(a)', '-q*sqrt(a)', *'bcdefgh'],
                ['sqrt(a)', '-sqrt(a)', *each('a*q/{}', 'bcdefgh')],
                'q'
            )
        ),
        term(
            phi(
                ['b^2/a', 'q*b/sqrt(a)', '-q*b/sqrt(a)', 'b', *each('b*{}/a', 'cdefgh')],
                ['b/sqrt(a)', '-b/sqrt(a)', 'b*q/a', *each('b*q/{}', 'cdefgh')],
                'q'
            ),
            bracket=infinite(
                ['a*q', 'b/a', *'cdefgh', *each('b*q/{}', 'cdefgh')],
                ['b^2*q/a', 'a/b', *each('a*q/{}', 'cdefgh'), *each('b*{}/a', 'cdefgh')]
            )
        ),
    )

    RHS = (
        term(
            phi(
                ['lambda', 'q*sqrt(lambda)', '-q*sqrt(lambda)', 'b', *each('lambda*{}/a', 'cde'), *'fgh'],
                ['sqrt(lambda)', '-sqrt(lambda)', 'lambda*q/b', *each('a*q/{}', 'cde'), *each('lambda*q/{}', 'fgh')],
                'q'
            ),
            bracket=infinite(
                ['a*q', 'b/a', *each('lambda*q/{}', 'fgh'), *each('b*{}/lambda', 'fgh')],
                ['lambda*q', 'b/lambda', *each('a*q/{}', 'fgh'), *each('b*{}/a', 'fgh')]
            )
        ),
        term(
            phi(
                [
                    'b^2/lambda', 'q*b/sqrt(lambda)', '-q*b/sqrt(lambda)', 'b',
                    *each('b*{}/a', 'cde'), *each('b*{}/lambda', 'fgh')
                ],
                [
                    'b/sqrt(lambda)', '-b/sqrt(lambda)', 'b*q/lambda',
                    *each('a*b*q/(lambda*{})', 'cde'), *each('b*q/{}', 'fgh')
                ],
                'q'
            ),
            bracket=infinite(
                [
                    'a*q', 'b/a', *'fgh', *each('b*q/{}', 'fgh'),
                    *each('lambda*{}/a', 'cde'), *each('a*b*q/(lambda*{})', 'cde')
                ],
                ['b^2*q/lambda', 'lambda/b', *each('a*q/{}', 'cdefgh'), *each('b*{}/a', 'cdefgh')]
            )
        ),
    )
