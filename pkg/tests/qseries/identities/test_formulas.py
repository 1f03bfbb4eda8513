from fractions import Fraction

import pytest

from qseries.identities import formulas
from qseries.identities.exceptions import EmptyFormula, UnbalancedParentheses, UnexpectedCharacter, UnknownSymbol


def test_parse_prints_back():
    assert str(formulas.parse('b*q/c')) == 'b*q/c'
    assert str(formulas.parse('q^(n+1)/(b*c*d)')) == 'q^(n+1)/(b*c*d)'
    assert str(formulas.parse('-q*sqrt(u)')) == '-q*sqrt(u)'
    assert str(formulas.parse('q^2/(b*c*d)')) == 'q^2/(b*c*d)'


def test_parse_normalizes():
    assert formulas.parse('q*b/c') == formulas.parse('b*q/c')
    assert formulas.parse('q^3') == formulas.parse('q*q*q')
    assert formulas.parse('q/q') == formulas.ONE
    assert formulas.parse('2*b/4').coefficient == Fraction(1, 2)


def test_parse_numeric_exponent_before_operator():
    assert formulas.parse('b^2/a') == formulas.parse('b*b/a')
    assert formulas.parse('b^2*q/a') == formulas.parse('b*b*q/a')
    assert formulas.parse('q^2*a^3/(b*c)') == formulas.parse('q*q*a*a*a/(b*c)')
    assert formulas.parse('q^2*n') == formulas.parse('q^(2*n)')
    assert formulas.parse('q^2*n').depends_on_n()
    assert formulas.parse('q^1/2*b') == formulas.parse('sqrt(q)*b')


def test_parse_exponent_in_n():
    m = formulas.parse('b*c*d/q^n')
    assert m.depends_on_n()
    assert m.symbols == {'b', 'c', 'd', 'q'}
    assert not formulas.parse('q^-2').depends_on_n()


def test_parse_errors():
    with pytest.raises(UnexpectedCharacter):
        formulas.parse('b*')

    with pytest.raises(UnbalancedParentheses):
        formulas.parse('(b')

    with pytest.raises(UnbalancedParentheses):
        formulas.parse('b)')

    with pytest.raises(EmptyFormula):
        formulas.parse('  ')

    with pytest.raises(UnknownSymbol) as e:
        formulas.parse('x', symbols=['b'])
    assert e.value.name == 'x'

    with pytest.raises(UnexpectedCharacter) as e:
        formulas.parse('b$')
    assert e.value.pos == 2


def test_sqrt_of_irrational_coefficient():
    with pytest.raises(UnexpectedCharacter):
        formulas.parse('sqrt(2*b)')

    assert formulas.parse('sqrt(4*b)').coefficient == 2
