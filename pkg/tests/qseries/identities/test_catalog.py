from fractions import Fraction

import pytest

from qseries import identities
from qseries.identities import UnknownIdentity, UnknownSymbol, formulas
from qseries.qcore import DomainError, EvalContext
from qseries.qcore.scalars import sqrt
from qseries.series import TermRange, term_range
from qseries.verifier import SampleSpec, sample


def test_catalog_order():
    assert identities.ids() == [
        'four-term',
        'p33-a', 'p33-b', 'p33-c', 'p33-d',
        'p55-a', 'p55-b', 'p55-c', 'p55-d',
        'thm-a', 'thm-b',
        'corl-a', 'corl-b', 'corl-c', 'corl-d', 'corl-e', 'corl-f', 'corl-g', 'corl-h',
        'prop-a', 'prop-b',
    ]
    assert len(identities.catalog()) == 21


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        identities.get('nope')


def test_describe():
    d = identities.get('thm-a').describe()
    assert d['id'] == 'thm-a'
    assert d['constraint'] == 'q^2 = b c d e f g h'
    assert d['solved'] == 'h = q^2/(b*c*d*e*f*g)'
    assert d['derived'] == {'u': 'q/(c*d*e)'}
    assert d['free_params'] == ['q', 'b', 'c', 'd', 'e', 'f', 'g']

    assert identities.get('p55-a').describe()['free_params'] == ['q', 'b', 'c', 'd', 'n']
    assert identities.get('p33-a').describe()['conditions'] == ['|q/bcd|<1']


def test_argument_of_reversed_theorem():
    assert identities.get('prop-b').LHS[0].series.argument == formulas.parse('q^3')


def test_solve_theorem(half):
    params = {'q': half, 'b': 2, 'c': 3, 'd': 5, 'e': 7, 'f': 11, 'g': 13}
    values = identities.solve_params('thm-a', params)
    assert values['h'] == Fraction(1, 120120)
    assert values['u'] == Fraction(1, 210)

    four_term = identities.solve_params('four-term', {**params, 'a': 1})
    assert four_term['lambda'] == values['u']
    assert four_term['h'] == values['h']


def test_solve_balanced(half):
    values = identities.solve_params('corl-b', {'q': half, 'b': 3, 'c': 5, 'd': 7, 'e': 9})
    assert values['f'] == half / (3 * 5 * 7 * 9)


def test_solve_missing_or_zero(half):
    with pytest.raises(DomainError):
        identities.solve_params('p33-a', {'q': half, 'b': 3, 'c': 5})

    with pytest.raises(DomainError):
        identities.solve_params('p33-a', {'q': half, 'b': 3, 'c': 5, 'd': 0})


def test_admissible(p33_params, half):
    assert identities.admissible('p33-a', p33_params)

    result = identities.admissible('p33-a', {**p33_params, 'b': half})
    assert not result
    assert any('pole' in d for d in result.diagnostics)

    params = {'q': half, 'b': 3, 'c': 5, 'd': 7, 'e': half, 'f': Fraction(5, 6)}
    result = identities.admissible('corl-a', identities.solve_params('corl-a', params))
    assert not result
    assert 'q/ef' in result.diagnostics[0]


def test_admissible_ratio_limit():
    params = {'q': Fraction(1, 3), 'b': Fraction(5, 3), 'c': Fraction(4, 9), 'd': Fraction(1, 2)}  # |q/bcd| = 9/10
    assert identities.admissible('p33-a', params)

    result = identities.admissible('p33-a', params, ratio_limit=0.85)
    assert not result
    assert result.diagnostics[0] == '|q/bcd|<1'


def test_3psi3_summation(p33_params):
    sides = identities.eval_sides('p33-a', p33_params)
    assert not sides.exact
    assert sides.certify(Fraction(1, 10 ** 20))


def test_3psi3_summation_q2_denominators(half):
    sides = identities.eval_sides('p33-b', {'q': half, 'b': 3, 'c': 4, 'd': 5})
    assert sides.rel_residual < 1e-25


def test_integer_parameters_evaluate_like_fractions(half):
    ints = {'q': half, 'b': 3, 'c': 4, 'd': 5}
    fractions = {name: Fraction(value) for name, value in ints.items()}

    spec = identities.get('p33-b').series_specs(ints)[0]
    assert term_range(spec) == TermRange(-3, 2)

    from_ints = identities.eval_sides('p33-b', ints)
    from_fractions = identities.eval_sides('p33-b', fractions)
    assert isinstance(from_ints.lhs, Fraction)
    assert from_ints.lhs == from_fractions.lhs
    assert from_ints.certify(Fraction(1, 10 ** 20))


@pytest.mark.parametrize('n', [0, 1, 2, 4])
def test_terminating_5psi5_exact(half, n):
    params = identities.solve_params('p55-a', {'q': half, 'b': 2, 'c': 3, 'd': 7, 'n': n})
    sides = identities.eval_sides('p55-a', params)
    assert sides.exact
    assert sides.residual == 0


def test_symmetric_parameters(half):
    first = identities.solve_params('p55-a', {'q': half, 'b': 2, 'c': 3, 'd': 7, 'n': 3})
    second = identities.solve_params('p55-a', {'q': half, 'b': 7, 'c': 2, 'd': 3, 'n': 3})
    assert identities.eval_sides('p55-a', first).lhs == identities.eval_sides('p55-a', second).lhs


def test_theorem_sides(thm_a_params):
    values = identities.solve_params('thm-a', thm_a_params)
    assert values['h'] == Fraction(7007, 7200)

    sides = identities.eval_sides('thm-a', values, EvalContext(prec=128))
    assert sides.certify(Fraction(1, 10 ** 20))


def test_corrupt(p33_params):
    corrupted = identities.corrupt('p33-a')
    assert corrupted.ID == 'p33-a'
    assert corrupted.eval_sides(p33_params, EvalContext()).certify(Fraction(1, 10 ** 20)) is False

    with pytest.raises(UnknownSymbol):
        identities.corrupt('p33-a', symbol='z')


def test_corrupt_vanishing_sum():
    corrupted = identities.corrupt('corl-h')
    assert not corrupted.RHS
    assert corrupted.CORRUPTION == ('b', Fraction(1001, 1000))


def test_square_root_branch_does_not_matter(mocker):
    identity = identities.get('four-term')
    params = identity.solve(sample(identity, SampleSpec(seed=3, count=1, allow_complex=False))[0].params)
    ctx = EvalContext.for_precision(256)

    principal = identity.eval_sides(params, ctx.derive())
    mocker.patch('qseries.identities.base.sqrt', side_effect=lambda x, prec: -sqrt(x, prec))
    flipped = identity.eval_sides(params, ctx.derive())

    assert flipped.lhs.overlaps(principal.lhs)
    assert flipped.rhs.overlaps(principal.rhs)
    assert flipped.certify(Fraction(1, 10 ** 20))
