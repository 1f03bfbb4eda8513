from fractions import Fraction

import pytest

from qseries.identities import chains


def test_chain_table():
    assert len(chains.CHAINS) == 16
    assert len({c.name for c in chains.CHAINS}) == 16

    chain = chains.find('corl-a', 'p33-a')
    assert chain.kind == chains.ChainKind.REDUCTION
    assert chain.uses_pairing()

    chain = chains.find('thm-a', 'corl-a')
    assert chain.kind == chains.ChainKind.SPECIALIZATION
    assert chain.n == chains.SPECIALIZATION_N

    with pytest.raises(KeyError):
        chains.find('p33-a', 'corl-a')


def test_source_params_pairing(p33_params):
    chain = chains.find('corl-a', 'p33-a')
    x = Fraction(11, 3)
    params = chains.source_params(chain, p33_params, x)

    assert params['c'] == p33_params['q'] / x
    assert params['d'] == x
    assert params['e'] == p33_params['c']
    assert params['f'] == p33_params['d']

    with pytest.raises(ValueError):
        chains.source_params(chain, p33_params)


def test_reduction_to_terminating(p33_params):
    chain = chains.find('corl-b', 'p55-a')
    result = chains.check(chain, {**p33_params, 'n': 2})

    assert result.series_agree is True
    assert result.certify(Fraction(1, 10 ** 20)) is True


def test_reduction_with_pairing(p33_params):
    chain = chains.find('corl-a', 'p33-a')
    result = chains.check(chain, p33_params, Fraction(11, 3))

    assert result.series_agree is True
    assert result.certify(Fraction(1, 10 ** 20)) is True
