import copy

from fractions import Fraction

import pytest

from qseries.conf import settings
from qseries.utils import conf as conf_utils
from qseries.verifier import SampleSpec


# Taken at import time, before any test had a chance to change the settings
_default_settings = copy.deepcopy(conf_utils.obj_to_dict(settings))


@pytest.fixture(autouse=True)
def restore_settings():
    yield

    conf_utils.update_obj_from_dict(settings, copy.deepcopy(_default_settings))


@pytest.fixture(scope='session')
def half():
    return Fraction(1, 2)


@pytest.fixture(scope='session')
def p33_params(half):
    return {'q': half, 'b': Fraction(3), 'c': Fraction(5), 'd': Fraction(7)}


@pytest.fixture(scope='session')
def thm_a_params(half):
    return {
        'q': half,
        'b': Fraction(3, 4),
        'c': Fraction(5, 7),
        'd': Fraction(6, 7),
        'e': Fraction(8, 9),
        'f': Fraction(9, 11),
        'g': Fraction(10, 13)
    }


@pytest.fixture(scope='session')
def generic_seven_params(half):
    return {
        'q': half,
        'b': Fraction(3),
        'c': Fraction(5),
        'd': Fraction(7),
        'e': Fraction(9),
        'f': Fraction(11),
        'g': Fraction(13)
    }


@pytest.fixture
def small_spec():
    return SampleSpec(seed=1, count=3)
