import os
import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from degenstir.rings import BivarPoly, LambdaPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=9))
lambda_polys = st.lists(rationals, max_size=13).map(LambdaPoly)
bivar_polys = st.lists(st.lists(rationals, max_size=4).map(LambdaPoly), max_size=5).map(BivarPoly)


@pytest.fixture
def lam():
    return LambdaPoly.lam()


@pytest.fixture
def x():
    return BivarPoly.x()
