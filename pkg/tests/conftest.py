import random

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from famspecies.enumeration import LADDER, monotone_repair
from famspecies.families import Family
from famspecies.foundations import FiniteMap, Universe
from famspecies.multifamilies import MultiFamily

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def families(draw, n_min=1, n_max=4):
    n = draw(st.integers(n_min, n_max))
    U = Universe.of_size(n)
    code = draw(st.integers(0, (1 << U.size) - 1))
    return Family.from_code(U, code)


@st.composite
def eventual_families(draw, n_min=1, n_max=4):
    F = draw(families(n_min, n_max))
    # upward closure of a random generating family
    t = monotone_repair(F.table.astype(np.int64), upward=True).astype(bool)
    return Family.from_table(F.universe, t)


@st.composite
def increasing_multifamilies(draw, n_min=1, n_max=3, universe=None):
    U = universe or Universe.of_size(draw(st.integers(n_min, n_max)))
    raw = draw(st.lists(st.sampled_from(LADDER), min_size=U.size, max_size=U.size))
    upward = draw(st.booleans())
    return MultiFamily(U, monotone_repair(np.array(raw, dtype=np.int64), upward))


@st.composite
def maps_from(draw, X: Universe, m_max=3):
    m = draw(st.integers(1, m_max))
    Y = Universe(tuple(f"y{j}" for j in range(m)))
    images = draw(st.lists(st.integers(0, m - 1), min_size=X.n, max_size=X.n))
    return FiniteMap(X, Y, tuple(images))


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def abc():
    return Universe(("a", "b", "c"))


@pytest.fixture
def ab():
    return Universe(("a", "b"))
