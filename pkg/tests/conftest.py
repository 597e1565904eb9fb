import itertools

import pytest
from hypothesis import strategies as st

from localquiver import Quiver


@st.composite
def quivers(draw, max_k=4, max_arrows=2):
    k = draw(st.integers(1, max_k))
    rows = draw(
        st.lists(
            st.lists(st.integers(0, max_arrows), min_size=k, max_size=k), min_size=k, max_size=k
        )
    )
    return Quiver(tuple(map(tuple, rows)))


@st.composite
def quiver_and_vector(draw, max_k=4, max_arrows=2, max_entry=3, nonzero=True):
    q = draw(quivers(max_k, max_arrows))
    e = draw(st.lists(st.integers(0, max_entry), min_size=q.k, max_size=q.k))
    if nonzero and not any(e):
        e[draw(st.integers(0, q.k - 1))] = 1
    return q, tuple(e)


def all_quivers(k, max_arrows):
    for flat in itertools.product(range(max_arrows + 1), repeat=k * k):
        yield Quiver(tuple(tuple(flat[i * k:(i + 1) * k]) for i in range(k)))


@pytest.fixture
def tri_cycle():
    return Quiver.cycle(3)
