import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from localquiver import (
    AlgebraSetting,
    DomainError,
    Quiver,
    builtin_curve,
    builtin_hereditary_order,
    builtin_numerical_semigroup,
    builtin_path_algebra,
    builtin_psl2z,
    decompose,
    describe_B,
    is_simp,
    is_simple_dimvec,
    westbury_check,
)
from localquiver.semigroup import AmbientVector

from .conftest import quiver_and_vector, quivers


def _brute_decompose(setting, coords):
    """Naive bounded search over 0 <= a_i <= |target| / |beta_i|."""
    total = setting.vector(coords).total_dim
    ranges = [range(total // n + 1) for n in setting.alpha]
    out = []
    for a in itertools.product(*ranges):
        if setting.combine(a).coords == tuple(coords):
            out.append(a)
    return sorted(out, reverse=True)


def test_decompose_numerical_examples():
    s = builtin_numerical_semigroup([2, 3])
    assert decompose(s, (7,)) == [(2, 1)]
    assert decompose(s, (1,)) == []
    assert decompose(s, s.vector((7,))) == [(2, 1)]


def test_decompose_psl2z_example():
    s = builtin_psl2z()
    # transportation solutions with row sums (1,1) and column sums (1,1,0)
    assert decompose(s, (1, 1, 1, 1, 0)) == [(1, 0, 0, 0, 1, 0), (0, 1, 0, 1, 0, 0)]
    assert _brute_decompose(s, (1, 1, 1, 1, 0)) == decompose(s, (1, 1, 1, 1, 0))


def test_decompose_rejects_zero_and_bad_total():
    s = builtin_psl2z()
    with pytest.raises(DomainError):
        decompose(s, (0, 0, 0, 0, 0))
    with pytest.raises(DomainError):
        decompose(s, AmbientVector((1, 1, 1, 1, 0), 3))


@pytest.mark.parametrize(
    "setting",
    [
        builtin_psl2z(),
        builtin_numerical_semigroup([3, 5, 7]),
        builtin_hereditary_order([[2, 1], [1, 1, 1]]),
    ],
    ids=["psl2z", "numerical", "hereditary"],
)
def test_decompose_matches_brute_force(setting):
    m = setting.ambient_rank
    for coords in itertools.product(range(3), repeat=m):
        if not any(coords):
            continue
        got = decompose(setting, coords)
        assert got == _brute_decompose(setting, coords)
        for a in got:
            assert setting.combine(a).coords == coords
            assert sum(x * n for x, n in zip(a, setting.alpha)) == setting.vector(coords).total_dim


def test_is_simp_examples():
    s = builtin_psl2z()
    assert is_simp(s, (1, 1, 1, 1, 0)) == (True, (1, 0, 0, 0, 1, 0))
    assert is_simp(s, (1, 1, 2, 0, 0)) == (False, None)
    curve = builtin_curve()
    assert is_simp(curve, (1,)) == (True, (1,))
    assert is_simp(curve, (2,)) == (False, None)


@given(quiver_and_vector(max_k=4, max_arrows=3, max_entry=3))
def test_path_algebra_simp_is_classifier(qe):
    q, e = qe
    ok, witness = is_simp(builtin_path_algebra(q), e)
    assert ok == is_simple_dimvec(q, e)
    assert witness == (e if ok else None)


def test_westbury_examples():
    assert westbury_check(1, 1, 1, 1, 0)
    assert not westbury_check(1, 1, 2, 0, 0)
    assert westbury_check(2, 1, 1, 1, 1)
    with pytest.raises(DomainError):
        westbury_check(1, 1, 1, 0, 0)


def test_builtin_curve_equals_loop_path_algebra():
    assert builtin_curve() == builtin_path_algebra(Quiver.loops(1))
    assert builtin_curve().alpha == (1,)


def test_builtin_path_algebra_keeps_loops():
    q = Quiver.from_arrows(2, [(0, 0, 2), (0, 1, 1)])
    s = builtin_path_algebra(q)
    assert s.quiver == q and s.alpha == (1, 1)


def test_builtin_hereditary_order():
    s = builtin_hereditary_order([[2, 1]])
    assert s.quiver == Quiver.cycle(2)
    assert s.alpha == (2, 1)
    s = builtin_hereditary_order([[2, 1], [1, 1, 1]])
    assert s.quiver.k == 5
    assert s.quiver.arrows[0][1] == s.quiver.arrows[1][0] == 1
    assert s.quiver.arrows[2][3] == s.quiver.arrows[3][4] == s.quiver.arrows[4][2] == 1
    assert s.quiver.arrows[1][2] == 0
    assert s.alpha == (2, 1, 1, 1, 1)
    for bad in ([[3]], [[2, 1], [1, 1]], [[0, 2]], []):
        with pytest.raises(DomainError):
            builtin_hereditary_order(bad)


def test_builtin_psl2z():
    s = builtin_psl2z()
    a = s.quiver.arrows
    assert a[1][3] == 1  # v12 -> v21
    assert a[1][4] == 0  # v12 -> v22
    assert s.quiver.num_arrows() == 12
    assert all(a[i][i] == 0 for i in range(6))
    assert s.alpha == (1,) * 6
    assert s.generators[0] == (1, 0, 1, 0, 0)
    assert s.generators[5] == (0, 1, 0, 0, 1)


def test_setting_validation():
    q = Quiver.loops(1)
    with pytest.raises(DomainError):
        AlgebraSetting(q, (2,), ((1,),), (1,))
    with pytest.raises(DomainError):
        AlgebraSetting(q, (1,), ((0,),), (1,))


def test_describe_b_examples():
    blocks = describe_B(builtin_curve(), 2)
    assert blocks[0, 0].rows == blocks[0, 0].cols == 1
    assert blocks[0, 0].path_counts == (1, 1, 1)
    blocks = describe_B(builtin_hereditary_order([[1, 2]]), 2)
    assert blocks[0, 1].path_counts == (0, 1, 0)
    assert (blocks[0, 1].rows, blocks[0, 1].cols) == (1, 2)


@given(quivers(max_k=4, max_arrows=2), st.integers(0, 4))
def test_describe_b_matches_matrix_powers(q, length):
    blocks = describe_B(builtin_path_algebra(q), length)
    adj = np.array(q.arrows, dtype=object)
    power = np.identity(q.k, dtype=object)
    for L in range(length + 1):
        for (i, j), b in blocks.items():
            assert b.path_counts[L] == power[i, j]
        power = power.dot(adj)
    for (i, j), b in blocks.items():
        # a path of length <= k-1 exists whenever any does
        powers = describe_B(builtin_path_algebra(q), q.k).get((i, j)).path_counts
        assert b.reachable == any(powers)
