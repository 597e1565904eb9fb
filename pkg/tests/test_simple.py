import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from localquiver import (
    DimensionError,
    DomainError,
    Quiver,
    check_simple,
    enumerate_simple_dimvecs,
    is_simple_dimvec,
    support,
    vertex_simple,
)
from localquiver.oracle import oracle_is_simple
from localquiver.quiver import permute_vector

from .conftest import quiver_and_vector, quivers


@given(quivers(max_k=5, max_arrows=3))
def test_vertex_simples_always_simple(q):
    for i in range(q.k):
        assert is_simple_dimvec(q, vertex_simple(q.k, i))


def test_cycle_all_ones_only(tri_cycle):
    assert is_simple_dimvec(tri_cycle, (1, 1, 1))
    assert not is_simple_dimvec(tri_cycle, (2, 2, 2))
    assert not is_simple_dimvec(tri_cycle, (1, 1, 0))


def test_loop_quivers():
    assert is_simple_dimvec(Quiver.loops(2), (3,))
    assert not is_simple_dimvec(Quiver.loops(1), (2,))
    assert is_simple_dimvec(Quiver.loops(1), (1,))
    assert not is_simple_dimvec(Quiver.loops(0), (2,))


def test_loop_quiver_values_match_oracle():
    # the derived values above, rechecked on random representations
    assert oracle_is_simple(Quiver.loops(2), (3,), trials=3, seed=1)
    assert not oracle_is_simple(Quiver.loops(1), (2,), trials=5, seed=1)


def test_errors(tri_cycle):
    with pytest.raises(DomainError):
        is_simple_dimvec(tri_cycle, (0, 0, 0))
    with pytest.raises(DimensionError):
        is_simple_dimvec(tri_cycle, (1, 1))


def test_reason_names_failing_condition():
    q = Quiver.from_arrows(2, [(0, 1, 2), (1, 0, 1)])
    verdict = check_simple(q, (1, 2))
    assert not verdict
    assert "chi(delta_2, e)" in verdict.reason
    assert check_simple(Quiver.from_arrows(2, [(0, 1, 1)]), (1, 1)).reason == (
        "support is not strongly connected"
    )


def test_enumerate_examples():
    assert enumerate_simple_dimvecs(Quiver.loops(0), 3) == [(1,)]
    assert enumerate_simple_dimvecs(Quiver.loops(1), 3) == [(1,)]
    with pytest.raises(DomainError):
        enumerate_simple_dimvecs(Quiver.loops(0), 0)


def test_enumerate_two_cycle_against_oracle():
    q = Quiver.cycle(2)
    candidates = [e for e in itertools.product(range(5), repeat=2) if 1 <= sum(e) <= 4]
    assert len(candidates) == 14
    by_oracle = [e for e in candidates if oracle_is_simple(q, e, trials=3, seed=7)]
    assert by_oracle == [(0, 1), (1, 0), (1, 1)]
    assert enumerate_simple_dimvecs(q, 4) == by_oracle


@given(quivers(max_k=3, max_arrows=2), st.integers(1, 4))
def test_enumerate_is_lexicographic_and_complete(q, bound):
    out = enumerate_simple_dimvecs(q, bound)
    assert out == sorted(out)
    brute = [
        e
        for e in itertools.product(range(bound + 1), repeat=q.k)
        if 1 <= sum(e) <= bound and is_simple_dimvec(q, e)
    ]
    assert out == brute


@given(quiver_and_vector(max_k=4, max_arrows=2, max_entry=4))
def test_simple_support_has_no_source_or_sink(qe):
    q, e = qe
    if not is_simple_dimvec(q, e) or sum(e) == 1:
        return
    supp = support(e)
    for v in supp:
        assert sum(q.arrows[v][w] for w in supp) >= 1
        assert sum(q.arrows[w][v] for w in supp) >= 1


@given(quiver_and_vector(max_k=4, max_arrows=2, max_entry=4), st.data())
def test_permutation_equivariance(qe, data):
    q, e = qe
    perm = data.draw(st.permutations(range(q.k)))
    assert is_simple_dimvec(q.permuted(perm), permute_vector(e, perm)) == is_simple_dimvec(q, e)


@settings(max_examples=60, deadline=None)
@given(quiver_and_vector(max_k=3, max_arrows=2, max_entry=3), st.integers(0, 2**32))
def test_oracle_agreement_sampled(qe, seed):
    q, e = qe
    assert oracle_is_simple(q, e, trials=3, seed=seed) == is_simple_dimvec(q, e)
