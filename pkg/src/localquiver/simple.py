"""Simple dimension vectors of a quiver.

A dimension vector ``e`` carries a simple representation exactly when its
support is strongly connected and either

* the support is an oriented cycle (including one vertex with one loop) and
  every nonzero entry is 1,
* the support is a single loopless vertex with entry 1, or
* the support is neither, and ``chi(e, delta_i) <= 0`` and
  ``chi(delta_i, e) <= 0`` for every vertex ``i`` of the support.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import compress
from operator import itemgetter
from typing import Sequence

from .exceptions import DomainError
from .quiver import Quiver, as_dimvec


@dataclass(frozen=True)
class SimplicityVerdict:
    simple: bool
    reason: str

    def __bool__(self) -> bool:
        return self.simple


def _strongly_connected(sub: list[list[int]]) -> bool:
    succ = [[w for w, c in enumerate(row) if c] for row in sub]
    pred = [[w for w, c in enumerate(col) if c] for col in zip(*sub)]
    n = len(sub)
    for adj in (succ, pred):
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            return False
    return True


def _single_orbit(sub: list[list[int]]) -> bool:
    # sub is a permutation matrix here; follow the successor of vertex 0 around
    succ = [row.index(1) for row in sub]
    v = 0
    for _ in range(len(sub) - 1):
        v = succ[v]
        if v == 0:
            return False
    return succ[v] == 0


def check_simple(q: Quiver, e: Sequence[int]) -> SimplicityVerdict:
    """Classify ``e`` and name the condition that decided it (vertices 1-based)."""
    e = as_dimvec(q, e)
    idx = list(compress(range(len(e)), e))
    n = len(idx)
    if not n:
        raise DomainError("the zero vector is not a candidate simple dimension vector")
    rows = q.arrows
    if n == 1:
        sub = [[rows[idx[0]][idx[0]]]]
        vals = [e[idx[0]]]
    else:
        pick = itemgetter(*idx)
        sub = [list(pick(rows[i])) for i in idx]
        vals = list(pick(e))

    if n == 1 and sub[0][0] == 0:
        if vals[0] == 1:
            return SimplicityVerdict(True, "vertex simple")
        return SimplicityVerdict(False, "loopless vertex with entry > 1")

    # unit in- and out-degrees plus strong connectivity is exactly an oriented cycle
    cycle = set(map(sum, sub)) == {1} and set(map(sum, zip(*sub))) == {1}
    if not (_single_orbit(sub) if cycle else _strongly_connected(sub)):
        return SimplicityVerdict(False, "support is not strongly connected")

    if cycle:
        if all(x == 1 for x in vals):
            return SimplicityVerdict(True, "oriented cycle with all entries 1")
        return SimplicityVerdict(False, "oriented cycle with an entry > 1")

    for a in range(n):
        # chi(e, delta_i) and chi(delta_i, e) expanded to avoid building delta_i
        left = vals[a] - sum(vals[b] * sub[b][a] for b in range(n))
        if left > 0:
            return SimplicityVerdict(False, f"chi(e, delta_{idx[a] + 1}) = {left} > 0")
        right = vals[a] - sum(sub[a][b] * vals[b] for b in range(n))
        if right > 0:
            return SimplicityVerdict(False, f"chi(delta_{idx[a] + 1}, e) = {right} > 0")
    return SimplicityVerdict(True, "Euler form inequalities hold on the support")


def is_simple_dimvec(q: Quiver, e: Sequence[int]) -> bool:
    return check_simple(q, e).simple


def enumerate_simple_dimvecs(q: Quiver, total_bound: int) -> list[tuple[int, ...]]:
    """All simple dimension vectors with total between 1 and ``total_bound``, lexicographically."""
    if total_bound < 1:
        raise DomainError(f"total_bound must be >= 1, got {total_bound}")
    return [e for e in _bounded_vectors(q.k, total_bound) if any(e) and check_simple(q, e).simple]


def _bounded_vectors(k: int, budget: int):
    """Vectors of length ``k`` with entry sum at most ``budget``, lexicographically."""
    if k == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in _bounded_vectors(k - 1, budget - first):
            yield (first,) + rest
