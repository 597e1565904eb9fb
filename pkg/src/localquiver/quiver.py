"""Quivers, dimension vectors and the Euler form.

A quiver is stored as a square matrix of arrow counts: ``arrows[i][j]`` is the
number of arrows from vertex ``i`` to vertex ``j`` (the diagonal counts loops).
Vertices are 0-based here; user-facing code converts to 1-based.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import DimensionError, DomainError

MAX_ENTRY = 2**31
INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

DimVector = tuple[int, ...]
EulerMatrix = tuple[tuple[int, ...], ...]


def _check_int(value, what: str) -> int:
    if type(value) is int and 0 <= value < MAX_ENTRY:
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        try:
            as_int = int(value)
        except (TypeError, ValueError):
            raise DomainError(f"{what} must be an integer, got {value!r}") from None
        if as_int != value:
            raise DomainError(f"{what} must be an integer, got {value!r}")
        value = as_int
    if value < 0:
        raise DomainError(f"{what} must be non-negative, got {value}")
    if value >= MAX_ENTRY:
        raise DomainError(f"{what} exceeds 2^31: {value}")
    return value


def _check_ints(values: Iterable, what: str) -> tuple[int, ...]:
    vals = tuple(values)
    if not vals or (set(map(type, vals)) == {int} and min(vals) >= 0 and max(vals) < MAX_ENTRY):
        return vals
    return tuple(_check_int(v, what) for v in vals)


@dataclass(frozen=True)
class Quiver:
    """Finite quiver given by its arrow-count matrix."""

    arrows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(_check_ints(row, "arrow count") for row in self.arrows)
        k = len(rows)
        if k < 1:
            raise DomainError("a quiver needs at least one vertex")
        for row in rows:
            if len(row) != k:
                raise DimensionError(f"arrow matrix must be {k}x{k}")
        object.__setattr__(self, "arrows", rows)

    @property
    def k(self) -> int:
        return len(self.arrows)

    @classmethod
    def from_arrows(cls, k: int, triples: Iterable[tuple[int, int, int]]) -> "Quiver":
        """Build from 0-based ``(tail, head, count)`` triples; repeated pairs add up."""
        if k < 1:
            raise DomainError("a quiver needs at least one vertex")
        mat = [[0] * k for _ in range(k)]
        for i, j, count in triples:
            if not (0 <= i < k and 0 <= j < k):
                raise DomainError(f"arrow ({i}, {j}) outside vertex range 0..{k - 1}")
            mat[i][j] += _check_int(count, "arrow count")
        return cls(tuple(tuple(r) for r in mat))

    @classmethod
    def cycle(cls, length: int) -> "Quiver":
        """Oriented cycle 0 -> 1 -> ... -> length-1 -> 0 (type A~_{length-1})."""
        return cls.from_arrows(length, [(i, (i + 1) % length, 1) for i in range(length)])

    @classmethod
    def loops(cls, count: int) -> "Quiver":
        """One vertex carrying ``count`` loops."""
        return cls(((count,),))

    def arrow_list(self) -> list[tuple[int, int]]:
        """All arrows as (tail, head) pairs, in row-major order with repetition."""
        return [
            (i, j)
            for i, row in enumerate(self.arrows)
            for j, count in enumerate(row)
            for _ in range(count)
        ]

    def num_arrows(self) -> int:
        return sum(map(sum, self.arrows))

    def permuted(self, perm: Sequence[int]) -> "Quiver":
        """Relabel vertex ``i`` as ``perm[i]``."""
        k = self.k
        if sorted(perm) != list(range(k)):
            raise DomainError(f"{perm!r} is not a permutation of range({k})")
        mat = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                mat[perm[i]][perm[j]] = self.arrows[i][j]
        return Quiver(tuple(tuple(r) for r in mat))

    def induced(self, verts: Iterable[int]) -> "Quiver":
        """Full subquiver on ``verts`` (sorted), keeping only arrows inside it."""
        vs = sorted(set(verts))
        return Quiver(tuple(tuple(self.arrows[i][j] for j in vs) for i in vs))


def as_dimvec(q: Quiver, values: Sequence[int]) -> DimVector:
    """Validate ``values`` as a dimension vector for ``q``."""
    vec = _check_ints(values, "dimension vector entry")
    if len(vec) != q.k:
        raise DimensionError(f"dimension vector has length {len(vec)}, quiver has {q.k} vertices")
    return vec


def vertex_simple(k: int, i: int) -> DimVector:
    return tuple(1 if j == i else 0 for j in range(k))


def permute_vector(vec: Sequence[int], perm: Sequence[int]) -> DimVector:
    """Companion of :meth:`Quiver.permuted`: entry ``i`` moves to position ``perm[i]``."""
    out = [0] * len(vec)
    for i, v in enumerate(vec):
        out[perm[i]] = v
    return tuple(out)


def euler_matrix(q: Quiver) -> EulerMatrix:
    """c[i][j] = delta_ij - #arrows(i -> j)."""
    return tuple(
        tuple((1 if i == j else 0) - q.arrows[i][j] for j in range(q.k)) for i in range(q.k)
    )


def euler_form(q: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    """Bilinear Euler form ``a . c . b^T``.

    Raises :class:`DimensionError` on length mismatch and :class:`OverflowError`
    if the value leaves the signed 64-bit range.
    """
    if len(a) != q.k or len(b) != q.k:
        raise DimensionError(
            f"euler_form needs vectors of length {q.k}, got {len(a)} and {len(b)}"
        )
    total = 0
    for i in range(q.k):
        if not a[i]:
            continue
        row = q.arrows[i]
        for j in range(q.k):
            if b[j]:
                total += a[i] * ((1 if i == j else 0) - row[j]) * b[j]
    if not INT64_MIN <= total <= INT64_MAX:
        raise OverflowError(f"Euler form value {total} overflows 64-bit range")
    return total


def support(e: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(e) if x > 0)


def _reachable(q: Quiver, start: int, verts: frozenset[int], reverse: bool) -> set[int]:
    seen = {start}
    todo = deque([start])
    while todo:
        v = todo.popleft()
        for w in verts:
            count = q.arrows[w][v] if reverse else q.arrows[v][w]
            if count and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def _vertex_set(q: Quiver, verts: Iterable[int]) -> frozenset[int]:
    vs = frozenset(verts)
    if not vs:
        raise DomainError("vertex set must be non-empty")
    bad = [v for v in vs if not 0 <= v < q.k]
    if bad:
        raise DomainError(f"vertices {sorted(bad)} not in quiver with {q.k} vertices")
    return vs


def is_strongly_connected(q: Quiver, verts: Iterable[int]) -> bool:
    """Whether the induced subquiver on ``verts`` is strongly connected.

    A single vertex counts as strongly connected whatever its loops.
    """
    vs = _vertex_set(q, verts)
    start = min(vs)
    return (
        len(_reachable(q, start, vs, reverse=False)) == len(vs)
        and len(_reachable(q, start, vs, reverse=True)) == len(vs)
    )


def is_oriented_cycle(q: Quiver, verts: Iterable[int]) -> bool:
    """Whether the induced subquiver on ``verts`` is an oriented cycle A~_l.

    One vertex with exactly one loop is the cycle A~_0; a bare vertex is not a cycle.
    """
    vs = _vertex_set(q, verts)
    return has_unit_degrees(q, vs) and is_strongly_connected(q, vs)


def has_unit_degrees(q: Quiver, verts: frozenset[int]) -> bool:
    """Every vertex of ``verts`` has in- and out-degree 1 inside ``verts``."""
    for v in verts:
        if sum(q.arrows[v][w] for w in verts) != 1 or sum(q.arrows[w][v] for w in verts) != 1:
            return False
    return True
