"""Finite-field oracle: random quiver representations and exact Hom/Ext ranks.

Random matrices over a large prime field stand in for generic complex
points, so "generic" statements hold up to failure probability O(deg / p) per
sample. Every rank is computed exactly mod p.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels
from .exceptions import DimensionError, DomainError
from .quiver import Quiver, as_dimvec

DEFAULT_PRIME = 2147483647
MIN_PRIME = 2**20


@lru_cache(maxsize=64)
def _isprime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p <= MIN_PRIME:
            raise DomainError(f"field modulus must exceed 2^20, got {self.p}")
        if self.p >= 2**31:
            raise DomainError(f"field modulus must be below 2^31, got {self.p}")
        if not _isprime(self.p):
            raise DomainError(f"{self.p} is not prime")


@dataclass(frozen=True, eq=False)
class QuiverRep:
    """A representation of ``quiver`` over F_p.

    ``mats[a]`` is the ``dims[head] x dims[tail]`` matrix of the a-th arrow of
    ``quiver.arrow_list()``.
    """

    quiver: Quiver
    dims: tuple[int, ...]
    mats: tuple[np.ndarray, ...]
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        dims = as_dimvec(self.quiver, self.dims)
        arrows = self.quiver.arrow_list()
        if len(self.mats) != len(arrows):
            raise DimensionError(f"{len(self.mats)} matrices for {len(arrows)} arrows")
        mats = []
        for (i, j), m in zip(arrows, self.mats):
            m = np.asarray(m, dtype=np.int64).reshape(dims[j], dims[i]) % self.p
            mats.append(m)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mats", tuple(mats))

    def flat(self):
        """Kernel arguments ``(tails, heads, dims, offsets, flat)``."""
        return _flatten(self.quiver, self.dims, self.mats)


def _layout(q: Quiver, dims: Sequence[int]):
    """Arrow tails, heads, dims and row-major offsets of the flattened matrices."""
    arrows = q.arrow_list()
    tails = np.array([i for i, _ in arrows], dtype=np.int64)
    heads = np.array([j for _, j in arrows], dtype=np.int64)
    sizes = np.array([dims[j] * dims[i] for i, j in arrows], dtype=np.int64)
    offsets = np.zeros(len(arrows), dtype=np.int64)
    if len(arrows):
        offsets[1:] = np.cumsum(sizes)[:-1]
    return tails, heads, np.asarray(dims, dtype=np.int64), offsets, int(sizes.sum())


def _flatten(q: Quiver, dims: Sequence[int], mats: Sequence[np.ndarray]):
    tails, heads, dims_arr, offsets, _ = _layout(q, dims)
    flat = np.concatenate([m.ravel() for m in mats]) if mats else np.zeros(0, dtype=np.int64)
    return tails, heads, dims_arr, offsets, flat


def _random_entries(size: int, seed, p: int) -> np.ndarray:
    return np.random.default_rng(seed).integers(0, p, size=size, dtype=np.int64)


def random_rep(q: Quiver, dims: Sequence[int], seed, p: int = DEFAULT_PRIME) -> QuiverRep:
    """Representation with independent uniform entries in F_p, reproducible from ``seed``."""
    PrimeField(p)
    dims = as_dimvec(q, dims)
    _, _, _, offsets, size = _layout(q, dims)
    entries = _random_entries(size, seed, p)
    mats = [
        entries[off:off + dims[j] * dims[i]].reshape(dims[j], dims[i])
        for off, (i, j) in zip(offsets, q.arrow_list())
    ]
    return QuiverRep(q, dims, tuple(mats), p)


def _check_pair(m: QuiverRep, n: QuiverRep) -> None:
    if m.quiver != n.quiver:
        raise DomainError("representations live on different quivers")
    if m.p != n.p:
        raise DomainError(f"representations over different fields F_{m.p}, F_{n.p}")


def hom_system(m: QuiverRep, n: QuiverRep) -> np.ndarray:
    """Matrix of ``(f_i) -> (f_j M_a - N_a f_i)_a`` over F_p.

    Unknowns are ordered vertex-major (``f_i`` is ``dims_N[i] x dims_M[i]``,
    row-major); equations arrow-major in ``arrow_list()`` order.
    """
    _check_pair(m, n)
    p = m.p
    q = m.quiver
    dm, dn = m.dims, n.dims
    col_off = np.concatenate([[0], np.cumsum([dn[i] * dm[i] for i in range(q.k)])]).astype(int)
    arrows = q.arrow_list()
    row_sizes = [dn[j] * dm[i] for i, j in arrows]
    row_off = np.concatenate([[0], np.cumsum(row_sizes)]).astype(int) if arrows else np.zeros(1, int)
    system = np.zeros((int(row_off[-1]), int(col_off[-1])), dtype=np.int64)
    for a, (i, j) in enumerate(arrows):
        r0, r1 = row_off[a], row_off[a + 1]
        if r0 == r1:
            continue
        # vec(f_j M_a) = (I kron M_a^T) vec(f_j);  vec(N_a f_i) = (N_a kron I) vec(f_i)
        system[r0:r1, col_off[j]:col_off[j + 1]] += np.kron(
            np.eye(dn[j], dtype=np.int64), m.mats[a].T
        )
        system[r0:r1, col_off[i]:col_off[i + 1]] -= np.kron(n.mats[a], np.eye(dm[i], dtype=np.int64))
    return system % p


def _rank(system: np.ndarray, p: int, backend: str | None) -> int:
    if system.size == 0:
        return 0
    return int(_kernels.get(backend).rank_mod_p(system, p))


def hom_dim(m: QuiverRep, n: QuiverRep, backend: str | None = None) -> int:
    """dim Hom(M, N): nullity of the intertwiner system."""
    system = hom_system(m, n)
    return system.shape[1] - _rank(system, m.p, backend)


def ext_dim(m: QuiverRep, n: QuiverRep, backend: str | None = None) -> int:
    """dim Ext^1(M, N): cokernel dimension of the intertwiner system."""
    system = hom_system(m, n)
    return system.shape[0] - _rank(system, m.p, backend)


def path_algebra_dim(m: QuiverRep, backend: str | None = None) -> int:
    """Dimension of the image of the path algebra in ``End(sum_i M_i)``."""
    return int(_kernels.get(backend).path_algebra_dim(*m.flat(), m.p))


def is_absolutely_simple(m: QuiverRep, backend: str | None = None) -> bool:
    """Burnside: M is absolutely simple iff the path algebra maps onto ``End(M)``."""
    n = sum(m.dims)
    return n > 0 and path_algebra_dim(m, backend) == n * n


def oracle_is_simple(
    q: Quiver,
    e: Sequence[int],
    trials: int = 3,
    seed: int = 0,
    p: int = DEFAULT_PRIME,
    backend: str | None = None,
) -> bool:
    """True iff one of ``trials`` random representations of dimension ``e`` is absolutely simple.

    ``True`` is certain; ``False`` is probabilistic evidence.
    """
    e = as_dimvec(q, e)
    if not any(e):
        raise DomainError("the zero vector has no simple representations")
    PrimeField(p)
    kernel = _kernels.get(backend)
    tails, heads, dims, offsets, size = _layout(q, e)
    n = sum(e)
    # same entries random_rep(q, e, (seed, t), p) would draw, without the wrapper
    for t in range(trials):
        flat = _random_entries(size, (seed, t), p)
        if kernel.path_algebra_dim(tails, heads, dims, offsets, flat, p) == n * n:
            return True
    return False


def oracle_is_brick(
    q: Quiver,
    e: Sequence[int],
    trials: int = 3,
    seed: int = 0,
    p: int = DEFAULT_PRIME,
    backend: str | None = None,
) -> bool:
    """Schur test: some random representation has ``End(M) = F_p``.

    Necessary for simplicity but weaker: for ``1 -> 2`` and ``e = (1, 1)`` the
    generic representation is a brick without being simple.
    """
    e = as_dimvec(q, e)
    if not any(e):
        raise DomainError("the zero vector has no representations to test")
    for t in range(trials):
        m = random_rep(q, e, (seed, t), p)
        if hom_dim(m, m, backend) == 1:
            return True
    return False


def oracle_ext(
    q: Quiver,
    e: Sequence[int],
    f: Sequence[int],
    seed: int = 0,
    p: int = DEFAULT_PRIME,
    backend: str | None = None,
) -> dict[str, int]:
    """Hom and Ext^1 dimensions between random representations of dimensions ``e`` and ``f``.

    The two representations are sampled independently, so for simple
    dimension vectors they are non-isomorphic with high probability.
    """
    m = random_rep(q, e, (seed, 0), p)
    n = random_rep(q, f, (seed, 1), p)
    system = hom_system(m, n)
    rank = _rank(system, p, backend)
    return {"hom": system.shape[1] - rank, "ext": system.shape[0] - rank}
