"""Component semigroups given by finitely many generators, and built-in settings.

The semigroup of components is modelled inside an ambient ``N^m``: each
generator ``beta_i`` is a coordinate vector, addition is coordinatewise, and the
total dimension is a fixed linear functional (``augmentation``) on ``N^m``.
Relations of the abstract semigroup show up as several decompositions of the
same ambient vector.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from operator import mul
from typing import Sequence

from .exceptions import DimensionError, DomainError
from .quiver import Quiver, _check_ints
from .simple import is_simple_dimvec


@dataclass(frozen=True)
class AmbientVector:
    coords: tuple[int, ...]
    total_dim: int


@dataclass(frozen=True)
class AlgebraSetting:
    """The quiver setting ``(Q_A, alpha_A)`` with its semigroup generators.

    ``augmentation`` is the weight vector w with ``|x| = w . x`` on ambient
    coordinates; ``alpha[i]`` must equal ``|generators[i]|``.
    """

    quiver: Quiver
    alpha: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    augmentation: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        k = self.quiver.k
        alpha = _check_ints(self.alpha, "alpha entry")
        gens = tuple(_check_ints(g, "generator coordinate") for g in self.generators)
        aug = _check_ints(self.augmentation, "augmentation weight")
        if len(alpha) != k:
            raise DimensionError(f"alpha has {len(alpha)} entries, quiver has {k} vertices")
        if len(gens) != k:
            raise DimensionError(f"{len(gens)} generators for a quiver with {k} vertices")
        if any(a < 1 for a in alpha):
            raise DomainError("alpha entries must be >= 1")
        m = len(aug)
        for i, g in enumerate(gens):
            if len(g) != m:
                raise DimensionError(f"generator {i + 1} has {len(g)} coordinates, ambient rank is {m}")
            if not any(g):
                raise DomainError(f"generator {i + 1} is the zero vector")
            total = sum(map(mul, aug, g))
            if total != alpha[i]:
                raise DomainError(
                    f"generator {i + 1} has total dimension {total} but alpha says {alpha[i]}"
                )
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "augmentation", aug)

    @property
    def ambient_rank(self) -> int:
        return len(self.augmentation)

    def vector(self, coords: Sequence[int]) -> AmbientVector:
        coords = _check_ints(coords, "ambient coordinate")
        if len(coords) != self.ambient_rank:
            raise DimensionError(
                f"ambient vector has {len(coords)} coordinates, expected {self.ambient_rank}"
            )
        return AmbientVector(coords, sum(w * c for w, c in zip(self.augmentation, coords)))

    def generator_vectors(self) -> list[AmbientVector]:
        return [self.vector(g) for g in self.generators]

    def combine(self, coeffs: Sequence[int]) -> AmbientVector:
        """The ambient vector ``sum_i coeffs[i] * beta_i``."""
        if len(coeffs) != len(self.generators):
            raise DimensionError(f"need {len(self.generators)} coefficients, got {len(coeffs)}")
        m = self.ambient_rank
        return self.vector(
            [sum(a * g[c] for a, g in zip(coeffs, self.generators)) for c in range(m)]
        )


def _coords(setting: AlgebraSetting, target) -> tuple[int, ...]:
    if isinstance(target, AmbientVector):
        vec = setting.vector(target.coords)
        if vec.total_dim != target.total_dim:
            raise DomainError(
                f"target declares total dimension {target.total_dim}, augmentation gives {vec.total_dim}"
            )
        return vec.coords
    return setting.vector(target).coords


def decompose(setting: AlgebraSetting, target) -> list[tuple[int, ...]]:
    """Every ``a`` in ``N^k`` with ``sum_i a_i beta_i == target``.

    Sorted lexicographically decreasing, so greedy decompositions (large
    coefficients on early generators) come first. An empty list means the
    target is not in the semigroup.
    """
    coords = _coords(setting, target)
    if not any(coords):
        raise DomainError("target must be nonzero")
    gens = setting.generators
    k = len(gens)
    found: set[tuple[int, ...]] = set()
    prefix = [0] * k

    def search(i: int, rest: list[int]) -> None:
        if i == k:
            if not any(rest):
                found.add(tuple(prefix))
            return
        g = gens[i]
        bound = min(rest[c] // g[c] for c in range(len(g)) if g[c])
        for a in range(bound + 1):
            prefix[i] = a
            search(i + 1, [r - a * x for r, x in zip(rest, g)])
        prefix[i] = 0

    search(0, list(coords))
    return sorted(found, reverse=True)


def is_simp(setting: AlgebraSetting, target) -> tuple[bool, tuple[int, ...] | None]:
    """Whether ``target`` is a simple dimension vector of the algebra.

    Returns the first decomposition (in :func:`decompose` order) that is a
    simple dimension vector of ``Q_A`` as witness, or ``None``.
    """
    for eps in decompose(setting, target):
        if is_simple_dimvec(setting.quiver, eps):
            return True, eps
    return False, None


def westbury_check(a1: int, a2: int, b1: int, b2: int, b3: int) -> bool:
    """Westbury's criterion for PSL_2(Z): every b_j is at most every a_i."""
    if a1 + a2 != b1 + b2 + b3:
        raise DomainError(f"unbalanced vector: a1+a2 = {a1 + a2}, b1+b2+b3 = {b1 + b2 + b3}")
    return max(b1, b2, b3) <= min(a1, a2)


# -- built-in settings -------------------------------------------------------


def builtin_path_algebra(q: Quiver) -> AlgebraSetting:
    """Path algebra of ``q``: ``Q_A = q`` and ``alpha_A = (1, ..., 1)``."""
    k = q.k
    basis = tuple(tuple(1 if c == i else 0 for c in range(k)) for i in range(k))
    return AlgebraSetting(q, (1,) * k, basis, (1,) * k, name="path-algebra")


def builtin_curve() -> AlgebraSetting:
    """Coordinate ring of a smooth affine curve: one vertex with one loop."""
    return AlgebraSetting(Quiver.loops(1), (1,), ((1,),), (1,), name="curve")


def builtin_numerical_semigroup(generators: Sequence[int], loops: int = 0) -> AlgebraSetting:
    """Sub-semigroup of ``N`` generated by ``generators``.

    Only the semigroup is modelled; the quiver has no arrows other than
    ``loops`` loops at each vertex.
    """
    gens = [int(g) for g in generators]
    if not gens or any(g < 1 for g in gens):
        raise DomainError("numerical semigroup generators must be positive integers")
    if len(set(gens)) != len(gens):
        raise DomainError("numerical semigroup generators must be distinct")
    k = len(gens)
    q = Quiver.from_arrows(k, [(i, i, loops) for i in range(k)])
    return AlgebraSetting(
        q, tuple(gens), tuple((g,) for g in gens), (1,), name="numerical-semigroup"
    )


def builtin_hereditary_order(partitions: Sequence[Sequence[int]]) -> AlgebraSetting:
    """Hereditary order ramified at ``len(partitions)`` points.

    Point ``i`` with partition ``(n_1(i), ..., n_k(i))`` of the PI-degree ``n``
    contributes an oriented ``k``-cycle; generators stay free in ``N^(sum k_i)``
    even though every point's cycle sums to the same top component.
    """
    parts = [[int(x) for x in p] for p in partitions]
    if not parts:
        raise DomainError("need at least one ramification point")
    for p in parts:
        if len(p) < 2:
            raise DomainError(f"partition {p} must have at least 2 parts")
        if any(x < 1 for x in p):
            raise DomainError(f"partition {p} has a non-positive part")
    totals = {sum(p) for p in parts}
    if len(totals) != 1:
        raise DomainError(f"partitions sum to different degrees {sorted(totals)}")

    triples = []
    offset = 0
    for p in parts:
        k_i = len(p)
        triples += [(offset + j, offset + (j + 1) % k_i, 1) for j in range(k_i)]
        offset += k_i
    alpha = tuple(x for p in parts for x in p)
    basis = tuple((0,) * i + (1,) + (0,) * (offset - i - 1) for i in range(offset))
    return AlgebraSetting(
        Quiver.from_arrows(offset, triples), alpha, basis, alpha, name="hereditary-order"
    )


PSL2Z_LABELS = ("v11", "v12", "v13", "v21", "v22", "v23")


def builtin_psl2z() -> AlgebraSetting:
    """Group algebra of PSL_2(Z) = Z/2 * Z/3.

    Vertices ``v_ij`` pair the i-th eigenspace of the order-2 generator with the
    j-th of the order-3 one; ambient coordinates are ``(a1, a2; b1, b2, b3)``.
    """
    pairs = [(i, j) for i in range(2) for j in range(3)]
    triples = []
    for s, (i, j) in enumerate(pairs):
        for t, (i2, j2) in enumerate(pairs):
            if i != i2 and j != j2:
                triples.append((s, t, 1))
    gens = tuple(
        tuple([1 if c == i else 0 for c in range(2)] + [1 if c == j else 0 for c in range(3)])
        for i, j in pairs
    )
    return AlgebraSetting(
        Quiver.from_arrows(6, triples), (1,) * 6, gens, (1, 1, 0, 0, 0), name="psl2z"
    )


@dataclass(frozen=True)
class Block:
    """Block ``B_ij`` of the Morita-equivalent matrix algebra built from ``Q_A``."""

    rows: int
    cols: int
    reachable: bool
    path_counts: tuple[int, ...]


def _matmul(x: list[list[int]], y: list[list[int]]) -> list[list[int]]:
    n = len(x)
    return [[sum(x[i][t] * y[t][j] for t in range(n)) for j in range(n)] for i in range(n)]


def describe_B(setting: AlgebraSetting, max_path_len: int) -> dict[tuple[int, int], Block]:
    """Shape of the block algebra B: block (i, j) is ``n_i x n_j`` with entries
    spanned by the paths ``v_i -> v_j``.

    ``path_counts[L]`` is entry (i, j) of the L-th power of the arrow matrix.
    Reachability counts the trivial path at i == j.
    """
    if max_path_len < 0:
        raise DomainError("max_path_len must be non-negative")
    q = setting.quiver
    k = q.k
    adj = [list(r) for r in q.arrows]
    power = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    counts = [[[] for _ in range(k)] for _ in range(k)]
    for _ in range(max_path_len + 1):
        for i in range(k):
            for j in range(k):
                counts[i][j].append(power[i][j])
        power = _matmul(power, adj)

    # reflexive-transitive closure
    reach = [[i == j or adj[i][j] > 0 for j in range(k)] for i in range(k)]
    for t in range(k):
        for i in range(k):
            if reach[i][t]:
                for j in range(k):
                    if reach[t][j]:
                        reach[i][j] = True

    return {
        (i, j): Block(setting.alpha[i], setting.alpha[j], reach[i][j], tuple(counts[i][j]))
        for i in range(k)
        for j in range(k)
    }
