"""Local quiver settings of semisimple representation types.

A semisimple representation ``S_1^e_1 + ... + S_l^e_l`` is described by its
type: the dimension vectors ``eps_i`` of the simples over ``Q_A`` (coordinates in
the semigroup generators) with multiplicities ``e_i``. Its local quiver has
one vertex per simple and ``delta_ij - chi(eps_i, eps_j)`` arrows ``i -> j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exceptions import DomainError, InconsistencyError
from .quiver import DimVector, Quiver, as_dimvec, euler_form
from .simple import check_simple


@dataclass(frozen=True)
class SemisimpleType:
    """Ordered components ``(epsilon, mult)``.

    Positions, not vectors, identify simples: two positions with the same
    epsilon stand for two non-isomorphic simples of the same dimension vector.
    """

    components: tuple[tuple[DimVector, int], ...]

    def __post_init__(self):
        comps = tuple((tuple(int(x) for x in eps), int(mult)) for eps, mult in self.components)
        if not comps:
            raise DomainError("a semisimple type needs at least one component")
        for eps, mult in comps:
            if mult < 1:
                raise DomainError(f"multiplicity must be >= 1, got {mult}")
        object.__setattr__(self, "components", comps)

    @property
    def epsilons(self) -> list[DimVector]:
        return [eps for eps, _ in self.components]

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.components)

    def __len__(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class LocalQuiverSetting:
    quiver: Quiver
    dimvec: DimVector


def _require_simple(q: Quiver, e: Sequence[int]) -> DimVector:
    e = as_dimvec(q, e)
    verdict = check_simple(q, e)
    if not verdict:
        raise DomainError(f"{e} is not a simple dimension vector: {verdict.reason}")
    return e


def ext_between_simples(q: Quiver, e: Sequence[int], f: Sequence[int], same_simple: bool) -> int:
    """dim Ext^1(S, T) for simples of dimension vectors ``e`` and ``f``.

    ``same_simple`` says S and T are the same simple (then ``e == f``).
    """
    e = _require_simple(q, e)
    f = _require_simple(q, f)
    if same_simple and e != f:
        raise DomainError("same_simple requires equal dimension vectors")
    value = (1 if same_simple else 0) - euler_form(q, e, f)
    if value < 0:
        raise InconsistencyError(f"negative Ext dimension {value} for {e}, {f}")
    return value


def local_quiver(q: Quiver, t: SemisimpleType) -> LocalQuiverSetting:
    """Local quiver setting ``(Q_xi, alpha_xi)`` of a semisimple type over ``Q_A``."""
    eps = [_require_simple(q, e) for e in t.epsilons]
    l = len(eps)
    mat = []
    for i in range(l):
        row = []
        for j in range(l):
            value = (1 if i == j else 0) - euler_form(q, eps[i], eps[j])
            if value < 0:
                raise InconsistencyError(
                    f"negative arrow count {value} from component {i + 1} to {j + 1}"
                )
            row.append(value)
        mat.append(tuple(row))
    return LocalQuiverSetting(Quiver(tuple(mat)), t.multiplicities)


def total_dimension(setting, t: SemisimpleType) -> int:
    """``sum_i e_i * |eps_i|`` where ``|eps| = sum_j eps[j] * n_j``."""
    alpha = setting.alpha
    total = 0
    for eps, mult in t.components:
        if len(eps) != len(alpha):
            raise DomainError(f"component {eps} has wrong length for alpha {alpha}")
        total += mult * sum(x * n for x, n in zip(eps, alpha))
    return total
