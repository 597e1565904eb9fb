"""JSON file formats and DOT export.

All vertex indices in files are 1-based. ``dumps`` produces a canonical
layout so that parse-then-emit round trips are byte-identical.
"""
from __future__ import annotations

import json
import re
from typing import Any, Sequence

from .exceptions import DomainError
from .local import LocalQuiverSetting, SemisimpleType
from .quiver import Quiver
from .semigroup import AlgebraSetting

_SCALAR_LIST = re.compile(r"\[\s*([-\d,\s]*?)\s*\]")


def dumps(obj: Any) -> str:
    """Canonical JSON: two-space indent, scalar lists kept on one line."""
    text = json.dumps(obj, indent=2)

    def collapse(m: re.Match) -> str:
        items = [x.strip() for x in m.group(1).split(",") if x.strip()]
        return "[" + ", ".join(items) + "]"

    return _SCALAR_LIST.sub(collapse, text) + "\n"


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise DomainError(f"{what} must be a list of integers, got {value!r}")
    return value


# -- quivers -----------------------------------------------------------------


def quiver_to_dict(q: Quiver) -> dict:
    return {
        "vertices": q.k,
        "arrows": [
            [i + 1, j + 1, c]
            for i, row in enumerate(q.arrows)
            for j, c in enumerate(row)
            if c
        ],
    }


def quiver_from_dict(data: dict) -> Quiver:
    if not isinstance(data, dict) or "vertices" not in data:
        raise DomainError("quiver object needs a 'vertices' field")
    k = data["vertices"]
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DomainError(f"'vertices' must be a positive integer, got {k!r}")
    triples = []
    for entry in data.get("arrows", []):
        t = _int_list(entry, "arrow entry")
        if len(t) != 3:
            raise DomainError(f"arrow entry must be [from, to, count], got {t}")
        frm, to, count = t
        if not (1 <= frm <= k and 1 <= to <= k):
            raise DomainError(f"arrow {t} refers to a vertex outside 1..{k}")
        triples.append((frm - 1, to - 1, count))
    return Quiver.from_arrows(k, triples)


# -- algebra settings --------------------------------------------------------


def setting_to_dict(s: AlgebraSetting) -> dict:
    return {
        "name": s.name,
        "quiver": quiver_to_dict(s.quiver),
        "alpha": list(s.alpha),
        "augmentation": list(s.augmentation),
        "generators": [
            {"coords": list(v.coords), "total_dim": v.total_dim} for v in s.generator_vectors()
        ],
    }


def _infer_augmentation(gens: list[list[int]], totals: list[int]) -> tuple[int, ...]:
    """Solve ``w . g_i = total_i`` exactly; the solution must be unique and in N^m."""
    import sympy

    m = len(gens[0])
    w = sympy.symbols(f"w0:{m}")
    sol = sympy.linsolve([sum(c * x for c, x in zip(g, w)) - t for g, t in zip(gens, totals)], w)
    if not sol:
        raise DomainError("generator total dimensions are not given by any linear augmentation")
    (point,) = sol
    if any(not val.is_Integer or val < 0 for val in point):
        raise DomainError("augmentation is not determined by the generators; give 'augmentation'")
    return tuple(int(v) for v in point)


def setting_from_dict(data: dict) -> AlgebraSetting:
    for key in ("quiver", "alpha", "generators"):
        if key not in data:
            raise DomainError(f"setting object needs a '{key}' field")
    q = quiver_from_dict(data["quiver"])
    alpha = _int_list(data["alpha"], "alpha")
    gens, totals = [], []
    for g in data["generators"]:
        if not isinstance(g, dict) or "coords" not in g:
            raise DomainError(f"generator must be an object with 'coords', got {g!r}")
        gens.append(_int_list(g["coords"], "generator coords"))
        totals.append(g.get("total_dim"))
    for i, t in enumerate(totals):
        if t is None:
            totals[i] = alpha[i] if i < len(alpha) else None
    if "augmentation" in data:
        aug = tuple(_int_list(data["augmentation"], "augmentation"))
    else:
        if not gens or len({len(g) for g in gens}) != 1:
            raise DomainError("generators must share one ambient rank")
        aug = _infer_augmentation(gens, totals)
    setting = AlgebraSetting(q, tuple(alpha), tuple(map(tuple, gens)), aug, name=data.get("name", ""))
    for i, (v, t) in enumerate(zip(setting.generator_vectors(), totals)):
        if t is not None and v.total_dim != t:
            raise DomainError(f"generator {i + 1} declares total_dim {t}, augmentation gives {v.total_dim}")
    return setting


# -- semisimple types and local settings -------------------------------------


def type_to_list(t: SemisimpleType) -> list[dict]:
    return [{"epsilon": list(eps), "mult": m} for eps, m in t.components]


def type_from_data(data) -> SemisimpleType:
    if isinstance(data, dict):
        data = data.get("components")
    if not isinstance(data, list) or not data:
        raise DomainError("semisimple type must be a non-empty list of {epsilon, mult}")
    comps = []
    for c in data:
        if not isinstance(c, dict) or "epsilon" not in c:
            raise DomainError(f"type component must have 'epsilon', got {c!r}")
        mult = c.get("mult", 1)
        if not isinstance(mult, int) or isinstance(mult, bool):
            raise DomainError(f"'mult' must be an integer, got {mult!r}")
        comps.append((tuple(_int_list(c["epsilon"], "epsilon")), mult))
    return SemisimpleType(tuple(comps))


def local_to_dict(s: LocalQuiverSetting) -> dict:
    out = quiver_to_dict(s.quiver)
    out["dimvec"] = list(s.dimvec)
    return out


def local_from_dict(data: dict) -> LocalQuiverSetting:
    q = quiver_from_dict(data)
    dimvec = tuple(_int_list(data.get("dimvec"), "dimvec"))
    if len(dimvec) != q.k:
        raise DomainError(f"dimvec has {len(dimvec)} entries for {q.k} vertices")
    return LocalQuiverSetting(q, dimvec)


# -- DOT ---------------------------------------------------------------------


def _quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def export_dot(
    q: Quiver,
    dimvec: Sequence[int] | None = None,
    names: Sequence[str] | None = None,
    graph_name: str = "Q",
) -> str:
    """Graphviz digraph with one edge per arrow; ``dimvec`` entries become vertex labels."""
    lines = [f"digraph {_quote(graph_name)} {{"]
    for i in range(q.k):
        label = names[i] if names else str(i + 1)
        if dimvec is not None:
            label = f"{label}\\n{dimvec[i]}"
        lines.append(f"  v{i + 1} [label={_quote(label)}];")
    for i, row in enumerate(q.arrows):
        for j, count in enumerate(row):
            for _ in range(count):
                lines.append(f"  v{i + 1} -> v{j + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
