"""Selects the compiled mod-p kernels when built, else the pure-Python ones."""
from __future__ import annotations

from . import _modp_py

try:
    from . import _modp_ext
except ImportError:  # extension not built
    _modp_ext = None

BACKENDS = {"python": _modp_py}
if _modp_ext is not None:
    BACKENDS["cython"] = _modp_ext

BACKEND = "cython" if _modp_ext is not None else "python"


def get(name: str | None = None):
    """Kernel module by name; ``None`` means the active default."""
    name = BACKEND if name is None else name
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
