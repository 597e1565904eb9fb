"""Pure-Python mod-p kernels; reference for the Cython versions in ``_modp_ext.pyx``.

Arrow matrices are passed flattened: arrow ``a`` (``tails[a] -> heads[a]``)
occupies ``flat[offsets[a]:offsets[a] + dims[heads[a]] * dims[tails[a]]]`` in
row-major order, shape ``(dims[head], dims[tail])``.
"""
from __future__ import annotations


def rank_mod_p(a, p: int) -> int:
    rows = [[int(x) % p for x in row] for row in a]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = pow(prow[col], p - 2, p)
        prow = rows[rank] = [x * inv % p for x in prow]
        for r in range(rank + 1, len(rows)):
            factor = rows[r][col]
            if factor:
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


class _Echelon:
    """Semi-echelon basis: row ``b`` has pivot ``c`` with ``b[c] == 1`` and zeros at earlier pivots."""

    def __init__(self, p: int):
        self.p = p
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    def reduce(self, v: list[int]) -> list[int]:
        p = self.p
        v = list(v)
        for row, c in zip(self.rows, self.pivots):
            f = v[c]
            if f:
                v = [(x - f * y) % p for x, y in zip(v, row)]
        return v

    def insert(self, v: list[int]) -> list[int] | None:
        """Add ``v`` if independent; return the reduced vector or None."""
        v = self.reduce(v)
        c = next((i for i, x in enumerate(v) if x), None)
        if c is None:
            return None
        inv = pow(v[c], self.p - 2, self.p)
        v = [x * inv % self.p for x in v]
        self.rows.append(v)
        self.pivots.append(c)
        return v


def path_algebra_dim(tails, heads, dims, offsets, flat, p: int) -> int:
    """Dimension of the image of the path algebra in ``End(sum_i V_i)``.

    The image splits into blocks ``W[s][t]`` inside ``Hom(V_s, V_t)``; each is
    grown from the identity at ``s`` by left multiplication with arrow matrices
    until closed.
    """
    k = len(dims)
    dims = [int(d) for d in dims]
    n = sum(dims)
    out_arrows = [[] for _ in range(k)]
    for a in range(len(tails)):
        t, h = int(tails[a]), int(heads[a])
        if dims[t] and dims[h]:
            off = int(offsets[a])
            size = dims[h] * dims[t]
            m = [int(x) for x in flat[off:off + size]]
            out_arrows[t].append((h, [m[r * dims[t]:(r + 1) * dims[t]] for r in range(dims[h])]))

    total = 0
    for s in range(k):
        ds = dims[s]
        if not ds:
            continue
        spaces = [_Echelon(p) for _ in range(k)]
        target = ds * n
        found = 0
        ident = [1 if r == c else 0 for r in range(ds) for c in range(ds)]
        spaces[s].insert(ident)
        found += 1
        queue = [(s, ident)]
        while queue and found < target:
            t, x = queue.pop()
            dt = dims[t]
            for h, m in out_arrows[t]:
                dh = dims[h]
                # y = m @ x with m (dh x dt) and x (dt x ds)
                y = []
                for r in range(dh):
                    mr = m[r]
                    for c in range(ds):
                        y.append(sum(mr[i] * x[i * ds + c] for i in range(dt)) % p)
                v = spaces[h].insert(y)
                if v is not None:
                    found += 1
                    queue.append((h, v))
        total += found
    return total
