# Compiled mod-p kernels; semantics match localquiver._modp_py exactly.
# Entries are reduced into [0, p) with p < 2^31, so a*b + c fits in int64.
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()


cdef inline int64_t _inv(int64_t a, int64_t p) nogil:
    cdef int64_t result = 1, base = a % p, e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rank_mod_p(a, int64_t p):
    cdef int64_t[:, ::1] m = np.ascontiguousarray(np.asarray(a, dtype=np.int64) % p)
    cdef Py_ssize_t nrows = m.shape[0], ncols = m.shape[1]
    cdef Py_ssize_t rank = 0, col, r, c, pivot
    cdef int64_t inv, f, tmp
    if nrows == 0 or ncols == 0:
        return 0
    with nogil:
        for col in range(ncols):
            pivot = -1
            for r in range(rank, nrows):
                if m[r, col] != 0:
                    pivot = r
                    break
            if pivot < 0:
                continue
            if pivot != rank:
                for c in range(ncols):
                    tmp = m[rank, c]
                    m[rank, c] = m[pivot, c]
                    m[pivot, c] = tmp
            inv = _inv(m[rank, col], p)
            for c in range(col, ncols):
                m[rank, c] = m[rank, c] * inv % p
            for r in range(rank + 1, nrows):
                f = m[r, col]
                if f != 0:
                    f = p - f
                    for c in range(col, ncols):
                        m[r, c] = (m[r, c] + f * m[rank, c]) % p
            rank += 1
            if rank == nrows:
                break
    return rank


def path_algebra_dim(tails, heads, dims, offsets, flat, int64_t p):
    cdef int64_t[::1] tl = np.ascontiguousarray(tails, dtype=np.int64)
    cdef int64_t[::1] hd = np.ascontiguousarray(heads, dtype=np.int64)
    cdef int64_t[::1] dm = np.ascontiguousarray(dims, dtype=np.int64)
    cdef int64_t[::1] of = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef int64_t[::1] fl = np.ascontiguousarray(np.asarray(flat, dtype=np.int64) % p)
    cdef Py_ssize_t k = dm.shape[0], narr = tl.shape[0]
    cdef Py_ssize_t n = 0, maxd = 0, i
    for i in range(k):
        n += dm[i]
        if dm[i] > maxd:
            maxd = dm[i]
    if n == 0:
        return 0

    cdef Py_ssize_t maxlen = maxd * maxd
    # basis[t, row, :] holds echelon rows of W[s][t]; row j of vertex t is queue-addressable
    cdef int64_t[:, :, ::1] basis = np.zeros((k, maxlen, maxlen), dtype=np.int64)
    cdef int64_t[:, ::1] pivots = np.zeros((k, maxlen), dtype=np.int64)
    cdef int64_t[::1] nrows = np.zeros(k, dtype=np.int64)
    cdef int64_t[::1] y = np.zeros(maxlen, dtype=np.int64)
    cdef int64_t[:, ::1] queue = np.zeros((n * maxd + 1, 2), dtype=np.int64)

    cdef Py_ssize_t s, t, h, a, r, c, j, q, qhead, qtail, ds, dt, dh, length, off, piv
    cdef int64_t found, target, total = 0, acc, f, inv

    with nogil:
        for s in range(k):
            ds = dm[s]
            if ds == 0:
                continue
            for t in range(k):
                nrows[t] = 0
            # identity is already in echelon form with pivots at diagonal positions
            for r in range(ds * ds):
                basis[s, 0, r] = 0
            for r in range(ds):
                basis[s, 0, r * ds + r] = 1
            pivots[s, 0] = 0
            nrows[s] = 1
            found = 1
            target = ds * n
            qhead = 0
            qtail = 1
            queue[0, 0] = s
            queue[0, 1] = 0
            while qhead < qtail and found < target:
                # LIFO to mirror the Python reference's list.pop()
                qtail -= 1
                t = queue[qtail, 0]
                j = queue[qtail, 1]
                dt = dm[t]
                for a in range(narr):
                    if tl[a] != t:
                        continue
                    h = hd[a]
                    dh = dm[h]
                    if dh == 0:
                        continue
                    off = of[a]
                    length = dh * ds
                    for r in range(dh):
                        for c in range(ds):
                            acc = 0
                            for i in range(dt):
                                acc = (acc + fl[off + r * dt + i] * basis[t, j, i * ds + c]) % p
                            y[r * ds + c] = acc
                    for i in range(nrows[h]):
                        piv = pivots[h, i]
                        f = y[piv]
                        if f != 0:
                            f = p - f
                            for q in range(length):
                                y[q] = (y[q] + f * basis[h, i, q]) % p
                    piv = -1
                    for q in range(length):
                        if y[q] != 0:
                            piv = q
                            break
                    if piv < 0:
                        continue
                    inv = _inv(y[piv], p)
                    i = nrows[h]
                    for q in range(length):
                        basis[h, i, q] = y[q] * inv % p
                    pivots[h, i] = piv
                    nrows[h] = i + 1
                    found += 1
                    queue[qtail, 0] = h
                    queue[qtail, 1] = i
                    qtail += 1
                    if found >= target:
                        break
            total += found
    return total
