"""Fallback kernels: numpy-vectorised or plain-Python versions of the hot loops.

Semantics are the contract shared with the compiled lane (`_ckern`): identical
inputs must produce identical outputs, including which witness is reported
(always the lexicographically first violation in scan order).
"""

from itertools import product

import numpy as np

BACKEND_NAME = "python"

# Cap on scratch cells per chunk for the O(n^3) table scans (~32 MB of int32).
_CHUNK_CELLS = 1 << 23

# Tensor indices processed per numpy batch in scan_assoc_tensors.
_SCAN_BATCH = 1 << 17


def assoc_witness(table):
    """First (a, b, c) with t[t[a,b],c] != t[a,t[b,c]], or None.

    Scans in lexicographic (a, b, c) order.
    """
    t = np.ascontiguousarray(table)
    n = t.shape[0]
    if n == 0:
        return None
    chunk = max(1, _CHUNK_CELLS // (n * n))
    for a0 in range(0, n, chunk):
        rows = t[a0:a0 + chunk]
        lhs = t[rows, :]
        rhs = rows[:, t]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            a, b, c = bad[0]
            return (int(a) + a0, int(b), int(c))
    return None


def distrib_witness(add, mul):
    """First distributive-law violation as ('left'|'right', a, b, c), or None.

    The left law mul(a, add(b,c)) == add(mul(a,b), mul(a,c)) is scanned fully
    (lexicographic in (a, b, c)) before the right law.
    """
    add = np.ascontiguousarray(add)
    mul = np.ascontiguousarray(mul)
    n = add.shape[0]
    if n == 0:
        return None
    chunk = max(1, _CHUNK_CELLS // (n * n))
    for a0 in range(0, n, chunk):
        mrows = mul[a0:a0 + chunk]
        lhs = mrows[:, add]
        rhs = add[mrows[:, :, None], mrows[:, None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            a, b, c = bad[0]
            return ("left", int(a) + a0, int(b), int(c))
    for a0 in range(0, n, chunk):
        arows = add[a0:a0 + chunk]
        lhs = mul[arows, :]
        rhs = add[mul[a0:a0 + chunk][:, None, :], mul[None, :, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            a, b, c = bad[0]
            return ("right", int(a) + a0, int(b), int(c))
    return None


def charpoly_int(rows):
    """Exact characteristic polynomial of an integer matrix, ascending coeffs.

    Berkowitz's division-free scheme over Python ints: iterates the leading
    principal submatrices, combining each step with a Toeplitz product.  Input
    is a list of row lists; zero entries are skipped in the matrix-vector
    products, so sparse 0/1 adjacency matrices only pay for their edges.
    """
    n = len(rows)
    if n == 0:
        return [1]
    unit_cols = []  # per row: column indices with entry exactly 1
    gen_cols = []   # per row: (column, value) for other nonzero entries
    for r in rows:
        units = []
        gens = []
        for j, v in enumerate(r):
            v = int(v)
            if v == 1:
                units.append(j)
            elif v != 0:
                gens.append((j, v))
        unit_cols.append(units)
        gen_cols.append(gens)

    coeffs = [1, -int(rows[0][0])]  # descending coeffs, 1x1 submatrix
    for m in range(1, n):
        a = int(rows[m][m])
        r_units = [j for j in unit_cols[m] if j < m]
        r_gens = [(j, v) for j, v in gen_cols[m] if j < m]
        sub_units = [[j for j in unit_cols[i] if j < m] for i in range(m)]
        sub_gens = [[(j, v) for j, v in gen_cols[i] if j < m] for i in range(m)]
        v = [int(rows[i][m]) for i in range(m)]
        qs = []
        for k in range(m):
            get = v.__getitem__
            q = sum(map(get, r_units))
            for j, val in r_gens:
                q += val * v[j]
            qs.append(q)
            if k < m - 1:
                nxt = []
                for units, gens in zip(sub_units, sub_gens):
                    s = sum(map(get, units))
                    for j, val in gens:
                        s += val * v[j]
                    nxt.append(s)
                v = nxt
        col = [1, -a] + [-q for q in qs]
        prev = coeffs
        top = len(prev) - 1
        coeffs = [0] * (m + 2)
        for t in range(m + 2):
            s = 0
            for src in range(max(0, t - m - 1), min(t, top) + 1):
                s += col[t - src] * prev[src]
            coeffs[t] = s
    coeffs.reverse()
    return coeffs


def _assoc_equations(k):
    """Structure-constant associativity equations in fixed scan order.

    One equation per basis triple (i, j, l) and output coordinate s:
    sum_t c[i,j,t]*c[t,l,s] == sum_t c[j,l,t]*c[i,t,s]  (mod p),
    with flattened tensor positions pos(i,j,t) = (i*k + j)*k + t.
    """
    eqs = []
    for i, j, l in product(range(k), repeat=3):
        for s in range(k):
            lhs = [((i * k + j) * k + t, (t * k + l) * k + s) for t in range(k)]
            rhs = [((j * k + l) * k + t, (i * k + t) * k + s) for t in range(k)]
            eqs.append((lhs, rhs))
    return eqs


def scan_assoc_tensors(p, k, start, stop):
    """Ascending tensor indices in [start, stop) whose induced product is associative.

    Index digits are base-p, most significant digit first in flattened-tensor
    order, so ascending index equals lexicographic order on the tensor.
    """
    kk = k ** 3
    places = np.array([p ** (kk - 1 - q) for q in range(kk)], dtype=np.int64)
    eqs = _assoc_equations(k)
    out = []
    for b0 in range(start, stop, _SCAN_BATCH):
        live = np.arange(b0, min(b0 + _SCAN_BATCH, stop), dtype=np.int64)
        dig = ((live[None, :] // places[:, None]) % p).astype(np.int64)
        for lhs, rhs in eqs:
            acc = dig[lhs[0][0]] * dig[lhs[0][1]]
            for a, b in lhs[1:]:
                acc = acc + dig[a] * dig[b]
            for a, b in rhs:
                acc = acc - dig[a] * dig[b]
            keep = acc % p == 0
            if not keep.all():
                live = live[keep]
                if live.size == 0:
                    break
                dig = dig[:, keep]
        out.extend(int(x) for x in live)
    return out
