"""Integer lattice helpers: column Hermite reduction, integer kernels, HNF.

Matrices are lists of rows of Python ints (arbitrary precision).
"""

from __future__ import annotations


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: list[list[int]], ncols: int | None = None) -> list[list[int]]:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    inner = len(b)
    ncols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(ncols)] for row in a]


def matvec(a, v) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def _col_combine(m, p, j, s, t, u, v):
    # col_p <- s*col_p + t*col_j ; col_j <- u*col_p + v*col_j
    for row in m:
        a, b = row[p], row[j]
        row[p] = s * a + t * b
        row[j] = u * a + v * b


def column_hermite(a: list[list[int]], ncols: int) -> tuple[list[list[int]], list[list[int]], int]:
    """Column-style Hermite reduction.

    Returns ``(h, u, rank)`` with ``a @ u == h``, ``u`` unimodular, and
    ``h`` in column echelon form: the first ``rank`` columns carry positive
    pivots in strictly increasing rows, entries left of a pivot are reduced
    into ``[0, pivot)``, and the remaining columns are zero.  The last
    ``ncols - rank`` columns of ``u`` are therefore a basis of the integer
    kernel of ``a``.
    """
    h = [list(row) for row in a]
    u = identity(ncols)
    pc = 0
    for i in range(len(h)):
        if pc == ncols:
            break
        row = h[i]
        for j in range(pc + 1, ncols):
            if row[j] == 0:
                continue
            x, y = row[pc], row[j]
            g, s, t = xgcd(x, y)
            _col_combine(h, pc, j, s, t, -y // g, x // g)
            _col_combine(u, pc, j, s, t, -y // g, x // g)
        piv = row[pc]
        if piv == 0:
            continue
        if piv < 0:
            for m in (h, u):
                for r in m:
                    r[pc] = -r[pc]
            piv = -piv
        for c in range(pc):
            q = row[c] // piv
            if q:
                for m in (h, u):
                    for r in m:
                        r[c] -= q * r[pc]
        pc += 1
    return h, u, pc


def row_hnf(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Reduced row Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped; the result is the unique HNF basis.
    """
    h, _, rank = column_hermite(transpose(rows, ncols), len(rows))
    cols = transpose(h, len(rows))[:rank]
    return [list(c) for c in cols]


def integer_kernel(a: list[list[int]], ncols: int) -> list[list[int]]:
    """HNF basis (as rows) of ``{x in Z^ncols : a x = 0}``."""
    _, u, rank = column_hermite(a, ncols)
    basis = [[u[i][j] for i in range(ncols)] for j in range(rank, ncols)]
    return row_hnf(basis, ncols)


def right_inverse(a: list[list[int]], ncols: int) -> list[list[int]]:
    """Integer ``r`` with ``a @ r == I`` for a surjective ``a`` (k x ncols).

    Raises ``ValueError`` if ``a`` is not surjective onto ``Z^k``.
    """
    k = len(a)
    h, u, rank = column_hermite(a, ncols)
    if rank != k or any(h[i][j] != int(i == j) for i in range(k) for j in range(k)):
        raise ValueError("matrix is not surjective over the integers")
    return [row[:k] for row in u]
