"""Exact integer linear algebra.

Vectors are tuples of Python ints and matrices are sequences of rows, so
everything is arbitrary precision and hashable.  Nothing here touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

from .errors import DegenerateInputError, DimensionError

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if m and any(len(row) != len(m[0]) for row in m):
        raise DimensionError("rows have differing lengths")
    return m


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Bareiss elimination.

    The empty (0x0) matrix has determinant 1.
    """
    a = [list(row) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionError(f"determinant needs a square matrix, got {n} rows of lengths "
                             f"{sorted({len(r) for r in a})}")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def rank(m: Sequence[Sequence[int]]) -> int:
    a = [list(row) for row in m]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, len(a)):
            f = a[i][c]
            if f:
                a[i] = [p * x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def hermite_normal_form(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``H == U @ m``, ``U`` unimodular and ``H`` in
    row echelon form: pivots positive, zeros below each pivot, entries above
    a pivot reduced into ``[0, pivot)``.  Zero rows sit at the bottom.
    """
    h = [list(row) for row in m]
    nrows = len(h)
    ncols = len(h[0]) if h else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]

    def swap(i: int, j: int) -> None:
        h[i], h[j] = h[j], h[i]
        u[i], u[j] = u[j], u[i]

    def addmul(dst: int, src: int, q: int) -> None:
        # row[dst] -= q * row[src]
        h[dst] = [x - q * y for x, y in zip(h[dst], h[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        while True:
            nz = [i for i in range(r, nrows) if h[i][c] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(h[i][c]))
            if best != r:
                swap(best, r)
            done = True
            for i in range(r + 1, nrows):
                if h[i][c]:
                    addmul(i, r, h[i][c] // h[r][c])
                    if h[i][c]:
                        done = False
            if done:
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        p = h[r][c]
        for i in range(r):
            q = h[i][c] // p
            if q:
                addmul(i, r, q)
        r += 1
    return as_matrix(h), as_matrix(u)


def primitive_vector(v: Sequence[int]) -> Vector:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise DegenerateInputError("zero vector has no primitive direction")
    return tuple(x // g for x in v)


def vector_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def is_unimodular_basis(vectors: Sequence[Sequence[int]], d: int) -> bool:
    """True iff ``vectors`` (exactly ``d`` of them, each of length ``d``) form a Z-basis of Z^d."""
    if len(vectors) != d or any(len(v) != d for v in vectors):
        raise DimensionError(f"need {d} vectors of dimension {d}")
    return abs(determinant(vectors)) == 1


def integer_normal(rows: Sequence[Sequence[int]]) -> Vector:
    """Generalized cross product of ``k`` vectors in Z^(k+1).

    Entry ``j`` is ``(-1)**j`` times the maximal minor with column ``j``
    deleted, so the result is orthogonal to every row.  It vanishes exactly
    when the rows are linearly dependent.  Its gcd is the index of the
    lattice spanned by the rows inside its saturation.
    """
    k = len(rows)
    n = k + 1
    if any(len(r) != n for r in rows):
        raise DimensionError(f"need {k} vectors of dimension {n}")
    out = []
    for j in range(n):
        minor = [[r[c] for c in range(n) if c != j] for r in rows]
        det = determinant(minor)
        out.append(det if j % 2 == 0 else -det)
    return tuple(out)


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def vec_mat(v: Sequence[int], m: Sequence[Sequence[int]]) -> Vector:
    """Row vector times matrix."""
    return tuple(sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0])))


def rational_inverse(m: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise DegenerateInputError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return tuple(tuple(row[n:]) for row in a)


def unimodular_inverse(m: Sequence[Sequence[int]]) -> Matrix:
    inv = rational_inverse(m)
    if any(x.denominator != 1 for row in inv for x in row):
        raise DegenerateInputError("matrix is not unimodular")
    return tuple(tuple(int(x) for x in row) for row in inv)


def hyperplane_lattice_basis(normal: Sequence[int]) -> tuple[Matrix, Matrix]:
    """Basis of the rank d-1 lattice ``{x in Z^d : <normal, x> = 0}``.

    ``normal`` must be primitive.  Returns ``(basis, coord)``: ``basis`` has
    d-1 rows, and ``coord`` maps a lattice vector ``x`` of the hyperplane to
    its coordinates via ``vec_mat(x, coord)``.
    """
    column = [[x] for x in normal]
    h, u = hermite_normal_form(column)
    if h[0][0] != 1:
        raise DegenerateInputError("hyperplane normal must be primitive")
    inv = unimodular_inverse(u)
    # x = y @ u  =>  y = x @ inv; y[0] = <normal, x> / 1 = 0 on the hyperplane
    coord = tuple(tuple(row[1:]) for row in inv)
    return u[1:], coord


def nonsingular_columns(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Indices of ``len(rows)`` columns whose square minor is nonzero."""
    k = len(rows)
    n = len(rows[0]) if rows else 0
    for cols in combinations(range(n), k):
        if determinant([[r[c] for c in cols] for r in rows]) != 0:
            return cols
    raise DegenerateInputError("rows are linearly dependent")
