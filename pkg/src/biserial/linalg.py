"""Exact linear algebra over the rationals.

Matrices are lists of rows, rows are lists of numbers; everything is
normalized to `fractions.Fraction` on entry.  Nothing here knows about
algebras or quivers -- it is shared plumbing for hom-space ranks, cone
computations and change-of-basis work elsewhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def frac_rows(rows):
    """Copy `rows` as a list of lists of Fractions."""
    return [[Fraction(x) for x in row] for row in rows]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[Fraction(0)] * n for _ in range(m)]


def mat_mul(a, b):
    if not a:
        return []
    if not b:
        return [[] for _ in a]
    n = len(b)
    assert all(len(row) == n for row in a), "shape mismatch"
    cols = len(b[0])
    out = []
    for row in a:
        out.append([sum((row[k] * b[k][j] for k in range(n)), Fraction(0))
                    for j in range(cols)])
    return out


def mat_vec(a, v):
    return [sum((row[k] * v[k] for k in range(len(v))), Fraction(0)) for row in a]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def rref(rows):
    """Reduced row echelon form.

    Returns (R, pivots) where R is the RREF with zero rows dropped and
    pivots is the list of pivot column indices.
    """
    mat = frac_rows(rows)
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows):
    return len(rref(rows)[0])


def nullspace(rows, ncols=None):
    """Basis of {x : rows @ x = 0} as a list of vectors."""
    if ncols is None:
        if not rows:
            raise ValueError("need ncols for an empty system")
        ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -red[i][fc]
        basis.append(vec)
    return basis


def solve(rows, rhs):
    """One solution of rows @ x = rhs, or None if inconsistent."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    sol = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        if pc == ncols:
            return None  # pivot in the rhs column
        sol[pc] = red[i][ncols]
    return sol


def det(a):
    mat = frac_rows(a)
    n = len(mat)
    assert all(len(row) == n for row in mat), "det of a non-square matrix"
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            sign = -sign
        result *= mat[c][c]
        inv = Fraction(1) / mat[c][c]
        for i in range(c + 1, n):
            if mat[i][c] != 0:
                f = mat[i][c] * inv
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[c])]
    return result * sign


def invert(a):
    """Inverse of a square matrix; raises ValueError if singular."""
    n = len(a)
    aug = [list(map(Fraction, row)) + ident_row for row, ident_row in
           zip(a, identity(n))]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def in_row_space(rows, vec):
    """Is vec a linear combination of the given rows?"""
    base = [r for r in rows]
    return rank(base + [vec]) == rank(base)


def subspace_equal(rows_a, rows_b):
    ra = rank(rows_a)
    rb = rank(rows_b)
    if ra != rb:
        return False
    return rank(list(rows_a) + list(rows_b)) == ra


def primitive(vec):
    """Scale a rational vector to a primitive integer vector.

    The sign is chosen so the first nonzero entry keeps its sign.
    """
    fracs = [Fraction(x) for x in vec]
    if all(x == 0 for x in fracs):
        return [0] * len(fracs)
    denom = 1
    for x in fracs:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return [x // g for x in ints]
