"""Dense exact linear algebra over an ExactField.

Matrices are lists of rows of ExactScalar.  Everything is plain Gaussian
elimination with exact division; no pivot-size heuristics are needed since
the scalars are exact.
"""

from __future__ import annotations

__all__ = [
    "zeros",
    "identity",
    "mat_mul",
    "mat_vec",
    "transpose",
    "rref",
    "rank",
    "kernel_basis",
    "solve",
    "inverse",
    "det",
    "LinearSolution",
    "linear_solve",
    "row_space",
]


def zeros(field, m, n):
    z = field.zero()
    return [[z for _ in range(n)] for _ in range(m)]


def identity(field, n):
    mat = zeros(field, n, n)
    one = field.one()
    for i in range(n):
        mat[i][i] = one
    return mat


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(rows):
        row = []
        ai = a[i]
        for j in range(cols):
            acc = None
            for k in range(inner):
                if ai[k]:
                    term = ai[k] * b[k][j]
                    acc = term if acc is None else acc + term
            row.append(acc if acc is not None else ai[0].field.zero() if ai else None)
        out.append(row)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        acc = None
        for x, y in zip(row, v):
            if x and y:
                term = x * y
                acc = term if acc is None else acc + term
        out.append(acc if acc is not None else (row[0].field.zero() if row else None))
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


def rref(a):
    """Reduced row echelon form.  Returns (rows, pivot column list)."""
    mat = [list(row) for row in a]
    if not mat:
        return mat, []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def row_space(field, rows, ncols):
    """Canonical (RREF, no zero rows) basis of the span of the given rows."""
    if not rows:
        return []
    reduced, pivots = rref(rows)
    return [reduced[i] for i in range(len(pivots))]


def rank(a):
    return len(rref(a)[1])


def kernel_basis(field, a, ncols=None):
    """Basis of {x : a x = 0}, one pivot-normalized vector per free column."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    if not a:
        return [
            [field.one() if j == i else field.zero() for j in range(ncols)]
            for i in range(ncols)
        ]
    reduced, pivots = rref(a)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [field.zero()] * ncols
        vec[free] = field.one()
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][free]
        basis.append(vec)
    return basis


def solve(field, a, b):
    """One particular solution of a x = b, or None if inconsistent."""
    if not a:
        return [] if not any(b) else None
    ncols = len(a[0])
    aug = [row + [bv] for row, bv in zip(a, b)]
    reduced, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [field.zero()] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = reduced[r][ncols]
    return x


class LinearSolution:
    """Solution set of a linear system: a particular solution plus the kernel.

    ``particular is None`` means the system is inconsistent, which is distinct
    from the zero solution.
    """

    def __init__(self, particular, kernel):
        self.particular = particular
        self.kernel = kernel

    @property
    def consistent(self):
        return self.particular is not None

    def is_unique(self):
        return self.consistent and not self.kernel


def linear_solve(field, a, b):
    """Full solution set of a x = b.

    >>> from .scalar import make_field
    >>> F = make_field("rationals")
    >>> A = [[F.scalar(1), F.scalar(2)], [F.scalar(2), F.scalar(4)]]
    >>> s = linear_solve(F, A, [F.scalar(1), F.scalar(2)])
    >>> [x.value for x in s.particular], [[x.value for x in v] for v in s.kernel]
    ([Fraction(1, 1), Fraction(0, 1)], [[Fraction(-2, 1), Fraction(1, 1)]])
    """
    particular = solve(field, a, b)
    ncols = len(a[0]) if a else len(b)
    return LinearSolution(particular, kernel_basis(field, a, ncols))


def inverse(a):
    n = len(a)
    if n == 0:
        return []
    field = a[0][0].field
    aug = [row + idrow for row, idrow in zip(a, identity(field, n))]
    reduced, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in reduced]


def det(a):
    n = len(a)
    if n == 0:
        raise ValueError("empty matrix")
    field = a[0][0].field
    mat = [list(row) for row in a]
    result = field.one()
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if mat[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            return field.zero()
        if pivot_row != c:
            mat[c], mat[pivot_row] = mat[pivot_row], mat[c]
            result = -result
        result = result * mat[c][c]
        inv = mat[c][c].inverse()
        for i in range(c + 1, n):
            if mat[i][c]:
                f = mat[i][c] * inv
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[c])]
    return result
