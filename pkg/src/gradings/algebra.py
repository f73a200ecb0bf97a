"""Finite-dimensional nonassociative algebras by structure constants.

An Algebra is a field, a dimension, and the full multiplication table
c[i][j] = e_i * e_j as coordinate vectors.  Subspaces are canonicalized to
reduced row echelon bases, so subspace equality is matrix equality and any
set of subspaces has a deterministic ordering.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import linalg
from .errors import (
    FieldTooSmall,
    Inconclusive,
    NotAnIdeal,
    NotSemisimple,
    ZeroQuotient,
)
from .scalar import root_of_unity, NoSuchRoot

__all__ = [
    "Algebra",
    "Subspace",
    "AlgebraMap",
    "product_algebra",
    "product_subspace",
    "ideal_closure",
    "identity_map",
    "centroid",
    "left_unities",
    "is_simple",
    "decompose_semisimple",
    "quotient_algebra",
    "restrict_to_subspace",
    "minimal_polynomial",
]


class Algebra:
    """Structure-constant algebra.  table[i][j] is the vector e_i * e_j."""

    def __init__(self, field, dim, table, labels=None):
        self.field = field
        self.dim = dim
        self.table = [
            [[field.coerce(c) for c in vec] for vec in row] for row in table
        ]
        for row in self.table:
            assert len(row) == dim and all(len(vec) == dim for vec in row)
        self.labels = list(labels) if labels else None

    @classmethod
    def from_sparse(cls, field, dim, entries, labels=None):
        """entries: {(i, j): [(k, coeff), ...]}"""
        zero = field.zero()
        table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in entries.items():
            for k, c in terms:
                table[i][j][k] = field.coerce(c)
        return cls(field, dim, table, labels)

    def zero_vector(self):
        return [self.field.zero()] * self.dim

    def basis_vector(self, i):
        v = self.zero_vector()
        v[i] = self.field.one()
        return v

    def vector(self, coeffs):
        return [self.field.coerce(c) for c in coeffs]

    def multiply(self, x, y):
        out = self.zero_vector()
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                f = xi * yj
                for k, c in enumerate(self.table[i][j]):
                    if c:
                        out[k] = out[k] + f * c
        return out

    def left_mult_matrix(self, x):
        """Matrix of y -> x*y."""
        cols = [self.multiply(x, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def right_mult_matrix(self, x):
        cols = [self.multiply(self.basis_vector(j), x) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def mult_operators(self):
        """Left and right multiplications by all basis vectors."""
        ops = []
        for i in range(self.dim):
            ops.append(self.left_mult_matrix(self.basis_vector(i)))
        for i in range(self.dim):
            ops.append(self.right_mult_matrix(self.basis_vector(i)))
        return ops

    def square_is_zero(self):
        return all(
            not any(self.table[i][j]) for i in range(self.dim) for j in range(self.dim)
        )

    def structure_equal(self, other):
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.table == other.table
        )

    def __repr__(self):
        return f"<algebra dim {self.dim} over {self.field.descriptor()}>"


def product_algebra(factors):
    """Direct product with block-diagonal structure constants.

    Returns (algebra, offsets) where offsets[i] is the coordinate offset of
    factor i.
    """
    field = factors[0].field
    assert all(a.field == field for a in factors)
    dim = sum(a.dim for a in factors)
    zero = field.zero()
    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    offsets = []
    off = 0
    for a in factors:
        offsets.append(off)
        for i in range(a.dim):
            for j in range(a.dim):
                vec = a.table[i][j]
                for k in range(a.dim):
                    if vec[k]:
                        table[off + i][off + j][off + k] = vec[k]
        off += a.dim
    return Algebra(field, dim, table), offsets


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """Subspace of F^n with a canonical RREF basis (rows, no zero rows)."""

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field, ambient, vectors):
        self.field = field
        self.ambient = ambient
        vectors = [[field.coerce(x) for x in v] for v in vectors]
        reduced, pivots = linalg.rref(vectors) if vectors else ([], [])
        self.rows = [reduced[i] for i in range(len(pivots))]
        self.pivots = list(pivots)

    @property
    def dim(self):
        return len(self.rows)

    def is_zero(self):
        return not self.rows

    def contains_vector(self, v):
        return not any(self._residual(v))

    def _residual(self, v):
        """v reduced against the basis rows; zero iff v is in the span."""
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def coordinates_of(self, v):
        """Coefficients on the canonical basis, or None if v is outside."""
        coeffs = []
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            coeffs.append(c)
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        if any(v):
            return None
        return coeffs

    def contains(self, other):
        return all(self.contains_vector(r) for r in other.rows)

    def add(self, other):
        return Subspace(self.field, self.ambient, self.rows + other.rows)

    def intersect(self, other):
        if self.is_zero() or other.is_zero():
            return Subspace(self.field, self.ambient, [])
        # x = a*self.rows = b*other.rows; kernel of [rows^T | -other^T]
        mat = []
        for i in range(self.ambient):
            mat.append(
                [r[i] for r in self.rows] + [-r[i] for r in other.rows]
            )
        combos = linalg.kernel_basis(self.field, mat, self.dim + other.dim)
        vecs = []
        for c in combos:
            v = [self.field.zero()] * self.ambient
            for coeff, row in zip(c[: self.dim], self.rows):
                if coeff:
                    v = [x + coeff * y for x, y in zip(v, row)]
            vecs.append(v)
        return Subspace(self.field, self.ambient, vecs)

    def basis_matrix(self):
        return [list(r) for r in self.rows]

    def sort_key(self):
        return tuple(tuple(x.sort_key() for x in row) for row in self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(
            (self.ambient, tuple(tuple(row) for row in self.rows))
        )

    def __repr__(self):
        return f"<subspace dim {self.dim} of F^{self.ambient}>"


def full_space(field, n):
    return Subspace(field, n, linalg.identity(field, n))


def product_subspace(alg, u, v):
    """Span of all products x*y with x in u, y in v."""
    vecs = []
    for x in u.rows:
        for y in v.rows:
            p = alg.multiply(x, y)
            if any(p):
                vecs.append(p)
    return Subspace(alg.field, alg.dim, vecs)


def ideal_closure(alg, vectors):
    """Smallest two-sided ideal containing the given vectors (spinning)."""
    space = Subspace(alg.field, alg.dim, list(vectors))
    queue = [list(r) for r in space.rows]
    while queue:
        v = queue.pop()
        for i in range(alg.dim):
            b = alg.basis_vector(i)
            for p in (alg.multiply(b, v), alg.multiply(v, b)):
                if any(p) and not space.contains_vector(p):
                    space = Subspace(alg.field, alg.dim, space.rows + [p])
                    queue.append(p)
    return space


def is_ideal(alg, space):
    for v in space.rows:
        for i in range(alg.dim):
            b = alg.basis_vector(i)
            if not space.contains_vector(alg.multiply(b, v)):
                return False
            if not space.contains_vector(alg.multiply(v, b)):
                return False
    return True


# ---------------------------------------------------------------------------
# maps


class AlgebraMap:
    """Linear map between algebras; matrix acts on column coordinate vectors."""

    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        self.matrix = [[source.field.coerce(x) for x in row] for row in matrix]
        assert len(self.matrix) == target.dim
        assert all(len(row) == source.dim for row in self.matrix)

    def apply(self, v):
        return linalg.mat_vec(self.matrix, v)

    def image_of_subspace(self, space):
        vecs = [self.apply(r) for r in space.rows]
        return Subspace(self.target.field, self.target.dim, vecs)

    def is_homomorphism(self):
        for i in range(self.source.dim):
            for j in range(self.source.dim):
                lhs = self.apply(self.source.table[i][j])
                rhs = self.target.multiply(
                    self.apply(self.source.basis_vector(i)),
                    self.apply(self.source.basis_vector(j)),
                )
                if lhs != rhs:
                    return False
        return True

    def is_bijective(self):
        return (
            self.source.dim == self.target.dim
            and linalg.rank(self.matrix) == self.source.dim
        )

    def compose(self, inner):
        return AlgebraMap(
            inner.source, self.target, linalg.mat_mul(self.matrix, inner.matrix)
        )

    def inverse(self):
        inv = linalg.inverse(self.matrix)
        assert inv is not None
        return AlgebraMap(self.target, self.source, inv)

    def __repr__(self):
        return f"<map {self.source.dim} -> {self.target.dim}>"


def identity_map(alg):
    return AlgebraMap(alg, alg, linalg.identity(alg.field, alg.dim))


# ---------------------------------------------------------------------------
# centroid

def _vec_of_matrix(m):
    return [x for row in m for x in row]


def _matrix_of_vec(field, v, n):
    return [v[i * n : (i + 1) * n] for i in range(n)]


def centroid(alg):
    """Canonical basis (list of matrices) of the centroid.

    The centroid is the space of matrices commuting with every left and right
    multiplication; the constraint operators are intersected one at a time so
    the working dimension drops quickly.
    """
    field, n = alg.field, alg.dim
    basis = [
        _matrix_of_vec(field, row, n)
        for row in linalg.identity(field, n * n)
    ]
    for op in alg.mult_operators():
        constrained = []
        for b in basis:
            comm = [
                [
                    sum(
                        (b[i][k] * op[k][j] - op[i][k] * b[k][j] for k in range(n)),
                        field.zero(),
                    )
                    for j in range(n)
                ]
                for i in range(n)
            ]
            constrained.append(_vec_of_matrix(comm))
        if not basis:
            break
        mat = [[constrained[j][i] for j in range(len(basis))] for i in range(n * n)]
        combos = linalg.kernel_basis(field, mat, len(basis))
        new_basis = []
        for c in combos:
            m = [[field.zero()] * n for _ in range(n)]
            for coeff, b in zip(c, basis):
                if coeff:
                    for i in range(n):
                        for j in range(n):
                            m[i][j] = m[i][j] + coeff * b[i][j]
            new_basis.append(m)
        basis = new_basis
    space = Subspace(field, n * n, [_vec_of_matrix(b) for b in basis])
    return [_matrix_of_vec(field, row, n) for row in space.rows]


def left_unities(alg):
    """Affine set {u : u*x = x for all x} as (particular, homogeneous subspace).

    particular is None when no left unity exists.
    """
    field, n = alg.field, alg.dim
    rows, rhs = [], []
    for j in range(n):
        # u * e_j = e_j, coordinates of u are the unknowns
        prods = [alg.multiply(alg.basis_vector(i), alg.basis_vector(j)) for i in range(n)]
        for k in range(n):
            rows.append([prods[i][k] for i in range(n)])
            rhs.append(field.one() if k == j else field.zero())
    sol = linalg.linear_solve(field, rows, rhs)
    homog = Subspace(field, n, sol.kernel)
    return sol.particular, homog


# ---------------------------------------------------------------------------
# minimal polynomials


def minimal_polynomial(field, mat):
    """Monic minimal polynomial of a square matrix, low coefficients first."""
    n = len(mat)
    powers = [linalg.identity(field, n)]
    vecs = [_vec_of_matrix(powers[0])]
    while True:
        nxt = linalg.mat_mul(powers[-1], mat)
        target = _vec_of_matrix(nxt)
        cols = [[vecs[j][i] for j in range(len(vecs))] for i in range(n * n)]
        combo = linalg.solve(field, cols, target)
        if combo is not None:
            return [-c for c in combo] + [field.one()]
        powers.append(nxt)
        vecs.append(target)


def _poly_eval_matrix(field, coeffs, mat):
    n = len(mat)
    out = linalg.zeros(field, n, n)
    power = linalg.identity(field, n)
    for c in coeffs:
        if c:
            for i in range(n):
                for j in range(n):
                    out[i][j] = out[i][j] + c * power[i][j]
        power = linalg.mat_mul(power, mat)
    return out


def _poly_derivative(field, coeffs):
    return [coeffs[k] * k for k in range(1, len(coeffs))]


def _poly_gcd(field, a, b):
    a, b = list(a), list(b)
    while b and any(b):
        while b and not b[-1]:
            b.pop()
        if not b:
            break
        inv = b[-1].inverse()
        r = list(a)
        for i in range(len(r) - len(b), -1, -1):
            if len(r) < len(b):
                break
            c = r[i + len(b) - 1] * inv
            if c:
                for j, bc in enumerate(b):
                    r[i + j] = r[i + j] - c * bc
            while r and not r[-1]:
                r.pop()
        a, b = b, r
    while a and not a[-1]:
        a.pop()
    return a


def _poly_eval(field, coeffs, x):
    out = field.zero()
    for c in reversed(coeffs):
        out = out * x + c
    return out


def _rational_root_candidates(field, coeffs):
    """Rational candidates via the integer root bound, plus 0 and small ints."""
    rational_coeff_vectors = []
    for c in coeffs:
        q = c.as_rational()
        if q is None:
            # use each power-basis coordinate as its own rational polynomial
            rational_coeff_vectors.append([Fraction(x) for x in c.value])
        else:
            rational_coeff_vectors.append([q])
    width = max(len(v) for v in rational_coeff_vectors)
    candidates = {Fraction(0)}
    for slot in range(width):
        poly = [
            v[slot] if slot < len(v) else Fraction(0)
            for v in rational_coeff_vectors
        ]
        while poly and poly[-1] == 0:
            poly.pop()
        if len(poly) < 2:
            continue
        # clear denominators
        den = 1
        for q in poly:
            den = den * q.denominator // math.gcd(den, q.denominator)
        ints = [int(q * den) for q in poly]
        lead, const = ints[-1], next((x for x in ints if x), 0)
        for p in _divisors(abs(const)):
            for qd in _divisors(abs(lead)):
                candidates.add(Fraction(p, qd))
                candidates.add(Fraction(-p, qd))
    return sorted(candidates)


def _divisors(n):
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def polynomial_roots_in_field(field, coeffs):
    """Roots of a monic polynomial that lie in the field.

    Complete over prime fields; over Q and Q(zeta_N) the search covers
    rational and rational-times-root-of-unity values.
    """
    roots = []
    if field.kind == "prime":
        for r in range(field.p):
            x = field.scalar(r)
            if not _poly_eval(field, coeffs, x):
                roots.append(x)
        return roots
    seen = set()
    rationals = _rational_root_candidates(field, coeffs)
    units = [field.one()]
    eta = field.primitive_root_of_unity()
    for _ in range(field.max_root_order() - 1):
        units.append(units[-1] * eta)
    for q in rationals:
        for u in units:
            x = field.scalar(q) * u
            if x.value in seen:
                continue
            seen.add(x.value)
            if not _poly_eval(field, coeffs, x):
                roots.append(x)
    return roots


# ---------------------------------------------------------------------------
# simplicity and semisimple decomposition


def _spin_full(alg, ops, v):
    """Span of v under repeated application of the given operators."""
    space = Subspace(alg.field, alg.dim, [v])
    queue = [list(r) for r in space.rows]
    while queue:
        w = queue.pop()
        for op in ops:
            p = linalg.mat_vec(op, w)
            if any(p) and not space.contains_vector(p):
                space = Subspace(alg.field, alg.dim, space.rows + [p])
                queue.append(p)
    return space


def _random_operator(field, ops, rng, width):
    n = len(ops[0])
    acc = linalg.zeros(field, n, n)
    for _ in range(width):
        word = rng.choice(ops)
        for _ in range(rng.randrange(0, 2)):
            word = linalg.mat_mul(word, rng.choice(ops))
        c = field.scalar(rng.choice([1, -1, 2, -2, 3]))
        for i in range(n):
            for j in range(n):
                acc[i][j] = acc[i][j] + c * word[i][j]
    return acc


def is_simple(alg, seed=0, attempts=60):
    """(True, None) with a certificate, or (False, witness ideal or None).

    A proper ideal is exactly a submodule for the multiplication operators.
    Over small prime fields every nonzero vector is spun (complete check).
    Over the infinite fields an operator of nullity one certifies
    irreducibility when both its kernel vector and the transposed kernel
    vector spin to everything.  Raises Inconclusive when the budget runs out.
    """
    field, n = alg.field, alg.dim
    if alg.square_is_zero():
        return False, None
    if n == 1:
        # nonzero square, so the only subspaces are 0 and the whole line
        return True, None
    ops = alg.mult_operators()
    if field.kind == "prime" and field.p**n <= 65536:
        from itertools import product as iproduct

        for coeffs in iproduct(range(field.p), repeat=n):
            if not any(coeffs):
                continue
            v = [field.scalar(c) for c in coeffs]
            space = _spin_full(alg, ops, v)
            if space.dim < n:
                return False, space
        return True, None
    tops = [linalg.transpose(op) for op in ops]
    rng = random.Random(seed)
    candidates = list(ops)
    for attempt in range(attempts):
        theta = candidates[attempt] if attempt < len(candidates) else _random_operator(
            field, ops, rng, 2
        )
        ker = linalg.kernel_basis(field, theta, n)
        if not ker or len(ker) == n:
            continue
        space = _spin_full(alg, ops, ker[0])
        if space.dim < n:
            return False, space
        if len(ker) != 1:
            continue
        tker = linalg.kernel_basis(field, linalg.transpose(theta), n)
        assert len(tker) == 1
        tspan = _spin_full(alg, tops, tker[0])
        if tspan.dim == n:
            return True, None
        # the annihilator of the transpose spin is a proper ideal
        witness_rows = linalg.kernel_basis(field, tspan.basis_matrix(), n)
        witness = Subspace(field, n, witness_rows)
        if 0 < witness.dim < n and is_ideal(alg, witness):
            return False, witness
    raise Inconclusive("no nullity-one certificate found within budget")


def restrict_to_subspace(alg, space):
    """Algebra structure on a multiplicatively closed subspace.

    Returns (subalgebra, embedding map).  Raises NotAnIdeal when products
    leave the subspace.
    """
    field = alg.field
    k = space.dim
    table = [[None] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            p = alg.multiply(space.rows[a], space.rows[b])
            coords = space.coordinates_of(p)
            if coords is None:
                raise NotAnIdeal("subspace is not multiplicatively closed")
            table[a][b] = coords
    sub = Algebra(field, k, table)
    emb = [[space.rows[j][i] for j in range(k)] for i in range(alg.dim)]
    return sub, AlgebraMap(sub, alg, emb)


def quotient_algebra(alg, ideal):
    """(quotient, projection map).  Complement coordinates are the non-pivots."""
    if not is_ideal(alg, ideal):
        raise NotAnIdeal("quotient needs an ideal")
    if ideal.dim == alg.dim:
        raise ZeroQuotient("ideal is the whole algebra")
    field, n = alg.field, alg.dim
    free = [j for j in range(n) if j not in set(ideal.pivots)]
    proj_rows = []
    for j in free:
        row = []
        for i in range(n):
            v = ideal._residual(alg.basis_vector(i))
            row.append(v[j])
        proj_rows.append(row)
    k = len(free)
    table = [[None] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            p = alg.multiply(alg.basis_vector(free[a]), alg.basis_vector(free[b]))
            r = ideal._residual(p)
            table[a][b] = [r[j] for j in free]
    quot = Algebra(field, k, table)
    proj = AlgebraMap(alg, quot, proj_rows)
    assert proj.is_homomorphism()
    return quot, proj


def _eigen_split(alg, field, z, lam):
    n = alg.dim
    shifted = [
        [z[i][j] - (lam if i == j else field.zero()) for j in range(n)]
        for i in range(n)
    ]
    ker = Subspace(field, n, linalg.kernel_basis(field, shifted, n))
    img = Subspace(field, n, linalg.transpose(shifted))
    return ker, img


def decompose_semisimple(alg, seed=0):
    """Simple ideals of a semisimple algebra, in canonical order.

    Splits along centroid idempotents: eigenvalues of generic centroid
    elements are searched among rational-times-root-of-unity values, and
    centroid elements with minimal polynomial x^k - c are normalized to
    order-k units whose character projections give the idempotents.  Raises
    NotSemisimple (with a witness) or FieldTooSmall.
    """
    field = alg.field
    rng = random.Random(seed)
    result = []

    def walk(sub, back):
        # back maps sub coordinates into the original ambient space
        cent = centroid(sub)
        if sub.square_is_zero():
            raise NotSemisimple(
                "component with zero square", witness=back.image_of_subspace(
                    full_space(field, sub.dim)
                )
            )
        # nilpotency check: squarefree defect of a generic minimal polynomial
        for matt in cent:
            p = minimal_polynomial(field, matt)
            g = _poly_gcd(field, p, _poly_derivative(field, p))
            if len(g) > 1:
                sf, _ = _poly_quot(field, p, g)
                nil = _poly_eval_matrix(field, sf, matt)
                raise NotSemisimple(
                    "nilpotent centroid element", witness_matrix=nil
                )
        if len(cent) == 1:
            ok, witness = is_simple(sub, seed=seed)
            if not ok:
                raise NotSemisimple(
                    "central component is not simple",
                    witness=back.image_of_subspace(witness) if witness else None,
                )
            result.append(back.image_of_subspace(full_space(field, sub.dim)))
            return
        # finite-order centroid units split completely in one pass, before
        # any eigenvalue split can smear them across the residual piece
        split = _cyclic_idempotent_split(field, sub, cent)
        if split is not None:
            for part in split:
                piece, emb = restrict_to_subspace(sub, part)
                walk(piece, back.compose(emb))
            return
        for attempt in range(6):
            if attempt == 0:
                coeffs = [field.scalar(i + 1) for i in range(len(cent))]
            else:
                coeffs = [field.scalar(rng.randrange(-9, 10)) for _ in cent]
            z = linalg.zeros(field, sub.dim, sub.dim)
            for c, m in zip(coeffs, cent):
                if c:
                    for i in range(sub.dim):
                        for j in range(sub.dim):
                            z[i][j] = z[i][j] + c * m[i][j]
            p = minimal_polynomial(field, z)
            g = _poly_gcd(field, p, _poly_derivative(field, p))
            if len(g) > 1:
                continue
            for lam in polynomial_roots_in_field(field, p):
                ker, img = _eigen_split(sub, field, z, lam)
                if 0 < ker.dim < sub.dim:
                    for part in (ker, img):
                        piece, emb = restrict_to_subspace(sub, part)
                        walk(piece, back.compose(emb))
                    return
        raise FieldTooSmall("could not split the centroid over this field")

    walk(alg, identity_map(alg))
    result.sort(key=lambda s: s.sort_key())
    return result


def _poly_quot(field, a, b):
    """(a div b, a mod b) for field-coefficient polynomials."""
    r = list(a)
    q = [field.zero()] * max(len(a) - len(b) + 1, 0)
    inv = b[-1].inverse()
    for i in range(len(r) - len(b), -1, -1):
        c = r[i + len(b) - 1] * inv
        if c:
            q[i] = c
            for j, bc in enumerate(b):
                r[i + j] = r[i + j] - c * bc
    while r and not r[-1]:
        r.pop()
    return q, r


def _scalar_multiple_of_identity(field, mat):
    n = len(mat)
    gamma = mat[0][0]
    for i in range(n):
        for j in range(n):
            if mat[i][j] != (gamma if i == j else field.zero()):
                return None
    return gamma


def _cyclic_idempotent_split(field, sub, cent):
    from .scalar import scalar_nth_root

    n = sub.dim
    M = field.max_root_order()
    for matt in cent:
        # look for a power m^k that is a nonzero scalar; the normalized m is
        # then a unit of order k and its character projections split the space
        found = None
        power = matt
        for k in range(2, M + 1):
            power = linalg.mat_mul(power, matt)
            if M % k != 0:
                continue
            gamma = _scalar_multiple_of_identity(field, power)
            if gamma is not None and gamma:
                found = (k, gamma)
                break
        if found is None:
            continue
        k, gamma = found
        mu = scalar_nth_root(field, gamma, k)
        if mu is None:
            continue
        try:
            omega = root_of_unity(field, k)
        except NoSuchRoot:
            continue
        inv_mu = mu.inverse()
        u = [[x * inv_mu for x in row] for row in matt]
        # projection onto the omega^t eigenspace of u
        kinv = field.scalar(k).inverse()
        pieces = []
        for t in range(k):
            e = linalg.zeros(field, n, n)
            power = linalg.identity(field, n)
            for s in range(k):
                w = omega ** ((-t * s) % k)
                for i in range(n):
                    for j in range(n):
                        e[i][j] = e[i][j] + kinv * w * power[i][j]
                power = linalg.mat_mul(power, u)
            img = Subspace(field, n, linalg.transpose(e))
            if not img.is_zero():
                pieces.append(img)
        if len(pieces) > 1 and sum(s.dim for s in pieces) == n:
            return pieces
    return None
