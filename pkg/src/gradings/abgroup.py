"""Finitely generated abelian groups in Smith normal form.

A group is presented by a relation matrix on n generators and immediately
canonicalized: elements live in canonical coordinates (free integer part
first, then torsion residues mod the invariant factors d_1 | d_2 | ...).
Raw presentation coordinates are accepted at the boundary and converted.

The group operation is written multiplicatively (``*``, ``**``, inverse) to
match how degrees compose in gradings.

>>> G = FgAbelianGroup(2, [[2, 3]])
>>> G.free_rank, G.invariant_factors
(1, ())
>>> H = FgAbelianGroup(2, [[2, 0], [0, 3]])
>>> H.invariant_factors
(6,)
"""

from __future__ import annotations

import math
from itertools import product as iter_product

from .errors import IllDefined, InfiniteGroup, NoLift, NoSuchRoot
from .scalar import root_of_unity

__all__ = [
    "smith_normal_form",
    "FgAbelianGroup",
    "GroupElement",
    "GroupHom",
    "hom",
    "hom_on_raw_generators",
    "direct_product",
    "subgroup",
    "kernel",
    "image",
    "quotient",
    "preimage",
    "member_of_subgroup",
    "is_surjective",
    "is_injective",
    "is_isomorphism",
    "identity_hom",
    "inverse_hom",
    "int_solve",
    "int_kernel",
    "Character",
    "characters_of_finite_group",
    "extend_character",
    "solve_hom_extension",
    "free_group",
    "cyclic_group",
]


# ---------------------------------------------------------------------------
# Smith normal form over Z


def smith_normal_form(mat):
    """U, D, V with U*mat*V = D diagonal, d_i | d_{i+1}, d_i >= 0, U, V unimodular.

    Pivoting picks a minimal-absolute-value nonzero entry, which keeps
    intermediate entries small at desk scale.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    a = [list(row) for row in mat]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    t = 0
    limit = min(m, n)
    while t < limit:
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < best[0]):
                    best = (abs(a[i][j]), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        dirty = False
        for i in range(t + 1, m):
            if a[i][t]:
                add_row(t, i, -(a[i][t] // a[t][t]))
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if a[t][j]:
                add_col(t, j, -(a[t][j] // a[t][t]))
                if a[t][j]:
                    dirty = True
        if dirty:
            continue
        # pivot divides everything below/right of it, or we fold a bad row in
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, t, 1)
            continue
        t += 1
    return u, a, v


def _identity_int(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _int_mat_mul(a, b):
    return [
        [sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a
    ]


def _int_mat_vec(a, x):
    return [sum(r * v for r, v in zip(row, x)) for row in a]


def _int_inverse_unimodular(v):
    """Inverse of a unimodular integer matrix, computed by integer row reduction."""
    n = len(v)
    a = [list(row) + idrow for row, idrow in zip(v, _identity_int(n))]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if abs(a[i][c]) == 1:
                piv = i
                break
        if piv is None:
            # reduce the column with gcd steps until a unit pivot appears
            rows = [i for i in range(c, n) if a[i][c]]
            while len(rows) > 1 or (rows and abs(a[rows[0]][c]) != 1):
                rows.sort(key=lambda i: abs(a[i][c]))
                i0 = rows[0]
                for i in rows[1:]:
                    q = a[i][c] // a[i0][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[i0])]
                rows = [i for i in range(c, n) if a[i][c]]
            piv = rows[0]
        a[c], a[piv] = a[piv], a[c]
        if a[c][c] < 0:
            a[c] = [-x for x in a[c]]
        assert a[c][c] == 1
        for i in range(n):
            if i != c and a[i][c]:
                q = a[i][c]
                a[i] = [x - q * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def int_solve(mat, b):
    """One integer solution x of mat x = b, or None."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    if m == 0:
        return [0] * n
    u, d, v = smith_normal_form(mat)
    c = _int_mat_vec(u, b)
    y = [0] * n
    for i in range(m):
        di = d[i][i] if i < min(m, n) else 0
        if di:
            if c[i] % di:
                return None
            y[i] = c[i] // di
        elif c[i]:
            return None
    return _int_mat_vec(v, y)


def int_kernel(mat):
    """Basis (list of vectors) of the integer null space of mat."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    if m == 0:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    _, d, v = smith_normal_form(mat)
    cols = [j for j in range(n) if j >= min(m, n) or d[j][j] == 0]
    return [[v[i][j] for i in range(n)] for j in cols]


# ---------------------------------------------------------------------------
# groups and elements


class FgAbelianGroup:
    """Z^n modulo the row lattice of a relation matrix."""

    def __init__(self, ngens, relations):
        self.ngens = ngens
        self.relations = [list(map(int, row)) for row in relations]
        for row in self.relations:
            if len(row) != ngens:
                raise IllDefined("relation length does not match generator count")
        _, d, v = smith_normal_form(self.relations) if self.relations else (
            None,
            [],
            _identity_int(ngens),
        )
        m = len(self.relations)
        orders = []
        for j in range(ngens):
            orders.append(d[j][j] if j < min(m, ngens) else 0)
        self._v = v
        self._vinv = _int_inverse_unimodular(v)
        free = [j for j in range(ngens) if orders[j] == 0]
        torsion = [j for j in range(ngens) if orders[j] >= 2]
        self._positions = free + torsion
        self.free_rank = len(free)
        self.invariant_factors = tuple(orders[j] for j in torsion)

    # -- basic structure ----------------------------------------------------

    @property
    def coord_len(self):
        return self.free_rank + len(self.invariant_factors)

    def is_finite(self):
        return self.free_rank == 0

    def order(self):
        if not self.is_finite():
            raise InfiniteGroup("group has positive free rank")
        return math.prod(self.invariant_factors) if self.invariant_factors else 1

    def is_trivial(self):
        return self.coord_len == 0

    def _reduce(self, coords):
        out = list(coords[: self.free_rank])
        for i, d in enumerate(self.invariant_factors):
            out.append(coords[self.free_rank + i] % d)
        return tuple(out)

    def identity(self):
        return GroupElement(self, (0,) * self.coord_len)

    def element(self, raw_coords):
        """Element from raw presentation coordinates."""
        if len(raw_coords) != self.ngens:
            raise IllDefined("raw coordinate length mismatch")
        full = [
            sum(self._v[i][j] * raw_coords[i] for i in range(self.ngens))
            for j in range(self.ngens)
        ]
        return GroupElement(self, self._reduce([full[p] for p in self._positions]))

    def from_canonical(self, coords):
        if len(coords) != self.coord_len:
            raise IllDefined("canonical coordinate length mismatch")
        return GroupElement(self, self._reduce(list(map(int, coords))))

    def canonical_generators(self):
        out = []
        for i in range(self.coord_len):
            coords = [0] * self.coord_len
            coords[i] = 1
            out.append(GroupElement(self, self._reduce(coords)))
        return out

    def raw_coords_of_canonical_generator(self, i):
        """The canonical generator as a word in the presentation generators."""
        return list(self._vinv[self._positions[i]])

    def generator_order(self, i):
        """0 for a free canonical generator, else its invariant factor."""
        if i < self.free_rank:
            return 0
        return self.invariant_factors[i - self.free_rank]

    def elements(self):
        if not self.is_finite():
            raise InfiniteGroup("cannot enumerate an infinite group")
        for tup in iter_product(*(range(d) for d in self.invariant_factors)):
            yield GroupElement(self, tup)

    def torsion_lattice_rows(self):
        """Rows spanning the kernel of Z^coord_len -> group (canonical coords)."""
        rows = []
        for i, d in enumerate(self.invariant_factors):
            row = [0] * self.coord_len
            row[self.free_rank + i] = d
            rows.append(row)
        return rows

    def same_presentation(self, other):
        return (
            self is other
            or (self.ngens == other.ngens and self.relations == other.relations)
        )

    def invariants(self):
        return (self.free_rank, self.invariant_factors)

    def __repr__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.invariant_factors]
        return "<group " + (" x ".join(parts) or "1") + ">"


def free_group(rank):
    return FgAbelianGroup(rank, [])


def cyclic_group(n):
    return FgAbelianGroup(1, [[n]])


def direct_product(*groups):
    """Product group plus embedding and projection homs for each factor."""
    ngens = sum(g.ngens for g in groups)
    relations = []
    offset = 0
    for g in groups:
        for row in g.relations:
            relations.append([0] * offset + row + [0] * (ngens - offset - g.ngens))
        offset += g.ngens
    prod = FgAbelianGroup(ngens, relations)
    embeddings, projections = [], []
    offset = 0
    for g in groups:
        emb_raw = []
        for i in range(g.ngens):
            raw = [0] * ngens
            raw[offset + i] = 1
            emb_raw.append(prod.element(raw))
        embeddings.append(hom_on_raw_generators(g, prod, emb_raw))
        proj_raw = []
        for i in range(ngens):
            raw = [0] * g.ngens
            if offset <= i < offset + g.ngens:
                raw[i - offset] = 1
            proj_raw.append(g.element(raw))
        projections.append(hom_on_raw_generators(prod, g, proj_raw))
        offset += g.ngens
    return prod, embeddings, projections


class GroupElement:
    __slots__ = ("group", "coords")

    def __init__(self, group, coords):
        self.group = group
        self.coords = tuple(coords)

    def __mul__(self, other):
        if other.group is not self.group and not self.group.same_presentation(
            other.group
        ):
            raise IllDefined("elements from different groups")
        return GroupElement(
            self.group,
            self.group._reduce([a + b for a, b in zip(self.coords, other.coords)]),
        )

    def inverse(self):
        return GroupElement(self.group, self.group._reduce([-a for a in self.coords]))

    def __pow__(self, k):
        return GroupElement(
            self.group, self.group._reduce([a * int(k) for a in self.coords])
        )

    def is_identity(self):
        return not any(self.coords)

    def order(self):
        """Multiplicative order; None when infinite."""
        if any(self.coords[: self.group.free_rank]):
            return None
        n = 1
        for c, d in zip(
            self.coords[self.group.free_rank :], self.group.invariant_factors
        ):
            if c:
                n = math.lcm(n, d // math.gcd(c, d))
        return n

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and self.coords == other.coords
            and self.group.same_presentation(other.group)
        )

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"g{self.coords}"


# ---------------------------------------------------------------------------
# homomorphisms


class GroupHom:
    """Hom determined by images of the domain's canonical generators."""

    def __init__(self, domain, codomain, images):
        self.domain = domain
        self.codomain = codomain
        self.images = tuple(images)
        if len(self.images) != domain.coord_len:
            raise IllDefined("one image per canonical generator required")
        for i, img in enumerate(self.images):
            d = domain.generator_order(i)
            if d and not (img**d).is_identity():
                raise IllDefined(
                    f"generator of order {d} sent to an element not killed by {d}"
                )

    def __call__(self, el):
        if not el.group.same_presentation(self.domain):
            raise IllDefined("element not in the domain")
        result = self.codomain.identity()
        for c, img in zip(el.coords, self.images):
            if c:
                result = result * img**c
        return result

    def compose(self, inner):
        """self after inner."""
        return GroupHom(
            inner.domain, self.codomain, [self(img) for img in inner.images]
        )

    def matrix(self):
        """Integer matrix, one row of codomain canonical coordinates per generator."""
        return [list(img.coords) for img in self.images]

    def __eq__(self, other):
        return (
            isinstance(other, GroupHom)
            and self.domain.same_presentation(other.domain)
            and self.codomain.same_presentation(other.codomain)
            and self.images == other.images
        )

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"<hom {self.domain} -> {self.codomain} {list(self.images)}>"


def hom(domain, codomain, images):
    return GroupHom(domain, codomain, images)


def hom_on_raw_generators(domain, codomain, raw_images):
    """Hom from images of the presentation generators.

    Raises IllDefined when some relation is not killed.
    """
    if len(raw_images) != domain.ngens:
        raise IllDefined("one image per presentation generator required")
    for row in domain.relations:
        acc = codomain.identity()
        for c, img in zip(row, raw_images):
            if c:
                acc = acc * img**c
        if not acc.is_identity():
            raise IllDefined("a defining relation maps to a nonidentity element")
    images = []
    for i in range(domain.coord_len):
        word = domain.raw_coords_of_canonical_generator(i)
        acc = codomain.identity()
        for c, img in zip(word, raw_images):
            if c:
                acc = acc * img**c
        images.append(acc)
    return GroupHom(domain, codomain, images)


def identity_hom(group):
    return GroupHom(group, group, group.canonical_generators())


def inverse_hom(h):
    """Inverse of a group isomorphism."""
    if not is_isomorphism(h):
        raise IllDefined("only isomorphisms can be inverted")
    images = [preimage(h, c) for c in h.codomain.canonical_generators()]
    return GroupHom(h.codomain, h.domain, images)


# ---------------------------------------------------------------------------
# subgroups, kernels, images, quotients


def member_of_subgroup(group, gens, el):
    """Integer coefficients writing el as a product of gens, or None."""
    if group.coord_len == 0:
        return [0] * len(gens)
    cols = [list(g.coords) for g in gens]
    lattice = group.torsion_lattice_rows()
    n = group.coord_len
    mat = [[cols[j][i] for j in range(len(cols))] + [row[i] for row in lattice]
           for i in range(n)]
    target = list(el.coords)
    sol = int_solve(mat, target)
    if sol is None:
        return None
    return sol[: len(gens)]


def subgroup(group, elements):
    """The subgroup generated by the given elements.

    Returns (S, embed) with S an FgAbelianGroup presented on the given
    elements and embed: S -> group the inclusion.
    """
    gens = [e for e in elements if not e.is_identity()]
    if not gens:
        trivial = FgAbelianGroup(0, [])
        return trivial, GroupHom(trivial, group, [])
    t = len(gens)
    n = group.coord_len
    lattice = group.torsion_lattice_rows()
    # relations among the gens: integer kernel of [gens | torsion lattice]
    mat = [
        [gens[j].coords[i] for j in range(t)] + [row[i] for row in lattice]
        for i in range(n)
    ]
    rows = [vec[:t] for vec in int_kernel(mat)]
    s = FgAbelianGroup(t, rows)
    return s, hom_on_raw_generators(s, group, gens)


def kernel(h):
    """(K, embed) for the kernel of a hom."""
    dom, cod = h.domain, h.codomain
    lattice = cod.torsion_lattice_rows()
    mat_cols = [list(img.coords) for img in h.images] + lattice
    if dom.coord_len + len(lattice) == 0:
        return subgroup(dom, [])
    mat = [
        [col[i] for col in mat_cols] for i in range(cod.coord_len)
    ]
    vecs = [v[: dom.coord_len] for v in int_kernel(mat)] if mat else [
        [int(i == j) for j in range(dom.coord_len)] for i in range(dom.coord_len)
    ]
    elements = [dom.from_canonical(v) for v in vecs]
    return subgroup(dom, elements)


def image(h):
    return subgroup(h.codomain, list(h.images))


def quotient(group, elements):
    """(Q, projection) for group modulo the subgroup the elements generate."""
    n = group.coord_len
    rows = group.torsion_lattice_rows() + [list(e.coords) for e in elements]
    q = FgAbelianGroup(n, rows)
    images = []
    for i in range(n):
        raw = [0] * n
        raw[i] = 1
        images.append(q.element(raw))
    return q, GroupHom(group, q, images)


def preimage(h, target):
    """Some element mapping to target under h, or None."""
    coeffs = member_of_subgroup(h.codomain, list(h.images), target)
    if coeffs is None:
        return None
    el = h.domain.from_canonical(coeffs)
    assert h(el) == target
    return el


def is_surjective(h):
    q, _ = quotient(h.codomain, list(h.images))
    return q.is_trivial()

def is_injective(h):
    k, _ = kernel(h)
    return k.is_trivial()


def is_isomorphism(h):
    return is_surjective(h) and is_injective(h)


# ---------------------------------------------------------------------------
# characters


class Character:
    """Group hom into the multiplicative group of a field.

    Stored as one field unit per canonical generator of a group.
    """

    def __init__(self, group, field, values):
        self.group = group
        self.field = field
        self.values = tuple(values)
        if len(self.values) != group.coord_len:
            raise IllDefined("one value per canonical generator required")

    def __call__(self, el):
        if not el.group.same_presentation(self.group):
            raise IllDefined("element not in the character's group")
        out = self.field.one()
        for c, v in zip(el.coords, self.values):
            if c:
                out = out * v**c
        return out

    def __mul__(self, other):
        return Character(
            self.group,
            self.field,
            [a * b for a, b in zip(self.values, other.values)],
        )

    def is_trivial(self):
        one = self.field.one()
        return all(v == one for v in self.values)

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and self.group.same_presentation(other.group)
            and self.field == other.field
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.field, self.values))

    def __repr__(self):
        return f"<character {list(self.values)}>"


def characters_of_finite_group(group, field):
    """All |G| characters, in lexicographic order of exponent tuples.

    The character at exponent tuple (k_1, ..., k_s) sends the i-th canonical
    generator to w_i^{k_i} with w_i the canonical root of unity of order d_i.
    Raises NoSuchRoot when the field lacks the roots, InfiniteGroup when the
    group is not finite.
    """
    if not group.is_finite():
        raise InfiniteGroup("character enumeration needs a finite group")
    roots = [root_of_unity(field, d) for d in group.invariant_factors]
    out = []
    for tup in iter_product(*(range(d) for d in group.invariant_factors)):
        out.append(Character(group, field, [w**k for w, k in zip(roots, tup)]))
    return out


def _extend_value(field, target, m):
    """Least-exponent root v with v^m == target, target a root of unity."""
    if field.kind == "prime":
        # small field: direct scan
        for r in range(1, field.p):
            v = field.scalar(r)
            if v**m == target:
                return v
        raise NoSuchRoot(f"no {m}-th root of {target!r}", order=m)
    big = field.max_root_order()
    eta = field.primitive_root_of_unity()
    x = field.one()
    a = None
    for k in range(big):
        if x == target:
            a = k
            break
        x = x * eta
    if a is None:
        raise NoSuchRoot("character value is not a stored root of unity")
    for j in range(big):
        if (j * m) % big == a:
            return eta**j
    raise NoSuchRoot(
        f"no {m}-th root of unity solves x^{m} = eta^{a}", order=m * big // math.gcd(m, big)
    )


def extend_character(chi, embed, field=None):
    """Extend a character on a finite subgroup K to the whole group G.

    chi is a Character on K, embed: K -> G the inclusion.  Canonical
    generators of G are absorbed one at a time; a generator acquiring no
    constraint gets the value 1, and constrained values take the least
    admissible power of the field's primitive root of unity.  Raises
    NoSuchRoot when the field lacks a needed root.
    """
    field = field or chi.field
    g = embed.codomain
    sub_gens = [embed(x) for x in chi.group.canonical_generators()]
    sub_vals = list(chi.values)
    values = []
    for e in g.canonical_generators():
        q, proj = quotient(g, sub_gens)
        m = proj(e).order()
        if m is None:
            v = field.one()
        else:
            target_el = e**m
            coeffs = member_of_subgroup(g, sub_gens, target_el)
            assert coeffs is not None
            target = field.one()
            for c, val in zip(coeffs, sub_vals):
                if c:
                    target = target * val**c
            v = _extend_value(field, target, m)
        values.append(v)
        sub_gens.append(e)
        sub_vals.append(v)
    chi_ext = Character(g, field, values)
    # the extension must restrict back to chi
    for x, val in zip(chi.group.canonical_generators(), chi.values):
        assert chi_ext(embed(x)) == val
    return chi_ext


# ---------------------------------------------------------------------------
# lifting homs along quotients


def solve_hom_extension(alpha, pi1, pi2, require_iso=True):
    """Fill the square pi2 . lift = alpha . pi1 by exhaustive search.

    alpha: Gbar1 -> Gbar2, pi1: G1 -> Gbar1, pi2: G2 -> Gbar2, with finite
    ker(pi2).  The candidate images of each canonical generator of G1 form a
    coset of a subgroup of ker(pi2); the full (finite) product is enumerated.

    Returns a GroupHom, or None when lifts exist but none is an isomorphism
    (only possible with require_iso).  Raises NoLift when no hom lift exists
    at all.
    """
    g1, g2 = pi1.domain, pi2.domain
    ker2, ker2_embed = kernel(pi2)
    if not ker2.is_finite():
        raise InfiniteGroup("kernel of pi2 must be finite")
    ker2_elements = [ker2_embed(x) for x in ker2.elements()]
    option_lists = []
    for i, gen in enumerate(g1.canonical_generators()):
        target = alpha(pi1(gen))
        base = preimage(pi2, target)
        if base is None:
            raise NoLift(f"generator {i}: target degree has no preimage")
        d = g1.generator_order(i)
        options = []
        for k in ker2_elements:
            candidate = base * k
            if d and not (candidate**d).is_identity():
                continue
            options.append(candidate)
        if not options:
            raise NoLift(f"generator {i}: no preimage respects its order {d}")
        options.sort(key=lambda e: e.coords)
        option_lists.append(options)
    for combo in iter_product(*option_lists):
        lift = GroupHom(g1, g2, list(combo))
        if not require_iso or is_isomorphism(lift):
            return lift
    return None
