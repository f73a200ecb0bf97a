"""Gradings on structure-constant algebras.

A grading is a set of nonzero subspaces whose direct sum is the whole
algebra, such that every nonzero product of two components lands inside a
single component.  Attaching an injective, product-compatible degree map
into an abelian group turns it into a group grading.
"""

from . import linalg
from .abgroup import FgAbelianGroup, hom_on_raw_generators, is_isomorphism
from .algebra import (
    AlgebraMap,
    Subspace,
    full_space,
    product_algebra,
    product_subspace,
    restrict_to_subspace,
)
from .errors import (
    IncompatibleDegrees,
    NotClosed,
    NotDirectSum,
    NotGradedSubalgebra,
    NotGroupGrading,
)


class Grading:
    """A validated grading: canonical component order plus product table.

    Use validate_grading to construct one; the constructor trusts its input.
    product_table maps a component index pair (i, j) to the index of the
    component containing the (nonzero) product.
    """

    __slots__ = ("algebra", "components", "product_table")

    def __init__(self, algebra, components, product_table):
        self.algebra = algebra
        self.components = list(components)
        self.product_table = dict(product_table)

    def __len__(self):
        return len(self.components)

    def __eq__(self, other):
        return (
            isinstance(other, Grading)
            and self.algebra.structure_equal(other.algebra)
            and self.components == other.components
        )

    def __hash__(self):
        return hash(tuple(self.components))

    def is_trivial(self):
        return len(self.components) == 1

    def component_index_containing(self, space):
        for k, w in enumerate(self.components):
            if w.contains(space):
                return k
        return None

    def __repr__(self):
        dims = [u.dim for u in self.components]
        return f"<grading with component dims {dims}>"


def validate_grading(algebra, subspaces):
    """Certify that the given subspaces form a grading of the algebra.

    Raises NotDirectSum when the components fail to decompose the algebra,
    NotClosed when some nonzero product is not contained in any single
    component.  Components come out in canonical order.
    """
    comps = sorted(subspaces, key=lambda s: s.sort_key())
    if any(s.is_zero() for s in comps):
        raise NotDirectSum("zero subspace listed as a component")
    rows = [row for s in comps for row in s.rows]
    if len(rows) != algebra.dim:
        raise NotDirectSum(
            f"component dimensions sum to {len(rows)}, expected {algebra.dim}"
        )
    stacked = Subspace(algebra.field, algebra.dim, rows)
    if stacked.dim != algebra.dim:
        raise NotDirectSum("components are not independent")
    table = {}
    for i, u in enumerate(comps):
        for j, v in enumerate(comps):
            p = product_subspace(algebra, u, v)
            if p.is_zero():
                continue
            hits = [k for k, w in enumerate(comps) if w.contains(p)]
            if not hits:
                raise NotClosed(
                    f"product of components {i} and {j} is not contained "
                    "in a single component"
                )
            # independence makes the witness unique
            table[(i, j)] = hits[0]
    return Grading(algebra, comps, table)


def trivial_grading(algebra):
    return validate_grading(algebra, [full_space(algebra.field, algebra.dim)])


def universal_group(grading):
    """The abelian group presented by the components and product relators.

    Returns (group, degrees) where degrees[i] is the class of component i:
    one generator per component, one relator u_i + u_j - u_k per table
    entry (i, j) -> k.
    """
    n = len(grading.components)
    relations = []
    for (i, j), k in sorted(grading.product_table.items()):
        row = [0] * n
        row[i] += 1
        row[j] += 1
        row[k] -= 1
        relations.append(row)
    group = FgAbelianGroup(n, relations)
    degrees = []
    for i in range(n):
        raw = [0] * n
        raw[i] = 1
        degrees.append(group.element(raw))
    return group, degrees


def is_group_grading(grading):
    """True when distinct components get distinct universal degrees."""
    _, degrees = universal_group(grading)
    return len(set(degrees)) == len(degrees)


class GGrading:
    """A grading together with a group and an injective degree map.

    components and degrees are aligned lists in canonical component order.
    """

    __slots__ = ("algebra", "group", "components", "degrees", "product_table")

    def __init__(self, algebra, group, components, degrees):
        if len(components) != len(degrees):
            raise IncompatibleDegrees("one degree per component required")
        paired = sorted(zip(components, degrees), key=lambda p: p[0].sort_key())
        comps = [p[0] for p in paired]
        degs = [p[1] for p in paired]
        base = validate_grading(algebra, comps)
        if len(set(degs)) != len(degs):
            raise NotGroupGrading("degree map is not injective")
        for (i, j), k in base.product_table.items():
            if degs[i] * degs[j] != degs[k]:
                raise IncompatibleDegrees(
                    f"product of components {i} and {j} lands in component "
                    f"{k} but the degrees do not multiply accordingly"
                )
        self.algebra = algebra
        self.group = group
        self.components = base.components
        self.degrees = degs
        self.product_table = base.product_table

    def __len__(self):
        return len(self.components)

    def grading(self):
        return Grading(self.algebra, self.components, self.product_table)

    def support(self):
        return list(self.degrees)

    def component_of_degree(self, g):
        for d, u in zip(self.degrees, self.components):
            if d == g:
                return u
        return None

    def degree_of_index(self, i):
        return self.degrees[i]

    def __eq__(self, other):
        return (
            isinstance(other, GGrading)
            and self.algebra.structure_equal(other.algebra)
            and self.group.same_presentation(other.group)
            and self.components == other.components
            and self.degrees == other.degrees
        )

    def __hash__(self):
        return hash((tuple(self.components), tuple(self.degrees)))

    def __repr__(self):
        return f"<{self.group}-grading with {len(self.components)} components>"


def universal_realization(grading):
    """Realize a group-grading over its universal group.

    Raises NotGroupGrading when the universal degree map is not injective.
    """
    group, degrees = universal_group(grading)
    if len(set(degrees)) != len(degrees):
        raise NotGroupGrading("universal degree map is not injective")
    return GGrading(grading.algebra, group, grading.components, degrees)


def is_universal_realization(gg):
    """True when the degree map identifies the grading group with the
    universal group of the underlying grading."""
    u, _ = universal_group(gg.grading())
    beta = hom_on_raw_generators(u, gg.group, list(gg.degrees))
    return is_isomorphism(beta)


def induced_group_grading(grading):
    """Merge components with equal universal degree (the finest coarsening
    which is a group grading, realized over the universal group)."""
    group, degrees = universal_group(grading)
    merged = {}
    for comp, deg in zip(grading.components, degrees):
        if deg in merged:
            merged[deg] = merged[deg].add(comp)
        else:
            merged[deg] = comp
    comps = list(merged.values())
    degs = list(merged.keys())
    return GGrading(grading.algebra, group, comps, degs)


def coarsen_by_hom(gg, beta):
    """The coarsening induced by a group homomorphism out of gg's group."""
    if not gg.group.same_presentation(beta.domain):
        raise IncompatibleDegrees("homomorphism domain does not match grading group")
    merged = {}
    for comp, deg in zip(gg.components, gg.degrees):
        image = beta(deg)
        if image in merged:
            merged[image] = merged[image].add(comp)
        else:
            merged[image] = comp
    return GGrading(
        gg.algebra, beta.codomain, list(merged.values()), list(merged.keys())
    )


def refinement_map(fine, coarse):
    """Indices pi with fine.components[i] <= coarse.components[pi[i]].

    Returns None when fine does not refine coarse.
    """
    out = []
    for u in fine.components:
        k = coarse.component_index_containing(u)
        if k is None:
            return None
        out.append(k)
    # every coarse component is a sum of fine ones, so pi is onto
    assert set(out) == set(range(len(coarse.components)))
    return out


def is_refinement(fine, coarse):
    return refinement_map(fine, coarse) is not None


def restrict_grading(grading, space):
    """The induced grading on a graded subalgebra.

    Returns (subalgebra, restricted grading, embedding map); the subspace
    must split into its intersections with the components, else
    NotGradedSubalgebra.  For a GGrading input the degrees of the surviving
    components are kept (returns a GGrading).
    """
    algebra = grading.algebra
    pieces = []
    kept = []
    for idx, u in enumerate(grading.components):
        w = u.intersect(space)
        if not w.is_zero():
            pieces.append(w)
            kept.append(idx)
    if sum(w.dim for w in pieces) != space.dim:
        raise NotGradedSubalgebra(
            "subspace is not the sum of its intersections with the components"
        )
    sub, embed = restrict_to_subspace(algebra, space)
    carried = []
    for w in pieces:
        coords = [space.coordinates_of(row) for row in w.rows]
        carried.append(Subspace(algebra.field, sub.dim, coords))
    if isinstance(grading, GGrading):
        degs = [grading.degrees[i] for i in kept]
        return sub, GGrading(sub, grading.group, carried, degs), embed
    return sub, validate_grading(sub, carried), embed


def product_grading(gradings):
    """Blockwise grading on the product algebra of the factors.

    Returns (product algebra, grading, embeddings); each component of each
    factor is embedded in its own block.
    """
    algebras = [g.algebra for g in gradings]
    prod, offsets = product_algebra(algebras)
    field = prod.field
    comps = []
    for g, off in zip(gradings, offsets):
        for u in g.components:
            rows = []
            for row in u.rows:
                big = [field.zero()] * prod.dim
                big[off : off + g.algebra.dim] = row
                rows.append(big)
            comps.append(Subspace(field, prod.dim, rows))
    return prod, validate_grading(prod, comps), offsets


def free_product_group_grading(gradings):
    """Induced group grading of the blockwise product.

    Every factor must be a group grading (NotGroupGrading otherwise); the
    resulting universal group is the direct product of the factors'
    universal groups.
    """
    for i, g in enumerate(gradings):
        base = g.grading() if isinstance(g, GGrading) else g
        if not is_group_grading(base):
            raise NotGroupGrading(f"factor {i} is not a group grading")
    plain = [g.grading() if isinstance(g, GGrading) else g for g in gradings]
    prod, gamma, offsets = product_grading(plain)
    return prod, induced_group_grading(gamma), offsets


def product_G_grading(group, ggradings):
    """Degreewise product of gradings by one shared group.

    The component of degree g is the direct sum of the factors' degree-g
    components inside the product algebra.
    """
    for gg in ggradings:
        if not group.same_presentation(gg.group):
            raise IncompatibleDegrees("factors are graded by different groups")
    prod, offsets = product_algebra([gg.algebra for gg in ggradings])
    field = prod.field
    merged = {}
    for gg, off in zip(ggradings, offsets):
        for u, deg in zip(gg.components, gg.degrees):
            rows = []
            for row in u.rows:
                big = [field.zero()] * prod.dim
                big[off : off + gg.algebra.dim] = row
                rows.append(big)
            piece = Subspace(field, prod.dim, rows)
            merged[deg] = merged[deg].add(piece) if deg in merged else piece
    gg = GGrading(prod, group, list(merged.values()), list(merged.keys()))
    return prod, gg, offsets


def adapted_basis(grading):
    """Rows of all components, stacked in canonical component order."""
    return [row for u in grading.components for row in u.rows]


def diagonal_automorphism(gg, chi):
    """The automorphism scaling each component by the character value of
    its degree.  The result is certified; a failure would contradict the
    compatibility of the degree map."""
    algebra = gg.algebra
    field = algebra.field
    n = algebra.dim
    basis = adapted_basis(gg)
    scales = []
    for u, deg in zip(gg.components, gg.degrees):
        value = chi(deg)
        scales.extend([value] * u.dim)
    b_t = linalg.transpose(basis)
    scaled = [[scales[j] * b_t[i][j] for j in range(n)] for i in range(n)]
    matrix = linalg.mat_mul(scaled, linalg.inverse(b_t))
    auto = AlgebraMap(algebra, algebra, matrix)
    assert auto.is_homomorphism() and auto.is_bijective()
    return auto


def check_equivalence(phi, gamma1, gamma2):
    """Does the isomorphism phi carry each component of gamma1 onto a
    component of gamma2?

    On success returns (matching, alpha) where matching[i] is the index of
    the image component and alpha the induced isomorphism of universal
    groups; returns None otherwise.
    """
    assert phi.is_homomorphism() and phi.is_bijective()
    matching = []
    for u in gamma1.components:
        image = phi.image_of_subspace(u)
        try:
            k = gamma2.components.index(image)
        except ValueError:
            return None
        matching.append(k)
    if len(set(matching)) != len(gamma2.components):
        return None
    g1, deg1 = universal_group(gamma1)
    g2, deg2 = universal_group(gamma2)
    images = [deg2[matching[i]] for i in range(len(matching))]
    alpha = hom_on_raw_generators(g1, g2, images)
    assert is_isomorphism(alpha)
    return matching, alpha


def check_G_isomorphism(phi, gg1, gg2):
    """True when phi maps the degree-g component of gg1 onto the degree-g
    component of gg2 for every g (same grading group)."""
    if not gg1.group.same_presentation(gg2.group):
        return False
    assert phi.is_homomorphism() and phi.is_bijective()
    if sorted(d.coords for d in gg1.degrees) != sorted(
        d.coords for d in gg2.degrees
    ):
        return False
    for u, deg in zip(gg1.components, gg1.degrees):
        target = gg2.component_of_degree(deg)
        if target is None or phi.image_of_subspace(u) != target:
            return False
    return True
