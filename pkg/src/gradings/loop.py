"""Loop algebras of group-graded algebras.

Start from an algebra A graded by a group Gbar and a surjection
pi: G -> Gbar with finite kernel H.  The loop algebra

    L = sum over g in G of A_{pi(g)} (x) g

multiplies by (x(x)g)(y(x)g') = xy (x) gg' and carries a G-grading whose
component at g is A_{pi(g)} (x) g.  This module builds loops concretely,
transfers universal groups between base and loop, computes graded
centroids, splits a loop into |H| copies of the base when the
characteristic is coprime to |H|, exhibits a nilpotent ideal when it is
not, and recovers the base from a graded-central-simple algebra.
"""

from . import linalg
from .abgroup import (
    characters_of_finite_group,
    extend_character,
    hom_on_raw_generators,
    identity_hom,
    is_isomorphism,
    is_surjective,
    kernel,
    preimage,
    quotient,
)
from .algebra import (
    Algebra,
    AlgebraMap,
    Subspace,
    centroid,
    decompose_semisimple,
    is_ideal,
    product_algebra,
    product_subspace,
)
from .errors import (
    BaseNotUniversal,
    CentroidNotGraded,
    CertificationError,
    CharCoprime,
    CharDividesKernel,
    FieldTooSmall,
    IncompatibleDegrees,
    InfiniteKernel,
    NeedIsoCertificate,
    NotSurjective,
)
from .grading import (
    GGrading,
    check_G_isomorphism,
    coarsen_by_hom,
    product_G_grading,
    universal_group,
)

__all__ = [
    "LoopAlgebra",
    "GradedCentroidProfile",
    "build_loop",
    "verify_loop_universal",
    "graded_centroid",
    "is_graded_central_simple",
    "split_loop",
    "character_matrix",
    "nilpotent_witness",
    "shift_operator",
    "recover_base",
    "loop_iso_test",
]


class LoopAlgebra:
    """A realized loop algebra.

    base        the Gbar-graded algebra A
    pi          the surjection G -> Gbar
    kernel_group, kernel_embedding
                H = ker pi as an abstract group with its inclusion into G
    kernel_elements
                the elements of H inside G, in canonical coordinate order
    algebra     the structure-constant algebra L
    ggrading    the G-grading on L
    index       basis labels (component index, g, row index) in basis order
    """

    __slots__ = (
        "base",
        "pi",
        "kernel_group",
        "kernel_embedding",
        "kernel_elements",
        "algebra",
        "ggrading",
        "index",
        "_pos",
    )

    def __init__(self, base, pi, kernel_group, kernel_embedding,
                 kernel_elements, algebra, ggrading, index):
        self.base = base
        self.pi = pi
        self.kernel_group = kernel_group
        self.kernel_embedding = kernel_embedding
        self.kernel_elements = kernel_elements
        self.algebra = algebra
        self.ggrading = ggrading
        self.index = index
        self._pos = {
            (c, tuple(g.coords), r): i for i, (c, g, r) in enumerate(index)
        }

    def position(self, comp_idx, g, row_idx):
        return self._pos[(comp_idx, tuple(g.coords), row_idx)]

    def kernel_order(self):
        return len(self.kernel_elements)

    def __repr__(self):
        return (
            f"<loop algebra dim {self.algebra.dim}, kernel order "
            f"{len(self.kernel_elements)}>"
        )


def build_loop(base, pi):
    """Realize the loop algebra of a graded algebra along a surjection.

    base is a GGrading over Gbar, pi a group hom G -> Gbar.  Raises
    NotSurjective and InfiniteKernel when pi does not qualify.
    """
    if not base.group.same_presentation(pi.codomain):
        raise IncompatibleDegrees("pi must land in the grading group")
    if not is_surjective(pi):
        raise NotSurjective("the loop construction needs a surjection")
    kgroup, kembed = kernel(pi)
    if not kgroup.is_finite():
        raise InfiniteKernel("the kernel of pi must be finite")
    hset = sorted((kembed(x) for x in kgroup.elements()),
                  key=lambda e: e.coords)

    gdom = pi.domain
    alg = base.algebra
    field = alg.field

    # one fibre of pi per base component, each a coset of the kernel
    entries = []
    for c, dbar in enumerate(base.degrees):
        g0 = preimage(pi, dbar)
        assert g0 is not None
        fibre = sorted({g0 * h for h in hset}, key=lambda e: e.coords)
        for g in fibre:
            for r in range(base.components[c].dim):
                entries.append((c, g, r))
    entries.sort(key=lambda t: (t[0], t[1].coords, t[2]))
    n = len(entries)
    assert n == alg.dim * len(hset)

    pos = {(c, tuple(g.coords), r): i for i, (c, g, r) in enumerate(entries)}
    comp_of_degree = {d: i for i, d in enumerate(base.degrees)}

    labels = []
    for c, g, r in entries:
        labels.append(f"{c}.{r}@(" + ",".join(map(str, g.coords)) + ")")

    zero = [field.zero()] * n
    table = [[None] * n for _ in range(n)]
    for i, (c1, g1, r1) in enumerate(entries):
        x = base.components[c1].rows[r1]
        for j, (c2, g2, r2) in enumerate(entries):
            y = base.components[c2].rows[r2]
            prod = alg.multiply(x, y)
            if all(not t for t in prod):
                table[i][j] = list(zero)
                continue
            d3 = base.degrees[c1] * base.degrees[c2]
            c3 = comp_of_degree[d3]
            coords = base.components[c3].coordinates_of(prod)
            assert coords is not None
            g3 = g1 * g2
            vec = list(zero)
            for r3, t in enumerate(coords):
                if t:
                    vec[pos[(c3, tuple(g3.coords), r3)]] = t
            table[i][j] = vec
    loop_alg = Algebra(field, n, table, labels=labels)

    blocks = {}
    for i, (c, g, r) in enumerate(entries):
        blocks.setdefault(tuple(g.coords), (g, []))[1].append(i)
    comps, degs = [], []
    for key in sorted(blocks):
        g, idxs = blocks[key]
        rows = []
        for i in idxs:
            row = list(zero)
            row[i] = field.one()
            rows.append(row)
        comps.append(Subspace(field, n, rows))
        degs.append(g)
    gg = GGrading(loop_alg, gdom, comps, degs)

    return LoopAlgebra(base, pi, kgroup, kembed, tuple(hset), loop_alg, gg,
                       tuple(entries))


def verify_loop_universal(loop):
    """Certify that the universal group of the loop grading is G.

    Requires the base grading to live over its own universal group
    (BaseNotUniversal otherwise).  Returns a report with the isomorphism
    alpha: U -> G, the induced surjection onto the base universal group,
    the commuting-square check, and the kernel bijection check.
    """
    base = loop.base
    ubar, _ = universal_group(base.grading())
    beta = hom_on_raw_generators(ubar, base.group, list(base.degrees))
    if not is_isomorphism(beta):
        raise BaseNotUniversal(
            "the base grading group is not the universal group of the base"
        )

    gg = loop.ggrading
    u, _ = universal_group(gg.grading())
    alpha = hom_on_raw_generators(u, gg.group, list(gg.degrees))
    alpha_iso = is_isomorphism(alpha)

    # the class of the loop component at g maps to the class of the base
    # component at pi(g)
    raw_images = []
    for g in gg.degrees:
        c = base.degrees.index(loop.pi(g))
        raw = [0] * len(base.degrees)
        raw[c] = 1
        raw_images.append(ubar.element(raw))
    pi_u = hom_on_raw_generators(u, ubar, raw_images)

    square = True
    for i in range(len(gg.degrees)):
        raw = [0] * len(gg.degrees)
        raw[i] = 1
        gen = u.element(raw)
        if loop.pi(alpha(gen)) != beta(pi_u(gen)):
            square = False
            break

    ker_u, emb_u = kernel(pi_u)
    target = {tuple(h.coords) for h in loop.kernel_elements}
    hits = {tuple(alpha(emb_u(x)).coords) for x in ker_u.elements()}
    kernel_bijection = (
        ker_u.is_finite()
        and ker_u.order() == len(loop.kernel_elements)
        and hits == target
    )

    return {
        "base_universal": True,
        "alpha": alpha,
        "alpha_isomorphism": alpha_iso,
        "pi_universal": pi_u,
        "pi_universal_surjective": is_surjective(pi_u),
        "square_commutes": square,
        "kernel_bijection": kernel_bijection,
        "certified": alpha_iso and square and kernel_bijection,
    }


class GradedCentroidProfile:
    """Homogeneous decomposition of the centroid of a graded algebra.

    degrees and components are aligned: components[i] is a basis (a list of
    matrices) of the centroid elements shifting every homogeneous component
    by degrees[i].  support_group presents the support as an abstract group
    and support_embedding includes it into the grading group.
    """

    __slots__ = ("owner", "degrees", "components", "support_group",
                 "support_embedding")

    def __init__(self, owner, degrees, components, support_group,
                 support_embedding):
        self.owner = owner
        self.degrees = degrees
        self.components = components
        self.support_group = support_group
        self.support_embedding = support_embedding

    def dimension(self):
        return sum(len(c) for c in self.components)

    def component_of(self, g):
        for d, c in zip(self.degrees, self.components):
            if d == g:
                return list(c)
        return []

    def __repr__(self):
        return f"<graded centroid, support order {len(self.degrees)}>"


def _centroid_component(gg, cent, g):
    """Basis of the degree-g part of the centroid, inside span(cent)."""
    alg = gg.algebra
    field = alg.field
    rows = []
    for j, d in enumerate(gg.degrees):
        target = gg.component_of_degree(g * d)
        if target is None:
            target = Subspace(field, alg.dim, [])
        for v in gg.components[j].rows:
            residuals = [target._residual(linalg.mat_vec(m, v)) for m in cent]
            for s in range(alg.dim):
                rows.append([res[s] for res in residuals])
    coeff_vectors = linalg.kernel_basis(field, rows, len(cent))
    out = []
    for t in coeff_vectors:
        m = linalg.zeros(field, alg.dim, alg.dim)
        for coeff, c in zip(t, cent):
            if coeff:
                for a in range(alg.dim):
                    for b in range(alg.dim):
                        m[a][b] = m[a][b] + coeff * c[a][b]
        out.append(m)
    return out


def graded_centroid(gg):
    """Split the centroid of a graded algebra into homogeneous components.

    Degrees are probed over the difference set of the support; raises
    CentroidNotGraded when the homogeneous parts do not fill the centroid
    (which signals that the input was not graded-simple) or when the
    support fails to be a subgroup.
    """
    alg = gg.algebra
    field = alg.field
    cent = centroid(alg)

    seen = {}
    for d1 in gg.degrees:
        for d2 in gg.degrees:
            g = d1 * d2.inverse()
            seen.setdefault(tuple(g.coords), g)
    probes = [seen[k] for k in sorted(seen)]

    degrees, components = [], []
    for g in probes:
        basis = _centroid_component(gg, cent, g)
        if basis:
            degrees.append(g)
            components.append(tuple(basis))

    flat = []
    for basis in components:
        for m in basis:
            flat.append([x for row in m for x in row])
    if linalg.rank(flat) != len(cent):
        raise CentroidNotGraded(
            "homogeneous parts span a proper subspace of the centroid",
            centroid_dim=len(cent),
            graded_dim=linalg.rank(flat),
        )

    support = {tuple(g.coords) for g in degrees}
    for g in degrees:
        if tuple(g.inverse().coords) not in support:
            raise CentroidNotGraded("support not closed under inverses")
        for h in degrees:
            if tuple((g * h).coords) not in support:
                raise CentroidNotGraded("support not closed under products")

    from .abgroup import subgroup

    sgroup, sembed = subgroup(gg.group, degrees)
    return GradedCentroidProfile(gg, tuple(degrees), tuple(components),
                                 sgroup, sembed)


def is_graded_central_simple(gg):
    """Decide graded-simplicity and graded-centrality, with witnesses.

    The underlying algebra must be semisimple (decompose_semisimple is run
    first and NotSemisimple propagates).  A sum of simple ideals is a graded
    ideal exactly when it is spanned by its intersections with the
    homogeneous components; all proper sums are enumerated.  Returns a
    report dict.
    """
    alg = gg.algebra
    ideals = decompose_semisimple(alg)
    m = len(ideals)

    witness = None
    for mask in range(1, (1 << m) - 1):
        total = None
        for i in range(m):
            if mask & (1 << i):
                total = ideals[i] if total is None else total.add(ideals[i])
        graded_dim = 0
        for comp in gg.components:
            graded_dim += total.intersect(comp).dim
        if graded_dim == total.dim:
            witness = [i for i in range(m) if mask & (1 << i)]
            break
    graded_simple = witness is None

    cent = centroid(alg)
    identity_part = _centroid_component(gg, cent, gg.group.identity())
    graded_central = len(identity_part) == 1

    return {
        "simple_ideal_count": m,
        "graded_simple": graded_simple,
        "witness_ideals": witness,
        "graded_central": graded_central,
        "graded_central_simple": graded_simple and graded_central,
    }


def split_loop(loop):
    """Split a loop algebra into |H| copies of its base.

    Enumerates the characters of the kernel H, extends each to G, and maps
    x(x)g to the tuple of chi_j(g) x.  The result is certified as a
    bijective algebra homomorphism and an isomorphism of Gbar-graded
    algebras onto the product Gbar-grading of |H| base copies.  Returns
    (Phi, extended characters).  Raises CharDividesKernel in bad
    characteristic and NoSuchRoot when the field lacks the roots of unity.
    """
    base = loop.base
    field = base.algebra.field
    n = loop.kernel_order()
    p = field.characteristic()
    if p and n % p == 0:
        raise CharDividesKernel(
            "character splitting needs char coprime to the kernel order",
            characteristic=p,
            kernel_order=n,
        )

    chis = characters_of_finite_group(loop.kernel_group, field)
    extended = [extend_character(chi, loop.kernel_embedding, field)
                for chi in chis]

    target, offsets = product_algebra([base.algebra] * n)
    dim_a = base.algebra.dim
    matrix = linalg.zeros(field, target.dim, loop.algebra.dim)
    for i, (c, g, r) in enumerate(loop.index):
        x = base.components[c].rows[r]
        for j, chi in enumerate(extended):
            scale = chi(g)
            for s in range(dim_a):
                if x[s]:
                    matrix[offsets[j] + s][i] = scale * x[s]
    phi = AlgebraMap(loop.algebra, target, matrix)
    if not (phi.is_homomorphism() and phi.is_bijective()):
        raise CertificationError("splitting map failed certification")

    # the character matrix at each coset representative must be regular
    reps = {}
    for c, g, r in loop.index:
        reps.setdefault(c, g)
    for g in reps.values():
        mat = character_matrix(loop, extended, g)
        if not linalg.det(mat):
            raise CertificationError("singular character matrix")

    source_bar = coarsen_by_hom(loop.ggrading, loop.pi)
    prod_alg, target_bar, t_offsets = product_G_grading(
        base.group, [base] * n
    )
    assert prod_alg.structure_equal(target) and t_offsets == offsets
    phi_bar = AlgebraMap(loop.algebra, prod_alg, matrix)
    if not check_G_isomorphism(phi_bar, source_bar, target_bar):
        raise CertificationError("splitting map is not graded")
    return phi, extended


def character_matrix(loop, characters, g=None):
    """The matrix (chi_j(g h_i)) over the kernel elements h_i."""
    if g is None:
        g = loop.pi.domain.identity()
    return [
        [chi(g * h) for chi in characters]
        for h in loop.kernel_elements
    ]


def shift_operator(loop, h):
    """The centroid element of the loop sending x(x)g to x(x)hg."""
    field = loop.algebra.field
    n = loop.algebra.dim
    m = linalg.zeros(field, n, n)
    one = field.one()
    for i, (c, g, r) in enumerate(loop.index):
        m[loop.position(c, h * g, r)][i] = one
    return m


def nilpotent_witness(loop):
    """A nonzero proper ideal of zero square when char divides |H|.

    Returns (ctilde, ideal) where ctilde is the sum of all kernel shift
    operators: a centroid element with ctilde^2 = 0 whose image is the
    ideal.  Raises CharCoprime when the characteristic does not divide the
    kernel order.
    """
    field = loop.algebra.field
    n = loop.kernel_order()
    p = field.characteristic()
    if not p or n % p:
        raise CharCoprime(
            "a nilpotent witness needs char dividing the kernel order",
            characteristic=p,
            kernel_order=n,
        )

    dim = loop.algebra.dim
    ctilde = linalg.zeros(field, dim, dim)
    for h in loop.kernel_elements:
        s = shift_operator(loop, h)
        for i in range(dim):
            for j in range(dim):
                ctilde[i][j] = ctilde[i][j] + s[i][j]

    # centroid membership: ctilde commutes with every multiplication
    for op in loop.algebra.mult_operators():
        if linalg.mat_mul(ctilde, op) != linalg.mat_mul(op, ctilde):
            raise CertificationError("shift sum left the centroid")
    square = linalg.mat_mul(ctilde, ctilde)
    if any(any(x for x in row) for row in square):
        raise CertificationError("shift sum does not square to zero")

    cols = [[ctilde[i][j] for i in range(dim)] for j in range(dim)]
    ideal = Subspace(field, dim, cols)
    if ideal.dim == 0 or ideal.dim == dim:
        raise CertificationError("witness ideal is not proper and nonzero")
    if not is_ideal(loop.algebra, ideal):
        raise CertificationError("witness image is not an ideal")
    if product_subspace(loop.algebra, ideal, ideal).dim != 0:
        raise CertificationError("witness ideal has nonzero square")
    return ctilde, ideal


def recover_base(gg):
    """Recover a base grading and surjection realizing gg as a loop.

    The input must be graded-central-simple with semisimple underlying
    algebra.  The kernel H is the support of the graded centroid; the base
    is the quotient of the algebra by the complement of the canonical
    simple ideal, graded by G/H.  Returns (pi, base GGrading, iso) with
    iso a certified G-graded isomorphism from gg onto the rebuilt loop.
    Raises FieldTooSmall when the centroid does not split into |H| lines.
    """
    alg = gg.algebra
    field = alg.field
    group = gg.group

    profile = graded_centroid(gg)
    hset = sorted(profile.degrees, key=lambda e: e.coords)
    nker = len(hset)

    if nker == 1:
        pi = identity_hom(group)
        base_gg = gg
    else:
        qgroup, pi = quotient(group, list(hset))
        ideals = decompose_semisimple(alg)
        if len(ideals) != nker:
            raise FieldTooSmall(
                "the centroid does not split into kernel-order many lines",
                ideals=len(ideals),
                kernel_order=nker,
            )
        rest = None
        for sp in ideals[1:]:
            rest = sp if rest is None else rest.add(sp)
        from .algebra import quotient_algebra

        quot, proj = quotient_algebra(alg, rest)

        comps = {}
        for c, g in enumerate(gg.degrees):
            image = proj.image_of_subspace(gg.components[c])
            key = tuple(pi(g).coords)
            if key in comps:
                if comps[key][0] != image:
                    raise CertificationError(
                        "recovered components are not well defined"
                    )
            else:
                comps[key] = (image, pi(g))
        base_gg = GGrading(
            quot,
            qgroup,
            [comps[k][0] for k in sorted(comps)],
            [comps[k][1] for k in sorted(comps)],
        )

    loop = build_loop(base_gg, pi)

    # x in the degree-g component maps to (x mod the complement) (x) g
    adapted = []
    columns = []
    for c, g in enumerate(gg.degrees):
        cbar = base_gg.degrees.index(loop.pi(g))
        wspace = base_gg.components[cbar]
        for x in gg.components[c].rows:
            adapted.append(list(x))
            if nker == 1:
                image_vec = list(x)
            else:
                image_vec = proj.apply(x)
            coords = wspace.coordinates_of(image_vec)
            assert coords is not None
            col = [field.zero()] * loop.algebra.dim
            for r, t in enumerate(coords):
                if t:
                    col[loop.position(cbar, g, r)] = t
            columns.append(col)
    basis_t = linalg.transpose(adapted)
    image_t = linalg.transpose(columns)
    matrix = linalg.mat_mul(image_t, linalg.inverse(basis_t))
    iso = AlgebraMap(alg, loop.algebra, matrix)
    if not (iso.is_homomorphism() and iso.is_bijective()):
        raise CertificationError("base recovery map failed certification")
    if not check_G_isomorphism(iso, gg, loop.ggrading):
        raise CertificationError("base recovery map is not graded")
    return pi, base_gg, iso


def loop_iso_test(loop1, loop2, base_iso=None):
    """Loops over the same G are isomorphic as G-graded algebras iff their
    kernels coincide and their bases are isomorphic as Gbar-graded algebras.

    Kernel inequality decides negatively.  Equal kernels need a base
    isomorphism certificate unless the bases are literally equal; raises
    NeedIsoCertificate when none is supplied and CertificationError when a
    supplied certificate fails.
    """
    if not loop1.pi.domain.same_presentation(loop2.pi.domain):
        raise IncompatibleDegrees("loops must be graded by the same group")
    h1 = {tuple(h.coords) for h in loop1.kernel_elements}
    h2 = {tuple(h.coords) for h in loop2.kernel_elements}
    if h1 != h2:
        return False
    if loop1.base == loop2.base:
        return True
    if base_iso is None:
        raise NeedIsoCertificate(
            "equal kernels: supply a graded isomorphism of the bases"
        )
    if not (base_iso.is_homomorphism() and base_iso.is_bijective()):
        raise CertificationError("base certificate is not an isomorphism")
    if not check_G_isomorphism(base_iso, loop1.base, loop2.base):
        raise CertificationError("base certificate is not graded")
    return True
