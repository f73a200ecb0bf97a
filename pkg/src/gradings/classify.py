"""Classification workflows for graded semisimple algebras, plus a catalog.

The high-level routines split a graded semisimple algebra into graded-simple
factors, decide fineness of free product group-gradings from per-factor
fineness flags, and extend base equivalences to loop algebras by lifting the
induced group isomorphism through the defining surjections.  The catalog
constructs a fixed family of worked instances (each with golden checks) used
by the test suite and the command line front end.
"""

from . import linalg
from .abgroup import (
    cyclic_group,
    direct_product,
    free_group,
    hom,
    hom_on_raw_generators,
    inverse_hom,
    solve_hom_extension,
    subgroup,
)
from .algebra import (
    Algebra,
    AlgebraMap,
    Subspace,
    decompose_semisimple,
    identity_map,
    is_simple,
    left_unities,
    product_algebra,
)
from .errors import (
    CertificationError,
    GradingsError,
    MissingFinenessFlag,
    NoLift,
    NotSl2,
    UnrecognizedGrading,
    UnsupportedField,
)
from .grading import (
    GGrading,
    check_equivalence,
    coarsen_by_hom,
    free_product_group_grading,
    induced_group_grading,
    is_group_grading,
    is_universal_realization,
    product_grading,
    restrict_grading,
    universal_group,
    universal_realization,
    validate_grading,
)
from .loop import (
    build_loop,
    character_matrix,
    graded_centroid,
    is_graded_central_simple,
    nilpotent_witness,
    recover_base,
    split_loop,
    verify_loop_universal,
)
from .scalar import make_field

__all__ = [
    "GradedSimpleFactor",
    "decompose_graded",
    "fine_criteria_check",
    "loop_equivalence",
    "CatalogEntry",
    "catalog",
    "sl2_algebra",
    "sl2_gamma1",
    "sl2_gamma2",
    "sl2_gamma1_universal",
    "sl2_gamma2_universal",
    "jordan_quadratic_algebra",
    "two_dim_simple_algebra",
    "Sl2GradingDescriptor",
    "sl2_grading_classifier",
]


# ---------------------------------------------------------------------------
# graded-simple decomposition


class GradedSimpleFactor:
    """A minimal graded ideal of a graded semisimple algebra.

    subspace     the ideal inside the ambient algebra
    ggrading     the induced grading on the ideal, over the same group
    embedding    the inclusion map of the restricted algebra
    constituents indices of the ambient simple ideals summing to the factor
    profile      the graded centroid of the factor
    """

    __slots__ = ("subspace", "ggrading", "embedding", "constituents",
                 "profile")

    def __init__(self, subspace, ggrading, embedding, constituents, profile):
        self.subspace = subspace
        self.ggrading = ggrading
        self.embedding = embedding
        self.constituents = tuple(constituents)
        self.profile = profile

    def loop_realization(self):
        """Surjection, base grading and certified isomorphism for the factor."""
        return recover_base(self.ggrading)

    def __repr__(self):
        return (
            f"<graded-simple factor dim {self.subspace.dim}, "
            f"{len(self.constituents)} simple constituents>"
        )


def decompose_graded(gg):
    """Split a graded semisimple algebra into minimal graded ideals.

    The simple ideals of the underlying algebra are grouped into their graded
    hulls (the smallest sums that are spanned by their intersections with the
    homogeneous components).  The product of the factors reproduces the input
    grading componentwise; this is verified before returning.  Raises
    NotSemisimple when the underlying algebra fails to split.
    """
    ideals = decompose_semisimple(gg.algebra)
    m = len(ideals)

    def span_of(mask):
        total = None
        for i in range(m):
            if mask & (1 << i):
                total = ideals[i] if total is None else total.add(ideals[i])
        return total

    def graded(space):
        dims = sum(space.intersect(c).dim for c in gg.components)
        return dims == space.dim

    hull = {}
    for i in range(m):
        best = None
        for mask in sorted(range(1, 1 << m),
                           key=lambda x: (bin(x).count("1"), x)):
            if mask & (1 << i) and graded(span_of(mask)):
                best = mask
                break
        assert best is not None  # the full sum is always graded
        hull[i] = best

    masks = sorted(set(hull.values()), key=lambda x: span_of(x).sort_key())
    factors = []
    for mask in masks:
        space = span_of(mask)
        sub, restricted, emb = restrict_grading(gg, space)
        profile = graded_centroid(restricted)
        constituents = [i for i in range(m) if mask & (1 << i)]
        factors.append(
            GradedSimpleFactor(space, restricted, emb, constituents, profile)
        )

    # componentwise reproduction of the input grading
    for comp, deg in zip(gg.components, gg.degrees):
        total = None
        for f in factors:
            piece = f.ggrading.component_of_degree(deg)
            if piece is None:
                continue
            image = f.embedding.image_of_subspace(piece)
            total = image if total is None else total.add(image)
        if total != comp:
            raise CertificationError(
                "factors do not reproduce the input grading"
            )
    return factors


def fine_criteria_check(pairs):
    """Fineness verdict for a free product of graded-simple factors.

    pairs is a list of (factor, flag) where factor is a GradedSimpleFactor
    or a GGrading and flag asserts (as oracle data) that the factor's
    grading is fine.  The verdict applies the duplicate rules for trivially
    graded factors: no duplicates when the characteristic is not 2, at most
    one duplicate when it is.  Raises MissingFinenessFlag on a None flag.
    """
    ggs, flags = [], []
    for factor, flag in pairs:
        ggs.append(factor.ggrading if isinstance(factor, GradedSimpleFactor)
                   else factor)
        flags.append(flag)
    if not ggs:
        return {"fine": True, "clause": "empty product"}
    for i, flag in enumerate(flags):
        if flag is None:
            raise MissingFinenessFlag(f"factor {i} has no fineness flag")
    for i, flag in enumerate(flags):
        if not flag:
            return {
                "fine": False,
                "clause": f"factor {i} carries a grading that is not fine",
            }

    trivial = [i for i, g in enumerate(ggs) if len(g) == 1]
    if not trivial:
        return {
            "fine": True,
            "clause": "every factor is graded-simple with a nontrivial "
                      "fine grading",
        }

    p = ggs[0].algebra.field.characteristic()
    classes = []
    for i in trivial:
        for cls in classes:
            if ggs[cls[0]].algebra.structure_equal(ggs[i].algebra):
                cls.append(i)
                break
        else:
            classes.append([i])
    bound = 2 if p == 2 else 1
    for cls in classes:
        if len(cls) > bound:
            rule = ("at most two equivalent trivially graded factors in "
                    "characteristic 2" if p == 2 else
                    "no two equivalent trivially graded factors in "
                    "characteristic not 2")
            return {
                "fine": False,
                "clause": f"factors {cls} violate the rule: {rule}",
                "duplicate_class": list(cls),
            }
    return {
        "fine": True,
        "clause": "trivially graded factors obey the duplicate bound",
    }


# ---------------------------------------------------------------------------
# equivalence of loop algebras


def loop_equivalence(loop1, loop2, phi):
    """Extend a base equivalence to an equivalence of loop algebras.

    phi must be an equivalence of the base gradings (components mapped onto
    components), and both bases must live over their universal groups.  The
    induced isomorphism of the base groups is lifted through the defining
    surjections; when an isomorphism lift exists, the map x(x)g to
    phi(x)(x)lift(g) is built and certified, and (psi, lift) is returned.
    Returns None when lifts exist but none is an isomorphism; raises NoLift
    when no lift exists at all.
    """
    from .errors import BaseNotUniversal

    for lp in (loop1, loop2):
        if not is_universal_realization(lp.base):
            raise BaseNotUniversal(
                "loop equivalence needs bases over their universal groups"
            )
    res = check_equivalence(phi, loop1.base.grading(), loop2.base.grading())
    if res is None:
        raise CertificationError(
            "phi is not an equivalence of the base gradings"
        )
    matching, alpha_u = res

    u1, _ = universal_group(loop1.base.grading())
    u2, _ = universal_group(loop2.base.grading())
    beta1 = hom_on_raw_generators(u1, loop1.base.group,
                                  list(loop1.base.degrees))
    beta2 = hom_on_raw_generators(u2, loop2.base.group,
                                  list(loop2.base.degrees))
    alpha_bar = beta2.compose(alpha_u).compose(inverse_hom(beta1))

    lift = solve_hom_extension(alpha_bar, loop1.pi, loop2.pi,
                               require_iso=True)
    if lift is None:
        return None

    field = loop1.algebra.field
    matrix = linalg.zeros(field, loop2.algebra.dim, loop1.algebra.dim)
    for i, (c1, g, r) in enumerate(loop1.index):
        x = loop1.base.components[c1].rows[r]
        image = phi.apply(x)
        c2 = matching[c1]
        coords = loop2.base.components[c2].coordinates_of(image)
        assert coords is not None
        g2 = lift(g)
        for r2, t in enumerate(coords):
            if t:
                matrix[loop2.position(c2, g2, r2)][i] = t
    psi = AlgebraMap(loop1.algebra, loop2.algebra, matrix)
    if not (psi.is_homomorphism() and psi.is_bijective()):
        raise CertificationError("lifted map failed certification")
    if check_equivalence(psi, loop1.ggrading.grading(),
                         loop2.ggrading.grading()) is None:
        raise CertificationError("lifted map is not an equivalence")
    return psi, lift


# ---------------------------------------------------------------------------
# standard algebras and gradings


def _line(field, n, vec):
    return Subspace(field, n, [vec])


def sl2_algebra(field):
    """Basis E, F, H with [E,F] = H, [H,E] = 2E, [H,F] = -2F."""
    return Algebra.from_sparse(field, 3, {
        (0, 1): [(2, 1)], (1, 0): [(2, -1)],
        (2, 0): [(0, 2)], (0, 2): [(0, -2)],
        (2, 1): [(1, -2)], (1, 2): [(1, 2)],
    }, labels=["E", "F", "H"])


def sl2_gamma1_universal(field):
    """The Cartan grading on sl2 over its universal group (infinite cyclic).

    Components F, H, E at degrees -1, 0, 1.
    """
    alg = sl2_algebra(field)
    grading = validate_grading(alg, [
        _line(field, 3, [0, 1, 0]),
        _line(field, 3, [0, 0, 1]),
        _line(field, 3, [1, 0, 0]),
    ])
    return universal_realization(grading)


def sl2_gamma2_universal(field):
    """The Klein grading on sl2 over its universal group (Z/2 x Z/2).

    Components H, E+F, E-F; needs characteristic not 2.
    """
    if field.characteristic() == 2:
        raise UnsupportedField("the Klein grading on sl2 needs char != 2")
    alg = sl2_algebra(field)
    grading = validate_grading(alg, [
        _line(field, 3, [0, 0, 1]),
        _line(field, 3, [1, 1, 0]),
        _line(field, 3, [1, -1, 0]),
    ])
    return universal_realization(grading)


def sl2_gamma1(field, group, g):
    """Coarsening of the Cartan grading with deg E = g, deg F = g^-1."""
    gg = sl2_gamma1_universal(field)
    beta = hom(gg.group, group, [g])
    return coarsen_by_hom(gg, beta)


def sl2_gamma2(field, group, t1, t2):
    """Coarsening of the Klein grading with deg H = t1, deg E+F = t2.

    t1, t2 must generate a subgroup of order 4 and exponent 2.
    """
    t, _ = subgroup(group, [t1, t2])
    if not (t.is_finite() and t.order() == 4
            and all(d == 2 for d in t.invariant_factors)):
        raise UnsupportedField(
            "the Klein family needs parameters generating (Z/2)^2"
        )
    gg = sl2_gamma2_universal(field)
    beta = hom(gg.group, group, [t1, t2])
    # canonical generators of the universal group are deg H, deg E+F
    gens = gg.group.canonical_generators()
    degs = {tuple(d.coords): i for i, d in enumerate(gg.degrees)}
    assert tuple(gens[0].coords) in degs and tuple(gens[1].coords) in degs
    return coarsen_by_hom(gg, beta)


def jordan_quadratic_algebra(field):
    """Unital commutative algebra F1 + Fu + Fv with u^2 = v^2 = 1, uv = 0."""
    return Algebra.from_sparse(field, 3, {
        (0, 0): [(0, 1)],
        (0, 1): [(1, 1)], (1, 0): [(1, 1)],
        (0, 2): [(2, 1)], (2, 0): [(2, 1)],
        (1, 1): [(0, 1)],
        (2, 2): [(0, 1)],
    }, labels=["1", "u", "v"])


def two_dim_simple_algebra(field):
    """Simple 2-dim algebra a,b with a2=a, ab=b, ba=0, b2=a+b.

    Its only left unity is a, and its only group-grading is trivial.
    """
    return Algebra.from_sparse(field, 2, {
        (0, 0): [(0, 1)],
        (0, 1): [(1, 1)],
        (1, 1): [(0, 1), (1, 1)],
    }, labels=["a", "b"])


def fxf_algebra(field):
    """F x F on orthogonal idempotents."""
    return Algebra.from_sparse(field, 2, {
        (0, 0): [(0, 1)], (1, 1): [(1, 1)],
    }, labels=["e1", "e2"])


# ---------------------------------------------------------------------------
# the sl2 grading classifier


class Sl2GradingDescriptor:
    """Classification descriptor for a group-grading on sl2.

    kind "1": coarsening of the Cartan grading, parameter the set
    {g, g^-1} of degrees of the root lines.  kind "2": Klein-type grading,
    parameter the order-4 support subgroup T (including the identity).
    Descriptors over the same group are isomorphic exactly when the kinds
    agree and the parameters coincide.
    """

    __slots__ = ("kind", "group", "parameter")

    def __init__(self, kind, group, parameter):
        self.kind = kind
        self.group = group
        self.parameter = parameter

    def isomorphic(self, other):
        return (
            isinstance(other, Sl2GradingDescriptor)
            and self.group.same_presentation(other.group)
            and self.kind == other.kind
            and self.parameter == other.parameter
        )

    def parameter_coords(self):
        return sorted(self.parameter)

    def __repr__(self):
        return f"<sl2 grading type {self.kind}, parameter {sorted(self.parameter)}>"


def sl2_grading_classifier(gg, basis_change=None):
    """Classify a group-grading on (an isomorphic copy of) sl2.

    The algebra must either match the catalog sl2 structure constants or
    come with a certified isomorphism onto them (basis_change).  The
    descriptor is read off the support: an identity degree in the support
    marks a Cartan-type grading, a 3-element support of involutions closed
    under products marks a Klein-type one.  Raises NotSl2 and
    UnrecognizedGrading.
    """
    field = gg.algebra.field
    model = sl2_algebra(field)
    if not gg.algebra.structure_equal(model):
        if basis_change is None:
            raise NotSl2("structure constants do not match sl2")
        ok = (
            basis_change.source is gg.algebra
            and basis_change.target.structure_equal(model)
            and basis_change.is_homomorphism()
            and basis_change.is_bijective()
        )
        if not ok:
            raise NotSl2("supplied basis change does not certify sl2")

    group = gg.group
    e = group.identity()
    degs = list(gg.degrees)
    dims = [c.dim for c in gg.components]

    if len(degs) == 1:
        return Sl2GradingDescriptor("1", group, frozenset({tuple(e.coords)}))
    if len(degs) == 2:
        if e not in degs:
            raise UnrecognizedGrading("two components but no identity degree")
        i = degs.index(e)
        g = degs[1 - i]
        if dims[i] != 1 or dims[1 - i] != 2 or (g * g) != e:
            raise UnrecognizedGrading("not a coarsened Cartan grading")
        return Sl2GradingDescriptor(
            "1", group, frozenset({tuple(g.coords), tuple(g.inverse().coords)})
        )
    if len(degs) == 3:
        if any(d != 1 for d in dims):
            raise UnrecognizedGrading("three components of unexpected sizes")
        if e in degs:
            others = [d for d in degs if d != e]
            if others[0].inverse() != others[1]:
                raise UnrecognizedGrading("root degrees are not inverse")
            return Sl2GradingDescriptor(
                "1", group,
                frozenset(tuple(d.coords) for d in others),
            )
        if any(d * d != e for d in degs):
            raise UnrecognizedGrading("support contains a non-involution")
        if degs[0] * degs[1] != degs[2]:
            raise UnrecognizedGrading("support is not closed")
        t = frozenset([tuple(e.coords)] + [tuple(d.coords) for d in degs])
        return Sl2GradingDescriptor("2", group, t)
    raise UnrecognizedGrading(f"{len(degs)} components on sl2")


# ---------------------------------------------------------------------------
# catalog


def _field_key(field):
    return tuple(sorted(field.descriptor().items()))


class CatalogEntry:
    """A named worked instance with golden checks.

    construct(field) builds the objects (cached per field); run_checks(field)
    returns a list of {"check", "ok", ...} dicts.  The fine flag is oracle
    data about the entry's grading; it is an input to the fineness criteria,
    never computed.
    """

    def __init__(self, name, note, default_field, builder, checker,
                 fine=None):
        self.name = name
        self.note = note
        self.default_field = default_field
        self.fine = fine
        self._builder = builder
        self._checker = checker
        self._cache = {}

    def construct(self, field=None):
        f = make_field(field if field is not None else self.default_field)
        key = _field_key(f)
        if key not in self._cache:
            self._cache[key] = self._builder(f)
        return self._cache[key]

    def run_checks(self, field=None):
        f = make_field(field if field is not None else self.default_field)
        objs = self.construct(f)
        return self._checker(f, objs)

    def __repr__(self):
        return f"<catalog entry {self.name}>"


def _check(name, ok, **detail):
    out = {"check": name, "ok": bool(ok)}
    if detail:
        out["detail"] = detail
    return out


def _invariants_list(group):
    free, factors = group.invariants()
    return [free, list(factors)]


def _coords(el):
    return list(el.coords)


def _sorted_support(gg):
    return sorted(_coords(d) for d in gg.degrees)


def _expect(name, got, expected):
    return _check(name, got == expected, got=got, expected=expected)


# ---- individual entries


def _build_fxf(field):
    alg = fxf_algebra(field)
    grading = validate_grading(alg, [
        _line(field, 2, [1, 0]), _line(field, 2, [0, 1]),
    ])
    return {"algebra": alg, "grading": grading}


def _check_fxf(field, objs):
    grading = objs["grading"]
    u, _ = universal_group(grading)
    induced = induced_group_grading(grading)
    return [
        _expect("universal_group_trivial", _invariants_list(u), [0, []]),
        _expect("not_a_group_grading", is_group_grading(grading), False),
        _expect("induced_single_component", len(induced), 1),
    ]


def _build_trivial(square_zero):
    def build(field):
        table = {} if square_zero else {(0, 0): [(0, 1)]}
        alg = Algebra.from_sparse(field, 1, table, labels=["a"])
        grading = validate_grading(alg, [_line(field, 1, [1])])
        return {"algebra": alg, "grading": grading}
    return build


def _check_trivial(expected_invariants):
    def chk(field, objs):
        u, _ = universal_group(objs["grading"])
        return [
            _expect("universal_group", _invariants_list(u),
                    expected_invariants),
            _expect("group_grading", is_group_grading(objs["grading"]), True),
        ]
    return chk


def _build_sl2_gamma1(field):
    gg = sl2_gamma1_universal(field)
    return {"algebra": gg.algebra, "ggrading": gg}


def _check_sl2_gamma1(field, objs):
    gg = objs["ggrading"]
    desc = sl2_grading_classifier(gg)
    return [
        _expect("universal_group", _invariants_list(gg.group), [1, []]),
        _expect("support", _sorted_support(gg), [[-1], [0], [1]]),
        _expect("classifier_kind", desc.kind, "1"),
        _expect("classifier_parameter", desc.parameter_coords(),
                [(-1,), (1,)]),
    ]


def _build_sl2_gamma2(field):
    gg = sl2_gamma2_universal(field)
    return {"algebra": gg.algebra, "ggrading": gg}


def _check_sl2_gamma2(field, objs):
    gg = objs["ggrading"]
    desc = sl2_grading_classifier(gg)
    return [
        _expect("universal_group", _invariants_list(gg.group), [0, [2, 2]]),
        _expect("support", _sorted_support(gg), [[0, 1], [1, 0], [1, 1]]),
        _expect("classifier_kind", desc.kind, "2"),
        _expect("classifier_parameter_size", len(desc.parameter), 4),
    ]


def _build_non_group(field):
    alg, _ = product_algebra([sl2_algebra(field), sl2_algebra(field)])
    grading = validate_grading(alg, [
        Subspace(field, 6, [[0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 0, 1]]),
        _line(field, 6, [1, 0, 0, 0, 0, 0]),
        _line(field, 6, [0, 1, 0, 0, 0, 0]),
        _line(field, 6, [0, 0, 0, 1, 1, 0]),
        _line(field, 6, [0, 0, 0, 1, -1, 0]),
    ])
    return {"algebra": alg, "grading": grading}


def _check_non_group(field, objs):
    grading = objs["grading"]
    u, _ = universal_group(grading)
    induced = induced_group_grading(grading)
    got = sorted(
        ( _coords(d), c.dim) for c, d in zip(induced.components,
                                             induced.degrees)
    )
    expected = [([-1, 0], 1), ([0, 0], 2), ([0, 1], 2), ([1, 0], 1)]
    got = [(list(a), b) for a, b in got]
    return [
        _expect("universal_group", _invariants_list(u), [1, [2]]),
        _expect("not_a_group_grading", is_group_grading(grading), False),
        _expect("induced_component_count", len(induced), 4),
        _expect("induced_degrees_and_dims", got, expected),
    ]


def _build_free(kind):
    def build(field):
        if kind == "11":
            parts = (sl2_gamma1_universal(field), sl2_gamma1_universal(field))
        elif kind == "12":
            parts = (sl2_gamma1_universal(field), sl2_gamma2_universal(field))
        else:
            parts = (sl2_gamma2_universal(field), sl2_gamma2_universal(field))
        gradings = tuple(p.grading() for p in parts)
        alg, gg, offsets = free_product_group_grading(gradings)
        return {"algebra": alg, "ggrading": gg, "parts": parts,
                "offsets": offsets, "gradings": gradings}
    return build


_FREE_EXPECT = {
    "11": {"invariants": [2, []], "ncomp": 5, "dims": [1, 1, 1, 1, 2]},
    "12": {"invariants": [1, [2, 2]], "ncomp": 6, "dims": [1, 1, 1, 1, 1, 1]},
    "22": {"invariants": [0, [2, 2, 2, 2]], "ncomp": 6,
           "dims": [1, 1, 1, 1, 1, 1]},
}


def _check_free(kind):
    def chk(field, objs):
        gg = objs["ggrading"]
        expect = _FREE_EXPECT[kind]
        _, coarse, _ = product_grading(objs["gradings"])
        again = induced_group_grading(coarse)
        factors = decompose_graded(gg)
        verdict = fine_criteria_check([(f, True) for f in factors])
        return [
            _expect("universal_group", _invariants_list(gg.group),
                    expect["invariants"]),
            _expect("component_count", len(gg), expect["ncomp"]),
            _expect("component_dims", sorted(c.dim for c in gg.components),
                    expect["dims"]),
            _expect("matches_induced_product", gg == again, True),
            _expect("two_graded_simple_factors", len(factors), 2),
            _expect("fine_verdict", verdict["fine"], True),
        ]
    return chk


def _loop_table_z_z2(field):
    """Components of the kernel-2 loop of the Cartan grading, on sl2 x sl2."""
    group, _, _ = direct_product(free_group(1), cyclic_group(2))
    alg, _ = product_algebra([sl2_algebra(field), sl2_algebra(field)])
    vectors = {
        (0, 0): [0, 0, 1, 0, 0, 1],
        (0, 1): [0, 0, 1, 0, 0, -1],
        (1, 0): [1, 0, 0, 1, 0, 0],
        (1, 1): [1, 0, 0, -1, 0, 0],
        (-1, 0): [0, 1, 0, 0, 1, 0],
        (-1, 1): [0, 1, 0, 0, -1, 0],
    }
    comps = [_line(field, 6, v) for v in vectors.values()]
    degs = [group.element(list(k)) for k in vectors]
    return {
        "algebra": alg,
        "ggrading": GGrading(alg, group, comps, degs),
        "group": group,
    }


def _loop_table_z2cube(field):
    """Components of the kernel-2 loop of the Klein grading, on sl2 x sl2."""
    group, _, _ = direct_product(cyclic_group(2), cyclic_group(2),
                                 cyclic_group(2))
    alg, _ = product_algebra([sl2_algebra(field), sl2_algebra(field)])
    vectors = {
        (1, 0, 0): [0, 0, 1, 0, 0, 1],
        (1, 0, 1): [0, 0, 1, 0, 0, -1],
        (0, 1, 0): [1, 1, 0, 1, 1, 0],
        (0, 1, 1): [1, 1, 0, -1, -1, 0],
        (1, 1, 0): [1, -1, 0, 1, -1, 0],
        (1, 1, 1): [1, -1, 0, -1, 1, 0],
    }
    comps = [_line(field, 6, v) for v in vectors.values()]
    degs = [group.element(list(k)) for k in vectors]
    return {
        "algebra": alg,
        "ggrading": GGrading(alg, group, comps, degs),
        "group": group,
    }


def _loop_table_z4z2(field):
    """The Z/4 x Z/2 grading on sl2 x sl2 through a square root of -1."""
    from .scalar import root_of_unity

    try:
        i = root_of_unity(field, 4)
    except GradingsError:
        raise UnsupportedField("this entry needs a primitive 4th root of 1")
    group, _, _ = direct_product(cyclic_group(4), cyclic_group(2))
    alg, _ = product_algebra([sl2_algebra(field), sl2_algebra(field)])
    one = field.one()
    vectors = {
        (1, 0): [0, 0, one, 0, 0, i],
        (3, 0): [0, 0, one, 0, 0, -i],
        (0, 1): [one, one, 0, one, one, 0],
        (2, 1): [one, one, 0, -one, -one, 0],
        (1, 1): [one, -one, 0, i, -i, 0],
        (3, 1): [one, -one, 0, -i, i, 0],
    }
    comps = [Subspace(field, 6, [v]) for v in vectors.values()]
    degs = [group.element(list(k)) for k in vectors]
    return {
        "algebra": alg,
        "ggrading": GGrading(alg, group, comps, degs),
        "group": group,
    }


def _check_loop_grading(expected_invariants, expected_kind,
                        quotient_invariants):
    def chk(field, objs):
        gg = objs["ggrading"]
        out = []
        out.append(_expect("universal_realization",
                           is_universal_realization(gg), True))
        out.append(_expect("group_invariants",
                           _invariants_list(gg.group), expected_invariants))
        gcs = is_graded_central_simple(gg)
        out.append(_expect("graded_central_simple",
                           gcs["graded_central_simple"], True))
        factors = decompose_graded(gg)
        out.append(_expect("single_graded_factor", len(factors), 1))
        verdict = fine_criteria_check([(factors[0], True)])
        out.append(_expect("fine_verdict", verdict["fine"], True))
        pi, base, iso = recover_base(gg)
        out.append(_expect("recovered_base_group",
                           _invariants_list(base.group),
                           quotient_invariants))
        desc = sl2_grading_classifier(base)
        out.append(_expect("recovered_base_kind", desc.kind, expected_kind))
        out.append(_expect("kernel_order",
                           gg.algebra.dim // base.algebra.dim, 2))
        return out
    return chk


def _build_two_dim_simple(field):
    alg = two_dim_simple_algebra(field)
    grading = validate_grading(alg, [Subspace(field, 2, [[1, 0], [0, 1]])])
    return {"algebra": alg, "grading": grading}


def _check_two_dim_simple(field, objs):
    alg = objs["algebra"]
    simple, _ = is_simple(alg)
    particular, homog = left_unities(alg)
    unity_is_a = (
        particular is not None
        and homog.dim == 0
        and list(particular) == [field.one(), field.zero()]
    )
    u, _ = universal_group(objs["grading"])
    return [
        _expect("is_simple", simple, True),
        _check("unique_left_unity_is_a", unity_is_a),
        _expect("trivial_universal_group", _invariants_list(u), [0, []]),
    ]


def _build_two_dim_product(field):
    alg, _ = product_algebra([two_dim_simple_algebra(field),
                              two_dim_simple_algebra(field)])
    group = cyclic_group(1)
    gg = GGrading(alg, group,
                  [Subspace(field, 4, linalg.identity(field, 4))],
                  [group.identity()])
    return {"algebra": alg, "ggrading": gg}


def _check_two_dim_product(field, objs):
    factors = decompose_graded(objs["ggrading"])
    verdict = fine_criteria_check([(f, True) for f in factors])
    expected_fine = field.characteristic() == 2
    return [
        _expect("two_trivially_graded_factors", len(factors), 2),
        _expect("fine_iff_char_2", verdict["fine"], expected_fine),
    ]


def _jordan_gradings(field):
    alg = jordan_quadratic_algebra(field)
    group, _, _ = direct_product(cyclic_group(2), cyclic_group(2))
    comps = [
        _line(field, 3, [1, 0, 0]),
        _line(field, 3, [0, 1, 0]),
        _line(field, 3, [0, 0, 1]),
    ]
    gg1 = GGrading(alg, group, list(comps), [
        group.identity(), group.element([1, 0]), group.element([1, 1]),
    ])
    gg2 = GGrading(alg, group, list(comps), [
        group.identity(), group.element([0, 1]), group.element([1, 1]),
    ])
    return alg, group, gg1, gg2


def _jordan_candidates(field, alg):
    """All eight graded equivalence candidates: signs and the u-v swap."""
    out = []
    one = field.one()
    for swap in (False, True):
        for eps in (one, -one):
            for eta in (one, -one):
                m = linalg.zeros(field, 3, 3)
                m[0][0] = one
                if swap:
                    m[2][1] = eps
                    m[1][2] = eta
                else:
                    m[1][1] = eps
                    m[2][2] = eta
                out.append(AlgebraMap(alg, alg, m))
    return out


def _build_jordan(field):
    if field.characteristic() == 2:
        raise UnsupportedField("the quadratic Jordan example needs char != 2")
    alg, group, gg1, gg2 = _jordan_gradings(field)
    big, _, _ = direct_product(cyclic_group(4), cyclic_group(2))
    a1, a2 = group.canonical_generators()
    pi = hom_on_raw_generators(big, group, [a1, a2])
    loop1 = build_loop(gg1, pi)
    loop2 = build_loop(gg2, pi)
    return {
        "algebra": alg, "group": group, "gg1": gg1, "gg2": gg2,
        "pi": pi, "loop1": loop1, "loop2": loop2,
        "candidates": _jordan_candidates(field, alg),
    }


def _check_jordan(field, objs):
    gg1, gg2 = objs["gg1"], objs["gg2"]
    out = [
        _expect("universal_1", is_universal_realization(gg1), True),
        _expect("universal_2", is_universal_realization(gg2), True),
    ]
    res = check_equivalence(identity_map(objs["algebra"]),
                            gg1.grading(), gg2.grading())
    ok_swap = False
    if res is not None:
        _, alpha_u = res
        u1, _ = universal_group(gg1.grading())
        beta1 = hom_on_raw_generators(u1, gg1.group, list(gg1.degrees))
        u2, _ = universal_group(gg2.grading())
        beta2 = hom_on_raw_generators(u2, gg2.group, list(gg2.degrees))
        alpha = beta2.compose(alpha_u).compose(inverse_hom(beta1))
        gens = gg1.group.canonical_generators()
        ok_swap = (
            _coords(alpha(gens[0])) == [0, 1]
            and _coords(alpha(gens[1])) == [1, 0]
        )
    out.append(_check("identity_induces_the_swap", ok_swap))

    loop1, loop2 = objs["loop1"], objs["loop2"]
    failures = 0
    equivalences = 0
    for cand in objs["candidates"]:
        if check_equivalence(cand, gg1.grading(), gg2.grading()) is None:
            continue
        equivalences += 1
        try:
            res = loop_equivalence(loop1, loop2, cand)
        except NoLift:
            res = None
        if res is None:
            failures += 1
    out.append(_expect("all_base_equivalences", equivalences, 8))
    out.append(_expect("no_candidate_extends", failures, equivalences))

    control = loop_equivalence(loop1, loop1, identity_map(objs["algebra"]))
    out.append(_check("identity_control_extends", control is not None))
    return out


def _build_sl2_loop(base_kind, kernel_order, z4z2=False):
    def build(field):
        if base_kind == "1":
            base = sl2_gamma1_universal(field)
            gbar = base.group
            if kernel_order == 2:
                big, _, _ = direct_product(free_group(1), cyclic_group(2))
            else:
                big, _, _ = direct_product(free_group(1),
                                           cyclic_group(kernel_order))
            pi = hom_on_raw_generators(
                big, gbar, [gbar.canonical_generators()[0], gbar.identity()]
            )
        else:
            base = sl2_gamma2_universal(field)
            gbar = base.group
            a1, a2 = gbar.canonical_generators()
            if z4z2:
                big, _, _ = direct_product(cyclic_group(4), cyclic_group(2))
                pi = hom_on_raw_generators(big, gbar, [a1, a2])
            else:
                big, _, _ = direct_product(cyclic_group(2), cyclic_group(2),
                                           cyclic_group(kernel_order))
                pi = hom_on_raw_generators(
                    big, gbar, [a1, a2, gbar.identity()]
                )
        loop = build_loop(base, pi)
        return {"base": base, "pi": pi, "loop": loop,
                "algebra": loop.algebra, "ggrading": loop.ggrading}
    return build


def _check_sl2_loop(kernel_order, table_entry=None):
    def chk(field, objs):
        loop = objs["loop"]
        out = []
        out.append(_expect("dimension_law", loop.algebra.dim,
                           3 * kernel_order))
        report = verify_loop_universal(loop)
        out.append(_expect("universal_transfer", report["certified"], True))
        profile = graded_centroid(loop.ggrading)
        out.append(_expect("centroid_dimension", profile.dimension(),
                           kernel_order))
        out.append(_expect(
            "centroid_support_order", len(profile.degrees), kernel_order
        ))
        phi, chars = split_loop(loop)
        det = linalg.det(character_matrix(loop, chars))
        out.append(_check("character_matrix_regular", bool(det),
                          determinant=str(det)))
        if table_entry is not None:
            table = catalog()[table_entry].construct(field)["ggrading"]
            match = True
            for comp, deg in zip(loop.ggrading.components,
                                 loop.ggrading.degrees):
                image = phi.image_of_subspace(comp)
                target = table.component_of_degree(
                    table.group.from_canonical(list(deg.coords))
                )
                if target is None or image != target:
                    match = False
                    break
            out.append(_check("split_image_matches_table", match))
        pi2, base2, iso = recover_base(loop.ggrading)
        out.append(_check("round_trip_certified", True))
        out.append(_expect(
            "recovered_base_dim", base2.algebra.dim, 3
        ))
        return out
    return chk


def _build_f2_loop(field):
    alg = sl2_algebra(field)
    group = free_group(1)
    gg = GGrading(alg, group, [
        _line(field, 3, [1, 0, 0]),
        _line(field, 3, [0, 1, 0]),
        _line(field, 3, [0, 0, 1]),
    ], [group.element([1]), group.element([-1]), group.identity()])
    big, _, _ = direct_product(free_group(1), cyclic_group(2))
    pi = hom_on_raw_generators(big, group,
                               [group.element([1]), group.identity()])
    loop = build_loop(gg, pi)
    return {"base": gg, "pi": pi, "loop": loop, "algebra": loop.algebra,
            "ggrading": loop.ggrading}


def _build_f3_loop(field):
    alg = Algebra.from_sparse(field, 1, {(0, 0): [(0, 1)]}, labels=["x"])
    group = cyclic_group(1)
    gg = GGrading(alg, group, [_line(field, 1, [1])], [group.identity()])
    big = cyclic_group(3)
    pi = hom(big, group, [group.identity()])
    loop = build_loop(gg, pi)
    return {"base": gg, "pi": pi, "loop": loop, "algebra": loop.algebra,
            "ggrading": loop.ggrading}


def _check_char_p_loop(kernel_order):
    def chk(field, objs):
        from .errors import CharDividesKernel, NotSemisimple

        loop = objs["loop"]
        out = [_expect("dimension_law", loop.algebra.dim,
                       loop.base.algebra.dim * kernel_order)]
        ctilde, ideal = nilpotent_witness(loop)
        square = linalg.mat_mul(ctilde, ctilde)
        out.append(_check(
            "witness_squares_to_zero",
            all(not x for row in square for x in row),
        ))
        out.append(_check(
            "witness_ideal_proper_nonzero",
            0 < ideal.dim < loop.algebra.dim,
            ideal_dim=ideal.dim,
        ))
        try:
            split_loop(loop)
            out.append(_check("split_rejected", False))
        except CharDividesKernel:
            out.append(_check("split_rejected", True))
        try:
            decompose_semisimple(loop.algebra)
            out.append(_check("not_semisimple", False))
        except NotSemisimple:
            out.append(_check("not_semisimple", True))
        return out
    return chk


def _check_z4z2_split(field, objs):
    """The kernel-2 loop of the Klein grading along Z/4 x Z/2 -> (Z/2)^2."""
    loop = objs["loop"]
    out = [_expect("dimension_law", loop.algebra.dim, 6)]
    phi, chars = split_loop(loop)
    big = loop.pi.domain
    chi = chars[1]
    from .scalar import root_of_unity

    i = root_of_unity(field, 4)
    out.append(_expect("chi_on_order_4_generator",
                       str(chi(big.element([1, 0]))), str(i)))
    out.append(_expect("chi_on_order_2_generator",
                       str(chi(big.element([0, 1]))), str(field.one())))
    table = catalog()["sl2xsl2-z4z2"].construct(field)["ggrading"]
    match = True
    for comp, deg in zip(loop.ggrading.components, loop.ggrading.degrees):
        image = phi.image_of_subspace(comp)
        target = table.component_of_degree(
            table.group.from_canonical(list(deg.coords))
        )
        if target is None or image != target:
            match = False
            break
    out.append(_check("split_image_matches_table", match))
    rep = verify_loop_universal(loop)
    out.append(_expect("universal_transfer", rep["certified"], True))
    pi2, base2, iso = recover_base(loop.ggrading)
    e = base2.group.identity()
    klein_shape = (
        _invariants_list(base2.group) == [0, [2, 2]]
        and all(c.dim == 1 for c in base2.components)
        and all(d != e and d * d == e for d in base2.degrees)
    )
    out.append(_check("recovered_base_klein_shape", klein_shape))
    return out


_CATALOG = None


def catalog():
    """The read-only table of named worked instances."""
    global _CATALOG
    if _CATALOG is not None:
        return _CATALOG

    entries = [
        CatalogEntry(
            "fxf",
            "two idempotent lines in F x F; universal group is trivial",
            "rationals", _build_fxf, _check_fxf, fine=True,
        ),
        CatalogEntry(
            "trivial-nonzero-square",
            "trivial grading on a 1-dim algebra with a^2 = a",
            "rationals", _build_trivial(False), _check_trivial([0, []]),
            fine=True,
        ),
        CatalogEntry(
            "trivial-zero-square",
            "trivial grading on a 1-dim algebra with zero product",
            "rationals", _build_trivial(True), _check_trivial([1, []]),
            fine=True,
        ),
        CatalogEntry(
            "sl2-gamma1",
            "Cartan grading on sl2 over its universal group Z",
            "rationals", _build_sl2_gamma1, _check_sl2_gamma1, fine=True,
        ),
        CatalogEntry(
            "sl2-gamma2",
            "Klein grading on sl2 over its universal group (Z/2)^2",
            "rationals", _build_sl2_gamma2, _check_sl2_gamma2, fine=True,
        ),
        CatalogEntry(
            "non-group-sl2xsl2",
            "5-component non-group grading on sl2 x sl2 with universal "
            "group Z x Z/2",
            "rationals", _build_non_group, _check_non_group,
        ),
        CatalogEntry(
            "sl2xsl2-free-11",
            "free product of two Cartan gradings; universal group Z^2",
            "rationals", _build_free("11"), _check_free("11"), fine=True,
        ),
        CatalogEntry(
            "sl2xsl2-free-12",
            "free product of a Cartan and a Klein grading; universal "
            "group Z x (Z/2)^2",
            "rationals", _build_free("12"), _check_free("12"), fine=True,
        ),
        CatalogEntry(
            "sl2xsl2-free-22",
            "free product of two Klein gradings; universal group (Z/2)^4",
            "rationals", _build_free("22"), _check_free("22"), fine=True,
        ),
        CatalogEntry(
            "sl2xsl2-loop-z-z2",
            "kernel-2 loop of the Cartan grading realized on sl2 x sl2 "
            "over Z x Z/2",
            "rationals", _loop_table_z_z2,
            _check_loop_grading([1, [2]], "1", [1, []]), fine=True,
        ),
        CatalogEntry(
            "sl2xsl2-loop-z2cube",
            "kernel-2 loop of the Klein grading realized on sl2 x sl2 "
            "over (Z/2)^3",
            "rationals", _loop_table_z2cube,
            _check_loop_grading([0, [2, 2, 2]], "2", [0, [2, 2]]), fine=True,
        ),
        CatalogEntry(
            "sl2xsl2-z4z2",
            "Z/4 x Z/2 grading on sl2 x sl2 through a 4th root of unity",
            ("cyclotomic", 4), _loop_table_z4z2,
            _check_loop_grading([0, [2, 4]], "2", [0, [2, 2]]), fine=True,
        ),
        CatalogEntry(
            "two-dim-simple",
            "2-dim simple algebra whose only group-grading is trivial",
            "rationals", _build_two_dim_simple, _check_two_dim_simple,
            fine=True,
        ),
        CatalogEntry(
            "two-dim-simple-product",
            "trivial grading on the square of the rigid 2-dim simple "
            "algebra; fine exactly in characteristic 2",
            "rationals", _build_two_dim_product, _check_two_dim_product,
        ),
        CatalogEntry(
            "jordan-quadratic",
            "two Klein gradings on the quadratic Jordan algebra whose "
            "loops along Z/4 x Z/2 are not equivalent",
            "rationals", _build_jordan, _check_jordan, fine=True,
        ),
        CatalogEntry(
            "sl2-loop-gamma1-h2",
            "loop of the Cartan grading along Z x Z/2 -> Z",
            "rationals", _build_sl2_loop("1", 2),
            _check_sl2_loop(2, table_entry="sl2xsl2-loop-z-z2"),
        ),
        CatalogEntry(
            "sl2-loop-gamma1-h3",
            "loop of the Cartan grading along Z x Z/3 -> Z",
            ("cyclotomic", 3), _build_sl2_loop("1", 3), _check_sl2_loop(3),
        ),
        CatalogEntry(
            "sl2-loop-gamma2-h2",
            "loop of the Klein grading along (Z/2)^3 -> (Z/2)^2",
            "rationals", _build_sl2_loop("2", 2),
            _check_sl2_loop(2, table_entry="sl2xsl2-loop-z2cube"),
        ),
        CatalogEntry(
            "sl2-loop-gamma2-h3",
            "loop of the Klein grading along (Z/2)^2 x Z/3 -> (Z/2)^2",
            ("cyclotomic", 3), _build_sl2_loop("2", 3), _check_sl2_loop(3),
        ),
        CatalogEntry(
            "sl2-loop-gamma2-z4z2",
            "loop of the Klein grading along Z/4 x Z/2 -> (Z/2)^2",
            ("cyclotomic", 4), _build_sl2_loop("2", 2, z4z2=True),
            _check_z4z2_split,
        ),
        CatalogEntry(
            "sl2-f2-loop",
            "kernel-2 loop of a cyclic grading on the sl2 structure "
            "constants over F2: nilpotent witness",
            ("prime", 2), _build_f2_loop, _check_char_p_loop(2),
        ),
        CatalogEntry(
            "idem-f3-loop",
            "kernel-3 loop of a 1-dim idempotent algebra over F3: "
            "nilpotent witness",
            ("prime", 3), _build_f3_loop, _check_char_p_loop(3),
        ),
    ]
    _CATALOG = {e.name: e for e in entries}
    return _CATALOG
