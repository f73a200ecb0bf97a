"""Gradings: validation, universal groups, coarsenings, products, symmetry."""

import random
from fractions import Fraction

import pytest

from gradings import linalg
from gradings.abgroup import cyclic_group, direct_product, hom, is_isomorphism
from gradings.algebra import Algebra, AlgebraMap, Subspace, identity_map, product_algebra
from gradings.classify import (
    catalog,
    fxf_algebra,
    sl2_algebra,
    sl2_gamma1_universal,
    sl2_gamma2_universal,
)
from gradings.errors import (
    IncompatibleDegrees,
    NotClosed,
    NotDirectSum,
    NotGroupGrading,
)
from gradings.grading import (
    GGrading,
    adapted_basis,
    check_G_isomorphism,
    check_equivalence,
    coarsen_by_hom,
    diagonal_automorphism,
    free_product_group_grading,
    induced_group_grading,
    is_group_grading,
    is_refinement,
    is_universal_realization,
    product_G_grading,
    product_grading,
    refinement_map,
    restrict_grading,
    trivial_grading,
    universal_group,
    universal_realization,
    validate_grading,
)
from gradings.scalar import make_field, root_of_unity

Q = make_field("rationals")


def _line(field, n, xs):
    return Subspace(field, n, [[field.scalar(x) for x in xs]])


def _fxf_grading():
    alg = fxf_algebra(Q)
    return alg, validate_grading(alg, [
        _line(Q, 2, [1, 0]), _line(Q, 2, [0, 1]),
    ])


def test_validate_grading_rejects_bad_input():
    alg = fxf_algebra(Q)
    with pytest.raises(NotDirectSum):
        validate_grading(alg, [_line(Q, 2, [1, 0])])
    with pytest.raises(NotDirectSum):
        validate_grading(alg, [
            _line(Q, 2, [1, 0]), _line(Q, 2, [0, 1]), _line(Q, 2, [1, 1]),
        ])
    a = sl2_algebra(Q)
    # span(E, H) times span(F) hits both components: EF = H, HF = -2F
    with pytest.raises(NotClosed):
        validate_grading(a, [
            _line(Q, 3, [1, 0, 0]).add(_line(Q, 3, [0, 0, 1])),
            _line(Q, 3, [0, 1, 0]),
        ])


def test_universal_group_goldens():
    # idempotent lines in F x F force both degrees to the identity
    _, grading = _fxf_grading()
    group, degrees = universal_group(grading)
    assert group.invariants() == (0, ())
    assert not is_group_grading(grading)
    with pytest.raises(NotGroupGrading):
        universal_realization(grading)

    # trivial grading on a 1-dim algebra: Z when the square is zero,
    # trivial when the square is not
    zero_sq = Algebra.from_sparse(Q, 1, {})
    g, _ = universal_group(trivial_grading(zero_sq))
    assert g.invariants() == (1, ())
    idem = Algebra.from_sparse(Q, 1, {(0, 0): [(0, 1)]})
    g, _ = universal_group(trivial_grading(idem))
    assert g.invariants() == (0, ())

    # Cartan grading: infinite cyclic with degrees -1, 0, 1
    gg = sl2_gamma1_universal(Q)
    assert gg.group.invariants() == (1, ())
    assert sorted(d.coords for d in gg.degrees) == [(-1,), (0,), (1,)]
    assert is_universal_realization(gg)

    # Klein grading: (Z/2)^2 with the three nonzero degrees
    gg2 = sl2_gamma2_universal(Q)
    assert gg2.group.invariants() == (0, (2, 2))
    assert sorted(d.coords for d in gg2.degrees) == [(0, 1), (1, 0), (1, 1)]
    assert is_universal_realization(gg2)


def test_five_component_grading_and_induced():
    objs = catalog()["non-group-sl2xsl2"].construct()
    grading = objs["grading"]
    group, degrees = universal_group(grading)
    assert group.invariants() == (1, (2,))
    assert not is_group_grading(grading)
    induced = induced_group_grading(grading)
    assert len(induced) == 4
    by_deg = {tuple(d.coords): c for c, d in
              zip(induced.components, induced.degrees)}
    alg = grading.algebra
    f = alg.field

    def span(*vecs):
        return Subspace(f, 6, [[f.scalar(x) for x in v] for v in vecs])

    assert by_deg[(0, 0)] == span([0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 0, 1])
    assert by_deg[(1, 0)] == span([1, 0, 0, 0, 0, 0])
    assert by_deg[(-1, 0)] == span([0, 1, 0, 0, 0, 0])
    assert by_deg[(0, 1)] == span([0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0])


def test_ggrading_validation():
    alg = sl2_algebra(Q)
    z = cyclic_group(4)
    comps = [_line(Q, 3, [0, 1, 0]), _line(Q, 3, [0, 0, 1]),
             _line(Q, 3, [1, 0, 0])]
    gg = GGrading(alg, z, comps, [z.element([3]), z.identity(),
                                  z.element([1])])
    assert len(gg) == 3
    # repeated degrees are rejected
    with pytest.raises(NotGroupGrading):
        GGrading(alg, z, comps, [z.element([1]), z.identity(),
                                 z.element([1])])
    # degrees incompatible with the product table are rejected
    with pytest.raises(IncompatibleDegrees):
        GGrading(alg, z, comps, [z.element([2]), z.identity(),
                                 z.element([1])])


def test_coarsen_by_hom():
    gg = sl2_gamma1_universal(Q)
    z2 = cyclic_group(2)
    beta = hom(gg.group, z2, [z2.element([1])])
    coarse = coarsen_by_hom(gg, beta)
    # E and F merge at degree 1, H stays at 0
    assert len(coarse) == 2
    dims = {tuple(d.coords): c.dim for c, d in
            zip(coarse.components, coarse.degrees)}
    assert dims == {(0,): 1, (1,): 2}


def test_restriction_and_refinement():
    objs = catalog()["sl2xsl2-free-11"].construct()
    gg = objs["ggrading"]
    alg = gg.algebra
    block1 = Subspace(Q, 6, [alg.basis_vector(i) for i in range(3)])
    sub, restricted, emb = restrict_grading(gg, block1)
    assert sub.structure_equal(sl2_algebra(Q))
    assert len(restricted) == 3
    assert emb.is_homomorphism()

    fine = gg.grading()
    coarse = induced_group_grading(fine).grading()
    assert is_refinement(fine, coarse)
    assert refinement_map(fine, coarse) is not None


def test_product_constructions():
    g1 = sl2_gamma1_universal(Q)
    g2 = sl2_gamma2_universal(Q)
    prod, gamma, offsets = product_grading([g1.grading(), g2.grading()])
    assert prod.dim == 6 and len(gamma.components) == 6
    _, free, _ = free_product_group_grading([g1, g2])
    assert free.group.invariants() == (1, (2, 2))
    assert free == induced_group_grading(gamma)

    # degreewise product over a shared group merges equal degrees
    z = g1.group
    _, merged, _ = product_G_grading(z, [g1, g1])
    assert len(merged) == 3
    assert sorted(c.dim for c in merged.components) == [2, 2, 2]
    with pytest.raises(IncompatibleDegrees):
        product_G_grading(cyclic_group(2), [g1, g1])


def test_adapted_basis_spans():
    gg = sl2_gamma2_universal(Q)
    rows = adapted_basis(gg)
    assert linalg.rank(rows) == 3


def _random_character(gg, rng):
    """Random multiplicative character of the grading group into the field."""
    field = gg.algebra.field
    group = gg.group
    images = []
    for i in range(group.coord_len):
        d = group.generator_order(i)
        if d == 0:
            if field.kind == "prime":
                val = field.scalar(rng.randrange(1, field.p))
            else:
                val = field.scalar(Fraction(rng.randint(1, 5),
                                            rng.randint(1, 5)))
        else:
            m = field.max_root_order()
            import math
            k = math.gcd(d, m)
            val = root_of_unity(field, k) ** rng.randrange(k)
        images.append(val)

    def chi(el):
        out = field.one()
        for c, v in zip(el.coords, images):
            out = out * v**c
        return out

    return chi


def test_diagonal_automorphisms_from_characters():
    # ten random characters per catalog GGrading give exact automorphisms
    # and compose multiplicatively
    rng = random.Random(4)
    cat = catalog()
    names = ["sl2-gamma1", "sl2-gamma2", "sl2xsl2-free-12",
             "sl2xsl2-loop-z-z2", "sl2xsl2-z4z2"]
    for name in names:
        objs = cat[name].construct()
        gg = objs["ggrading"]
        for _ in range(10):
            chi = _random_character(gg, rng)
            eta = _random_character(gg, rng)
            a = diagonal_automorphism(gg, chi)
            b = diagonal_automorphism(gg, eta)
            product_chi = lambda el: chi(el) * eta(el)
            c = diagonal_automorphism(gg, product_chi)
            assert linalg.mat_mul(a.matrix, b.matrix) == c.matrix
            # each automorphism fixes every component setwise
            for u in gg.components:
                assert a.image_of_subspace(u) == u


def test_check_equivalence_and_inversion():
    gg = sl2_gamma1_universal(Q)
    gamma = gg.grading()
    res = check_equivalence(identity_map(gg.algebra), gamma, gamma)
    assert res is not None
    matching, alpha = res
    assert matching == list(range(3))

    # E <-> F, H -> -H reverses the Cartan degrees
    a = gg.algebra
    m = [[Q.zero(), Q.one(), Q.zero()],
         [Q.one(), Q.zero(), Q.zero()],
         [Q.zero(), Q.zero(), Q.scalar(-1)]]
    phi = AlgebraMap(a, a, m)
    res = check_equivalence(phi, gamma, gamma)
    assert res is not None
    _, alpha = res
    u, degs = universal_group(gamma)
    gen = u.canonical_generators()[0]
    assert alpha(gen) == gen.inverse()

    # the exponential of ad E is an automorphism that moves the Cartan
    # components, so it is not an equivalence of this grading with itself
    exp_ad_e = AlgebraMap(a, a, [
        [Q.one(), Q.scalar(-1), Q.scalar(-2)],
        [Q.zero(), Q.one(), Q.zero()],
        [Q.zero(), Q.one(), Q.one()],
    ])
    assert exp_ad_e.is_homomorphism() and exp_ad_e.is_bijective()
    assert check_equivalence(exp_ad_e, gamma, gamma) is None


def test_check_G_isomorphism():
    gg = sl2_gamma2_universal(Q)
    assert check_G_isomorphism(identity_map(gg.algebra), gg, gg)
    # same components with a permuted degree assignment: identity is an
    # algebra iso but not degree-preserving
    k = gg.group
    by_deg = {tuple(d.coords): c for c, d in zip(gg.components, gg.degrees)}
    permuted = GGrading(gg.algebra, k, [
        by_deg[(1, 0)], by_deg[(0, 1)], by_deg[(1, 1)],
    ], [k.from_canonical([0, 1]), k.from_canonical([1, 0]),
        k.from_canonical([1, 1])])
    assert not check_G_isomorphism(identity_map(gg.algebra), gg, permuted)
    # a diagonal automorphism preserves every degree
    chi = lambda el: Q.scalar(-1) ** (el.coords[0])
    auto = diagonal_automorphism(gg, chi)
    assert check_G_isomorphism(auto, gg, gg)


def _transport(alg, grading, matrix):
    """The isomorphic algebra and grading seen through an invertible map."""
    field, n = alg.field, alg.dim
    inv = linalg.inverse(matrix)
    assert inv is not None
    cols = [[inv[r][i] for r in range(n)] for i in range(n)]
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = alg.multiply(cols[i], cols[j])
            row.append(linalg.mat_vec(matrix, prod))
        table.append(row)
    new_alg = Algebra(field, n, table)
    comps = [
        Subspace(field, n, [linalg.mat_vec(matrix, r) for r in u.rows])
        for u in grading.components
    ]
    return new_alg, validate_grading(new_alg, comps)


def test_universal_group_presentation_invariance():
    # 100 random relabelings of graded algebras leave the universal group
    # invariants and the component dimension multiset unchanged
    rng = random.Random(31)
    cases = [
        catalog()["non-group-sl2xsl2"].construct()["grading"],
        sl2_gamma1_universal(Q).grading(),
        sl2_gamma2_universal(Q).grading(),
        _fxf_grading()[1],
    ]
    for step in range(100):
        grading = cases[step % len(cases)]
        alg = grading.algebra
        n = alg.dim
        while True:
            m = [[Q.scalar(rng.randint(-2, 2)) for _ in range(n)]
                 for _ in range(n)]
            if linalg.inverse(m) is not None:
                break
        new_alg, new_grading = _transport(alg, grading, m)
        g0, _ = universal_group(grading)
        g1, _ = universal_group(new_grading)
        assert g0.invariants() == g1.invariants()
        assert sorted(c.dim for c in grading.components) == sorted(
            c.dim for c in new_grading.components
        )
        assert is_group_grading(grading) == is_group_grading(new_grading)
