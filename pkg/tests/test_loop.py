"""Loop algebras: construction, splitting, witnesses, base recovery."""

import pytest

from gradings import linalg
from gradings.abgroup import (
    cyclic_group,
    direct_product,
    free_group,
    hom,
    hom_on_raw_generators,
    kernel,
)
from gradings.algebra import (
    Algebra,
    AlgebraMap,
    Subspace,
    decompose_semisimple,
    identity_map,
    is_ideal,
    product_subspace,
)
from gradings.classify import (
    catalog,
    sl2_algebra,
    sl2_gamma1,
    sl2_gamma1_universal,
)
from gradings.errors import (
    BaseNotUniversal,
    CentroidNotGraded,
    CharCoprime,
    CharDividesKernel,
    CertificationError,
    IncompatibleDegrees,
    InfiniteKernel,
    NeedIsoCertificate,
    NotSemisimple,
    NotSurjective,
)
from gradings.grading import GGrading, coarsen_by_hom, product_G_grading
from gradings.loop import (
    build_loop,
    character_matrix,
    graded_centroid,
    is_graded_central_simple,
    loop_iso_test,
    nilpotent_witness,
    recover_base,
    shift_operator,
    split_loop,
    verify_loop_universal,
)
from gradings.scalar import make_field

Q = make_field("rationals")


def line(field, n, vec):
    return Subspace(field, n, [[field.scalar(x) for x in vec]])


def cartan_loop(field, kernel_order=2):
    """Loop of the Cartan grading along Z x Z/k -> Z, kernel Z/k."""
    base = sl2_gamma1_universal(field)
    gbar = base.group
    big, _, _ = direct_product(free_group(1), cyclic_group(kernel_order))
    pi = hom_on_raw_generators(
        big, gbar, [gbar.canonical_generators()[0], gbar.identity()]
    )
    return build_loop(base, pi)


def comp_at(gg, coords):
    return gg.component_of_degree(gg.group.from_canonical(list(coords)))


def unit_vector(field, n, i):
    v = [field.zero()] * n
    v[i] = field.one()
    return v


def test_build_loop_structure():
    loop = cartan_loop(Q)
    base = loop.base
    assert loop.algebra.dim == base.algebra.dim * loop.kernel_order() == 6
    assert [tuple(h.coords) for h in loop.kernel_elements] == [(0, 0), (0, 1)]
    assert loop.kernel_group.invariants() == (0, (2,))

    # basis labels name (component.row @ degree) and positions round-trip
    for i, (c, g, r) in enumerate(loop.index):
        assert loop.position(c, g, r) == i
        assert loop.algebra.labels[i].startswith(f"{c}.{r}@(")

    # six one-dimensional components, one per degree in the support
    gg = loop.ggrading
    assert len(gg.components) == 6
    assert all(c.dim == 1 for c in gg.components)
    assert sorted(tuple(d.coords) for d in gg.degrees) == [
        (-1, 0), (-1, 1), (0, 0), (0, 1), (1, 0), (1, 1),
    ]

    # products follow the base table and add degrees:
    # (E(x)g)(F(x)g') = H(x)gg' and (H(x)g)(E(x)g') = 2 E(x)gg'
    big = loop.pi.domain
    c_f = next(c for c, d in enumerate(base.degrees) if d.coords == (-1,))
    c_h = next(c for c, d in enumerate(base.degrees) if d.coords == (0,))
    c_e = next(c for c, d in enumerate(base.degrees) if d.coords == (1,))
    n = loop.algebra.dim

    def at(c, coords):
        return loop.position(c, big.from_canonical(list(coords)), 0)

    e10 = unit_vector(Q, n, at(c_e, [1, 0]))
    f_11 = unit_vector(Q, n, at(c_f, [-1, 1]))
    h01 = unit_vector(Q, n, at(c_h, [0, 1]))
    prod = loop.algebra.multiply(e10, f_11)
    assert prod == unit_vector(Q, n, at(c_h, [0, 1]))
    prod = loop.algebra.multiply(h01, e10)
    expect = [Q.scalar(2) * t for t in unit_vector(Q, n, at(c_e, [1, 1]))]
    assert prod == expect


def test_build_loop_guards():
    base = sl2_gamma1_universal(Q)
    u = base.group
    gen = u.canonical_generators()[0]

    wrong = hom(cyclic_group(4), cyclic_group(2),
                [cyclic_group(2).canonical_generators()[0]])
    with pytest.raises(IncompatibleDegrees):
        build_loop(base, wrong)

    doubling = hom(free_group(1), u, [gen * gen])
    with pytest.raises(NotSurjective):
        build_loop(base, doubling)

    collapse = hom(free_group(2), u, [gen, gen])
    with pytest.raises(InfiniteKernel):
        build_loop(base, collapse)


def test_verify_loop_universal():
    loop = cartan_loop(Q)
    report = verify_loop_universal(loop)
    assert report["alpha_isomorphism"]
    assert report["pi_universal_surjective"]
    assert report["square_commutes"]
    assert report["kernel_bijection"]
    assert report["certified"]

    # a base realized over a proper quotient of its universal group is
    # rejected before any transfer is attempted
    z4 = cyclic_group(4)
    small = sl2_gamma1(Q, z4, z4.canonical_generators()[0])
    z8 = cyclic_group(8)
    pi = hom(z8, z4, [z4.canonical_generators()[0]])
    folded = build_loop(small, pi)
    with pytest.raises(BaseNotUniversal):
        verify_loop_universal(folded)


def test_split_kernel_two_over_rationals():
    loop = cartan_loop(Q)
    phi, chars = split_loop(loop)
    assert phi.is_homomorphism() and phi.is_bijective()
    big = loop.pi.domain
    assert chars[0](big.from_canonical([0, 1])) == Q.one()
    assert chars[1](big.from_canonical([0, 1])) == -Q.one()
    assert chars[1](big.from_canonical([1, 0])) == Q.one()

    # character matrix over the kernel is the order-two Fourier matrix
    mat = character_matrix(loop, chars)
    one = Q.one()
    assert mat == [[one, one], [one, -one]]
    assert linalg.det(mat) == Q.scalar(-2)

    # image components in sl2 x sl2 with basis (E,F,H,E',F',H')
    expected = {
        (0, 0): [0, 0, 1, 0, 0, 1],
        (0, 1): [0, 0, 1, 0, 0, -1],
        (1, 0): [1, 0, 0, 1, 0, 0],
        (1, 1): [1, 0, 0, -1, 0, 0],
        (-1, 0): [0, 1, 0, 0, 1, 0],
        (-1, 1): [0, 1, 0, 0, -1, 0],
    }
    gg = loop.ggrading
    for comp, deg in zip(gg.components, gg.degrees):
        image = phi.image_of_subspace(comp)
        assert image == line(Q, 6, expected[tuple(deg.coords)])


def test_split_kernel_three_over_cyclotomic():
    field = make_field(("cyclotomic", 3))
    loop = cartan_loop(field, kernel_order=3)
    assert loop.algebra.dim == 9
    phi, chars = split_loop(loop)
    assert phi.is_homomorphism() and phi.is_bijective()

    # the character values at a kernel generator are the three cube roots
    big = loop.pi.domain
    h = big.from_canonical([0, 1])
    values = [chi(h) for chi in chars]
    assert len({str(v) for v in values}) == 3
    for v in values:
        assert v * v * v == field.one()

    # Vandermonde oracle: det (chi_j(h^i)) = prod_{j<k} (x_k - x_j)
    mat = character_matrix(loop, chars)
    for i in range(3):
        for j in range(3):
            assert mat[i][j] == values[j] ** i
    expected = field.one()
    for k in range(3):
        for j in range(k):
            expected = expected * (values[k] - values[j])
    det = linalg.det(mat)
    assert det == expected
    assert det != field.zero()

    # the split is a graded isomorphism component by component over Gbar
    base = loop.base
    coarse = coarsen_by_hom(loop.ggrading, loop.pi)
    prod_alg, target_bar, _ = product_G_grading(base.group, [base] * 3)
    assert prod_alg.structure_equal(phi.target)
    for comp, deg in zip(coarse.components, coarse.degrees):
        image = phi.image_of_subspace(comp)
        target = target_bar.component_of_degree(deg)
        assert comp.dim == 3 and image == target


def test_shift_operators_generate_the_graded_centroid():
    loop = cartan_loop(Q)
    e, h = loop.kernel_elements
    s = shift_operator(loop, h)
    n = loop.algebra.dim
    ident = linalg.identity(Q, n)
    assert shift_operator(loop, e) == ident
    assert s != ident
    assert linalg.mat_mul(s, s) == ident
    for op in loop.algebra.mult_operators():
        assert linalg.mat_mul(s, op) == linalg.mat_mul(op, s)

    profile = graded_centroid(loop.ggrading)
    assert profile.dimension() == loop.kernel_order() == 2
    assert sorted(tuple(d.coords) for d in profile.degrees) == [
        (0, 0), (0, 1),
    ]
    assert profile.support_group.invariants() == (0, (2,))

    # the degree-(0,1) component is the line spanned by the shift
    basis = profile.component_of(h)
    assert len(basis) == 1
    flat = [[x for row in m for x in row] for m in (basis[0], s)]
    assert linalg.rank(flat) == 1

    ident_part = profile.component_of(e)
    assert len(ident_part) == 1
    flat = [[x for row in m for x in row] for m in (ident_part[0], ident)]
    assert linalg.rank(flat) == 1


def test_graded_centroid_rejects_nonclosed_support():
    # a*a = b graded with a at 1, b at 2: the nilpotent centroid element
    # a -> b has degree 1 while no degree -1 part exists
    alg = Algebra.from_sparse(Q, 2, {(0, 0): [(1, 1)]}, labels=["a", "b"])
    z = free_group(1)
    gg = GGrading(alg, z, [line(Q, 2, [1, 0]), line(Q, 2, [0, 1])],
                  [z.element([1]), z.element([2])])
    with pytest.raises(CentroidNotGraded):
        graded_centroid(gg)

    # zero multiplication, a at 0 and b at 1: homogeneous degrees 0, 1, -1
    # exist but 1 + 1 leaves the support
    zero = Algebra(Q, 2, [[[Q.zero()] * 2] * 2] * 2, labels=["a", "b"])
    gg2 = GGrading(zero, z, [line(Q, 2, [1, 0]), line(Q, 2, [0, 1])],
                   [z.identity(), z.element([1])])
    with pytest.raises(CentroidNotGraded):
        graded_centroid(gg2)


def test_graded_central_simple_reports():
    loop = cartan_loop(Q)
    report = is_graded_central_simple(loop.ggrading)
    assert report["simple_ideal_count"] == 2
    assert report["graded_simple"] and report["witness_ideals"] is None
    assert report["graded_central"]
    assert report["graded_central_simple"]

    # a free product grading keeps each factor as a graded ideal
    free = catalog()["sl2xsl2-free-11"].construct(Q)["ggrading"]
    report = is_graded_central_simple(free)
    assert report["simple_ideal_count"] == 2
    assert not report["graded_simple"]
    assert report["witness_ideals"] in ([0], [1])
    assert not report["graded_central_simple"]

    # semisimplicity is a precondition
    bad = catalog()["sl2-f2-loop"].construct()["ggrading"]
    with pytest.raises(NotSemisimple):
        is_graded_central_simple(bad)


def test_nilpotent_witness_in_bad_characteristic():
    for name, p, kord in (("sl2-f2-loop", 2, 2), ("idem-f3-loop", 3, 3)):
        objs = catalog()[name].construct()
        loop = objs["loop"]
        field = loop.algebra.field
        assert field.characteristic() == p
        assert loop.kernel_order() == kord
        ctilde, ideal = nilpotent_witness(loop)

        square = linalg.mat_mul(ctilde, ctilde)
        assert all(not x for row in square for x in row)
        assert 0 < ideal.dim < loop.algebra.dim
        assert is_ideal(loop.algebra, ideal)
        assert product_subspace(loop.algebra, ideal, ideal).dim == 0

        with pytest.raises(CharDividesKernel) as exc:
            split_loop(loop)
        assert exc.value.data["characteristic"] == p
        assert exc.value.data["kernel_order"] == kord
        with pytest.raises(NotSemisimple):
            decompose_semisimple(loop.algebra)

    # coprime characteristic refuses to manufacture a witness
    with pytest.raises(CharCoprime):
        nilpotent_witness(cartan_loop(Q))


def test_recover_base_identity_path():
    gg = sl2_gamma1_universal(Q)
    pi, base_gg, iso = recover_base(gg)
    assert base_gg is gg
    assert pi.domain is gg.group
    for g in gg.degrees:
        assert pi(g) == g
    assert iso.is_homomorphism() and iso.is_bijective()


def test_recover_base_round_trips():
    names = [
        "sl2-loop-gamma1-h2",
        "sl2-loop-gamma1-h3",
        "sl2-loop-gamma2-h2",
        "sl2xsl2-loop-z-z2",
        "sl2xsl2-loop-z2cube",
    ]
    for name in names:
        entry = catalog()[name]
        objs = entry.construct()
        gg = objs["ggrading"]
        pi, base_gg, iso = recover_base(gg)
        assert iso.is_homomorphism() and iso.is_bijective()

        kgroup, _ = kernel(pi)
        profile = graded_centroid(gg)
        assert profile.dimension() == kgroup.order()
        assert gg.algebra.dim == base_gg.algebra.dim * kgroup.order()

        rebuilt = build_loop(base_gg, pi)
        assert rebuilt.algebra.dim == gg.algebra.dim
        for comp, deg in zip(gg.components, gg.degrees):
            image = iso.image_of_subspace(comp)
            assert image == rebuilt.ggrading.component_of_degree(deg)
        if "loop" in objs:
            assert kgroup.order() == objs["loop"].kernel_order()


def test_loop_iso_kernel_comparison():
    # base: the group algebra of Z/2 graded by itself
    table = {(0, 0): [(0, 1)], (0, 1): [(1, 1)],
             (1, 0): [(1, 1)], (1, 1): [(0, 1)]}
    alg = Algebra.from_sparse(Q, 2, table, labels=["1", "u"])
    z2 = cyclic_group(2)
    base = GGrading(alg, z2, [line(Q, 2, [1, 0]), line(Q, 2, [0, 1])],
                    [z2.identity(), z2.canonical_generators()[0]])

    klein, _, _ = direct_product(cyclic_group(2), cyclic_group(2))
    g = z2.canonical_generators()[0]
    e = z2.identity()
    pa = hom(klein, z2, [g, e])
    pb = hom(klein, z2, [e, g])
    la, lb = build_loop(base, pa), build_loop(base, pb)
    assert {tuple(h.coords) for h in la.kernel_elements} == {(0, 0), (0, 1)}
    assert {tuple(h.coords) for h in lb.kernel_elements} == {(0, 0), (1, 0)}
    assert loop_iso_test(la, lb) is False
    assert loop_iso_test(la, la) is True

    # same kernel, equal rebuilt base: recognized without a certificate
    base_again = GGrading(alg, z2,
                          [line(Q, 2, [1, 0]), line(Q, 2, [0, 1])],
                          [z2.identity(), z2.canonical_generators()[0]])
    assert loop_iso_test(la, build_loop(base_again, pa)) is True

    # grading groups must match
    z4 = cyclic_group(4)
    pc = hom(z4, z2, [g])
    with pytest.raises(IncompatibleDegrees):
        loop_iso_test(la, build_loop(base, pc))


def test_loop_iso_needs_and_checks_certificates():
    base_a = sl2_gamma1_universal(Q)
    u = base_a.group
    alg = base_a.algebra

    # transport the Cartan grading through E <-> F, H -> -H
    m = [[Q.zero(), Q.one(), Q.zero()],
         [Q.one(), Q.zero(), Q.zero()],
         [Q.zero(), Q.zero(), Q.scalar(-1)]]
    sigma = AlgebraMap(alg, alg, m)
    assert sigma.is_homomorphism() and sigma.is_bijective()
    base_b = GGrading(alg, u,
                      [sigma.image_of_subspace(c) for c in base_a.components],
                      list(base_a.degrees))
    assert base_b != base_a

    big, _, _ = direct_product(free_group(1), cyclic_group(2))
    pi = hom_on_raw_generators(
        big, u, [u.canonical_generators()[0], u.identity()]
    )
    la, lb = build_loop(base_a, pi), build_loop(base_b, pi)

    with pytest.raises(NeedIsoCertificate):
        loop_iso_test(la, lb)
    assert loop_iso_test(la, lb, base_iso=sigma) is True

    # identity is an isomorphism but does not respect the degrees
    with pytest.raises(CertificationError):
        loop_iso_test(la, lb, base_iso=identity_map(alg))

    # the zero map is a homomorphism but no isomorphism
    zero = AlgebraMap(alg, alg, linalg.zeros(Q, 3, 3))
    with pytest.raises(CertificationError):
        loop_iso_test(la, lb, base_iso=zero)
