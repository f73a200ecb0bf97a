"""When is the trivial grading on a product of two simple algebras fine?

The algebra A here is two-dimensional and simple, and rigid: its only
group-grading is the trivial one.  Stack two copies into P = A x A with
the trivial grading.  Whether that grading is fine (admits no proper
group-grading refinement) depends on the field:

  * characteristic not 2: the diagonal and antidiagonal copies of A form
    a Z/2-grading that properly refines the trivial grading, so it is
    not fine.  The duplicate rule flags the two equivalent trivially
    graded factors.
  * characteristic 2: diagonal and antidiagonal coincide, the mixing
    disappears, and the same trivial grading is fine.

Run with:  python3 demos/fineness_walkthrough.py
"""

from gradings.algebra import Subspace, is_simple, product_algebra
from gradings.classify import decompose_graded, fine_criteria_check, two_dim_simple_algebra
from gradings.grading import (
    induced_group_grading,
    is_group_grading,
    is_refinement,
    trivial_grading,
    universal_group,
    validate_grading,
)
from gradings.scalar import make_field


def graded_simple_factors(field_spec):
    field = make_field(field_spec)
    a = two_dim_simple_algebra(field)
    assert is_simple(a)
    prod, _ = product_algebra([a, a])
    gg = induced_group_grading(trivial_grading(prod))
    return prod, decompose_graded(gg)


def main():
    print("A: the rigid 2-dim simple algebra (a*a=a, a*b=b, b*a=0, b*b=a+b)")
    print("P = A x A with the trivial grading\n")

    for spec, label in (("rationals", "rationals"), (("prime", 2), "GF(2)")):
        prod, factors = graded_simple_factors(spec)
        print(f"over {label}: {len(factors)} graded-simple factors, dims "
              f"{[f.subspace.dim for f in factors]}")
        # flag True records that the trivial grading on rigid A is fine
        verdict = fine_criteria_check([(f, True) for f in factors])
        print(f"  fine: {verdict['fine']}  ({verdict['clause']})")
        if "duplicate_class" in verdict:
            print(f"  duplicate class: factors {verdict['duplicate_class']}")
        print()

    # exhibit the refinement that kills fineness away from characteristic 2
    field = make_field("rationals")
    a = two_dim_simple_algebra(field)
    prod, _ = product_algebra([a, a])
    diag = Subspace(field, 4, [[1, 0, 1, 0], [0, 1, 0, 1]])
    anti = Subspace(field, 4, [[1, 0, -1, 0], [0, 1, 0, -1]])
    witness = validate_grading(prod, [diag, anti])
    group, degrees = universal_group(witness)
    print("refinement witness over the rationals:")
    print("  components: diagonal {(x, x)} and antidiagonal {(x, -x)}")
    print(f"  is a grading: True, is a group grading: {is_group_grading(witness)}")
    print(f"  properly refines the trivial grading: "
          f"{is_refinement(witness, trivial_grading(prod))}")
    print(f"  universal group invariants: {group.invariants()} (one Z/2)")

    f2 = make_field(("prime", 2))
    same = (Subspace(f2, 4, [[1, 0, 1, 0], [0, 1, 0, 1]]) ==
            Subspace(f2, 4, [[1, 0, -1, 0], [0, 1, 0, -1]]))
    print("\nover GF(2) the witness collapses: diagonal == antidiagonal is "
          f"{same}, so no refinement exists and the trivial grading is fine")


if __name__ == "__main__":
    main()
