"""Recognise an inverse category and explore its order structure.

Builds the monoid of partial bijections of {1,2}, checks the category axioms,
finds the unique generalized inverse of every morphism, and prints the
natural partial order, the idempotent semilattice, and the L/R classes.
Also shows the rejection path on the full transformation monoid, where
constant maps have two generalized inverses each.
"""

from __future__ import annotations

from invcat import (
    NotInverseCategory,
    find_inverse_structure,
    full_transformation_monoid_2,
    inner_outer,
    natural_leq,
    relation_classes,
    symmetric_inverse_monoid_2,
    validate_category,
)


def main() -> None:
    i2 = symmetric_inverse_monoid_2()
    report = validate_category(i2.cat)
    print(f"I2: {len(i2.cat.objects)} object, {len(i2.cat.morphisms)} morphisms,"
          f" category axioms ok={report.ok}")

    print("\nmorphism  (src, tgt, s°s, ss°)   inverse")
    for m in i2.morphisms:
        print(f"  {m:<6}  {inner_outer(i2, m)}   {i2.inv(m)}")

    print("\nnatural order (s ≤ t, s ≠ t):")
    for s in i2.morphisms:
        for t in i2.morphisms:
            if s != t and i2.cat.parallel(s, t) and natural_leq(i2, s, t):
                print(f"  {s} ≤ {t}")

    print("\nidempotent meets:")
    for e in i2.idempotents():
        for f in i2.idempotents():
            if e < f:
                print(f"  {e} ∧ {f} = {i2.meet_idem(e, f)}")

    rc = relation_classes(i2)
    print(f"\nR-classes: {rc.r_classes}")
    print(f"L-classes: {rc.l_classes}")

    t2 = full_transformation_monoid_2()
    print(f"\nT2 (all maps on two points) is a valid category:"
          f" {validate_category(t2).ok}")
    try:
        find_inverse_structure(t2)
    except NotInverseCategory as err:
        print(f"...but not an inverse category: {err}")


if __name__ == "__main__":
    main()
