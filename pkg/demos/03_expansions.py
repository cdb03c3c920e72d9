"""Expansions over the subset poset and the pseudo product.

Builds all four expansion variants of I2, then demonstrates the pseudo
product ⋆ (a total extension of composition), the wedge of idempotents, and
restriction along an idempotent.  Finally recovers the classical prefix
expansion of the two-element group from the inner pointed expansion.
"""

from __future__ import annotations

from invcat import (
    classical_group_expansion,
    cyclic_group_2,
    inner_expansion,
    pseudo_product,
    restriction,
    symmetric_inverse_monoid_2,
    szendrei,
    validate_inverse_semigroup,
    wedge,
)


def main() -> None:
    i2 = symmetric_inverse_monoid_2()
    print("expansion sizes over I2:")
    for variant in ("global", "partial", "strict_global", "strict_partial"):
        sz = szendrei(i2, variant)
        print(f"  {variant:<14} {len(sz.ic.morphisms):>3} arrows")

    sz = szendrei(i2, "global")
    a, b = "({id,swap}|swap)", "({s12}|s12)"
    print(f"\npseudo product: {a} ⋆ {b} = {pseudo_product(sz, a, b)}")
    i, j = "({id,swap}|id)", "({id1}|id1)"
    print(f"wedge: {i} ∧ {j} = {wedge(sz, i, j)} = {wedge(sz, j, i)}")
    arrow = "({swap}|swap)"
    idem = "({id1}|id1)"
    print(f"restriction of {arrow} to {idem}: {restriction(sz, arrow, idem)}")

    z2 = cyclic_group_2()
    ie = inner_expansion(szendrei(z2, "partial"), "*")
    names, table = classical_group_expansion(z2)
    print(f"\ninner pointed expansion of Z2: {sorted(ie.elements)}")
    print(f"matches the prefix expansion table: {ie.table == table}")
    print(f"is an inverse semigroup: {validate_inverse_semigroup(ie.elements, ie.table).ok}")
    print(f"identity element: {ie.identity}")
    print("\nits multiplication table:")
    width = max(len(n) for n in names)
    header = " " * (width + 2) + "  ".join(n.ljust(width) for n in names)
    print(header)
    for r in names:
        row = "  ".join(ie.table[(r, c)].ljust(width) for c in names)
        print(f"{r.ljust(width)}  {row}")


if __name__ == "__main__":
    main()
