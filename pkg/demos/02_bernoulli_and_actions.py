"""The subset poset of a category and the actions living on it.

Enumerates P(I2) — nonempty subsets of single R-classes ordered so that
larger subsets sit lower — and its pointed variant P∘(I2).  Then builds the
global action by left translation, converts it through the symmetry-functor
view into a partial-action bundle, and checks that cutting the global bundle
down to the pointed ideal reproduces the directly built partial action.
"""

from __future__ import annotations

from invcat import (
    bernoulli_global,
    bernoulli_partial,
    build_bernoulli,
    fibred_to_symmetry,
    restrict_to_ideal,
    symmetric_inverse_monoid_2,
    symmetry_to_partial,
    validate_fibred,
    validate_partial,
)


def main() -> None:
    i2 = symmetric_inverse_monoid_2()
    full = build_bernoulli(i2)
    pointed = build_bernoulli(i2, pointed=True)
    print(f"|P(I2)| = {len(full.elements)},  |P∘(I2)| = {len(pointed.elements)}")

    print("\nelements of P(I2) (key: idempotent):")
    for key, elt in sorted(full.elements.items()):
        mark = " ∘" if key in pointed.elements else ""
        print(f"  {key:<12} {elt.idem}{mark}")

    print("\ncover-style listing of the order (a < b, no step between):")
    keys = sorted(full.elements)
    for a in keys:
        for b in keys:
            if a == b or not full.poset.leq(a, b):
                continue
            if any(
                c not in (a, b) and full.poset.leq(a, c) and full.poset.leq(c, b)
                for c in keys
            ):
                continue
            print(f"  {a} < {b}")

    action = bernoulli_global(i2)
    print(f"\nglobal action validates: {validate_fibred(action).ok}")
    print("sample: θ_s12 moves", sorted(action.domain("s12")))

    bundle = symmetry_to_partial(fibred_to_symmetry(action))
    cut = restrict_to_ideal(bundle, pointed.elements)
    direct = bernoulli_partial(i2)
    same = all(
        cut.domains[s] == direct.domains[s]
        and sorted(cut.maps[s].pairs) == sorted(direct.maps[s].pairs)
        for s in i2.morphisms
    )
    print(f"\nrestricting the global bundle to P∘ = direct partial bundle: {same}")
    print(f"the cut bundle validates: {validate_partial(cut).ok}")
    print(f"the cut bundle is global: {cut.is_global()}")


if __name__ == "__main__":
    main()
