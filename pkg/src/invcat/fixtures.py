"""Small named categories and posets used by the demos and the test suite.

* ``trivial_category``            one object, one identity
* ``cyclic_group_2``              the group Z2 viewed as a one-object category
* ``two_object_groupoid``         two isomorphic objects, four morphisms
* ``symmetric_inverse_monoid_2``  all seven partial bijections of {1, 2}
* ``full_transformation_monoid_2``  all four maps 2 -> 2 (NOT an inverse category)
"""

from __future__ import annotations

from .core import FiniteCategory, InverseCategory, find_inverse_structure
from .poset import Poset, antichain_poset, chain_poset


def _one_object(morphisms: dict[str, tuple[tuple[int, int], ...]], identity: str) -> FiniteCategory:
    """Monoid of partial maps on a finite set, composed as relations."""
    names = tuple(morphisms)
    inv_lookup = {pairs: name for name, pairs in morphisms.items()}
    table: dict[tuple[str, str], str] = {}
    for g, gp in morphisms.items():
        gmap = dict(gp)
        for f, fp in morphisms.items():
            composite = tuple(sorted((a, gmap[b]) for a, b in fp if b in gmap))
            table[(g, f)] = inv_lookup[composite]
    return FiniteCategory.build(
        ("*",), {m: ("*", "*") for m in names}, {"*": identity}, table
    )


def trivial_category() -> InverseCategory:
    """One object, one morphism."""
    cat = FiniteCategory.build(("*",), {"1": ("*", "*")}, {"*": "1"}, {("1", "1"): "1"})
    return find_inverse_structure(cat)


def cyclic_group_2() -> InverseCategory:
    """The two-element group: identity e and an involution g."""
    cat = FiniteCategory.build(
        ("*",),
        {"e": ("*", "*"), "g": ("*", "*")},
        {"*": "e"},
        {("e", "e"): "e", ("e", "g"): "g", ("g", "e"): "g", ("g", "g"): "e"},
    )
    return find_inverse_structure(cat)


def two_object_groupoid() -> InverseCategory:
    """Two objects X ≅ Y, one isomorphism s each way, no other morphisms."""
    cat = FiniteCategory.build(
        ("X", "Y"),
        {"1X": ("X", "X"), "1Y": ("Y", "Y"), "s": ("X", "Y"), "si": ("Y", "X")},
        {"X": "1X", "Y": "1Y"},
        {
            ("1X", "1X"): "1X",
            ("1Y", "1Y"): "1Y",
            ("s", "1X"): "s",
            ("1Y", "s"): "s",
            ("si", "1Y"): "si",
            ("1X", "si"): "si",
            ("si", "s"): "1X",
            ("s", "si"): "1Y",
        },
    )
    return find_inverse_structure(cat)


# the seven partial bijections of {1, 2}, keyed by their graph
_I2_MAPS: dict[str, tuple[tuple[int, int], ...]] = {
    "emp": (),
    "id1": ((1, 1),),
    "id2": ((2, 2),),
    "s12": ((1, 2),),
    "s21": ((2, 1),),
    "id": ((1, 1), (2, 2)),
    "swap": ((1, 2), (2, 1)),
}


def symmetric_inverse_monoid_2() -> InverseCategory:
    """All partial bijections of {1, 2} under relational composition."""
    return find_inverse_structure(_one_object(_I2_MAPS, "id"))


# the four total maps 2 -> 2; c1 and c2 are the constant maps
_T2_MAPS: dict[str, tuple[tuple[int, int], ...]] = {
    "id": ((1, 1), (2, 2)),
    "swap": ((1, 2), (2, 1)),
    "c1": ((1, 1), (2, 1)),
    "c2": ((1, 2), (2, 2)),
}


def full_transformation_monoid_2() -> FiniteCategory:
    """All total maps on {1, 2}; the constant maps each have two generalized
    inverses, so this is a category but not an inverse category."""
    return _one_object(_T2_MAPS, "id")


def point_poset() -> Poset:
    return chain_poset(("a",))


def chain2_poset() -> Poset:
    return chain_poset(("a", "b"))


def antichain2_poset() -> Poset:
    return antichain_poset(("a", "b"))
