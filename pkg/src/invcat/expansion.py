"""Semidirect products and Szendrei-style expansions.

``semidirect_product`` turns any fibred action or partial action bundle into
a category: arrows are pairs (x, s) with x in the range-side domain D_s,
the target of (x, s) is x, the source is θ_{s°}(x), and composition
multiplies the underlying morphisms.  Applied to the Bernoulli actions this
yields the four expansion variants of ``szendrei``:

* ``global``          pairs (A, s) with the signature of A below ss°;
* ``partial``         pointed subsets with A ∋ iε(A)·s;
* ``strict_global``   signature equal to ss°;
* ``strict_partial``  pointed subsets with iε(A) = ss° and s ∈ A.

On top of the expansion live the pseudo product (A,s)⋆(B,t), the wedge of
idempotents, restriction/corestriction below an arrow, inner expansions at
one object, the functor induced by a functor of the underlying categories,
and the projection back onto the underlying category.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .actions import FibredAction, PartialActionBundle
from .bernoulli import BernoulliPoset, bernoulli_global, bernoulli_partial, build_bernoulli
from .core import (
    FiniteCategory,
    Functor,
    InverseCategory,
    ValidationReport,
    find_inverse_structure,
    natural_leq,
)
from .errors import NotComposable, NotIdempotent, PreconditionFailed
from .limits import DEFAULT_MAX_ELEMENTS
from .poset import subset_name

VARIANTS = ("global", "partial", "strict_global", "strict_partial")


def semidirect_product(
    action: FibredAction | PartialActionBundle,
) -> tuple[InverseCategory, dict[str, tuple[str, str]]]:
    """Build the semidirect product category of an action.

    Objects are the poset elements; the arrow (x, s), written ``(x|s)``,
    exists for every x in D_s and runs from θ_{s°}(x) to x.  The identity of
    x pairs it with the identity of its fiber's object, or with its own
    idempotent when the action is strict.  Returns the verified inverse
    category together with the map from arrow names back to (element,
    morphism) pairs.
    """
    ic = action.ic
    if isinstance(action, FibredAction):
        strict = action.strict
        domains = {s: action.domain(s) for s in ic.morphisms}
        back_maps = {
            s: {x: action.theta[(ic.inv(s), x)] for x in domains[s]}
            for s in ic.morphisms
        }
    else:
        strict = action.strict
        domains = {s: action.domains[s] for s in ic.morphisms}
        back_maps = {s: dict(action.maps[ic.inv(s)].pairs) for s in ic.morphisms}

    objects = tuple(action.poset.elements)
    arrows: dict[str, tuple[str, str]] = {}
    typing: dict[str, tuple[str, str]] = {}
    for s in ic.morphisms:
        for x in sorted(domains[s]):
            name = f"({x}|{s})"
            arrows[name] = (x, s)
            typing[name] = (back_maps[s][x], x)

    identities: dict[str, str] = {}
    for x in objects:
        if strict:
            units = [e for e in ic.idempotents() if x in domains[e]]
        else:
            units = [
                ic.identity_of(X) for X in ic.objects if x in domains[ic.identity_of(X)]
            ]
        assert len(units) == 1, (x, units, "element needs exactly one unit arrow")
        identities[x] = f"({x}|{units[0]})"

    table: dict[tuple[str, str], str] = {}
    for aname, (x, s) in arrows.items():
        y = back_maps[s][x]
        for bname, (yb, t) in arrows.items():
            if yb != y:
                continue
            st = ic.compose(s, t)
            assert st is not None, (aname, bname, "underlying morphisms not composable")
            cname = f"({x}|{st})"
            assert cname in arrows, (aname, bname, "composite escaped the arrow set")
            table[(aname, bname)] = cname

    cat = FiniteCategory.build(objects, typing, identities, table)
    return find_inverse_structure(cat), arrows


@dataclass
class SzCategory:
    """An expansion of ``origin``: its arrows are (subset, morphism) pairs."""

    ic: InverseCategory
    origin: InverseCategory
    variant: str
    carrier: BernoulliPoset
    arrows: dict[str, tuple[str, str]]
    _order_checked: bool = field(default=False, repr=False)

    def pair(self, name: str) -> tuple[str, str]:
        return self.arrows[name]

    def arrow_name(self, key: str, s: str) -> str:
        name = f"({key}|{s})"
        assert name in self.arrows, (key, s, "no such arrow")
        return name

    def push(self, c: str, key: str) -> str:
        """Apply a morphism of the underlying category to a subset element."""
        return self.carrier.act(c, key)

    def idem_of(self, key: str) -> str:
        return self.carrier.elements[key].idem


def szendrei(
    origin: InverseCategory,
    variant: str = "global",
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> SzCategory:
    """Construct one of the four expansion variants over the Bernoulli poset."""
    assert variant in VARIANTS, f"unknown variant {variant!r}"
    pointed = variant in ("partial", "strict_partial")
    strict = variant in ("strict_global", "strict_partial")
    carrier = build_bernoulli(origin, pointed=pointed, max_elements=max_elements)
    if pointed:
        action: FibredAction | PartialActionBundle = bernoulli_partial(
            origin, strict=strict, max_elements=max_elements
        )
    else:
        action = bernoulli_global(origin, strict=strict, max_elements=max_elements)
    inv, arrows = semidirect_product(action)
    return SzCategory(inv, origin, variant, carrier, arrows)


# ---------------------------------------------------------------------------
# orders on an expansion


def product_order_leq(sz: SzCategory, a: str, b: str) -> bool:
    """(A, s) ≤ (B, t) componentwise: A ≤ B in the subset poset and s ≤ t.

    On first use per expansion, asserts that the natural order of the
    expansion refines this product order on every pair of parallel arrows.
    """
    if not sz._order_checked:
        sz._order_checked = True
        for u in sz.ic.morphisms:
            for v in sz.ic.morphisms:
                if sz.ic.cat.parallel(u, v) and natural_leq(sz.ic, u, v):
                    assert _product_leq_raw(sz, u, v), (
                        "natural order does not refine the product order",
                        u,
                        v,
                    )
    return _product_leq_raw(sz, a, b)


def _product_leq_raw(sz: SzCategory, a: str, b: str) -> bool:
    (akey, s), (bkey, t) = sz.pair(a), sz.pair(b)
    if not sz.carrier.poset.leq(akey, bkey):
        return False
    return sz.origin.cat.parallel(s, t) and natural_leq(sz.origin, s, t)


# ---------------------------------------------------------------------------
# pseudo product, wedge, restriction, corestriction


def pseudo_product(sz: SzCategory, a: str, b: str) -> str:
    """(A,s) ⋆ (B,t) = (s·iε(B)·s°·A ∪ iε(A)·s·B, st).

    Defined exactly when st is; extends composition (they agree whenever the
    arrows are composable in the expansion).  Raises NOT_COMPOSABLE otherwise.
    """
    (akey, s), (bkey, t) = sz.pair(a), sz.pair(b)
    origin = sz.origin
    st = origin.compose(s, t)
    if st is None:
        raise NotComposable(
            f"underlying morphisms {s!r} and {t!r} do not compose", left=a, right=b
        )
    eb, ea = sz.idem_of(bkey), sz.idem_of(akey)
    conj = origin.compose(origin.compose(s, eb), origin.inv(s))
    lead = origin.compose(ea, s)
    assert conj is not None and lead is not None
    members: set[str] = set()
    for m in sz.carrier.elements[akey].members:
        cm = origin.compose(conj, m)
        assert cm is not None
        members.add(cm)
    for m in sz.carrier.elements[bkey].members:
        lm = origin.compose(lead, m)
        assert lm is not None
        members.add(lm)
    return sz.arrow_name(subset_name(members), st)


def wedge(sz: SzCategory, a: str, b: str) -> str:
    """Meet of two idempotent arrows: (E,i) ∧ (F,j) = (iε(F)·E ∪ iε(E)·F, ij).

    Requires both arrows idempotent (NOT_IDEMPOTENT) and i, j at the same
    object (NOT_COMPOSABLE).  Coincides with ⋆ on idempotents and is their
    greatest lower bound in the product order.
    """
    for name in (a, b):
        if not sz.ic.is_idempotent(name):
            raise NotIdempotent(f"arrow {name!r} is not idempotent", arrow=name)
    (akey, i), (bkey, j) = sz.pair(a), sz.pair(b)
    origin = sz.origin
    ij = origin.compose(i, j)
    if ij is None:
        raise NotComposable(
            f"idempotents {i!r} and {j!r} sit at different objects", left=a, right=b
        )
    ea, eb = sz.idem_of(akey), sz.idem_of(bkey)
    members: set[str] = set()
    for m in sz.carrier.elements[akey].members:
        out = origin.compose(eb, m)
        assert out is not None
        members.add(out)
    for m in sz.carrier.elements[bkey].members:
        out = origin.compose(ea, m)
        assert out is not None
        members.add(out)
    return sz.arrow_name(subset_name(members), ij)


def restriction(sz: SzCategory, arrow: str, idem: str) -> str:
    """The unique arrow below ``arrow`` whose inner source is ``idem``.

    For (E,f) ≤ s°s-side of (A,s) in the product order the value is (sE, sf).
    Raises NOT_IDEMPOTENT for a non-idempotent ``idem`` and
    PRECONDITION_FAILED when (E,f) does not sit below the inner source.
    """
    if not sz.ic.is_idempotent(idem):
        raise NotIdempotent(f"arrow {idem!r} is not idempotent", arrow=idem)
    inner = sz.ic.dom_idem(arrow)
    if not product_order_leq(sz, idem, inner):
        raise PreconditionFailed(
            f"{idem!r} is not below the inner source {inner!r} of {arrow!r}",
            arrow=arrow,
            idem=idem,
            inner=inner,
        )
    (akey, s), (ekey, f) = sz.pair(arrow), sz.pair(idem)
    sf = sz.origin.compose(s, f)
    assert sf is not None
    return sz.arrow_name(sz.push(s, ekey), sf)


def corestriction(sz: SzCategory, arrow: str, idem: str) -> str:
    """The unique arrow below ``arrow`` whose inner target is ``idem``.

    For (E,f) below the inner target (A, ss°) the value is (E, fs).
    """
    if not sz.ic.is_idempotent(idem):
        raise NotIdempotent(f"arrow {idem!r} is not idempotent", arrow=idem)
    inner = sz.ic.ran_idem(arrow)
    if not product_order_leq(sz, idem, inner):
        raise PreconditionFailed(
            f"{idem!r} is not below the inner target {inner!r} of {arrow!r}",
            arrow=arrow,
            idem=idem,
            inner=inner,
        )
    (akey, s), (ekey, f) = sz.pair(arrow), sz.pair(idem)
    fs = sz.origin.compose(f, s)
    assert fs is not None
    return sz.arrow_name(ekey, fs)


# ---------------------------------------------------------------------------
# inner expansions (one object, total pseudo product)


@dataclass
class InnerExpansion:
    """All arrows over the endomorphisms of one object, closed under ⋆."""

    sz: SzCategory
    obj: str
    elements: tuple[str, ...]
    table: dict[tuple[str, str], str]
    identity: str | None


def inner_expansion(sz: SzCategory, obj: str) -> InnerExpansion:
    """Restrict an expansion to one object; ⋆ becomes a total operation.

    The pointed variants contain ({1_X}, 1_X) and form inverse monoids; the
    full variants are inverse semigroups without identity in general.
    """
    elements = tuple(
        name
        for name, (_, s) in sz.arrows.items()
        if sz.origin.src(s) == obj and sz.origin.tgt(s) == obj
    )
    table = {
        (a, b): pseudo_product(sz, a, b) for a in elements for b in elements
    }
    identity = None
    for u in elements:
        if all(table[(u, v)] == v and table[(v, u)] == v for v in elements):
            assert identity is None, "two identities in one expansion"
            identity = u
    return InnerExpansion(sz, obj, elements, table, identity)


def validate_inverse_semigroup(
    elements: Iterable[str], table: dict[tuple[str, str], str]
) -> ValidationReport:
    """Totality, associativity, commuting idempotents, unique inverses."""
    report = ValidationReport()
    elems = tuple(elements)
    eset = set(elems)
    for a in elems:
        for b in elems:
            if table.get((a, b)) not in eset:
                report.add("semigroup-total", (a, b), "product missing or escapes the set")
    if report.violations:
        return report
    for a in elems:
        for b in elems:
            for c in elems:
                if table[(table[(a, b)], c)] != table[(a, table[(b, c)])]:
                    report.add("semigroup-associative", (a, b, c), "products disagree")
    idem = [a for a in elems if table[(a, a)] == a]
    for e in idem:
        for f in idem:
            if table[(e, f)] != table[(f, e)]:
                report.add("idempotents-commute", (e, f), "ef differs from fe")
    for a in elems:
        inverses = [
            t
            for t in elems
            if table[(table[(a, t)], a)] == a and table[(table[(t, a)], t)] == t
        ]
        if len(inverses) != 1:
            report.add(
                "unique-inverse", (a,), f"{len(inverses)} generalized inverses"
            )
    return report


# ---------------------------------------------------------------------------
# functoriality and the projection


def expansion_functor(szc: SzCategory, szd: SzCategory, f: Functor) -> Functor:
    """Lift a functor of the underlying categories to the expansions:
    (A, s) ↦ (f(A), f(s)).  Both expansions must be the same variant."""
    assert szc.variant == szd.variant, "variants differ"
    assert f.source is szc.origin.cat or f.source == szc.origin.cat
    assert f.target is szd.origin.cat or f.target == szd.origin.cat
    obj_map: dict[str, str] = {}
    for key, elt in szc.carrier.elements.items():
        image = subset_name({f.morphisms[m] for m in elt.members})
        assert image in szd.carrier.elements, (key, image, "image subset missing")
        obj_map[key] = image
    mor_map = {
        name: szd.arrow_name(obj_map[key], f.morphisms[s])
        for name, (key, s) in szc.arrows.items()
    }
    return Functor(szc.ic.cat, szd.ic.cat, obj_map, mor_map)


def projection(sz: SzCategory) -> Functor:
    """The surjective map (A, s) ↦ s back onto the underlying category.

    A genuine functor for the non-strict variants.  For the strict variants
    it preserves composition but sends the identity of A to the idempotent
    iε(A), which need not be an identity morphism.
    """
    return Functor(
        sz.ic.cat,
        sz.origin.cat,
        {key: elt.obj for key, elt in sz.carrier.elements.items()},
        {name: s for name, (_, s) in sz.arrows.items()},
    )


# ---------------------------------------------------------------------------
# the classical expansion of a group


def classical_group_expansion(group: InverseCategory) -> tuple[tuple[str, ...], dict[tuple[str, str], str]]:
    """The prefix expansion of a finite group, enumerated directly.

    Elements are pairs (A, g), named ``({..}|g)``, with A a subset of the
    group containing both the identity and g; multiplication is
    (A, g)(B, h) = (A ∪ gB, gh).  Returns (elements, multiplication table).
    """
    assert len(group.objects) == 1, "expects a one-object category"
    unit = group.identity_of(group.objects[0])
    for s in group.morphisms:
        assert group.dom_idem(s) == unit == group.ran_idem(s), "expects a group"
    import itertools

    members = sorted(group.morphisms)
    elements: list[tuple[frozenset[str], str]] = []
    for g in group.morphisms:
        required = {unit, g}
        optional = [m for m in members if m not in required]
        for r in range(len(optional) + 1):
            for extra in itertools.combinations(optional, r):
                elements.append((frozenset(required) | frozenset(extra), g))
    names = {
        (aset, g): f"({subset_name(aset)}|{g})" for aset, g in elements
    }
    table: dict[tuple[str, str], str] = {}
    for aset, g in elements:
        for bset, h in elements:
            gb = {group.compose(g, m) for m in bset}
            assert None not in gb
            gh = group.compose(g, h)
            assert gh is not None
            table[(names[(aset, g)], names[(bset, h)])] = names[
                (aset | frozenset(gb), gh)  # type: ignore[arg-type]
            ]
    ordered = tuple(sorted(names.values()))
    return ordered, table
