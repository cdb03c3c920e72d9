"""Cauchy completion, restriction groupoid, enlargements, equivalences.

The completion splits every idempotent: objects are pairs (X, e) with e an
idempotent at X, morphisms are triples (e, s, f) with se = s = fs, composed
by multiplying the middle components.  The original category embeds fully
via X ↦ (X, 1_X).

The restriction groupoid keeps the same objects but only the invertible
triples (s°s, s, ss°) — exactly one per morphism of the original category.

``enlargement_check`` tests the three axioms making C a "spread-out" copy of
itself inside D; an enlargement induces an equivalence of the two
completions, which ``equivalence_check`` verifies by finite search.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import idempotent_classes  # re-exported: classes live with the groupoid
from .core import (
    FiniteCategory,
    Functor,
    InverseCategory,
    find_inverse_structure,
    isomorphic_objects,
    validate_functor,
)
from .errors import NotAFunctor, NotASubcategory

__all__ = [
    "CauchyCompletion",
    "cauchy_completion",
    "restriction_groupoid",
    "idempotent_classes",
    "EnlargementReport",
    "enlargement_check",
    "EquivalenceReport",
    "equivalence_check",
    "completion_inclusion",
]


def _object_name(x: str, e: str) -> str:
    return f"({x}|{e})"


def _morphism_name(e: str, s: str, f: str) -> str:
    return f"({e}|{s}|{f})"


@dataclass
class CauchyCompletion:
    """The completed category plus the full embedding of the original."""

    ic: InverseCategory
    embedding: Functor
    objects_data: dict[str, tuple[str, str]]  # name -> (X, e)
    morphisms_data: dict[str, tuple[str, str, str]]  # name -> (e, s, f)


def cauchy_completion(ic: InverseCategory) -> CauchyCompletion:
    """Split the idempotents of an inverse category.

    Objects: pairs (X, e), e idempotent at X.  Morphisms: triples (e, s, f)
    with s·e = s and f·s = s, from (src s, e) to (tgt s, f); composition is
    (f, t, g)(e, s, f) = (e, ts, g) and the identity of (X, e) is (e, e, e).
    """
    cat = ic.cat
    objects_data: dict[str, tuple[str, str]] = {}
    for e in ic.idempotents():
        objects_data[_object_name(ic.src(e), e)] = (ic.src(e), e)

    morphisms_data: dict[str, tuple[str, str, str]] = {}
    typing: dict[str, tuple[str, str]] = {}
    for s in cat.morphisms:
        for e in ic.idempotents_at(cat.src[s]):
            if cat.table.get((s, e)) != s:
                continue
            for f in ic.idempotents_at(cat.tgt[s]):
                if cat.table.get((f, s)) != s:
                    continue
                name = _morphism_name(e, s, f)
                morphisms_data[name] = (e, s, f)
                typing[name] = (
                    _object_name(cat.src[s], e),
                    _object_name(cat.tgt[s], f),
                )

    identities = {
        oname: _morphism_name(e, e, e) for oname, (_, e) in objects_data.items()
    }
    table: dict[tuple[str, str], str] = {}
    for bname, (e, s, f) in morphisms_data.items():
        for aname, (f2, t, g) in morphisms_data.items():
            if f2 != f:
                continue
            ts = cat.table.get((t, s))
            assert ts is not None
            cname = _morphism_name(e, ts, g)
            assert cname in morphisms_data, (aname, bname, "composite escaped")
            table[(aname, bname)] = cname

    completed = find_inverse_structure(
        FiniteCategory.build(tuple(objects_data), typing, identities, table)
    )
    embedding = Functor(
        cat,
        completed.cat,
        {x: _object_name(x, cat.identity[x]) for x in cat.objects},
        {
            s: _morphism_name(cat.identity[cat.src[s]], s, cat.identity[cat.tgt[s]])
            for s in cat.morphisms
        },
    )
    return CauchyCompletion(completed, embedding, objects_data, morphisms_data)


def restriction_groupoid(ic: InverseCategory) -> InverseCategory:
    """The invertible part of the completion, built directly.

    Same objects (X, e); one arrow (s°s, s, ss°) per morphism s of the
    original category, so the morphism counts agree.
    """
    cat = ic.cat
    objects_data = {
        _object_name(ic.src(e), e): (ic.src(e), e) for e in ic.idempotents()
    }
    typing: dict[str, tuple[str, str]] = {}
    names: dict[str, str] = {}
    for s in cat.morphisms:
        d, r = ic.dom_idem(s), ic.ran_idem(s)
        name = _morphism_name(d, s, r)
        names[s] = name
        typing[name] = (_object_name(cat.src[s], d), _object_name(cat.tgt[s], r))
    identities = {
        oname: _morphism_name(e, e, e) for oname, (_, e) in objects_data.items()
    }
    table: dict[tuple[str, str], str] = {}
    for s in cat.morphisms:
        for t in cat.morphisms:
            if ic.ran_idem(s) != ic.dom_idem(t):
                continue
            ts = cat.table.get((t, s))
            assert ts is not None
            table[(names[t], names[s])] = names[ts]
    return find_inverse_structure(
        FiniteCategory.build(tuple(objects_data), typing, identities, table)
    )


# ---------------------------------------------------------------------------
# enlargements


@dataclass
class EnlargementReport:
    """Outcome of the three enlargement axioms, with failure witnesses."""

    axiom1: bool
    axiom2: bool
    axiom3: bool
    witnesses: dict[str, tuple]

    @property
    def overall(self) -> bool:
        return self.axiom1 and self.axiom2 and self.axiom3


def _check_embedding(sub: InverseCategory, sup: InverseCategory, emb: Functor) -> None:
    if emb.source != sub.cat or emb.target != sup.cat:
        raise NotASubcategory(
            "embedding does not connect the two given categories"
        )
    report = validate_functor(emb)
    if not report.ok:
        raise NotASubcategory(
            f"embedding is not a functor: {report.violations[0]}",
            rules=report.rules(),
        )
    if len(set(emb.objects.values())) != len(emb.objects) or len(
        set(emb.morphisms.values())
    ) != len(emb.morphisms):
        raise NotASubcategory("embedding is not injective")


def enlargement_check(
    sub: InverseCategory, sup: InverseCategory, emb: Functor
) -> EnlargementReport:
    """Check the three axioms for ``sub`` (via ``emb``) being enlarged by ``sup``.

    (I)   at every object of the subcategory, its idempotents form an order
          ideal of the ambient idempotents there;
    (II)  every ambient morphism between embedded objects that is fixed by
          embedded idempotents on both sides already lies in the image;
    (III) every ambient idempotent f is reached by some s with s°s embedded
          and ss° = f.

    Raises NOT_A_SUBCATEGORY unless the embedding is an injective functor.
    """
    _check_embedding(sub, sup, emb)
    witnesses: dict[str, tuple] = {}
    obj_image = {emb.objects[x]: x for x in sub.objects}
    mor_image = set(emb.morphisms.values())

    axiom1 = True
    for x in sub.objects:
        local = {emb.morphisms[e] for e in sub.idempotents_at(x)}
        for f in sup.idempotents_at(emb.objects[x]):
            if f in local:
                continue
            if any(sup.leq_idem(f, e2) for e2 in local):
                axiom1 = False
                witnesses.setdefault("axiom1", (x, f))

    axiom2 = True
    for s in sup.morphisms:
        if sup.src(s) not in obj_image or sup.tgt(s) not in obj_image:
            continue
        fixes_src = any(
            sup.compose(s, emb.morphisms[e]) == s
            for e in sub.idempotents_at(obj_image[sup.src(s)])
        )
        fixes_tgt = any(
            sup.compose(emb.morphisms[f], s) == s
            for f in sub.idempotents_at(obj_image[sup.tgt(s)])
        )
        if fixes_src and fixes_tgt and s not in mor_image:
            axiom2 = False
            witnesses.setdefault("axiom2", (s,))

    axiom3 = True
    embedded_idems = {emb.morphisms[e] for e in sub.idempotents()}
    for f in sup.idempotents():
        if not any(
            sup.ran_idem(s) == f and sup.dom_idem(s) in embedded_idems
            for s in sup.morphisms
        ):
            axiom3 = False
            witnesses.setdefault("axiom3", (sup.src(f), f))

    return EnlargementReport(axiom1, axiom2, axiom3, witnesses)


# ---------------------------------------------------------------------------
# equivalence of categories


@dataclass
class EquivalenceReport:
    faithful: bool
    full: bool
    essentially_surjective: bool
    witnesses: dict[str, tuple]

    @property
    def overall(self) -> bool:
        return self.faithful and self.full and self.essentially_surjective


def equivalence_check(functor: Functor) -> EquivalenceReport:
    """Decide by finite search whether a functor is an equivalence.

    Checks injectivity and surjectivity on every hom-set, and that each
    target object is isomorphic to the image of some source object.
    Raises NOT_A_FUNCTOR when the functor laws fail.
    """
    report = validate_functor(functor)
    if not report.ok:
        raise NotAFunctor(
            f"not a functor: {report.violations[0]}", rules=report.rules()
        )
    src, dst = functor.source, functor.target
    witnesses: dict[str, tuple] = {}

    faithful = True
    full = True
    for x in src.objects:
        for y in src.objects:
            hom = src.hom(x, y)
            images = [functor.morphisms[m] for m in hom]
            if len(set(images)) != len(images):
                faithful = False
                witnesses.setdefault("faithful", (x, y))
            target_hom = set(dst.hom(functor.objects[x], functor.objects[y]))
            missing = target_hom - set(images)
            if missing:
                full = False
                witnesses.setdefault("full", (x, y, min(missing)))

    iso = isomorphic_objects(dst)
    hit = {functor.objects[x] for x in src.objects}
    essentially_surjective = True
    for z in dst.objects:
        if not (iso[z] & hit):
            essentially_surjective = False
            witnesses.setdefault("essentially_surjective", (z,))
    return EquivalenceReport(faithful, full, essentially_surjective, witnesses)


def completion_inclusion(
    sub: InverseCategory, sup: InverseCategory, emb: Functor
) -> tuple[CauchyCompletion, CauchyCompletion, Functor]:
    """Complete both categories and lift the embedding between completions:
    (X, e) ↦ (ι(X), ι(e)) and (e, s, f) ↦ (ι(e), ι(s), ι(f))."""
    _check_embedding(sub, sup, emb)
    chat = cauchy_completion(sub)
    dhat = cauchy_completion(sup)
    obj_map = {
        name: _object_name(emb.objects[x], emb.morphisms[e])
        for name, (x, e) in chat.objects_data.items()
    }
    mor_map = {
        name: _morphism_name(emb.morphisms[e], emb.morphisms[s], emb.morphisms[f])
        for name, (e, s, f) in chat.morphisms_data.items()
    }
    for name in obj_map.values():
        assert name in dhat.objects_data
    for name in mor_map.values():
        assert name in dhat.morphisms_data
    return chat, dhat, Functor(chat.ic.cat, dhat.ic.cat, obj_map, mor_map)
