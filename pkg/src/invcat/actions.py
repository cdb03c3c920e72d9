"""Actions of inverse categories on posets.

Three presentations of the same phenomenon, with converters between them:

* ``FibredAction``   a moment map plus a partially defined operation θ_s(x),
                     defined exactly when the moment of x sits below the
                     inner source of s (equals it, in strict mode);
* ``SymmetryAction`` a functor view: each object gets a fiber of the poset,
                     each morphism an order isomorphism between ideals;
* ``PartialActionBundle``  the domain bundle D_s together with order
                     isomorphisms θ_s : D_{s°} -> D_s.

Validation never materialises the (much larger) category of partial order
isomorphisms; functor laws are checked directly on the maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import InverseCategory, ValidationReport
from .errors import NotAFunctor, NotGlobal, NotIdeal
from .poset import (
    PartialOrderIso,
    Poset,
    compose_partial_isos,
    identity_iso,
    is_ideal,
    poset_from_function,
)


# ---------------------------------------------------------------------------
# fibred actions


@dataclass(frozen=True)
class MomentMap:
    """Assigns each poset element its object and idempotent of reference."""

    obj: dict[str, str]
    idem: dict[str, str]

    def of(self, x: str) -> tuple[str, str]:
        return (self.obj[x], self.idem[x])


@dataclass
class FibredAction:
    """θ_s(x), defined exactly on the admissible pairs of the moment map.

    ``theta`` maps (morphism, element) to an element.  Admissibility of
    (s, x): the object of x is the source of s and the idempotent of x lies
    below s°s (equals s°s when ``strict``).
    """

    ic: InverseCategory
    poset: Poset
    moment: MomentMap
    theta: dict[tuple[str, str], str]
    strict: bool = False

    def admissible(self, s: str, x: str) -> bool:
        if self.moment.obj[x] != self.ic.src(s):
            return False
        e, d = self.moment.idem[x], self.ic.dom_idem(s)
        return e == d if self.strict else self.ic.leq_idem(e, d)

    def apply(self, s: str, x: str) -> str:
        return self.theta[(s, x)]

    def domain(self, s: str) -> frozenset[str]:
        """D_s = elements whose object is the target of s and whose
        idempotent sits below ss° (the *range* side of θ_s)."""
        t = self.ic.inv(s)
        return frozenset(x for x in self.poset.elements if self.admissible(t, x))


def validate_fibred(action: FibredAction, verbose: bool = False) -> ValidationReport:
    """Check the fibred-action axioms.

    Rules: moment typing and monotonicity, exactness of the domain of θ,
    the unit law θ_{iρ(x)}(x) = x, the moment of an image, monotonicity of
    each θ_s, and the composition law in Kleene form (both sides defined
    together and then equal).  One witness per rule unless ``verbose``.
    """
    full = ValidationReport()
    seen: set[str] = set()

    def add(rule: str, witness: tuple, detail: str) -> None:
        if verbose or rule not in seen:
            full.add(rule, witness, detail)
            seen.add(rule)

    ic, poset, moment = action.ic, action.poset, action.moment
    mor_set = set(ic.morphisms)
    elt_set = set(poset.elements)

    for x in poset.elements:
        if x not in moment.obj or x not in moment.idem:
            add("moment-total", (x,), "element has no moment")
            continue
        e = moment.idem[x]
        if e not in mor_set or not ic.is_idempotent(e) or ic.src(e) != moment.obj[x]:
            add("moment-typing", (x,), "moment is not an idempotent at the element's object")
    ok_moment = not full.violations

    if ok_moment:
        for a, b in sorted(poset.relation):
            if a != b and not ic.leq_idem(moment.idem[a], moment.idem[b]):
                add("moment-monotone", (a, b), "moment does not preserve the order")

        admissible = {
            (s, x)
            for s in ic.morphisms
            for x in poset.elements
            if action.admissible(s, x)
        }
        for key in sorted(action.theta):
            if key not in admissible:
                add("theta-domain", key, "θ defined on a non-admissible pair")
        for key in sorted(admissible):
            if key not in action.theta:
                add("theta-domain", key, "θ missing on an admissible pair")
        for key in sorted(action.theta):
            if action.theta[key] not in elt_set:
                add("theta-image", key, "θ image is not a poset element")

        def value(s: str, x: str) -> str | None:
            """θ_s(x) when admissible and present, else None."""
            if (s, x) in admissible:
                return action.theta.get((s, x))
            return None

        for x in poset.elements:
            got = value(moment.idem[x], x)
            if got != x:
                add("axiom-i", (x,), f"θ_e(x) = {got!r} differs from x")

        for (s, x) in sorted(admissible):
            y = action.theta.get((s, x))
            if y is None or y not in elt_set:
                continue
            if moment.obj[y] != ic.tgt(s):
                add("axiom-ii", (s, x), "image lies in the wrong fiber")
                continue
            ran = ic.ran_idem(s)
            if not ic.leq_idem(moment.idem[y], ran):
                add("axiom-ii", (s, x), "image idempotent does not sit below ss°")
            elif moment.idem[x] == ic.dom_idem(s) and moment.idem[y] != ran:
                add("axiom-ii", (s, x), "image idempotent must equal ss° when x sits at s°s")

        for s in ic.morphisms:
            dom = sorted(x for x in poset.elements if (s, x) in admissible)
            for a in dom:
                for b in dom:
                    if a != b and poset.leq(a, b):
                        ya, yb = action.theta.get((s, a)), action.theta.get((s, b))
                        if ya in elt_set and yb in elt_set and not poset.leq(ya, yb):
                            add("axiom-ii-monotone", (s, a, b), "θ_s does not preserve the order")

        for t in ic.morphisms:
            for s in ic.morphisms:
                st = ic.compose(s, t)
                if st is None:
                    continue
                for x in poset.elements:
                    if (t, x) not in admissible:
                        continue
                    y = action.theta.get((t, x))
                    lhs = value(s, y) if y is not None else None
                    rhs = value(st, x)
                    defined_lhs = y is not None and (s, y) in admissible
                    defined_rhs = (st, x) in admissible
                    if defined_lhs != defined_rhs or (defined_lhs and lhs != rhs):
                        add(
                            "axiom-iii",
                            (s, t, x),
                            f"θ_s∘θ_t gives {lhs!r} (defined={defined_lhs}) but "
                            f"θ_st gives {rhs!r} (defined={defined_rhs})",
                        )
    return full


# ---------------------------------------------------------------------------
# canonical examples of fibred actions


def natural_order_poset(ic: InverseCategory) -> Poset:
    """All morphisms under the natural partial order."""
    from .core import natural_leq

    def leq(a: str, b: str) -> bool:
        return ic.cat.parallel(a, b) and natural_leq(ic, a, b)

    return poset_from_function(ic.morphisms, leq)


def canonical_self_action(ic: InverseCategory) -> FibredAction:
    """The category acting on its own morphisms by left composition.

    The moment of x is (target of x, xx°); θ_s(x) = sx.
    """
    poset = natural_order_poset(ic)
    moment = MomentMap(
        {x: ic.tgt(x) for x in ic.morphisms},
        {x: ic.ran_idem(x) for x in ic.morphisms},
    )
    action = FibredAction(ic, poset, moment, {})
    theta = {
        (s, x): ic.compose(s, x)
        for s in ic.morphisms
        for x in ic.morphisms
        if action.admissible(s, x)
    }
    assert all(v is not None for v in theta.values())
    action.theta = theta
    return action


def conjugation_action(ic: InverseCategory) -> FibredAction:
    """The category acting on its idempotents by e ↦ ses°."""
    idem = ic.idempotents()
    poset = poset_from_function(idem, ic.leq_idem)
    moment = MomentMap({e: ic.src(e) for e in idem}, {e: e for e in idem})
    action = FibredAction(ic, poset, moment, {})
    theta: dict[tuple[str, str], str] = {}
    for s in ic.morphisms:
        for e in idem:
            if action.admissible(s, e):
                se = ic.compose(s, e)
                assert se is not None
                out = ic.compose(se, ic.inv(s))
                assert out is not None
                theta[(s, e)] = out
    action.theta = theta
    return action


# ---------------------------------------------------------------------------
# symmetry actions (the functor view)


@dataclass
class SymmetryAction:
    """Functor into partial order isomorphisms of a poset.

    ``fibers`` maps each object to its ideal of the poset; ``isos`` maps each
    morphism s to an order isomorphism whose domain is the domain bundle
    element D_{s°} and whose range is D_s.
    """

    ic: InverseCategory
    poset: Poset
    fibers: dict[str, frozenset[str]]
    isos: dict[str, PartialOrderIso]


def fibred_to_symmetry(action: FibredAction) -> SymmetryAction:
    """Package a fibred action as a functor: fibers by object, θ_s as isos."""
    ic, poset = action.ic, action.poset
    fibers = {
        X: frozenset(x for x in poset.elements if action.moment.obj[x] == X)
        for X in ic.objects
    }
    isos = {}
    for s in ic.morphisms:
        pairs = tuple(
            sorted((x, y) for (m, x), y in action.theta.items() if m == s)
        )
        isos[s] = PartialOrderIso(pairs)
    return SymmetryAction(ic, poset, fibers, isos)


def validate_symmetry(sym: SymmetryAction, verbose: bool = False) -> ValidationReport:
    """Check the functor laws directly, without building the target category.

    Rules: fibers are ideals partitioning the poset; each iso is an order
    isomorphism between ideals inside the right fibers; identities act as
    identities on their fiber; composition and inverses are preserved.
    """
    full = ValidationReport()
    seen: set[str] = set()

    def add(rule: str, witness: tuple, detail: str) -> None:
        if verbose or rule not in seen:
            full.add(rule, witness, detail)
            seen.add(rule)

    ic, poset = sym.ic, sym.poset
    covered: list[str] = []
    for X in ic.objects:
        fib = sym.fibers.get(X)
        if fib is None:
            add("fiber-total", (X,), "object has no fiber")
            continue
        if not is_ideal(poset, fib):
            add("fiber-ideal", (X,), "fiber is not an ideal of the poset")
        covered.extend(fib)
    if sorted(covered) != sorted(poset.elements):
        add("fiber-partition", (), "fibers do not partition the poset")

    for s in ic.morphisms:
        iso = sym.isos.get(s)
        if iso is None:
            add("iso-total", (s,), "morphism has no order isomorphism")
            continue
        try:
            PartialOrderIso.make(poset, iso.pairs)
        except AssertionError as exc:
            add("iso-order", (s,), f"not an order isomorphism: {exc.args[0]!r}")
            continue
        if not (iso.dom <= sym.fibers.get(ic.src(s), frozenset())):
            add("iso-typing", (s,), "domain leaves the source fiber")
        if not (iso.ran <= sym.fibers.get(ic.tgt(s), frozenset())):
            add("iso-typing", (s,), "range leaves the target fiber")
        if not is_ideal(poset, iso.dom) or not is_ideal(poset, iso.ran):
            add("iso-ideal", (s,), "domain or range is not an ideal")
    if full.violations:
        return full

    for X in ic.objects:
        if sym.isos[ic.identity_of(X)] != identity_iso(sym.fibers[X]):
            add("functor-identity", (X,), "identity does not act as the identity of its fiber")
    for (s, t), st in ic.cat.table.items():
        if compose_partial_isos(sym.isos[s], sym.isos[t]) != sym.isos[st]:
            add("functor-composition", (s, t), "Θ(s)∘Θ(t) differs from Θ(st)")
    for s in ic.morphisms:
        if sym.isos[ic.inv(s)] != sym.isos[s].inverse():
            add("functor-inverse", (s,), "Θ(s°) differs from Θ(s)⁻¹")
    return full


# ---------------------------------------------------------------------------
# partial action bundles


@dataclass
class PartialActionBundle:
    """Domains D_s (ideals of the poset) plus order isos θ_s : D_{s°} -> D_s."""

    ic: InverseCategory
    poset: Poset
    domains: dict[str, frozenset[str]]
    maps: dict[str, PartialOrderIso]
    strict: bool = False

    def is_global(self) -> bool:
        return all(
            self.domains[s] == self.domains[self.ic.ran_idem(s)]
            for s in self.ic.morphisms
        )


def symmetry_to_partial(sym: SymmetryAction) -> PartialActionBundle:
    """Read the domain bundle off a symmetry action: D_s is the range of Θ(s).

    Raises NOT_A_FUNCTOR when the symmetry action fails its functor laws.
    """
    report = validate_symmetry(sym)
    if not report.ok:
        raise NotAFunctor(
            f"symmetry action violates {', '.join(report.rules())}",
            rules=report.rules(),
            first=str(report.violations[0]),
        )
    domains = {s: sym.isos[s].ran for s in sym.ic.morphisms}
    maps = dict(sym.isos)
    return PartialActionBundle(sym.ic, sym.poset, domains, maps)


def validate_partial(bundle: PartialActionBundle, verbose: bool = False) -> ValidationReport:
    """Check the axioms of a partial action bundle.

    Non-strict rules: each θ_s is an order isomorphism between the ideals
    D_{s°} and D_s, with θ_{s°} its inverse; the identity domains cover the
    poset; θ_e is the identity of D_e; s ≤ t forces D_{s°} ⊆ D_{t°} with
    θ_t restricting to θ_s; D_s ⊆ D_{ss°}; and for st defined,
    θ_s(D_{s°} ∩ D_t) = D_s ∩ D_{st} with θ_s∘θ_t = θ_{st} where composable.

    Strict mode keeps the same shape but weakens four rules: domains need
    not be ideals, the cover runs over all idempotent domains, comparable
    morphisms must merely agree on the common domain, and only the forward
    inclusion θ_s(D_{s°} ∩ D_t) ⊆ D_s ∩ D_{st} is required.
    """
    full = ValidationReport()
    seen: set[str] = set()

    def add(rule: str, witness: tuple, detail: str) -> None:
        if verbose or rule not in seen:
            full.add(rule, witness, detail)
            seen.add(rule)

    ic, poset = bundle.ic, bundle.poset
    from .core import natural_leq

    for s in ic.morphisms:
        if s not in bundle.domains or s not in bundle.maps:
            add("bundle-total", (s,), "morphism has no domain or map")
    if full.violations:
        return full

    inv = ic.inv
    for s in ic.morphisms:
        iso = bundle.maps[s]
        try:
            PartialOrderIso.make(poset, iso.pairs)
        except AssertionError as exc:
            add("axiom-i", (s,), f"θ_s is not an order isomorphism: {exc.args[0]!r}")
            continue
        if iso.dom != bundle.domains[inv(s)] or iso.ran != bundle.domains[s]:
            add("axiom-i", (s,), "θ_s is not a map D_{s°} -> D_s")
        if not bundle.strict and not is_ideal(poset, bundle.domains[s]):
            add("axiom-i", (s,), "D_s is not an ideal")
        if bundle.maps[inv(s)] != iso.inverse():
            add("axiom-i", (s,), "θ_{s°} is not the inverse of θ_s")

    if bundle.strict:
        cover = frozenset().union(*(bundle.domains[e] for e in ic.idempotents()))
    else:
        cover = frozenset().union(
            *(bundle.domains[ic.identity_of(X)] for X in ic.objects)
        )
    if cover != frozenset(poset.elements):
        add("axiom-ii", (), "identity domains do not cover the poset")

    for e in ic.idempotents():
        if bundle.maps[e] != identity_iso(bundle.domains[e]):
            add("axiom-iii", (e,), "θ_e is not the identity of D_e")

    for s in ic.morphisms:
        for t in ic.morphisms:
            if s == t or not ic.cat.parallel(s, t) or not natural_leq(ic, s, t):
                continue
            ds, dt = bundle.domains[inv(s)], bundle.domains[inv(t)]
            if bundle.strict:
                common = ds & dt
            else:
                if not ds <= dt:
                    add("axiom-iv", (s, t), "s ≤ t but D_{s°} is not inside D_{t°}")
                common = ds & dt
            lookup_t = dict(bundle.maps[t].pairs)
            lookup_s = dict(bundle.maps[s].pairs)
            for x in sorted(common):
                if lookup_t.get(x) != lookup_s.get(x):
                    add("axiom-iv", (s, t, x), "θ_t does not restrict to θ_s")

    for s in ic.morphisms:
        if not bundle.domains[s] <= bundle.domains[ic.ran_idem(s)]:
            add("axiom-v", (s,), "D_s leaves D_{ss°}")

    for (s, t), st in ic.cat.table.items():
        lookup_s = dict(bundle.maps[s].pairs)
        lookup_t = dict(bundle.maps[t].pairs)
        lookup_st = dict(bundle.maps[st].pairs)
        lhs = frozenset(
            lookup_s[x] for x in bundle.domains[inv(s)] & bundle.domains[t]
        )
        rhs = bundle.domains[s] & bundle.domains[st]
        if bundle.strict:
            if not lhs <= rhs:
                add("axiom-vi", (s, t), "θ_s(D_{s°} ∩ D_t) leaves D_s ∩ D_{st}")
        elif lhs != rhs:
            add("axiom-vi", (s, t), f"θ_s(D_{{s°}} ∩ D_t) = {sorted(lhs)} differs from D_s ∩ D_{{st}} = {sorted(rhs)}")
        back = dict(bundle.maps[inv(t)].pairs)
        for y in sorted(bundle.domains[t] & bundle.domains[inv(s)]):
            x = back.get(y)
            if x is None or lookup_t.get(x) != y:
                continue  # broken iso, reported under axiom-i
            via = lookup_s.get(y)
            direct = lookup_st.get(x)
            if bundle.strict:
                if via is not None and direct is not None and via != direct:
                    add("axiom-vi", (s, t, x), "θ_s∘θ_t and θ_{st} disagree where both are defined")
            elif via != direct or via is None:
                add("axiom-vi", (s, t, x), f"θ_s∘θ_t gives {via!r} but θ_{{st}} gives {direct!r}")
    return full


def restrict_to_ideal(bundle: PartialActionBundle, subset: Iterable[str]) -> PartialActionBundle:
    """Cut a *global* bundle down to an ideal Q of its poset.

    The new domains are D'_s = (Q ∩ D_s) ∩ θ_s(Q ∩ D_{s°}); the maps are the
    corresponding restrictions.  The result is generally partial, no longer
    global.  Raises NOT_GLOBAL on a non-global input and NOT_IDEAL when Q is
    not an ideal.
    """
    q = frozenset(subset)
    if not bundle.is_global():
        witness = next(
            s
            for s in bundle.ic.morphisms
            if bundle.domains[s] != bundle.domains[bundle.ic.ran_idem(s)]
        )
        raise NotGlobal(
            f"domain of {witness!r} differs from its idempotent's domain",
            morphism=witness,
        )
    unknown = q - set(bundle.poset.elements)
    if unknown:
        raise NotIdeal(
            f"subset contains non-elements {sorted(unknown)}", extraneous=sorted(unknown)
        )
    if not is_ideal(bundle.poset, q):
        raise NotIdeal("subset is not downward closed", subset=sorted(q))
    ic, poset = bundle.ic, bundle.poset
    sub = poset_from_function(
        tuple(x for x in poset.elements if x in q), poset.leq
    )
    domains: dict[str, frozenset[str]] = {}
    maps: dict[str, PartialOrderIso] = {}
    for s in ic.morphisms:
        lookup = dict(bundle.maps[s].pairs)
        pairs = tuple(
            sorted(
                (x, lookup[x])
                for x in bundle.domains[ic.inv(s)] & q
                if x in lookup and lookup[x] in q
            )
        )
        maps[s] = PartialOrderIso(pairs)
        domains[s] = maps[s].ran
    return PartialActionBundle(ic, sub, domains, maps)
