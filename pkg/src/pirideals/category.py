"""The category of ideals, its inclusion subcategory, and the divisibility preorder.

Composition is written in diagrammatic order throughout: ``compose(f, g)`` is
"``f`` then ``g``" and goes from ``dom f`` to ``cod g``.

A morphism ``<a> -> <b>`` is stored by the image of the generator ``a``. Over
``Z_n`` an image ``y`` defines a function only when every annihilator of ``a``
also kills ``y``; this is enforced at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Callable, Iterable, Sequence

from pirideals.errors import (
    CompositionError,
    DomainError,
    IllDefinedMorphismError,
    UnsupportedEnumerationError,
)
from pirideals.ideals import Ideal, ideal_leq, ideal_subset
from pirideals.report import CheckReport
from pirideals.rings import ModularRing, RingElement, divides, exact_quotient, multiples


def _annihilator_violation(a: RingElement, y: RingElement) -> RingElement | None:
    """Least ``r`` with ``r a = 0`` but ``r y != 0``, if any."""
    spec = a.spec
    if isinstance(spec, ModularRing):
        n = spec.n
        # ann(a) is generated by n / gcd(a, n)
        t = n // gcd(a.value, n)
        if t * y.value % n == 0:
            return None
        return next(r for r in spec.elements() if (r * a).is_zero() and not (r * y).is_zero())
    if a.is_zero() and not y.is_zero():
        return spec.one()
    return None


@dataclass(frozen=True)
class LinearMorphism:
    dom: Ideal
    cod: Ideal
    image: RingElement

    def __post_init__(self):
        if not (self.dom.spec == self.cod.spec == self.image.spec):
            raise DomainError("morphism data from different rings")
        if not divides(self.cod.gen, self.image):
            raise DomainError(f"image {self.image} is not in {self.cod}")
        r = _annihilator_violation(self.dom.gen, self.image)
        if r is not None:
            raise IllDefinedMorphismError(
                f"{self.dom} -> {self.cod} with {self.dom.gen} |-> {self.image} is not well defined: "
                f"{r} * {self.dom.gen} = 0 but {r} * {self.image} = {r * self.image}", r)

    def __call__(self, x: RingElement) -> RingElement:
        if not self.dom.contains(x):
            raise DomainError(f"{x} is not in {self.dom}")
        return exact_quotient(x, self.dom.gen) * self.image

    def __str__(self):
        return f"{self.dom} -> {self.cod}: {self.dom.gen} |-> {self.image}"


def make_morphism(A: Ideal, B: Ideal, c: RingElement) -> LinearMorphism:
    """The map ``ra |-> rcb``."""
    return LinearMorphism(A, B, c * B.gen)


def identity(A: Ideal) -> LinearMorphism:
    return LinearMorphism(A, A, A.gen)


def inclusion(A: Ideal, B: Ideal) -> LinearMorphism:
    """``j(A, B)``, defined when ``A ⊆ B``."""
    if not ideal_subset(A, B):
        raise DomainError(f"{A} is not contained in {B}")
    return LinearMorphism(A, B, A.gen)


def is_inclusion(f: LinearMorphism) -> bool:
    return f.image == f.dom.gen and ideal_subset(f.dom, f.cod)


def hom_set(A: Ideal, B: Ideal) -> list[LinearMorphism]:
    """Every morphism ``A -> B``, one per admissible generator image. ``Z_n`` only."""
    if not isinstance(A.spec, ModularRing) or A.spec != B.spec:
        raise UnsupportedEnumerationError(f"hom-sets are enumerable over Z_n only, got {A.spec}")
    return [LinearMorphism(A, B, y) for y in multiples(B.gen)
            if _annihilator_violation(A.gen, y) is None]


def compose(f: LinearMorphism, g: LinearMorphism) -> LinearMorphism:
    """``fg``: first ``f``, then ``g``."""
    if f.cod != g.dom:
        raise CompositionError(f"cannot compose {f} with {g}")
    r = exact_quotient(f.image, g.dom.gen)
    return LinearMorphism(f.dom, g.cod, r * g.image)


def is_injective(f: LinearMorphism) -> bool:
    """Element-level injectivity of ``ra |-> r * image``."""
    if isinstance(f.dom.spec, ModularRing):
        elems = multiples(f.dom.gen)
        return len({f(x) for x in elems}) == len(elems)
    # integral domains: the kernel is trivial unless the image is zero
    return f.dom.gen.is_zero() or not f.image.is_zero()


def monomorphism_counterexample(f: LinearMorphism, probes: Iterable[LinearMorphism]):
    """Distinct probes ``h != k`` into ``dom f`` with ``hf = kf``, or ``None``."""
    seen: dict = {}
    for h in probes:
        if h.cod != f.dom:
            continue
        key = (h.dom, compose(h, f))
        k = seen.setdefault(key, h)
        if k != h:
            return k, h
    return None


def is_monomorphism(f: LinearMorphism, probes: Iterable[LinearMorphism]) -> bool:
    return monomorphism_counterexample(f, probes) is None


def probes_into(A: Ideal, universe: Sequence[Ideal]) -> list[LinearMorphism]:
    return [h for D in universe for h in hom_set(D, A)]


def _show(*ms):
    return [str(m) for m in ms]


def check_subobject_axioms(universe: Sequence[Ideal],
                           inclusion_fn: Callable[[Ideal, Ideal], LinearMorphism] = inclusion
                           ) -> CheckReport:
    """Check that the inclusions form a subcategory with subobjects.

    ``inclusion_fn`` is a seam for mutation tests; it defaults to :func:`inclusion`.
    """
    universe = list(universe)
    name = f"ideals of {universe[0].spec}" if universe else "empty"
    sub = [(A, B) for A, B in product(universe, universe) if ideal_subset(A, B)]
    incl = {(A, B): inclusion_fn(A, B) for A, B in sub}

    def first(items, pred):
        return next((t for t in items if not pred(t)), None)

    def rep(check, bad, render):
        return CheckReport(check, name, bad is None, None if bad is None else render(bad))

    triples = list(product(universe, universe, universe))
    preorder = [
        rep("reflexive", first(universe, lambda A: ideal_subset(A, A)), lambda A: {"ideal": str(A)}),
        rep("antisymmetric", first(
            product(universe, universe),
            lambda AB: AB[0] == AB[1] or not (ideal_subset(*AB) and ideal_subset(AB[1], AB[0]))),
            lambda AB: {"ideals": [str(X) for X in AB]}),
        rep("transitive", first(
            triples, lambda t: not (ideal_subset(t[0], t[1]) and ideal_subset(t[1], t[2]))
            or ideal_subset(t[0], t[2])), lambda t: {"ideals": [str(X) for X in t]}),
        rep("well_typed_inclusions", first(
            sub, lambda AB: incl[AB].dom == AB[0] and incl[AB].cod == AB[1]),
            lambda AB: {"ideals": [str(X) for X in AB]}),
        rep("identities_are_inclusions", first(universe, lambda A: incl[A, A] == identity(A)),
            lambda A: {"ideal": str(A)}),
        rep("closed_under_composition", first(
            [t for t in triples if (t[0], t[1]) in incl and (t[1], t[2]) in incl],
            lambda t: compose(incl[t[0], t[1]], incl[t[1], t[2]]) == incl[t[0], t[2]]),
            lambda t: {"ideals": [str(X) for X in t]}),
    ]
    strict = CheckReport.aggregate("strict_preorder", name, preorder)

    probes = {A: probes_into(A, universe) for A in universe}
    mono_bad = None
    for A, B in sub:
        j = incl[A, B]
        pair = monomorphism_counterexample(j, probes[A])
        injective = is_injective(j)
        if pair is not None or not injective:
            mono_bad = {"morphism": str(j), "injective": injective,
                        "collapsed_probes": None if pair is None else _show(*pair)}
            break
    mono = CheckReport("inclusions_are_monomorphisms", name, mono_bad is None, mono_bad)

    fact_bad = None
    for (A, D), (B, D2) in product(sub, sub):
        if D != D2 or fact_bad:
            continue
        for h in hom_set(A, B):
            if compose(h, incl[B, D]) == incl[A, D] and incl.get((A, B)) != h:
                fact_bad = {"h": str(h), "f": str(incl[A, D]), "g": str(incl[B, D])}
                break
    fact = CheckReport("factorization", name, fact_bad is None, fact_bad)
    return CheckReport.aggregate("subobject_axioms", name, [strict, mono, fact],
                                 {"inclusions": len(sub)})


def check_category_laws(universe: Sequence[Ideal]) -> CheckReport:
    """Associativity and unit laws over every enumerated hom-set."""
    universe = list(universe)
    name = f"ideals of {universe[0].spec}"
    homs = {(A, B): hom_set(A, B) for A, B in product(universe, universe)}
    unit_bad = next((str(f) for fs in homs.values() for f in fs
                     if compose(identity(f.dom), f) != f or compose(f, identity(f.cod)) != f), None)
    assoc_bad = None
    checked = 0
    for A, B, C, D in product(universe, repeat=4):
        for f, g in product(homs[A, B], homs[B, C]):
            fg = compose(f, g)
            for h in homs[C, D]:
                checked += 1
                if compose(fg, h) != compose(f, compose(g, h)):
                    assoc_bad = _show(f, g, h)
                    break
            if assoc_bad:
                break
        if assoc_bad:
            break
    return CheckReport.aggregate("category_laws", name, [
        CheckReport("unit_laws", name, unit_bad is None, None if unit_bad is None else {"f": unit_bad}),
        CheckReport("associativity", name, assoc_bad is None,
                    None if assoc_bad is None else {"f_g_h": assoc_bad}),
    ], {"composable_triples": checked})


# -- hom-set oracle on raw residues ----------------------------------------------

def brute_force_homs(n: int, a: int, b: int) -> list[int]:
    """Generator images of all additive, R-homogeneous functions ``<a> -> <b>`` in ``Z_n``.

    Works on plain residues. Each candidate value ``y`` of ``f(a)`` is extended by
    homogeneity to a relation on ``<a>``; it is kept when that relation is a
    function that is additive and homogeneous on every pair.
    """
    dom = sorted({r * a % n for r in range(n)})
    cod = sorted({r * b % n for r in range(n)})
    images = []
    for y in cod:
        f: dict[int, int] = {}
        ok = True
        for r in range(n):
            x, v = r * a % n, r * y % n
            if f.setdefault(x, v) != v:
                ok = False
                break
        if not ok:
            continue
        ok = all(f[(x1 + x2) % n] == (f[x1] + f[x2]) % n for x1 in dom for x2 in dom) and \
            all(f[s * x % n] == s * f[x] % n for s in range(n) for x in dom)
        if ok:
            images.append(y)
    return images


def check_hom_enumeration(n: int) -> CheckReport:
    """``hom_set`` against :func:`brute_force_homs` for every pair of ideals of ``Z_n``."""
    from pirideals.ideals import ideal_universe

    universe = ideal_universe(ModularRing(n))
    name = f"ideals of ModularRing({n})"
    bad = None
    total = 0
    for A, B in product(universe, universe):
        enumerated = sorted(f.image.value for f in hom_set(A, B))
        oracle = brute_force_homs(n, A.gen.value, B.gen.value)
        total += len(enumerated)
        if enumerated != oracle:
            bad = {"dom": str(A), "cod": str(B), "hom_set": enumerated, "oracle": oracle}
            break
    return CheckReport("hom_set_enumeration", name, bad is None, bad, {"morphisms": total})


# -- the divisibility preorder and the contravariant functor -------------------------

@dataclass(frozen=True)
class PreorderArrow:
    """The unique arrow ``A -> B`` of the preorder category, present iff ``A <= B``."""

    dom: Ideal
    cod: Ideal

    def __post_init__(self):
        if not ideal_leq(self.dom, self.cod):
            raise DomainError(f"no arrow {self.dom} -> {self.cod}: {self.dom.gen} does not divide {self.cod.gen}")

    def __str__(self):
        return f"f({self.dom}, {self.cod})"


def preorder_hom(A: Ideal, B: Ideal) -> list[PreorderArrow]:
    return [PreorderArrow(A, B)] if ideal_leq(A, B) else []


def arrow_identity(A: Ideal) -> PreorderArrow:
    return PreorderArrow(A, A)


def compose_arrows(f: PreorderArrow, g: PreorderArrow) -> PreorderArrow:
    if f.cod != g.dom:
        raise CompositionError(f"cannot compose {f} with {g}")
    return PreorderArrow(f.dom, g.cod)


def functor_object(A: Ideal) -> Ideal:
    return A


def functor_F(arrow: PreorderArrow) -> LinearMorphism:
    """``F(f(A, B)) = j(B, A)``."""
    return inclusion(arrow.cod, arrow.dom)


def verify_functor_laws(universe: Sequence[Ideal]) -> CheckReport:
    """Identity preservation and reversal of composition, over every composable pair."""
    universe = list(universe)
    name = f"ideals of {universe[0].spec}" if universe else "empty"
    arrows = [PreorderArrow(A, B) for A, B in product(universe, universe) if ideal_leq(A, B)]

    id_bad = next((str(A) for A in universe
                   if functor_F(arrow_identity(A)) != identity(functor_object(A))), None)
    pairs = [(f, g) for f, g in product(arrows, arrows) if f.cod == g.dom]
    contra_bad = next((_show(f, g) for f, g in pairs
                       if functor_F(compose_arrows(f, g)) != compose(functor_F(g), functor_F(f))), None)
    images = {}
    inj_bad = None
    for f in arrows:
        prev = images.setdefault(functor_F(f), f)
        if prev != f:
            inj_bad = _show(prev, f)
            break
    strict_bad = next(([str(A), str(B)] for A, B in product(universe, universe)
                       if len(preorder_hom(A, B)) != int(ideal_leq(A, B))), None)
    bridge_bad = next(([str(A), str(B)] for A, B in product(universe, universe)
                       if bool(preorder_hom(A, B)) != ideal_subset(B, A)), None)

    def rep(check, bad, key):
        return CheckReport(check, name, bad is None, None if bad is None else {key: bad})

    return CheckReport.aggregate("functor_laws", name, [
        rep("preserves_identities", id_bad, "object"),
        rep("reverses_composition", contra_bad, "arrows"),
        rep("injective_on_arrows", inj_bad, "arrows"),
        rep("strict_preorder_category", strict_bad, "objects"),
        rep("duality_bridge", bridge_bad, "objects"),
    ], {"arrows": len(arrows), "composable_pairs": len(pairs)})


# -- diagrams --------------------------------------------------------------------

def _dot(title: str, universe: Sequence[Ideal], edges: list[tuple[Ideal, Ideal]], label: str) -> str:
    ids = {A: f"n{i}" for i, A in enumerate(universe)}
    lines = [f'digraph "{title}" {{', "  rankdir=BT;"]
    lines += [f'  {ids[A]} [label="{A}"];' for A in universe]
    lines += [f'  {ids[A]} -> {ids[B]} [label="{label}"];' for A, B in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def preorder_dot(universe: Sequence[Ideal]) -> str:
    """DOT text for the non-identity arrows ``A -> B`` (``A <= B``) of the preorder category."""
    universe = list(universe)
    edges = [(A, B) for A, B in product(universe, universe) if A != B and ideal_leq(A, B)]
    return _dot("C", universe, edges, "f")


def inclusion_dot(universe: Sequence[Ideal]) -> str:
    """DOT text for the non-identity inclusions ``j(A, B)``."""
    universe = list(universe)
    edges = [(A, B) for A, B in product(universe, universe) if A != B and ideal_subset(A, B)]
    return _dot("P", universe, edges, "j")
