"""The ordered semigroup of ideals of a commutative principal ideal ring.

An ideal is stored by its canonical generator, so ideal equality is generator
equality. The product is ``<a><b> = <ab>`` and the order is ``<a> <= <b>`` iff
``a | b``. Note that this order runs opposite to set inclusion:
``<a> ⊆ <b>`` iff ``<b> <= <a>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Sequence

from pirideals import ordered_semigroup as osg
from pirideals.errors import DomainError, UnsupportedFamilyError
from pirideals.report import CheckReport
from pirideals.rings import (
    ModularRing,
    PolyRing,
    RingElement,
    RingSpec,
    canonical_generator,
    divides,
    divisors,
    is_unit,
    unit_inverse,
)
from pirideals.sampling import DEFAULT_SEED, random_element, rng_for


@dataclass(frozen=True)
class Ideal:
    spec: RingSpec
    gen: RingElement

    def __post_init__(self):
        if not self.spec.commutative:
            raise UnsupportedFamilyError(f"ideals of {self.spec} are not modelled")
        if self.gen.spec != self.spec:
            raise DomainError(f"generator {self.gen!r} is not in {self.spec}")
        if canonical_generator(self.gen) != self.gen:
            raise DomainError(f"{self.gen} is not a canonical generator; use Ideal.of")

    @classmethod
    def of(cls, a: RingElement) -> Ideal:
        """The principal ideal generated by ``a`` (any associate gives the same ideal)."""
        return cls(a.spec, canonical_generator(a))

    @classmethod
    def generated(cls, spec: RingSpec, value) -> Ideal:
        return cls.of(spec.element(value))

    @property
    def label(self) -> str:
        # the zero ideal of Z_n keeps the divisor label n
        if isinstance(self.spec, ModularRing) and self.gen.value == 0:
            return str(self.spec.n)
        return str(self.gen)

    def contains(self, x: RingElement) -> bool:
        return divides(self.gen, x)

    def __mul__(self, other: Ideal) -> Ideal:
        return ideal_mul(self, other)

    def __str__(self):
        return f"<{self.gen}>"

    def __repr__(self):
        return f"Ideal({self.spec}, <{self.gen}>)"

    def to_json(self) -> dict:
        return {"ring": str(self.spec), "generator": self.spec.value_to_json(self.gen.value)}

    @classmethod
    def from_json(cls, payload: dict) -> Ideal:
        from pirideals.rings import spec_from_string

        spec = spec_from_string(payload["ring"])
        return cls.generated(spec, payload["generator"])


def unit_ideal(spec: RingSpec) -> Ideal:
    return Ideal.of(spec.one())


def zero_ideal(spec: RingSpec) -> Ideal:
    return Ideal.of(spec.zero())


def ideal_universe(spec: RingSpec) -> list[Ideal]:
    """Every ideal of a finite commutative ring; for ``Z_n`` one per divisor, in divisor order."""
    if isinstance(spec, ModularRing):
        return [Ideal.generated(spec, d) for d in divisors(spec.n)]
    raise UnsupportedFamilyError(f"cannot enumerate the ideals of {spec}")


def _same(A: Ideal, B: Ideal) -> RingSpec:
    if A.spec != B.spec:
        raise DomainError(f"ideals from different rings: {A.spec} and {B.spec}")
    return A.spec


def ideal_mul(A: Ideal, B: Ideal) -> Ideal:
    _same(A, B)
    return Ideal.of(A.gen * B.gen)


def ideal_leq(A: Ideal, B: Ideal) -> bool:
    _same(A, B)
    return divides(A.gen, B.gen)


def ideal_subset(A: Ideal, B: Ideal) -> bool:
    """Set inclusion ``A ⊆ B``."""
    _same(A, B)
    return divides(B.gen, A.gen)


def ordered_regularity_witness(A: Ideal) -> Ideal:
    X = unit_ideal(A.spec)
    if not ideal_leq(A, A * X * A):
        raise RuntimeError(f"ordered regularity failed for {A!r}: arithmetic is broken")
    return X


def is_ordered_idempotent(A: Ideal) -> bool:
    return ideal_leq(A, A * A)


def von_neumann_regular(a: RingElement) -> RingElement | None:
    """Some ``x`` with ``a = a x a``, or ``None``.

    Exhaustive over ``Z_n``. In the integers and in ``F_p[x]`` the regular elements
    are exactly zero and the units, where ``x = a^-1`` (or ``0``) works.
    """
    spec = a.spec
    if isinstance(spec, ModularRing):
        for x in spec.elements():
            if a * x * a == a:
                return x
        return None
    if not spec.commutative:
        raise UnsupportedFamilyError(f"{spec} is not commutative")
    if a.is_zero():
        return a
    if is_unit(a):
        return unit_inverse(a)
    return None


def semigroup_regular_exact(A: Ideal, universe: Sequence[Ideal]) -> Ideal | None:
    """First ``X`` in ``universe`` with ``A = AXA``, or ``None``.

    Over an infinite ring the universe is only a pool; ``None`` then means "not
    found in the pool", see :func:`regularity_status`.
    """
    if not universe:
        raise DomainError("empty universe")
    for X in universe:
        if A * X * A == A:
            return X
    return None


def regularity_status(A: Ideal, universe: Sequence[Ideal]) -> str:
    """``"regular"``, ``"not regular"`` (exhaustive search), or ``"not found in pool"``."""
    if semigroup_regular_exact(A, universe) is not None:
        return "regular"
    if A.spec.finite and set(ideal_universe(A.spec)) <= set(universe):
        return "not regular"
    return "not found in pool"


def ideal_semigroup(universe: Sequence[Ideal], name: str = "I(R)") -> osg.FiniteOrderedSemigroup:
    """Tabulate product and order over a multiplicatively closed list of ideals."""
    return osg.FiniteOrderedSemigroup.from_operations(
        list(universe), ideal_mul, ideal_leq, [A.label for A in universe], name)


def check_inverse_transversal(universe: Sequence[Ideal], name: str | None = None) -> CheckReport:
    """Check that ``{<1>}`` is an inverse transversal of the tabulated ideal semigroup."""
    universe = list(universe)
    if not universe:
        raise DomainError("empty universe")
    spec = universe[0].spec
    S = ideal_semigroup(universe, name or f"I({spec})")
    one = universe.index(unit_ideal(spec))
    return osg.check_inverse_transversal(S, [one])


# -- ring isomorphisms and the induced map on ideals ---------------------------

def _poly_compose(f: RingElement, g: RingElement) -> RingElement:
    """``f(g)`` by Horner's rule."""
    spec = f.spec
    out = spec.zero()
    for c in reversed(f.value):
        out = out * g + spec.element(c)
    return out


@dataclass(frozen=True)
class RingIso:
    """A ring isomorphism given by element maps in both directions.

    Nothing is trusted: :func:`verify_induced_iso` checks the round trips and
    the homomorphism laws.
    """

    source: RingSpec
    target: RingSpec
    forward: Callable[[RingElement], RingElement]
    backward: Callable[[RingElement], RingElement]
    name: str = "phi"

    @classmethod
    def identity(cls, spec: RingSpec) -> RingIso:
        return cls(spec, spec, lambda a: a, lambda a: a, "identity")

    @classmethod
    def poly_affine(cls, p: int, alpha: int, beta: int) -> RingIso:
        """Substitution ``x -> alpha*x + beta`` on ``F_p[x]``, ``alpha != 0``."""
        spec = PolyRing(p)
        alpha %= p
        if alpha == 0:
            raise DomainError("alpha must be nonzero")
        inv = pow(alpha, -1, p)
        fwd = spec.element((beta, alpha))
        bwd = spec.element((-beta * inv, inv))
        name = f"x -> {spec.format_value(fwd.value)}"
        return cls(spec, spec, lambda f: _poly_compose(f, fwd), lambda f: _poly_compose(f, bwd), name)

    @classmethod
    def poly_square_substitution(cls, p: int) -> RingIso:
        """``x -> x^2`` paired with the identity as a claimed inverse. Not an isomorphism."""
        spec = PolyRing(p)
        sq = spec.element((0, 0, 1))
        return cls(spec, spec, lambda f: _poly_compose(f, sq), lambda f: f, "x -> x^2")


def induced_iso_apply(phi: RingIso, A: Ideal) -> Ideal:
    """``psi(<a>) = <phi(a)>``."""
    if A.spec != phi.source:
        raise DomainError(f"{A!r} is not an ideal of {phi.source}")
    return Ideal.of(phi.forward(A.gen))


def _sample_pairs(spec, rng, count):
    """Element pairs, half of them ``(a, r*a)`` so that the order is exercised."""
    pairs = []
    for i in range(count):
        a = random_element(spec, rng)
        b = random_element(spec, rng)
        if i % 2:
            b = a * b
        pairs.append((a, b))
    return pairs


def _first_failure(items, predicate):
    for item in items:
        if not predicate(item):
            return item
    return None


def verify_induced_iso(phi: RingIso, samples: Sequence[Ideal] | int | None = None,
                       seed: int = DEFAULT_SEED) -> CheckReport:
    """Check that ``psi`` is a bijective, multiplicative, order-preserving and -reflecting map.

    ``samples`` is either an explicit list of ideals (all pairs are checked), a
    sample count for random pairs, or ``None`` for the full universe of a finite ring.
    """
    src, tgt = phi.source, phi.target
    # the maps are pure, so repeated images are cached
    phi = RingIso(src, tgt, lru_cache(maxsize=None)(phi.forward),
                  lru_cache(maxsize=None)(phi.backward), phi.name)
    if samples is None:
        samples = ideal_universe(src) if src.finite else 1000
    if isinstance(samples, int):
        rng = rng_for(seed, f"induced_iso:{phi.name}:{src}")
        elem_pairs = _sample_pairs(src, rng, samples)
        target_elems = [random_element(tgt, rng) for _ in range(samples)]
    else:
        gens = [A.gen for A in samples]
        elem_pairs = list(product(gens, gens))
        target_elems = [T.gen for T in ideal_universe(tgt)] if tgt.finite else [
            phi.forward(g) for g in gens]
    pairs = [(Ideal.of(a), Ideal.of(b)) for a, b in elem_pairs]
    psi = lambda A: induced_iso_apply(phi, A)  # noqa: E731
    instance = f"{phi.name} on {src}"

    def show(*ideals):
        return [str(I) for I in ideals]

    def report(check, bad, render):
        return CheckReport(check, instance, bad is None, None if bad is None else render(bad))

    def round_trip(a):
        return phi.backward(phi.forward(a)) == a

    def round_trip_back(t):
        return phi.forward(phi.backward(t)) == t

    def hom(pair):
        a, b = pair
        return phi.forward(a + b) == phi.forward(a) + phi.forward(b) and \
            phi.forward(a * b) == phi.forward(a) * phi.forward(b)

    details = [
        report("ring_round_trip", _first_failure([a for a, _ in elem_pairs], round_trip)
               or _first_failure(target_elems, round_trip_back), lambda a: {"element": str(a)}),
        report("ring_homomorphism", _first_failure(elem_pairs, hom),
               lambda ab: {"elements": [str(x) for x in ab]}),
        report("injective", _first_failure(pairs, lambda AB: psi(AB[0]) != psi(AB[1]) or AB[0] == AB[1]),
               lambda AB: {"ideals": show(*AB)}),
        report("surjective", _first_failure(
            target_elems, lambda t: psi(Ideal.of(phi.backward(t))) == Ideal.of(t)),
            lambda t: {"target_ideal": str(Ideal.of(t))}),
        report("multiplicative", _first_failure(pairs, lambda AB: psi(AB[0] * AB[1]) == psi(AB[0]) * psi(AB[1])),
               lambda AB: {"ideals": show(*AB)}),
        report("order_preserving", _first_failure(
            pairs, lambda AB: not ideal_leq(*AB) or ideal_leq(psi(AB[0]), psi(AB[1]))),
            lambda AB: {"ideals": show(*AB)}),
        report("order_reflecting", _first_failure(
            pairs, lambda AB: not ideal_leq(psi(AB[0]), psi(AB[1])) or ideal_leq(*AB)),
            lambda AB: {"ideals": show(*AB)}),
    ]
    return CheckReport.aggregate("induced_isomorphism", instance, details,
                                 {"pairs_checked": len(pairs)})
