"""Concrete ideal semigroups and the checks that tie them to their models.

Finite instances (``I(Z_n)`` and ``(D(n), *, |)``) are tabulated and checked
exhaustively. The integers and ``F_p[x]`` are infinite; they are never tabulated
and their laws are checked on seeded random samples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

from pirideals import ordered_semigroup as osg
from pirideals.errors import DomainError
from pirideals.ideals import (
    Ideal,
    ideal_leq,
    ideal_semigroup,
    ideal_universe,
    is_ordered_idempotent,
    unit_ideal,
)
from pirideals.report import CheckReport
from pirideals.rings import (
    IntegerRing,
    ModularRing,
    PolyRing,
    RingElement,
    RingSpec,
    TriangularRing,
    canonical_generator,
    divides,
    divisors,
    is_prime,
    set_ideal_product,
    two_sided_ideal_closure,
)
from pirideals.sampling import DEFAULT_DEGREE_CAP, DEFAULT_SEED, random_element, random_int, rng_for


def _check_n(n):
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"n must be an integer >= 2, got {n!r}")


def zn_universe(n: int) -> list[Ideal]:
    _check_n(n)
    return ideal_universe(ModularRing(n))


def build_ideal_semigroup_zn(n: int) -> osg.FiniteOrderedSemigroup:
    """``I(Z_n)`` tabulated over its ideals ``<d>``, ``d | n``, labelled by ``d``."""
    return ideal_semigroup(zn_universe(n), f"I(Z_{n})")


@dataclass(frozen=True)
class DivisorSemigroup:
    n: int
    divisors: tuple[int, ...]
    semigroup: osg.FiniteOrderedSemigroup

    def star(self, d1: int, d2: int) -> int:
        return gcd(d1 * d2, self.n)

    def index(self, d: int) -> int:
        return self.divisors.index(d)


def build_divisor_semigroup(n: int) -> DivisorSemigroup:
    """``(D(n), *, |)`` with ``d1 * d2 = gcd(d1 d2, n)``."""
    _check_n(n)
    ds = divisors(n)
    S = osg.FiniteOrderedSemigroup.from_operations(
        ds, lambda a, b: gcd(a * b, n), lambda a, b: b % a == 0, name=f"D({n})")
    return DivisorSemigroup(n, tuple(ds), S)


def check_divisor_structure(D: DivisorSemigroup) -> CheckReport:
    """1 is the identity; n absorbs and sits on top of the divisibility order."""
    name = f"D({D.n})"
    ds, n = D.divisors, D.n
    bad_unit = next((d for d in ds if D.star(1, d) != d or D.star(d, 1) != d), None)
    bad_zero = next((d for d in ds if D.star(d, n) != n or D.star(n, d) != n), None)
    bad_top = next((d for d in ds if n % d), None)
    return CheckReport.aggregate("divisor_structure", name, [
        CheckReport("identity_1", name, bad_unit is None,
                    None if bad_unit is None else {"d": bad_unit}),
        CheckReport("absorbing_n", name, bad_zero is None,
                    None if bad_zero is None else {"d": bad_zero}),
        CheckReport("top_n", name, bad_top is None, None if bad_top is None else {"d": bad_top}),
    ])


def verify_zn_divisor_iso(n: int) -> CheckReport:
    """Check ``phi(<d>) = d`` is an isomorphism ``I(Z_n) -> (D(n), *, |)``."""
    _check_n(n)
    name = f"I(Z_{n}) vs D({n})"
    universe = zn_universe(n)
    S = ideal_semigroup(universe, f"I(Z_{n})")
    D = build_divisor_semigroup(n)
    T = D.semigroup
    phi = [D.index(int(A.label)) for A in universe]
    k = len(universe)
    pairs = list(product(range(k), range(k)))

    def first(pred):
        return next(((i, j) for i, j in pairs if not pred(i, j)), None)

    def rep(check, bad):
        ce = None if bad is None else {"labels": [S.labels[i] for i in bad]}
        return CheckReport(check, name, bad is None, ce)

    ring = ModularRing(n)
    details = [
        osg.validate(S),
        osg.validate(T),
        CheckReport("bijective", name, sorted(phi) == list(range(k)),
                    None if sorted(phi) == list(range(k)) else {"map": phi}),
        rep("table_identity", first(
            lambda i, j: int((universe[i] * universe[j]).label)
            == gcd(D.divisors[phi[i]] * D.divisors[phi[j]], n))),
        rep("multiplicative", first(lambda i, j: phi[S.mul[i][j]] == T.mul[phi[i]][phi[j]])),
        rep("order_preserving", first(lambda i, j: not S.leq[i][j] or T.leq[phi[i]][phi[j]])),
        rep("order_reflecting", first(lambda i, j: not T.leq[phi[i]][phi[j]] or S.leq[i][j])),
        rep("ring_divisibility_matches_integer_divisibility", first(
            lambda i, j: divides(ring.element(D.divisors[i]), ring.element(D.divisors[j]))
            == (D.divisors[j] % D.divisors[i] == 0))),
    ]
    found = osg.find_isomorphism(S, T)
    details.append(CheckReport("find_isomorphism", name, found is not None,
                               None if found is not None else {"reason": "search exhausted"}))
    witness = {A.label: D.divisors[phi[i]] for i, A in enumerate(universe)}
    return CheckReport.aggregate("zn_divisor_isomorphism", name, details, witness)


# -- sampled suites over infinite rings ----------------------------------------------

def _int_divides(m: int, k: int) -> bool:
    return k == 0 if m == 0 else k % m == 0


def verify_z_naturals_iso(sample_count: int = 1000, seed: int = DEFAULT_SEED) -> CheckReport:
    """Check ``phi(<n>) = n`` against ``(N0, *, |)`` on sampled integers."""
    if sample_count < 1:
        raise DomainError("sample_count must be >= 1")
    Z = IntegerRing()
    rng = rng_for(seed, "z_naturals_iso")
    name = f"I(Z) vs N0, {sample_count} samples, seed {seed}"
    phi = lambda A: A.gen.value  # noqa: E731
    pairs = []
    for i in range(sample_count):
        a = random_int(rng)
        b = random_int(rng)
        if i % 2:
            b *= a
        pairs.append((a, b))
    pairs += [(0, 7), (7, 0), (0, 0), (-6, 6), (6, -6)]

    def first(pred):
        return next(((a, b) for a, b in pairs if not pred(a, b)), None)

    def rep(check, bad):
        return CheckReport(check, name, bad is None, None if bad is None else {"pair": list(bad)})

    I = lambda v: Ideal.generated(Z, v)  # noqa: E731
    details = [
        rep("canonical_collapse", first(
            lambda a, b: I(a) == I(-a) and phi(I(a)) == abs(a) and phi(I(b)) == abs(b))),
        rep("inverse_round_trip", first(lambda a, b: I(phi(I(a))) == I(a))),
        rep("injective", first(lambda a, b: (I(a) == I(b)) == (abs(a) == abs(b)))),
        rep("multiplicative", first(lambda a, b: phi(I(a) * I(b)) == phi(I(a)) * phi(I(b)))),
        rep("order_both_ways", first(
            lambda a, b: ideal_leq(I(a), I(b)) == _int_divides(phi(I(a)), phi(I(b))))),
    ]
    return CheckReport.aggregate("z_naturals_isomorphism", name, details,
                                 {"pairs_checked": len(pairs)})


@dataclass(frozen=True)
class PolyClass:
    """A class of ``F_p[x]`` under ``f ~ g`` iff ``f = a g`` for a nonzero scalar ``a``."""

    representative: RingElement

    def __post_init__(self):
        if not isinstance(self.representative.spec, PolyRing):
            raise DomainError("polynomial expected")
        if canonical_generator(self.representative) != self.representative:
            raise DomainError("representative must be zero or monic")

    def __str__(self):
        return f"[{self.representative}]"


@dataclass(frozen=True)
class PolyClassOps:
    spec: PolyRing

    def class_of(self, f) -> PolyClass:
        if not isinstance(f, RingElement):
            f = self.spec.element(f)
        return PolyClass(canonical_generator(f))

    def class_mul(self, F: PolyClass, G: PolyClass) -> PolyClass:
        return self.class_of(F.representative * G.representative)

    def class_divides(self, F: PolyClass, G: PolyClass) -> bool:
        return divides(F.representative, G.representative)


def poly_class_ops(p: int) -> PolyClassOps:
    if not is_prime(p):
        raise DomainError(f"p must be prime, got {p}")
    return PolyClassOps(PolyRing(p))


def verify_poly_classes(p: int, sample_count: int = 1000, seed: int = DEFAULT_SEED,
                        degree_cap: int = DEFAULT_DEGREE_CAP) -> CheckReport:
    """Check ``psi(<f>) = [f]`` is a bijection preserving products and order, on samples."""
    ops = poly_class_ops(p)
    spec = ops.spec
    rng = rng_for(seed, f"poly_classes:{p}")
    name = f"I(F_{p}[x]) vs F_{p}[x]/~, {sample_count} samples, seed {seed}"
    pairs = []
    for i in range(sample_count):
        f = random_element(spec, rng, degree_cap)
        g = random_element(spec, rng, degree_cap)
        if i % 3 == 1:
            g = f * g
        elif i % 3 == 2:
            # scalar multiple: same class
            g = f * spec.element(int(rng.integers(1, p)))
        pairs.append((f, g))
    psi = lambda A: ops.class_of(A.gen)  # noqa: E731

    def first(pred):
        return next(((f, g) for f, g in pairs if not pred(Ideal.of(f), Ideal.of(g), f, g)), None)

    def rep(check, bad):
        return CheckReport(check, name, bad is None,
                           None if bad is None else {"pair": [str(x) for x in bad]})

    details = [
        rep("well_defined", first(lambda A, B, f, g: psi(A) == ops.class_of(f))),
        rep("injective", first(lambda A, B, f, g: (A == B) == (psi(A) == psi(B)))),
        rep("surjective", first(lambda A, B, f, g: psi(Ideal.of(ops.class_of(f).representative))
                                == ops.class_of(f))),
        rep("multiplicative", first(lambda A, B, f, g: psi(A * B) == ops.class_mul(psi(A), psi(B)))),
        rep("order_both_ways", first(
            lambda A, B, f, g: ideal_leq(A, B) == ops.class_divides(psi(A), psi(B)))),
    ]
    return CheckReport.aggregate("poly_class_isomorphism", name, details,
                                 {"pairs_checked": len(pairs)})


def sampled_law_suite(spec: RingSpec, sample_count: int = 1000, seed: int = DEFAULT_SEED,
                      degree_cap: int = DEFAULT_DEGREE_CAP) -> CheckReport:
    """Ring and ordered-semigroup laws for an infinite ring on seeded random tuples."""
    if sample_count < 1:
        raise DomainError("sample_count must be >= 1")
    rng = rng_for(seed, f"laws:{spec}")
    name = f"{spec}, {sample_count} samples, seed {seed}"
    draw = lambda: random_element(spec, rng, degree_cap)  # noqa: E731
    triples = []
    for i in range(sample_count):
        x, y, z = draw(), draw(), draw()
        if i % 2:
            y = x * y  # guarantees <x> <= <y>
        triples.append((x, y, z, _random_unit(spec, rng)))
    Id = Ideal.of

    def first(pred):
        return next((t for t in triples if not pred(*t)), None)

    def rep(check, bad):
        return CheckReport(check, name, bad is None,
                           None if bad is None else {"tuple": [str(v) for v in bad]})

    def assoc_ring(x, y, z, _u):
        return (x + y) + z == x + (y + z) and (x * y) * z == x * (y * z)

    def distrib(x, y, z, _u):
        return x * (y + z) == x * y + x * z

    def compat(x, y, z, _u):
        A, B, C = Id(x), Id(y), Id(z)
        return not ideal_leq(A, B) or (ideal_leq(A * C, B * C) and ideal_leq(C * A, C * B))

    def order_axioms(x, y, z, _u):
        A, B, C = Id(x), Id(y), Id(z)
        antisym = not (ideal_leq(A, B) and ideal_leq(B, A)) or A == B
        trans = not (ideal_leq(A, B) and ideal_leq(B, C)) or ideal_leq(A, C)
        return ideal_leq(A, A) and antisym and trans

    def gen_independence(x, y, z, u):
        return Id(x * u) == Id(x) and ideal_leq(Id(x * u), Id(y)) == ideal_leq(Id(x), Id(y))

    details = [
        rep("ring_associativity", first(assoc_ring)),
        rep("ring_commutativity", first(lambda x, y, z, _u: x * y == y * x and x + y == y + x)),
        rep("ring_distributivity", first(distrib)),
        rep("ideal_associativity", first(lambda x, y, z, _u: (Id(x) * Id(y)) * Id(z) == Id(x) * (Id(y) * Id(z)))),
        rep("ideal_commutativity", first(lambda x, y, z, _u: Id(x) * Id(y) == Id(y) * Id(x))),
        rep("partial_order", first(order_axioms)),
        rep("compatibility", first(compat)),
        rep("ordered_regularity", first(
            lambda x, y, z, _u: ideal_leq(Id(x), Id(x) * Id(z) * Id(x))
            and ideal_leq(Id(x), Id(x) * unit_ideal(spec) * Id(x)))),
        rep("ordered_idempotent", first(lambda x, y, z, _u: is_ordered_idempotent(Id(x)))),
        rep("generator_independence", first(gen_independence)),
    ]
    return CheckReport.aggregate("sampled_laws", name, details, {"tuples_per_law": len(triples)})


def _random_unit(spec: RingSpec, rng) -> RingElement:
    if isinstance(spec, IntegerRing):
        return spec.element(int(rng.choice([-1, 1])))
    if isinstance(spec, PolyRing):
        return spec.element(int(rng.integers(1, spec.p)))
    if isinstance(spec, ModularRing):
        units = [a for a in range(1, spec.n) if gcd(a, spec.n) == 1]
        return spec.element(units[int(rng.integers(0, len(units)))])
    raise DomainError(f"no unit sampler for {spec}")


# -- noncommutative counterexample -------------------------------------------------

def _matrix_set(elems) -> list[str]:
    return sorted(str(e) for e in elems)


def run_counterexample(p: int = 2) -> CheckReport:
    """Upper triangular 2x2 matrices over ``F_p``: ``<E11><E22> != <E11 E22>``."""
    if not is_prime(p) or p > 5:
        raise DomainError(f"p must be a prime <= 5, got {p}")
    R = TriangularRing(p)
    e11, e22, e12 = R.element((1, 0, 0)), R.element((0, 0, 1)), R.element((0, 1, 0))
    I1, I2 = two_sided_ideal_closure(e11), two_sided_ideal_closure(e22)
    product_ideal = set_ideal_product(I1, I2)
    generated = two_sided_ideal_closure(e11 * e22)
    e12_ideal = two_sided_ideal_closure(e12)
    zero = frozenset({R.zero()})
    name = f"TriangularRing({p})"
    expected_I1 = frozenset(R.element((a, b, 0)) for a in range(p) for b in range(p))
    expected_I2 = frozenset(R.element((0, c, d)) for c in range(p) for d in range(p))

    def rep(check, ok, payload):
        return CheckReport(check, name, ok, None if ok else payload)

    details = [
        rep("I1_is_first_row", I1 == expected_I1, {"I1": _matrix_set(I1)}),
        rep("I2_is_second_column", I2 == expected_I2, {"I2": _matrix_set(I2)}),
        rep("product_is_ideal_of_E12", product_ideal == e12_ideal,
            {"I1I2": _matrix_set(product_ideal), "<E12>": _matrix_set(e12_ideal)}),
        rep("product_has_p_elements", len(product_ideal) == p, {"size": len(product_ideal)}),
        rep("ideal_of_E11E22_is_zero", generated == zero, {"<E11E22>": _matrix_set(generated)}),
        rep("product_differs_from_ideal_of_product", product_ideal != generated,
            {"both": _matrix_set(generated)}),
        rep("I1_squared_is_I1", set_ideal_product(I1, I1) == I1 != zero,
            {"I1I1": _matrix_set(set_ideal_product(I1, I1))}),
    ]
    witness = {"I1I2": _matrix_set(product_ideal), "<E11E22>": _matrix_set(generated)}
    return CheckReport.aggregate("noncommutative_counterexample", name, details, witness)
