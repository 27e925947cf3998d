"""Exact arithmetic over the supported ring families.

Four families are provided:

* :class:`IntegerRing` -- the integers, arbitrary precision.
* :class:`ModularRing` -- residues modulo ``n`` (``n >= 2``), stored in ``[0, n)``.
* :class:`PolyRing` -- polynomials over the prime field ``F_p``, stored as a tuple of
  coefficients from low to high degree with no trailing zeros (``()`` is zero).
* :class:`TriangularRing` -- 2x2 upper triangular matrices over ``F_p``, stored as
  ``(a, b, c)`` for the matrix ``(a b; 0 c)``. This ring is not commutative.

Elements are immutable :class:`RingElement` values tagged with their ring.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import ClassVar, Iterable, Iterator

from pirideals.errors import DomainError, FormatError, UnsupportedFamilyError


def is_prime(p: int) -> bool:
    """Trial division primality test."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# -- polynomial helpers on raw coefficient tuples ---------------------------

def _trim(coeffs: Iterable[int], p: int) -> tuple[int, ...]:
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    return _trim([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)], p)


def _poly_neg(a, p):
    return tuple((-c) % p for c in a)


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out, p)


def _poly_scale(a, c, p):
    return _trim([x * c for x in a], p)


def _poly_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    rem = list(a)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    for shift in range(len(a) - len(b), -1, -1):
        c = rem[shift + len(b) - 1] * inv % p
        if c:
            quot[shift] = c
            for j, y in enumerate(b):
                rem[shift + j] = (rem[shift + j] - c * y) % p
    return _trim(quot, p), _trim(rem, p)


def _poly_monic(a, p):
    if not a:
        return a
    return _poly_scale(a, pow(a[-1], -1, p), p)


def _poly_str(a) -> str:
    if not a:
        return "0"
    terms = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if c == 0:
            continue
        if d == 0:
            terms.append(str(c))
            continue
        mono = "x" if d == 1 else f"x^{d}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms)


# -- ring specifications -----------------------------------------------------

class RingSpec:
    """Common interface of the ring families. Subclasses are frozen dataclasses."""

    family: ClassVar[str]
    commutative: ClassVar[bool] = True
    finite: ClassVar[bool] = False

    def normalize(self, value):
        raise NotImplementedError

    def element(self, value) -> RingElement:
        return RingElement(self, self.normalize(value))

    def zero(self) -> RingElement:
        return self.element(0)

    def one(self) -> RingElement:
        return self.element(1)

    def elements(self) -> Iterator[RingElement]:
        raise UnsupportedFamilyError(f"{self} is infinite and cannot be enumerated")

    def size(self) -> int:
        raise UnsupportedFamilyError(f"{self} is infinite")

    def _add(self, x, y):
        raise NotImplementedError

    def _mul(self, x, y):
        raise NotImplementedError

    def _neg(self, x):
        raise NotImplementedError

    def format_value(self, value) -> str:
        return str(value)

    def value_to_json(self, value):
        return value


@dataclass(frozen=True)
class IntegerRing(RingSpec):
    family: ClassVar[str] = "IntegerRing"

    def normalize(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"integer expected, got {value!r}")
        return value

    def _add(self, x, y):
        return x + y

    def _mul(self, x, y):
        return x * y

    def _neg(self, x):
        return -x

    def __str__(self):
        return "IntegerRing"


@dataclass(frozen=True)
class ModularRing(RingSpec):
    n: int
    family: ClassVar[str] = "ModularRing"
    finite: ClassVar[bool] = True

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise DomainError(f"modulus must be an integer >= 2, got {self.n!r}")

    def normalize(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"integer residue expected, got {value!r}")
        return value % self.n

    def elements(self):
        return (RingElement(self, r) for r in range(self.n))

    def size(self):
        return self.n

    def _add(self, x, y):
        return (x + y) % self.n

    def _mul(self, x, y):
        return x * y % self.n

    def _neg(self, x):
        return -x % self.n

    def __str__(self):
        return f"ModularRing({self.n})"


@dataclass(frozen=True)
class PolyRing(RingSpec):
    p: int
    family: ClassVar[str] = "PolyRing"

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise DomainError(f"characteristic must be prime, got {self.p!r}")

    def normalize(self, value):
        if isinstance(value, int) and not isinstance(value, bool):
            value = (value,)
        try:
            return _trim(value, self.p)
        except TypeError:
            raise DomainError(f"coefficient sequence expected, got {value!r}") from None

    def x(self) -> RingElement:
        return self.element((0, 1))

    def _add(self, x, y):
        return _poly_add(x, y, self.p)

    def _mul(self, x, y):
        return _poly_mul(x, y, self.p)

    def _neg(self, x):
        return _poly_neg(x, self.p)

    def format_value(self, value):
        return _poly_str(value)

    def value_to_json(self, value):
        return list(value)

    def __str__(self):
        return f"PolyRing({self.p})"


@dataclass(frozen=True)
class TriangularRing(RingSpec):
    p: int
    family: ClassVar[str] = "TriangularRing"
    commutative: ClassVar[bool] = False
    finite: ClassVar[bool] = True

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise DomainError(f"characteristic must be prime, got {self.p!r}")

    def normalize(self, value):
        if isinstance(value, int) and not isinstance(value, bool):
            return (value % self.p, 0, value % self.p)
        value = tuple(value)
        if len(value) == 2:
            (a, b), (zero, c) = value
            if zero % self.p:
                raise DomainError(f"lower-left entry must be zero, got {zero}")
            value = (a, b, c)
        if len(value) != 3:
            raise DomainError(f"(a, b, c) triple expected, got {value!r}")
        return tuple(v % self.p for v in value)

    def elements(self):
        rng = range(self.p)
        return (RingElement(self, (a, b, c)) for a in rng for b in rng for c in rng)

    def size(self):
        return self.p ** 3

    def _add(self, x, y):
        p = self.p
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2]) % p)

    def _mul(self, x, y):
        p = self.p
        a, b, c = x
        d, e, f = y
        return (a * d % p, (a * e + b * f) % p, c * f % p)

    def _neg(self, x):
        return tuple(-v % self.p for v in x)

    def format_value(self, value):
        a, b, c = value
        return f"({a} {b}; 0 {c})"

    def value_to_json(self, value):
        a, b, c = value
        return [[a, b], [0, c]]

    def __str__(self):
        return f"TriangularRing({self.p})"


_SPEC_RE = re.compile(r"^(IntegerRing|ModularRing|PolyRing|TriangularRing)(?:\((\d+)\))?$")


def spec_from_string(text: str) -> RingSpec:
    """Inverse of ``str(spec)``."""
    m = _SPEC_RE.match(text.strip())
    if not m:
        raise FormatError(f"unknown ring spec {text!r}")
    family, param = m.groups()
    if family == "IntegerRing":
        if param is not None:
            raise FormatError("IntegerRing takes no parameter")
        return IntegerRing()
    if param is None:
        raise FormatError(f"{family} needs a parameter")
    cls = {"ModularRing": ModularRing, "PolyRing": PolyRing, "TriangularRing": TriangularRing}
    return cls[family](int(param))


# -- elements ------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class RingElement:
    spec: RingSpec
    value: object

    def __add__(self, other):
        return ring_add(self, other)

    def __sub__(self, other):
        return ring_add(self, ring_neg(other))

    def __mul__(self, other):
        return ring_mul(self, other)

    def __neg__(self):
        return ring_neg(self)

    def is_zero(self) -> bool:
        return self == self.spec.zero()

    def __str__(self):
        return self.spec.format_value(self.value)

    def __repr__(self):
        return f"RingElement({self.spec}, {self})"

    def to_json(self) -> dict:
        return {"family": str(self.spec), "value": self.spec.value_to_json(self.value)}

    @classmethod
    def from_json(cls, payload: dict) -> RingElement:
        try:
            spec = spec_from_string(payload["family"])
            return spec.element(payload["value"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad element payload {payload!r}: {exc}") from None


def _check_same(x: RingElement, y: RingElement):
    if x.spec != y.spec:
        raise DomainError(f"operands from different rings: {x.spec} and {y.spec}")
    return x.spec


def _check_commutative(spec: RingSpec):
    if not spec.commutative:
        raise UnsupportedFamilyError(f"{spec} is not commutative")


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    spec = _check_same(x, y)
    return RingElement(spec, spec._add(x.value, y.value))


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    spec = _check_same(x, y)
    return RingElement(spec, spec._mul(x.value, y.value))


def ring_neg(x: RingElement) -> RingElement:
    return RingElement(x.spec, x.spec._neg(x.value))


def divides(a: RingElement, b: RingElement) -> bool:
    """True iff ``b = r * a`` for some ``r`` in the ring. ``a | 0`` always; ``0 | b`` iff ``b = 0``."""
    spec = _check_same(a, b)
    _check_commutative(spec)
    if isinstance(spec, IntegerRing):
        return b.value == 0 if a.value == 0 else b.value % a.value == 0
    if isinstance(spec, ModularRing):
        return b.value % gcd(a.value, spec.n) == 0
    if not a.value:
        return not b.value
    return not _poly_divmod(b.value, a.value, spec.p)[1]


def exact_quotient(x: RingElement, a: RingElement) -> RingElement:
    """Some ``r`` with ``x = r * a``. Raises :class:`DomainError` when ``a`` does not divide ``x``."""
    spec = _check_same(x, a)
    _check_commutative(spec)
    if not divides(a, x):
        raise DomainError(f"{a} does not divide {x} in {spec}")
    if x.value in (0, ()):
        return spec.zero()
    if isinstance(spec, IntegerRing):
        return spec.element(x.value // a.value)
    if isinstance(spec, ModularRing):
        g = gcd(a.value, spec.n)
        m = spec.n // g
        return spec.element((x.value // g) * pow(a.value // g, -1, m) % m)
    return spec.element(_poly_divmod(x.value, a.value, spec.p)[0])


def is_unit(a: RingElement) -> bool:
    spec = a.spec
    _check_commutative(spec)
    if isinstance(spec, IntegerRing):
        return a.value in (1, -1)
    if isinstance(spec, ModularRing):
        return gcd(a.value, spec.n) == 1
    return len(a.value) == 1


def unit_inverse(a: RingElement) -> RingElement:
    if not is_unit(a):
        raise DomainError(f"{a} is not a unit of {a.spec}")
    spec = a.spec
    if isinstance(spec, IntegerRing):
        return a
    if isinstance(spec, ModularRing):
        return spec.element(pow(a.value, -1, spec.n))
    return spec.element(pow(a.value[0], -1, spec.p))


def canonical_generator(a: RingElement) -> RingElement:
    """Chosen representative of the associate class of ``a``.

    ``|a|`` in the integers, ``gcd(a, n)`` (with ``n`` stored as residue 0) modulo
    ``n``, and the monic multiple for polynomials.
    """
    spec = a.spec
    _check_commutative(spec)
    if isinstance(spec, IntegerRing):
        return RingElement(spec, abs(a.value))
    if isinstance(spec, ModularRing):
        return RingElement(spec, gcd(a.value, spec.n) % spec.n)
    return RingElement(spec, _poly_monic(a.value, spec.p))


def euclidean_gcd(a: RingElement, b: RingElement) -> RingElement:
    spec = _check_same(a, b)
    if isinstance(spec, IntegerRing):
        return RingElement(spec, gcd(a.value, b.value))
    if isinstance(spec, PolyRing):
        x, y = a.value, b.value
        while y:
            x, y = y, _poly_divmod(x, y, spec.p)[1]
        return RingElement(spec, _poly_monic(x, spec.p))
    raise UnsupportedFamilyError(f"no Euclidean gcd in {spec}")


def annihilator(a: RingElement) -> list[RingElement]:
    """All ``r`` with ``r * a = 0``, in enumeration order. Finite rings only."""
    spec = a.spec
    if not spec.finite:
        raise UnsupportedFamilyError(f"annihilator enumeration needs a finite ring, got {spec}")
    zero = spec.zero()
    return [r for r in spec.elements() if r * a == zero]


def multiples(a: RingElement) -> list[RingElement]:
    """Elements of the principal ideal ``{r * a}``, sorted by value. Finite commutative rings only."""
    spec = a.spec
    _check_commutative(spec)
    if not spec.finite:
        raise UnsupportedFamilyError(f"{spec} is infinite")
    return sorted({r * a for r in spec.elements()}, key=lambda e: e.value)


def _additive_closure(seeds: set[RingElement], spec: RingSpec) -> frozenset[RingElement]:
    zero = spec.zero()
    seen = {zero}
    queue = deque([zero])
    gens = list(seeds)
    while queue:
        e = queue.popleft()
        for s in gens:
            t = e + s
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return frozenset(seen)


def two_sided_ideal_closure(x: RingElement) -> frozenset[RingElement]:
    """Smallest two-sided ideal containing ``x``: additive closure of all ``r x s``."""
    spec = x.spec
    if not spec.finite:
        raise UnsupportedFamilyError(f"ideal closure needs a finite ring, got {spec}")
    elems = list(spec.elements())
    seeds = {r * x * s for r in elems for s in elems}
    return _additive_closure(seeds, spec)


def set_ideal_product(I: frozenset[RingElement], J: frozenset[RingElement]) -> frozenset[RingElement]:
    """All finite sums of products ``i * j`` with ``i`` in ``I`` and ``j`` in ``J``."""
    if not I or not J:
        raise DomainError("ideals are nonempty")
    specs = {e.spec for e in I} | {e.spec for e in J}
    if len(specs) != 1:
        raise DomainError(f"ideals from different rings: {sorted(map(str, specs))}")
    (spec,) = specs
    if not spec.finite:
        raise UnsupportedFamilyError(f"ideal products need a finite ring, got {spec}")
    return _additive_closure({i * j for i in I for j in J}, spec)


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n >= 1`` in increasing order, by trial division."""
    if n < 1:
        raise DomainError(f"divisors need n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]
