from itertools import product
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pirideals.errors import DomainError, FormatError, UnsupportedFamilyError
from pirideals.rings import (
    IntegerRing,
    ModularRing,
    PolyRing,
    RingElement,
    TriangularRing,
    annihilator,
    canonical_generator,
    divides,
    divisors,
    euclidean_gcd,
    exact_quotient,
    is_prime,
    multiples,
    ring_add,
    ring_mul,
    set_ideal_product,
    spec_from_string,
    two_sided_ideal_closure,
)

Z = IntegerRing()
Z12 = ModularRing(12)
F2x, F3x = PolyRing(2), PolyRing(3)
T2 = TriangularRing(2)


def poly_mul_oracle(a, b, p):
    """Coefficient convolution by numpy, reduced mod p and trimmed."""
    if not a or not b:
        return ()
    out = [int(c) % p for c in np.convolve(a, b)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def residue_divides(n, a, b):
    return any(a * r % n == b for r in range(n))


# -- construction ------------------------------------------------------------

@pytest.mark.parametrize("bad", [0, 1, -3])
def test_modular_ring_needs_modulus_at_least_two(bad):
    with pytest.raises(DomainError):
        ModularRing(bad)


@pytest.mark.parametrize("cls", [PolyRing, TriangularRing])
@pytest.mark.parametrize("p", [1, 4, 9, 15])
def test_prime_characteristic_required(cls, p):
    with pytest.raises(DomainError):
        cls(p)


def test_is_prime_matches_sieve():
    sieve = [True] * 200
    sieve[0] = sieve[1] = False
    for i in range(2, 200):
        if sieve[i]:
            for j in range(i * i, 200, i):
                sieve[j] = False
    assert [is_prime(i) for i in range(200)] == sieve


def test_normalization_invariants():
    assert Z12.element(-1).value == 11
    assert F3x.element((1, 2, 0, 3)).value == (1, 2)
    assert F3x.element((0, 0)).value == ()
    assert T2.element(((1, 1), (0, 1))).value == (1, 1, 1)
    with pytest.raises(DomainError):
        T2.element(((1, 1), (1, 1)))


def test_spec_round_trip_through_strings():
    for spec in (Z, Z12, F3x, T2):
        assert spec_from_string(str(spec)) == spec
    with pytest.raises(FormatError):
        spec_from_string("RealField")


def test_element_json_round_trip():
    for e in (Z.element(-7), Z12.element(8), F3x.element((2, 0, 1)), T2.element((1, 0, 1))):
        assert RingElement.from_json(e.to_json()) == e
    assert F3x.element((2, 0, 1)).to_json() == {"family": "PolyRing(3)", "value": [2, 0, 1]}


# -- ring_add / ring_mul -------------------------------------------------------

def test_add_examples():
    assert ring_add(Z.element(3), Z.element(-3)) == Z.zero()
    assert ring_add(Z12.element(8), Z12.element(7)) == Z12.element((8 + 7) % 12)
    assert ring_add(Z12.element(8), Z12.element(7)).value == 3
    assert F2x.element((1, 1)) + F2x.element((1, 1)) == F2x.zero()


def test_mul_examples():
    assert ring_mul(Z.element(2), Z.element(3)) == Z.element(6)
    e11, e22 = T2.element((1, 0, 0)), T2.element((0, 0, 1))
    assert e11 * e22 == T2.zero()
    prod = F3x.element((1, 1)) * F3x.element((2, 1))
    assert prod.value == poly_mul_oracle((1, 1), (2, 1), 3) == (2, 0, 1)


def test_mixed_specs_rejected():
    with pytest.raises(DomainError):
        ring_add(Z.element(1), Z12.element(1))
    with pytest.raises(DomainError):
        ring_mul(F2x.one(), F3x.one())


@pytest.mark.parametrize("n", list(range(2, 31)) + [60])
def test_modular_ring_laws_exhaustive(n):
    R = ModularRing(n)
    el = list(R.elements())
    for x, y in product(el, el):
        assert x * y == y * x
        assert x + y == y + x
    for x, y, z in product(el, el, el):
        assert (x * y) * z == x * (y * z)
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z


def test_triangular_ring_laws_exhaustive():
    el = list(T2.elements())
    assert len(el) == 8
    for x, y, z in product(el, el, el):
        assert (x * y) * z == x * (y * z)
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        assert (y + z) * x == y * x + z * x
    assert any(x * y != y * x for x, y in product(el, el))


ints = st.integers(min_value=-10**6, max_value=10**6)


def polys(p, max_degree=8):
    return st.lists(st.integers(0, p - 1), max_size=max_degree + 1).map(tuple)


@settings(max_examples=300)
@given(ints, ints, ints)
def test_integer_ring_laws_sampled(a, b, c):
    x, y, z = Z.element(a), Z.element(b), Z.element(c)
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z


@settings(max_examples=300)
@given(st.sampled_from([2, 3, 5]).flatmap(lambda p: st.tuples(st.just(p), polys(p), polys(p), polys(p))))
def test_poly_ring_laws_sampled(args):
    p, a, b, c = args
    R = PolyRing(p)
    x, y, z = R.element(a), R.element(b), R.element(c)
    assert (x * y).value == poly_mul_oracle(x.value, y.value, p)
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert (x + y) + z == x + (y + z)


# -- divides / canonical generator / gcd -----------------------------------------

def test_divides_examples():
    assert divides(Z.element(2), Z.element(6))
    assert divides(Z.element(5), Z.zero())
    assert not divides(Z.zero(), Z.element(5))
    assert divides(Z.zero(), Z.zero())
    assert not divides(Z12.element(4), Z12.element(2))
    assert not residue_divides(12, 4, 2)


def test_divides_rejects_triangular():
    with pytest.raises(UnsupportedFamilyError):
        divides(T2.one(), T2.one())


@pytest.mark.parametrize("n", range(2, 61))
def test_modular_divides_matches_residue_search(n):
    R = ModularRing(n)
    for a, b in product(range(n), range(n)):
        assert divides(R.element(a), R.element(b)) == residue_divides(n, a, b)


@pytest.mark.parametrize("n", [2, 12, 30, 36, 60])
def test_divisibility_preorder_and_associates(n):
    R = ModularRing(n)
    el = list(R.elements())
    for a in el:
        assert divides(a, a)
        g = canonical_generator(a)
        assert divides(g, a) and divides(a, g)
        assert canonical_generator(g) == g
    for a, b in product(el, el):
        mutual = divides(a, b) and divides(b, a)
        assert mutual == (canonical_generator(a) == canonical_generator(b))
        for c in el:
            if divides(a, b) and divides(b, c):
                assert divides(a, c)


def test_canonical_generator_examples():
    assert canonical_generator(Z.element(-6)) == Z.element(6)
    assert canonical_generator(Z12.element(8)) == Z12.element(gcd(8, 12))
    assert canonical_generator(Z12.element(8)).value == 4
    assert canonical_generator(Z12.zero()).value == 0
    assert canonical_generator(F3x.element((2, 2))) == F3x.element((1, 1))
    assert canonical_generator(F3x.zero()) == F3x.zero()


@settings(max_examples=300)
@given(st.sampled_from([2, 3, 5, 7]).flatmap(lambda p: st.tuples(st.just(p), polys(p), polys(p))))
def test_poly_divides_and_associates(args):
    p, a, b = args
    R = PolyRing(p)
    x, y = R.element(a), R.element(b)
    assert divides(x, x * y)
    g = canonical_generator(x)
    assert divides(g, x) and divides(x, g)
    assert canonical_generator(g) == g
    assert (divides(x, y) and divides(y, x)) == (g == canonical_generator(y))
    if divides(x, y):
        assert exact_quotient(y, x) * x == y


@settings(max_examples=300)
@given(ints, ints)
def test_integer_divides_and_associates(a, b):
    x, y = Z.element(a), Z.element(b)
    assert divides(x, x * y)
    assert (divides(x, y) and divides(y, x)) == (abs(a) == abs(b))
    if divides(x, y):
        assert exact_quotient(y, x) * x == y


def test_euclidean_gcd_examples():
    assert euclidean_gcd(Z.element(24), Z.element(12)) == Z.element(12)
    assert euclidean_gcd(Z.zero(), Z.element(7)) == Z.element(7)
    assert euclidean_gcd(Z.zero(), Z.zero()) == Z.zero()
    # x^2 + 1 = (x + 1)^2 over F_2
    assert euclidean_gcd(F2x.element((1, 0, 1)), F2x.element((1, 1))) == F2x.element((1, 1))
    with pytest.raises(UnsupportedFamilyError):
        euclidean_gcd(Z12.one(), Z12.one())


@settings(max_examples=200)
@given(st.sampled_from([2, 3, 5]).flatmap(lambda p: st.tuples(st.just(p), polys(p, 5), polys(p, 5), polys(p, 3))))
def test_poly_gcd_is_greatest_common_divisor(args):
    p, a, b, c = args
    R = PolyRing(p)
    x, y, z = R.element(a), R.element(b), R.element(c)
    g = euclidean_gcd(x * z, y * z)
    assert divides(g, x * z) and divides(g, y * z)
    assert divides(canonical_generator(z), g)
    assert g == canonical_generator(g)


@pytest.mark.parametrize("n", [2, 12, 30, 60])
def test_exact_quotient_modular(n):
    R = ModularRing(n)
    for a, x in product(R.elements(), R.elements()):
        if divides(a, x):
            assert exact_quotient(x, a) * a == x
        else:
            with pytest.raises(DomainError):
                exact_quotient(x, a)


def test_annihilator_and_multiples():
    assert [r.value for r in annihilator(Z12.element(4))] == [0, 3, 6, 9]
    assert [m.value for m in multiples(Z12.element(8))] == [0, 4, 8]
    with pytest.raises(UnsupportedFamilyError):
        annihilator(Z.element(3))


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert len(divisors(30)) == 8
    assert divisors(1) == [1]
    for n in range(1, 200):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


# -- two-sided ideals of the triangular ring ------------------------------------------

def mat(a, b, c, p=2):
    return TriangularRing(p).element((a, b, c))


def test_closure_of_e11():
    ideal = two_sided_ideal_closure(mat(1, 0, 0))
    assert ideal == {mat(a, b, 0) for a in range(2) for b in range(2)}


def test_closure_of_zero_and_e12():
    assert two_sided_ideal_closure(T2.zero()) == {T2.zero()}
    assert two_sided_ideal_closure(mat(0, 1, 0)) == {mat(0, a, 0) for a in range(2)}


def test_closure_rejects_infinite_ring():
    with pytest.raises(UnsupportedFamilyError):
        two_sided_ideal_closure(Z.one())


def test_closure_matches_multiples_in_zn():
    for n in (6, 12):
        R = ModularRing(n)
        for a in R.elements():
            assert two_sided_ideal_closure(a) == set(multiples(a))


def test_set_ideal_products():
    I1 = two_sided_ideal_closure(mat(1, 0, 0))
    I2 = two_sided_ideal_closure(mat(0, 0, 1))
    assert set_ideal_product(I1, I2) == two_sided_ideal_closure(mat(0, 1, 0))
    assert set_ideal_product(I1, frozenset({T2.zero()})) == {T2.zero()}
    assert set_ideal_product(I1, I1) == I1
    # the noncommutative failure of <a><b> = <ab>
    assert set_ideal_product(I1, I2) != two_sided_ideal_closure(mat(1, 0, 0) * mat(0, 0, 1))


def test_set_ideal_product_errors():
    with pytest.raises(DomainError):
        set_ideal_product(frozenset(), frozenset({T2.zero()}))
    with pytest.raises(DomainError):
        set_ideal_product(frozenset({T2.zero()}), frozenset({Z12.zero()}))
