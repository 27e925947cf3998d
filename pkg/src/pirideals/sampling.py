"""Seeded random generation for the sampled (infinite-ring) suites.

Every suite draws from its own child stream of a :class:`numpy.random.SeedSequence`
keyed by a stable label, so adding or reordering suites never shifts another
suite's samples.
"""

from __future__ import annotations

import zlib

import numpy as np

from pirideals.rings import IntegerRing, PolyRing, RingElement, RingSpec
from pirideals.errors import UnsupportedFamilyError

DEFAULT_SEED = 42
DEFAULT_DEGREE_CAP = 64
INT_MAGNITUDE = 10**6
SAMPLE_DEGREE = 8


def rng_for(seed: int, label: str) -> np.random.Generator:
    key = zlib.crc32(label.encode("utf-8"))
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(key,)))


def random_int(rng: np.random.Generator, magnitude: int = INT_MAGNITUDE, signed: bool = True) -> int:
    """Log-uniform magnitude in ``[0, magnitude]``; zero with probability 1/20."""
    if rng.random() < 0.05:
        return 0
    value = int(round(10 ** rng.uniform(0, np.log10(magnitude))))
    if signed and rng.random() < 0.5:
        value = -value
    return value


def random_poly(rng: np.random.Generator, p: int, max_degree: int = SAMPLE_DEGREE,
                degree_cap: int = DEFAULT_DEGREE_CAP) -> tuple[int, ...]:
    """Coefficient tuple with degree uniform in ``[0, max_degree]``; zero with probability 1/20."""
    if rng.random() < 0.05:
        return ()
    deg = int(rng.integers(0, min(max_degree, degree_cap) + 1))
    coeffs = [int(c) for c in rng.integers(0, p, size=deg + 1)]
    coeffs[-1] = int(rng.integers(1, p))
    return tuple(coeffs)


def random_element(spec: RingSpec, rng: np.random.Generator,
                   degree_cap: int = DEFAULT_DEGREE_CAP) -> RingElement:
    if isinstance(spec, IntegerRing):
        return spec.element(random_int(rng))
    if isinstance(spec, PolyRing):
        return spec.element(random_poly(rng, spec.p, degree_cap=degree_cap))
    if spec.finite:
        elems = list(spec.elements())
        return elems[int(rng.integers(0, len(elems)))]
    raise UnsupportedFamilyError(f"no sampler for {spec}")
