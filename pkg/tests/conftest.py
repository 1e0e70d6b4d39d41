import random
from fractions import Fraction
from pathlib import Path

import pytest

from resolv import (
    CycScalar,
    FiniteFreeResolution,
    FreeElement,
    MatrixAlgebraTarget,
    ScalarMatrix,
    invert,
)
from resolv.scalars import HALF, I, ONE, ZERO

FIXTURES = Path(__file__).parent / "fixtures"

SMALL_POOL = (ZERO, ONE, -ONE, I, -I, HALF, -HALF, I * HALF, -(I * HALF))


def rand_fraction(rng, span=4, max_den=4):
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def rand_scalar(rng):
    return CycScalar(*(rand_fraction(rng) for _ in range(4)))


def rand_nonzero_scalar(rng):
    while True:
        s = rand_scalar(rng)
        if not s.is_zero():
            return s


def rand_word(rng, d, max_len):
    return tuple(rng.randrange(d) for _ in range(rng.randint(0, max_len)))


def rand_element(rng, d, max_deg=3, max_terms=4):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[rand_word(rng, d, max_deg)] = rand_scalar(rng)
    return FreeElement(d, terms)


def rand_nonzero_element(rng, d, max_deg=3, max_terms=4):
    while True:
        x = rand_element(rng, d, max_deg, max_terms)
        if not x.is_zero():
            return x


def rand_matrix(rng, rows, cols, pool=None):
    if pool is None:
        return ScalarMatrix(rows, cols, [rand_scalar(rng) for _ in range(rows * cols)])
    return ScalarMatrix(
        rows, cols, [pool[rng.randrange(len(pool))] for _ in range(rows * cols)]
    )


def rand_invertible(rng, n, pool=SMALL_POOL):
    while True:
        m = rand_matrix(rng, n, n, pool)
        if invert(m) is not None:
            return m


def rand_resolution(rng):
    """A random structurally valid resolution (exactness not implied)."""
    length = rng.choice((1, 2, 3))
    dims = tuple(rng.randint(1, 3) for _ in range(length))
    degrees = tuple(rng.randint(1, 3) for _ in range(length - 1))
    levels = []
    for j in range(2, length + 1):
        level = tuple(
            rand_element(rng, dims[j - 2], max_deg=degrees[j - 2], max_terms=3)
            for _ in range(dims[j - 1])
        )
        levels.append(level)
    n = rng.randint(1, 2)
    target = MatrixAlgebraTarget(n, [rand_matrix(rng, n, n) for _ in range(dims[0])])
    return FiniteFreeResolution(
        name=f"rand-{rng.randrange(10**6)}",
        length=length,
        dims=dims,
        degrees=degrees,
        relation_maps=tuple(levels),
        target=target,
    )


@pytest.fixture
def rng():
    return random.Random(20240817)
