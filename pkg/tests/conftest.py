import random
from fractions import Fraction

import pytest

from leavitt_lp import GaussianRational, LeavittElement, monomial, zero


def random_scalar(rng: random.Random, allow_zero: bool = True) -> GaussianRational:
    den = rng.randint(1, 3)
    z = GaussianRational(Fraction(rng.randint(-3, 3), den), Fraction(rng.randint(-2, 2), den))
    if not allow_zero and z.is_zero():
        return GaussianRational(1)
    return z


def random_word(rng: random.Random, d: int, max_len: int) -> tuple:
    return tuple(rng.randint(1, d) for _ in range(rng.randint(0, max_len)))


def random_element(
    rng: random.Random,
    d: int,
    max_monos: int = 4,
    max_len: int = 3,
    nonzero: bool = False,
) -> LeavittElement:
    """Random sum of monomials; coefficients are small Gaussian rationals."""
    while True:
        total = zero(d)
        for _ in range(rng.randint(1, max_monos)):
            total = total + monomial(
                d,
                random_word(rng, d, max_len),
                random_word(rng, d, max_len),
                random_scalar(rng, allow_zero=False),
            )
        if not (nonzero and total.is_zero()):
            return total


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
