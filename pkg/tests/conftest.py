import random

import pytest

from edgeclosure.ideals import MonomialIdeal, minimalize


def random_proper_ideal(
    rng: random.Random, n_max: int = 5, m_max: int = 4, entry_max: int = 4
) -> MonomialIdeal:
    """A random non-zero, non-unit ideal for fuzz-style checks."""
    while True:
        n = rng.randint(1, n_max)
        m = rng.randint(1, m_max)
        gens = set()
        attempts = 0
        while len(gens) < m and attempts < 50:
            attempts += 1
            v = tuple(rng.randint(0, entry_max) for _ in range(n))
            if any(v):
                gens.add(v)
        ideal = minimalize(gens)
        if not ideal.is_zero and not ideal.is_unit:
            return ideal


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)
