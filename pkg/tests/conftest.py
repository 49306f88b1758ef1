import random

import pytest

from ortho_szego.opuc import VerblunskySeq
from ortho_szego.szego import geronimus_forward


def random_alpha(rng: random.Random, n: int, bound: float = 0.9) -> VerblunskySeq:
    """Real coefficients drawn uniformly from (-bound, bound)."""
    return VerblunskySeq(tuple(rng.uniform(-bound, bound) for _ in range(n)))


def random_admissible_rc(rng: random.Random, pairs: int, bound: float = 0.9):
    """Recurrence data guaranteed to come from a measure inside [-1, 1]."""
    return geronimus_forward(random_alpha(rng, 2 * pairs, bound), pairs)


@pytest.fixture
def rng():
    return random.Random(20260810)
