import random

import pytest

from pathenum.algebra import OmegaPoly


def random_opoly(rng: random.Random, max_deg: int = 4, max_abs: int = 9) -> OmegaPoly:
    deg = rng.randint(0, max_deg)
    return OmegaPoly([rng.randint(-max_abs, max_abs) for _ in range(deg + 1)])


@pytest.fixture
def rng():
    return random.Random(20110531)
