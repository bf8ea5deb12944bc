import random

import pytest

from degree_forge.core import Family, all_ksets


def random_family(rng: random.Random, n: int, k: int, max_size: int | None = None) -> Family:
    """Uniform random subfamily of all k-sets of [n]."""
    pool = list(all_ksets(n, k))
    cap = len(pool) if max_size is None else min(max_size, len(pool))
    return Family.from_masks(n, k, rng.sample(pool, rng.randint(0, cap)))


def random_t_intersecting(rng: random.Random, n: int, k: int, t: int,
                          tries: int = 40) -> Family:
    """Greedy random t-intersecting family (possibly small, never empty)."""
    pool = list(all_ksets(n, k))
    rng.shuffle(pool)
    chosen: list[int] = []
    for m in pool[:tries]:
        if all((m & c).bit_count() >= t for c in chosen):
            chosen.append(m)
    return Family.from_masks(n, k, chosen)


@pytest.fixture
def rng():
    return random.Random(0xD46)
