"""Shared generators for the test suite."""

import random
from math import gcd
from pathlib import Path

from cyclic_covers.errors import Disconnected
from cyclic_covers.origami import Origami

DATA = Path(__file__).parent / "data"


def random_params(rng, max_N):
    """A random valid `(N, a)` with `N <= max_N`, by rejection."""
    while True:
        N = rng.randint(1, max_N)
        a = [rng.randint(1, N) for _ in range(3)]
        a.append(-sum(a) % N or N)
        if gcd(N, *a) == 1:
            return N, tuple(a)


def random_origami(rng, max_squares=10):
    while True:
        M = rng.randint(1, max_squares)
        h = list(range(M))
        v = list(range(M))
        rng.shuffle(h)
        rng.shuffle(v)
        try:
            return Origami([x + 1 for x in h], [x + 1 for x in v])
        except Disconnected:
            pass


def random_origamis(n, seed=0, max_squares=10):
    rng = random.Random(seed)
    return [random_origami(rng, max_squares) for _ in range(n)]
