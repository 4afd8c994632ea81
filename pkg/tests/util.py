"""Shared randomized generators for property-style tests (seeded, no I/O)."""

import random

from cowordisms.core import Boundary, Multiword
from cowordisms.category import Cowordism, identity


def random_boundary(rng: random.Random, max_size: int = 6) -> Boundary:
    n = rng.randrange(max_size + 1)
    left = frozenset(i for i in range(1, n + 1) if rng.random() < 0.5)
    return Boundary(n, left)


def random_word(rng: random.Random, alphabet: str = "abc", max_len: int = 2) -> tuple:
    return tuple(rng.choice(alphabet) for _ in range(rng.randrange(max_len + 1)))


def random_matching(rng: random.Random, bd: Boundary, alphabet: str = "abc"):
    lefts = sorted(bd.left)
    rights = sorted(bd.right)
    assert len(lefts) == len(rights)
    rng.shuffle(rights)
    return [(s, random_word(rng, alphabet), t) for s, t in zip(lefts, rights)]


def random_multiword(rng: random.Random, bd: Boundary, alphabet: str = "abc") -> Multiword:
    # only balanced boundaries carry perfect matchings; resample until balanced
    while len(bd.left) != len(bd.right):
        bd = random_boundary(rng, bd.size or 6)
    cycles = [random_word(rng, alphabet) for _ in range(rng.randrange(2))]
    return Multiword.make(bd, random_matching(rng, bd, alphabet), cycles)


def random_balanced_boundary(rng: random.Random, max_size: int = 6) -> Boundary:
    while True:
        bd = random_boundary(rng, max_size)
        if len(bd.left) == len(bd.right):
            return bd


def random_cowordism(
    rng: random.Random,
    dom: Boundary | None = None,
    cod: Boundary | None = None,
    alphabet: str = "abc",
    max_size: int = 6,
) -> Cowordism:
    """A random cowordism; dom/cod drawn so the body boundary is balanced."""
    for _ in range(200):
        d = dom if dom is not None else random_boundary(rng, max_size)
        c = cod if cod is not None else random_boundary(rng, max_size)
        full = d.dual().tensor(c)
        if len(full.left) == len(full.right):
            body = Multiword.make(full, random_matching(rng, full, alphabet))
            return Cowordism.make(d, c, body)
    # fall back to an identity when the requested shapes never balance
    return identity(dom if dom is not None else Boundary.unit())
