"""Shared fixtures and independent oracles.

The oracles below work on raw image tuples and plain loops on purpose:
they must not share code with the library they check.
"""

from __future__ import annotations

import itertools

import pytest

from orbisym import load_presentation

ORBIFOLD_28_TEXT = """\
# order-120 orbifold group
generators: x y z
relators: x^5 y^2 z^2 (x*z)^3 (x*y)^2 (y*z^-1)^2
"""


@pytest.fixture(scope="session")
def orbifold_28():
    return load_presentation(ORBIFOLD_28_TEXT)


# -- permutation oracle, independent of the library ---------------------


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Apply p first, then q."""
    return tuple(q[i] for i in p)


def mulclose(perms: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """All products of the given permutations (image tuples)."""
    n = len(perms[0])
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for g in frontier:
            for h in perms:
                x = compose(g, h)
                if x not in seen:
                    seen.add(x)
                    fresh.append(x)
        frontier = fresh
    return seen


def dihedral_generators(n: int) -> list[tuple[int, ...]]:
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((-i) % n for i in range(n))
    return [rotation, reflection]


def triangle_rotation_generators(q: int) -> list[tuple[int, ...]]:
    """Permutations satisfying x^3 = y^2 = (x*y)^q = 1 for q in {3, 4, 5}."""
    if q == 3:
        x = (1, 2, 0, 3)          # 3-cycle on {0,1,2}
        y = (1, 0, 3, 2)          # (0 1)(2 3)
    elif q == 4:
        x = (1, 2, 0, 3)
        y = (3, 1, 2, 0)          # (0 3)
    elif q == 5:
        x = (1, 2, 0, 3, 4)
        y = (3, 4, 2, 0, 1)       # (0 3)(1 4)
    else:
        raise ValueError(q)
    return [x, y]


def brute_force_hom2(relator_vectors: list[tuple[int, ...]],
                     constraints: list[tuple[tuple[int, ...], int]],
                     n: int) -> tuple[int, ...] | None:
    """Try all 2^n generator assignments; return one that works, else None."""
    for bits in itertools.product((0, 1), repeat=n):
        ok = all(sum(b * v for b, v in zip(bits, vec)) % 2 == 0
                 for vec in relator_vectors)
        ok = ok and all(sum(b * v for b, v in zip(bits, vec)) % 2 == target
                        for vec, target in constraints)
        if ok:
            return bits
    return None
