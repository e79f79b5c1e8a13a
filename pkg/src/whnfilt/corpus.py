"""Seeded random FDH functions and greedy counterexample shrinking.

Instances are drawn through their ``r`` profile, which makes every draw valid:
``r`` is sampled nonnegative on a window and held at the last value ``rho``.
Each instance has its own generator seeded from ``(seed, index)``, so a
corpus can be produced in any order or in parallel with identical output.
"""

from __future__ import annotations

import random
from typing import Callable, Iterator

from .fdh import FdhFunction, fdh_from_presentation

MODES = ("any", "torsion_free", "sorted")


def instance_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"whnfilt:{seed}:{index}")


def random_r_profile(rng: random.Random, window: int, max_mult: int) -> tuple[int, list[int]]:
    """``(start, values)`` with ``len(values) <= window`` and entries in ``[0, max_mult]``.

    The support of ``diff = Delta r`` lies in ``[start, start + len(values) - 1]``
    and ``|diff| <= max_mult``.
    """
    width = rng.randint(1, window)
    start = rng.randint(-window // 2, window // 2)
    mode = rng.choice(MODES)
    if mode == "torsion_free" and max_mult >= 1:
        first = rng.randint(0, width - 1)
        values = [0] * first + [rng.randint(1, max_mult) for _ in range(width - first)]
    else:
        values = [rng.randint(0, max_mult) for _ in range(width)]
        if mode == "sorted":
            values.sort()
    return start, values


def from_profile(start: int, values: list[int]) -> FdhFunction:
    f = FdhFunction.from_r(start, values)
    return fdh_from_presentation(f.diff.positive_part(), f.diff.negative_part())


def random_fdh(seed: int, index: int, window: int = 12, max_mult: int = 9) -> FdhFunction:
    start, values = random_r_profile(instance_rng(seed, index), window, max_mult)
    return from_profile(start, values)


def corpus(count: int, seed: int, window: int = 12, max_mult: int = 9) -> Iterator[FdhFunction]:
    for i in range(count):
        yield random_fdh(seed, i, window, max_mult)


def profile_of(f: FdhFunction) -> tuple[int, list[int]]:
    if f.lo is None:
        return 0, []
    return f.lo, [f.r(n) for n in range(f.lo, f.hi + 1)]


def _neighbours(start: int, values: list[int]) -> Iterator[tuple[int, list[int]]]:
    if values:
        yield start + 1, values[1:]
        yield start, values[:-1]
    if start:
        yield start - (start > 0) + (start < 0), values
    for k in range(1, len(values) - 1):
        yield start, values[:k] + values[k + 1:]
    for k, v in enumerate(values):
        if v > 0:
            yield start, values[:k] + [v - 1] + values[k + 1:]


def shrink(f: FdhFunction, fails: Callable[[FdhFunction], bool], max_steps: int = 10_000) -> FdhFunction:
    """Greedily narrow the window and lower ``r`` while ``fails`` stays true."""
    start, values = profile_of(f)
    for _ in range(max_steps):
        for cand in _neighbours(start, values):
            g = from_profile(*cand)
            if fails(g):
                start, values = profile_of(g)
                break
        else:
            break
    return from_profile(start, values)
