"""Diagram families used as fixtures: braid closures and random positive braids."""

from __future__ import annotations

import random
from typing import Sequence

from .diagram import LinkDiagram, from_records

__all__ = ["braid_closure", "torus_2", "random_positive_braid", "random_braid"]


def braid_closure(word: Sequence[int], strands: int) -> LinkDiagram:
    """Closure of a braid word; ``k`` is the generator sigma_k, ``-k`` its inverse.

    Strands run upward; sigma_k makes a positive crossing of positions
    ``k`` and ``k + 1`` (1-based, left to right).
    """
    if strands < 1:
        raise ValueError("need at least one strand")
    cur = list(range(1, strands + 1))
    nxt = strands + 1
    records = []
    for g in word:
        k = abs(g) - 1
        if not 0 <= k < strands - 1 or g == 0:
            raise ValueError("generator %d out of range for %d strands" % (g, strands))
        a, b = cur[k], cur[k + 1]
        left, right = nxt, nxt + 1
        nxt += 2
        if g > 0:
            records.append([b, right, left, a])
        else:
            records.append([a, b, right, left])
        cur[k], cur[k + 1] = left, right
    # close up: the last arc on each position is the first one again
    rename = {cur[p]: p + 1 for p in range(strands) if cur[p] != p + 1}
    records = [[rename.get(a, a) for a in rec] for rec in records]
    unknots = sum(1 for p in range(strands) if cur[p] == p + 1)
    return from_records(records, unknots=unknots)


def torus_2(n: int) -> LinkDiagram:
    """Positive T(2, n) as the closure of sigma_1^n."""
    return braid_closure([1] * n, 2)


def random_positive_braid(rng: random.Random, max_strands: int = 4, max_length: int = 12) -> tuple[list[int], int]:
    """A positive braid word using every generator (so the closure diagram is connected)."""
    s = rng.randint(2, max_strands)
    length = rng.randint(max(s - 1, 2), max(max_length, s))
    word = list(range(1, s)) + [rng.randint(1, s - 1) for _ in range(length - (s - 1))]
    rng.shuffle(word)
    return word, s


def random_braid(rng: random.Random, max_strands: int = 4, max_length: int = 10) -> tuple[list[int], int]:
    """A braid word with random signs using every generator."""
    word, s = random_positive_braid(rng, max_strands, max_length)
    return [g if rng.random() < 0.5 else -g for g in word], s
