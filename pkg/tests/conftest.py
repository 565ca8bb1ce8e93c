from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

import pytest

from maxtb.diagram import is_plus_adequate, mirror, parse_pd, s_plus


@lru_cache(maxsize=None)
def table() -> tuple[dict, ...]:
    text = resources.files("maxtb").joinpath("data/knot_table.jsonl").read_text()
    return tuple(json.loads(line) for line in text.splitlines() if line.strip())


def row(name: str) -> dict:
    return next(r for r in table() if r["name"] == name)


def diagram(name: str, mirrored: bool = False):
    d = parse_pd(row(name)["pd"])
    return mirror(d) if mirrored else d


@lru_cache(maxsize=None)
def adequate_cases() -> tuple[tuple[str, bool], ...]:
    """(name, mirrored) for every +adequate diagram in the table."""
    out = []
    for r in table():
        for m in (False, True):
            if is_plus_adequate(s_plus(diagram(r["name"], m))):
                out.append((r["name"], m))
    return tuple(out)


@pytest.fixture
def trefoil():
    return diagram("3_1")


def random_front(draw_int, max_events: int = 24, max_crossings: int = 12):
    """A valid oriented front built from integer choices ``draw_int(lo, hi)``."""
    from maxtb.front import Crossing, FrontDiagram, LeftCusp, RightCusp

    events, orient, cur = [], {}, []
    crossings = 0
    for _ in range(draw_int(0, max_events)):
        n = len(cur)
        move = draw_int(0, 2)
        if move == 0 or n == 0:
            i = draw_int(0, n)
            o = 1 if draw_int(0, 1) else -1
            orient[len(events)] = o
            events.append(LeftCusp(i + 1))
            cur[i:i] = [o, -o]
        elif move == 1 and n >= 2 and crossings < max_crossings:
            i = draw_int(0, n - 2)
            events.append(Crossing(i + 1))
            cur[i], cur[i + 1] = cur[i + 1], cur[i]
            crossings += 1
        else:
            _close(cur, events, draw_int)
    while cur:
        _close(cur, events, draw_int)
    return FrontDiagram(tuple(events), orient)


def _close(cur, events, draw_int):
    from maxtb.front import RightCusp

    spots = [i for i in range(len(cur) - 1) if cur[i] == -cur[i + 1]]
    i = spots[draw_int(0, len(spots) - 1)]
    events.append(RightCusp(i + 1))
    del cur[i:i + 2]
