"""Ungraded rulings of fronts.

A ruling splices some crossings (the switches) into pairs of horizontal arcs
so that the front falls apart into eyes: closed curves with one left cusp,
one right cusp and two branches that never meet.  At every switch the two
eyes involved must be disjoint or nested in the vertical direction, never
interleaved.

Switches are named by crossing ordinal: ``0`` is the leftmost crossing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from . import _kernels
from .diagram import is_plus_adequate, s_plus
from .front import Crossing, FrontDiagram, LeftCusp, RightCusp, front_to_pd

__all__ = [
    "Eye",
    "Ruling",
    "RulingFailure",
    "RulingLimitError",
    "verify_ruling",
    "enumerate_rulings",
    "all_switch_is_ruling_implies_adequate",
    "DEFAULT_LIMIT",
]

DEFAULT_LIMIT = 20

DISJOINT = "disjoint"
NESTED_UPPER = "nested-upper-inside"
NESTED_LOWER = "nested-lower-inside"


class RulingLimitError(ValueError):
    """Too many crossings to enumerate every switch set."""


@dataclass(frozen=True)
class Eye:
    left_cusp: int
    right_cusp: int
    circle: Optional[int] = None


@dataclass(frozen=True)
class Ruling:
    switches: frozenset[int]
    eyes: tuple[Eye, ...]
    configurations: dict = field(default_factory=dict, compare=False)

    ok = True

    def __bool__(self) -> bool:
        return True

    def to_json(self) -> dict:
        return {
            "switches": sorted(self.switches),
            "eyes": [[e.left_cusp, e.right_cusp, e.circle] for e in self.eyes],
            "configurations": {str(s): tag for s, tag in sorted(self.configurations.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "Ruling":
        return cls(frozenset(data["switches"]), tuple(Eye(*e) for e in data["eyes"]),
                   {int(s): t for s, t in data.get("configurations", {}).items()})


@dataclass(frozen=True)
class RulingFailure:
    reason: str
    event: Optional[int] = None

    ok = False

    def __bool__(self) -> bool:
        return False


class _Curves:
    """Union-find over strand pieces ``(slice, position)``."""

    def __init__(self):
        self.parent: dict = {}

    def find(self, a):
        p = self.parent.setdefault(a, a)
        if p == a:
            return a
        root = self.find(p)
        self.parent[a] = root
        return root

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def _splice(f: FrontDiagram, switches: frozenset[int]):
    """Join strand pieces across every event; switches join horizontally."""
    uf = _Curves()
    widths = [0]
    n, c = 0, 0
    for t, ev in enumerate(f.events):
        i = ev.i
        for j in range(1, n + 1):
            uf.find((t, j))
        if isinstance(ev, LeftCusp):
            for j in range(1, n + 1):
                uf.union((t, j), (t + 1, j if j < i else j + 2))
            uf.union((t + 1, i), (t + 1, i + 1))
            n += 2
        elif isinstance(ev, RightCusp):
            for j in range(1, n + 1):
                if j < i or j > i + 1:
                    uf.union((t, j), (t + 1, j if j < i else j - 2))
            uf.union((t, i), (t, i + 1))
            n -= 2
        else:
            swap = c not in switches
            for j in range(1, n + 1):
                k = j
                if swap and j in (i, i + 1):
                    k = 2 * i + 1 - j
                uf.union((t, j), (t + 1, k))
            c += 1
        widths.append(n)
    return uf, widths


def verify_ruling(f: FrontDiagram, switches: Iterable[int]) -> Union[Ruling, RulingFailure]:
    """Certify ``switches`` as a ruling of ``f`` or say what goes wrong first."""
    switches = frozenset(switches)
    ncross = f.num_crossings
    bad = [s for s in switches if not (isinstance(s, int) and 0 <= s < ncross)]
    if bad:
        raise ValueError("switch %r is not a crossing of the front" % (bad[0],))
    uf, widths = _splice(f, switches)
    # cusps owned by each curve
    lcs: dict = {}
    rcs: dict = {}
    for t, ev in enumerate(f.events):
        if isinstance(ev, LeftCusp):
            lcs.setdefault(uf.find((t + 1, ev.i)), []).append(t)
        elif isinstance(ev, RightCusp):
            rcs.setdefault(uf.find((t, ev.i)), []).append(t)
    curves = set(lcs) | set(rcs)
    for cur in sorted(curves, key=lambda r: min(lcs.get(r, [0]) + rcs.get(r, [0]))):
        lc, rc = lcs.get(cur, []), rcs.get(cur, [])
        if len(lc) != 1 or len(rc) != 1:
            return RulingFailure("a spliced curve has %d left and %d right cusps" % (len(lc), len(rc)),
                                 (lc + rc)[0] if lc + rc else None)
    # each eye occupies exactly two strands at every slice of its span
    occupancy: dict = {}
    for t in range(len(widths)):
        for j in range(1, widths[t] + 1):
            occupancy.setdefault((uf.find((t, j)), t), []).append(j)
    for (cur, t), pos in occupancy.items():
        if len(pos) != 2:
            return RulingFailure("a spliced curve crosses slice %d %d times" % (t, len(pos)), t)
    for cur in curves:
        lc, rc = lcs[cur][0], rcs[cur][0]
        for t in range(lc + 1, rc + 1):
            if (cur, t) not in occupancy:
                return RulingFailure("a spliced curve is not a single eye", t)
    configurations = {}
    c = 0
    for t, ev in enumerate(f.events):
        if not isinstance(ev, Crossing):
            continue
        i = ev.i
        a, b = uf.find((t, i)), uf.find((t, i + 1))
        if a == b:
            kind = "switch" if c in switches else "crossing"
            return RulingFailure("both strands at %s %d belong to one eye" % (kind, c), t)
        if c in switches:
            pa = sorted(occupancy[(a, t)])
            pb = sorted(occupancy[(b, t)])
            ca = pa[0] if pa[1] == i else pa[1]
            cb = pb[0] if pb[1] == i + 1 else pb[1]
            if ca < i and cb > i + 1:
                configurations[c] = DISJOINT
            elif cb < ca < i:
                configurations[c] = NESTED_UPPER
            elif i + 1 < cb < ca:
                configurations[c] = NESTED_LOWER
            else:
                return RulingFailure("eyes interleave at switch %d" % c, t)
        c += 1
    eyes = []
    for cur in curves:
        lc, rc = lcs[cur][0], rcs[cur][0]
        prov = f.provenance.get(lc)
        eyes.append(Eye(lc, rc, prov[1] if prov and prov[0] == "circle" else None))
    eyes.sort(key=lambda e: e.left_cusp)
    return Ruling(switches, tuple(eyes), configurations)


def enumerate_rulings(f: FrontDiagram, limit: int = DEFAULT_LIMIT) -> list[Ruling]:
    """Every ruling of ``f``, found by exhaustive search over switch sets."""
    n = f.num_crossings
    if n > limit:
        raise RulingLimitError("%d crossings exceeds the enumeration limit of %d" % (n, limit))
    kinds, positions = f.kernel_input()
    out = []
    for mask in _kernels.ruling_masks(kinds, positions, n):
        switches = frozenset(c for c in range(n) if mask >> c & 1)
        r = verify_ruling(f, switches)
        if not r:
            raise AssertionError("internal: search and verifier disagree on %s: %s" % (sorted(switches), r.reason))
        out.append(r)
    return out


def all_switch_is_ruling_implies_adequate(f: FrontDiagram) -> bool:
    """If splicing every crossing gives a ruling, the front is +adequate as a diagram."""
    if not verify_ruling(f, range(f.num_crossings)):
        return True
    return is_plus_adequate(s_plus(front_to_pd(f)))
