"""Dubrovnik polynomial oracle and the Kauffman upper bound on tb.

The oracle works straight from the PD code by the unoriented skein relation

    D(L+) - D(L-) = z (D(L0) - D(Linf)),   positive kink = a,   unknot = 1,

with ``L0`` the A-smoothing.  It shares nothing with the Mondrian/front
construction, so agreement between the two is a genuine cross-check.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import _kernels
from .diagram import LinkDiagram, writhe
from .poly import LaurentPoly2

__all__ = [
    "OracleLimitError",
    "slot_involution",
    "dubrovnik",
    "dubrovnik_regular",
    "kauffman_bound",
    "max_a_coefficients",
    "mirror_image",
    "KauffmanReport",
    "kauffman_report",
    "parse_knotinfo_kauffman",
    "kauffman_to_dubrovnik",
    "CACHE_ENV",
]

CACHE_ENV = "MAXTB_CACHE_DIR"
DEFAULT_MAX_CROSSINGS = 14


class OracleLimitError(RuntimeError):
    """The diagram is larger than the configured crossing limit."""


def slot_involution(d: LinkDiagram) -> list[int]:
    """Flatten ``d`` into the kernel format ``p[4*x + j]``."""
    p = [0] * (4 * d.n)
    for (x, j), (y, k) in d.twin().items():
        p[4 * x + j] = 4 * y + k
    return p


def _cache_path(key) -> Optional[Path]:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    import hashlib

    digest = hashlib.sha256(repr(key).encode()).hexdigest()[:32]
    return Path(root) / ("%s.json" % digest)


def dubrovnik_regular(d: LinkDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly2:
    """Regular-isotopy invariant ``D_reg`` (no writhe normalization)."""
    if d.n > max_crossings:
        raise OracleLimitError("%d crossings exceeds the limit of %d" % (d.n, max_crossings))
    if d.num_components == 0:
        return LaurentPoly2.constant(1)
    p = slot_involution(d)
    key = tuple(sorted(_kernels.canonical_code(_kernels.restrict(p, c)) for c in _kernels.components(p)))
    path = _cache_path((key, d.unknots))
    if path is not None and path.exists():
        return LaurentPoly2.from_json(json.loads(path.read_text()))
    if p:
        terms = _kernels.dubrovnik_regular(p, {})
        terms = _kernels.pmul(terms, _kernels.delta_power(d.unknots))
    else:
        terms = _kernels.delta_power(d.unknots - 1)
    out = LaurentPoly2(terms)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(out.to_json()))
    return out


def dubrovnik(d: LinkDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly2:
    """Oriented Dubrovnik polynomial ``a**-w * D_reg``."""
    return dubrovnik_regular(d, max_crossings).shift(-writhe(d), 0)


def kauffman_bound(poly: LaurentPoly2) -> int:
    """Upper bound ``tb <= -max_a_degree - 1``."""
    return -poly.max_a_degree() - 1


def mirror_image(poly: LaurentPoly2) -> LaurentPoly2:
    """Dubrovnik polynomial of the mirror link: ``a -> 1/a``, ``z -> -z``."""
    return LaurentPoly2({(-i, j): c * (-1) ** j for (i, j), c in poly})


def max_a_coefficients(poly: LaurentPoly2) -> list[tuple[int, int]]:
    """``(z_exp, coeff)`` terms at the top a-degree."""
    return poly.a_slice(poly.max_a_degree())


@dataclass(frozen=True)
class KauffmanReport:
    polynomial: LaurentPoly2
    bound: int
    top_slice: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "polynomial": str(self.polynomial),
            "terms": self.polynomial.to_json(),
            "bound": self.bound,
            "top_slice": [list(t) for t in self.top_slice],
        }


def kauffman_report(d: LinkDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> KauffmanReport:
    f = dubrovnik(d, max_crossings)
    return KauffmanReport(f, kauffman_bound(f), tuple(max_a_coefficients(f)))


def _split_top(s: str, seps: str) -> list[str]:
    """Split at separators outside parentheses; ``+``/``-`` stay attached."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in seps and i > start and s[i - 1] not in "^*":
            parts.append(s[start:i])
            start = i + (ch == "*")
    parts.append(s[start:])
    return [p for p in parts if p]


def _expand(s: str) -> LaurentPoly2:
    total = LaurentPoly2()
    for term in _split_top(s, "+-"):
        sign = -1 if term[0] == "-" else 1
        prod = LaurentPoly2.constant(sign)
        for f in _split_top(term.lstrip("+-"), "*"):
            if f.startswith("("):
                prod = prod * _expand(f[1:-1])
            else:
                prod = prod * LaurentPoly2.parse(f)
        total = total + prod
    return total


def parse_knotinfo_kauffman(text: str) -> LaurentPoly2:
    """Parse KnotInfo Kauffman strings such as ``(-a^(-2)+a)*z^(1)+(2+a^4)``."""
    s = re.sub(r"\^\((-?\d+)\)", r"^\1", text.replace(" ", ""))
    return _expand(s)


def kauffman_to_dubrovnik(f: LaurentPoly2, components: int) -> LaurentPoly2:
    """Convert ``F`` to ``D`` via ``D(a, z) = (-1)**(c+1) F(i a, -i z)``.

    Every term of ``F`` has ``a_exp + z_exp`` even, so the result is real.
    """
    out = {}
    for (i, j), c in f:
        if (i + j) % 2:
            raise ValueError("term a^%d z^%d has odd total degree" % (i, j))
        sign = (-1) ** (j + (i + j) // 2 + components + 1)
        out[(i, j)] = sign * c
    return LaurentPoly2(out)
