"""Sparse two-variable Laurent polynomials in ``a`` and ``z`` with integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

__all__ = ["LaurentPoly2"]


class LaurentPoly2:
    """Immutable map ``(a_exp, z_exp) -> int`` with no stored zeros.

    The Kauffman ``v`` variable is ``a**-1``, so v-degrees are negated a-degrees.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            c = int(c)
            if c:
                key = (int(i), int(j))
                s = clean.get(key, 0) + c
                if s:
                    clean[key] = s
                else:
                    clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a_exp: int = 0, z_exp: int = 0, coeff: int = 1) -> "LaurentPoly2":
        return cls({(a_exp, z_exp): coeff})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly2":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            return LaurentPoly2({k: c * other for k, c in self._terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((i, j), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly2({(-i * -n, -j * -n): c ** (-n)})
        result = LaurentPoly2.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, a_exp: int = 0, z_exp: int = 0) -> "LaurentPoly2":
        """Multiply by ``a**a_exp * z**z_exp``."""
        return LaurentPoly2({(i + a_exp, j + z_exp): c for (i, j), c in self._terms.items()})

    def substitute_a_inverse(self) -> "LaurentPoly2":
        """Return the polynomial with ``a -> 1/a`` (``z`` fixed)."""
        return LaurentPoly2({(-i, j): c for (i, j), c in self._terms.items()})

    def _require_nonzero(self):
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")

    def max_a_degree(self) -> int:
        self._require_nonzero()
        return max(i for i, _ in self._terms)

    def min_a_degree(self) -> int:
        self._require_nonzero()
        return min(i for i, _ in self._terms)

    def max_z_degree(self) -> int:
        self._require_nonzero()
        return max(j for _, j in self._terms)

    def min_z_degree(self) -> int:
        self._require_nonzero()
        return min(j for _, j in self._terms)

    def min_v_degree(self) -> int:
        return -self.max_a_degree()

    def a_slice(self, a_exp: int) -> list[tuple[int, int]]:
        """``(z_exp, coeff)`` pairs of the terms with the given a-degree, sorted by z."""
        return sorted((j, c) for (i, j), c in self._terms.items() if i == a_exp)

    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in self]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly2":
        return cls({(i, j): c for i, j, c in data})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self:
            mono = []
            if i:
                mono.append("a" if i == 1 else "a^%d" % i)
            if j:
                mono.append("z" if j == 1 else "z^%d" % j)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(mono)
            else:
                body = "%d*%s" % (abs(c), "*".join(mono))
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[1:]

    def __repr__(self) -> str:
        return "LaurentPoly2(%s)" % self

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly2":
        """Parse the output of :meth:`__str__` (``2*a^-3*z^2 - z + 1``)."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        terms: dict[tuple[int, int], int] = {}
        for chunk in re.split(r"(?<!\^)(?=[+-])", s):
            if not chunk:
                continue
            sign = -1 if chunk[0] == "-" else 1
            coeff, ia, iz = 1, 0, 0
            for factor in chunk.lstrip("+-").split("*"):
                if factor.startswith("a"):
                    ia += int(factor[2:]) if "^" in factor else 1
                elif factor.startswith("z"):
                    iz += int(factor[2:]) if "^" in factor else 1
                else:
                    coeff *= int(factor)
            key = (ia, iz)
            terms[key] = terms.get(key, 0) + sign * coeff
        return cls(terms)
