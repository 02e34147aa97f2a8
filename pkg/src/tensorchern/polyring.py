"""Exact polynomials in the two formal rank variables ``e`` and ``f``.

Coefficients are :class:`fractions.Fraction`; values are immutable and kept
in canonical form (no zero coefficients), so ``==`` is structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
from numbers import Rational
from typing import Iterable, Mapping

Monomial = tuple[int, int]


class BivarPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in {(i, j)}")
            c = Fraction(c)
            if c:
                clean[(i, j)] = clean.get((i, j), 0) + c
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    # construction

    @classmethod
    def constant(cls, c) -> BivarPoly:
        return cls({(0, 0): c})

    @classmethod
    def from_univariate(cls, e_coeffs: Iterable = (1,), f_coeffs: Iterable = (1,), scale=1) -> BivarPoly:
        """``scale * (sum a_i e^i) * (sum b_j f^j)`` built directly."""
        scale = Fraction(scale)
        e_coeffs, f_coeffs = list(e_coeffs), list(f_coeffs)
        poly = cls()
        poly._terms = {
            (i, j): scale * a * b
            for i, a in enumerate(e_coeffs) if a
            for j, b in enumerate(f_coeffs) if b
        } if scale else {}
        return poly

    @staticmethod
    def _coerce(other):
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, (int, Rational)):
            return BivarPoly.constant(other)
        return NotImplemented

    # inspection

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def deg_e(self) -> int | None:
        return max((i for i, _ in self._terms), default=None)

    def deg_f(self) -> int | None:
        return max((j for _, j in self._terms), default=None)

    def coefficient_of(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def denominator_lcm(self) -> int:
        return lcm(*(c.denominator for c in self._terms.values())) if self._terms else 1

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        poly = BivarPoly()
        poly._terms = {m: -c for m, c in self._terms.items()}
        return poly

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = BivarPoly.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # evaluation and substitution

    def evaluate(self, e_val, f_val) -> Fraction:
        e_val, f_val = Fraction(e_val), Fraction(f_val)
        return sum((c * e_val**i * f_val**j for (i, j), c in self._terms.items()), Fraction(0))

    def compose(self, e_expr, f_expr) -> BivarPoly:
        """Substitute ``e -> e_expr`` and ``f -> f_expr`` (numbers or polynomials)."""
        e_expr, f_expr = self._coerce(e_expr), self._coerce(f_expr)
        e_pows, f_pows = [BivarPoly.constant(1)], [BivarPoly.constant(1)]
        result = BivarPoly()
        for (i, j), c in self._terms.items():
            while len(e_pows) <= i:
                e_pows.append(e_pows[-1] * e_expr)
            while len(f_pows) <= j:
                f_pows.append(f_pows[-1] * f_expr)
            result = result + c * e_pows[i] * f_pows[j]
        return result

    def swap(self) -> BivarPoly:
        """Exchange the roles of ``e`` and ``f``."""
        return BivarPoly({(j, i): c for (i, j), c in self._terms.items()})

    # rendering

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for n, ((i, j), c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in (("e", i), ("f", j)) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if n == 0:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"BivarPoly({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"e_exp": i, "f_exp": j, "coeff": str(c)}
            for (i, j), c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, items: list[dict]) -> BivarPoly:
        return cls({(d["e_exp"], d["f_exp"]): Fraction(d["coeff"]) for d in items})


E = BivarPoly({(1, 0): 1})
F = BivarPoly({(0, 1): 1})
ONE = BivarPoly.constant(1)
ZERO = BivarPoly()


def add(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    return p + q


def subtract(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    return p - q


def multiply(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    return p * q


def evaluate(p: BivarPoly, e_val, f_val) -> Fraction:
    return p.evaluate(e_val, f_val)


def coefficient_of(p: BivarPoly, i: int, j: int) -> Fraction:
    return p.coefficient_of(i, j)


def integer_valued_on_grid(p: BivarPoly, values: Iterable[int]) -> bool:
    """True iff ``p(a, b)`` is an integer for every ``a, b`` drawn from ``values``.

    Works with integer arithmetic after clearing denominators.
    """
    values = list(values)
    den = p.denominator_lcm()
    if den == 1:
        return True
    num = {m: int(c * den) for m, c in p.terms.items()}
    max_i = max(i for i, _ in num)
    max_j = max(j for _, j in num)
    for a in values:
        a_pows = [a**k for k in range(max_i + 1)]
        by_f = [0] * (max_j + 1)
        for (i, j), c in num.items():
            by_f[j] += c * a_pows[i]
        for b in values:
            acc = 0
            for c in reversed(by_f):
                acc = acc * b + c
            if acc % den:
                return False
    return True


def linear_product(shifts: Iterable[int]) -> list[int]:
    """Coefficients (low degree first) of ``prod (t + s)`` over ``shifts``."""
    coeffs = [1]
    for s in shifts:
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] += c * s
            nxt[k + 1] += c
        coeffs = nxt
    return coeffs


def determinant(matrix):
    """Determinant by cofactor expansion with memoised minors.

    Only ``+``, ``-`` and ``*`` are used, so it works over any commutative
    ring, including polynomial rings without exact division.  Cost is
    ``O(n 2^n)`` multiplications; intended for ``n`` up to about 12.
    """
    n = len(matrix)
    if n == 0:
        return 1

    @lru_cache(maxsize=None)
    def minor(row, cols):
        if row == n:
            return 1
        total = None
        for k, c in enumerate(cols):
            entry = matrix[row][c]
            if entry == 0:
                continue
            sub = minor(row + 1, cols[:k] + cols[k + 1:])
            if sub == 0:
                continue
            term = entry * sub
            if k % 2:
                term = -term
            total = term if total is None else total + term
        return 0 if total is None else total

    return minor(0, tuple(range(n)))
