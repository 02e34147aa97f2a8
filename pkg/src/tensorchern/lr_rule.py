"""Littlewood-Richardson coefficients and the dimension formulas built on them.

A Schur expansion is a plain ``dict`` mapping :class:`Partition` to a nonzero
integer coefficient.

LR coefficients are counted by filling the skew diagram one letter at a time:
the ``k``-th letter is added as a horizontal strip, which keeps the filling
semistandard, and the number of ``k``'s placed in rows ``1..r`` is capped by
the number of ``(k-1)``'s in rows ``1..r-1``, which is exactly the lattice
condition on the reverse reading word.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .errors import DomainError
from .partitions import (
    Partition,
    SkewShape,
    content_poly,
    falling_factorial,
    hook_product,
    subpartitions,
)
from .polyring import BivarPoly

SchurExpansion = dict


def _lr_fillings(inner: tuple, content: tuple, outer: tuple | None = None) -> Counter:
    """Count LR fillings of ``shape / inner`` with the given content, by final shape."""
    rows = len(inner) + len(content)
    if outer is not None:
        rows = min(rows, len(outer))
        bound = list(outer) + [0] * (rows - len(outer))
    start = list(inner) + [0] * (rows - len(inner))
    found: Counter = Counter()

    def place(k, shape, prev):
        if k == len(content):
            found[Partition(shape)] += 1
            return
        new = list(shape)
        counts = [0] * rows

        def fill(r, left, cum, cum_prev):
            # cum: k's already in rows < r; cum_prev: (k-1)'s in rows < r
            if left == 0:
                place(k + 1, new, counts)
                return
            if r == rows:
                return
            cap = left if r == 0 else min(left, shape[r - 1] - shape[r])
            if outer is not None:
                cap = min(cap, bound[r] - shape[r])
            if k > 0:
                cap = min(cap, cum_prev - cum)
            nxt_prev = cum_prev + (prev[r] if k > 0 else 0)
            for n in range(max(cap, 0), -1, -1):
                new[r] = shape[r] + n
                counts[r] = n
                fill(r + 1, left - n, cum + n, nxt_prev)
            new[r] = shape[r]
            counts[r] = 0

        fill(0, content[k], 0, 0)

    place(0, start, None)
    return found


@lru_cache(maxsize=None)
def _schur_product(a: tuple, b: tuple) -> tuple:
    if sum(a) < sum(b):
        a, b = b, a
    return tuple(sorted(_lr_fillings(a, b).items()))


def schur_product(alpha, beta) -> SchurExpansion:
    """Expansion of ``s_alpha * s_beta`` in the Schur basis."""
    a, b = tuple(Partition(alpha)), tuple(Partition(beta))
    key = (a, b) if a <= b else (b, a)
    return dict(_schur_product(*key))


@lru_cache(maxsize=None)
def _lr_coefficient(a: tuple, b: tuple, nu: tuple) -> int:
    if sum(a) < sum(b):
        a, b = b, a
    return _lr_fillings(a, b, nu).get(Partition(nu), 0)


def lr_coefficient(lam, mu, nu) -> int:
    """The multiplicity of ``s_nu`` in ``s_lam * s_mu``."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.weight != lam.weight + mu.weight or not (nu.contains(lam) and nu.contains(mu)):
        return 0
    a, b = tuple(lam), tuple(mu)
    if a > b:
        a, b = b, a
    return _lr_coefficient(a, b, tuple(nu))


def dim_sym(rho) -> int:
    """Dimension of the irreducible symmetric-group module ``[rho]``."""
    rho = Partition(rho)
    return factorial(rho.weight) // hook_product(rho)


def dim_gl(rho, n):
    """``(n|rho) / h(rho)``; ``n`` may be a number or a :class:`BivarPoly`."""
    rho = Partition(rho)
    top = content_poly(rho, n)
    if isinstance(top, BivarPoly):
        return top / hook_product(rho)
    return Fraction(top) / hook_product(rho)


@lru_cache(maxsize=None)
def _skew_dim(outer: tuple, inner: tuple) -> int:
    total = 0
    for sigma in subpartitions(outer, sum(outer) - sum(inner)):
        c = lr_coefficient(sigma, inner, outer)
        if c:
            total += c * dim_sym(sigma)
    return total


def skew_dim(shape: SkewShape) -> int:
    """Number of standard fillings of a skew shape, via its LR decomposition."""
    if not isinstance(shape, SkewShape):
        raise DomainError("skew_dim expects a SkewShape")
    return _skew_dim(tuple(shape.outer), tuple(shape.inner))


def shifted_schur_eval(mu, rho) -> Fraction:
    """Shifted Schur function ``s*_mu`` evaluated at the partition ``rho``."""
    mu, rho = Partition(mu), Partition(rho)
    if not rho.contains(mu):
        return Fraction(0)
    ratio = Fraction(skew_dim(SkewShape(rho, mu)), dim_sym(rho))
    return ratio * falling_factorial(rho.weight, mu.weight)


def _vertical_strips(lam: tuple, k: int, n_rows_cap, inside):
    rows = len(lam) + k
    if n_rows_cap is not None:
        rows = min(rows, n_rows_cap)
    if inside is not None:
        rows = min(rows, len(inside))
    base = list(lam) + [0] * (rows - len(lam))
    new = list(base)

    def rec(r, left):
        if left == 0:
            yield Partition(new[:r] + base[r:])
            return
        if rows - r < left:
            return
        for d in (1, 0):
            v = base[r] + d
            if d and r > 0 and v > new[r - 1]:
                continue
            if d and inside is not None and v > inside[r]:
                continue
            new[r] = v
            yield from rec(r + 1, left - d)
        new[r] = base[r]

    yield from rec(0, k)


def multiply_by_elementary(
    expansion: Mapping, k: int, n_rows_cap: int | None = None, inside=None
) -> SchurExpansion:
    """Multiply a Schur expansion by ``e_k`` (column Pieri rule).

    ``n_rows_cap`` drops shapes with more rows; ``inside`` keeps only shapes
    contained in the given partition.
    """
    if k < 1:
        raise DomainError("k must be positive")
    inside = None if inside is None else tuple(Partition(inside))
    out: Counter = Counter()
    for lam, c in expansion.items():
        for nu in _vertical_strips(tuple(Partition(lam)), k, n_rows_cap, inside):
            out[nu] += c
    return {nu: c for nu, c in out.items() if c}


@lru_cache(maxsize=None)
def _generalized_kostka(lam: tuple, alpha: tuple, sigma: tuple) -> int:
    expansion = {Partition(alpha): 1}
    for k, times in enumerate(sigma, start=1):
        for _ in range(times):
            expansion = multiply_by_elementary(expansion, k, inside=lam)
            if not expansion:
                return 0
    return expansion.get(Partition(lam), 0)


def generalized_kostka(lam, alpha, sigma: Sequence[int]) -> int:
    """Multiplicity of ``s_lam`` in ``s_alpha * e_1^sigma_1 * ... * e_m^sigma_m``."""
    lam, alpha = Partition(lam), Partition(alpha)
    sigma = tuple(int(s) for s in sigma)
    if any(s < 0 for s in sigma):
        raise DomainError("sigma entries must be nonnegative")
    total = alpha.weight + sum(k * s for k, s in enumerate(sigma, start=1))
    if total != lam.weight or not lam.contains(alpha):
        return 0
    return _generalized_kostka(tuple(lam), tuple(alpha), sigma)


def expansion_dimension(expansion: Mapping, n) -> object:
    """``sum c_nu dim_gl(nu, n)`` over an expansion."""
    return sum((c * dim_gl(nu, n) for nu, c in expansion.items()), Fraction(0))


def skew_expansion(outer, inner) -> SchurExpansion:
    """``s_{outer/inner} = sum_sigma c^{outer}_{sigma, inner} s_sigma``."""
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        return {}
    out = {}
    for sigma in subpartitions(outer, outer.weight - inner.weight):
        c = lr_coefficient(sigma, inner, outer)
        if c:
            out[sigma] = c
    return out


def iter_lr_pairs(lam) -> Iterable[tuple[Partition, Partition, int]]:
    """All ``(alpha, beta, c)`` with ``c = c^lam_{alpha, beta}`` nonzero."""
    lam = Partition(lam)
    for alpha in subpartitions(lam):
        for beta, c in skew_expansion(lam, alpha).items():
            yield alpha, beta, c
