"""Brute-force symmetric-function oracle.

Everything here works with explicit integer polynomials in Chern roots
``x_1..x_e, y_1..y_f``, truncated at a total degree.  It is deliberately
naive: the point is to be small enough to trust, not fast.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Mapping, Sequence

from .errors import DomainError, InvariantViolation, OracleLimitError
from .lr_rule import dim_gl, iter_lr_pairs, shifted_schur_eval
from .partitions import (
    Partition,
    conjugate,
    content_poly,
    fits,
    partitions_in_box,
    rectangle_complement,
    subpartitions,
)
from .polyring import determinant
from .report import Report
from .tensor_chern import chern_expansion, segre_expansion

DEFAULT_MAX_TERMS = 5_000_000


def max_terms() -> int:
    raw = os.environ.get("CTP_MAX_TERMS")
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        return int(raw)
    except ValueError:
        raise OracleLimitError(f"CTP_MAX_TERMS must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class PolyRing:
    """Integer polynomials in ``nx`` x-variables then ``ny`` y-variables.

    ``truncation`` is a total-degree bound (``None`` for none); every
    product discards monomials above it.
    """

    nx: int
    ny: int
    truncation: int | None = None

    @property
    def nvars(self) -> int:
        return self.nx + self.ny

    @property
    def xs(self) -> tuple[int, ...]:
        return tuple(range(self.nx))

    @property
    def ys(self) -> tuple[int, ...]:
        return tuple(range(self.nx, self.nx + self.ny))

    def zero(self) -> MultiPoly:
        return MultiPoly(self, {})

    def one(self) -> MultiPoly:
        return self.const(1)

    def const(self, c: int) -> MultiPoly:
        return MultiPoly(self, {(0,) * self.nvars: c})

    def var(self, k: int) -> MultiPoly:
        exps = [0] * self.nvars
        exps[k] = 1
        return MultiPoly(self, {tuple(exps): 1})

    def monomial(self, exps: Sequence[int], c: int = 1) -> MultiPoly:
        return MultiPoly(self, {tuple(exps): c})


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple[int, ...], int]):
        cap = ring.truncation
        self.ring = ring
        self.terms = {
            m: c for m, c in terms.items()
            if c and (cap is None or sum(m) <= cap)
        }
        if len(self.terms) > max_terms():
            raise OracleLimitError(
                f"oracle polynomial has {len(self.terms)} terms, above CTP_MAX_TERMS={max_terms()}"
            )

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise DomainError("polynomials from different rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly(self.ring, {m: c * other for m, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        cap = self.ring.truncation
        right = sorted(((sum(m), m, c) for m, c in other.terms.items()))
        out: dict = {}
        for m1, c1 in self.terms.items():
            d1 = sum(m1)
            for d2, m2, c2 in right:
                if cap is not None and d1 + d2 > cap:
                    break
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def homogeneous(self, degree: int) -> MultiPoly:
        return MultiPoly(self.ring, {m: c for m, c in self.terms.items() if sum(m) == degree})

    def negate_roots(self) -> MultiPoly:
        """Substitute every variable by its negative."""
        return MultiPoly(self.ring, {m: -c if sum(m) % 2 else c for m, c in self.terms.items()})

    def permute(self, perm: Sequence[int]) -> MultiPoly:
        """Rename variable ``k`` to ``perm[k]``."""
        out = {}
        for m, c in self.terms.items():
            new = [0] * len(m)
            for k, a in enumerate(m):
                new[perm[k]] = a
            out[tuple(new)] = c
        return MultiPoly(self.ring, out)

    def shift_variables(self, variables: Sequence[int]) -> MultiPoly:
        """Exact composition ``v -> 1 + v`` for each listed variable."""
        result = dict(self.terms)
        for v in variables:
            nxt: dict = {}
            for m, c in result.items():
                a = m[v]
                for t in range(a + 1):
                    new = m[:v] + (t,) + m[v + 1:]
                    nxt[new] = nxt.get(new, 0) + c * comb(a, t)
            result = nxt
        return MultiPoly(self.ring, result)

    def evaluate(self, values: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            term = Fraction(c)
            for v, a in zip(values, m):
                if a:
                    term *= Fraction(v) ** a
            total += term
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = [f"x{k + 1}" for k in range(self.ring.nx)] + [f"y{k + 1}" for k in range(self.ring.ny)]
        pieces = []
        for m, c in sorted(self.terms.items(), key=lambda mc: (sum(mc[0]), mc[0])):
            mono = "*".join(n if a == 1 else f"{n}^{a}" for n, a in zip(names, m) if a)
            pieces.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({len(self.terms)} terms)"


def elementary_symmetric(k: int, variables: Sequence[int], ring: PolyRing) -> MultiPoly:
    if k < 0:
        return ring.zero()
    terms = {}
    for subset in combinations(variables, k):
        exps = [0] * ring.nvars
        for v in subset:
            exps[v] = 1
        terms[tuple(exps)] = 1
    return MultiPoly(ring, terms)


def complete_symmetric(k: int, variables: Sequence[int], ring: PolyRing) -> MultiPoly:
    if k < 0:
        return ring.zero()
    terms: dict = {}
    for multiset in combinations_with_replacement(variables, k):
        exps = [0] * ring.nvars
        for v in multiset:
            exps[v] += 1
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + 1
    return MultiPoly(ring, terms)


@lru_cache(maxsize=None)
def _schur_poly(lam: Partition, variables: tuple[int, ...], ring: PolyRing) -> MultiPoly:
    conj = conjugate(lam)
    size = len(conj)
    if size == 0:
        return ring.one()
    if len(lam) > len(variables):
        return ring.zero()
    e = [elementary_symmetric(k, variables, ring) for k in range(len(variables) + 1)]

    def entry(i, j):
        k = conj.part(i) - i + j
        return e[k] if 0 <= k < len(e) else 0

    matrix = [[entry(i, j) for j in range(1, size + 1)] for i in range(1, size + 1)]
    result = determinant(matrix)
    return result if isinstance(result, MultiPoly) else ring.const(result)


def schur_poly(lam, variables: Sequence[int], ring: PolyRing) -> MultiPoly:
    """``s_lam`` in the given variables via the dual Jacobi-Trudi (Giambelli) determinant."""
    return _schur_poly(Partition(lam), tuple(variables), ring)


def bialternant(lam, values: Sequence) -> Fraction:
    """``det(v_i^(lam_j + n - j)) / det(v_i^(n - j))`` at distinct rational values."""
    lam, n = Partition(lam), len(values)
    if len(lam) > n:
        return Fraction(0)
    vals = [Fraction(v) for v in values]
    num = determinant([[v ** (lam.part(j) + n - j) for j in range(1, n + 1)] for v in vals])
    den = determinant([[v ** (n - j) for j in range(1, n + 1)] for v in vals])
    return Fraction(num) / den


def expand_tensor_chern(e: int, f: int, d: int | None) -> MultiPoly:
    """``prod_{i,j} (1 + x_i + y_j)`` truncated at total degree ``d``."""
    ring = PolyRing(e, f, d)
    result = ring.one()
    for i in ring.xs:
        for j in ring.ys:
            result = result * (1 + ring.var(i) + ring.var(j))
    return result


def expand_tensor_segre(e: int, f: int, d: int) -> MultiPoly:
    """``prod_{i,j} sum_{k <= d} (x_i + y_j)^k`` truncated at total degree ``d``."""
    ring = PolyRing(e, f, d)
    result = ring.one()
    for i in ring.xs:
        for j in ring.ys:
            root = ring.var(i) + ring.var(j)
            series, power = ring.one(), ring.one()
            for _ in range(d):
                power = power * root
                series = series + power
            result = result * series
    return result


def is_bisymmetric(p: MultiPoly) -> bool:
    ring = p.ring
    for block in (ring.xs, ring.ys):
        for a, b in zip(block, block[1:]):
            perm = list(range(ring.nvars))
            perm[a], perm[b] = b, a
            if p.permute(perm) != p:
                return False
    return True


def schur_pair_decompose(p: MultiPoly) -> dict[tuple[Partition, Partition], int]:
    """Coefficients of ``p`` in the basis ``s_lam(x) s_mu(y)``.

    Greedy elimination: the graded-lex leading monomial of a polynomial
    symmetric in each block is ``x^lam y^mu`` with ``lam, mu`` partitions,
    and it is also the leading monomial of ``s_lam(x) s_mu(y)``.
    """
    if not is_bisymmetric(p):
        raise DomainError("input is not symmetric in the x- and y-variables separately")
    ring = p.ring
    residue = dict(p.terms)
    out = {}
    while residue:
        lead = max(residue, key=lambda m: (sum(m), m))
        c = residue[lead]
        xs, ys = lead[:ring.nx], lead[ring.nx:]
        if any(b > a for a, b in zip(xs, xs[1:])) or any(b > a for a, b in zip(ys, ys[1:])):
            raise InvariantViolation(f"leading monomial {lead} is not partition-shaped")
        lam, mu = Partition(xs), Partition(ys)
        basis = schur_poly(lam, ring.xs, ring) * schur_poly(mu, ring.ys, ring)
        for m, b in basis.terms.items():
            v = residue.get(m, 0) - c * b
            if v:
                residue[m] = v
            else:
                residue.pop(m, None)
        if lead in residue:
            raise InvariantViolation(f"elimination failed to clear {lead}")
        out[(lam, mu)] = c
    return out


def reconstruct(coeffs: Mapping, ring: PolyRing) -> MultiPoly:
    result = ring.zero()
    for (lam, mu), c in coeffs.items():
        result = result + schur_poly(lam, ring.xs, ring) * schur_poly(mu, ring.ys, ring) * int(c)
    return result


def _compare_maps(report: Report, identity: str, context: dict, got: Mapping, want: Mapping):
    for key in sorted(set(got) | set(want), key=lambda lm: (lm[0].weight + lm[1].weight, lm)):
        lam, mu = key
        report.compare(identity, {**context, "lambda": lam, "mu": mu},
                       got.get(key, 0), want.get(key, 0))


def master_check_chern(e: int, f: int, d: int) -> Report:
    """Oracle decomposition of ``c(E (x) F)`` against :func:`chern_expansion`."""
    report = Report("oracle-chern")
    got = schur_pair_decompose(expand_tensor_chern(e, f, d))
    want = {k: int(v) for k, v in chern_expansion(e, f, d).nonzero().items()}
    _compare_maps(report, "oracle c(E(x)F) = sum P s s", {"e": e, "f": f, "d": d}, got, want)
    return report


def master_check_segre(e: int, f: int, d: int) -> Report:
    report = Report("oracle-segre")
    got = schur_pair_decompose(expand_tensor_segre(e, f, d))
    want = {k: int(v) for k, v in segre_expansion(e, f, d).nonzero().items()}
    _compare_maps(report, "oracle h(E(x)F) = sum Q s s", {"e": e, "f": f, "d": d}, got, want)
    return report


def cauchy_check(e: int, f: int) -> Report:
    """``prod (1 + x_i y_j) = sum_{lam in e x f} s_lam(x) s_{lam*}(y)``."""
    ring = PolyRing(e, f)
    lhs = ring.one()
    for i in ring.xs:
        for j in ring.ys:
            lhs = lhs * (1 + ring.var(i) * ring.var(j))
    rhs = ring.zero()
    for lam in partitions_in_box(e, f):
        rhs = rhs + schur_poly(lam, ring.xs, ring) * schur_poly(conjugate(lam), ring.ys, ring)
    report = Report("cauchy")
    report.compare("prod(1+x_i y_j) = sum s_l(x) s_l*(y)", {"e": e, "f": f}, lhs, rhs)
    return report


def dual_cauchy_check(e: int, f: int) -> Report:
    """``prod (x_i + y_j) = sum_{lam in e x f} s_lam(x) s_{e x f - lam~}(y)``."""
    ring = PolyRing(e, f)
    lhs = ring.one()
    for i in ring.xs:
        for j in ring.ys:
            lhs = lhs * (ring.var(i) + ring.var(j))
    rhs = ring.zero()
    for lam in partitions_in_box(e, f):
        comp = rectangle_complement(lam, e, f)
        rhs = rhs + schur_poly(lam, ring.xs, ring) * schur_poly(comp, ring.ys, ring)
    report = Report("dual-cauchy")
    report.compare("prod(x_i+y_j) = sum s_l(x) s_(R-l~)(y)", {"e": e, "f": f}, lhs, rhs)
    return report


def binomial_theorem_check(lam, e: int, f: int) -> Report:
    """Expand ``s_{e x f - lam~}(1 + y)`` and compare with the shifted-Schur coefficients."""
    lam = Partition(lam)
    if not fits(lam, e, f):
        raise DomainError(f"{lam!r} does not fit in {e} rows x {f} columns")
    comp = rectangle_complement(lam, e, f)
    ring = PolyRing(0, f)
    shifted = schur_poly(comp, ring.ys, ring).shift_variables(ring.ys)
    got = {mu: c for (_, mu), c in schur_pair_decompose(shifted).items()}
    dim = dim_gl(comp, f)
    want = {}
    for mu in subpartitions(comp):
        value = dim * shifted_schur_eval(mu, comp) / content_poly(mu, f)
        if value:
            want[mu] = value
    report = Report("binomial-theorem")
    for mu in sorted(set(got) | set(want), key=lambda p: (p.weight, p)):
        report.compare("s_R-l~(1+y) coefficient", {"lambda": lam, "e": e, "f": f, "mu": mu},
                       Fraction(got.get(mu, 0)), Fraction(want.get(mu, 0)))
    return report


def direct_sum_schur_check(mu, g: int, h: int) -> Report:
    """``s_mu(z_1..z_{g+h}) = sum c^mu_{phi psi} s_phi(z_1..z_g) s_psi(z_{g+1}..)``."""
    mu = Partition(mu)
    ring = PolyRing(g, h)
    lhs = schur_poly(mu, ring.xs + ring.ys, ring)
    rhs = ring.zero()
    for phi, psi, c in iter_lr_pairs(mu):
        rhs = rhs + schur_poly(phi, ring.xs, ring) * schur_poly(psi, ring.ys, ring) * c
    report = Report("direct-sum")
    report.compare("s_mu(G+H) = sum c s_phi(G) s_psi(H)", {"mu": mu, "g": g, "h": h}, lhs, rhs)
    return report
