"""Chern and Segre classes of a tensor product in the Schur basis.

``P[lam, mu](e, f)`` is the coefficient of ``s_lam(E) s_mu(F)`` in
``c(E (x) F)`` for bundles of ranks ``e`` and ``f``; ``Q[lam, mu]`` is the
analogous coefficient of the total Segre class.  The symbolic form is the
content-polynomial sum over the support of ``s_{lam*} s_mu``; the pointwise
routes (Lascoux determinant, rectangle-complement sum, shifted Schur
evaluation, rank reduction) are independent and are cross-checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator

from .errors import DomainError, InvariantViolation
from .lr_rule import (
    dim_gl,
    generalized_kostka,
    iter_lr_pairs,
    lr_coefficient,
    schur_product,
    shifted_schur_eval,
)
from .partitions import (
    EMPTY,
    Partition,
    SkewShape,
    conjugate,
    content,
    content_poly,
    falling_factorial,
    fits,
    format_partition,
    hook_product,
    inner_rectangle_complement,
    partitions_up_to_weight,
    rectangle,
    rectangle_complement,
    remove_vertical_strips,
    subpartitions,
)
from .polyring import E, F, ONE, BivarPoly, determinant, linear_product
from .report import Report


def _skew_shifts(outer, inner) -> list[int]:
    return [content(b) for b in SkewShape(outer, inner).boxes()]


def _sum_polys(polys) -> BivarPoly:
    acc: dict = {}
    for poly in polys:
        for m, c in poly.terms.items():
            acc[m] = acc.get(m, 0) + c
    return BivarPoly(acc)


@lru_cache(maxsize=None)
def _p_symbolic(lam: Partition, mu: Partition) -> BivarPoly:
    terms = []
    for kappa, c in schur_product(conjugate(lam), mu).items():
        nu = conjugate(kappa)
        terms.append(BivarPoly.from_univariate(
            linear_product(_skew_shifts(nu, lam)),
            linear_product(_skew_shifts(kappa, mu)),
            Fraction(c, hook_product(nu)),
        ))
    return _sum_polys(terms)


def p_coefficient_symbolic(lam, mu) -> BivarPoly:
    """``P[lam, mu]`` as a polynomial in ``(e, f)``."""
    return _p_symbolic(Partition(lam), Partition(mu))


@lru_cache(maxsize=None)
def _q_symbolic(lam: Partition, mu: Partition) -> BivarPoly:
    terms = []
    for nu, c in schur_product(lam, mu).items():
        terms.append(BivarPoly.from_univariate(
            linear_product(_skew_shifts(nu, lam)),
            linear_product(_skew_shifts(nu, mu)),
            Fraction(c, hook_product(nu)),
        ))
    return _sum_polys(terms)


def q_coefficient_symbolic(lam, mu) -> BivarPoly:
    """``Q[lam, mu]``, the Segre-side coefficient."""
    return _q_symbolic(Partition(lam), Partition(mu))


def _integral_value(poly: BivarPoly, e_val: int, f_val: int, what: str) -> Fraction:
    value = poly.evaluate(e_val, f_val)
    if value.denominator != 1:
        raise InvariantViolation(f"{what} at ({e_val}, {f_val}) is not an integer: {value}")
    return value


def p_coefficient_at(lam, mu, e_val: int, f_val: int) -> Fraction:
    return _integral_value(p_coefficient_symbolic(lam, mu), e_val, f_val, f"P[{lam}, {mu}]")


def q_coefficient_at(lam, mu, e_val: int, f_val: int) -> Fraction:
    return _integral_value(q_coefficient_symbolic(lam, mu), e_val, f_val, f"Q[{lam}, {mu}]")


# independent pointwise routes


def lascoux_domain(lam, mu, e_val: int, f_val: int) -> bool:
    lam, mu = Partition(lam), Partition(mu)
    return e_val >= 1 and f_val >= 1 and fits(lam, e_val, f_val) and fits(mu, f_val, e_val)


def p_via_lascoux(lam, mu, e_val: int, f_val: int) -> Fraction:
    """Lascoux's ``e x e`` determinant of binomial coefficients."""
    lam, mu = Partition(lam), Partition(mu)
    if not lascoux_domain(lam, mu, e_val, f_val):
        raise DomainError(
            f"Lascoux determinant needs lam in {e_val}x{f_val} and mu in {f_val}x{e_val} (rows x cols)"
        )
    mu_c = conjugate(mu)
    matrix = []
    for i in range(1, e_val + 1):
        top = f_val - mu_c.part(e_val + 1 - i) + e_val - i
        row = []
        for j in range(1, e_val + 1):
            bottom = lam.part(j) + e_val - j
            row.append(comb(top, bottom))
        matrix.append(row)
    return Fraction(determinant(matrix))


def _check_rectangle_domain(lam, mu, e_val, f_val, route):
    if e_val < 1 or f_val < 1:
        raise DomainError(f"{route}: ranks must be positive")
    if not fits(lam, e_val, f_val):
        raise DomainError(f"{route}: lam={format_partition(lam)!r} does not fit in {e_val} rows x {f_val} columns")
    if len(mu) > f_val:
        raise DomainError(f"{route}: mu has more than f={f_val} rows, so (f|mu) = 0")


def rectangle_domain(lam, mu, e_val: int, f_val: int) -> bool:
    try:
        _check_rectangle_domain(Partition(lam), Partition(mu), e_val, f_val, "")
    except DomainError:
        return False
    return True


def p_via_rectangle(lam, mu, e_val: int, f_val: int) -> Fraction:
    """Sum of ``c / h(e x f - nu~)`` over ``nu`` in the rectangle, times a content ratio."""
    lam, mu = Partition(lam), Partition(mu)
    _check_rectangle_domain(lam, mu, e_val, f_val, "rectangle route")
    comp = rectangle_complement(lam, e_val, f_val)
    total = Fraction(0)
    for kappa, c in schur_product(conjugate(lam), mu).items():
        nu = conjugate(kappa)
        if fits(nu, e_val, f_val):
            total += Fraction(c, hook_product(rectangle_complement(nu, e_val, f_val)))
    return Fraction(content_poly(comp, f_val), content_poly(mu, f_val)) * total


def p_via_shifted_schur(lam, mu, e_val: int, f_val: int) -> Fraction:
    """``dim_GL(f)(e x f - lam~) * s*_mu(e x f - lam~) / (f|mu)``."""
    lam, mu = Partition(lam), Partition(mu)
    _check_rectangle_domain(lam, mu, e_val, f_val, "shifted Schur route")
    comp = rectangle_complement(lam, e_val, f_val)
    return dim_gl(comp, f_val) * shifted_schur_eval(mu, comp) / content_poly(mu, f_val)


def _weighted_vectors(weight: int, length: int) -> Iterator[tuple[int, ...]]:
    """Vectors ``s`` of nonnegative integers with ``sum k s_k = weight``."""
    def rec(k, left, acc):
        if k > length:
            if left == 0:
                yield tuple(acc)
            return
        for s in range(left // k + 1):
            yield from rec(k + 1, left - k * s, acc + [s])

    yield from rec(1, weight, [])


def _multinomial_factor(rank_gap: int, vec: tuple[int, ...]) -> Fraction:
    return Fraction(falling_factorial(rank_gap, sum(vec)), prod(factorial(s) for s in vec))


def _kostka_sum(target: Partition, base: Partition, rows: int, rank_gap: int) -> Fraction:
    total = Fraction(0)
    for vec in _weighted_vectors(target.weight - base.weight, rows):
        d = generalized_kostka(target, base, vec)
        if d:
            total += d * _multinomial_factor(rank_gap, vec)
    return total


def p_via_reduction(lam, mu, e_val: int, f_val: int, m: int, p: int) -> Fraction:
    """Express ``P(e, f)`` through ``P(m, p)`` by splitting off trivial summands."""
    lam, mu = Partition(lam), Partition(mu)
    if not (1 <= m <= e_val and 1 <= p <= f_val):
        raise DomainError("reduction needs 1 <= m <= e and 1 <= p <= f")
    if len(lam) > m or len(mu) > p:
        raise DomainError("reduction needs l(lam) <= m and l(mu) <= p")
    alpha_weights = {a: _kostka_sum(lam, a, m, f_val - p) for a in subpartitions(lam)}
    beta_weights = {b: _kostka_sum(mu, b, p, e_val - m) for b in subpartitions(mu)}
    total = Fraction(0)
    for alpha, wa in alpha_weights.items():
        if not wa:
            continue
        for beta, wb in beta_weights.items():
            if wb:
                total += p_coefficient_symbolic(alpha, beta).evaluate(m, p) * wa * wb
    return total


# expansions


def _degree_key_sort(pairs):
    """Total degree ascending, then lam and mu each lexicographically descending."""
    pairs = sorted(pairs, key=lambda lm: tuple(lm[1]), reverse=True)
    pairs = sorted(pairs, key=lambda lm: tuple(lm[0]), reverse=True)
    return sorted(pairs, key=lambda lm: lm[0].weight + lm[1].weight)


@dataclass
class SchurPairExpansion:
    kind: str
    e: int | None
    f: int | None
    max_degree: int
    terms: dict = field(default_factory=dict)

    def items(self):
        return [(key, self.terms[key]) for key in _degree_key_sort(self.terms)]

    def nonzero(self) -> dict:
        return {k: v for k, v in self.terms.items() if v != 0}

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "f": self.f,
            "max_degree": self.max_degree,
            "kind": self.kind,
            "terms": [
                {"lambda": list(lam), "mu": list(mu),
                 "coeff": v.to_json() if isinstance(v, BivarPoly) else str(v)}
                for (lam, mu), v in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> SchurPairExpansion:
        terms = {}
        for t in data["terms"]:
            coeff = t["coeff"]
            value = BivarPoly.from_json(coeff) if isinstance(coeff, list) else Fraction(coeff)
            terms[(Partition(t["lambda"]), Partition(t["mu"]))] = value
        return cls(data["kind"], data["e"], data["f"], data["max_degree"], terms)


def _pairs(max_degree: int):
    for lam in partitions_up_to_weight(max_degree):
        for mu in partitions_up_to_weight(max_degree - lam.weight):
            yield lam, mu


def _expansion(kind, coeff, e_val, f_val, max_degree, include_vanishing, include_zero):
    out = SchurPairExpansion(kind, e_val, f_val, max_degree)
    for lam, mu in _pairs(max_degree):
        poly = coeff(lam, mu)
        if e_val is None:
            value = poly
        else:
            if not include_vanishing and (len(lam) > e_val or len(mu) > f_val):
                continue
            value = _integral_value(poly, e_val, f_val, f"{kind} coefficient [{lam}, {mu}]")
        if value != 0 or include_zero:
            out.terms[(lam, mu)] = value
    return out


def chern_expansion(e_val: int | None, f_val: int | None, max_degree: int,
                    include_vanishing: bool = False, include_zero: bool = False) -> SchurPairExpansion:
    """All ``P[lam, mu](e, f)`` with ``|lam| + |mu| <= max_degree``.

    Pairs whose Schur classes vanish at these ranks (more than ``e`` rows in
    ``lam`` or more than ``f`` in ``mu``) are dropped unless
    ``include_vanishing``; zero coefficients are dropped unless
    ``include_zero``.  Passing ``None`` for both ranks gives the symbolic table.
    """
    return _expansion("chern", p_coefficient_symbolic, e_val, f_val, max_degree,
                      include_vanishing, include_zero)


def segre_expansion(e_val: int | None, f_val: int | None, max_degree: int,
                    include_vanishing: bool = False, include_zero: bool = False) -> SchurPairExpansion:
    return _expansion("segre", q_coefficient_symbolic, e_val, f_val, max_degree,
                      include_vanishing, include_zero)


# identities


def verify_symmetries(lam, mu, samples=()) -> Report:
    lam, mu = Partition(lam), Partition(mu)
    report = Report("symmetry")
    p = p_coefficient_symbolic(lam, mu)
    swapped = p_coefficient_symbolic(mu, lam).swap()
    sign = (-1) ** (lam.weight + mu.weight)
    twisted = sign * p_coefficient_symbolic(conjugate(lam), conjugate(mu)).compose(-E, -F)
    inputs = {"lambda": lam, "mu": mu}
    report.compare("P[l,m](e,f) = P[m,l](f,e)", inputs, p, swapped)
    report.compare("P[l,m](e,f) = (-1)^(|l|+|m|) P[l*,m*](-e,-f)", inputs, p, twisted)
    for a, b in samples:
        report.compare("P[l,m](a,b) = P[m,l](b,a)", {**inputs, "e": a, "f": b},
                       p.evaluate(a, b), p_coefficient_symbolic(mu, lam).evaluate(b, a))
    return report


def verify_vanishing(lam, mu) -> Report:
    lam, mu = Partition(lam), Partition(mu)
    report = Report("vanishing")
    p = p_coefficient_symbolic(lam, mu)
    for e_val in range(len(lam), mu.part(1)):
        report.compare("P[l,m](e,.) == 0 for l*_1 <= e < m_1",
                       {"lambda": lam, "mu": mu, "e": e_val}, p.compose(e_val, F), 0)
    for f_val in range(len(mu), lam.part(1)):
        report.compare("P[l,m](.,f) == 0 for m*_1 <= f < l_1",
                       {"lambda": lam, "mu": mu, "f": f_val}, p.compose(E, f_val), 0)
    return report


def verify_recursion_rank_step(lam, mu) -> Report:
    lam, mu = Partition(lam), Partition(mu)
    report = Report("recursion")
    p = p_coefficient_symbolic(lam, mu)
    lhs = p.compose(E + 1, F) - p
    rhs = _sum_polys(p_coefficient_symbolic(lam, theta)
                     for theta in remove_vertical_strips(mu) if theta != mu)
    report.compare("P(e+1,f) - P(e,f) = sum over proper vertical strips",
                   {"lambda": lam, "mu": mu}, lhs, rhs)
    return report


def addition_sides(lam, phi, psi, e_val: int, g_val: int, h_val: int) -> tuple[Fraction, Fraction]:
    lam, phi, psi = Partition(lam), Partition(phi), Partition(psi)
    lhs = sum((c * p_coefficient_symbolic(lam, mu).evaluate(e_val, g_val + h_val)
               for mu, c in schur_product(phi, psi).items()), Fraction(0))
    rhs = sum((c * p_coefficient_symbolic(alpha, phi).evaluate(e_val, g_val)
               * p_coefficient_symbolic(beta, psi).evaluate(e_val, h_val)
               for alpha, beta, c in iter_lr_pairs(lam)), Fraction(0))
    return lhs, rhs


def verify_addition_identity(lam, phi, psi, e_val: int, g_val: int, h_val: int) -> Report:
    report = Report("addition")
    lhs, rhs = addition_sides(lam, phi, psi, e_val, g_val, h_val)
    report.compare(
        "sum c^m_{phi psi} P[l,m](e,g+h) = sum c^l_{ab} P[a,phi](e,g) P[b,psi](e,h)",
        {"lambda": Partition(lam), "phi": Partition(phi), "psi": Partition(psi),
         "e": e_val, "g": g_val, "h": h_val},
        lhs, rhs)
    return report


def verify_reduction(lam, mu, e_val, f_val, m, p) -> Report:
    report = Report("reduction")
    report.compare("reduction formula = P(e,f)",
                   {"lambda": Partition(lam), "mu": Partition(mu), "e": e_val, "f": f_val, "m": m, "p": p},
                   p_via_reduction(lam, mu, e_val, f_val, m, p),
                   p_coefficient_at(lam, mu, e_val, f_val))
    return report


def leading_term_check(lam, mu) -> Report:
    lam, mu = Partition(lam), Partition(mu)
    report = Report("leading-term")
    p = p_coefficient_symbolic(lam, mu)
    inputs = {"lambda": lam, "mu": mu}
    report.compare("coef of e^|m| f^|l| = 1/(h(l)h(m))", inputs,
                   p.coefficient_of(mu.weight, lam.weight),
                   Fraction(1, hook_product(lam) * hook_product(mu)))
    report.compare("deg_e = |m|", inputs, p.deg_e(), mu.weight)
    report.compare("deg_f = |l|", inputs, p.deg_f(), lam.weight)
    return report


def corollary_sum(lam, mu) -> Fraction:
    lam, mu = Partition(lam), Partition(mu)
    scale = hook_product(lam) * hook_product(mu)
    return sum((Fraction(scale * c, hook_product(nu)) for nu, c in schur_product(lam, mu).items()),
               Fraction(0))


def verify_q_relation(lam, mu) -> Report:
    """``Q[l, m](e, f) = (-1)^|l| P[l, m*](e, -f)`` and the (e, f) symmetry of Q."""
    lam, mu = Partition(lam), Partition(mu)
    report = Report("segre")
    q = q_coefficient_symbolic(lam, mu)
    inputs = {"lambda": lam, "mu": mu}
    report.compare("Q[l,m](e,f) = (-1)^|l| P[l,m*](e,-f)", inputs, q,
                   (-1) ** lam.weight * p_coefficient_symbolic(lam, conjugate(mu)).compose(E, -F))
    report.compare("Q[l,m](e,f) = Q[m,l](f,e)", inputs, q, q_coefficient_symbolic(mu, lam).swap())
    return report


# hook-product lemmas


def verify_lemma_rectangle(lam, e_val: int, f_val: int) -> Report:
    """``(f|e x f - lam~) (e|lam) = (f|e x f) = h(e x f)``."""
    lam = Partition(lam)
    rect = rectangle(e_val, f_val)
    report = Report("lemma-rectangle")
    inputs = {"lambda": lam, "e": e_val, "f": f_val}
    lhs = content_poly(rectangle_complement(lam, e_val, f_val), f_val) * content_poly(lam, e_val)
    report.compare("(f|R-l~)(e|l) = (f|R)", inputs, lhs, content_poly(rect, f_val))
    report.compare("(f|R) = h(R)", inputs, content_poly(rect, f_val), hook_product(rect))
    return report


def verify_lemma_hooks(nu) -> Report:
    """``(nu*_1|nu)(nu_1|nu*) h(nu bar) = h(nu_1 x nu*_1) h(nu)``."""
    nu = Partition(nu)
    report = Report("lemma-hooks")
    a, b = nu.part(1), len(nu)
    lhs = content_poly(nu, b) * content_poly(conjugate(nu), a) * hook_product(inner_rectangle_complement(nu))
    rhs = hook_product(rectangle(a, b)) * hook_product(nu)
    report.compare("(l(nu)|nu)(nu_1|nu*)h(nu bar) = h(rect)h(nu)", {"nu": nu}, lhs, rhs)
    return report


def nu_weight_via_regions(nu) -> Fraction:
    """The per-``nu`` weight of the rectangle-free expansion of ``P``."""
    nu = Partition(nu)
    a, b = nu.part(1), len(nu)
    den = content_poly(nu, b) * content_poly(conjugate(nu), a) * hook_product(inner_rectangle_complement(nu))
    return Fraction(hook_product(rectangle(a, b)), den)


REGIONS = ("NO", "NE", "SO", "SE")


def region_hook_quotients(nu, e_val: int, f_val: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Hook-product quotients ``h_R(e x f) / h_R(e x f - nu~)`` over the four regions.

    The rectangle has ``f`` rows of length ``e``; the north rows are those
    with index ``<= f - nu_1``, the west columns those ``<= e - l(nu)``.
    """
    nu = Partition(nu)
    if not fits(nu, e_val, f_val):
        raise DomainError(f"{nu!r} does not fit in {e_val} rows x {f_val} columns")
    comp = rectangle_complement(nu, e_val, f_val)
    comp_c = conjugate(comp)
    north, west = f_val - nu.part(1), e_val - len(nu)
    full = dict.fromkeys(REGIONS, 1)
    part = dict.fromkeys(REGIONS, 1)
    for i in range(1, f_val + 1):
        for j in range(1, e_val + 1):
            region = ("N" if i <= north else "S") + ("O" if j <= west else "E")
            full[region] *= (e_val - j) + (f_val - i) + 1
            if j <= comp.part(i):
                part[region] *= comp.part(i) + comp_c.part(j) - i - j + 1
    return tuple(Fraction(full[r], part[r]) for r in REGIONS)


def region_quotient_formulas(nu, e_val: int, f_val: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Closed forms for the quotients of :func:`region_hook_quotients`, same order.

    With ``f`` rows of length ``e`` the north-east boxes have full-height
    columns, so their quotient carries ``f``; the south-west one carries ``e``.
    """
    nu = Partition(nu)
    a, b = nu.part(1), len(nu)
    nu_c = conjugate(nu)
    return (
        Fraction(1),
        Fraction(content_poly(nu_c, f_val), content_poly(nu_c, a)),
        Fraction(content_poly(nu, e_val), content_poly(nu, b)),
        Fraction(hook_product(rectangle(a, b)), hook_product(inner_rectangle_complement(nu))),
    )


def verify_region_quotients(nu, e_val: int, f_val: int) -> Report:
    nu = Partition(nu)
    report = Report("regions")
    inputs = {"nu": nu, "e": e_val, "f": f_val}
    got = region_hook_quotients(nu, e_val, f_val)
    for name, g, want in zip(REGIONS, got, region_quotient_formulas(nu, e_val, f_val)):
        report.compare(f"{name} quotient", inputs, g, want)
    rect = rectangle(e_val, f_val)
    globally = Fraction(hook_product(rect), hook_product(rectangle_complement(nu, e_val, f_val)))
    report.compare("product of regions = global quotient", inputs, prod(got), globally)
    return report


# known closed forms


def binom_poly(x, k: int):
    """Generalised binomial ``x (x-1) ... (x-k+1) / k!``; zero for ``k < 0``."""
    if k < 0:
        return 0 * ONE
    return falling_factorial(x, k) * Fraction(1, factorial(k))


def closed_form_rows(l: int, m: int) -> BivarPoly:
    """Known closed form of ``P[(l), (m)]``."""
    return binom_poly(E - 1, m - 1) * binom_poly(F - 1, l - 1) * (E * F - l * m) * Fraction(1, l * m)


def closed_form_columns(l: int, m: int) -> BivarPoly:
    """Known closed form of ``P[(1^l), (1^m)]``."""
    return (binom_poly(E + m - 1, m - 1) * binom_poly(F + l - 1, l - 1)
            * (E * F - l * m) * Fraction(1, l * m))


def closed_form_row_column(l: int, m: int) -> BivarPoly:
    """Known closed form of ``P[(l), (1^m)]`` for ``l >= m``."""
    total = 0 * ONE
    for n in range(m + 1):
        num = (binom_poly(E + n - 2, n) * binom_poly(E + l + m - n - 1, m - n)
               * binom_poly(F + 1, n) * binom_poly(F - m, l - n))
        den = comb(l + m - n + 1, n) * comb(l + m - 2 * n, m - n)
        total = total + num * Fraction(1, den)
    return total


def closed_form_21_21() -> BivarPoly:
    """Known simplified form of ``P[(2,1), (2,1)]``."""
    return (E * (E * E - 1) * F * (F * F - 1) * Fraction(1, 9)
            - E * E * F * F + E * E + 2 * E * F + F * F - 4)


def closed_form_21_21_terms() -> BivarPoly:
    """Term-by-term sum over the support for ``P[(2,1), (2,1)]``."""
    e, f = E, F
    return (
        (e * (e - 2) * (e - 3) * f * (f + 2) * (f + 3) + e * (e + 2) * (e + 3) * f * (f - 2) * (f - 3)) * Fraction(1, 80)
        + ((e - 3) * (e - 2) * (e + 2) * (f - 2) * (f + 2) * (f + 3)
           + (e - 2) * (e + 2) * (e + 3) * (f - 3) * (f - 2) * (f + 2)) * Fraction(1, 72)
        + (e * (e - 1) * (e - 2) * f * (f + 1) * (f + 2) + e * (e + 1) * (e + 2) * f * (f - 1) * (f - 2)) * Fraction(1, 144)
        + e * (e - 2) * (e + 2) * f * (f - 2) * (f + 2) * Fraction(2, 45)
    )


def row(n: int) -> Partition:
    return Partition([n]) if n else EMPTY


def column(n: int) -> Partition:
    return Partition([1] * n)


def verify_closed_forms(max_size: int = 5) -> Report:
    report = Report("closed-forms")
    for l in range(1, max_size + 1):
        for m in range(1, max_size + 1):
            report.compare("P[(l),(m)] closed form", {"l": l, "m": m},
                           p_coefficient_symbolic(row(l), row(m)), closed_form_rows(l, m))
            report.compare("P[(1^l),(1^m)] closed form", {"l": l, "m": m},
                           p_coefficient_symbolic(column(l), column(m)), closed_form_columns(l, m))
    p21 = p_coefficient_symbolic((2, 1), (2, 1))
    report.compare("P[(2,1),(2,1)] simplified form", {}, p21, closed_form_21_21())
    report.compare("P[(2,1),(2,1)] lead coefficient", {}, p21.coefficient_of(3, 3), Fraction(1, 9))
    return report


def mixed_closed_form_report(max_l: int = 4) -> Report:
    """Compare the known closed form of ``P[(l), (1^m)]`` against the defining sum, ``1 <= m <= l``."""
    report = Report("mixed-closed-form")
    for l in range(1, max_l + 1):
        for m in range(1, l + 1):
            report.compare("P[(l),(1^m)] closed form", {"l": l, "m": m},
                           p_coefficient_symbolic(row(l), column(m)), closed_form_row_column(l, m))
    return report
