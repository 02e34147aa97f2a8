"""Verification suites: families of identity instances at a chosen scale.

Each suite builds a list of ``(function, args)`` instances whose results are
:class:`Report` objects; instances are independent, so they may run in a
process pool.  Results are merged in instance order, so output does not
depend on scheduling.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import oracle, tensor_chern as tc
from .partitions import (
    hook_product,
    partitions_in_box,
    partitions_up_to_weight,
)
from .polyring import integer_valued_on_grid
from .report import Check, Report


@dataclass
class RunReport:
    suite: str
    instances: int = 0
    checks: list[Check] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def render(self) -> str:
        lines = [
            f"suite: {self.suite}",
            f"instances: {self.instances}",
            f"checks: {len(self.checks)}",
            f"failures: {len(self.failures)}",
            f"wall_time: {self.wall_time:.2f}s",
        ]
        lines += ["  " + c.line() for c in self.failures]
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def _call(task) -> list[Check]:
    func, args = task
    return func(*args).checks


def run_tasks(name: str, tasks: list, jobs: int = 1) -> RunReport:
    start = time.perf_counter()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_call, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        chunks = [_call(t) for t in tasks]
    report = RunReport(name, len(tasks))
    for chunk in chunks:
        report.checks.extend(chunk)
    report.wall_time = time.perf_counter() - start
    return report


def pairs_up_to(total: int):
    for lam in partitions_up_to_weight(total):
        for mu in partitions_up_to_weight(total - lam.weight):
            yield lam, mu


# small wrappers so every task returns a Report


def _corollary(lam, mu) -> Report:
    report = Report("corollary")
    report.compare("sum_nu h(l)h(m)/h(nu) c^nu_{lm} = 1", {"lambda": lam, "mu": mu},
                   tc.corollary_sum(lam, mu), 1)
    return report


def _integrality(lam, mu, radius) -> Report:
    report = Report("integrality")
    p = tc.p_coefficient_symbolic(lam, mu)
    report.compare(f"P integer-valued on [-{radius},{radius}]^2", {"lambda": lam, "mu": mu},
                   integer_valued_on_grid(p, range(-radius, radius + 1)), True)
    return report


def _nu_weight(nu) -> Report:
    report = Report("nu-weight")
    report.compare("h(rect)/((l(nu)|nu)(nu_1|nu*)h(nu bar)) = 1/h(nu)", {"nu": nu},
                   tc.nu_weight_via_regions(nu), Fraction(1, hook_product(nu)))
    return report


def _routes(lam, mu, e_val, f_val) -> Report:
    report = Report("routes")
    ref = tc.p_coefficient_at(lam, mu, e_val, f_val)
    inputs = {"lambda": lam, "mu": mu, "e": e_val, "f": f_val}
    if tc.lascoux_domain(lam, mu, e_val, f_val):
        report.compare("Lascoux = P", inputs, tc.p_via_lascoux(lam, mu, e_val, f_val), ref)
    if tc.rectangle_domain(lam, mu, e_val, f_val):
        report.compare("rectangle = P", inputs, tc.p_via_rectangle(lam, mu, e_val, f_val), ref)
        report.compare("shifted Schur = P", inputs, tc.p_via_shifted_schur(lam, mu, e_val, f_val), ref)
    return report


def _closed_forms(max_size) -> Report:
    return tc.verify_closed_forms(max_size).extend(tc.mixed_closed_form_report(min(max_size, 4)))


# suite builders


def oracle_tasks(ranks, degree: int, segre_ranks=None, segre_degree: int | None = None) -> list:
    tasks = [(oracle.master_check_chern, (e, f, degree)) for e in ranks for f in ranks]
    for e, f in segre_ranks if segre_ranks is not None else [(e, f) for e in ranks for f in ranks]:
        tasks.append((oracle.master_check_segre, (e, f, degree if segre_degree is None else segre_degree)))
    return tasks


def proof_chain_tasks(ranks, boxes, max_mu: int, max_split: int) -> list:
    tasks = []
    for e in ranks:
        for f in ranks:
            tasks.append((oracle.cauchy_check, (e, f)))
            tasks.append((oracle.dual_cauchy_check, (e, f)))
    for e, f in boxes:
        for lam in partitions_in_box(e, f):
            tasks.append((oracle.binomial_theorem_check, (lam, e, f)))
    for mu in partitions_up_to_weight(max_mu):
        for g in range(1, max_split):
            for h in range(1, max_split - g + 1):
                tasks.append((oracle.direct_sum_schur_check, (mu, g, h)))
    return tasks


def pair_tasks(func, total: int) -> list:
    return [(func, (lam, mu)) for lam, mu in pairs_up_to(total)]


def addition_tasks(count: int, max_weight: int = 4, seed: int = 0,
                   e_range=(1, 4), g_range=(-3, 3)) -> list:
    rng = random.Random(seed)
    pool = partitions_up_to_weight(max_weight)
    tasks = []
    for _ in range(count):
        lam, phi, psi = (rng.choice(pool) for _ in range(3))
        e_val = rng.randint(*e_range)
        g_val, h_val = rng.randint(*g_range), rng.randint(*g_range)
        tasks.append((tc.verify_addition_identity, (lam, phi, psi, e_val, g_val, h_val)))
    return tasks


def reduction_tasks(total: int, ranks) -> list:
    tasks = []
    for lam, mu in pairs_up_to(total):
        for e_val in ranks:
            for f_val in ranks:
                for m in range(max(1, len(lam)), e_val + 1):
                    for p in range(max(1, len(mu)), f_val + 1):
                        tasks.append((tc.verify_reduction, (lam, mu, e_val, f_val, m, p)))
    return tasks


def lemma_tasks(rect_max: int, nu_max: int, region_max: int) -> list:
    tasks = []
    for e in range(1, rect_max + 1):
        for f in range(1, rect_max + 1):
            for lam in partitions_in_box(e, f):
                tasks.append((tc.verify_lemma_rectangle, (lam, e, f)))
    for nu in partitions_up_to_weight(nu_max):
        tasks.append((tc.verify_lemma_hooks, (nu,)))
        tasks.append((_nu_weight, (nu,)))
    for e in range(1, region_max + 1):
        for f in range(1, region_max + 1):
            for nu in partitions_in_box(e, f):
                tasks.append((tc.verify_region_quotients, (nu, e, f)))
    return tasks


def route_tasks(max_part_weight: int, ranks) -> list:
    pool = partitions_up_to_weight(max_part_weight)
    return [(_routes, (lam, mu, e, f)) for lam in pool for mu in pool for e in ranks for f in ranks]


def integrality_tasks(total: int, radius: int = 8) -> list:
    return [(_integrality, (lam, mu, radius)) for lam, mu in pairs_up_to(total)]


SUITES = (
    "oracle", "proof-chain", "symmetry", "vanishing", "recursion", "addition",
    "reduction", "leading", "corollary", "lemmas", "closed-forms", "routes",
    "integrality", "segre",
)


def build_tasks(name: str, max_weight: int, ranks) -> list:
    """Instances for one suite at CLI scale (``max_weight``, rank range)."""
    ranks = list(ranks)
    top = max(ranks)
    if name == "oracle":
        return oracle_tasks(ranks, max_weight)
    if name == "proof-chain":
        boxes = [(e, f) for e in ranks for f in ranks if e * f <= 6]
        return proof_chain_tasks(ranks, boxes, max_weight, max_weight)
    if name == "symmetry":
        return pair_tasks(tc.verify_symmetries, max_weight)
    if name == "vanishing":
        return pair_tasks(tc.verify_vanishing, max_weight)
    if name == "recursion":
        return pair_tasks(tc.verify_recursion_rank_step, max_weight)
    if name == "addition":
        return addition_tasks(100, max_weight=min(max_weight, 4))
    if name == "reduction":
        return reduction_tasks(max_weight, ranks)
    if name == "leading":
        return pair_tasks(tc.leading_term_check, max_weight)
    if name == "corollary":
        return pair_tasks(_corollary, max_weight)
    if name == "lemmas":
        return lemma_tasks(top, 2 * max_weight, top)
    if name == "closed-forms":
        return [(_closed_forms, (max_weight,))]
    if name == "routes":
        return route_tasks(max_weight // 2 or 1, ranks)
    if name == "integrality":
        return integrality_tasks(max_weight)
    if name == "segre":
        return pair_tasks(tc.verify_q_relation, max_weight)
    raise KeyError(name)


def run_suite(name: str, max_weight: int, ranks, jobs: int = 1) -> RunReport:
    if name == "all":
        merged = RunReport("all")
        start = time.perf_counter()
        for sub in SUITES:
            part = run_suite(sub, max_weight, ranks, jobs)
            merged.instances += part.instances
            merged.checks.extend(part.checks)
        merged.wall_time = time.perf_counter() - start
        return merged
    return run_tasks(name, build_tasks(name, max_weight, ranks), jobs)
