import random
from fractions import Fraction
from itertools import product

import pytest

from tensorchern import oracle
from tensorchern.errors import DomainError, OracleLimitError
from tensorchern.oracle import (
    PolyRing,
    bialternant,
    complete_symmetric,
    elementary_symmetric,
    expand_tensor_chern,
    expand_tensor_segre,
    reconstruct,
    schur_pair_decompose,
    schur_poly,
)
from tensorchern.partitions import EMPTY, Partition, partitions_of, partitions_up_to_weight
from tensorchern.polyring import determinant

ONE_BOX = Partition((1,))


def tableau_schur(lam, n, ring):
    """s_lam in the first n variables by summing x^T over semistandard tableaux."""
    lam = Partition(lam)
    boxes = list(lam.boxes())
    terms = {}
    for filling in product(range(n), repeat=len(boxes)):
        cell = dict(zip(boxes, filling))
        if all(
            ((i, j + 1) not in cell or cell[(i, j + 1)] >= v) and ((i + 1, j) not in cell or cell[(i + 1, j)] > v)
            for (i, j), v in cell.items()
        ):
            exps = [0] * ring.nvars
            for v in filling:
                exps[v] += 1
            terms[tuple(exps)] = terms.get(tuple(exps), 0) + 1
    return oracle.MultiPoly(ring, terms)


def test_expand_examples():
    ring = PolyRing(1, 1, 1)
    assert expand_tensor_chern(1, 1, 1) == 1 + ring.var(0) + ring.var(1)
    p = expand_tensor_chern(2, 1, None)
    assert p.coefficient((0, 0, 0)) == 1
    assert p.coefficient((1, 1, 0)) == 1
    assert p.coefficient((0, 0, 2)) == 1
    assert len(expand_tensor_chern(1, 1, 0)) == 1


def test_chern_times_negated_segre_is_one():
    for e, f in [(1, 1), (1, 2), (2, 2)]:
        d = 4
        product_ = expand_tensor_chern(e, f, d) * expand_tensor_segre(e, f, d).negate_roots()
        assert product_ == 1


def test_elementary_and_complete_examples():
    ring = PolyRing(3, 0)
    x = [ring.var(k) for k in range(3)]
    assert elementary_symmetric(0, ring.xs, ring) == 1
    assert elementary_symmetric(2, ring.xs, ring) == x[0] * x[1] + x[0] * x[2] + x[1] * x[2]
    assert elementary_symmetric(4, ring.xs, ring).is_zero()
    assert len(complete_symmetric(2, ring.xs, ring)) == 6
    assert complete_symmetric(-1, ring.xs, ring).is_zero()


def test_schur_poly_examples():
    ring = PolyRing(2, 0)
    x1, x2 = ring.var(0), ring.var(1)
    assert schur_poly((), ring.xs, ring) == 1
    assert schur_poly((1,), ring.xs, ring) == x1 + x2
    assert schur_poly((1, 1), ring.xs, ring) == x1 * x2
    assert schur_poly((2,), ring.xs, ring) == x1 * x1 + x1 * x2 + x2 * x2
    assert schur_poly((1, 1, 1), ring.xs, ring).is_zero()


def test_schur_poly_matches_tableaux():
    for n in range(1, 4):
        ring = PolyRing(n, 0)
        for lam in partitions_up_to_weight(5):
            assert schur_poly(lam, ring.xs, ring) == tableau_schur(lam, n, ring), (lam, n)


def test_giambelli_rows_are_complete_symmetric():
    ring = PolyRing(3, 0)
    for k in range(7):
        assert schur_poly([k] if k else [], ring.xs, ring) == complete_symmetric(k, ring.xs, ring)
        if k <= 3:
            assert schur_poly([1] * k, ring.xs, ring) == elementary_symmetric(k, ring.xs, ring)


def test_jacobi_trudi_agrees_with_giambelli():
    ring = PolyRing(3, 0)
    h = [complete_symmetric(k, ring.xs, ring) for k in range(8)]
    for n in range(1, 6):
        for lam in partitions_of(n):
            size = len(lam)
            matrix = [
                [h[lam.part(i) - i + j] if lam.part(i) - i + j >= 0 else 0 for j in range(1, size + 1)]
                for i in range(1, size + 1)
            ]
            assert determinant(matrix) == schur_poly(lam, ring.xs, ring)


def test_bialternant_matches_schur_poly():
    rng = random.Random(7)
    for n in range(1, 5):
        ring = PolyRing(n, 0)
        for lam in partitions_up_to_weight(6):
            values = set()
            while len(values) < n:
                values.add(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
            values = sorted(values)
            assert bialternant(lam, values) == schur_poly(lam, ring.xs, ring).evaluate(values)


def test_decompose_examples():
    got = schur_pair_decompose(expand_tensor_chern(1, 1, 1))
    assert got == {(EMPTY, EMPTY): 1, (ONE_BOX, EMPTY): 1, (EMPTY, ONE_BOX): 1}
    got = schur_pair_decompose(expand_tensor_chern(2, 2, 2))
    assert got[(ONE_BOX, ONE_BOX)] == 3
    assert got[(ONE_BOX, EMPTY)] == 2


def test_master_checks_small():
    assert oracle.master_check_chern(2, 2, 4).passed
    assert oracle.master_check_segre(2, 1, 4).passed


def test_reconstruct_round_trip():
    rng = random.Random(3)
    ring = PolyRing(2, 2)
    pool = [(a, b) for a in partitions_up_to_weight(3) for b in partitions_up_to_weight(3)
            if len(a) <= 2 and len(b) <= 2]
    for _ in range(10):
        coeffs = {key: rng.randint(-4, 4) for key in rng.sample(pool, 5)}
        coeffs = {k: c for k, c in coeffs.items() if c}
        assert schur_pair_decompose(reconstruct(coeffs, ring)) == coeffs


def test_asymmetric_input_rejected():
    ring = PolyRing(2, 1)
    with pytest.raises(DomainError):
        schur_pair_decompose(ring.var(0))


def test_mutated_coefficient_is_detected():
    p = expand_tensor_chern(2, 2, 3)
    ring = p.ring
    good = schur_pair_decompose(p)
    mutated = dict(good)
    mutated[(ONE_BOX, ONE_BOX)] += 1
    assert reconstruct(mutated, ring) != p
    assert reconstruct(good, ring) == p


def test_cauchy_identities():
    for e in range(1, 3):
        for f in range(1, 4):
            assert oracle.cauchy_check(e, f).passed
            assert oracle.dual_cauchy_check(e, f).passed


def test_binomial_and_direct_sum():
    assert oracle.binomial_theorem_check((1,), 2, 2).passed
    assert oracle.direct_sum_schur_check((2, 1), 2, 2).passed
    with pytest.raises(DomainError):
        oracle.binomial_theorem_check((3,), 2, 2)


def test_swapping_bundles_swaps_pairs():
    got = schur_pair_decompose(expand_tensor_chern(2, 3, 4))
    swapped = schur_pair_decompose(expand_tensor_chern(3, 2, 4))
    assert {(mu, lam): c for (lam, mu), c in got.items()} == swapped


def test_term_cap(monkeypatch):
    monkeypatch.setenv("CTP_MAX_TERMS", "5")
    with pytest.raises(OracleLimitError):
        expand_tensor_chern(2, 2, 4)


def test_term_cap_must_be_integer(monkeypatch):
    monkeypatch.setenv("CTP_MAX_TERMS", "many")
    with pytest.raises(OracleLimitError):
        oracle.max_terms()
