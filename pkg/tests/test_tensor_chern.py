from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import partitions
from tensorchern import tensor_chern as tc
from tensorchern.errors import DomainError, InvariantViolation
from tensorchern.partitions import EMPTY, Partition, conjugate, content_poly, hook_product, partitions_up_to_weight
from tensorchern.polyring import E, F, ONE

ONE_BOX = Partition((1,))


class TestSymbolic:
    def test_examples(self):
        assert tc.p_coefficient_symbolic((), ()) == ONE
        assert tc.p_coefficient_symbolic((1,), (1,)) == E * F - 1
        known = E * (E**2 - 1) * F * (F**2 - 1) * Fraction(1, 9) - E**2 * F**2 + E**2 + 2 * E * F + F**2 - 4
        assert tc.p_coefficient_symbolic((2, 1), (2, 1)) == known

    def test_term_sum_matches_simplified_form(self):
        assert tc.closed_form_21_21_terms() == tc.closed_form_21_21()

    def test_empty_mu_is_gl_dimension(self):
        for lam in partitions_up_to_weight(7):
            want = content_poly(conjugate(lam), F) * Fraction(1, hook_product(lam))
            assert tc.p_coefficient_symbolic(lam, ()) == want

    def test_degrees(self):
        for lam in partitions_up_to_weight(5):
            for mu in partitions_up_to_weight(5):
                p = tc.p_coefficient_symbolic(lam, mu)
                assert p.deg_e() == mu.weight
                assert p.deg_f() == lam.weight


class TestPointwise:
    def test_examples(self):
        assert tc.p_coefficient_at((1,), (1,), 2, 3) == 5
        assert tc.p_coefficient_at((1,), (2,), 1, 4) == 0
        assert tc.p_coefficient_at((1,), (), 3, 7) == 7

    def test_non_integer_value_is_a_defect(self):
        with pytest.raises(InvariantViolation):
            tc._integral_value(E * Fraction(1, 2), 1, 0, "probe")


class TestSegre:
    def test_examples(self):
        assert tc.q_coefficient_symbolic((), ()) == ONE
        assert tc.q_coefficient_symbolic((1,), (1,)) == E * F + 1
        assert tc.q_coefficient_symbolic((1,), ()) == F

    def test_relation_to_p(self):
        for lam in partitions_up_to_weight(4):
            for mu in partitions_up_to_weight(4):
                assert tc.verify_q_relation(lam, mu).passed


class TestLascoux:
    def test_examples(self):
        assert tc.p_via_lascoux((), (), 1, 1) == 1
        assert tc.p_via_lascoux((1,), (1,), 2, 2) == 3
        assert tc.p_via_lascoux((1,), (1,), 1, 3) == 2

    @pytest.mark.parametrize("lam,mu,e,f", [((1, 1), (), 1, 3), ((3,), (), 2, 2), ((), (2,), 1, 3), ((), (1, 1), 2, 1)])
    def test_domain_guard(self, lam, mu, e, f):
        with pytest.raises(DomainError):
            tc.p_via_lascoux(lam, mu, e, f)


class TestRectangleRoute:
    def test_examples(self):
        assert tc.p_via_rectangle((), (), 2, 2) == 1
        assert tc.p_via_rectangle((1,), (1,), 2, 2) == 3
        assert tc.closed_form_21_21().evaluate(3, 3) == 15
        assert tc.p_via_rectangle((2, 1), (2, 1), 3, 3) == 15

    def test_domain_guard(self):
        with pytest.raises(DomainError):
            tc.p_via_rectangle((3,), (), 2, 2)
        with pytest.raises(DomainError):
            tc.p_via_rectangle((), (1, 1, 1), 2, 2)


class TestShiftedRoute:
    def test_examples(self):
        assert tc.p_via_shifted_schur((), (), 1, 1) == 1
        assert tc.p_via_shifted_schur((1,), (1,), 2, 2) == 3
        assert tc.p_via_shifted_schur((1,), (), 2, 3) == 3

    def test_domain_guard(self):
        with pytest.raises(DomainError):
            tc.p_via_shifted_schur((1, 1, 1), (), 2, 2)


class TestReduction:
    def test_examples(self):
        assert tc.p_via_reduction((), (), 3, 2, 1, 1) == 1
        assert tc.p_via_reduction((1,), (1,), 3, 3, 1, 1) == 8
        assert tc.p_via_reduction((2,), (1,), 3, 4, 2, 1) == tc.p_coefficient_at((2,), (1,), 3, 4)

    def test_domain_guard(self):
        with pytest.raises(DomainError):
            tc.p_via_reduction((1, 1), (), 3, 3, 1, 1)
        with pytest.raises(DomainError):
            tc.p_via_reduction((1,), (), 2, 3, 3, 1)


class TestExpansions:
    def test_chern_examples(self):
        assert tc.chern_expansion(1, 1, 1).terms == {(EMPTY, EMPTY): 1, (ONE_BOX, EMPTY): 1, (EMPTY, ONE_BOX): 1}
        assert tc.chern_expansion(2, 3, 1).terms == {(EMPTY, EMPTY): 1, (ONE_BOX, EMPTY): 3, (EMPTY, ONE_BOX): 2}
        verbose = tc.chern_expansion(1, 1, 2, include_zero=True).terms
        assert verbose[(ONE_BOX, ONE_BOX)] == 0
        assert (ONE_BOX, ONE_BOX) not in tc.chern_expansion(1, 1, 2).terms

    def test_segre_examples(self):
        assert tc.segre_expansion(1, 1, 1).terms == {(EMPTY, EMPTY): 1, (ONE_BOX, EMPTY): 1, (EMPTY, ONE_BOX): 1}
        assert tc.segre_expansion(2, 2, 2).terms[(ONE_BOX, ONE_BOX)] == 5
        assert tc.segre_expansion(4, 5, 0).terms == {(EMPTY, EMPTY): 1}

    def test_vanishing_pairs_omitted_unless_requested(self):
        col = Partition((1, 1))
        assert (col, EMPTY) not in tc.chern_expansion(1, 3, 2).terms
        # s_{1,1} vanishes on a line bundle; its coefficient is (f|(2))/h((1,1)) = 12/2
        assert tc.chern_expansion(1, 3, 2, include_vanishing=True).terms[(col, EMPTY)] == 6

    def test_degree_bound_and_constant_term(self):
        for kind in (tc.chern_expansion, tc.segre_expansion):
            exp = kind(2, 3, 4)
            assert exp.terms[(EMPTY, EMPTY)] == 1
            assert all(lam.weight + mu.weight <= 4 for lam, mu in exp.terms)

    def test_symbolic_mode(self):
        exp = tc.chern_expansion(None, None, 2)
        assert exp.terms[(ONE_BOX, ONE_BOX)] == E * F - 1

    def test_ordering(self):
        keys = [k for k, _ in tc.chern_expansion(1, 1, 1).items()]
        assert keys == [(EMPTY, EMPTY), (ONE_BOX, EMPTY), (EMPTY, ONE_BOX)]

    def test_json_round_trip(self):
        for exp in (tc.chern_expansion(2, 2, 3), tc.chern_expansion(None, None, 2)):
            again = tc.SchurPairExpansion.from_json(exp.to_json())
            assert again == exp
            assert again.to_json() == exp.to_json()


class TestRegions:
    def test_empty_nu(self):
        assert tc.region_hook_quotients((), 2, 2) == (1, 1, 1, 1)

    def test_single_box_product_matches_global(self):
        got = tc.region_hook_quotients((1,), 2, 2)
        # h(2x2) = 12 and the complement (2,1) has hook product 3
        assert got[0] * got[1] * got[2] * got[3] == 4
        assert tc.verify_region_quotients((1,), 2, 2).passed

    def test_full_rectangle(self):
        # nu fills the rectangle: only the SE block is nonempty and its complement is empty
        assert tc.region_hook_quotients((2, 2), 2, 2) == (1, 1, 1, hook_product((2, 2)))
        assert tc.verify_region_quotients((2, 2), 2, 2).passed

    def test_off_diagonal_formulas(self):
        nu, e, f = Partition((2, 1)), 3, 4
        no, ne, so, se = tc.region_hook_quotients(nu, e, f)
        assert ne == Fraction(content_poly(conjugate(nu), f), content_poly(conjugate(nu), 2))
        assert so == Fraction(content_poly(nu, e), content_poly(nu, 2))

    def test_domain_guard(self):
        with pytest.raises(DomainError):
            tc.region_hook_quotients((3,), 2, 2)


class TestIdentities:
    @pytest.mark.parametrize("lam,mu", [((), ()), ((1,), (2,)), ((2, 1), (2, 1))])
    def test_symmetries(self, lam, mu):
        assert tc.verify_symmetries(lam, mu, samples=[(2, 3), (-1, 4)]).passed

    def test_21_21_is_self_symmetric(self):
        p = tc.p_coefficient_symbolic((2, 1), (2, 1))
        assert p.swap() == p

    def test_vanishing(self):
        report = tc.verify_vanishing((1,), (2,))
        assert report.passed and len(report) == 1
        assert tc.p_coefficient_symbolic((1,), (2,)).compose(1, F).is_zero()
        assert tc.verify_vanishing((2,), (1,)).passed
        assert tc.p_coefficient_symbolic((2,), (1,)).compose(E, 1).is_zero()
        assert len(tc.verify_vanishing((1,), (1,))) == 0

    def test_recursion_examples(self):
        assert tc.p_coefficient_symbolic((), (1,)) == E
        for lam, mu in [((), (1,)), ((1,), (1,)), ((2, 1), (2, 1))]:
            assert tc.verify_recursion_rank_step(lam, mu).passed

    def test_addition_examples(self):
        assert tc.addition_sides((), (), (), 3, 2, 1) == (1, 1)
        assert tc.addition_sides((1,), (1,), (), 2, 1, 2) == (5, 5)
        assert tc.verify_addition_identity((1,), (1,), (1,), 2, 2, -1).passed

    def test_leading_term(self):
        assert tc.leading_term_check((), ()).passed
        assert tc.leading_term_check((1,), (1,)).passed
        assert tc.p_coefficient_symbolic((2, 1), (2, 1)).coefficient_of(3, 3) == Fraction(1, 9)

    def test_corollary_examples(self):
        assert tc.corollary_sum((), ()) == 1
        assert tc.corollary_sum((1,), (1,)) == 1
        assert tc.corollary_sum((2, 1), (2, 1)) == 1

    def test_lemma_examples(self):
        assert tc.verify_lemma_rectangle((2, 1), 2, 3).passed
        assert tc.verify_lemma_hooks((3, 1)).passed
        assert tc.nu_weight_via_regions((3, 1)) == Fraction(1, hook_product((3, 1)))

    def test_failing_identity_is_reported_with_values(self):
        report = tc.Report("probe")
        report.compare("probe", {"lambda": Partition((2, 1))}, E, F)
        (check,) = report.failures
        assert (check.lhs, check.rhs, check.inputs) == ("e", "f", "(lambda=(2,1))")


@settings(max_examples=40, deadline=None)
@given(partitions(3, 3), partitions(3, 3))
def test_symmetries_property(lam, mu):
    assert tc.verify_symmetries(lam, mu).passed
    assert tc.verify_recursion_rank_step(lam, mu).passed
