import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goodstein.budget import Budget
from goodstein.errors import BudgetExceededError, InvalidBaseError, UnderflowError
from goodstein.hereditary import (
    HereditaryRep,
    bump,
    compare_values,
    decompose,
    decrement,
    evaluate,
    max_coefficient,
    rank,
    rank_value,
    rebase,
    validate_canonical,
    zero,
)


def rep_of(m, b):
    return validate_canonical(decompose(m, b))


class TestDecompose:
    def test_one_in_base_two(self):
        assert decompose(1, 2) == HereditaryRep(2, ((1, zero(2)),))

    def test_three_in_base_two(self):
        rep = decompose(3, 2)
        assert [(c, evaluate(e)) for c, e in rep.terms] == [(1, 1), (1, 0)]

    def test_zero_is_empty_sum(self):
        assert decompose(0, 5).is_zero()

    def test_nineteen_in_base_two(self):
        rep = rep_of(19, 2)
        assert evaluate(rep) == 19
        assert [evaluate(e) for _, e in rep.terms] == [4, 1, 0]

    def test_rejects_base_below_two(self):
        with pytest.raises(InvalidBaseError):
            decompose(5, 1)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            decompose(-1, 2)


class TestEvaluate:
    def test_three(self):
        assert evaluate(decompose(3, 2)) == 3

    def test_zero(self):
        assert evaluate(zero(7)) == 0

    def test_twenty_six(self):
        assert evaluate(decompose(26, 3)) == 26

    def test_digit_budget(self):
        towering = bump(bump(decompose(16, 2)))  # 4^(4^4) = 4^256, 155 digits
        assert len(str(evaluate(towering))) == 155
        with pytest.raises(BudgetExceededError):
            evaluate(towering, Budget(max_digits=100))


class TestRank:
    def test_leading_exponent_as_tree(self):
        assert evaluate(rank(decompose(19, 2))) == 4

    def test_constant_rep(self):
        assert rank(decompose(7, 9)).is_zero()

    def test_zero_rep_by_convention(self):
        assert rank(zero(2)).is_zero()

    def test_rank_value(self):
        assert rank_value(decompose(19, 2)) == 4
        assert rank_value(decompose(4, 2)) == 2
        assert rank_value(decompose(3, 4)) == 0


class TestBump:
    def test_three_to_base_three(self):
        bumped = bump(decompose(3, 2))
        assert bumped.base == 3
        assert evaluate(bumped) == 4

    def test_constant_keeps_value(self):
        bumped = bump(decompose(2, 3))
        assert bumped.base == 4 and evaluate(bumped) == 2

    def test_zero(self):
        bumped = bump(zero(5))
        assert bumped.is_zero() and bumped.base == 6

    def test_tower(self):
        assert evaluate(bump(decompose(16, 2))) == 3**27

    def test_preserves_shape(self):
        rep = decompose(19, 2)
        bumped = validate_canonical(bump(rep))
        assert [c for c, _ in bumped.terms] == [c for c, _ in rep.terms]


class TestDecrement:
    def test_drops_constant(self):
        rep = bump(decompose(3, 2))  # 1*3^1 + 1*3^0
        assert evaluate(decrement(rep)) == 3
        assert len(decrement(rep).terms) == 1

    def test_borrow_single_power(self):
        rep = bump(decompose(2, 2))  # 1*3^1
        after = decrement(rep)
        assert [(c, evaluate(e)) for c, e in after.terms] == [(2, 0)]

    def test_borrow_expansion_pattern(self):
        after = validate_canonical(decrement(decompose(27, 3)))
        assert [(c, evaluate(e)) for c, e in after.terms] == [(2, 2), (2, 1), (2, 0)]
        assert evaluate(after) == 26

    def test_underflow(self):
        with pytest.raises(UnderflowError):
            decrement(zero(4))

    def test_borrow_budget(self):
        rep = bump(decompose(16, 2))  # 1*3^(3^3): borrow needs 27 terms
        with pytest.raises(BudgetExceededError):
            decrement(rep, Budget(max_borrow_terms=10))
        assert len(decrement(rep, Budget(max_borrow_terms=27)).terms) == 27


class TestRebase:
    def test_small(self):
        assert rebase(decompose(3, 2), 5) == 6

    def test_identity_substitution(self):
        for m in (0, 7, 19, 100):
            rep = decompose(m, 3)
            assert rebase(rep, 3) == m

    def test_no_renormalization(self):
        assert rebase(decompose(8, 3), 10) == 22
        assert rebase(decompose(8, 3), 2) == 6  # digits 2 exceed the new base 2


class TestCompareValues:
    def test_orders_same_base_reps(self):
        reps = [decompose(m, 3) for m in range(50)]
        for a in range(50):
            for b in range(50):
                want = (a > b) - (a < b)
                assert compare_values(reps[a], reps[b]) == want

    def test_mixed_base_rejected(self):
        with pytest.raises(ValueError):
            compare_values(decompose(3, 2), decompose(3, 4))


class TestInvariants:
    @settings(max_examples=300, deadline=None)
    @given(st.integers(0, 5000), st.integers(2, 12))
    def test_round_trip(self, m, b):
        assert evaluate(rep_of(m, b)) == m

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 5000), st.integers(2, 12))
    def test_decrement_exact(self, m, b):
        assert evaluate(validate_canonical(decrement(decompose(m, b)))) == m - 1

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 3000), st.integers(2, 12))
    def test_bump_monotone(self, m, b):
        rep = decompose(m, b)
        bumped = validate_canonical(bump(rep))
        if rank_value(rep) >= 1:
            assert evaluate(bumped) > m
        else:
            assert evaluate(bumped) == m

    def test_first_step_gap(self):
        for m in range(4, 2001):
            assert evaluate(bump(decompose(m, 2))) - m > 1

    def test_max_coefficient_scans_exponents(self):
        rep = decompose(3**7 * 2, 3)  # exponent 7 = 2*3^1 + 1 carries a 2
        assert max_coefficient(rep) == 2


class TestZeroRepEquality:
    def test_zero_equal_across_bases(self):
        assert zero(2) == zero(9)
        assert hash(zero(2)) == hash(zero(9))

    def test_nonzero_needs_same_base(self):
        assert decompose(1, 2) != decompose(1, 3)
