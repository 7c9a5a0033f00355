import random

from hypothesis import given, settings
from hypothesis import strategies as st

from goodstein.budget import Budget
from goodstein.hereditary import bump, decompose
from goodstein.ordinals import (
    ZERO,
    Domination,
    Ordinal,
    compare,
    dominates_natural,
    format_ordinal,
    from_natural,
    mirror,
    parse_ordinal,
    verify_decreasing,
)
from goodstein.sequences import SeqSpec, generate


def test_mirror_of_three():
    # 1*2^1 + 1*2^0 becomes w + 1
    omega_plus_one = Ordinal(((from_natural(1), 1), (ZERO, 1)))
    assert mirror(decompose(3, 2)) == omega_plus_one


def test_mirror_of_constant_is_finite():
    assert mirror(decompose(3, 4)) == from_natural(3)


def test_mirror_of_four_is_omega_to_omega():
    omega = Ordinal(((from_natural(1), 1),))
    omega_to_omega = Ordinal(((omega, 1),))
    assert mirror(decompose(4, 2)) == omega_to_omega


def test_compare_first_two_mirrored_terms_of_seed_four():
    result = generate(SeqSpec(4), Budget(max_steps=2))
    first, second = (mirror(t.rep) for t in result.terms)
    assert compare(first, second) == 1
    assert format_ordinal(second) == "w^(2)*2 + w^(1)*2 + 2"


def test_compare_reflexive_and_finite_below_omega():
    a = mirror(decompose(26, 3))
    assert compare(a, a) == 0
    omega = Ordinal(((from_natural(1), 1),))
    assert compare(from_natural(5), omega) == -1


def test_from_natural_embedding():
    assert from_natural(0) == ZERO
    for a in range(200):
        assert compare(from_natural(a), from_natural(a + 1)) == -1
    assert compare(mirror(decompose(26, 3)), from_natural(26)) == 1


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 9999), st.integers(0, 9999))
def test_order_embedding_random_pairs(a, b):
    assert compare(from_natural(a), from_natural(b)) == (a > b) - (a < b)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 1999), st.integers(0, 1999), st.integers(2, 12))
def test_mirror_monotone_same_base(a, b, base):
    got = compare(mirror(decompose(a, base)), mirror(decompose(b, base)))
    assert got == (a > b) - (a < b)


def test_compare_transitive_on_mirrored_terms():
    pool = [mirror(t.rep) for t in generate(SeqSpec(6), Budget(max_steps=60)).terms]
    pool += [mirror(decompose(m, 4)) for m in range(0, 400, 7)]
    rng = random.Random(20240601)
    for _ in range(10_000):
        a, b, c = (rng.choice(pool) for _ in range(3))
        if compare(a, b) <= 0 and compare(b, c) <= 0:
            assert compare(a, c) <= 0


def test_dominates_natural():
    assert dominates_natural(decompose(4, 2)) is Domination.STRICT
    assert dominates_natural(decompose(3, 4)) is Domination.EQUAL
    assert dominates_natural(decompose(0, 2)) is Domination.EQUAL


def test_bump_invisible_to_mirror():
    for m in (1, 3, 19, 100, 1000):
        rep = decompose(m, 2)
        assert mirror(bump(rep)) == mirror(rep)


def test_verify_decreasing_golden_and_prefix():
    assert verify_decreasing(generate(SeqSpec(2)).terms).decreasing
    prefix = generate(SeqSpec(4), Budget(max_steps=100)).terms
    assert verify_decreasing(prefix).decreasing
    single = generate(SeqSpec(4), Budget(max_steps=1)).terms
    assert verify_decreasing(single).decreasing


def test_verify_decreasing_flags_violations():
    terms = generate(SeqSpec(2)).terms
    audit = verify_decreasing(list(reversed(terms)))
    assert not audit.decreasing and audit.violation_index == 1


def test_cnf_validity_closed_under_mirror():
    def valid(o):
        for (e1, c1), (e2, c2) in zip(o.terms, o.terms[1:]):
            assert compare(e1, e2) == 1
        for e, c in o.terms:
            assert c >= 1
            valid(e)

    for b in (2, 3, 7):
        for m in range(0, 800, 11):
            valid(mirror(decompose(m, b)))


def test_format_and_parse_notation():
    o = mirror(decompose(26, 3))
    assert format_ordinal(o) == "w^(2)*2 + w^(1)*2 + 2"
    assert parse_ordinal("w^(2)*2 + w^(1)*2 + 2") == o
    assert parse_ordinal("0") == ZERO
    assert format_ordinal(ZERO) == "0"
    nested = mirror(decompose(16, 2))
    assert parse_ordinal(format_ordinal(nested)) == nested
