from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from seifert_cs import (
    IndexOutOfRange,
    InvalidAlpha,
    NegativeGenus,
    NonContactData,
    NotCoprime,
    SeifertData,
    degree,
    twist_move,
    validate,
    vol_isotropy_squared,
)
from oracles import random_generator, random_seifert_raw


@st.composite
def seifert_data(draw, max_pairs=4):
    pairs = []
    for _ in range(draw(st.integers(0, max_pairs))):
        alpha = draw(st.integers(1, 30))
        beta = draw(st.integers(-100, 100).filter(lambda b, a=alpha: __import__("math").gcd(a, b) == 1))
        pairs.append((alpha, beta))
    return validate(draw(st.integers(0, 3)), draw(st.integers(-10, 10)), pairs)


def test_validate_empty():
    assert validate(0, 1, []) == SeifertData(0, 1, ())


def test_validate_keeps_order():
    sd = validate(0, 0, [(2, 1), (3, 1), (5, 1)])
    assert sd.pairs == ((2, 1), (3, 1), (5, 1))


@pytest.mark.parametrize(
    "genus, n, pairs, exc",
    [
        (0, 0, [(4, 2)], NotCoprime),
        (0, 0, [(0, 1)], InvalidAlpha),
        (0, 0, [(-3, 1)], InvalidAlpha),
        (-1, 0, [], NegativeGenus),
    ],
)
def test_validate_errors(genus, n, pairs, exc):
    with pytest.raises(exc):
        validate(genus, n, pairs)


def test_alpha_one_pairs_accepted():
    sd = validate(0, 0, [(1, 5)])
    assert degree(sd) == 5


@pytest.mark.parametrize(
    "sd, d",
    [
        (validate(0, 1, []), Fraction(1)),
        (validate(0, 0, [(2, 1), (3, 1), (5, 1)]), Fraction(31, 30)),
        (validate(0, -1, [(2, 1)]), Fraction(-1, 2)),
    ],
)
def test_degree(sd, d):
    assert degree(sd) == d


def test_vol():
    assert vol_isotropy_squared(validate(0, 1, [])) == 1
    assert vol_isotropy_squared(validate(0, 0, [(2, 1), (2, 1)])) == 1
    with pytest.raises(NonContactData):
        vol_isotropy_squared(validate(0, -1, [(2, 1)]))
    with pytest.raises(NonContactData):
        vol_isotropy_squared(validate(0, 0, []))


def test_twist_move_examples():
    assert twist_move(validate(0, 0, [(3, 1)]), 1, 1) == validate(0, -1, [(3, 4)])
    assert twist_move(validate(0, 1, [(2, 1)]), 1, -1) == validate(0, 2, [(2, -1)])
    with pytest.raises(IndexOutOfRange):
        twist_move(validate(0, 1, [(2, 1)]), 2, 1)
    with pytest.raises(IndexOutOfRange):
        twist_move(validate(0, 1, [(2, 1)]), 0, 1)


def test_twist_move_preserves_degree_random():
    rng = random_generator(11)
    checked = 0
    while checked < 100:
        sd = validate(*random_seifert_raw(rng, contact=False))
        if not sd.pairs:
            continue
        j, m = rng.randint(1, len(sd.pairs)), rng.randint(-20, 20)
        assert degree(twist_move(sd, j, m)) == degree(sd)
        checked += 1


@given(seifert_data(), st.data())
def test_twist_invariance_property(sd, data):
    if not sd.pairs:
        return
    j = data.draw(st.integers(1, len(sd.pairs)))
    m = data.draw(st.integers(-50, 50))
    assert degree(twist_move(sd, j, m)) == degree(sd)


@given(seifert_data())
def test_degree_additive_in_n(sd):
    assert degree(validate(sd.genus, sd.n + 1, sd.pairs)) == degree(sd) + 1


@given(seifert_data())
def test_vol_equals_degree(sd):
    if degree(sd) > 0:
        assert vol_isotropy_squared(sd) == degree(sd)


@given(seifert_data())
def test_validate_round_trip(sd):
    assert validate(sd.genus, sd.n, sd.pairs) == sd
