"""Exact scalar, turn, and arc-interval tests."""
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcbar.rational import (ArcInterval, InvariantViolation, MismatchError,
                             Turn, arcs_overlap, circular_distance, mod_frac,
                             rat_str, parse_rat, sample_rat)

rats = st.fractions(min_value=-50, max_value=50, max_denominator=16)


@given(rats, rats, rats)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    if c != 0:
        assert (a / c) * c == a


def test_rat_strings():
    assert rat_str(F(2, 4)) == "1/2"
    assert rat_str(F(-3, 1)) == "-3"
    assert parse_rat("7/3") == F(7, 3)
    with pytest.raises(InvariantViolation):
        parse_rat("x")


@given(rats, st.sampled_from([F(1), F(1, 2), F(1, 3), F(3)]))
def test_turn_canonicalization(x, modulus):
    t = Turn(x, modulus)
    assert 0 <= t.value < modulus
    assert Turn(x + modulus, modulus) == t
    assert Turn(x - 5 * modulus, modulus) == t


def test_turn_arithmetic():
    a = Turn(F(3, 4))
    assert (a + F(1, 2)).value == F(1, 4)
    assert (a - Turn(F(1, 4))).value == F(1, 2)
    assert (-Turn(F(1, 3))).value == F(2, 3)
    with pytest.raises(MismatchError):
        a + Turn(F(0), F(1, 2))
    assert Turn(F(5, 6)).reduced(F(1, 3)).value == F(1, 6)
    with pytest.raises(MismatchError):
        Turn(F(1, 2)).reduced(F(2, 5))


def test_arc_interval_bounds():
    ArcInterval(Turn(F(0)), F(1, 2))
    with pytest.raises(InvariantViolation):
        ArcInterval(Turn(F(0)), F(2, 3))
    with pytest.raises(InvariantViolation):
        ArcInterval(Turn(F(0)), F(-1, 8))


def test_arcs_overlap_examples():
    def arc(c, h, modulus=F(1)):
        return ArcInterval(Turn(F(c), modulus), F(h))

    assert not arcs_overlap(arc(0, F(1, 8)), arc(F(1, 2), F(1, 8)), open_ends=True)
    a = arc(F(1, 3), 0)
    assert arcs_overlap(a, a, open_ends=False)
    assert not arcs_overlap(a, a, open_ends=True)
    assert not arcs_overlap(arc(0, F(1, 4)), arc(F(1, 2), F(1, 4)), open_ends=True)
    assert arcs_overlap(arc(0, F(1, 4)), arc(F(1, 2), F(1, 4)), open_ends=False)
    with pytest.raises(MismatchError):
        arcs_overlap(arc(0, F(1, 8)), arc(0, F(1, 8), modulus=F(1, 2)), True)


@settings(max_examples=200)
@given(rats, rats,
       st.fractions(min_value=0, max_value=F(1, 2), max_denominator=16),
       st.fractions(min_value=0, max_value=F(1, 2), max_denominator=16),
       rats, st.booleans())
def test_arcs_overlap_symmetric_rotation_invariant(c1, c2, h1, h2, rho, open_ends):
    a = ArcInterval(Turn(c1), h1)
    b = ArcInterval(Turn(c2), h2)
    assert arcs_overlap(a, b, open_ends) == arcs_overlap(b, a, open_ends)
    ra = ArcInterval(Turn(c1 + rho), h1)
    rb = ArcInterval(Turn(c2 + rho), h2)
    assert arcs_overlap(a, b, open_ends) == arcs_overlap(ra, rb, open_ends)


def test_circular_distance():
    assert circular_distance(F(1, 8), F(7, 8), F(1)) == F(1, 4)
    assert mod_frac(F(-1, 3), F(1)) == F(2, 3)


def test_sample_rat_contract():
    x = sample_rat(0, 8, 0, 1)
    assert 0 <= x <= 1 and x.denominator <= 8
    assert sample_rat(0, 8, 0, 1) == x
    assert sample_rat(1, 1, 0, 1) in (0, 1)
    values = {sample_rat(s, 8, 0, 1) for s in range(40)}
    assert len(values) > 5
    with pytest.raises(InvariantViolation):
        sample_rat(0, 8, F(1, 2), F(1, 2))
    with pytest.raises(InvariantViolation):
        sample_rat(0, 2, F(1, 3), F(5, 12))
