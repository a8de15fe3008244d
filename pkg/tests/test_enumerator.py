"""Walk enumeration oracle: hand-counted values, a second independent
counter, and the functional-equation residual that pins the contact
convention."""

import itertools
from fractions import Fraction as F

import pytest

from quadwalk.enumerator import (
    SeriesTruncation,
    enumerate_walks,
    functional_equation_residual,
    specialize,
)
from quadwalk.model import make_model
from tests.conftest import SUPPORTS, random_model


def brute_force_walks(model, order):
    """Independent oracle: explicit iteration over all step sequences.

    Exponential, so only usable for tiny orders; shares no code with
    the layered dynamic program.
    """
    steps = sorted(model.stepset.steps)
    terms = [{(0, 0): F(1)}]
    for n in range(1, order + 1):
        layer = {}
        for seq in itertools.product(steps, repeat=n):
            x = y = 0
            w = F(1)
            ok = True
            for (dx, dy) in seq:
                x += dx
                y += dy
                if x < 0 or y < 0:
                    ok = False
                    break
                w *= model.d(dx, dy)
                if y == 0:
                    w *= model.a
                if x == 0:
                    w *= model.b
            if ok:
                layer[(x, y)] = layer.get((x, y), F(0)) + w
        terms.append(layer)
    return terms


def test_hand_counted_s3():
    m = make_model("S3")
    s = enumerate_walks(m, 2)
    assert s[0] == {(0, 0): 1}
    assert s[1] == {(1, 1): 1}  # only (1,1) is legal from the origin
    assert s[2] == {(2, 2): 1, (2, 0): 1, (0, 2): 1}


def test_hand_counted_s3_weighted_contacts():
    m = make_model("S3", a=2, b=3)
    s = enumerate_walks(m, 2)
    # (1,1)(1,-1) lands on the x-axis (weight a); (1,1)(-1,1) on the y-axis
    assert s[2] == {(2, 2): 1, (2, 0): 2, (0, 2): 3}


def test_specialization_examples(s1_rational):
    s = enumerate_walks(s1_rational, 2)
    assert specialize(s, "y=0")[2] == {1: F(9, 2)}
    m = make_model("S1", a=1, b=1)
    s = enumerate_walks(m, 1)
    assert specialize(s, "x=0")[1] == {1: 1}
    assert specialize(s, "x=1,y=1")[0] == 1


def test_matches_brute_force(rng):
    for tag in ("S1", "S3", "S5"):
        m = random_model(tag, rng)
        dp = enumerate_walks(m, 4)
        explicit = brute_force_walks(m, 4)
        for n in range(5):
            assert dp[n] == explicit[n], (tag, n)


def test_plain_counting_at_unit_weights(rng):
    # with a = b = 1 and d = 1 the coefficients are plain walk counts
    for tag in SUPPORTS:
        m = make_model(tag)
        s = enumerate_walks(m, 6)
        for layer in s.terms:
            for c in layer.values():
                assert c.denominator == 1 and c >= 0


def test_coefficients_nonnegative(rng):
    for tag in SUPPORTS:
        m = random_model(tag, rng)
        s = enumerate_walks(m, 6)
        assert all(c >= 0 for layer in s.terms for c in layer.values())


def test_monotone_in_step_weights():
    base = make_model("S5", a=2, b=2)
    bigger = make_model("S5", a=2, b=2, d11=2)
    s0 = enumerate_walks(base, 5)
    s1 = enumerate_walks(bigger, 5)
    for n in range(6):
        for key, c in s0[n].items():
            assert s1[n].get(key, F(0)) >= c


def test_residual_zero_examples():
    for tag, a, b in (("S3", 2, 2), ("S1", 1, 1), ("S5", 2, 3)):
        m = make_model(tag, a=a, b=b) if tag != "S5" else make_model(
            tag, d=F(1, 2), a=a, b=b
        )
        functional_equation_residual(m, enumerate_walks(m, 8))


def test_residual_zero_random_grid(rng):
    for tag in SUPPORTS:
        for _ in range(2):
            m = random_model(tag, rng)
            functional_equation_residual(m, enumerate_walks(m, 6))


def test_series_json_round_trip(s3_unit):
    s = enumerate_walks(s3_unit, 4)
    again = SeriesTruncation.from_json(s.to_json())
    assert again.order == s.order and again.terms == s.terms
    assert s.to_json() == again.to_json()


def test_order_thirty_within_budget():
    # exact rationals at N = 30 are supposed to stay cheap
    import time

    start = time.time()
    m = make_model("S5", a=F(5, 2), b=F(3, 2), d1m1=F(1, 2), d11=F(2, 3))
    s = enumerate_walks(m, 30)
    assert time.time() - start < 60
    assert s[30]


def test_s3_parity():
    # S3 steps change i+j by 0 or +2, so i+j stays even
    s = enumerate_walks(make_model("S3"), 7)
    for layer in s.terms:
        for (i, j) in layer:
            assert (i + j) % 2 == 0
