"""Kernel curve: involutions, critical points against published closed
forms, divisors of the gamma functions."""

import json
from fractions import Fraction as F

import pytest

from quadwalk.curve import (
    CurvePoint,
    apply_iota1,
    apply_iota2,
    apply_sigma,
    apply_sigma_inverse,
    critical_points,
    critical_sets,
    curve_zeros,
    curve_equation,
    evaluate_xy,
    iota1_quotient_form,
    on_curve,
)
from quadwalk.errors import OffCurveInput
from quadwalk.exactalg import (
    INF,
    Poly,
    QuadExtElem,
    RatFunc,
    XYPoly,
    t_valuation,
)
from quadwalk.model import make_model
from tests.conftest import SUPPORTS, random_model

T = Poly.gen("t")


def test_critical_point_closed_form_s1():
    # generic A: x1(P2) = -d01 d1m1 t^2 / (d1m1 dm11 t^2 + A^2 - A),
    # y1(P2) = -A d01 t / (same), from the worked S1 example
    m = make_model("S1", a=5, b=2)
    _, p2, _, _ = critical_points(m)
    G = RatFunc((T * T) + Poly.const(F(-4, 25)))
    assert p2.x1.equals(QuadExtElem(RatFunc(-(T * T)) / G))
    assert p2.y1.equals(QuadExtElem(RatFunc(T.scale(F(-4, 5))) / G))


def test_critical_points_satisfy_defining_equations():
    for tag, a, b in (("S3", 2, 2), ("S5", 3, F(3, 2)), ("S2", F(4, 3), 5)):
        m = make_model(tag, a=a, b=b)
        p1, p2, p3, p4 = critical_points(m)
        g1 = XYPoly({(1, 0): Poly.const(m.A), (0, 1): -T.scale(m.d(1, -1))})
        g2 = XYPoly({(0, 1): Poly.const(m.B), (1, 0): -T.scale(m.d(-1, 1))})
        for p in (p1, p2):
            assert on_curve(m, p)
            assert evaluate_xy(g1, p.x1, p.y1).is_zero()
        for p in (p3, p4):
            assert on_curve(m, p)
            assert evaluate_xy(g2, p.x1, p.y1).is_zero()


def test_critical_points_a_zero():
    # A = 0: the zeros of gamma1 sit at y = infinity; v(P2) = (0, oo)
    m = make_model("S1", a=1, b=2)
    p1, p2, _, _ = critical_points(m)
    assert t_valuation(p2.x1) == 0 and t_valuation(p2.y1) == INF
    assert p1.x1.is_zero() and p1.y1.is_zero()  # the (oo, oo) point


def test_iota_paper_value():
    m = make_model("S1", a=5, b=2)
    _, p2, _, _ = critical_points(m)
    i1p2 = apply_iota1(m, p2)
    G = RatFunc((T * T) + Poly.const(F(-4, 25)))
    assert i1p2.y1.equals(QuadExtElem(RatFunc(T.scale(F(4, 5) - 1)) / G))
    assert i1p2.x1.equals(p2.x1)  # iota1 preserves x


def test_involutions_and_quotient_form(rng):
    for tag in SUPPORTS:
        m = random_model(tag, rng)
        pts = critical_points(m)
        for p in pts:
            q = apply_iota1(m, p)
            assert on_curve(m, q)
            assert apply_iota1(m, q) == p
            r = apply_iota2(m, p)
            assert on_curve(m, r)
            assert apply_iota2(m, r) == p
            assert r.y1.equals(p.y1)
            assert apply_sigma_inverse(m, apply_sigma(m, p)) == p
            if not p.y1.is_zero():
                assert iota1_quotient_form(m, p).equals(q.y1)


def test_orbit_stays_on_curve(s3_unit):
    p = critical_points(s3_unit)[0]
    cur = p
    for _ in range(10):
        cur = apply_sigma(s3_unit, cur, check=False)
        assert on_curve(s3_unit, cur)
        assert apply_iota1(s3_unit, cur, check=False).x1.equals(cur.x1)


def test_off_curve_rejected(s3_unit):
    bad = CurvePoint(QuadExtElem(RatFunc.const(1)), QuadExtElem(RatFunc.const(1)))
    with pytest.raises(OffCurveInput):
        apply_iota1(s3_unit, bad)


def test_critical_sets_structure():
    m = make_model("S3", a=2, b=2)
    s = critical_sets(m)
    p1, p2, p3, p4 = critical_points(m)
    assert s.L1_minus[0] == p1 and s.L1_minus[1] == p2
    # L1+ = iota1(L1-) elementwise
    for lhs, rhs in zip(s.L1_plus, [apply_iota1(m, q, False) for q in s.L1_minus]):
        assert lhs == rhs
    # L2+ shares the first two entries with L1+
    assert s.L2_plus[0] == s.L1_plus[0] and s.L2_plus[1] == s.L1_plus[1]
    assert s.L2_plus[2] == p3 and s.L2_plus[3] == p4


def test_gamma_divisors(rng):
    for tag in ("S1", "S3", "S4"):
        m = random_model(tag, rng)
        p1, p2, p3, p4 = critical_points(m)
        z1 = curve_zeros(m, m.gamma1_xy())
        assert sum(mult for _, mult in z1) == 2
        assert all(any(pt == q for q in (p1, p2)) for pt, _ in z1)
        z2 = curve_zeros(m, m.gamma2_xy())
        assert sum(mult for _, mult in z2) == 2
        assert all(any(pt == q for q in (p3, p4)) for pt, _ in z2)


def test_edge_divisor_fact():
    # B = 1/2 on S1: u*gamma2 vanishes exactly at {P4, i2 P4}
    m = make_model("S1", a=5, b=2)
    _, _, p3, p4 = critical_points(m)
    u = XYPoly({(0, 0): Poly.const(F(1, 2)), (1, -1): -T})
    zeros = curve_zeros(m, [u, m.gamma2_xy()])
    expected = [p4, apply_iota2(m, p4)]
    assert len(zeros) == 2 and all(mult == 1 for _, mult in zeros)
    assert all(any(pt == q for q in expected) for pt, _ in zeros)


def test_discriminant_product_nonzero(rng):
    from quadwalk.curve import _discriminant_factors

    for tag in SUPPORTS:
        m = random_model(tag, rng)
        f1, f2, f3 = _discriminant_factors(m)
        prod = (T * T).scale(16) * f1 * f2 * f3
        assert not prod.is_zero()


def test_point_equality_across_extensions():
    # P1/P2 live in one extension, P3/P4 in another; no spurious matches
    m = make_model("S3", a=F(3, 2), b=F(5, 2))
    p1, p2, p3, p4 = critical_points(m)
    assert p1 != p2
    for p in (p1, p2):
        for q in (p3, p4):
            assert p != q
    assert p1 == p1 and p3 == p3


def test_coordinate_expansion_satisfies_minimal_polynomial():
    # the Puiseux expansion of an irrational critical coordinate must
    # kill its own minimal polynomial up to the truncation order
    from quadwalk.exactalg import expand_ratfunc, puiseux_expand

    m = make_model("S3", a=F(3, 2), b=F(5, 2))
    p1, _, _, _ = critical_points(m)
    coord = p1.x1
    assert not coord.is_rational()
    c0, c1, _ = coord.minimal_poly_coeffs()
    ser = puiseux_expand(coord, 6)
    acc = ser * ser + expand_ratfunc(c1, 6) * ser + expand_ratfunc(c0, 6)
    assert acc.matches(expand_ratfunc(RatFunc.const(0), 5), up_to=4)


def test_ramified_discriminant_coordinates():
    # a < 1 can kill the t^2 coefficient of the discriminant, leaving
    # odd valuation: coordinates ramify (half-integer exponents) with
    # leading surd coefficients, and everything stays exact
    from quadwalk.exactalg import expand_ratfunc, puiseux_expand

    m = make_model("S5", a=F(1, 2), b=3, d10=4, d11=2)
    p1, p2, _, _ = critical_points(m)
    assert p1.x1.ctx is not None and p1.x1.ctx.half_val == F(3, 2)
    assert p1 != p2  # conjugates differ from the t^(3/2) term on
    ser = puiseux_expand(p1.x1, 3)
    terms = ser.term_dict()
    assert terms[F(1)].is_rational()
    assert not terms[F(3, 2)].is_rational() and terms[F(3, 2)].s == -2
    c0, c1, _ = p1.x1.minimal_poly_coeffs()
    acc = ser * ser + expand_ratfunc(c1, 3) * ser + expand_ratfunc(c0, 3)
    assert acc.matches(expand_ratfunc(RatFunc.const(0), 2), up_to=2)


def test_merged_critical_points():
    # a double zero of gamma1 is allowed: P1 = P2 as points
    m = make_model("S4", a=1, b=3, d01=2)  # A = 0, d01^2 = 4 dm11 d11
    p1, p2, p3, p4 = critical_points(m)
    assert p1 == p2 and p3 != p4
    sets = critical_sets(m)
    assert sets.L1_minus[0] == sets.L1_minus[1]
    # S1 at B = 0: gamma2's zeros merge at the double-infinite point,
    # which is also a zero of gamma1
    m = make_model("S1", a=3, b=1)
    p1, p2, p3, p4 = critical_points(m)
    assert p3 == p4 and p3.x1.is_zero() and p3.y1.is_zero()
    assert p3 == p1


def test_debug_json(s3_unit):
    p1, _, _, _ = critical_points(s3_unit)
    doc = json.loads(p1.to_debug_json())
    assert set(doc) == {"x1", "y1"}
    assert "min_poly" in doc["x1"] and "leading_term" in doc["x1"]
