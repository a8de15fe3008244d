"""Foundation layer: polynomials, rational functions, quadratic
extensions, Puiseux truncations, resultants, square tests."""

import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from quadwalk.errors import BothConstantInVariable, ZeroDenominator
from quadwalk.exactalg import (
    INF,
    Poly,
    PuiseuxTrunc,
    QuadExt,
    QuadExtElem,
    RatFunc,
    SqrtPair,
    XYPoly,
    is_square,
    poly_is_square,
    puiseux_expand,
    ratfunc_normalize,
    resultant,
    sqrt_with_selector,
    t_valuation,
)

T = Poly.gen("t")


def rf(num, den=None):
    return RatFunc(num if isinstance(num, Poly) else Poly(num),
                   None if den is None else (den if isinstance(den, Poly) else Poly(den)))


small_fracs = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def polys(max_degree=4):
    return st.lists(small_fracs, min_size=0, max_size=max_degree + 1).map(Poly)


# -- Poly ---------------------------------------------------------------


def test_poly_basics():
    p = Poly([1, 2, 1])
    assert p.degree == 2
    assert str(p) == "t^2 + 2*t + 1"
    assert Poly.zero().degree is None
    assert (p - p).is_zero()
    assert p * Poly.zero() == Poly.zero()


def test_poly_divmod_exact():
    p = (T + 1) * (T**2 - 2) + Poly([F(1, 3)])
    q, r = p.divmod(T + 1)
    assert q == T**2 - 2
    assert r == Poly([F(1, 3)])


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys(2))
def test_poly_gcd_divides_both(a, b, g):
    h = (a * g).gcd(b * g)
    if h.is_zero():
        assert (a * g).is_zero() and (b * g).is_zero()
        return
    assert ((a * g) % h).is_zero()
    assert ((b * g) % h).is_zero()
    # the common factor g divides the gcd
    if not (a * g).is_zero() and not (b * g).is_zero():
        assert (h % g.monic()).is_zero()


# -- is_square ----------------------------------------------------------


def test_is_square_examples():
    ok, w = poly_is_square(T**2 + 2 * T + 1)
    assert ok and w in (T + 1, -(T + 1))
    # degree-2 criterion: discriminant of 1 - 4t^2 is 16 != 0
    ok, _ = poly_is_square(Poly([1, 0, -4]))
    assert not ok


@settings(max_examples=60, deadline=None)
@given(polys())
def test_is_square_of_square(p):
    ok, w = poly_is_square(p * p)
    assert ok
    assert w * w == p * p


@settings(max_examples=40, deadline=None)
@given(polys(3))
def test_square_times_irreducible_is_not_square(p):
    irred = T**2 + 1  # no rational roots, not a rational square
    ok, _ = poly_is_square(p * p * irred)
    assert ok == p.is_zero()


def test_is_square_xpoly_degree_one():
    # 1/4 - c t^2 - c' t^2 x with c' != 0: degree 1 in x, never a square
    p = XYPoly(
        {(0, 0): Poly([F(1, 4), 0, -2]), (1, 0): -(T * T).scale(3)}
    )
    assert is_square(p)[0] is False


# -- resultant ----------------------------------------------------------


def test_resultant_convention():
    x = XYPoly.monomial(1, 1, 0)
    y = XYPoly.monomial(1, 0, 1)
    assert resultant(y - x, y + x, "y") == XYPoly.monomial(-2, 1, 0)
    # frozen from the hand-expanded 3x3 Sylvester determinant
    assert resultant(y * y - x, y, "y") == XYPoly.monomial(-1, 1, 0)


def test_resultant_shared_roots_vanishes():
    x = XYPoly.monomial(1, 1, 0)
    y = XYPoly.monomial(1, 0, 1)
    p = y * y - x * y + XYPoly.monomial(2, 0, 0)
    assert resultant(p, p, "y").is_zero()


def test_resultant_errors():
    x = XYPoly.monomial(1, 1, 0)
    with pytest.raises(BothConstantInVariable):
        resultant(x, x + XYPoly.monomial(1, 0, 0), "y")


@settings(max_examples=40, deadline=None)
@given(st.lists(small_fracs, min_size=2, max_size=3),
       st.lists(small_fracs, min_size=2, max_size=3),
       st.lists(small_fracs, min_size=1, max_size=2))
def test_resultant_vanishes_iff_common_factor(ac, bc, gc):
    # build univariate-in-y polynomials with rational coefficients
    def ypoly(cs):
        return XYPoly({(0, k): Poly.const(c) for k, c in enumerate(cs)})

    a, b, g = ypoly(ac), ypoly(bc), ypoly(gc + [F(1)])
    if a.deg_y() in (None, 0) or b.deg_y() in (None, 0):
        return
    res_plain = resultant(a, b, "y")

    # brute-force oracle: gcd over Q[y] decides common roots
    def to_poly(p):
        n = p.deg_y()
        return Poly([p.y_coeff(k).terms.get((0, 0), Poly.zero()).coeffs[0]
                     if (0, 0) in p.y_coeff(k).terms else F(0)
                     for k in range(n + 1)], "y")

    gcd = to_poly(a).gcd(to_poly(b))
    assert res_plain.is_zero() == (gcd.degree is not None and gcd.degree > 0)
    # and multiplying in a shared factor always kills the resultant
    assert resultant(a * g, b * g, "y").is_zero()


# -- RatFunc ------------------------------------------------------------


def test_ratfunc_normalize_examples():
    f = ratfunc_normalize(T**2 + T, T)
    assert f.num == T + 1 and f.den == Poly([1])
    z = ratfunc_normalize(Poly.zero(), Poly([1, 1]))
    assert z.num.is_zero() and z.den == Poly([1])
    g = ratfunc_normalize(T.scale(2), Poly([4]))
    assert g.num == T.scale(F(1, 2)) and g.den == Poly([1])


def test_ratfunc_zero_denominator():
    with pytest.raises(ZeroDenominator):
        RatFunc(T, Poly.zero())


def test_t_valuation_examples():
    assert t_valuation(rf([0, 0, 1, 1])) == 2
    assert t_valuation(RatFunc.const(0)) == INF
    # x1 coordinate of the S1 critical point: valuation 2
    num = -(T * T)
    den = (T * T) + Poly.const(F(-4, 25))  # d's = 1, A = 4/5: A^2 - A = -4/25
    assert t_valuation(RatFunc(num, den)) == 2


@settings(max_examples=60, deadline=None)
@given(polys(3), polys(3), polys(2), polys(2))
def test_valuation_is_additive(an, ad, bn, bd):
    if an.is_zero() or bn.is_zero() or ad.is_zero() or bd.is_zero():
        return
    f, g = RatFunc(an, ad), RatFunc(bn, bd)
    assert t_valuation(f * g) == t_valuation(f) + t_valuation(g)
    s = f + g
    vf, vg = t_valuation(f), t_valuation(g)
    if vf != vg:
        assert t_valuation(s) == min(vf, vg)
    else:
        assert s.is_zero() or t_valuation(s) >= vf


# -- quadratic extensions and Puiseux -----------------------------------


def test_puiseux_binomial():
    w = sqrt_with_selector(RatFunc(Poly([1, 1])))
    ser = puiseux_expand(w, 2)
    assert ser.term_dict() == {F(0): SqrtPair(1), F(1): SqrtPair(F(1, 2)),
                               F(2): SqrtPair(F(-1, 8))}


def test_puiseux_geometric():
    e = QuadExtElem(RatFunc(T, Poly([1, -1])))
    ser = puiseux_expand(e, 3)
    assert ser.term_dict() == {F(1): SqrtPair(1), F(2): SqrtPair(1), F(3): SqrtPair(1)}


def test_puiseux_sqrt_against_square_oracle():
    # sqrt(t^2 (1 - 4 t^2)) with leading term +t: square it back
    D = RatFunc(Poly([0, 0, 1, 0, -4]))
    w = sqrt_with_selector(D)
    assert w.ctx.half_val == 1 and w.ctx.branch_lc == SqrtPair(1)
    ser = puiseux_expand(w, 5)
    sq = ser * ser
    assert sq.matches(puiseux_expand(RatFunc(Poly([0, 0, 1, 0, -4])), 6))
    lead = ser.term_dict()
    assert lead[F(1)] == SqrtPair(1) and lead[F(3)] == SqrtPair(-2)


@settings(max_examples=25, deadline=None)
@given(polys(2), polys(2))
def test_puiseux_respects_products(pn, qn):
    D = RatFunc(Poly([1, 1]))
    ctx = QuadExt(D)
    if pn.is_zero() or qn.is_zero():
        return
    u = QuadExtElem(RatFunc(pn), RatFunc.const(1), ctx)
    v = QuadExtElem(RatFunc(qn), RatFunc.const(2), ctx)
    pu = puiseux_expand(u, 4)
    pv = puiseux_expand(v, 4)
    assert (pu * pv).matches(puiseux_expand(u * v, 8), up_to=4)


@settings(max_examples=30, deadline=None)
@given(polys(2), polys(2), polys(2), polys(2))
def test_quadext_valuation_multiplicative(p1, q1, p2, q2):
    ctx = QuadExt(RatFunc(Poly([1, 0, 0, 2])))  # sqrt(1 + 2t^3)
    u = QuadExtElem(RatFunc(p1), RatFunc(q1), ctx)
    v = QuadExtElem(RatFunc(p2), RatFunc(q2), ctx)
    if u.is_zero() or v.is_zero():
        return
    assert (u * v).valuation() == u.valuation() + v.valuation()
    s = u + v
    if not s.is_zero():
        assert s.valuation() >= min(u.valuation(), v.valuation())


def test_quadext_valuation_with_cancellation():
    # p + q*w with matching leading terms: valuation jumps to the norm
    D = RatFunc(Poly([1, 1]))  # sqrt(1+t) = 1 + t/2 - ...
    ctx = QuadExt(D)
    w = QuadExtElem.sqrt(ctx)
    u = QuadExtElem(RatFunc.const(-1)) + w  # = t/2 - t^2/8 + ...
    assert u.valuation() == 1
    assert u.leading_term() == (F(1), SqrtPair(F(1, 2)))


def test_quadext_equality_across_radicands():
    # sqrt(4(1+t)) over one context equals 2*sqrt(1+t) over another
    w1 = sqrt_with_selector(RatFunc(Poly([4, 4])))
    w2 = sqrt_with_selector(RatFunc(Poly([1, 1])))
    assert w1.equals(QuadExtElem(RatFunc.const(0), RatFunc.const(2), w2.ctx))
    assert not w1.equals(QuadExtElem(RatFunc.const(0), RatFunc.const(-2), w2.ctx))
    assert not w1.equals(w2)


def test_root_selector_consistency():
    from quadwalk.errors import RootSelectorInconsistent

    D = RatFunc(Poly([0, 0, 9]))  # 9 t^2: square radicand folds to 3t
    w = sqrt_with_selector(D, expected_exponent=F(1), expected_coeff=SqrtPair(3))
    assert w.is_rational() and w.p == RatFunc(T.scale(3))
    flipped = sqrt_with_selector(D, expected_coeff=SqrtPair(-3))
    assert flipped.p == RatFunc(T.scale(-3))
    with pytest.raises(RootSelectorInconsistent):
        sqrt_with_selector(D, expected_coeff=SqrtPair(5))
    # genuine extension: selector check against the stored branch
    D2 = RatFunc(Poly([0, 0, 2]))
    w2 = sqrt_with_selector(D2, expected_exponent=F(1),
                            expected_coeff=SqrtPair(0, 1, 2))
    assert not w2.is_rational()
    with pytest.raises(RootSelectorInconsistent):
        sqrt_with_selector(D2, expected_exponent=F(2))


def test_sqrtpair_field_ops():
    a = SqrtPair(F(1, 2), F(3), 5)
    b = SqrtPair(F(2), F(-1), 5)
    assert a * b == SqrtPair(F(1) - 15, F(11, 2), 5)
    assert (a * a.inverse()) == SqrtPair(1)
    assert SqrtPair(0, 2, 3) * SqrtPair(0, 1, 3) == SqrtPair(6)
    assert SqrtPair(0, 1, 6) * SqrtPair(0, 1, 10) == SqrtPair(0, 2, 15)
