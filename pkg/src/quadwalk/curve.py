"""The kernel curve, its involutions, and the critical points.

Everything works in the reciprocal chart: a point ([1:x1],[1:y1]) of the
projective completion has x1 = 1/x, y1 = 1/y, and the affine equation

    C(x1, y1) = x1 y1 - t (d1m1 y1^2 + dm11 x1^2 + d10 y1 + d01 x1 + d11)

covers the whole curve except the singular corner Omega (x = y = 0),
which no orbit ever visits.  Coordinates at infinity in the original
(x, y) chart are just zero values of x1, y1 here, so the involutions can
be evaluated with Vieta's formulas -- over a fixed fiber the two roots
of the quadratic have an explicit sum, hence

    iota1 (x1, y1) = (x1, (x1 - t d10)/(t d1m1) - y1)
    iota2 (x1, y1) = ((y1 - t d01)/(t dm11) - x1, y1)

with no division by a vanishing coordinate anywhere.  These agree with
the product-of-roots (quotient) form whenever the latter is defined.

Critical points: the zeros of gamma1 on the curve satisfy, for A != 0,
the quadratic obtained by substituting y1 = A x1 / (t d1m1) into C = 0;
for A = 0 they are the two points with y = infinity, whose x1 values
solve dm11 x1^2 + d01 x1 + d11 = 0 (the top coefficient of the kernel in
y).  The labels P1/P2 (and P3/P4) are fixed deterministically: higher
t-valuation of x1 first for rational roots, the selected square-root
branch first for conjugate roots.  Any consumer quoting externally
computed entries must allow the swap within each pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateWeights,
    IdenticallyZeroOnCurve,
    OffCurveInput,
    UnsupportedDivisorInput,
)
from .exactalg import (
    INF,
    Poly,
    QuadExt,
    QuadExtElem,
    RatFunc,
    XYPoly,
    ratfunc_is_square,
    reduce_mod,
)
from .model import Model


@dataclass
class CurvePoint:
    """Affine reciprocal-chart point; coordinates are exact algebraic
    functions of t (elements of Q(t) or one quadratic extension)."""

    x1: QuadExtElem
    y1: QuadExtElem

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        return self.x1.equals(other.x1) and self.y1.equals(other.y1)

    def __repr__(self):
        return f"CurvePoint(x1={self.x1!r}, y1={self.y1!r})"

    def to_debug_json(self) -> str:
        return json.dumps(
            {"x1": _coord_debug(self.x1), "y1": _coord_debug(self.y1)},
            sort_keys=True,
        )


def _coord_debug(c: QuadExtElem):
    mp = [str(z) for z in c.minimal_poly_coeffs()]
    if c.is_zero():
        return {"min_poly": mp, "leading_term": None}
    e, lead = c.leading_term()
    return {"min_poly": mp, "leading_term": [str(e), str(lead)]}


def _as_elem(v) -> QuadExtElem:
    if isinstance(v, QuadExtElem):
        return v
    if isinstance(v, (int, Fraction, Poly)):
        return QuadExtElem(RatFunc(v) if isinstance(v, Poly) else RatFunc.const(v))
    if isinstance(v, RatFunc):
        return QuadExtElem(v)
    raise TypeError(f"not a coordinate: {type(v).__name__}")


def curve_equation(model: Model) -> XYPoly:
    """C(x1, y1) as an XYPoly whose (i, j) key means x1^i y1^j."""
    t = Poly.gen("t")
    return XYPoly(
        {
            (1, 1): Poly.const(1),
            (0, 2): -t.scale(model.d(1, -1)),
            (2, 0): -t.scale(model.d(-1, 1)),
            (0, 1): -t.scale(model.d(1, 0)),
            (1, 0): -t.scale(model.d(0, 1)),
            (0, 0): -t.scale(model.d(1, 1)),
        }
    )


def evaluate_xy(p: XYPoly, x_val: QuadExtElem, y_val: QuadExtElem) -> QuadExtElem:
    total = _as_elem(0)
    xpow = {0: _as_elem(1)}
    ypow = {0: _as_elem(1)}
    for (i, j), c in sorted(p.terms.items()):
        if i not in xpow:
            xpow[i] = x_val**i
        if j not in ypow:
            ypow[j] = y_val**j
        total = total + _as_elem(RatFunc(c)) * xpow[i] * ypow[j]
    return total


def on_curve(model: Model, pt: CurvePoint) -> bool:
    return evaluate_xy(curve_equation(model), pt.x1, pt.y1).is_zero()


def _require_on_curve(model: Model, pt: CurvePoint):
    if not on_curve(model, pt):
        raise OffCurveInput(f"point {pt!r} does not satisfy the kernel equation")


def apply_iota1(model: Model, pt: CurvePoint, check: bool = True) -> CurvePoint:
    """First involution: keeps x1, swaps the two y1 roots of its fiber."""
    if check:
        _require_on_curve(model, pt)
    t = RatFunc.gen()
    s = (pt.x1 - t * model.d(1, 0)) / (t * model.d(1, -1))
    return CurvePoint(pt.x1, s - pt.y1)


def apply_iota2(model: Model, pt: CurvePoint, check: bool = True) -> CurvePoint:
    """Second involution: keeps y1, swaps the two x1 roots of its fiber."""
    if check:
        _require_on_curve(model, pt)
    t = RatFunc.gen()
    s = (pt.y1 - t * model.d(0, 1)) / (t * model.d(-1, 1))
    return CurvePoint(s - pt.x1, pt.y1)


def apply_sigma(model: Model, pt: CurvePoint, check: bool = True) -> CurvePoint:
    return apply_iota2(model, apply_iota1(model, pt, check), False)


def apply_sigma_inverse(model: Model, pt: CurvePoint, check: bool = True) -> CurvePoint:
    return apply_iota1(model, apply_iota2(model, pt, check), False)


def iota1_quotient_form(model: Model, pt: CurvePoint) -> QuadExtElem:
    """y1 image by the product-of-roots formula; needs y1 != 0."""
    num = (
        _as_elem(model.d(-1, 1)) * pt.x1 * pt.x1
        + _as_elem(model.d(0, 1)) * pt.x1
        + _as_elem(model.d(1, 1))
    )
    return num / (_as_elem(model.d(1, -1)) * pt.y1)


# -- critical points ----------------------------------------------------


def _discriminant_factors(model: Model):
    t = Poly.gen("t")
    A = model.A
    f1 = Poly.const(model.d(1, -1))
    f2 = (t * t).scale(model.d(1, -1) * model.d(-1, 1)) + Poly.const(A * (A - 1))
    f3 = (
        (t * t).scale(
            model.d(0, 1) ** 2 * model.d(1, -1)
            + model.d(1, 0) ** 2 * model.d(-1, 1)
            - 4 * model.d(1, 1) * model.d(1, -1) * model.d(-1, 1)
        )
        + t.scale(model.d(0, 1) * model.d(1, 0))
        + Poly.const(model.d(1, 1))
    )
    return f1, f2, f3


def _solve_quadratic(a2: RatFunc, a1: RatFunc, a0: RatFunc):
    """Both roots of a2 z^2 + a1 z + a0 (a2 != 0), as QuadExtElem."""
    if a2.is_zero():
        raise ValueError("leading coefficient vanished")
    disc = a1 * a1 - 4 * a2 * a0
    if disc.is_zero():
        r = QuadExtElem(-a1 / (2 * a2))
        return r, r
    ok, w0 = ratfunc_is_square(disc)
    if ok:
        r1 = QuadExtElem((-a1 + w0) / (2 * a2))
        r2 = QuadExtElem((-a1 - w0) / (2 * a2))
        return _order_rational_pair(r1, r2)
    ctx = QuadExt(disc)
    w = QuadExtElem.sqrt(ctx)
    inv = QuadExtElem(1 / (2 * a2))
    return (-QuadExtElem(a1) + w) * inv, (-QuadExtElem(a1) - w) * inv


def _order_rational_pair(r1, r2):
    """Deterministic labels: higher valuation first, then coefficients."""
    v1, v2 = r1.valuation(), r2.valuation()
    if v1 != v2:
        return (r1, r2) if (v2 != INF and (v1 == INF or v1 > v2)) else (r2, r1)
    k1 = (r1.p.num.coeffs, r1.p.den.coeffs)
    k2 = (r2.p.num.coeffs, r2.p.den.coeffs)
    return (r1, r2) if k1 >= k2 else (r2, r1)


def critical_points(model: Model):
    """(P1, P2, P3, P4): the zeros on the curve of gamma1 and gamma2."""
    f1, f2, f3 = _discriminant_factors(model)
    if f1.is_zero() or f2.is_zero() or f3.is_zero():
        raise DegenerateWeights("discriminant factor vanishes identically")
    t = Poly.gen("t")
    tt = t * t

    if model.A != 0:
        a2 = RatFunc(tt.scale(model.d(1, -1) * model.d(-1, 1)) + Poly.const(model.A**2 - model.A))
        a1 = RatFunc(tt.scale(model.d(0, 1) * model.d(1, -1)) + t.scale(model.A * model.d(1, 0)))
        a0 = RatFunc(tt.scale(model.d(1, 1) * model.d(1, -1)))
        r1, r2 = _solve_quadratic(a2, a1, a0)
        slope = QuadExtElem(RatFunc(Poly.const(model.A), t.scale(model.d(1, -1))))
        p1 = CurvePoint(r1, slope * r1)
        p2 = CurvePoint(r2, slope * r2)
    else:
        a2 = RatFunc.const(model.d(-1, 1))
        a1 = RatFunc.const(model.d(0, 1))
        a0 = RatFunc.const(model.d(1, 1))
        r1, r2 = _solve_quadratic(a2, a1, a0)
        zero = QuadExtElem(RatFunc.const(0))
        p1 = CurvePoint(r1, zero)
        p2 = CurvePoint(r2, zero)

    if model.B != 0:
        b2 = RatFunc(tt.scale(model.d(1, -1) * model.d(-1, 1)) + Poly.const(model.B**2 - model.B))
        b1 = RatFunc(tt.scale(model.d(1, 0) * model.d(-1, 1)) + t.scale(model.B * model.d(0, 1)))
        b0 = RatFunc(tt.scale(model.d(1, 1) * model.d(-1, 1)))
        s1, s2 = _solve_quadratic(b2, b1, b0)
        slope = QuadExtElem(RatFunc(Poly.const(model.B), t.scale(model.d(-1, 1))))
        p3 = CurvePoint(slope * s1, s1)
        p4 = CurvePoint(slope * s2, s2)
    else:
        b2 = RatFunc.const(model.d(1, -1))
        b1 = RatFunc.const(model.d(1, 0))
        b0 = RatFunc.const(model.d(1, 1))
        s1, s2 = _solve_quadratic(b2, b1, b0)
        zero = QuadExtElem(RatFunc.const(0))
        p3 = CurvePoint(zero, s1)
        p4 = CurvePoint(zero, s2)

    for p in (p1, p2, p3, p4):
        _require_on_curve(model, p)
    return p1, p2, p3, p4


@dataclass
class CriticalSets:
    """The four ordered critical lists; rows of M1/M2 use the minus
    lists, columns the plus lists, in exactly this order."""

    L1_minus: list
    L1_plus: list
    L2_minus: list
    L2_plus: list


def critical_sets(model: Model) -> CriticalSets:
    p1, p2, p3, p4 = critical_points(model)
    i1 = lambda q: apply_iota1(model, q, check=False)
    i2 = lambda q: apply_iota2(model, q, check=False)
    sets = CriticalSets(
        L1_minus=[p1, p2, i2(p3), i2(p4)],
        L1_plus=[i1(p1), i1(p2), apply_sigma_inverse(model, p3, False),
                 apply_sigma_inverse(model, p4, False)],
        L2_minus=[apply_sigma(model, p1, False), apply_sigma(model, p2, False),
                  i2(p3), i2(p4)],
        L2_plus=[i1(p1), i1(p2), p3, p4],
    )
    for group in (sets.L1_minus, sets.L1_plus, sets.L2_minus, sets.L2_plus):
        for p in group:
            _require_on_curve(model, p)
    return sets


# -- zeros and divisors of curve functions ------------------------------


def laurent_to_reciprocal(h: XYPoly):
    """Rewrite h(x, y) in the chart x = 1/x1, y = 1/y1: returns (P, a, b)
    with h = P(x1, y1) / (x1^a y1^b)."""
    flipped = XYPoly({(-i, -j): c for (i, j), c in h.terms.items()}, h.tvar)
    return flipped.cleared()


def curve_divisor(model: Model, h: XYPoly):
    """Divisor of h on the curve punctured at Omega, as a list of
    (CurvePoint, order) with nonzero integer orders."""
    P, a, b = laurent_to_reciprocal(h)
    C = curve_equation(model)
    if reduce_mod(P, C).is_zero():
        raise IdenticallyZeroOnCurve(f"{h!r} vanishes on the whole curve")
    entries = _poly_zeros(model, P)
    if a:
        entries += [(pt, -a * m) for pt, m in _coordinate_zeros(model, "x1")]
    if b:
        entries += [(pt, -b * m) for pt, m in _coordinate_zeros(model, "y1")]
    return _merge_divisor(entries)


def curve_zeros(model: Model, h):
    """Zeros with multiplicity on the curve minus Omega of h, or of a
    product of factors when h is a list (divisors add per factor)."""
    factors = h if isinstance(h, (list, tuple)) else [h]
    total = []
    for f in factors:
        total += curve_divisor(model, f)
    merged = _merge_divisor(total)
    return [(pt, m) for pt, m in merged if m > 0]


def _merge_divisor(entries):
    merged = []
    for pt, m in entries:
        for k, (q, n) in enumerate(merged):
            if q == pt:
                merged[k] = (q, n + m)
                break
        else:
            merged.append((pt, m))
    return [(pt, m) for pt, m in merged if m != 0]


def _monomial_content(P: XYPoly):
    if P.is_zero():
        raise ValueError("zero polynomial has no divisor")
    c = min(i for i, _ in P.terms)
    d = min(j for _, j in P.terms)
    return P.shift(-c, -d), c, d


def _poly_zeros(model: Model, P: XYPoly):
    """Zero divisor of a polynomial in the reciprocal coordinates.

    Handles monomials times a factor that is linear in one coordinate
    with a constant leading coefficient; those are the only shapes the
    gamma functions and their decoupling companions produce.
    """
    P, c, d = _monomial_content(P)
    entries = []
    if c:
        entries += [(pt, c * m) for pt, m in _coordinate_zeros(model, "x1")]
    if d:
        entries += [(pt, d * m) for pt, m in _coordinate_zeros(model, "y1")]
    if P.deg_x() == 0 and P.deg_y() == 0:
        return entries
    if P.deg_y() == 1 and P.y_coeff(1).deg_x() == 0:
        entries += _linear_fiber_zeros(model, P, swap=False)
    elif P.deg_x() == 1 and P.x_coeff(1).deg_y() == 0:
        entries += _linear_fiber_zeros(model, P, swap=True)
    else:
        raise UnsupportedDivisorInput(
            "factor is not linear-with-constant-coefficient in either "
            "reciprocal coordinate"
        )
    return entries


def _linear_fiber_zeros(model: Model, P: XYPoly, swap: bool):
    """Common zeros of C and P = c1*y1 + c0(x1) (or roles swapped)."""
    orig_P = P
    C = curve_equation(model)
    if swap:
        P = P.swap_xy()
        C = C.swap_xy()
    c1 = RatFunc(P.y_coeff(1).terms.get((0, 0), Poly.zero()))
    c0_terms = {i: RatFunc(cc) for (i, _), cc in P.y_coeff(0).terms.items()}
    # substitute y1 = -c0(x1)/c1 into C and collect a poly in x1
    subs = {}
    for (i, j), cc in C.terms.items():
        base = RatFunc(cc)
        # expand (-c0/c1)^j = sum over compositions; j <= 2 so direct
        if j == 0:
            parts = {0: base}
        elif j == 1:
            parts = {k: -base * v / c1 for k, v in c0_terms.items()}
        else:  # j == 2
            parts = {}
            for k1, v1 in c0_terms.items():
                for k2, v2 in c0_terms.items():
                    key = k1 + k2
                    add = base * v1 * v2 / (c1 * c1)
                    parts[key] = parts.get(key, RatFunc.const(0)) + add
        for k, v in parts.items():
            subs[k + i] = subs.get(k + i, RatFunc.const(0)) + v
    subs = {k: v for k, v in subs.items() if not v.is_zero()}
    if not subs:
        raise UnsupportedDivisorInput("substituted fiber equation vanished")
    deg = max(subs)
    zero = RatFunc.const(0)
    if deg > 2:
        raise UnsupportedDivisorInput("fiber equation has degree > 2")
    if deg == 2:
        roots = _solve_quadratic(subs.get(2, zero), subs.get(1, zero), subs.get(0, zero))
        roots = list(roots)
    elif deg == 1:
        roots = [QuadExtElem(-subs.get(0, zero) / subs[1])]
    else:
        roots = []
    out = []
    seen = []
    for r in roots:
        val = _negate_div(c0_terms, r, c1)
        pt = CurvePoint(val, r) if swap else CurvePoint(r, val)
        if any(pt == q for q in seen):
            continue
        seen.append(pt)
        out.append((pt, point_order(model, orig_P, pt)))
    return out


def _negate_div(c0_terms, x_val, c1):
    acc = _as_elem(0)
    for k, v in c0_terms.items():
        acc = acc + _as_elem(v) * (x_val**k if k else _as_elem(1))
    return -(acc / _as_elem(c1))


def _coordinate_zeros(model: Model, which: str):
    """Zero divisor of the coordinate function x1 (or y1) on the curve."""
    if which == "x1":
        a2, a1, a0 = model.d(1, -1), model.d(1, 0), model.d(1, 1)
    else:
        a2, a1, a0 = model.d(-1, 1), model.d(0, 1), model.d(1, 1)
    r1, r2 = _solve_quadratic(
        RatFunc.const(a2), RatFunc.const(a1), RatFunc.const(a0)
    )
    zero = _as_elem(0)
    pts = []
    for r in (r1, r2):
        pt = CurvePoint(zero, r) if which == "x1" else CurvePoint(r, zero)
        if not any(pt == q for q, _ in pts):
            mono = XYPoly.monomial(1, 1, 0) if which == "x1" else XYPoly.monomial(1, 0, 1)
            pts.append((pt, point_order(model, mono, pt)))
    return pts


# -- local orders via implicit series -----------------------------------


def _series_eval_xy(p: XYPoly, xs: list, ys: list, m: int):
    """Evaluate p on truncated tau-series coordinates (lists of field
    elements, index = power of the local parameter)."""
    zero = _as_elem(0)
    out = [zero for _ in range(m + 1)]
    cache = {"x": {}, "y": {}}

    def pow_series(base, n, tag):
        if n == 0:
            return [_as_elem(1)] + [zero] * m
        store = cache[tag]
        if n in store:
            return store[n]
        half = pow_series(base, n // 2, tag)
        res = _series_mul(half, half, m)
        if n % 2:
            res = _series_mul(res, base, m)
        store[n] = res
        return res

    for (i, j), c in sorted(p.terms.items()):
        coeff = _as_elem(RatFunc(c))
        term = _series_mul(pow_series(xs, i, "x"), pow_series(ys, j, "y"), m)
        for k in range(m + 1):
            out[k] = out[k] + coeff * term[k]
    return out


def _series_mul(a, b, m):
    zero = _as_elem(0)
    out = [zero for _ in range(m + 1)]
    for i, ai in enumerate(a):
        if i > m or ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if i + j > m:
                break
            if not bj.is_zero():
                out[i + j] = out[i + j] + ai * bj
    return out


def point_order(model: Model, P: XYPoly, pt: CurvePoint, max_depth: int = 16) -> int:
    """Order of vanishing of P (reciprocal-chart polynomial) at a smooth
    point of the curve, via the implicit local parametrization."""
    C = curve_equation(model)
    Cy = evaluate_xy(_partial(C, "y"), pt.x1, pt.y1)
    if not Cy.is_zero():
        param_x = True
    else:
        Cx = evaluate_xy(_partial(C, "x"), pt.x1, pt.y1)
        if Cx.is_zero():
            raise OffCurveInput("singular point reached; only Omega is singular")
        param_x = False
        C = C.swap_xy()
        P = P.swap_xy()
        pt = CurvePoint(pt.y1, pt.x1)
        Cy = Cx
    m = 4
    while m <= max_depth:
        ys = _implicit_series(model, C, pt, m)
        xs = [pt.x1, _as_elem(1)] + [_as_elem(0)] * (m - 1)
        vals = _series_eval_xy(P, xs, ys, m)
        for k, v in enumerate(vals):
            if not v.is_zero():
                return k
        m *= 2
    raise UnsupportedDivisorInput(
        f"vanishing order exceeds probe depth {max_depth}"
    )


def _partial(p: XYPoly, var: str) -> XYPoly:
    out = {}
    for (i, j), c in p.terms.items():
        if var == "x" and i > 0:
            out[(i - 1, j)] = c.scale(i)
        elif var == "y" and j > 0:
            out[(i, j - 1)] = c.scale(j)
    return XYPoly(out, p.tvar)


def _implicit_series(model: Model, C: XYPoly, pt: CurvePoint, m: int):
    """y1 = phi(x1) on the curve near pt, as a tau = x1 - x1(pt) series."""
    Cy0 = evaluate_xy(_partial(C, "y"), pt.x1, pt.y1)
    inv = Cy0.inverse()
    xs = [pt.x1, _as_elem(1)] + [_as_elem(0)] * (m - 1)
    ys = [pt.y1] + [_as_elem(0)] * m
    for k in range(1, m + 1):
        res = _series_eval_xy(C, xs, ys, k)
        ck = -(res[k] * inv)
        ys[k] = ck
    return ys
