"""Bivariate (Laurent) polynomials in x, y over Q[t].

XYPoly is a sparse map (i, j) -> Poly in t.  Negative exponents are
allowed so the step Laurent polynomial and the gamma fractions fit
directly; operations that need honest polynomials (reduction modulo the
kernel, resultants) first clear monomial denominators.

The resultant follows the Sylvester-matrix convention with the second
argument's coefficient rows on top, evaluated by fraction-free Bareiss
elimination; this is the sign convention the rest of the package and the
tests pin down (res_y(y - x, y + x) = -2x).
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import BothConstantInVariable
from .poly import Poly
from .ratfunc import RatFunc, ratfunc_is_square


class XYPoly:
    __slots__ = ("terms", "tvar")

    def __init__(self, terms=None, tvar="t"):
        clean = {}
        for key, c in (terms or {}).items():
            if isinstance(c, (int, Fraction)):
                c = Poly.const(c, tvar)
            if not c.is_zero():
                clean[(int(key[0]), int(key[1]))] = c
        self.terms = clean
        self.tvar = tvar

    @classmethod
    def zero(cls, tvar="t"):
        return cls({}, tvar)

    @classmethod
    def monomial(cls, c, i, j, tvar="t"):
        return cls({(i, j): c}, tvar)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = XYPoly.monomial(other, 0, 0, self.tvar)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            out[k] = c if s is None else s + c
        return XYPoly(out, self.tvar)

    __radd__ = __add__

    def __neg__(self):
        return XYPoly({k: -c for k, c in self.terms.items()}, self.tvar)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = XYPoly.monomial(other, 0, 0, self.tvar)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = XYPoly.monomial(other, 0, 0, self.tvar)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                p = c1 * c2
                s = out.get(k)
                out[k] = p if s is None else s + p
        return XYPoly(out, self.tvar)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, XYPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def shift(self, di, dj):
        return XYPoly({(i + di, j + dj): c for (i, j), c in self.terms.items()}, self.tvar)

    def cleared(self):
        """(P, a, b) with P = self * x^a y^b a true polynomial."""
        if not self.terms:
            return self, 0, 0
        a = max(0, -min(i for i, _ in self.terms))
        b = max(0, -min(j for _, j in self.terms))
        return self.shift(a, b), a, b

    def deg_y(self):
        return max((j for _, j in self.terms), default=None)

    def deg_x(self):
        return max((i for i, _ in self.terms), default=None)

    def y_coeff(self, j):
        """Coefficient of y^j as an XYPoly in x alone."""
        return XYPoly({(i, 0): c for (i, jj), c in self.terms.items() if jj == j}, self.tvar)

    def x_coeff(self, i):
        return XYPoly({(0, j): c for (ii, j), c in self.terms.items() if ii == i}, self.tvar)

    def swap_xy(self):
        return XYPoly({(j, i): c for (i, j), c in self.terms.items()}, self.tvar)

    def divexact(self, other):
        """Exact division in Q[t][x, y], treated as polynomials in y.

        Every leading-coefficient division an exact multiple requires is
        itself exact, so plain long division works; raises if not.
        """
        if other.is_zero():
            raise ZeroDivisionError
        if self.is_zero():
            return self
        dy = other.deg_y()
        lead = other.y_coeff(dy)
        quo = XYPoly.zero(self.tvar)
        rem = self
        while not rem.is_zero():
            ry = rem.deg_y()
            if ry is None or ry < dy:
                raise ValueError("inexact bivariate division")
            q_x = _xpoly_divexact(rem.y_coeff(ry), lead)
            q_term = q_x.shift(0, ry - dy)
            quo = quo + q_term
            rem = rem - q_term * other
        return quo

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms):
            c = self.terms[(i, j)]
            sx = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            sy = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
            m = "*".join(s for s in (sx, sy) if s)
            cs = str(c)
            if ("+" in cs or "-" in cs.strip("-")) and m:
                cs = f"({cs})"
            parts.append(f"{cs}*{m}" if m else cs)
        return " + ".join(parts)


def _xpoly_divexact(a: XYPoly, b: XYPoly) -> XYPoly:
    """Exact division of polynomials in x over Q[t] (y-free inputs)."""
    if b.is_zero():
        raise ZeroDivisionError
    da = a.deg_x()
    db = b.deg_x()
    if da is None:
        return a
    quo = {}
    rem = {i: c for (i, _), c in a.terms.items()}
    b_map = {i: c for (i, _), c in b.terms.items()}
    lead_b = b_map[db]
    while rem:
        dr = max(rem)
        if dr < db:
            raise ValueError("inexact x-polynomial division")
        q = rem[dr].divexact(lead_b)
        quo[(dr - db, 0)] = q
        for i, c in b_map.items():
            k = dr - db + i
            s = rem.get(k, Poly.zero(a.tvar)) - q * c
            if s.is_zero():
                rem.pop(k, None)
            else:
                rem[k] = s
    return XYPoly(quo, a.tvar)


def reduce_mod(p: XYPoly, k: XYPoly) -> XYPoly:
    """Pseudo-remainder of p by k with respect to y.

    The result r has deg_y(r) < deg_y(k) and lc^m * p = q*k + r, so p
    vanishes on the (irreducible) curve k = 0 exactly when r does; for
    the kernel, whose fibers are honest degree-2 in y, r = 0 is the
    right test for an identity holding on the curve.
    """
    p, _, _ = p.cleared()
    k, _, _ = k.cleared()
    dk = k.deg_y()
    lead = k.y_coeff(dk)
    rem = p
    while not rem.is_zero():
        ry = rem.deg_y()
        if ry is None or ry < dk:
            break
        top = rem.y_coeff(ry)
        rem = lead * rem - top.shift(0, ry - dk) * k
    return rem


def resultant(p: XYPoly, q: XYPoly, eliminate: str) -> XYPoly:
    """Resultant eliminating x or y, by Bareiss on the Sylvester matrix.

    Convention: rows of q's coefficients come first; this makes
    res_y(y - x, y + x) = -2x and res_y(y^2 - x, y) = -x, which the
    tests freeze.
    """
    if eliminate == "x":
        return resultant(p.swap_xy(), q.swap_xy(), "y").swap_xy()
    if eliminate != "y":
        raise ValueError("eliminate must be 'x' or 'y'")
    p, _, _ = p.cleared()
    q, _, _ = q.cleared()
    m = p.deg_y()
    n = q.deg_y()
    if p.is_zero() or q.is_zero():
        raise BothConstantInVariable("resultant with a zero polynomial")
    if m == 0 and n == 0:
        raise BothConstantInVariable("neither argument involves y")
    if m == 0:
        return _xy_pow(p, n)
    if n == 0:
        return _xy_pow(q, m)
    size = m + n
    pc = [p.y_coeff(j) for j in range(m, -1, -1)]
    qc = [q.y_coeff(j) for j in range(n, -1, -1)]
    rows = []
    for r in range(m):
        rows.append([XYPoly.zero(p.tvar)] * r + qc + [XYPoly.zero(p.tvar)] * (m - 1 - r))
    for r in range(n):
        rows.append([XYPoly.zero(p.tvar)] * r + pc + [XYPoly.zero(p.tvar)] * (n - 1 - r))
    return _bareiss_det(rows, size)


def _xy_pow(p: XYPoly, n: int) -> XYPoly:
    out = XYPoly.monomial(1, 0, 0, p.tvar)
    for _ in range(n):
        out = out * p
    return out


def _bareiss_det(a, n):
    """Fraction-free determinant over the ring Q[t][x]."""
    sign = 1
    prev = XYPoly.monomial(1, 0, 0, a[0][0].tvar if n else "t")
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return XYPoly.zero(prev.tvar)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.divexact(prev)
            a[i][k] = XYPoly.zero(prev.tvar)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def xpoly_is_square(p: XYPoly):
    """Is an XYPoly in one variable a square over Q(t)?

    Degree-2 polynomials are decided by the discriminant-zero test; the
    leading coefficient must itself be a square in Q(t).
    """
    if p.deg_y() not in (None, 0):
        if p.deg_x() in (None, 0):
            p = p.swap_xy()
        else:
            raise ValueError("xpoly_is_square expects a univariate polynomial")
    coeffs = {}
    for (i, _), c in p.terms.items():
        coeffs[i] = RatFunc(c)
    if not coeffs:
        return True
    d = max(coeffs)
    if d % 2 == 1:
        return False
    zero = RatFunc.const(0, p.tvar)
    if d == 0:
        return ratfunc_is_square(coeffs[0])[0]
    if d == 2:
        a = coeffs.get(2, zero)
        b = coeffs.get(1, zero)
        c = coeffs.get(0, zero)
        if b * b - 4 * a * c != zero:
            return False
        return ratfunc_is_square(a)[0]
    # higher degrees never arise from the certificates this backs
    raise NotImplementedError("square test implemented through degree 2 in x")
