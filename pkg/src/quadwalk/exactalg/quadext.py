"""One quadratic extension Q(t)(sqrt(D)) with a pinned square root.

A QuadExt context fixes a non-square radicand D in Q(t) together with a
branch: of the two square roots of D in the Puiseux series field, the
selected one is the root whose leading coefficient is rho*sqrt(s) with
rho > 0 (s the squarefree part of the leading Laurent coefficient of D).
Elements are p + q*w with p, q in Q(t) and w the selected root.

Everything downstream relies on two exact decision procedures here:

* valuation: v(p + q*w) follows from min(v(p), v(q) + v(D)/2) except
  when the leading terms cancel, in which case the norm identity
  v(u) + v(conj u) = v(p^2 - q^2 D) resolves it without any series
  expansion;

* equality across different contexts: p1 + q1*w1 = p2 + q2*w2 iff the
  rational parts agree, q1^2 D1 = q2^2 D2, and the selected branches of
  the common square root q1*w1, q2*w2 have the same leading Puiseux
  coefficient.  Two square roots of the same function differ globally
  by a sign, so comparing leading coefficients is conclusive.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import RootSelectorInconsistent
from .poly import Poly
from .ratfunc import RatFunc, ratfunc_is_square
from .rationals import INF, SqrtPair


class QuadExt:
    """Field context: the radicand and the selected branch of its root."""

    __slots__ = ("D", "half_val", "branch_lc")

    def __init__(self, D: RatFunc):
        if isinstance(D, Poly):
            D = RatFunc(D)
        if D.is_zero():
            raise ValueError("zero radicand")
        ok, _ = ratfunc_is_square(D)
        if ok:
            raise ValueError("radicand is a square; use rational elements instead")
        self.D = D
        self.half_val = D.valuation() / 2
        root = SqrtPair.sqrt_of_rational(D.low_coeff())
        # canonical branch: positive rho in rho*sqrt(s)
        if root.b < 0:
            root = -root
        self.branch_lc = root

    @property
    def var(self):
        return self.D.var

    def same_as(self, other: "QuadExt") -> bool:
        return self is other or self.D == other.D

    def __repr__(self):
        return f"QuadExt(sqrt({self.D}))"


class QuadExtElem:
    """p + q*w, with w the selected square root of the context radicand.

    ctx is None for elements of the ground field Q(t); those coerce
    freely into any context.
    """

    __slots__ = ("ctx", "p", "q")

    def __init__(self, p, q=None, ctx: QuadExt | None = None):
        if isinstance(p, (int, Fraction, Poly)):
            p = RatFunc(p) if isinstance(p, Poly) else RatFunc.const(p)
        if q is None:
            q = RatFunc.const(0, p.var)
        elif isinstance(q, (int, Fraction, Poly)):
            q = RatFunc(q) if isinstance(q, Poly) else RatFunc.const(q, p.var)
        if ctx is None and not q.is_zero():
            raise ValueError("radical coefficient without a context")
        if ctx is not None and q.is_zero():
            ctx = None
        self.ctx = ctx
        self.p = p
        self.q = q

    # -- spec-facing field names ---------------------------------------

    @property
    def base(self):
        return self.p

    @property
    def radical_coeff(self):
        return self.q

    @property
    def radicand(self):
        return self.ctx.D if self.ctx is not None else None

    @property
    def root_selector(self):
        """Leading Puiseux term (exponent, coefficient) of this element."""
        return self.leading_term()

    # -- helpers ---------------------------------------------------------

    @classmethod
    def sqrt(cls, ctx: QuadExt) -> "QuadExtElem":
        return cls(RatFunc.const(0, ctx.var), RatFunc.const(1, ctx.var), ctx)

    def is_zero(self):
        return self.p.is_zero() and self.q.is_zero()

    def is_rational(self):
        return self.q.is_zero()

    def _join_ctx(self, other: "QuadExtElem") -> QuadExt | None:
        a, b = self.ctx, other.ctx
        if a is None:
            return b
        if b is None:
            return a
        if a.same_as(b):
            return a
        raise ValueError("arithmetic across distinct quadratic extensions")

    def _coerce(self, other):
        if isinstance(other, QuadExtElem):
            return other
        if isinstance(other, (int, Fraction, Poly, RatFunc)):
            return QuadExtElem(other if isinstance(other, RatFunc) else RatFunc(other)
                               if isinstance(other, Poly) else RatFunc.const(other, self.p.var))
        return None

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self._join_ctx(o)
        return QuadExtElem(self.p + o.p, self.q + o.q, ctx)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElem(-self.p, -self.q, self.ctx)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self._join_ctx(o)
        if ctx is None:
            return QuadExtElem(self.p * o.p)
        D = ctx.D
        p = self.p * o.p + self.q * o.q * D
        q = self.p * o.q + self.q * o.p
        return QuadExtElem(p, q, ctx)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadExtElem(RatFunc.const(1, self.p.var))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self):
        return QuadExtElem(self.p, -self.q, self.ctx)

    def norm(self) -> RatFunc:
        if self.ctx is None:
            return self.p * self.p
        return self.p * self.p - self.q * self.q * self.ctx.D

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        n = self.norm()
        return QuadExtElem(self.p / n, -self.q / n, self.ctx)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    # -- valuation and leading term ---------------------------------------

    def valuation(self):
        """Exact t-adic valuation under the Puiseux embedding."""
        if self.is_zero():
            return INF
        if self.q.is_zero():
            return self.p.valuation()
        mq = self.q.valuation() + self.ctx.half_val
        if self.p.is_zero():
            return mq
        mp = self.p.valuation()
        if mp != mq:
            return min(mp, mq)
        lead = SqrtPair(self.p.low_coeff()) + self.q.low_coeff() * self.ctx.branch_lc
        if not lead.is_zero():
            return mp
        # cancellation: the conjugate cannot cancel too, so use the norm
        return self.norm().valuation() - mp

    def leading_term(self):
        """(exponent, SqrtPair coefficient) of the leading Puiseux term.

        Only when the top terms of p and q*w cancel does this need the
        full expansion machinery; that case recurses through puiseux.
        """
        v = self.valuation()
        if v == INF:
            raise ValueError("leading term of zero element")
        coeff = SqrtPair(0)
        if not self.p.is_zero() and self.p.valuation() == v:
            coeff = coeff + SqrtPair(self.p.low_coeff())
        if not self.q.is_zero() and self.q.valuation() + self.ctx.half_val == v:
            coeff = coeff + self.q.low_coeff() * self.ctx.branch_lc
        if not coeff.is_zero():
            return v, coeff
        # deep cancellation: expand far enough to see the first term
        from .puiseux import puiseux_expand

        ser = puiseux_expand(self, v + 2)
        lt = ser.leading_term()
        if lt is None:
            raise AssertionError("expansion inconsistent with valuation bound")
        return lt

    # -- equality -----------------------------------------------------------

    def equals(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.q.is_zero() or o.q.is_zero():
            return self.q.is_zero() and o.q.is_zero() and self.p == o.p
        if self.ctx.same_as(o.ctx):
            return self.p == o.p and self.q == o.q
        # distinct radicands: match minimal polynomials, then branches
        if self.p != o.p:
            return False
        R1 = self.q * self.q * self.ctx.D
        R2 = o.q * o.q * o.ctx.D
        if R1 != R2:
            return False
        lt1 = self.q.low_coeff() * self.ctx.branch_lc
        lt2 = o.q.low_coeff() * o.ctx.branch_lc
        if lt1.s != lt2.s:
            raise AssertionError("equal squares with distinct surd classes")
        return lt1 == lt2

    def __eq__(self, other):
        return self.equals(other)

    def __hash__(self):
        if self.q.is_zero():
            return hash(self.p)
        raise TypeError("irrational QuadExtElem is unhashable")

    def minimal_poly_coeffs(self):
        """Monic minimal polynomial over Q(t) as a coefficient list."""
        if self.q.is_zero():
            return [-self.p, RatFunc.const(1, self.p.var)]
        one = RatFunc.const(1, self.p.var)
        return [self.norm(), -(self.p + self.p), one]

    def __repr__(self):
        if self.q.is_zero():
            return str(self.p)
        return f"({self.p}) + ({self.q})*w[{self.ctx.D}]"


def t_valuation(f):
    """Valuation at t = 0 of a RatFunc or QuadExtElem (INF for 0)."""
    if isinstance(f, (RatFunc, QuadExtElem)):
        return f.valuation()
    if isinstance(f, Poly):
        return f.valuation()
    raise TypeError(f"no valuation for {type(f).__name__}")


def sqrt_with_selector(D, expected_exponent=None, expected_coeff=None) -> QuadExtElem:
    """Selected square root of D, optionally checked against a stored
    leading term; a mismatch raises RootSelectorInconsistent.

    A radicand that is already a square in Q(t) folds into a rational
    element (radical coefficient zero), selected-branch-first.
    """
    D = D if isinstance(D, RatFunc) else RatFunc(D)
    ok, w0 = ratfunc_is_square(D)
    if ok:
        if w0.low_coeff() < 0:
            w0 = -w0
        w = QuadExtElem(w0)
        half_val, lead = w0.valuation(), SqrtPair(w0.low_coeff())
    else:
        ctx = QuadExt(D)
        w = QuadExtElem.sqrt(ctx)
        half_val, lead = ctx.half_val, ctx.branch_lc
    if expected_exponent is not None and half_val != expected_exponent:
        raise RootSelectorInconsistent(
            f"expected exponent {expected_exponent}, root has {half_val}"
        )
    if expected_coeff is not None:
        want = expected_coeff if isinstance(expected_coeff, SqrtPair) else SqrtPair(expected_coeff)
        if lead != want:
            if lead == -want:
                # caller wants the other root
                return -w
            raise RootSelectorInconsistent(
                f"stored leading coefficient {want} is not a root selector for {D}"
            )
    return w
