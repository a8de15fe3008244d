"""Classification of Q(x, y): rational, algebraic, or not D-algebraic.

The verdict is never a bare table lookup: every branch re-derives the
evidence it rests on.

* Homogeneous side: for each weight cell the analysis either exhibits a
  signed multiplicative splitting of gamma1/gamma2 (with every minus
  sign certified by a non-squareness test of the exact polynomial whose
  square root the function is) or points at an all-bottom row of M1,
  cross-checked against the computed matrix.  A genuine solution exists
  only for S3 at A = B = 1/2.

* Inhomogeneous side: pole confinement follows from the sign pattern of
  M1 or M2; the one stubborn family (S1, B = 1/2, A != 1/2) is settled
  by two computational facts: the unique nonnegative M2 entry is
  delta(i2 P4, P4) = 1, and u*gamma2 vanishes exactly at {P4, i2 P4}.

* Solvable cases produce closed forms for Q(x,0) and Q(0,y) that
  verify_closed_form expands as exact t-series and compares coefficient
  by coefficient against the walk enumeration.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .curve import critical_sets, curve_zeros
from .enumerator import axis_series_to_poly, enumerate_walks, specialize
from .errors import (
    CoverageGap,
    EvidenceFailed,
    IdentityFailed,
    OracleMismatch,
    TableCellMismatch,
)
from .exactalg import (
    Poly,
    RatFunc,
    TSeries,
    XYPoly,
    expand_ratfunc,
    reduce_mod,
    xpoly_is_square,
)
from .model import Model
from .sigmadist import DistanceMatrix, build_matrices

HALF = Fraction(1, 2)

X = XYPoly.monomial(1, 1, 0)
Y = XYPoly.monomial(1, 0, 1)


def _t() -> Poly:
    return Poly.gen("t")


def _x_gamma1(model: Model) -> XYPoly:
    """x * gamma1 = A - t d1m1 x/y as a Laurent polynomial."""
    return XYPoly({(0, 0): Poly.const(model.A), (1, -1): -_t().scale(model.d(1, -1))})


def _y_gamma2(model: Model) -> XYPoly:
    return XYPoly({(0, 0): Poly.const(model.B), (-1, 1): -_t().scale(model.d(-1, 1))})


def _u_lambda(model: Model, lam: Fraction) -> XYPoly:
    """(1 - lam) - t d10 x - t d1m1 x/y; defined for d11 = 0 supports."""
    return XYPoly(
        {
            (0, 0): Poly.const(1 - lam),
            (1, 0): -_t().scale(model.d(1, 0)),
            (1, -1): -_t().scale(model.d(1, -1)),
        }
    )


def _residual_check(model: Model, name: str, diff: XYPoly) -> dict:
    r = reduce_mod(diff, model.K)
    if not r.is_zero():
        raise IdentityFailed(name, repr(r))
    return {"identity": name, "residual": "0"}


# -- the identity battery ------------------------------------------------


def verify_identity_lemmas(model: Model, lambdas=None) -> list:
    """Verify, as exact congruences modulo the kernel, every splitting
    identity available on this support; returns the report entries."""
    report = []
    t = _t()
    d = model.d
    if model.d(1, 1) == 0:
        for lam in lambdas if lambdas is not None else (model.A, HALF):
            u = _u_lambda(model, lam)
            # antisymmetric complement: u_lam = -(lam - t d01 y - t dm11 y/x)
            mirror = XYPoly(
                {
                    (0, 0): Poly.const(lam),
                    (0, 1): -t.scale(d(0, 1)),
                    (-1, 1): -t.scale(d(-1, 1)),
                }
            )
            report.append(
                _residual_check(model, f"u-complement(lam={lam})", u + mirror)
            )
            lhs = (XYPoly({(0, 0): Poly.const(lam - model.A)}) + _x_gamma1(model)) * u
            rhs = XYPoly(
                {
                    (0, 0): Poly.const(lam * (1 - lam)) - (t * t).scale(d(1, -1) * d(-1, 1)),
                    (1, 0): -(t.scale(lam * d(1, 0)) + (t * t).scale(d(1, -1) * d(0, 1))),
                }
            )
            report.append(
                _residual_check(model, f"u-x-product(lam={lam})", lhs - rhs)
            )
            lhs = -(XYPoly({(0, 0): Poly.const(1 - lam - model.B)}) + _y_gamma2(model)) * u
            rhs = XYPoly(
                {
                    (0, 0): Poly.const(lam * (1 - lam)) - (t * t).scale(d(1, -1) * d(-1, 1)),
                    (0, 1): -(t.scale((1 - lam) * d(0, 1)) + (t * t).scale(d(-1, 1) * d(1, 0))),
                }
            )
            report.append(
                _residual_check(model, f"u-y-product(lam={lam})", lhs - rhs)
            )
    if model.d(1, 0) == 0 and model.d(0, 1) == 0:
        g = _x_gamma1(model) + XYPoly({(0, 0): Poly.const(HALF - model.A)})
        report.append(
            _residual_check(model, "x-side-square", g * g - _sq_form_x(model))
        )
        g = _y_gamma2(model) + XYPoly({(0, 0): Poly.const(HALF - model.B)})
        report.append(
            _residual_check(model, "y-side-square", g * g - _sq_form_y(model))
        )
    if model.tag == "S1" and model.B == HALF:
        u = _u_lambda(model, HALF)
        report.append(_residual_check(model, "edge-u-square", u * u - _sq_form_x(model)))
        mu = _edge_mu_form(model)
        report.append(
            _residual_check(model, "edge-y-product", -(_y_gamma2(model) * u) - mu)
        )
    return report


def _sq_form_x(model: Model) -> XYPoly:
    """1/4 - t^2 d1m1 dm11 - t^2 d1m1 d01 x - t^2 d1m1 d11 x^2: the
    square of x*gamma1 on the curve when A = 1/2 and d10 = 0."""
    t2 = _t() * _t()
    d = model.d
    return XYPoly(
        {
            (0, 0): Poly.const(Fraction(1, 4)) - t2.scale(d(1, -1) * d(-1, 1)),
            (1, 0): -t2.scale(d(1, -1) * d(0, 1)),
            (2, 0): -t2.scale(d(1, -1) * d(1, 1)),
        }
    )


def _sq_form_y(model: Model) -> XYPoly:
    t2 = _t() * _t()
    d = model.d
    return XYPoly(
        {
            (0, 0): Poly.const(Fraction(1, 4)) - t2.scale(d(1, -1) * d(-1, 1)),
            (0, 1): -t2.scale(d(-1, 1) * d(1, 0)),
            (0, 2): -t2.scale(d(-1, 1) * d(1, 1)),
        }
    )


def _edge_mu_form(model: Model) -> XYPoly:
    t = _t()
    d = model.d
    return XYPoly(
        {
            (0, 0): Poly.const(Fraction(1, 4)) - (t * t).scale(d(1, -1) * d(-1, 1)),
            (0, 1): -t.scale(HALF * d(0, 1)),
        }
    )


# -- homogeneous analysis -------------------------------------------------


@dataclass
class HomStatus:
    """Outcome for the homogeneous decoupling equation.

    kind is "solution" (only S3 with A = B = 1/2, pair 1/gamma1 and
    -1/gamma2) or "no-solution" with either a bottom-row witness or a
    signed splitting whose signs are not both minus.
    """

    kind: str
    bot_row: int | None = None
    signs: tuple | None = None
    solution: tuple | None = None
    certificates: list = field(default_factory=list)

    def to_jsonable(self):
        out = {"kind": self.kind}
        if self.bot_row is not None:
            out["bot_row"] = self.bot_row
        if self.signs is not None:
            out["signs"] = [("+" if s > 0 else "-") for s in self.signs]
        if self.solution is not None:
            out["solution"] = list(self.solution)
        out["certificates"] = self.certificates
        return out


def _split_gamma1(model: Model):
    """Signed splitting of gamma1 (iota1 parity, iota2 parity), or None.

    返回 (eps11, eps12, certificates); the minus sign is certified by a
    non-squareness check of the explicit polynomial.
    """
    if model.A == 0:
        # gamma1 = -t d1m1 / y is a function of y alone
        return 1, 1, [{"certificate": "gamma1-pure-y", "holds": True}]
    if model.A == HALF and model.d(1, 0) == 0:
        sq = _sq_form_x(model)
        _residual_check(model, "x-side-square", (_x_gamma1(model)) * (_x_gamma1(model)) - sq)
        if xpoly_is_square(sq):
            raise TableCellMismatch("x-side square form is a square; sign cannot be -")
        return -1, 1, [{"certificate": "x-side-square-nonsquare", "holds": True}]
    return None


def _split_gamma2(model: Model):
    if model.B == 0:
        return 1, 1, [{"certificate": "gamma2-pure-x", "holds": True}]
    if model.B == HALF and model.tag == "S3":
        sq = _sq_form_y(model)
        _residual_check(model, "y-side-square", (_y_gamma2(model)) * (_y_gamma2(model)) - sq)
        if xpoly_is_square(sq):
            raise TableCellMismatch("y-side square form is a square; sign cannot be -")
        return 1, -1, [{"certificate": "y-side-square-nonsquare", "holds": True}]
    if model.B == HALF and model.tag == "S1":
        u = _u_lambda(model, HALF)
        usq = _sq_form_x(model)
        _residual_check(model, "edge-u-square", u * u - usq)
        if xpoly_is_square(usq):
            raise TableCellMismatch("edge u^2 is a square; sign cannot be -")
        mu = _edge_mu_form(model)
        _residual_check(model, "edge-y-product", -(_y_gamma2(model) * u) - mu)
        # gamma2 = (1/u) * (-mu/y): first factor iota1-odd, second pure y
        return -1, 1, [
            {"certificate": "edge-u-square-nonsquare", "holds": True},
            {"certificate": "edge-y-product-identity", "holds": True},
        ]
    return None


def _verified_bot_row(model: Model, M1: DistanceMatrix, row: int) -> HomStatus:
    entries = M1.entries[row - 1]
    if any(e is not None for e in entries):
        raise TableCellMismatch(
            f"expected row {row} of M1 to be all bottom, got {entries}"
        )
    return HomStatus(
        kind="no-solution",
        bot_row=row,
        certificates=[{"certificate": f"M1-row-{row}-all-bot", "holds": True}],
    )


def homogeneous_analysis(model: Model, M1: DistanceMatrix) -> HomStatus:
    """Reproduce the homogeneous-equation table cell for this model,
    with its witness verified (bottom row against M1, signs against
    identity and non-squareness certificates)."""
    A, B = model.A, model.B
    if model.tag in ("S1", "S2") and A + B == 1:
        certs = verify_identity_lemmas(model, lambdas=(A,))
        return HomStatus(
            kind="no-solution",
            signs=(1, 1),
            certificates=[{"certificate": "u-split-both-even", "holds": True}]
            + certs,
        )
    if A in (0, HALF) and B in (0, HALF):
        s1 = _split_gamma1(model)
        s2 = _split_gamma2(model)
        if s2 is None:
            return _verified_bot_row(model, M1, 4)
        if s1 is None:
            return _verified_bot_row(model, M1, 2)
        eps1 = s1[0] * s2[0]
        eps2 = s1[1] * s2[1]
        certs = s1[2] + s2[2]
        if (eps1, eps2) == (-1, -1):
            return HomStatus(
                kind="solution",
                signs=(eps1, eps2),
                solution=("1/gamma1", "-1/gamma2"),
                certificates=certs,
            )
        return HomStatus(kind="no-solution", signs=(eps1, eps2), certificates=certs)
    if A + B == 1:
        return _verified_bot_row(model, M1, 2)
    if A not in (0, HALF):
        return _verified_bot_row(model, M1, 2)
    return _verified_bot_row(model, M1, 4)


# -- inhomogeneous analysis ----------------------------------------------


def inhomogeneous_analysis(model: Model, M1: DistanceMatrix, M2: DistanceMatrix) -> str:
    """Pole confinement verdict: "h1-confined" when every M1 entry is
    strictly negative or bottom, "h2-confined" likewise for M2,
    "edge-case" for the S1, B = 1/2, A != 1/2 family, else
    "inconclusive".

    Often both matrices are confined at once and either argument would
    do; the tie is broken the way the full classification argues each
    support (M1 for S2 and S3, M2 for S1, S4 and S5), so reports line
    up with the expected per-support evidence.  Each condition is still
    checked on the computed matrix, never assumed.
    """
    if model.tag == "S1" and model.B == HALF and model.A != HALF:
        return "edge-case"
    order = ("m1", "m2") if model.tag in ("S2", "S3") else ("m2", "m1")
    for which in order:
        M = M1 if which == "m1" else M2
        if M.strictly_negative_or_bot():
            return "h1-confined" if which == "m1" else "h2-confined"
    return "inconclusive"


def edge_case_checks(model: Model, M2: DistanceMatrix | None = None) -> dict:
    """The two computational facts behind the S1, B = 1/2, A != 1/2
    verdict: (a) the unique nonnegative entry of M2 is the diagonal
    delta(i2 P4, P4) = 1; (b) u*gamma2 vanishes exactly at P4 and
    i2 P4.  Raises EvidenceFailed if either fails."""
    if not (model.tag == "S1" and model.B == HALF and model.A != HALF):
        raise ValueError("edge case checks require S1 with B = 1/2, A != 1/2")
    if M2 is None:
        _, M2 = build_matrices(model)
    nonneg = M2.nonnegative_entries()
    if len(nonneg) != 1 or nonneg[0][2] != 1 or nonneg[0][:2] not in ((2, 2), (3, 3)):
        raise EvidenceFailed(f"nonnegative M2 entries {nonneg} are not the single "
                             "diagonal +1 in the gamma2 block")
    k = nonneg[0][0]  # 2 or 3: which of P3/P4 carries the pole pair
    sets = critical_sets(model)
    p = sets.L2_plus[k]
    i2p = sets.L2_minus[k]
    u = _u_lambda(model, HALF)
    zeros = curve_zeros(model, [u, model.gamma2_xy()])
    expected = [p, i2p]
    ok = (
        len(zeros) == 2
        and all(m == 1 for _, m in zeros)
        and all(any(pt == q for q in expected) for pt, _ in zeros)
        and zeros[0][0] != zeros[1][0]
    )
    if not ok:
        raise EvidenceFailed("zeros of u*gamma2 differ from the expected pair")
    return {
        "matrix_fact": {"entry": list(nonneg[0][:2]), "value": 1},
        "divisor_fact": "u*gamma2 vanishes exactly at the pole pair",
    }


# -- closed forms ----------------------------------------------------------


@dataclass
class ClosedForm:
    """Q(var, 0) or Q(0, var) in closed form.

    geometric: 1/(1 - var * ratio(t));  inverse-sqrt: the reciprocal
    square root 1/sqrt(1 - var^2 * ratio(t)).
    """

    kind: str
    var: str
    ratio: RatFunc

    def to_string(self) -> str:
        r = f"({self.ratio})"
        if self.kind == "geometric":
            return f"1/(1 - {self.var}*{r})"
        return f"1/sqrt(1 - {self.var}^2*{r})"

    def expand(self, order: int) -> TSeries:
        rt = expand_ratfunc(self.ratio, order)
        terms = {int(e): c.a for e, c in rt.term_dict().items()}
        var_poly = Poly.gen(self.var)
        power = 1 if self.kind == "geometric" else 2
        coeffs = [
            Poly.zero(self.var) if k not in terms
            else Poly.monomial(-terms[k], power, self.var)
            for k in range(order + 1)
        ]
        body = TSeries.const(1, order, self.var) + TSeries(coeffs, order, self.var)
        return body.inverse() if self.kind == "geometric" else body.inv_sqrt()


def rational_closed_forms(model: Model):
    t = _t()
    a, b, d = model.a, model.b, model.d
    den = Poly.const(1) - (t * t).scale(a * b * d(1, -1) * d(-1, 1))
    rx = RatFunc(t.scale(a * d(1, 0)) + (t * t).scale(a * b * d(1, -1) * d(0, 1)), den)
    ry = RatFunc(t.scale(b * d(0, 1)) + (t * t).scale(a * b * d(-1, 1) * d(1, 0)), den)
    return ClosedForm("geometric", "x", rx), ClosedForm("geometric", "y", ry)


def algebraic_closed_forms(model: Model):
    t = _t()
    d = model.d
    den = Poly.const(1) - (t * t).scale(4 * d(1, -1) * d(-1, 1))
    wx = RatFunc((t * t).scale(4 * d(1, 1) * d(1, -1)), den)
    wy = RatFunc((t * t).scale(4 * d(1, 1) * d(-1, 1)), den)
    return ClosedForm("inverse-sqrt", "x", wx), ClosedForm("inverse-sqrt", "y", wy)


# -- classification ---------------------------------------------------------


@dataclass
class Classification:
    verdict: str  # "Rational" | "Algebraic" | "NotDAlgebraic"
    closed_forms: dict | None
    trail: list

    def to_jsonable(self):
        return {
            "verdict": self.verdict,
            "closed_forms": None
            if self.closed_forms is None
            else {k: v.to_string() for k, v in self.closed_forms.items()},
            "trail": self.trail,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True)


def classify(model: Model, window: int = 5) -> Classification:
    """Theorem-level verdict with a machine-checked evidence trail.

    Rational and algebraic verdicts carry closed forms; every
    not-D-algebraic verdict records which argument fired (matrix sign
    confinement plus homogeneous non-solution, or the edge-case facts).
    Raises CoverageGap if no argument applies, which the theory rules
    out.
    """
    trail = []
    A, B = model.A, model.B
    if model.tag in ("S1", "S2") and A + B == 1:
        certs = verify_identity_lemmas(model, lambdas=(A,))
        fx, fy = rational_closed_forms(model)
        trail.append({"rule": "interaction-weights-on-rational-curve (a+b=ab)",
                      "evidence": [c["identity"] for c in certs]})
        trail.append({"rule": "inhomogeneous-decoupling-solution",
                      "evidence": "pair built from the u-split at lam=A"})
        return Classification("Rational", {"Qx0": fx, "Q0y": fy}, trail)

    M1, M2 = build_matrices(model, window=window)

    hom = homogeneous_analysis(model, M1)
    if hom.kind == "solution":
        if not (model.tag == "S3" and A == HALF and B == HALF):
            raise CoverageGap(
                "homogeneous solution outside the S3, A=B=1/2 cell"
            )
        fx, fy = algebraic_closed_forms(model)
        trail.append({"rule": "homogeneous-solution (1/gamma1, -1/gamma2)",
                      "evidence": hom.to_jsonable()})
        return Classification("Algebraic", {"Qx0": fx, "Q0y": fy}, trail)

    trail.append({"rule": "homogeneous-no-solution", "evidence": hom.to_jsonable()})

    verdict = inhomogeneous_analysis(model, M1, M2)
    if verdict == "h1-confined":
        trail.append({"rule": "pole-confinement-M1",
                      "evidence": {"matrix": M1.to_jsonable()}})
        return Classification("NotDAlgebraic", None, trail)
    if verdict == "h2-confined":
        trail.append({"rule": "pole-confinement-M2",
                      "evidence": {"matrix": M2.to_jsonable()}})
        return Classification("NotDAlgebraic", None, trail)
    if verdict == "edge-case":
        checks = edge_case_checks(model, M2)
        trail.append({"rule": "edge-case-S1-half", "evidence": checks})
        return Classification("NotDAlgebraic", None, trail)
    raise CoverageGap(f"no classification rule fired for {model!r}")


def verify_closed_form(model: Model, order: int = 12,
                       classification: Classification | None = None) -> dict:
    """Expand the closed forms to the given order and compare them
    exactly against the dynamic-programming enumeration."""
    if classification is None:
        classification = classify(model)
    if classification.closed_forms is None:
        raise ValueError("no closed forms to verify for this verdict")
    series = enumerate_walks(model, order)
    report = {"order": order, "verdict": classification.verdict, "checked": []}
    for key, which, var in (("Qx0", "y=0", "x"), ("Q0y", "x=0", "y")):
        form = classification.closed_forms[key]
        expanded = form.expand(order)
        dp = axis_series_to_poly(specialize(series, which), var)
        for n in range(order + 1):
            if expanded.coefficient(n) != dp[n]:
                raise OracleMismatch(
                    n, f"({key}: closed form {expanded.coefficient(n)} vs walks {dp[n]})"
                )
        report["checked"].append(key)
    return report
