"""Brute-force oracle: dynamic-programming enumeration of the walks.

Contact convention.  A boundary contact is counted at every step whose
*resulting position* lies on the axis: landing on y = 0 multiplies the
walk weight by a, landing on x = 0 by b, and a step into the corner
(unreachable for these supports) would collect both.  The convention is
pinned against the kernel functional equation by
functional_equation_residual, which must vanish identically.

The empty walk contributes 1 with no contacts, so every series starts
with constant term 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import ResidualNonZero
from .exactalg import Poly, rat_from_string, rat_to_string
from .model import Model, functional_equation_coeffs


@dataclass
class SeriesTruncation:
    """Q(x, y) mod t^(N+1): terms[n] maps (i, j) to the exact weighted
    count of n-step walks ending at (i, j)."""

    order: int
    terms: list

    def __getitem__(self, n) -> dict:
        return self.terms[n]

    def to_json(self) -> str:
        doc = [
            [
                [i, j, rat_to_string(c)]
                for (i, j), c in sorted(term.items())
                if c != 0
            ]
            for term in self.terms
        ]
        return json.dumps(doc)

    @classmethod
    def from_json(cls, text: str) -> "SeriesTruncation":
        doc = json.loads(text)
        terms = [
            {(int(i), int(j)): rat_from_string(c) for i, j, c in entries}
            for entries in doc
        ]
        return cls(order=len(terms) - 1, terms=terms)


def enumerate_walks(model: Model, order: int) -> SeriesTruncation:
    """Exact sum over all quadrant walks of each length up to order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    a, b = model.a, model.b
    steps = [(s, model.d(*s)) for s in sorted(model.stepset.steps)]
    layer = {(0, 0): Fraction(1)}
    terms = [dict(layer)]
    for _ in range(order):
        new = {}
        for (i, j), wt in layer.items():
            for (di, dj), dv in steps:
                ni, nj = i + di, j + dj
                if ni < 0 or nj < 0:
                    continue
                w = wt * dv
                if nj == 0:
                    w *= a
                if ni == 0:
                    w *= b
                key = (ni, nj)
                prev = new.get(key)
                new[key] = w if prev is None else prev + w
        layer = new
        terms.append(dict(layer))
    return SeriesTruncation(order=order, terms=terms)


def specialize(series: SeriesTruncation, which: str):
    """Substitute per term: which is "y=0", "x=0", or "x=1,y=1".

    Axis specializations return dicts (exponent of the surviving
    variable -> coefficient); the full evaluation returns Fractions.
    """
    out = []
    for term in series.terms:
        if which == "y=0":
            out.append({i: c for (i, j), c in term.items() if j == 0})
        elif which == "x=0":
            out.append({j: c for (i, j), c in term.items() if i == 0})
        elif which == "x=1,y=1":
            out.append(sum(term.values(), Fraction(0)))
        else:
            raise ValueError(f"unknown specialization {which!r}")
    return out


def axis_series_to_poly(spec: list, var: str) -> list:
    """Dict layers from specialize() as Poly coefficients per t-order."""
    out = []
    for layer in spec:
        n = max(layer, default=0)
        coeffs = [layer.get(k, Fraction(0)) for k in range(n + 1)]
        out.append(Poly(coeffs, var))
    return out


def functional_equation_residual(model: Model, series: SeriesTruncation, order=None):
    """Left minus right side of the kernel equation, mod t^(order+1).

    The contract is that it vanishes identically; a nonzero monomial
    raises ResidualNonZero, which means the contact convention or the
    kernel coefficients are wrong -- a bug, not a data condition.
    """
    if order is None:
        order = series.order
    K, omega_xy, c1, c2 = functional_equation_coeffs(model)
    qx0 = specialize(series, "y=0")
    q0y = specialize(series, "x=0")

    residual = [dict() for _ in range(order + 1)]

    def add_term(m, key, val):
        cur = residual[m].get(key, Fraction(0)) + val
        if cur == 0:
            residual[m].pop(key, None)
        else:
            residual[m][key] = cur

    def accumulate(coeff_xy, layers, sign, axis):
        # coeff_xy has Poly(t) coefficients; layers are indexed by t-order
        for (di, dj), tc in coeff_xy.terms.items():
            for tp, tval in enumerate(tc.coeffs):
                if tval == 0:
                    continue
                for n, layer in enumerate(layers):
                    m = n + tp
                    if m > order:
                        break
                    if axis is None:
                        for (i, j), c in layer.items():
                            add_term(m, (i + di, j + dj), sign * tval * c)
                    elif axis == "x":
                        for e, c in layer.items():
                            add_term(m, (e + di, dj), sign * tval * c)
                    else:
                        for e, c in layer.items():
                            add_term(m, (di, e + dj), sign * tval * c)

    accumulate(K, series.terms, 1, None)
    add_term(0, (1, 1), -model.omega)
    accumulate(c1, qx0, -1, "x")
    accumulate(c2, q0y, -1, "y")

    for n, layer in enumerate(residual):
        for key, val in sorted(layer.items()):
            if val != 0:
                raise ResidualNonZero(n, key, val)
    return residual
