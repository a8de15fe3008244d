"""The five genus-zero weighted models.

A model is a step set S1..S5, positive rational step weights d_v, and
boundary (Boltzmann) weights a, b > 0.  Internally all algebra uses
A = 1 - 1/a and B = 1 - 1/b; the kernel is K(x, y) = xy(1 - t S(x, y))
with S the weighted step Laurent polynomial.  The supports always
contain (1,-1) and (-1,1):

    S1 = {(1,-1), (-1,1), (0,1)}
    S2 = S1 + {(1,0)}
    S3 = {(1,-1), (-1,1), (1,1)}
    S4 = S3 + {(0,1)}
    S5 = all five steps
"""

from __future__ import annotations

import json
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidSupport, ModelFormatError, NonPositiveWeight
from .exactalg import Poly, Rat, RatFunc, XYPoly, rat_from_string, rat_to_string

ALL_STEPS = ((1, -1), (-1, 1), (1, 0), (0, 1), (1, 1))

_SUPPORTS = {
    "S1": frozenset({(1, -1), (-1, 1), (0, 1)}),
    "S2": frozenset({(1, -1), (-1, 1), (0, 1), (1, 0)}),
    "S3": frozenset({(1, -1), (-1, 1), (1, 1)}),
    "S4": frozenset({(1, -1), (-1, 1), (1, 1), (0, 1)}),
    "S5": frozenset(ALL_STEPS),
}


@dataclass(frozen=True)
class StepSet:
    tag: str

    def __post_init__(self):
        if self.tag not in _SUPPORTS:
            raise InvalidSupport(f"unknown step set {self.tag!r}")

    @property
    def steps(self) -> frozenset:
        return _SUPPORTS[self.tag]

    def __contains__(self, step):
        return tuple(step) in self.steps

    def __str__(self):
        return self.tag


@dataclass(frozen=True)
class Weighting:
    """Step weights (0 exactly on absent steps) and boundary weights."""

    d: dict
    a: Fraction
    b: Fraction

    def weight(self, step) -> Fraction:
        return self.d.get(tuple(step), Fraction(0))


class Model:
    """A validated weighted model with its derived kernel data."""

    def __init__(self, stepset: StepSet, weighting: Weighting):
        self.stepset = stepset
        self.weighting = weighting
        a, b = weighting.a, weighting.b
        self.a, self.b = a, b
        self.A = 1 - 1 / a
        self.B = 1 - 1 / b
        self.omega = (a + b - a * b) / (a * b)
        assert self.omega == 1 - self.A - self.B
        self.S = _step_laurent(weighting)
        self.K = _kernel(self.S)

    # step weights by name, 0 when absent
    def d(self, i, j) -> Fraction:
        return self.weighting.weight((i, j))

    @property
    def tag(self):
        return self.stepset.tag

    def gamma1_xy(self) -> XYPoly:
        """gamma_1 = A/x - t d_{1,-1}/y as a Laurent polynomial."""
        t = Poly.gen("t")
        return XYPoly({(-1, 0): Poly.const(self.A), (0, -1): -t.scale(self.d(1, -1))})

    def gamma2_xy(self) -> XYPoly:
        t = Poly.gen("t")
        return XYPoly({(0, -1): Poly.const(self.B), (-1, 0): -t.scale(self.d(-1, 1))})

    def __repr__(self):
        ws = ", ".join(
            f"d[{i},{j}]={rat_to_string(self.d(i, j))}"
            for (i, j) in ALL_STEPS
            if (i, j) in self.stepset
        )
        return (
            f"Model({self.tag}, {ws}, a={rat_to_string(self.a)}, "
            f"b={rat_to_string(self.b)})"
        )


def _step_laurent(w: Weighting) -> XYPoly:
    t_terms = {}
    for (i, j) in ALL_STEPS:
        c = w.weight((i, j))
        if c:
            t_terms[(i, j)] = Poly.const(c)
    return XYPoly(t_terms)


def _kernel(S: XYPoly) -> XYPoly:
    t = Poly.gen("t")
    xy = XYPoly.monomial(1, 1, 1)
    return xy - XYPoly({(i + 1, j + 1): c * t for (i, j), c in S.terms.items()})


def build_model(stepset, weighting) -> Model:
    """Validate support and weights, then populate the derived fields."""
    if isinstance(stepset, str):
        stepset = StepSet(stepset)
    d = {tuple(k): Fraction(v) for k, v in weighting.d.items()}
    for step, val in d.items():
        if step not in ALL_STEPS:
            raise InvalidSupport(f"step {step} is not a small genus-zero step")
        if step in stepset.steps:
            if val <= 0:
                raise NonPositiveWeight(f"step {step} needs a positive weight")
        elif val != 0:
            raise InvalidSupport(f"step {step} is absent from {stepset.tag}")
    for step in stepset.steps:
        if d.get(step, Fraction(0)) <= 0:
            raise InvalidSupport(f"step {step} of {stepset.tag} has no weight")
    a, b = Fraction(weighting.a), Fraction(weighting.b)
    if a <= 0 or b <= 0:
        raise NonPositiveWeight("boundary weights must be positive")
    # finite positive a, b force A, B < 1; guard kept for malformed input
    if 1 - 1 / a >= 1 or 1 - 1 / b >= 1:
        raise NonPositiveWeight("boundary weights give A or B >= 1")
    w = Weighting(d={s: d.get(s, Fraction(0)) for s in ALL_STEPS}, a=a, b=b)
    return Model(stepset, w)


def make_model(tag, d=None, a=1, b=1, **step_weights) -> Model:
    """Convenience builder: unit weights on the support by default.

    Step weights may be overridden per step with keywords d11, d1m1,
    dm11, d10, d01 (m encodes a minus sign).
    """
    names = {"d1m1": (1, -1), "dm11": (-1, 1), "d10": (1, 0), "d01": (0, 1), "d11": (1, 1)}
    ss = StepSet(tag)
    weights = {s: Fraction(1) for s in ss.steps}
    if d is not None:
        weights = {s: Fraction(d) for s in ss.steps}
    for name, val in step_weights.items():
        step = names[name]
        weights[step] = Fraction(val)
    return build_model(ss, Weighting(d=weights, a=Fraction(a), b=Fraction(b)))


GammaQuotient = namedtuple("GammaQuotient", ["num", "den"])


def gamma_functions(model: Model):
    """(gamma1, gamma2, gamma): the third is the exact quotient
    gamma1/gamma2 carried as a numerator/denominator pair."""
    g1 = model.gamma1_xy()
    g2 = model.gamma2_xy()
    return g1, g2, GammaQuotient(g1, g2)


def functional_equation_coeffs(model: Model):
    """The four polynomial coefficient blocks of the kernel equation:

        K(x,y) Q(x,y) = omega*x*y + [x^2 y gamma1] Q(x,0) + [x y^2 gamma2] Q(0,y)

    with all fractions cleared (x^2 y gamma1 = A x y - t d_{1,-1} x^2 and
    symmetrically for gamma2).
    """
    t = Poly.gen("t")
    omega_xy = XYPoly.monomial(Poly.const(model.omega), 1, 1)
    c1 = XYPoly({(1, 1): Poly.const(model.A), (2, 0): -t.scale(model.d(1, -1))})
    c2 = XYPoly({(1, 1): Poly.const(model.B), (0, 2): -t.scale(model.d(-1, 1))})
    return model.K, omega_xy, c1, c2


# -- JSON wire format --------------------------------------------------

_STEP_KEYS = {f"{i},{j}": (i, j) for (i, j) in ALL_STEPS}


def model_from_json(text: str) -> Model:
    """Parse the model JSON schema.

    {"stepset": "S1".."S5", "weights": {"1,-1": "p/q", ...},
     "a": "p/q", "b": "p/q"} -- rationals are "p/q" or integer strings;
    unknown keys anywhere are rejected.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelFormatError(f"not valid JSON: {e}") from None
    if not isinstance(obj, dict):
        raise ModelFormatError("model document must be a JSON object")
    unknown = set(obj) - {"stepset", "weights", "a", "b"}
    if unknown:
        raise ModelFormatError(f"unknown keys: {sorted(unknown)}")
    for key in ("stepset", "weights", "a", "b"):
        if key not in obj:
            raise ModelFormatError(f"missing key {key!r}")
    if obj["stepset"] not in _SUPPORTS:
        raise ModelFormatError(f"unknown stepset {obj['stepset']!r}")
    weights = {}
    if not isinstance(obj["weights"], dict):
        raise ModelFormatError("weights must be an object")
    for key, val in obj["weights"].items():
        if key not in _STEP_KEYS:
            raise ModelFormatError(f"unknown weight key {key!r}")
        weights[_STEP_KEYS[key]] = _parse_rat(val, f"weights[{key}]")
    a = _parse_rat(obj["a"], "a")
    b = _parse_rat(obj["b"], "b")
    try:
        return build_model(obj["stepset"], Weighting(d=weights, a=a, b=b))
    except (InvalidSupport, NonPositiveWeight) as e:
        raise ModelFormatError(str(e)) from None


def _parse_rat(val, where) -> Fraction:
    if isinstance(val, int):
        return Fraction(val)
    if isinstance(val, str):
        try:
            return rat_from_string(val)
        except (ValueError, ZeroDivisionError):
            pass
    raise ModelFormatError(f"{where}: expected 'p/q' or an integer string, got {val!r}")


def model_to_json(model: Model) -> str:
    doc = {
        "stepset": model.tag,
        "weights": {
            f"{i},{j}": rat_to_string(model.d(i, j))
            for (i, j) in ALL_STEPS
            if (i, j) in model.stepset
        },
        "a": rat_to_string(model.a),
        "b": rat_to_string(model.b),
    }
    return json.dumps(doc, sort_keys=True)


def t_ratfunc(c) -> RatFunc:
    """Embed a rational constant into Q(t)."""
    return RatFunc.const(Rat(c))
