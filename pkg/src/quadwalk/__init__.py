"""quadwalk: exact classification of quadrant-walk generating functions
with interacting boundaries, for the five genus-zero step sets.

The package computes, in exact rational arithmetic with the series
variable t kept formal:

* dynamic-programming enumerations of the weighted walks (the oracle),
* the kernel curve, its group of involutions, and the critical points,
* sigma-distances between critical points and the two 4x4 distance
  matrices they populate,
* the final verdict -- rational, algebraic, or not D-algebraic in
  either catalytic variable -- together with machine-checked evidence.
"""

__version__ = "0.1.0"

from . import classifier, curve, enumerator, exactalg, model, sigmadist
from .classifier import Classification, classify
from .enumerator import SeriesTruncation, enumerate_walks
from .model import Model, StepSet, Weighting, build_model, make_model

__all__ = [
    "Classification",
    "Model",
    "SeriesTruncation",
    "StepSet",
    "Weighting",
    "build_model",
    "classify",
    "classifier",
    "curve",
    "enumerator",
    "exactalg",
    "make_model",
    "model",
    "sigmadist",
    "__version__",
]
