"""Extension closures of modules over Artinian local F_p-algebras.

Rings are passed as ring-definition text, for example::

    p=2 vars=x,y
    x^2
    xy
    y^2
"""

import json

from . import _extclosure
from ._extclosure import ExtClosureError, betti, ext1_dim, tor_dim

__all__ = [
    "ExtClosureError",
    "analyze",
    "betti",
    "closure",
    "diagnose",
    "ext1_dim",
    "reference_corpus",
    "tor_dim",
]


def analyze(ring_text):
    return json.loads(_extclosure.analyze(ring_text))


def diagnose(ring_text, depth=3, workers=1):
    return json.loads(_extclosure.diagnose(ring_text, depth, workers))


def closure(ring_text, element, depth=3, workers=1):
    return json.loads(_extclosure.closure(ring_text, element, depth, workers))


def reference_corpus(depth=3):
    return json.loads(_extclosure.reference_corpus(depth))
