"""Crystal energy, VXR and DDF computations."""

import json

from ._core import (
    DomainError,
    ParseError,
    ddf_trace,
    diamond_coenergy,
    k_polynomial,
    lr_coefficient,
    x_polynomial,
)
from . import _core

__all__ = [
    "DomainError",
    "ParseError",
    "ddf",
    "ddf_trace",
    "diamond_coenergy",
    "k_polynomial",
    "lr_coefficient",
    "verify",
    "vxr",
    "x_polynomial",
]


def verify(diamond, nu, rank=0):
    return json.loads(_core.verify_json(diamond, list(nu), rank))


def vxr(word, diamond, rank=0, widths=()):
    return json.loads(_core.vxr_json(word, diamond, rank, list(widths)))


def ddf(word, diamond):
    return json.loads(_core.ddf_json(word, diamond))
