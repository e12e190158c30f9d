"""Controllability of dipole-coupled N-level quantum systems."""

import json

from ._core import (
    DEFAULT_EPS_PARAM,
    DEFAULT_EPS_RANK,
    ClosureResult,
    ModelParams,
    SpecFileError,
    SystemSpec,
    classify4,
    derive_params,
    dump_spec,
    dynamical_algebra,
    parse_spec,
    run_cli,
    theorem4_family,
)
from . import _core

__all__ = [
    "DEFAULT_EPS_PARAM",
    "DEFAULT_EPS_RANK",
    "ClosureResult",
    "ModelParams",
    "SpecFileError",
    "SystemSpec",
    "check",
    "classify4",
    "derive_params",
    "dump_spec",
    "dynamical_algebra",
    "from_spacings",
    "make_model",
    "parse_spec",
    "run_cli",
    "theorem4_family",
]


def check(spec, oracle=False, eps_param=DEFAULT_EPS_PARAM,
          eps_rank=DEFAULT_EPS_RANK):
    """Full report as a dict, same layout as ``qcc check --json``."""
    return json.loads(_core.check_json(spec, oracle, eps_param, eps_rank))


def from_spacings(spacings, dipoles, ground_energy=0.0):
    levels = [ground_energy]
    for mu in spacings:
        levels.append(levels[-1] + mu)
    return SystemSpec(levels, dipoles)


def make_model(model, size=4, **kwargs):
    """make_model("morse", 6, b=0.05). Unknown keywords raise TypeError."""
    p = ModelParams()
    p.model = model
    p.size = size
    for key, value in kwargs.items():
        if not hasattr(p, key):
            raise TypeError(f"unknown model parameter {key!r}")
        setattr(p, key, value)
    return _core.make_model(p)
