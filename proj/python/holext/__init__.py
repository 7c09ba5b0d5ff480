"""Numerical tests for holomorphic extendibility of functions on the unit sphere of C^n."""

import json

from ._holext import (
    ExtensionModel,
    Function,
    HolextError,
    f_nu,
    parse_complex,
    parse_point,
    reconstruct,
    run_cli,
)
from . import _holext

__all__ = [
    "ExtensionModel",
    "Function",
    "HolextError",
    "bunch_test",
    "classify",
    "f_nu",
    "model_to_dict",
    "moment_test",
    "parse_complex",
    "parse_point",
    "reconstruct",
    "run_cli",
    "vanishing_order",
]


def _fn(f, dim=2):
    return f if isinstance(f, Function) else Function(f, dim)


def _pt(p):
    return parse_point(p) if isinstance(p, str) else [complex(c) for c in p]


def moment_test(f, point, direction, n_samples=256, tol=1e-8):
    """Negative-frequency test of f restricted to the line point + zeta * direction."""
    point, direction = _pt(point), _pt(direction)
    return json.loads(_holext._moment_test(_fn(f, len(point)), point, direction, n_samples, tol))


def bunch_test(f, a, lines=32, tol=1e-8, seed=1):
    """Moment tests on seeded random lines through a."""
    a = _pt(a)
    return json.loads(_holext._bunch_test(_fn(f, len(a)), a, lines, tol, seed))


def classify(f, a, b, max_nu=12, tol=1e-8, seed=1):
    """Two-bunch classification in C^2; the "classification" key holds the verdict."""
    return json.loads(_holext._classify(_fn(f), _pt(a), _pt(b), max_nu, tol, seed))


def vanishing_order(f, nu, r_a=0.9, r_b=0.95):
    nu, k, exponent, residual = _holext._vanishing_order(_fn(f), nu, r_a, r_b)
    return {"nu": nu, "k": k, "exponent": exponent, "residual": residual}


def model_to_dict(model):
    return json.loads(model._json())
