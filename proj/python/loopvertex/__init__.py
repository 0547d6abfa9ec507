"""Exact loop Schur functions, wreath characters and the orbifold vertex.

Thin wrapper over the C++ core; every result is the same JSON document the
command line tool prints, decoded to Python objects.
"""

import json as _json

from . import _core
from ._core import ConfigError

__all__ = [
    "ConfigError",
    "chartable",
    "loop_schur",
    "dt_vertex",
    "gw_vertex_ws",
    "default_config",
    "suite_names",
    "verify",
]


def _dumps(x):
    return x if isinstance(x, str) else _json.dumps(x)


def chartable(n, d):
    return _json.loads(_core.chartable(n, d))


def loop_schur(lambda_, n, method="ssyt", degree=6):
    """lambda_ is lambda-bar ([3, 1]) or the n-quotient ([[1], []])."""
    return _json.loads(_core.loop_schur(_dumps(lambda_), n, method, degree))


def _pair(alpha):
    return alpha if isinstance(alpha, str) else ",".join(str(a) for a in alpha)


def _weights(w):
    if w is None:
        return ""
    return w if isinstance(w, str) else ",".join(str(a) for a in w)


def dt_vertex(n, rho_plus=(), rho_minus=(), lambda_=None, alpha=(1, 1), w=None, degree=4):
    lam = "" if lambda_ is None else _dumps(lambda_)
    return _json.loads(
        _core.dt_vertex(n, _dumps(list(rho_plus)), _dumps(list(rho_minus)), lam, _pair(alpha), _weights(w), degree)
    )


def gw_vertex_ws(n, tau_plus=(), tau_minus=(), alpha=(1, 1), degree=4):
    return _json.loads(_core.gw_vertex_ws(n, _dumps(list(tau_plus)), _dumps(list(tau_minus)), _pair(alpha), degree))


def default_config():
    return _json.loads(_core.default_config())


def suite_names():
    return list(_core.suite_names())


def verify(suite, config=None, threads=0):
    """Run a suite; config=None uses the defaults. Returns the report dict."""
    cfg = default_config() if config is None else config
    return _json.loads(_core.verify(suite, _dumps(cfg), threads))
