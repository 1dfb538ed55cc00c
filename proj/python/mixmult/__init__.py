"""Exact mixed multiplicities of monomial ideal systems.

Instances are plain dicts in the same shape as the CLI's JSON files::

    {"variables": ["x", "y"], "J": ["x", "y"], "ideals": [["x", "y"]],
     "module": {"U": ["1"], "L": []}}
"""

import json

from . import _core
from ._core import NonStabilizedError, __version__

__all__ = ["compute", "verify", "primes", "length_table", "corpus", "NonStabilizedError", "__version__"]


def _text(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def compute(instance):
    """Fitted polynomial, mixed multiplicities (keyed "k0,...,kd") and tilde_e."""
    return json.loads(_core.compute(_text(instance)))


def verify(theorem, instance, u=(), candidates=(), v=None, lower_prime=()):
    """Run one verifier; returns the report with its "verdict"."""
    return json.loads(_core.verify(theorem, _text(instance), list(u), list(candidates), v, list(lower_prime)))


def primes(instance):
    return json.loads(_core.primes(_text(instance)))


def length_table(instance, offset=1, side=3):
    table = json.loads(_core.length_table(_text(instance), offset, side))
    return {tuple(int(n) for n in key.split(",")): value for key, value in table["entries"].items()}


def corpus(seed, size, threads=None):
    """TSV summary of a seeded corpus run."""
    return _core.corpus(seed, size, threads)
