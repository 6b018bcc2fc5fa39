"""Python bindings for the qbr finite-ring checker.

Rings are built from the same JSON specs the CLI reads, given either as a
dict or as a path to a JSON file.
"""

import json
import os

from . import _core
from ._core import (
    Error,
    Ring,
    idempotents,
    is_b_ring,
    is_exchange_ring,
    is_qb_nonunital,
    is_qb_ring,
    jacobson_normal_form,
    laurent_image,
    quasi_inverse,
    quasi_invertibles,
    regular_elements,
    suites,
    units,
)

__version__ = _core.__version__


def _spec_text(spec):
    if isinstance(spec, (str, os.PathLike)):
        with open(spec) as fh:
            return fh.read()
    return json.dumps(spec)


def ring(spec):
    """Build a Ring from a spec dict or a JSON file path."""
    return _core._build(_spec_text(spec))


def _run(fn, spec, *args):
    text = _spec_text(spec)
    return json.loads(fn(text, _core._build(text), *args))


def check(spec, prop):
    """Report dict for one property: b, qb, qb-nonunital, exchange, semiprime, prime."""
    return _run(_core._check, spec, prop)


def sets(spec, name):
    """Sorted element indices of units, qinv, regular, idempotents, radical or maxreg."""
    return _run(_core._sets, spec, name)["checks"][0]["witness"]["set"]


def verify(spec, suite="all", seed=1):
    """Report dict for a verification suite (or "all")."""
    return _run(_core._verify, spec, suite, seed)


__all__ = [
    "Error",
    "Ring",
    "check",
    "idempotents",
    "is_b_ring",
    "is_exchange_ring",
    "is_qb_nonunital",
    "is_qb_ring",
    "jacobson_normal_form",
    "laurent_image",
    "quasi_inverse",
    "quasi_invertibles",
    "regular_elements",
    "ring",
    "sets",
    "suites",
    "units",
    "verify",
]
