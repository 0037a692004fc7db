"""Affine Hecke algebra modules pushed into quantum affine sl_{n+1}, in exact arithmetic."""

import json

from ._qaff import MathError, UsageError, check_ids, run_cli

__all__ = ["MathError", "UsageError", "check", "check_ids", "drinfeld", "run_cli"]


def check(check_id, n=(2,), ell=(1, 2), backend="symbolic", seed=1, segments=None):
    """Run a registered check (or "all"); returns a list of report dicts."""
    from ._qaff import checks_json

    return json.loads(checks_json(check_id, list(n), list(ell), backend, seed, segments))


def drinfeld(segments, n, backend="symbolic"):
    """Drinfeld polynomials of a segment list such as "1@0:1,1@4:1"."""
    from ._qaff import drinfeld_json

    return json.loads(drinfeld_json(segments, n, backend))
