"""Exact Hochschild, cyclic and Čech computations.

Fields are written "Q" or "Fp:<p>". Dimension lists start at degree 0.
"""

import json

from ._core import (
    Algebra,
    CapExceeded,
    HochkitError,
    InvalidAlgebra,
    ParseError,
    TruncationError,
    builtin,
    builtin_names,
    cech,
    cech_hom,
    cech_product,
    criteria,
    cyclic_homology,
    enveloping,
    hh_cohomology,
    hh_homology,
    kunneth_cech,
    kunneth_hc,
    kunneth_hh,
    kunneth_hh_homology,
    load,
    matrix,
    morita,
    opposite,
    parse_algebra,
    periodicity,
    scenario_names,
    tensor,
)
from . import _core

__all__ = [name for name in dir(_core) if not name.startswith("_")] + ["run", "criterion"]


def run(command, *, algebra="dual_numbers", a=None, b=None, field="Q", max_degree=4, window=6,
        twist=0, d1=0, d2=0, n=2, criterion=0, timings=True):
    """Runs a CLI subcommand and returns its hochkit/1 report as a dict."""
    if a is None:
        a = "0" if command == "cech-kunneth" else "dual_numbers"
    if b is None:
        b = "0" if command == "cech-kunneth" else "dual_numbers"
    text = _core._run_scenario(command, algebra, str(a), str(b), field, max_degree, window,
                               twist, d1, d2, n, criterion, timings)
    return json.loads(text)


def criterion(id, *, timings=True):
    """One acceptance criterion as a hochkit/1 report."""
    return json.loads(_core._run_criterion(id, timings))
