"""Lacunary series toolkit.

Thin wrapper over the C++ extension. ``run_job`` takes the same JSON job
specs as the ``lacunary`` command line tool.
"""

import json

from ._lacunary import (
    LacunaryError,
    __version__,
    condition_i_witness,
    crt_solve,
    enumerate_equation_solutions,
    factor,
    int_nth_root,
    is_prime,
    pell_fundamental,
    pell_stream,
    run_job_json,
)

__all__ = [
    "LacunaryError",
    "__version__",
    "condition_i_witness",
    "crt_solve",
    "enumerate_equation_solutions",
    "factor",
    "int_nth_root",
    "is_prime",
    "pell_fundamental",
    "pell_stream",
    "run_job",
]


def run_job(spec):
    """Run a job given as a dict (or JSON text). Returns (report, exit_code)."""
    text = spec if isinstance(spec, str) else json.dumps(spec)
    report, code = run_job_json(text)
    return json.loads(report), code
