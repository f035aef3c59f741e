"""Counting flip-fixed periodic points of sofic shifts.

Thin wrapper around the compiled _flipcount extension module.  The module
lives inside this package when installed as a wheel and on the plain import
path during development builds.
"""

try:
    from ._flipcount import (
        FlipError,
        NotIrreducibleError,
        SchemaError,
        chain_dot,
        count_rows,
        oracle_flip_fixed,
        oracle_periodic,
        zeta_report,
    )
except ImportError:  # development build: extension sits next to the package
    from _flipcount import (
        FlipError,
        NotIrreducibleError,
        SchemaError,
        chain_dot,
        count_rows,
        oracle_flip_fixed,
        oracle_periodic,
        zeta_report,
    )

__all__ = [
    "FlipError",
    "NotIrreducibleError",
    "SchemaError",
    "chain_dot",
    "count_rows",
    "oracle_flip_fixed",
    "oracle_periodic",
    "zeta_report",
]
