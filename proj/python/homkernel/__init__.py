"""Exact symbolic kernel for four-dimensional homogeneous pairs.

Subjects are family names (``"A1"``, ``"A3-"``, ``"B2"``, ...) or paths to
``.space`` files. Expressions come back as canonical strings.
"""

from ._homkernel import (
    HomkernelError,
    check,
    classify,
    connection,
    curvature,
    families,
    gram,
    simplify,
    table1,
)

__all__ = [
    "HomkernelError",
    "check",
    "classify",
    "connection",
    "curvature",
    "families",
    "gram",
    "simplify",
    "table1",
]
