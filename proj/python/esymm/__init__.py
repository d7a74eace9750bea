"""Exact construction, verification, and star quantization of extrinsic
symplectic symmetric spaces.

The compiled core lives in ``_esymm``; this package re-exports it.  When
installed the extension sits inside the package, during development it may
sit on ``sys.path`` next to it.
"""

try:
    from ._esymm import *  # noqa: F401,F403
    from ._esymm import __doc__ as _core_doc  # noqa: F401
except ImportError:  # extension built out-of-tree (PYTHONPATH development use)
    from _esymm import *  # noqa: F401,F403

__all__ = [
    "Rational",
    "Matrix",
    "nilpotent_exp",
    "check_lambda",
    "surface",
    "orbit",
    "classify_codim2",
    "star",
    "moyal_star",
    "poisson_bracket",
]
