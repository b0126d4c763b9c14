"""Profile classification kernels.

The compiled kernel is used when it was built; otherwise, or when the
``SEQGAME_PURE_PYTHON`` environment variable is set to a non-empty value,
the pure-Python one is.  ``BACKEND`` names the active choice.
"""

import os

from . import _pykernel

python_classify = _pykernel.classify_profiles

try:
    from ._ckernel import classify_profiles as cython_classify
except ImportError:  # extension not built
    cython_classify = None

if cython_classify is not None and not os.environ.get("SEQGAME_PURE_PYTHON"):
    classify_profiles = cython_classify
    BACKEND = "cython"
else:
    classify_profiles = python_classify
    BACKEND = "python"

__all__ = ["BACKEND", "classify_profiles", "cython_classify", "python_classify"]
