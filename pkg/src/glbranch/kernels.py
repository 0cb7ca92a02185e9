"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``GLBRANCH_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py as python_impl

compiled_impl = None
if not os.environ.get("GLBRANCH_PURE_PYTHON"):
    try:
        from . import _kernels as compiled_impl
    except ImportError:  # extension not built
        compiled_impl = None

impl = compiled_impl if compiled_impl is not None else python_impl
BACKEND = "compiled" if compiled_impl is not None else "python"

chain_contains_batch = impl.chain_contains_batch
# single-word calls stay in Python: the compiled call overhead outweighs the loop
chain_contains = python_impl.chain_contains
chain_match_positions = python_impl.chain_match_positions
