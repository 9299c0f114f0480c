"""Select the compiled kernels when available, else the pure-Python ones.

Set ``UGIG_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("UGIG_PURE_PYTHON"):
    from ._kernels_py import IMPLEMENTATION, cross_free_search, girth_csr
else:
    try:
        from ._kernels import IMPLEMENTATION, cross_free_search, girth_csr
    except ImportError:  # extension not built
        from ._kernels_py import IMPLEMENTATION, cross_free_search, girth_csr

__all__ = ["IMPLEMENTATION", "cross_free_search", "girth_csr"]
