"""Lightning rational approximation on sectors and slit discs.

Thin re-export of the compiled extension; see the README for the C++ API.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
    from ._core import __doc__ as _core_doc
except ImportError:  # build-tree layout: extension next to this package
    from _core import *  # noqa: F401,F403
    from _core import __doc__ as _core_doc

__doc__ = _core_doc or __doc__
__version__ = "0.1.0"
