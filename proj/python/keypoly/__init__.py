"""Exact valuations, key polynomials and truncations on Q[x]."""

try:
    from ._keypoly import *  # noqa: F401,F403  (installed package layout)
    from ._keypoly import __version__  # noqa: F401
except ImportError:  # in-tree use: the extension sits on PYTHONPATH
    from _keypoly import *  # noqa: F401,F403
    from _keypoly import __version__  # noqa: F401
