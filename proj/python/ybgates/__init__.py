"""Unitary two-qubit braiding gates from cyclic groups."""

try:
    # installed wheel: the extension lives inside the package
    from ._ybgates import *  # noqa: F401,F403
except ImportError:
    # development layout: the extension is on sys.path directly
    from _ybgates import *  # noqa: F401,F403
