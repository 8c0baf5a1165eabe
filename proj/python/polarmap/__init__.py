"""Classical polarization maps as one- and two-qubit quantum channels."""

try:
    from ._polarmap import *  # noqa: F401,F403
    from ._polarmap import __version__  # noqa: F401
except ImportError:
    # In-tree CMake builds place the extension next to this package.
    from _polarmap import *  # noqa: F401,F403
    from _polarmap import __version__  # noqa: F401
