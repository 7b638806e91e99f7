"""Python bindings for the piecewise-affine star constructions.

The compiled extension module carries the actual implementations; this
package just re-exports them under a stable name.
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:  # pragma: no cover - test-tree layout without installation
    from _core import *  # type: ignore  # noqa: F401,F403
    from _core import __version__  # type: ignore  # noqa: F401
