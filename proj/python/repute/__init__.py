"""Python interface to the repute reputation engine."""

try:
    from ._repute import *  # noqa: F401,F403  (installed layout)
    from ._repute import __doc__ as _core_doc  # noqa: F401
except ImportError:
    from _repute import *  # noqa: F401,F403  (build-tree layout)

__version__ = "0.1.0"
