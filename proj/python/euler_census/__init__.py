"""Eulerian-circuit census: exact counts, the asymptotic formula, and the
integral estimators, backed by the C++ core."""

try:
    from euler_census._core import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _core import *  # noqa: F401,F403  (build-tree layout for tests)
