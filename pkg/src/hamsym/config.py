"""Runtime configuration: vertex cap, enumeration cap, numba on/off.

Environment variables (read once at import, except the vertex cap which is
also adjustable programmatically):

  HAMSYM_VERTEX_CAP    default 64, may be raised to 128 (bit-row width)
  HAMSYM_CAP           default enumeration cap for cycle streams (10**6)
  HAMSYM_PURE_PYTHON   set to 1 to disable the numba kernels and run the
                       pure numpy/python fallback path
"""

import contextlib
import os

HARD_VERTEX_LIMIT = 128

_vertex_cap = int(os.environ.get("HAMSYM_VERTEX_CAP", "64"))

DEFAULT_ENUM_CAP = int(os.environ.get("HAMSYM_CAP", str(10**6)))

#: default element cap for orbit BFS closures
DEFAULT_ORBIT_CAP = 10**7


def vertex_cap():
    """Current vertex cap (64 by default, configurable up to 128)."""
    return _vertex_cap


def set_vertex_cap(cap):
    """Set the vertex cap. Only 1..128 makes sense; rows are 1 or 2 words."""
    global _vertex_cap
    if not 1 <= cap <= HARD_VERTEX_LIMIT:
        raise ValueError(f"vertex cap must be in 1..{HARD_VERTEX_LIMIT}, got {cap}")
    _vertex_cap = cap


@contextlib.contextmanager
def vertex_cap_of(cap):
    """Temporarily raise (or lower) the vertex cap."""
    old = vertex_cap()
    set_vertex_cap(cap)
    try:
        yield
    finally:
        set_vertex_cap(old)


def _detect_numba():
    if os.environ.get("HAMSYM_PURE_PYTHON", "") not in ("", "0"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_ENABLED = _detect_numba()


def numba_enabled():
    """True when the jitted kernels are active for this process."""
    return NUMBA_ENABLED
