"""Hot subset-lattice and 1-D enumeration kernels.

The compiled ``_native`` extension is used when it was built; otherwise the
pure-Python ``_python`` module is selected at import. Both expose the same
functions, and :func:`use_backend` switches between them (tests and the
benchmark run both).
"""

from __future__ import annotations

from types import ModuleType

from . import _python

try:
    from . import _native  # type: ignore[attr-defined]
except ImportError:  # extension not built
    _native = None

BACKENDS: dict[str, ModuleType] = {"python": _python}
if _native is not None:
    BACKENDS["native"] = _native

_active: ModuleType = BACKENDS.get("native", _python)


def backend_name() -> str:
    return _active.NAME


def get_backend(name: str | None = None) -> ModuleType:
    if name is None:
        return _active
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} unavailable (have {sorted(BACKENDS)})") from None


def use_backend(name: str) -> None:
    global _active
    _active = get_backend(name)


def face_table(n, facet_masks):
    return _active.face_table(n, facet_masks)


def minimal_nonfaces(n, table):
    return _active.minimal_nonfaces(n, table)


def helly_violations(n, table, d):
    return _active.helly_violations(n, table, d)


def helly_bound(n, table):
    return _active.helly_bound(n, table)


def realizable_1d_masks(n, t):
    if n > 4 and _active is not _python:
        return _python.realizable_1d_masks(n, t)
    return _active.realizable_1d_masks(n, t)
