"""Backend selection for the residue-vector kernels.

The compiled ``_ckernels`` module is used when it imports cleanly and the
modulus fits its 63-bit contract; otherwise calls fall through to the
pure-Python ``_pykernels``. Both expose the same functions, so callers ask
:func:`for_modulus` once and keep the returned module for every vector built
under that modulus (vectors from the two backends must not be mixed).
"""
from __future__ import annotations

import contextlib
from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

_active = "cython" if _ckernels is not None else "python"


def available() -> list[str]:
    return sorted(BACKENDS)


def active() -> str:
    return _active


def set_backend(name: str) -> None:
    global _active
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} is not available (have: {', '.join(available())})")
    _active = name


@contextlib.contextmanager
def use_backend(name: str):
    previous = _active
    set_backend(name)
    try:
        yield BACKENDS[name]
    finally:
        set_backend(previous)


def for_modulus(m: int) -> ModuleType:
    ops = BACKENDS[_active]
    if ops.MAX_MODULUS is not None and m >= ops.MAX_MODULUS:
        return _pykernels
    return ops
