"""Kernel selection: the compiled module when it imports, else pure Python.

``GRAPHPOW_BACKEND=python`` forces the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType
from typing import Optional

from graphpow import _pykernels

try:
    from graphpow import _kernels as _native
except ImportError:  # not built
    _native = None

NATIVE_AVAILABLE = _native is not None


def available() -> list[str]:
    return (["native"] if NATIVE_AVAILABLE else []) + ["python"]


def default_name() -> str:
    forced = os.environ.get("GRAPHPOW_BACKEND", "").strip().lower()
    if forced:
        return forced
    return "native" if NATIVE_AVAILABLE else "python"


def get_backend(name: Optional[str] = None) -> ModuleType:
    name = (name or default_name()).lower()
    if name == "python":
        return _pykernels
    if name == "native":
        if _native is None:
            raise RuntimeError("compiled kernels are not built; reinstall with a C compiler")
        return _native
    raise ValueError(f"unknown backend {name!r}; expected 'native' or 'python'")
