"""Backend selection for the hot kernels.

The compiled extension is used when it imported and the inputs fit its
64-bit arithmetic; everything else goes to the pure-Python kernels.  Set
``SYMREP_PURE_PYTHON=1`` to skip the extension entirely.
"""
from __future__ import annotations

import os
from functools import lru_cache

from . import _pykernels as python_backend

try:
    if os.environ.get("SYMREP_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels as compiled_backend
except ImportError:
    compiled_backend = None

BACKEND = compiled_backend.BACKEND if compiled_backend is not None else python_backend.BACKEND

# every character value of a skew shape with k cells is bounded by k! (a count of tableaux)
_INT64_SAFE_CELLS = 20
_MASK_BITS = 63
_INT64_MAX = 2**63 - 1


def _backend(name: str | None):
    if name == "python":
        return python_backend
    if name in ("cython", "compiled"):
        if compiled_backend is None:
            raise ImportError("compiled kernels are not available")
        return compiled_backend
    return None


def _sorted_parts(rho) -> tuple[int, ...]:
    return tuple(sorted((int(p) for p in rho), reverse=True))


def skew_character(outer, inner, rho, backend: str | None = None) -> int:
    outer, inner, rho = tuple(outer), tuple(inner), _sorted_parts(rho)
    mod = _backend(backend)
    if mod is None:
        cells = sum(outer) - sum(inner)
        width = len(outer) + (outer[0] if outer else 0)
        fits = cells <= _INT64_SAFE_CELLS and width <= _MASK_BITS
        mod = compiled_backend if compiled_backend is not None and fits else python_backend
    return int(mod.skew_character(outer, inner, rho))


def character_table(n: int, shapes, classes, backend: str | None = None) -> list[list[int]]:
    shapes = [tuple(s) for s in shapes]
    classes = [_sorted_parts(c) for c in classes]
    mod = _backend(backend)
    if mod is None:
        fits = n <= _INT64_SAFE_CELLS and 2 * n <= _MASK_BITS
        mod = compiled_backend if compiled_backend is not None and fits else python_backend
    return [[int(x) for x in row] for row in mod.character_table(n, shapes, classes)]


@lru_cache(maxsize=None)
def mult_table(n: int, backend: str | None = None):
    mod = _backend(backend) or compiled_backend or python_backend
    return mod, mod.mult_table(n)


def convolve_integers(n: int, a: list[int], b: list[int], backend: str | None = None) -> list[int]:
    """Integer convolution over S_n using the lexicographic permutation indexing."""
    mod = _backend(backend)
    if mod is None:
        bound = max(map(abs, a), default=0) * max(map(abs, b), default=0)
        bound *= min(sum(1 for x in a if x), sum(1 for y in b if y))
        mod = compiled_backend if compiled_backend is not None and bound <= _INT64_MAX else python_backend
    _, (_, table) = mult_table(n, mod.BACKEND)
    return mod.convolve(a, b, table)
