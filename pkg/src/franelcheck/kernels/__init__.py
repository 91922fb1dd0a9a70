"""Kernel backend selection.

The hot table kernels exist twice: a Cython extension (``_native``) and a
pure-Python mirror (``pure``).  The compiled backend is picked at import
when available; it only handles moduli below 2**63, so larger moduli fall
through to the pure path, which is arbitrary precision.

Set ``FRANELCHECK_PURE=1`` to force the pure backend (used by the parity
tests and the benchmark).
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import _native
except ImportError:
    _native = None

_FORCE_PURE = os.environ.get("FRANELCHECK_PURE") == "1"

NATIVE_MODULUS_LIMIT = 1 << 63


def native_available() -> bool:
    return _native is not None and not _FORCE_PURE


def backend_name(m: int | None = None) -> str:
    """Which backend a call with modulus m would use."""
    if native_available() and (m is None or m < NATIVE_MODULUS_LIMIT):
        return "native"
    return "pure"


def _impl(m: int):
    if _native is not None and not _FORCE_PURE and m < NATIVE_MODULUS_LIMIT:
        return _native
    return pure


def inverse_table(p: int, m: int, n: int) -> list[int]:
    return _impl(m).inverse_table(p, m, n)


def factorial_tables(p: int, m: int, n: int) -> tuple[list[int], list[int]]:
    return _impl(m).factorial_tables(p, m, n)


def franel_table(p: int, m: int, length: int) -> list[int]:
    return _impl(m).franel_table(p, m, length)


def central_binom_table(p: int, m: int, length: int) -> list[int]:
    return _impl(m).central_binom_table(p, m, length)


def binom_shift_table(p: int, m: int, rbar: int, length: int) -> list[int]:
    return _impl(m).binom_shift_table(p, m, rbar, length)


def fpoly_table(p: int, m: int, x: int, length: int) -> list[int]:
    return _impl(m).fpoly_table(p, m, x, length)


def genfranel_table(p: int, m: int, r: int, length: int) -> list[int]:
    return _impl(m).genfranel_table(p, m, r, length)


def weighted_cube_table(p: int, m: int, w: int, length: int) -> list[int]:
    return _impl(m).weighted_cube_table(p, m, w, length)


def triangle_weighted_sums(p: int, m: int) -> list[int]:
    return _impl(m).triangle_weighted_sums(p, m)
