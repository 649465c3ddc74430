"""Desk-scale limits shared by the constructors and the brute-force oracles."""
from __future__ import annotations

import os
import warnings

BOOST_ENV = "SUMRANK_CAP_BOOST"


class CapExceeded(ValueError):
    """Raised when a computation would exceed a desk-scale limit."""


def _boost() -> int:
    raw = os.environ.get(BOOST_ENV)
    if not raw:
        return 0
    try:
        bits = int(raw)
    except ValueError as exc:
        raise CapExceeded(f"{BOOST_ENV} must be an integer, got {raw!r}") from exc
    warnings.warn(
        f"{BOOST_ENV}={bits}: desk-scale caps raised by {bits} bits",
        RuntimeWarning,
        stacklevel=3,
    )
    return bits


def check_cap(value: int, log2_limit: int, what: str) -> None:
    """Raise CapExceeded when ``value`` exceeds ``2**log2_limit`` (plus any boost)."""
    limit = log2_limit + _boost()
    if value > 1 << limit:
        raise CapExceeded(
            f"{what} = {value} exceeds the desk-scale cap 2^{limit}"
            f" (set {BOOST_ENV} to raise it)"
        )
