"""Binary digit sums and the power-of-two splittings behind the emptiness criteria."""

from __future__ import annotations

from typing import Optional

from .errors import DomainError


def alpha(t: int) -> int:
    """Number of 1's in the binary expansion of ``t``."""
    if t < 0:
        raise DomainError("alpha is defined for non-negative integers")
    return t.bit_count()


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def split_into_parts(total: int, parts: int) -> Optional[list[int]]:
    """Write ``total`` as a sum of exactly ``parts`` powers of two.

    Returns the exponents in non-increasing order, choosing the
    lexicographically largest such list, or None when no split exists
    (that is, unless ``alpha(total) <= parts <= total``).
    """
    if total < 1 or parts < 1:
        raise DomainError("total and parts must be positive")
    if not alpha(total) <= parts <= total:
        return None
    out: list[int] = []
    remaining, slots = total, parts
    while slots:
        # largest 2^e such that the remainder still splits into slots-1 parts
        e = remaining.bit_length() - 1
        while True:
            rest = remaining - (1 << e)
            if slots == 1:
                ok = rest == 0
            else:
                ok = alpha(rest) <= slots - 1 <= rest
            if ok:
                break
            e -= 1
        out.append(e)
        remaining -= 1 << e
        slots -= 1
    return out


def e0g_necessary(t: int, k: int) -> bool:
    """Necessary condition for e0^t g^k to be non-empty: alpha(t+k) <= t."""
    if t < 0 or k < 0:
        raise DomainError("t and k must be non-negative")
    return alpha(t + k) <= t


def delta_e0g_necessary(t: int, k: int) -> bool:
    """Necessary condition for Dh1 e0^t g^k to be non-empty: alpha(1+k+t) <= t.

    The family is only considered for t >= 1.
    """
    if t < 1:
        raise DomainError("the Dh1 e0^t g^k family is only defined for t >= 1")
    if k < 0:
        raise DomainError("k must be non-negative")
    return alpha(1 + k + t) <= t
