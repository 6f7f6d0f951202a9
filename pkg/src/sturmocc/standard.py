"""Standard sequences, prefixes of c_alpha and the singular-word family.

The singular words are produced by letter surgery on the standard words
s_n (prepend one letter, drop the last one).  The product formulas that
relate them to each other are deliberately *not* used here; the test suite
checks them against this construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import IndexOutOfRange, KOutOfRange, UnsupportedSlope
from .slope import Slope
from .words import WordStream, strip_suffix


@lru_cache(maxsize=4096)
def standard_word(s: Slope, n: int) -> str:
    """s_n with s_{-1} = b, s_0 = a and s_n = s_{n-1}^{d_n} s_{n-2}."""
    if n < -1:
        raise IndexOutOfRange(f"standard words start at n = -1, got {n}")
    if n == -1:
        return "b"
    if n == 0:
        return "a"
    return standard_word(s, n - 1) * s.directive(n) + standard_word(s, n - 2)


def c_prefix(s: Slope, length: int) -> str:
    """The first ``length`` letters of the characteristic word c_alpha."""
    if length < 0:
        raise ValueError("prefix length must be >= 0")
    n = 1
    while s.q(n) < length:
        n += 1
    return standard_word(s, n)[:length]


class SturmianStream(WordStream):
    """c_alpha as a lazy stream."""

    def __init__(self, slope: Slope):
        self.slope = slope

    def take(self, length: int) -> str:
        return c_prefix(self.slope, length)

    def __repr__(self) -> str:
        return f"SturmianStream({str(self.slope)!r})"


def _require_singular(s: Slope) -> None:
    if s.digit(1) < 2:
        raise UnsupportedSlope(
            f"singular words need a_1 >= 2; use the complement of {s} and exchange letters"
        )


@lru_cache(maxsize=8192)
def w(s: Slope, n: int) -> str:
    """The singular word w_n (n >= -2)."""
    _require_singular(s)
    if n < -2:
        raise IndexOutOfRange(f"w_n is defined for n >= -2, got {n}")
    if n == -2:
        return ""
    if n == -1:
        return "a"
    if n % 2:
        return "a" + strip_suffix(standard_word(s, n), "b")
    return "b" + strip_suffix(standard_word(s, n), "a")


@lru_cache(maxsize=8192)
def v(s: Slope, n: int) -> str:
    """The adjoining singular word v_n (n >= -2)."""
    _require_singular(s)
    if n < -2:
        raise IndexOutOfRange(f"v_n is defined for n >= -2, got {n}")
    if n == -2:
        return ""
    body = standard_word(s, n + 1) * (s.directive(n + 2) - 1) + standard_word(s, n)
    if n % 2:
        return "a" + strip_suffix(body, "b")
    return "b" + strip_suffix(body, "a")


def _check_core(s: Slope, n: int, k: int) -> None:
    if n < 0:
        raise IndexOutOfRange(f"U_(n,k) needs n >= 0, got {n}")
    if not 0 <= k <= s.directive(n + 1) - 1:
        raise KOutOfRange(f"k = {k} outside [0, d_{n + 1} - 1]")


def U(s: Slope, n: int, k: int) -> str:
    """U_{n,k} = (w_{n-1} v_{n-2})^k w_{n-1}."""
    _check_core(s, n, k)
    return (w(s, n - 1) + v(s, n - 2)) * k + w(s, n - 1)


def Ubar(s: Slope, n: int, k: int) -> str:
    """The barred core (v_{n-2} w_{n-1})^k v_{n-2}."""
    _check_core(s, n, k)
    return (v(s, n - 2) + w(s, n - 1)) * k + v(s, n - 2)


def v_product(s: Slope, last: int) -> str:
    """v_{-1} v_0 ... v_last (empty when last < -1)."""
    return "".join(v(s, j) for j in range(-1, last + 1))


FAMILIES = ("w", "v", "u", "ubar")


@dataclass(frozen=True)
class SingularIndex:
    family: str
    n: int
    k: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.family in ("u", "ubar") and self.k is None:
            raise KOutOfRange(f"family {self.family} needs k")


def singular(s: Slope, idx: SingularIndex) -> str:
    if idx.family == "w":
        return w(s, idx.n)
    if idx.family == "v":
        return v(s, idx.n)
    if idx.family == "u":
        return U(s, idx.n, idx.k)
    return Ubar(s, idx.n, idx.k)
