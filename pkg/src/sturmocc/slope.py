"""Irrational slopes as eventually periodic continued fractions.

A :class:`Slope` stores ``alpha = [0; a_1, a_2, ...]`` symbolically as a
preperiod followed by a period that repeats forever.  Nothing here ever
touches floating point: digits, directive digits and the convergent
denominators ``q_n`` are exact Python integers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from .errors import IndexOutOfRange, InvalidSlope, KOutOfRange

_LITERAL = re.compile(r"^(?:(\d+(?:,\d+)*),?)?\((\d+(?:,\d+)*)\)$")


def _minimal_period(period: tuple[int, ...]) -> tuple[int, ...]:
    n = len(period)
    for p in range(1, n + 1):
        if n % p == 0 and period[:p] * (n // p) == period:
            return period[:p]
    return period


def _normalize(preperiod, period) -> tuple[tuple[int, ...], tuple[int, ...]]:
    pre = tuple(preperiod)
    per = _minimal_period(tuple(period))
    # fold trailing preperiod digits into a rotated period
    while pre and pre[-1] == per[-1]:
        pre = pre[:-1]
        per = (per[-1],) + per[:-1]
    return pre, per


class Convergent(NamedTuple):
    n: int
    p: int
    q: int


@dataclass(frozen=True, init=False)
class Slope:
    """``[0; preperiod, period, period, ...]`` in minimal form.

    Because the stored pair is always the minimal one, two slopes compare
    equal exactly when their digit streams agree.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __init__(self, preperiod=(), period=(1,)):
        pre = tuple(int(d) for d in preperiod)
        per = tuple(int(d) for d in period)
        if not per:
            raise InvalidSlope("period must contain at least one digit")
        if any(d < 1 for d in pre + per):
            raise InvalidSlope(f"continued fraction digits must be >= 1: {pre} {per}")
        pre, per = _normalize(pre, per)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        return parse_slope(text)

    def __str__(self) -> str:
        body = ",".join(map(str, self.period))
        if self.preperiod:
            return ",".join(map(str, self.preperiod)) + f",({body})"
        return f"({body})"

    def __repr__(self) -> str:
        return f"Slope({str(self)!r})"

    # -- digits ---------------------------------------------------------

    def digit(self, i: int) -> int:
        """a_i for i >= 1."""
        if i < 1:
            raise IndexOutOfRange(f"digit index must be >= 1, got {i}")
        m = len(self.preperiod)
        if i <= m:
            return self.preperiod[i - 1]
        return self.period[(i - m - 1) % len(self.period)]

    def directive(self, i: int) -> int:
        """d_i: a_1 - 1 for i = 1, a_i afterwards."""
        a = self.digit(i)
        return a - 1 if i == 1 else a

    def digits(self, count: int) -> list[int]:
        return [self.digit(i) for i in range(1, count + 1)]

    # -- convergents ----------------------------------------------------

    def q(self, n: int) -> int:
        """Denominator q_n; q_{-1} = 1 by convention so that |s_{-1}| = 1."""
        if n == -1:
            return 1
        return self.convergent(n).q

    def p(self, n: int) -> int:
        return self.convergent(n).p

    def convergent(self, n: int) -> Convergent:
        if n < 0:
            raise IndexOutOfRange(f"convergent index must be >= 0, got {n}")
        ps, qs = _table(self, n)
        return Convergent(n, ps[n], qs[n])

    # -- derived slopes -------------------------------------------------

    def tail(self, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(preperiod, period) of the digit stream a_{m+1}, a_{m+2}, ..."""
        pre = self.preperiod
        if m <= len(pre):
            return pre[m:], self.period
        r = (m - len(pre)) % len(self.period)
        return (), self.period[r:] + self.period[:r]

    def shifted(self, n: int, k: int = 0) -> "Slope":
        """The slope [0; a_{n+1} + k, a_{n+2}, a_{n+3}, ...]."""
        if n < 0:
            raise IndexOutOfRange(f"shift index must be >= 0, got {n}")
        first = self.digit(n + 1) + k
        if first < 1:
            raise KOutOfRange(f"a_{n + 1} + k = {first} < 1")
        pre, per = self.tail(n + 1)
        return Slope((first,) + pre, per)

    def complement(self) -> "Slope":
        """The slope 1 - alpha."""
        a1 = self.digit(1)
        if a1 == 1:
            return self.shifted(1, 1)
        pre, per = self.tail(1)
        return Slope((1, a1 - 1) + pre, per)


def parse_slope(text: str) -> Slope:
    """Parse a literal such as ``"2,(1)"`` or ``"(2,1,3,1)"``."""
    compact = re.sub(r"\s+", "", text)
    m = _LITERAL.match(compact)
    if not m:
        raise InvalidSlope(f"malformed slope literal: {text!r}")
    pre = [int(d) for d in m.group(1).split(",")] if m.group(1) else []
    per = [int(d) for d in m.group(2).split(",")]
    return Slope(pre, per)


_TABLES: dict[Slope, tuple[list[int], list[int]]] = {}


def _table(s: Slope, n: int) -> tuple[list[int], list[int]]:
    ps, qs = _TABLES.setdefault(s, ([0, 1], [1, s.digit(1)]))
    while len(qs) <= n:
        a = s.digit(len(qs))
        ps.append(a * ps[-1] + ps[-2])
        qs.append(a * qs[-1] + qs[-2])
    return ps, qs
