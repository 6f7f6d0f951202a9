"""Brute-force ground truth.

Everything in here works on an explicit finite prefix and knows nothing
about slopes beyond :func:`recommended_prefix_length`.  The closed-form
engine is tested against these functions, never the other way round.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InsufficientPrefix, InvalidWord
from .slope import Slope
from .words import is_palindrome


@dataclass(frozen=True)
class ScanReport:
    subject: str
    prefix_len: int
    positions: tuple[int, ...]


def naive_positions(prefix: str, u: str) -> list[int]:
    """Letter-by-letter comparison at every start; the audit path."""
    m = len(u)
    return [
        i
        for i in range(len(prefix) - m + 1)
        if all(prefix[i + j] == u[j] for j in range(m))
    ]


def find_positions(prefix: str, u: str, limit: int | None = None) -> list[int]:
    out = []
    i = prefix.find(u)
    while i != -1 and (limit is None or len(out) < limit):
        out.append(i)
        i = prefix.find(u, i + 1)
    return out


def scan_occurrences(prefix: str, u: str, naive: bool = False) -> ScanReport:
    """All start positions of u in prefix, overlapping ones included."""
    if not u:
        raise InvalidWord("cannot scan for the empty word")
    found = naive_positions(prefix, u) if naive else find_positions(prefix, u)
    return ScanReport(u, len(prefix), tuple(found))


def factors_of_length(prefix: str, m: int) -> set[str]:
    if m > len(prefix):
        raise InsufficientPrefix(f"prefix of length {len(prefix)} has no factors of length {m}")
    return {prefix[i : i + m] for i in range(len(prefix) - m + 1)}


def palindromic_factors(prefix: str, maxlen: int) -> set[str]:
    found = set()
    for m in range(1, min(maxlen, len(prefix)) + 1):
        found.update(x for x in factors_of_length(prefix, m) if is_palindrome(x))
    return found


def return_words_scan(prefix: str, u: str) -> set[str]:
    pos = find_positions(prefix, u)
    if len(pos) < 3:
        raise InsufficientPrefix(f"{u!r} occurs {len(pos)} times; need at least 3")
    return {prefix[i:j] for i, j in zip(pos, pos[1:])}


def derived_sequence_scan(prefix: str, u: str) -> list[str]:
    """Return words in order of appearance, one per consecutive pair of occurrences."""
    pos = find_positions(prefix, u)
    return [prefix[i:j] for i, j in zip(pos, pos[1:])]


def recommended_prefix_length(s: Slope, m: int) -> int:
    """A prefix length guaranteed to contain every factor of length <= m.

    Every factor of length q_n starts before q_{n+1}, so q_{n+1} + q_n
    letters suffice once q_n >= m.
    """
    n = 0
    while s.q(n) < m:
        n += 1
    return s.q(n + 1) + s.q(n)
