"""Closed-form occurrence positions in c_alpha.

For a factor u the occurrences satisfy occ_{i+1} = occ_i + P_i where the
gap sequence (P_i) is a characteristic Sturmian word over two integers.
An :class:`OccurrenceSequence` stores the first position, the two gap
values and the slope whose characteristic word orders them; letter ``a``
of that word always stands for ``gap_a``.

Closed forms exist for palindromic factors, for the singular words w_n and
v_n, and for every factor of length q_n.  Anything else is answered by
scanning (``method == "oracle"``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidWord, KOutOfRange, NotAFactor
from .oracle import find_positions, recommended_prefix_length
from .palindromes import FORM_U, FORM_UBAR, StructuralForm, classify, normal_slope
from .slope import Slope
from .standard import SturmianStream, _require_singular, c_prefix, standard_word, v, v_product, w
from .words import (
    SignedWord,
    SubstitutedStream,
    WordStream,
    check_word,
    conjugate,
    exchange,
    is_palindrome,
)


@dataclass(frozen=True)
class OccurrenceSequence:
    subject: str
    occ_first: int
    gap_slope: Slope
    gap_a: int
    gap_b: int
    route: str = ""
    certificate: Optional[StructuralForm] = field(default=None, compare=False)

    def gaps(self, count: int) -> list[int]:
        letters = c_prefix(self.gap_slope, count)
        return [self.gap_a if x == "a" else self.gap_b for x in letters]

    def positions(self, count: int) -> list[int]:
        if count <= 0:
            return []
        out = [self.occ_first]
        for g in self.gaps(count - 1):
            out.append(out[-1] + g)
        return out

    def positions_below(self, limit: int) -> list[int]:
        """All occurrences starting before ``limit``."""
        count = 16
        while True:
            pos = self.positions(count)
            if pos[-1] >= limit:
                return [p for p in pos if p < limit]
            count *= 2

    def gap_labels(self, count: int) -> list[int]:
        return [1 if x == "a" else 2 for x in c_prefix(self.gap_slope, count)]


def _halve(total: int) -> int:
    half, odd = divmod(total, 2)
    if odd or half < 0:
        raise AssertionError(f"first-occurrence numerator {total} is not a non-negative even number")
    return half


def palindrome_occurrences(s: Slope, u: str) -> OccurrenceSequence:
    form = classify(s, u)
    base, _ = normal_slope(s)
    length = len(u)
    n, k = form.n, form.k
    if form.family == FORM_U:
        qn, qm = base.q(n), base.q(n - 1)
        first = _halve((k + 2) * qn + qm - length - 2)
        return OccurrenceSequence(u, first, base.shifted(n, -k), qn, (k + 1) * qn + qm, "palindrome", form)
    if form.family == FORM_UBAR:
        qn, qm = base.q(n), base.q(n - 1)
        first = _halve((k + 1) * qn + qm - length - 2)
        return OccurrenceSequence(u, first, base.shifted(n, 1 - k), qn, k * qn + qm, "palindrome", form)
    return OccurrenceSequence(u, 0, base.shifted(0, -k), 1, k + 1, "palindrome", form)


def singular_w_occurrences(s: Slope, n: int) -> OccurrenceSequence:
    _require_singular(s)
    if n < 0:
        raise KOutOfRange(f"w_n occurrences need n >= 0, got {n}")
    q1, q0 = s.q(n + 1), s.q(n)
    return OccurrenceSequence(w(s, n), q1 - 1, s.shifted(n + 1, 0), q1, q1 + q0, "singular-w")


def singular_v_occurrences(s: Slope, n: int) -> OccurrenceSequence:
    _require_singular(s)
    if n < -1:
        raise KOutOfRange(f"v_n occurrences need n >= -1, got {n}")
    head = sum(len(v(s, j)) for j in range(-1, n))
    return OccurrenceSequence(v(s, n), head, s.shifted(n + 2, 1), s.q(n + 2), s.q(n + 1), "singular-v")


def conjugate_occurrences(s: Slope, n: int, k: int) -> OccurrenceSequence:
    _require_singular(s)
    if n < 1:
        raise KOutOfRange(f"conjugate occurrences need n >= 1, got {n}")
    qn, qm = s.q(n), s.q(n - 1)
    if not 0 <= k <= qn - 1:
        raise KOutOfRange(f"k = {k} outside [0, q_{n} - 1]")
    subject = conjugate(standard_word(s, n), k)
    if k <= qm - 2:
        return OccurrenceSequence(subject, k, s.shifted(n, 1), qn, qm, "conjugate")
    return OccurrenceSequence(subject, k, s.shifted(n, 0), qn, qn + qm, "conjugate")


def conjugate_index(s: Slope, u: str) -> Optional[tuple[int, int]]:
    """(n, k) with u = C_k(s_n), or None; needs a_1 >= 2."""
    n = 1
    while s.q(n) < len(u):
        n += 1
    if s.q(n) != len(u):
        return None
    sn = standard_word(s, n)
    k = (sn + sn).find(u)
    if k == -1 or k >= len(sn):
        return None
    return n, k


def closed_sequence(s: Slope, u: str) -> Optional[OccurrenceSequence]:
    """Closed-form occurrence law for u, or None when none is known.

    Raises NotAFactor for palindromes that are not factors.
    """
    base, flipped = normal_slope(s)
    target = exchange(u) if flipped else u
    if is_palindrome(u):
        seq = palindrome_occurrences(base, target)
    else:
        idx = conjugate_index(base, target)
        if idx is None:
            return None
        seq = conjugate_occurrences(base, *idx)
    if flipped:
        seq = OccurrenceSequence(u, seq.occ_first, seq.gap_slope, seq.gap_a, seq.gap_b, seq.route, seq.certificate)
    return seq


def oracle_positions(s: Slope, u: str, count: int) -> list[int]:
    """First ``count`` positions of u by scanning ever longer prefixes."""
    length = recommended_prefix_length(s, len(u))
    if u not in c_prefix(s, length):
        raise NotAFactor(f"{u!r} is not a factor of c_alpha for slope {s}")
    while True:
        pos = find_positions(c_prefix(s, length), u, count)
        if len(pos) >= count:
            return pos
        length *= 2


@dataclass
class OccurrenceReport:
    subject: str
    method: str
    positions: list[int]
    sequence: Optional[OccurrenceSequence] = None

    @property
    def occ_first(self) -> int:
        return self.sequence.occ_first if self.sequence else self.positions[0]

    def to_dict(self) -> dict:
        seq = self.sequence
        if seq is not None:
            gaps = [str(seq.gap_a), str(seq.gap_b)]
            slope = str(seq.gap_slope)
        else:
            seen = []
            for p, q in zip(self.positions, self.positions[1:]):
                if str(q - p) not in seen:
                    seen.append(str(q - p))
            gaps, slope = seen, None
        return {
            "subject": self.subject,
            "method": self.method,
            "occ_first": str(self.occ_first),
            "gaps": gaps,
            "gap_slope": slope,
            "positions": [str(p) for p in self.positions],
        }


def locate(s: Slope, u: str, count: int, method: str = "closed") -> OccurrenceReport:
    """First ``count`` occurrences of u, from the closed form when one exists."""
    check_word(u)
    if not u:
        raise InvalidWord("the empty word occurs everywhere")
    if method not in ("closed", "oracle"):
        raise ValueError(f"method must be 'closed' or 'oracle', got {method!r}")
    if method == "closed":
        seq = closed_sequence(s, u)
        if seq is not None:
            return OccurrenceReport(u, "closed", seq.positions(count), seq)
    return OccurrenceReport(u, "oracle", oracle_positions(s, u, count))


def factor_occurrences(s: Slope, u: str, count: int) -> list[int]:
    return locate(s, u, count).positions


# -- return words, overlap, decompositions --------------------------------


@dataclass(frozen=True)
class ReturnWords:
    """The two return words of a factor.

    With a closed form, ``first`` belongs to gap letter ``a``; for scanned
    factors the order is order of appearance.
    """

    first: str
    second: str

    def as_set(self) -> set[str]:
        return {self.first, self.second}


def _return_word_at(s: Slope, position: int, gap: int) -> str:
    return c_prefix(s, position + gap)[position:]


def return_words(s: Slope, u: str) -> ReturnWords:
    seq = closed_sequence(s, check_word(u))
    if seq is not None:
        found = {}
        count = 8
        while len(found) < 2:
            pos = seq.positions(count + 1)
            for p, nxt in zip(pos, pos[1:]):
                found.setdefault(nxt - p, p)
            count *= 2
        return ReturnWords(
            _return_word_at(s, found[seq.gap_a], seq.gap_a),
            _return_word_at(s, found[seq.gap_b], seq.gap_b),
        )
    count = 8
    while True:
        pos = oracle_positions(s, u, count)
        order: list[str] = []
        for p, nxt in zip(pos, pos[1:]):
            r = _return_word_at(s, p, nxt - p)
            if r not in order:
                order.append(r)
        if len(order) >= 2:
            return ReturnWords(order[0], order[1])
        count *= 2


def overlap_factors(s: Slope, u: str) -> set[str]:
    rw = return_words(s, u)
    return {u[len(r):] for r in (rw.first, rw.second) if len(r) < len(u)}


def gap_word(u: str, return_word: str) -> SignedWord:
    """The word between an occurrence of u and the next one."""
    if len(return_word) >= len(u):
        return SignedWord(return_word[len(u):])
    return SignedWord(u[len(return_word):], negative=True)


class _ScannedSuffix(WordStream):
    def __init__(self, slope: Slope, start: int):
        self.slope, self.start = slope, start

    def take(self, length: int) -> str:
        return c_prefix(self.slope, self.start + length)[self.start:]


def derived_word(s: Slope, u: str) -> WordStream:
    """c_alpha after the first occurrence of u, built from its return words."""
    seq = closed_sequence(s, check_word(u))
    if seq is None:
        return _ScannedSuffix(s, oracle_positions(s, u, 1)[0])
    rw = return_words(s, u)
    return SubstitutedStream(SturmianStream(seq.gap_slope), rw.first, rw.second)


def derived_labels(s: Slope, u: str, count: int) -> list[int]:
    """Return-word labels (1 = ReturnWords.first) of the first ``count`` returns."""
    seq = closed_sequence(s, check_word(u))
    if seq is not None:
        return seq.gap_labels(count)
    rw = return_words(s, u)
    pos = oracle_positions(s, u, count + 1)
    prefix = c_prefix(s, pos[-1])
    return [1 if prefix[p:nxt] == rw.first else 2 for p, nxt in zip(pos, pos[1:])]


@dataclass(frozen=True)
class Decomposition:
    """c_alpha sliced as head, u, z_1, u, z_2, ...

    ``items`` holds (position of an occurrence, gap word to the next one).
    """

    subject: str
    head: str
    items: tuple[tuple[int, SignedWord], ...]
    method: str = "closed"

    def replay(self, last_gap: bool = True) -> str:
        """head u z_1 u z_2 ... reduced; ``last_gap=False`` stops after the last u."""
        out = self.head
        for i, (_, z) in enumerate(self.items):
            out += self.subject
            if not last_gap and i == len(self.items) - 1:
                break
            if z.negative:
                if not out.endswith(z.body):
                    raise AssertionError(f"overlap {z.body!r} does not cancel")
                out = out[: len(out) - len(z.body)]
            else:
                out += z.body
        return out

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "method": self.method,
            "head": self.head,
            "items": [{"position": str(p), "gap": str(z)} for p, z in self.items],
        }


def decompose(s: Slope, u: str, length: int) -> Decomposition:
    """Occurrences of u starting before ``length`` with their gap words."""
    report = locate(s, u, 1)
    if report.occ_first >= length:
        raise ValueError(f"no occurrence of {u!r} starts before {length}")
    seq = report.sequence
    rw = return_words(s, u)
    by_len = {len(r): gap_word(u, r) for r in (rw.first, rw.second)}
    if seq is not None:
        pos = seq.positions_below(length)
        nxt = seq.positions(len(pos) + 1)[-1]
    else:
        count = 16
        while True:
            all_pos = oracle_positions(s, u, count)
            if all_pos[-1] >= length:
                break
            count *= 2
        pos = [p for p in all_pos if p < length]
        nxt = all_pos[len(pos)]
    items = tuple((p, by_len[q - p]) for p, q in zip(pos, pos[1:] + [nxt]))
    return Decomposition(u, c_prefix(s, pos[0]), items, report.method)


def render_decomposition(d: Decomposition, style: str = "inline") -> str:
    """``inline``: head(u)z_1(u)z_2...; ``annotate``: replayed prefix over a marker line."""
    if style == "inline":
        parts = [d.head]
        for _, z in d.items:
            parts.append(f"({d.subject})")
            if z.body:
                parts.append(str(z))
        return "".join(parts)
    if style == "annotate":
        text = d.replay(last_gap=False)
        marks = [" "] * len(text)
        for p, _ in d.items:
            marks[p] = "^"
        return text + "\n" + "".join(marks).rstrip()
    raise ValueError(f"unknown style {style!r}")


# -- substitution views ---------------------------------------------------


@dataclass(frozen=True)
class SubstitutionView:
    """c_alpha = head + c_slope{image_a, image_b}."""

    name: str
    head: str
    slope: Slope
    image_a: str
    image_b: str

    def stream(self) -> SubstitutedStream:
        return SubstitutedStream(SturmianStream(self.slope), self.image_a, self.image_b, self.head)


def substitution_views(s: Slope, n: int) -> list[SubstitutionView]:
    _require_singular(s)
    if n < 1:
        raise KOutOfRange(f"substitution views need n >= 1, got {n}")
    return [
        SubstitutionView("standard", "", s.shifted(n, 1), standard_word(s, n), standard_word(s, n - 1)),
        SubstitutionView(
            "adjoining",
            v_product(s, n - 2),
            s.shifted(n + 1, 1),
            v(s, n - 1) + w(s, n),
            w(s, n - 1) + v(s, n - 2),
        ),
        SubstitutionView(
            "singular",
            v_product(s, n - 1),
            s.shifted(n + 1, 0),
            w(s, n) + v(s, n - 1),
            w(s, n) + w(s, n + 1),
        ),
    ]
