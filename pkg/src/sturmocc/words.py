"""Finite binary words, two-letter morphisms and lazy infinite words.

Words are plain ``str`` objects over the letters ``'a'`` and ``'b'``.  The
empty word is ``""``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .errors import InvalidWord, NotAPrefix, NotASuffix

LETTERS = ("a", "b")
_EXCHANGE = str.maketrans("ab", "ba")


def check_word(w: str) -> str:
    if not isinstance(w, str) or w.strip("ab"):
        raise InvalidWord(f"not a word over {{a,b}}: {w!r}")
    return w


def reverse(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def strip_prefix(w: str, u: str) -> str:
    """u^{-1} w, defined only when u is a prefix of w."""
    if not w.startswith(u):
        raise NotAPrefix(f"{u!r} is not a prefix of {w!r}")
    return w[len(u):]


def strip_suffix(w: str, v: str) -> str:
    """w v^{-1}, defined only when v is a suffix of w."""
    if not w.endswith(v):
        raise NotASuffix(f"{v!r} is not a suffix of {w!r}")
    return w[: len(w) - len(v)]


def is_proper_suffix(v: str, w: str) -> bool:
    return len(v) < len(w) and w.endswith(v)


def conjugate(w: str, k: int) -> str:
    """C_k(w), the rotation x_{k+1}...x_m x_1...x_k; k is taken mod |w|."""
    if not w:
        raise InvalidWord("conjugates of the empty word are undefined")
    k %= len(w)
    return w[k:] + w[:k]


def conjugates(w: str) -> list[str]:
    return [conjugate(w, k) for k in range(len(w))]


def exchange(w: str) -> str:
    """E(w): swap every a with b."""
    return w.translate(_EXCHANGE)


@dataclass(frozen=True)
class SignedWord:
    """A word or the formal inverse of a nonempty word.

    Gap words between overlapping occurrences are inverses of the overlap,
    e.g. ``(aa)^-1``; nothing more of the free group is needed.
    """

    body: str
    negative: bool = False

    def __post_init__(self):
        check_word(self.body)
        if self.negative and not self.body:
            raise InvalidWord("the inverse of the empty word is not represented")

    @property
    def length(self) -> int:
        """Signed length: -|body| for inverses."""
        return -len(self.body) if self.negative else len(self.body)

    def inverse(self) -> "SignedWord":
        if not self.body:
            return self
        return SignedWord(self.body, not self.negative)

    def __str__(self) -> str:
        return f"({self.body})^-1" if self.negative else self.body


Image = Union[str, SignedWord]


@dataclass(frozen=True)
class Morphism:
    """The monoid endomorphism a -> image_a, b -> image_b."""

    image_a: str
    image_b: str

    def __call__(self, w: str) -> str:
        return "".join(self.image_a if x == "a" else self.image_b for x in w)

    def __mul__(self, other: "Morphism") -> "Morphism":
        # composition: (self * other)(w) == self(other(w))
        return Morphism(self(other.image_a), self(other.image_b))

    def __pow__(self, k: int) -> "Morphism":
        return morphism_power(self, k)


IDENTITY = Morphism("a", "b")
E = Morphism("b", "a")
PHI = Morphism("ab", "a")
G = PHI * E


def apply_morphism(m: Morphism, w: str) -> str:
    return m(w)


def morphism_power(m: Morphism, k: int) -> Morphism:
    if k < 0:
        raise ValueError("morphism powers need k >= 0")
    result = IDENTITY
    for _ in range(k):
        result = m * result
    return result


class WordStream:
    """A lazily described infinite word.

    Subclasses implement :meth:`take`; iteration is a convenience that pulls
    ever longer prefixes.  Instances keep no iteration state of their own,
    so the same descriptor can back any number of independent iterators.
    """

    def take(self, length: int) -> str:
        raise NotImplementedError

    def __iter__(self) -> Iterator[str]:
        size = 64
        done = 0
        while True:
            chunk = self.take(size)
            yield from chunk[done:]
            done = size
            size *= 2


class SubstitutedStream(WordStream):
    """``head`` followed by ``base`` with a -> image_a and b -> image_b.

    With signed images the result is a stream of tokens (see
    :meth:`tokens`) rather than a flattened word.
    """

    def __init__(self, base: WordStream, image_a: Image, image_b: Image, head: str = ""):
        if _body(image_a) == "" and _body(image_b) == "":
            raise InvalidWord("substitution images cannot both be empty")
        self.base = base
        self.image_a = image_a
        self.image_b = image_b
        self.head = head

    @property
    def signed(self) -> bool:
        return any(isinstance(x, SignedWord) and x.negative for x in (self.image_a, self.image_b))

    def tokens(self, count: int) -> list[SignedWord]:
        a, b = _signed(self.image_a), _signed(self.image_b)
        return [a if x == "a" else b for x in self.base.take(count)]

    def take(self, length: int) -> str:
        if self.signed:
            raise TypeError("a stream with inverse images has no flat expansion")
        need = length - len(self.head)
        if need <= 0:
            return self.head[:length]
        a, b = _body(self.image_a), _body(self.image_b)
        shortest = min(len(x) for x in (a, b) if x)
        count = need // max(len(a), len(b), 1) + 1
        while True:
            base = self.base.take(count)
            out = "".join(a if x == "a" else b for x in base)
            if len(out) >= need:
                return (self.head + out)[:length]
            count = max(2 * count, need // shortest + 1)


def _body(x: Image) -> str:
    return x.body if isinstance(x, SignedWord) else x


def _signed(x: Image) -> SignedWord:
    return x if isinstance(x, SignedWord) else SignedWord(x)


def substitute_stream(z: WordStream, image_a: Image, image_b: Image) -> SubstitutedStream:
    return SubstitutedStream(z, image_a, image_b)
