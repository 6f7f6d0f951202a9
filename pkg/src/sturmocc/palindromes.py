"""Structure of the palindromic factors of c_alpha.

Every palindromic factor is ``wing + core + reverse(wing)`` where the core
is one of the singular palindromes U_{n,k} = (w_{n-1} v_{n-2})^k w_{n-1} or
Ubar_{n,k} = (v_{n-2} w_{n-1})^k v_{n-2}, plus the short runs a^k.
:func:`classify` finds that certificate, :func:`band_form` reports the
finer five-way case split by length band, and
:func:`enumerate_palindromic_factors` generates every palindromic factor up
to a length bound straight from the parameter space.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import InvalidWord, NotAFactor, NotAPalindrome
from .slope import Slope
from .standard import U, Ubar, v, w
from .words import check_word, exchange, is_palindrome, reverse

FORM_U = "U"
FORM_UBAR = "UBAR"
POWER_A = "POWER_A"


@dataclass(frozen=True)
class StructuralForm:
    """Certificate that a palindrome equals wing + core + reverse(wing).

    ``exchanged`` marks certificates computed for the complementary slope
    after swapping letters (used when a_1 = 1).
    """

    family: str
    n: int
    k: int
    wing: str
    core_len: int
    exchanged: bool = False

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "k": self.k,
            "wing": self.wing,
            "core_len": self.core_len,
            "exchanged": self.exchanged,
        }


def normal_slope(s: Slope) -> tuple[Slope, bool]:
    """Slope with a_1 >= 2 describing the same word up to letter exchange."""
    if s.digit(1) == 1:
        return s.complement(), True
    return s, False


def core_word(s: Slope, form: StructuralForm) -> str:
    if form.family == FORM_U:
        return U(s, form.n, form.k)
    if form.family == FORM_UBAR:
        return Ubar(s, form.n, form.k)
    return "a" * form.k


def reconstruct(s: Slope, form: StructuralForm) -> str:
    base, flipped = normal_slope(s)
    if flipped != form.exchanged:
        raise ValueError("certificate does not belong to this slope")
    word = form.wing + core_word(base, form) + reverse(form.wing)
    return exchange(word) if flipped else word


def _u_candidates(s: Slope, n: int, length: int):
    """(k, core_len, wing_len) for the U family at level n, largest core first."""
    qn, qm = s.q(n), s.q(n - 1)
    room = len(v(s, n - 2))
    for k in range(s.directive(n + 1) - 2, -1, -1):
        core = k * qn + qm
        rest = length - core
        if rest < 0 or rest % 2:
            continue
        if rest // 2 >= room:
            break
        yield k, core, rest // 2


def _ubar_candidates(s: Slope, n: int, length: int):
    qn, qm = s.q(n), s.q(n - 1)
    for k in range(s.directive(n + 1) - 1, -1, -1):
        core = (k + 1) * qn - qm
        rest = length - core
        if rest < 0 or rest % 2:
            continue
        if rest // 2 >= qm:
            break
        yield k, core, rest // 2


def _matches(u: str, wing_source: str, wl: int, core: str) -> bool:
    wing = wing_source[len(wing_source) - wl :]
    return u[:wl] == wing and u[wl : len(u) - wl] == core


def classify(s: Slope, u: str) -> StructuralForm:
    """Canonical certificate for the palindromic factor u.

    Levels n = 1, 2, ... are searched in order, the U family before the
    barred family and larger cores first.  Runs of a's that no singular
    form covers fall back to POWER_A.  Raises NotAFactor when nothing
    matches.
    """
    check_word(u)
    if not u:
        raise InvalidWord("the empty word has no certificate")
    if not is_palindrome(u):
        raise NotAPalindrome(u)
    base, flipped = normal_slope(s)
    if flipped:
        return replace(classify(base, exchange(u)), exchanged=True)
    if u == "b":
        return StructuralForm(FORM_U, 1, 0, "", 1)
    length = len(u)
    n = 1
    while s.q(n - 2) <= length:
        src = v(s, n - 2)
        for k, core, wl in _u_candidates(s, n, length):
            if _matches(u, src, wl, U(s, n, k)):
                return StructuralForm(FORM_U, n, k, src[len(src) - wl :], core)
        src = w(s, n - 1)
        for k, core, wl in _ubar_candidates(s, n, length):
            if _matches(u, src, wl, Ubar(s, n, k)):
                return StructuralForm(FORM_UBAR, n, k, src[len(src) - wl :], core)
        n += 1
    if u == "a" * length and length <= s.directive(1):
        return StructuralForm(POWER_A, 0, length, "", length)
    raise NotAFactor(f"{u!r} is not a factor of c_alpha for slope {s}")


def is_palindromic_factor(s: Slope, u: str) -> bool:
    try:
        classify(s, u)
    except (NotAFactor, NotAPalindrome):
        return False
    return True


@dataclass(frozen=True)
class BandForm:
    """Which of the five length-band cases describes u.

    ``band_n`` is the n with q_n < |u| <= q_{n+1}; ``cases`` lists every
    clause that matched (exactly one is expected).
    """

    band_n: int
    case: int
    wing: str
    k: int | None
    cases: tuple[int, ...]


def band_form(s: Slope, u: str) -> BandForm:
    check_word(u)
    if not is_palindrome(u):
        raise NotAPalindrome(u)
    base, flipped = normal_slope(s)
    if flipped:
        return band_form(base, exchange(u))
    length = len(u)
    if length <= 1:
        raise ValueError("band forms need |u| > q_0 = 1")
    n = 0
    while not s.q(n) < length <= s.q(n + 1):
        n += 1
    found = []

    def try_core(case, core, source, limit_ok, proper, k=None):
        rest = length - len(core)
        if rest < 0 or rest % 2:
            return
        wl = rest // 2
        if wl > len(source) or (proper and wl == len(source)):
            return
        if not limit_ok(wl):
            return
        if _matches(u, source, wl, core):
            found.append((case, source[len(source) - wl :], k))

    qn, qn1 = s.q(n), s.q(n + 1)
    try_core(1, w(s, n), v(s, n - 1), lambda wl: 2 * wl <= qn1 - qn, False)
    try_core(2, v(s, n - 1), w(s, n), lambda wl: 2 * wl <= qn, False)
    vm2, wm1 = v(s, n - 2), w(s, n - 1)
    d = s.directive(n + 1)
    for k in range(0, d - 1):
        cond = (lambda wl: 2 * wl > len(vm2)) if k == 0 else (lambda wl: True)
        try_core(3, (wm1 + vm2) * k + wm1, vm2, cond, True, k)
    for k in range(0, d):
        cond = (lambda wl: 2 * wl > len(wm1)) if k == 0 else (lambda wl: True)
        try_core(4, (vm2 + wm1) * k + vm2, wm1, cond, True, k)
    if u == w(s, n + 1):
        found.append((5, "", None))
    if not found:
        raise NotAFactor(f"{u!r} is not a factor of c_alpha for slope {s}")
    case, wing, k = found[0]
    return BandForm(n, case, wing, k, tuple(c for c, _, _ in found))


def enumerate_palindromic_factors(s: Slope, max_len: int) -> list[tuple[str, StructuralForm]]:
    """Every palindromic factor of length <= max_len with its certificate.

    Words are generated from the (n, k, wing) parameter space, never by
    scanning a prefix.  Sorted by (length, word).
    """
    base, flipped = normal_slope(s)
    words: set[str] = set()
    if max_len >= 1:
        words.add("b")
    words.update("a" * k for k in range(1, min(base.directive(1), max_len) + 1))
    n = 1
    while base.q(n - 2) <= max_len:
        qn, qm = base.q(n), base.q(n - 1)
        d = base.directive(n + 1)
        src = v(base, n - 2)
        for k in range(0, d - 1):
            core = k * qn + qm
            if core > max_len:
                break
            body = U(base, n, k)
            for wl in range(0, min(len(src) - 1, (max_len - core) // 2) + 1):
                wing = src[len(src) - wl :]
                words.add(wing + body + reverse(wing))
        src = w(base, n - 1)
        for k in range(0, d):
            core = (k + 1) * qn - qm
            if core > max_len:
                break
            body = Ubar(base, n, k)
            for wl in range(0, min(len(src) - 1, (max_len - core) // 2) + 1):
                wing = src[len(src) - wl :]
                words.add(wing + body + reverse(wing))
        n += 1
    words.discard("")
    out = []
    for word in sorted(words, key=lambda x: (len(x), x)):
        form = classify(base, word)
        if flipped:
            word, form = exchange(word), replace(form, exchanged=True)
        out.append((word, form))
    out.sort(key=lambda item: (len(item[0]), item[0]))
    return out
