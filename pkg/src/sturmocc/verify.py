"""Invariant battery behind ``sturmocc verify``.

Each check takes a slope (a_1 >= 2) plus limits and returns a list of
violation messages; an empty list means the check passed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import oracle
from .occurrences import (
    conjugate_occurrences,
    locate,
    overlap_factors,
    singular_v_occurrences,
    singular_w_occurrences,
    substitution_views,
)
from .palindromes import band_form, enumerate_palindromic_factors, reconstruct
from .slope import Slope
from .standard import SturmianStream, U, Ubar, c_prefix, standard_word, v, v_product, w
from .words import (
    E,
    G,
    SubstitutedStream,
    conjugate,
    conjugates,
    is_palindrome,
    morphism_power,
    strip_prefix,
    strip_suffix,
)


@dataclass
class Limits:
    max_n: int = 5
    prefix_len: int = 100_000
    count: int = 20


def _expect(bad: list, ok: bool, msg: str) -> None:
    if not ok:
        bad.append(msg)


def check_convergents(s: Slope, lim: Limits) -> list[str]:
    bad = []
    for n in range(2, 41):
        _expect(bad, s.q(n) == s.digit(n) * s.q(n - 1) + s.q(n - 2), f"q_{n} recurrence")
        _expect(bad, s.p(n) == s.digit(n) * s.p(n - 1) + s.p(n - 2), f"p_{n} recurrence")
    return bad


def check_standard_words(s: Slope, lim: Limits) -> list[str]:
    bad = []
    top = max(lim.max_n, 8)
    text = c_prefix(s, s.q(top))
    for n in range(0, top + 1):
        sn = standard_word(s, n)
        _expect(bad, len(sn) == s.q(n), f"|s_{n}| != q_{n}")
        _expect(bad, text.startswith(sn), f"s_{n} not a prefix of c_alpha")
        if n >= 1:
            _expect(bad, sn.endswith("ab" if n % 2 else "ba"), f"suffix of s_{n}")
    return bad


def check_singular_words(s: Slope, lim: Limits) -> list[str]:
    bad = []
    for n in range(-1, max(lim.max_n, 8) + 1):
        _expect(bad, is_palindrome(w(s, n)), f"w_{n} not a palindrome")
        _expect(bad, is_palindrome(v(s, n)), f"v_{n} not a palindrome")
        if n >= 0:
            _expect(bad, len(w(s, n)) == s.q(n), f"|w_{n}|")
        _expect(bad, len(v(s, n)) == s.q(n + 2) - s.q(n + 1), f"|v_{n}|")
    for n in range(0, max(lim.max_n, 8) + 1):
        d = s.directive(n + 1)
        for k in range(min(d, 6)):
            _expect(bad, is_palindrome(U(s, n, k)), f"U_{n},{k} not a palindrome")
            _expect(bad, is_palindrome(Ubar(s, n, k)), f"Ubar_{n},{k} not a palindrome")
            _expect(bad, len(U(s, n, k)) == k * s.q(n) + s.q(n - 1), f"|U_{n},{k}|")
            _expect(bad, len(Ubar(s, n, k)) == (k + 1) * s.q(n) - s.q(n - 1), f"|Ubar_{n},{k}|")
        _expect(bad, U(s, n, 0) == w(s, n - 1), f"U_{n},0 != w_{n - 1}")
        _expect(bad, U(s, n, d - 1) == v(s, n - 1), f"U_{n},d-1 != v_{n - 1}")
        _expect(bad, Ubar(s, n + 1, 0) == v(s, n - 1), f"Ubar_{n + 1},0 != v_{n - 1}")
    return bad


def check_singular_identities(s: Slope, lim: Limits) -> list[str]:
    """The seven properties of singular words, for 0 <= n <= max(max_n, 8)."""
    bad = []
    for n in range(0, max(lim.max_n, 8) + 1):
        sn = standard_word(s, n)
        y = sn[-1]
        x = "a" if y == "b" else "b"
        wn, w1, w2 = w(s, n), w(s, n - 1), w(s, n + 1)
        vm1, vm2 = v(s, n - 1), v(s, n - 2)
        d = s.directive(n + 1)
        _expect(bad, y + strip_prefix(wn, x) == w1 + vm2, f"(1a) n={n}")
        _expect(bad, y + strip_suffix(sn, y) == w1 + vm2, f"(1b) n={n}")
        _expect(bad, strip_suffix(wn, x) + y == vm2 + w1, f"(1c) n={n}")
        _expect(bad, w2 == w1 + vm2 + vm1 == vm1 + vm2 + w1, f"(2) n={n}")
        _expect(bad, vm1 == (w1 + vm2) * (d - 1) + w1, f"(3) n={n}")
        _expect(bad, w2 == (w1 + vm2) * d + w1, f"(4) n={n}")
        _expect(bad, w2 == y + v_product(s, n - 1), f"(5) n={n}")
        _expect(bad, wn not in w2, f"(6) n={n}")
        _expect(bad, vm1 not in wn, f"(7) n={n}")
    return bad


def check_products(s: Slope, lim: Limits) -> list[str]:
    """Prefix products of the v_j and the paired product identity."""
    bad = []
    text = c_prefix(s, len(v_product(s, 8)))
    for top in range(-1, 9):
        _expect(bad, text.startswith(v_product(s, top)), f"v_-1...v_{top} not a prefix")
    paired = ""
    for j in range(-1, 5):
        block = (v(s, 2 * j) + w(s, 2 * j + 1)) * s.directive(2 * j + 3)
        _expect(bad, block == v(s, 2 * j) + v(s, 2 * j + 1), f"paired block j={j}")
        paired += block
        _expect(bad, paired == v_product(s, 2 * j + 1), f"paired product up to j={j}")
    return bad


def check_conjugate_anchors(s: Slope, lim: Limits) -> list[str]:
    bad = []
    for n in range(1, lim.max_n + 1):
        sn, qn, qm = standard_word(s, n), s.q(n), s.q(n - 1)
        w1, vm2 = w(s, n - 1), v(s, n - 2)
        _expect(bad, conjugate(sn, qn - 1) == w1 + vm2, f"C_(q_n-1)(s_{n})")
        _expect(bad, conjugate(sn, qm - 1) == vm2 + w1, f"C_(q_n-1 - 1)(s_{n})")
        for k in range(qn):
            c = conjugate(sn, k)
            if k <= qm - 2:
                cut = k + 1
                ok = c == w1[cut:] + vm2 + w1[:cut]
            else:
                cut = k + 1 - qm
                ok = c == vm2[cut:] + w1 + vm2[:cut]
            _expect(bad, ok, f"conjugate structure n={n} k={k}")
    return bad


def check_substitution_views(s: Slope, lim: Limits, length: int = 1000) -> list[str]:
    bad = []
    text = c_prefix(s, length)
    for n in range(1, lim.max_n + 1):
        for view in substitution_views(s, n):
            _expect(bad, view.stream().take(length) == text, f"{view.name} view n={n}")
    # the even-index pair of decompositions with W_i inserted after each z_i
    for m in range(0, (lim.max_n + 1) // 2 + 1):
        head = "".join((v(s, 2 * j) + w(s, 2 * j + 1)) * s.directive(2 * j + 3) for j in range(-1, m))
        first = SubstitutedStream(
            SturmianStream(s.shifted(2 * m + 1, 0)),
            w(s, 2 * m) + v(s, 2 * m - 1),
            w(s, 2 * m) + w(s, 2 * m + 1),
            head,
        )
        second = SubstitutedStream(
            SturmianStream(s.shifted(2 * m + 1, 1)),
            w(s, 2 * m) + v(s, 2 * m - 1),
            v(s, 2 * m - 2) + w(s, 2 * m - 1),
            head,
        )
        _expect(bad, first.take(length) == text, f"even decomposition (1) m={m}")
        _expect(bad, second.take(length) == text, f"even decomposition (2) m={m}")
    return bad


def check_morphism_slopes(s: Slope, lim: Limits, length: int = 10_000) -> list[str]:
    bad = []
    for n in range(0, 5):
        base = s.shifted(n, 0)
        text = c_prefix(base, length)
        _expect(bad, E(text) == c_prefix(base.complement(), length), f"E(c) n={n}")
        for k in range(0, 4):
            image = morphism_power(G, k)(text)[:length]
            _expect(bad, image == c_prefix(s.shifted(n, k), length), f"G^{k}(c_alpha_{n})")
        if n >= 1:
            lhs = E(c_prefix(s.shifted(n + 1, 1), length))
            _expect(bad, lhs == c_prefix(s.shifted(n, 1 - s.directive(n + 1)), length), f"E(c_alpha_{n + 1},1)")
    lhs = E(c_prefix(s.shifted(1, 1), length))
    _expect(bad, lhs == c_prefix(s.shifted(0, -s.directive(1)), length), "E(c_alpha_1,1) at n=0")
    return bad


def check_factor_sets(s: Slope, lim: Limits) -> list[str]:
    bad = []
    for n in range(0, lim.max_n + 1):
        qn = s.q(n)
        text = c_prefix(s, oracle.recommended_prefix_length(s, qn) + lim.prefix_len // 10)
        found = oracle.factors_of_length(text, qn)
        expected = set(conjugates(standard_word(s, n))) | {w(s, n)}
        _expect(bad, len(set(conjugates(standard_word(s, n)))) == qn, f"|C(s_{n})| != q_{n}")
        _expect(bad, found == expected, f"factors of length q_{n}")
        _expect(bad, len(found) == qn + 1, f"|Omega_q_{n}| != q_{n} + 1")
    return bad


def _scan_by_length(text: str, m: int) -> tuple[dict[str, set[str]], dict[str, int]]:
    """Return words and smallest gap of every length-m factor, in one pass."""
    last: dict[str, int] = {}
    rets: dict[str, set[str]] = {}
    gap: dict[str, int] = {}
    for i in range(len(text) - m + 1):
        f = text[i : i + m]
        if f in last:
            rets.setdefault(f, set()).add(text[last[f] : i])
            gap[f] = min(gap.get(f, i), i - last[f])
        last[f] = i
    for f in last:
        rets.setdefault(f, set())
    return rets, gap


def _top_level(lim: Limits) -> int:
    return max(0, min(4, lim.max_n - 1))


def check_return_words(s: Slope, lim: Limits) -> list[str]:
    """Exactly two return words for every factor of length <= q_4."""
    bad = []
    text = c_prefix(s, lim.prefix_len)
    for m in range(1, s.q(_top_level(lim)) + 1):
        rets, _ = _scan_by_length(text, m)
        for f, found in rets.items():
            _expect(bad, len(found) == 2, f"{f!r} has {len(found)} return words")
    return bad


def check_overlap_law(s: Slope, lim: Limits) -> list[str]:
    """No overlap iff u = w_{n+1} or w_n is a factor of u (q_n < |u| <= q_{n+1})."""
    bad = []
    top = _top_level(lim)
    text = c_prefix(s, oracle.recommended_prefix_length(s, s.q(top + 1)) * 4)
    for n in range(0, top + 1):
        for m in range(s.q(n) + 1, s.q(n + 1) + 1):
            _, gap = _scan_by_length(text, m)
            for u in sorted(gap):
                scanned = gap[u] < m
                engine = bool(overlap_factors(s, u))
                law = not (u == w(s, n + 1) or w(s, n) in u)
                _expect(bad, scanned == engine == law, f"overlap law for {u!r}")
    return bad


def check_palindromes(s: Slope, lim: Limits, max_len: int = 60) -> list[str]:
    bad = []
    listed = enumerate_palindromic_factors(s, max_len)
    scanned = oracle.palindromic_factors(c_prefix(s, lim.prefix_len), max_len)
    _expect(bad, {u for u, _ in listed} == scanned, "palindrome enumeration != scan")
    for u, form in listed:
        _expect(bad, reconstruct(s, form) == u, f"reconstruct {u!r}")
        if len(u) > 1:
            bf = band_form(s, u)
            _expect(bad, len(bf.cases) == 1, f"{u!r} matches band cases {bf.cases}")
    return bad


def occurrence_subjects(s: Slope, max_n: int) -> list[tuple[str, str]]:
    """(label, word) for the sweep: palindromes up to q_5, conjugates, singular words."""
    out = [("pal", u) for u, _ in enumerate_palindromic_factors(s, s.q(5))]
    for n in range(1, min(max_n, 4) + 1):
        out += [(f"C_{k}(s_{n})", conjugate(standard_word(s, n), k)) for k in range(s.q(n))]
    for n in range(0, max_n + 1):
        out.append((f"w_{n}", w(s, n)))
    for n in range(-1, max_n + 1):
        out.append((f"v_{n}", v(s, n)))
    return out


def check_occurrences(s: Slope, lim: Limits) -> list[str]:
    bad = []
    flat = []
    for label, u in occurrence_subjects(s, lim.max_n):
        report = locate(s, u, lim.count)
        _expect(bad, report.method == "closed", f"{label} {u[:20]!r} fell back to scanning")
        flat.append((label, u, report.positions))
    for n in range(0, lim.max_n + 1):
        flat.append((f"w_{n} direct", w(s, n), singular_w_occurrences(s, n).positions(lim.count)))
    for n in range(-1, lim.max_n + 1):
        flat.append((f"v_{n} direct", v(s, n), singular_v_occurrences(s, n).positions(lim.count)))
    for n in range(1, min(lim.max_n, 4) + 1):
        for k in range(s.q(n)):
            seq = conjugate_occurrences(s, n, k)
            flat.append((f"C_{k}(s_{n}) direct", seq.subject, seq.positions(lim.count)))
    text = c_prefix(s, max(pos[-1] + len(u) for _, u, pos in flat))
    for label, u, pos in flat:
        _expect(bad, oracle.find_positions(text, u, lim.count) == pos, f"{label} {u[:20]!r} positions")
    return bad


CHECKS: dict[str, Callable[..., list[str]]] = {
    "convergents": check_convergents,
    "standard-words": check_standard_words,
    "singular-words": check_singular_words,
    "singular-identities": check_singular_identities,
    "products": check_products,
    "conjugate-anchors": check_conjugate_anchors,
    "substitution-views": check_substitution_views,
    "morphism-slopes": check_morphism_slopes,
    "factor-sets": check_factor_sets,
    "return-words": check_return_words,
    "overlap-law": check_overlap_law,
    "palindromes": check_palindromes,
    "occurrences": check_occurrences,
}


def run_all(s: Slope, lim: Limits | None = None) -> dict[str, list[str]]:
    lim = lim or Limits()
    return {name: fn(s, lim) for name, fn in CHECKS.items()}
