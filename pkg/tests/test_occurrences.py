import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sturmocc import (
    KOutOfRange,
    NotAFactor,
    closed_sequence,
    conjugate_occurrences,
    decompose,
    derived_labels,
    derived_word,
    locate,
    overlap_factors,
    palindrome_occurrences,
    parse_slope,
    render_decomposition,
    return_words,
    singular_v_occurrences,
    singular_w_occurrences,
    substitution_views,
)
from sturmocc.oracle import find_positions
from sturmocc.standard import c_prefix, standard_word, v, w

from conftest import EX, FIB, normal_slopes, slopes

EX_AABAA = [2, 5, 13, 16, 19, 27, 30, 33, 41, 44, 52, 55, 58, 66]


def oracle(s, u, count):
    return find_positions(c_prefix(s, 200_000), u, count)


def test_aabaa_positions():
    ex = parse_slope(EX)
    seq = palindrome_occurrences(ex, "aabaa")
    assert seq.occ_first == 2
    assert {seq.gap_a, seq.gap_b} == {3, 8}
    assert str(seq.gap_slope) == "2,(1,2,1,3)"
    assert seq.positions(14) == EX_AABAA
    assert locate(ex, "aabaa", 5).positions == EX_AABAA[:5]


def test_example_subjects():
    ex = parse_slope(EX)
    seq = palindrome_occurrences(ex, "baababaab")
    assert (seq.occ_first, seq.gap_a, seq.gap_b) == (7, 14, 11)
    assert palindrome_occurrences(ex, "abaabaaba").occ_first == 0


def test_singular_occurrences():
    fib, ex = parse_slope(FIB), parse_slope(EX)
    seq = singular_w_occurrences(fib, 2)
    assert (seq.subject, seq.occ_first) == ("bab", 4)
    assert singular_w_occurrences(ex, 0).occ_first == ex.directive(1)
    assert singular_w_occurrences(ex, 3).occ_first == 13
    assert singular_v_occurrences(ex, 1).positions(20) == oracle(ex, "aabaabaa", 20)
    assert singular_v_occurrences(fib, -1).positions(6) == [0, 2, 3, 5, 7, 8]
    seq = singular_v_occurrences(parse_slope("3,(1)"), -1)
    assert (seq.subject, seq.occ_first) == ("aa", 0)


def test_conjugate_occurrences():
    s = parse_slope("(2,1)")
    seq = conjugate_occurrences(s, 3, 1)
    assert (seq.subject, seq.occ_first, seq.gap_a, seq.gap_b) == ("baabaaba", 1, 8, 3)
    assert str(seq.gap_slope) == "2,(2,1)"
    seq = conjugate_occurrences(s, 3, 2)
    assert (seq.subject, seq.occ_first, seq.gap_a, seq.gap_b) == ("aabaabab", 2, 8, 11)
    assert str(seq.gap_slope) == "(1,2)"
    for n in range(1, 5):
        assert conjugate_occurrences(s, n, 0).occ_first == 0
    with pytest.raises(KOutOfRange):
        conjugate_occurrences(s, 3, 8)


def test_locate_routes():
    fib = parse_slope(FIB)
    assert locate(fib, "ab", 4).positions == [0, 3, 5, 8]
    assert locate(parse_slope("(1,1)"), "ba", 3).positions == [0, 3, 5]
    # abaa is neither a palindrome nor a conjugate of some s_n
    report = locate(fib, "abaa", 10)
    assert report.method == "oracle"
    assert report.positions == oracle(fib, "abaa", 10)
    assert closed_sequence(fib, "abaa") is None
    with pytest.raises(NotAFactor):
        locate(fib, "bb", 3)


def test_closed_and_oracle_methods_agree():
    ex = parse_slope(EX)
    for u in ["a", "b", "aa", "aabaa", "baababaab", "abaab", "baabaaba"]:
        assert locate(ex, u, 30, "closed").positions == locate(ex, u, 30, "oracle").positions


def test_report_json():
    report = locate(parse_slope(EX), "aabaa", 14)
    data = json.loads(json.dumps(report.to_dict()))
    assert data["method"] == "closed"
    assert data["occ_first"] == "2"
    assert data["gaps"] == ["3", "8"]
    assert data["gap_slope"] == "2,(1,2,1,3)"
    assert data["positions"] == [str(p) for p in EX_AABAA]


def test_return_words_and_overlaps():
    fib, ex = parse_slope(FIB), parse_slope(EX)
    assert return_words(fib, "bab").as_set() == {"babaabaa", "babaa"}
    assert sorted(map(len, return_words(ex, "aabaa").as_set())) == [3, 8]
    assert overlap_factors(ex, "aabaa") == {"aa"}
    assert overlap_factors(ex, "abaabaaba") == {"abaaba", "a"}
    assert overlap_factors(fib, "aabaa") == set()


def test_letter_return_words():
    # a return word of a equals a itself exactly when aa is a factor
    for lit in ["2,(1)", "(1,2)", "3,(1,2)"]:
        s = parse_slope(lit)
        has_aa = "aa" in c_prefix(s, 1000)
        assert ("a" in return_words(s, "a").as_set()) == has_aa


def test_decomposition_examples():
    ex = parse_slope(EX)
    d = decompose(ex, "baababaab", 80)
    assert d.head == "abaabaa"
    assert [str(z) for _, z in d.items[:3]] == ["aabaa", "aabaa", "aa"]
    d = decompose(ex, "aabaa", 40)
    assert d.head == "ab"
    assert render_decomposition(d).startswith("ab(aabaa)(aa)^-1(aabaa)bab(aabaa)")
    assert decompose(ex, standard_word(ex, 1), ex.q(3)).head == ""


@pytest.mark.parametrize("slope, word", [(EX, "baababaab"), (EX, "aabaa"), (EX, "abaabaaba"),
                                         ("(2,1)", "baabaaba"), ("(2,1)", "aabaabab"), (FIB, "abaa")])
def test_decomposition_replays(slope, word):
    s = parse_slope(slope)
    d = decompose(s, word, 200)
    text = d.replay()
    assert len(text) >= 200
    assert text == c_prefix(s, len(text))
    annotated = render_decomposition(d, "annotate").split("\n")
    shown = d.replay(last_gap=False)
    assert annotated[0] == shown == c_prefix(s, len(shown))
    assert all(shown[p : p + len(word)] == word for p, _ in d.items)
    assert [i for i, ch in enumerate(annotated[1]) if ch == "^"] == [p for p, _ in d.items]


@pytest.mark.parametrize("slope, word", [(EX, "aabaa"), (EX, "baababaab"), (FIB, "bab"), ("(2,1)", "baabaaba")])
def test_derived_word_is_sturmian(slope, word):
    s = parse_slope(slope)
    seq = closed_sequence(s, word)
    expected = [1 if ch == "a" else 2 for ch in c_prefix(seq.gap_slope, 200)]
    assert derived_labels(s, word, 200) == expected
    scanned = oracle(s, word, 201)
    gaps = [b - a for a, b in zip(scanned, scanned[1:])]
    assert gaps == [seq.gap_a if x == 1 else seq.gap_b for x in expected]
    first = seq.occ_first
    assert derived_word(s, word).take(500) == c_prefix(s, first + 500)[first:]


def test_substitution_views_fibonacci():
    fib = parse_slope(FIB)
    views = substitution_views(fib, 2)
    assert views[0].stream().take(50) == c_prefix(fib, 50)
    ex = parse_slope(EX)
    adj = substitution_views(ex, 1)[1]
    assert adj.head == "a"
    assert (adj.image_a, adj.image_b) == (v(ex, 0) + w(ex, 1), w(ex, 0) + v(ex, -1))
    assert all(view.stream().take(1000) == c_prefix(ex, 1000) for view in substitution_views(ex, 1))


@settings(max_examples=25, deadline=None)
@given(slopes, st.integers(1, 40), st.integers(0, 200))
def test_any_factor_matches_oracle(s, m, start):
    u = c_prefix(s, start + m)[start:]
    assert locate(s, u, 15).positions == oracle(s, u, 15)


@settings(max_examples=25, deadline=None)
@given(normal_slopes, st.integers(1, 4), st.data())
def test_conjugates_match_oracle(s, n, data):
    k = data.draw(st.integers(0, s.q(n) - 1))
    seq = conjugate_occurrences(s, n, k)
    assert seq.positions(15) == oracle(s, seq.subject, 15)
