import pytest
from hypothesis import given
from hypothesis import strategies as st

from sturmocc import InvalidWord, NotAPrefix, NotASuffix, parse_slope
from sturmocc.standard import SturmianStream, c_prefix
from sturmocc.words import (
    E,
    G,
    PHI,
    Morphism,
    SignedWord,
    SubstitutedStream,
    check_word,
    conjugate,
    conjugates,
    exchange,
    is_palindrome,
    morphism_power,
    reverse,
    strip_prefix,
    strip_suffix,
)

from conftest import ab_words


def test_basics():
    assert reverse("abaab") == "baaba"
    assert is_palindrome("aabaa")
    assert is_palindrome("")
    assert not is_palindrome("ab")
    assert strip_prefix("abaab", "ab") == "aab"
    assert strip_suffix("aab", "b") == "aa"
    with pytest.raises(NotAPrefix):
        strip_prefix("ab", "ba")
    with pytest.raises(NotASuffix):
        strip_suffix("ab", "a")
    with pytest.raises(InvalidWord):
        check_word("abc")


def test_conjugates():
    assert conjugate("abaabaab", 2) == "aabaabab"
    assert conjugate("abaabaab", 1) == "baabaaba"
    assert conjugate("abaab", 0) == "abaab"
    assert len(set(conjugates("abaabaab"))) == 8


def test_morphisms():
    assert E("abba") == "baab"
    assert PHI("ab") == "aba"
    g2 = morphism_power(G, 2)
    assert (g2.image_a, g2.image_b) == ("a", "aab")
    assert G ** 3 == Morphism("a", "aaab")


def test_signed_word():
    z = SignedWord("aa", negative=True)
    assert str(z) == "(aa)^-1"
    assert z.length == -2
    assert z.inverse() == SignedWord("aa")


def test_fibonacci_over_singular_words():
    # abaa (bab)aa (bab)aabaa ...: gap letter a is the short return word
    fib = parse_slope("2,(1)")
    stream = SubstitutedStream(SturmianStream(fib.shifted(3, 0)), "babaa", "babaabaa", "abaa")
    assert stream.take(300) == c_prefix(fib, 300)


def test_signed_stream_tokens():
    ex = parse_slope("(2,1,3,1)")
    stream = SubstitutedStream(SturmianStream(ex.shifted(2, -1)), SignedWord("aa", True), SignedWord("bab"))
    tokens = stream.tokens(4)
    assert [str(t) for t in tokens] == ["(aa)^-1", "bab", "(aa)^-1", "(aa)^-1"]
    with pytest.raises(TypeError):
        stream.take(5)


def test_identity_substitution():
    fib = parse_slope("2,(1)")
    assert SubstitutedStream(SturmianStream(fib), "a", "b").take(100) == c_prefix(fib, 100)


@given(ab_words)
def test_reverse_involution(u):
    assert reverse(reverse(u)) == u


@given(ab_words, ab_words)
def test_strip_prefix_inverts_concat(u, x):
    assert strip_prefix(u + x, u) == x
    assert strip_suffix(x + u, u) == x


@given(ab_words.filter(bool), st.integers(-50, 50))
def test_conjugate_rotation(u, k):
    c = conjugate(u, k)
    assert sorted(c) == sorted(u)
    assert conjugate(c, -k) == u


@given(ab_words)
def test_exchange_involution(u):
    assert exchange(exchange(u)) == u
    assert E(u) == exchange(u)


@given(ab_words, ab_words)
def test_morphism_is_multiplicative(u, x):
    assert G(u + x) == G(u) + G(x)
    assert (G * E)(u) == G(E(u))
