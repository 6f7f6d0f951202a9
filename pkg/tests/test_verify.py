import pytest

from sturmocc.verify import CHECKS, Limits

from conftest import random_slopes


@pytest.mark.parametrize("name", list(CHECKS))
def test_battery(battery_slope, name):
    assert CHECKS[name](battery_slope, Limits()) == []


@pytest.mark.parametrize("s", [s for s in random_slopes(8) if s.digit(1) >= 2], ids=str)
@pytest.mark.parametrize("name", ["singular-identities", "products", "conjugate-anchors", "substitution-views", "palindromes"])
def test_random_slopes(s, name):
    assert CHECKS[name](s, Limits(max_n=4, prefix_len=20_000)) == []
