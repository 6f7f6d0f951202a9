import random

import pytest
from hypothesis import strategies as st

from sturmocc import Slope, parse_slope

BATTERY = ["2,(1)", "(2,1)", "(2,1,3,1)", "3,(1,2)"]
FIB = "2,(1)"
EX = "(2,1,3,1)"


def random_slopes(count=20, seed=2005):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        pre = [rng.randint(1, 4) for _ in range(rng.randint(0, 3))]
        per = [rng.randint(1, 4) for _ in range(rng.randint(1, 4))]
        out.append(Slope(pre, per))
    return out


digits = st.integers(min_value=1, max_value=5)
slopes = st.builds(
    Slope,
    st.lists(digits, max_size=3).map(tuple),
    st.lists(digits, min_size=1, max_size=4).map(tuple),
)
normal_slopes = slopes.filter(lambda s: s.digit(1) >= 2)
ab_words = st.text(alphabet="ab", max_size=30)


@pytest.fixture(params=BATTERY)
def battery_slope(request):
    return parse_slope(request.param)
