import json
import subprocess
import sys

import pytest

from sturmocc.cli import main
from sturmocc.occurrences import Decomposition
from sturmocc.standard import c_prefix
from sturmocc.slope import parse_slope
from sturmocc.words import SignedWord


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_prefix(capsys):
    assert run(capsys, "prefix", "--slope", "(2,1,3,1)", "--length", "39")[1] == (
        "abaabaabaababaabaabaabaababaabaabaabaab\n"
    )
    assert run(capsys, "prefix", "--slope", "2,(1)", "--length", "13")[1] == "abaababaabaab\n"
    assert run(capsys, "prefix", "--slope", "2,(1)", "--length", "0") == (0, "\n", "")


def test_singular(capsys):
    assert run(capsys, "singular", "--slope", "(2,1,3,1)", "--family", "w", "--n", "3")[1] == "aabaabaabaa\n"
    assert run(capsys, "singular", "--slope", "(2,1,3,1)", "--family", "v", "--n", "-2")[1] == "\n"
    assert run(capsys, "singular", "--slope", "(2,1,3,1)", "--family", "u", "--n", "2", "--k", "1")[1] == "aabaa\n"


def test_occurrences(capsys):
    code, out, _ = run(capsys, "occurrences", "--slope", "(2,1,3,1)", "--word", "aabaa", "--count", "14")
    assert code == 0
    assert out.split() == "2 5 13 16 19 27 30 33 41 44 52 55 58 66".split()
    code, out, _ = run(
        capsys, "occurrences", "--slope", "(2,1,3,1)", "--word", "aabaa", "--count", "5", "--method", "both", "--format", "json"
    )
    data = json.loads(out)
    assert code == 0
    assert data["positions"] == ["2", "5", "13", "16", "19"]
    assert data["gap_slope"] == "2,(1,2,1,3)"


def test_occurrences_oracle_route(capsys):
    code, out, _ = run(capsys, "occurrences", "--slope", "2,(1)", "--word", "abaa", "--format", "json")
    assert code == 0
    assert json.loads(out)["method"] == "oracle"


def test_returns(capsys):
    assert run(capsys, "returns", "--slope", "2,(1)", "--word", "bab")[1] == "babaabaa babaa\n"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--slope", "(2,1,3,1)", "--word", "baababaab", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert (data["family"], data["n"], data["k"], data["wing"]) == ("UBAR", 4, 0, "baa")


def test_decompose_json_replays(capsys):
    code, out, _ = run(capsys, "decompose", "--slope", "(2,1,3,1)", "--word", "aabaa", "--length", "100", "--format", "json")
    data = json.loads(out)
    items = []
    for item in data["items"]:
        gap = item["gap"]
        z = SignedWord(gap[1:-4], True) if gap.endswith("^-1") else SignedWord(gap)
        items.append((int(item["position"]), z))
    d = Decomposition(data["subject"], data["head"], tuple(items))
    text = d.replay()
    assert code == 0 and len(text) >= 100
    assert text == c_prefix(parse_slope("(2,1,3,1)"), len(text))


def test_decompose_annotate(capsys):
    code, out, _ = run(capsys, "decompose", "--slope", "(2,1,3,1)", "--word", "aabaa", "--length", "30", "--annotate")
    text, marks = out.rstrip("\n").split("\n")
    assert code == 0
    assert marks.index("^") == 2
    assert all(text[i : i + 5] == "aabaa" for i, ch in enumerate(marks) if ch == "^")


@pytest.mark.parametrize(
    "argv, code",
    [
        (["prefix", "--slope", "(0,1)", "--length", "3"], 2),
        (["classify", "--slope", "2,(1)", "--word", "abc"], 2),
        (["classify", "--slope", "2,(1)", "--word", "ab"], 2),
        (["singular", "--slope", "(1,2)", "--family", "w", "--n", "2"], 2),
        (["singular", "--slope", "(2,1)", "--family", "u", "--n", "2", "--k", "9"], 2),
        (["occurrences", "--slope", "2,(1)", "--word", "bb"], 3),
        (["classify", "--slope", "2,(1)", "--word", "bbb"], 3),
    ],
)
def test_exit_codes(capsys, argv, code):
    try:
        got = main(argv)
    except SystemExit as exc:
        got = exc.code
    assert got == code


def test_slope_is_required(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["prefix", "--length", "3"])
    assert exc.value.code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--slope", "(2,1,3,1)", "--max-n", "5", "--prefix-len", "100000")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") == 13


def test_verify_complement_slope(capsys):
    code, out, err = run(capsys, "verify", "--slope", "(1,2)", "--max-n", "4", "--only", "factor-sets", "occurrences")
    assert code == 0
    assert "complement" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sturmocc", "prefix", "--slope", "2,(1)", "--length", "8"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "abaababa\n"
