import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elemcalc.cli import COMMANDS, main
from elemcalc.jsonio import dumps, elemop_from_json, elemop_to_json, matrix_from_json, matrix_to_json

EXAMPLES = Path(__file__).resolve().parent.parent / "docs" / "examples"
WITH_INPUT = sorted(c for c in COMMANDS if c not in {"shift-demo", "selftest"})


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("command", WITH_INPUT)
def test_every_documented_example_runs(capsys, command):
    code, out, _ = run(capsys, command, "-i", str(EXAMPLES / f"{command}.json"))
    assert code == 0
    json.loads(out)


@pytest.mark.parametrize("command", WITH_INPUT)
def test_output_is_deterministic(capsys, command):
    path = str(EXAMPLES / f"{command}.json")
    _, first, _ = run(capsys, command, "-i", path, "--seed", "3")
    _, second, _ = run(capsys, command, "-i", path, "--seed", "3")
    assert first == second


def test_length_of_identity(capsys):
    code, out, _ = run(capsys, "length", "-i", str(EXAMPLES / "length.json"), "--json")
    assert code == 0 and out.strip() == '{"length":1}'


def test_annihilate_invertible(capsys, tmp_path):
    src = tmp_path / "inv.json"
    src.write_text(json.dumps({
        "n": 2,
        "terms": [
            {"A": [[1, 0], [0, 2]], "B": [[1, 0], [0, 1]]},
            {"A": [[1, 0], [0, 1]], "B": [[5, 0], [0, 7]]},
        ],
    }))
    code, out, _ = run(capsys, "annihilate", "-i", str(src), "--json")
    assert code == 0 and json.loads(out) == {"status": "none"}


def test_annihilate_witness_certified(capsys):
    code, out, _ = run(capsys, "annihilate", "-i", str(EXAMPLES / "annihilate.json"))
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "multiplication" and rep["composition_is_zero"]


def test_output_file(capsys, tmp_path):
    dest = tmp_path / "out.json"
    code, out, _ = run(capsys, "length", "-i", str(EXAMPLES / "length.json"), "-o", str(dest))
    assert code == 0 and out == ""
    assert json.loads(dest.read_text()) == {"length": 1}


def test_pencil_form_certified(capsys):
    code, out, _ = run(capsys, "pencil-form", "-i", str(EXAMPLES / "pencil-form.json"))
    rep = json.loads(out)
    assert code == 0 and rep["certified"] and rep["block_sizes"] == [3, 2]


def test_pencil_hypothesis_failure_exit_1(capsys, tmp_path):
    src = tmp_path / "p.json"
    src.write_text(json.dumps({"B1": [[1, 0], [0, 1]], "B2": [[0, 1], [0, 0]]}))
    code, out, _ = run(capsys, "pencil-form", "-i", str(src))
    assert code == 1 and json.loads(out)["hypothesis"] == "rank"


def test_precondition_failure_exit_1(capsys, tmp_path):
    src = tmp_path / "u.json"
    src.write_text(json.dumps({"A": [[1, 0], [0, 1]], "B": [[0, 1], [0, 0]]}))
    code, out, _ = run(capsys, "upsilon", "-i", str(src))
    assert code == 1 and "error" in json.loads(out)


def test_singular_has_no_decomposition(capsys, tmp_path):
    src = tmp_path / "d.json"
    src.write_text(json.dumps({
        "n": 2,
        "terms": [
            {"A": [[1, 0], [0, 1]], "B": [[1, 0], [0, 0]]},
            {"A": [[1, 0], [0, 2]], "B": [[0, 1], [0, 0]]},
        ],
    }))
    code, out, _ = run(capsys, "decompose-invertible", "-i", str(src))
    assert code == 1 and json.loads(out) == {"found": False}


@pytest.mark.parametrize(
    "payload",
    [
        "not json",
        '{"n": 2}',
        '{"n": 2, "terms": [{"A": [[1, 0]], "B": [[1, 0], [0, 1]]}]}',
        '{"n": 2, "terms": [{"A": [[0.5, 0], [0, 1]], "B": [[1, 0], [0, 1]]}]}',
        '{"n": true, "terms": []}',
        '{"n": 1, "terms": [{"A": [["1/0"]], "B": [[1]]}]}',
    ],
)
def test_malformed_input_exit_2(capsys, tmp_path, payload):
    src = tmp_path / "bad.json"
    src.write_text(payload)
    code, out, err = run(capsys, "length", "-i", str(src))
    assert code == 2 and out == "" and err.startswith("elemcalc:")


def test_missing_file_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "length", "-i", str(tmp_path / "missing.json"))
    assert code == 2 and err


def test_unknown_command_rejected(capsys):
    code, out, _ = run(capsys, "frobnicate")
    assert code == 2 and out == ""


def test_bad_bounds_rejected(capsys):
    assert run(capsys, "selftest", "--trials", "0")[0] == 2
    assert run(capsys, "annihilate", "--max-chain", "1", "-i", str(EXAMPLES / "length.json"))[0] == 2


def test_shift_demo(capsys):
    code, out, _ = run(capsys, "shift-demo", "--max-index", "16")
    rep = json.loads(out)
    assert code == 0 and rep["relations"]["N"] == 16
    assert all(v["identically_zero"] for v in rep["truncated_pencil"].values())


def test_selftest_spec_run(capsys):
    code, out, _ = run(capsys, "selftest", "--n", "3", "--trials", "50", "--seed", "7", "--json")
    rep = json.loads(out)
    assert code == 0
    assert all(s["failures"] == 0 and s["trials"] == 50 for s in rep["suites"].values())


def test_selftest_deterministic(capsys):
    first = run(capsys, "selftest", "--n", "2", "--trials", "5", "--seed", "1")
    second = run(capsys, "selftest", "--n", "2", "--trials", "5", "--seed", "1")
    assert first == second


# -- schema round trip -----------------------------------------------------------

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def operator_json(draw):
    n = draw(st.integers(1, 3))
    k = draw(st.integers(0, 3))

    def mat():
        rows = draw(st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n))
        return [[str(x) for x in r] for r in rows]

    return {"n": n, "terms": [{"A": mat(), "B": mat()} for _ in range(k)]}


@settings(max_examples=60, deadline=None)
@given(operator_json())
def test_schema_round_trip(obj):
    phi = elemop_from_json(obj)
    again = elemop_to_json(phi)
    assert again == obj
    assert elemop_from_json(json.loads(dumps(again))) == phi


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(rationals, min_size=2, max_size=2), min_size=1, max_size=3))
def test_matrix_round_trip(rows):
    text = [[str(x) for x in r] for r in rows]
    assert matrix_to_json(matrix_from_json(text)) == text
