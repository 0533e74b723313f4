"""CLI behaviour: formats, exit codes, diagnostics, round-trips."""
from __future__ import annotations

import csv
import io
import json

import pytest

from dpweights.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_text(self, capsys):
        code, out, err = run(capsys, "classify", "--index", "1")
        assert code == 0 and err == ""
        assert "one-parameter series (1):" in out
        assert "sporadic (22):" in out
        assert "(2,2x+3,2x+3,4x+5)" in out
        assert "parameters non-negative, tuple ordered" in out

    def test_text_with_expansion(self, capsys):
        code, out, _ = run(capsys, "classify", "--index", "1", "--expand-bound", "10")
        assert code == 0
        assert "members with a3 <= 10" in out
        assert "(1,1,1,1,3)" in out

    def test_json_roundtrip_byte_identical(self, capsys):
        code, out, _ = run(capsys, "classify", "--index", "4", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["index"] == 4
        assert {"index", "two_parameter_series", "one_parameter_series", "sporadic"} == set(payload)
        assert json.dumps(payload, indent=2) + "\n" == out
        assert all(set(s) == {"base", "steps", "class"} for s in payload["two_parameter_series"])
        assert [1, 10, 13, 19, 39] in payload["sporadic"]

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "classify", "--index", "3", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["kind", "a0", "a1", "a2", "a3", "d", "step1", "step2"]
        kinds = {row[0] for row in rows[1:]}
        assert kinds == {"two-parameter-series", "one-parameter-series", "sporadic"}
        assert ["two-parameter-series", "1", "2", "3", "3", "6", "0:0:2:0:2", "0:0:0:2:2"] in rows

    def test_latex(self, capsys):
        code, out, _ = run(capsys, "classify", "--index", "3", "--format", "latex")
        assert code == 0
        assert r"\begin{longtable}{|c|c|}" in out
        assert r"\caption{Index 3, Two-Parameter Series}\\" in out
        assert r"\caption{Index 3, Infinite Series}\\" in out
        assert r"\caption{Index 3, Sporadic Cases}\\" in out
        assert r"$(1,2,2x+3,2y+3)$ & $2(x+y)+6$\\" in out
        assert r"$(5,7,11,13)$ & $33$\\" in out

    def test_determinism(self, capsys):
        a = run(capsys, "classify", "--index", "5", "--format", "json")
        b = run(capsys, "classify", "--index", "5", "--format", "json")
        assert a == b


class TestCheck:
    def test_accepted_quintuple(self, capsys):
        code, out, _ = run(capsys, "check", "2", "4", "5", "7", "--index", "4")
        assert code == 0
        assert "solid=true valid=true class=4 types={II}" in out
        assert "table-covered=true" in out

    def test_rejected_quintuple_exits_1(self, capsys):
        code, out, _ = run(capsys, "check", "1", "1", "2", "2", "--degree", "5")
        assert code == 1
        assert "accepted=false" in out
        assert "a2a3:FAIL" in out

    def test_covered_edge_note(self, capsys):
        code, out, _ = run(capsys, "check", "6", "7", "9", "10", "--degree", "27")
        assert code == 0
        assert "admitted as a covered contained edge" in out

    def test_inconsistent_index_is_malformed(self, capsys):
        code, _, err = run(capsys, "check", "1", "2", "3", "5", "--index", "9")
        assert code == 2
        assert err.startswith("ERROR:")

    def test_requires_index_or_degree(self, capsys):
        code, _, err = run(capsys, "check", "1", "2", "3", "5")
        assert code == 2
        assert err.startswith("ERROR:")


class TestExpand:
    SERIES = '{"base": [1, 1, 2, 3, 4], "steps": [[0, 0, 0, 2, 2]], "class": "class2"}'

    def test_members(self, capsys):
        code, out, _ = run(capsys, "expand", "--series", self.SERIES, "--bound", "9")
        assert code == 0
        assert out.splitlines() == ["(1,1,2,3,4)", "(1,1,2,5,6)", "(1,1,2,7,8)", "(1,1,2,9,10)"]

    def test_malformed_json(self, capsys):
        code, _, err = run(capsys, "expand", "--series", "{oops", "--bound", "5")
        assert code == 2
        assert err.startswith("ERROR:")

    def test_malformed_payload(self, capsys):
        code, _, err = run(capsys, "expand", "--series", '{"base": [1,2,3]}', "--bound", "5")
        assert code == 2
        assert err.startswith("ERROR:")


class TestVerify:
    def test_match(self, capsys):
        code, out, _ = run(capsys, "verify", "--index", "3", "--bound", "40")
        assert code == 0
        assert out.splitlines()[0] == "OK"


class TestObstructions:
    def test_survey(self, capsys):
        code, out, _ = run(capsys, "obstructions", "--index", "1", "--bound", "10")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "quintuple  K^2  N  K^2*N  gmsy  spotti"
        assert any(line.startswith("(1,1,1,1,3)  3  1  3") for line in lines)


class TestArgErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            (),
            ("classify",),
            ("classify", "--index", "zero"),
            ("classify", "--index", "-2"),
            ("classify", "--index", "1", "--format", "yaml"),
            ("frobnicate",),
        ],
    )
    def test_exit_2(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2
        assert err.startswith("ERROR:")
