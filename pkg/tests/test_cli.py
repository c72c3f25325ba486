import io
import json
import shutil
import subprocess
import sys

import pytest

from curvebraids.cli import main
from curvebraids.fixtures import FIXTURE_DIR


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def cli(*argv, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "curvebraids.cli", *argv],
        input=stdin,
        capture_output=True,
        text=True,
    )


class TestBraid:
    def test_info(self, capsys):
        code, out, _ = run(capsys, "braid", "info", "B2: 1 1 1", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["exponent_sum"] == 3 and data["components"] == 1

    def test_equal(self, capsys):
        assert run(capsys, "braid", "equal", "B3: 1 2 1", "B3: 2 1 2")[1].strip() == "equal: true"
        assert run(capsys, "braid", "equal", "B3: 1 2", "B3: 2 1")[1].strip() == "equal: false"

    def test_act(self, capsys):
        assert run(capsys, "braid", "act", "F2: 1", "B2: 1")[1].strip() == "F2: 1 2 -1"

    def test_bad_input(self, capsys):
        code, _, err = run(capsys, "braid", "info", "B3: 9")
        assert code == 2 and "error" in err

    def test_stdin(self, capsys, monkeypatch):
        code, out, _ = run(capsys, "braid", "info", "--json", stdin="B2: 1 1", monkeypatch=monkeypatch)
        assert code == 0 and json.loads(out)["components"] == 2


class TestBranch:
    def test_cusp(self, capsys):
        code, out, _ = run(capsys, "branch", "analyze", "cusp23", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["cascade"] == [[2, 3]]
        assert data["milnor_number"] == 2 and data["genus"] == 1

    def test_text(self, capsys):
        out = run(capsys, "branch", "analyze", "m=4; w = t^6 + t^7")[1]
        assert "cascade: [(2, 3), (2, 13)]" in out and "mu: 16" in out

    def test_validate(self, capsys):
        assert run(capsys, "branch", "analyze", "t4t6t7", "--validate")[0] == 0

    def test_invalid_branch(self, capsys):
        assert run(capsys, "branch", "analyze", "m=4; w = t^6 + t^8")[0] == 2


class TestMonodromy:
    def test_poly(self, capsys):
        code, out, _ = run(capsys, "monodromy", "poly", "w2-z2", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["battery"]["linking"] == [1] and data["battery"]["components"] == 2

    def test_param(self, capsys):
        code, out, _ = run(capsys, "monodromy", "param", "m=2; w = t^5", "--eps", "0.25")
        assert code == 0 and out.startswith("B2: 1 1 1 1 1")

    def test_pole(self, capsys):
        poly = json.dumps({"monomials": [{"zi": 1, "wj": 2, "re": "1"}, {"zi": 0, "wj": 0, "re": "-1"}]})
        assert run(capsys, "monodromy", "poly", poly)[0] == 1


class TestGroup:
    def test_example_one_pipeline(self):
        first = cli("group", "from-bands", "example1-n5", "--projective")
        assert first.returncode == 0
        second = cli("group", "abelianize", stdin=first.stdout)
        assert second.stdout.strip() == "Z/5"

    def test_json_pipeline(self):
        first = cli("group", "from-bands", "example3-quartic-corrected", "--projective", "--json")
        simplified = cli("group", "simplify", "--json", stdin=first.stdout)
        order = cli("group", "order", "--json", stdin=simplified.stdout)
        assert json.loads(order.stdout)["order"] == 12

    def test_order_exceeded(self, capsys):
        code, out, _ = run(capsys, "group", "order", "gens: 2; rel: x1 x1; rel: x2 x2 x2", "--max-cosets", "500")
        assert code == 3 and "exceeded" in out

    def test_homs(self, capsys):
        code, out, _ = run(capsys, "group", "homs", "--sym", "3", "gens: 2; rel: x1 x1; rel: x2 x2 x2")
        assert code == 0 and out.strip().endswith("12")

    def test_simplify_budget(self, capsys):
        rels = "gens: 3; rel: x1 -x2 x3 x3 x3 x2 x2 x2 x2; rel: x2 x2 x3 -x1 x3 x3 x2 x2"
        code, out, err = run(capsys, "group", "simplify", "--budget", "3", rels)
        assert code == 3 and out.startswith("gens: 3") and "budget" in err
        assert run(capsys, "group", "simplify", "gens: 2; rel: x1 -x2")[1].strip() == "gens: 1"

    def test_homs_range(self, capsys):
        assert run(capsys, "group", "homs", "--sym", "7", "gens: 1")[0] == 2

    def test_wrong_type(self, capsys):
        assert run(capsys, "group", "abelianize", "B2: 1")[0] == 2


class TestDelta2:
    def test_word(self, capsys):
        out = run(capsys, "delta2", "word", "--n", "3")[1]
        assert out.strip() == "B3: 1 2 1 2 1 2"

    def test_verify_corrected(self, capsys):
        code, out, _ = run(capsys, "delta2", "verify", "--n", "4", "--fixture", "example3-quartic-corrected")
        assert (code, out.strip()) == (0, "equal: true")

    def test_verify_literal_quartic(self, capsys):
        code, out, _ = run(capsys, "delta2", "verify", "--n", "4", "--fixture", "example3-quartic")
        assert out.strip() == "equal: true"
        assert code == 0

    def test_verify_input(self, capsys):
        assert run(capsys, "delta2", "verify", "B3: (1) (2) (1) (2) (1) (2)")[0] == 0
        assert run(capsys, "delta2", "verify", "B3: (1) (2)")[0] == 1

    def test_strand_mismatch(self, capsys):
        assert run(capsys, "delta2", "verify", "--n", "5", "--fixture", "example3-quartic")[0] == 2


class TestFixtures:
    def test_list_and_show(self, capsys):
        out = run(capsys, "fixtures", "list")[1]
        assert "example3-quartic\tbands" in out and "w2-1\tpoly" in out
        assert run(capsys, "fixtures", "show", "cusp23")[1].strip() == "m=2; w = t^3"
        assert run(capsys, "fixtures", "show", "nope")[0] == 2

    def test_selftest_all_pass(self, capsys):
        code, out, _ = run(capsys, "fixtures", "selftest")
        assert code == 0, out

    def test_corrupted_file(self, capsys, tmp_path):
        for f in FIXTURE_DIR.glob("*.json"):
            shutil.copy(f, tmp_path)
        data = json.loads((tmp_path / "bands.json").read_text())
        data["band_representations"][1]["brep"] = "B3: (1 : 7"
        (tmp_path / "bands.json").write_text(json.dumps(data))
        (tmp_path / "branches.json").write_text("{")
        code, out, _ = run(capsys, "fixtures", "selftest", "--dir", str(tmp_path))
        assert code == 1
        assert "FAIL bands.json: malformed entry 'example1-n3'" in out
        assert "FAIL branches.json:" in out
        assert "PASS w2-z2" in out

    def test_empty_dir(self, capsys, tmp_path):
        code, _, err = run(capsys, "fixtures", "selftest", "--dir", str(tmp_path))
        assert code == 2 and "no fixture files" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["branch", "analyze", "t4t6t7", "--json"],
        ["monodromy", "param", "t4t6t7", "--json"],
        ["group", "from-bands", "example2-n4", "--projective", "--json"],
        ["fixtures", "list", "--json"],
    ],
    ids=lambda a: " ".join(a[:2]),
)
def test_json_byte_identical(argv):
    a, b = cli(*argv), cli(*argv)
    assert a.returncode == 0
    assert a.stdout == b.stdout
    json.loads(a.stdout)


def test_usage(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
