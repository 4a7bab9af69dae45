import json
import subprocess
import sys

import pytest

import scx.payoff
from conftest import FIXTURE_DIR
from scx.cli import RunConfig, main, render, run
from scx.documents import load_complex, load_game, load_scheme
from scx.errors import InputError
from scx.matroid import is_matroid

FULL = ["full2", "full3", "full4", "full5"]
ALL = FULL + ["two-facet", "fig-b", "chain3", "u23", "u24", "u35"]
MATROIDS = set(FULL) | {"u23", "u24", "u35"}
ORDER_DEPENDENT = {"chain3", "u35"}


def fx(name):
    return str(FIXTURE_DIR / name)


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def table():
    rows = []
    for n in ALL:
        full = n in FULL
        rows += [
            (n, ["complex", "info", fx(f"{n}.json")], 0),
            (n, ["dcoeff", fx(f"{n}.json")], 0),
            (n, ["payoff", "--axiom", "simplicial", fx(f"{n}-cardinality.json")], 0),
            (n, ["payoff", "--axiom", "traditional", fx(f"{n}-cardinality.json")], 0 if full else 2),
            (n, ["solve", "--axiom", "simplicial", fx(f"{n}.json")], 0),
            (n, ["matroid", "check", fx(f"{n}.json")], 0 if n in MATROIDS else 1),
            (n, ["matroid", "shelling", fx(f"{n}.json")], 0 if n in MATROIDS else 2),
            (n, ["oracle", "d", fx(f"{n}.json")], 0),
            (n, ["compare-formulas", fx(f"{n}-cardinality.json")], 0),
            (n, ["oracle", "orders", "--orders", "6", fx(f"{n}-cardinality.json")],
             1 if n in ORDER_DEPENDENT else 0),
        ]
    return rows


@pytest.mark.parametrize("name, argv, code", table(), ids=lambda x: x if isinstance(x, str) else None)
def test_exit_code_table(capsys, name, argv, code):
    got, out, err = call(capsys, *argv)
    assert got == code, err
    if code == 0:
        json.loads(out)
    if code in (2, 3):
        assert err.startswith("scx: ") and len(err.strip().splitlines()) == 1


class TestExamples:
    def test_simplicial_payoff(self, capsys):
        code, out, _ = call(capsys, "payoff", "--axiom", "simplicial", fx("chain3-cardinality.json"))
        assert code == 0
        rec = json.loads(out)
        assert rec["axiom"] == "simplicial" and rec["value"] == 5.0

    def test_zero_scheme_check(self, capsys):
        code, out, _ = call(capsys, "check", "--scheme", fx("zero-full3.json"), "--axiom", "traditional",
                            fx("full3.json"))
        assert code == 1
        rec = json.loads(out)
        assert rec["residuals"]["1,2,3"] == -1
        assert rec["worst_face"] == "1,2,3"
        assert rec["carrier_check"] == {"pass": False, "witness": "1,2,3"}

    def test_matroid_witness(self, capsys):
        code, out, _ = call(capsys, "matroid", "check", fx("fig-b.json"))
        assert code == 1
        assert json.loads(out)["witness"] == {"A": [5], "B": [1, 2]}

    def test_shelling_output(self, capsys):
        code, out, _ = call(capsys, "matroid", "shelling", fx("u23.json"))
        rec = json.loads(out)
        assert code == 0 and rec["verified"] and rec["rank"] == 2
        assert rec["order"] == [[1, 2], [1, 3], [2, 3]]

    def test_dcoeff(self, capsys):
        _, out, _ = call(capsys, "dcoeff", fx("two-facet.json"))
        assert json.loads(out) == {"3": -1, "1,2,3": 1, "3,4,5": 1}

    def test_probabilistic_flags(self, capsys):
        code, out, _ = call(capsys, "payoff", "--axiom", "probabilistic", "--coeffs", fx("signed-two-facet.json"),
                            fx("two-facet-cardinality.json"))
        rec = json.loads(out)
        assert code == 0 and rec["value"] == 3
        assert rec["flags"] == {"normalized": True, "nonnegative": False}

    def test_compare_chain3(self, capsys):
        _, out, _ = call(capsys, "compare-formulas", "--orders", "5", fx("chain3-cardinality.json"))
        rec = json.loads(out)
        assert (rec["closed"], rec["alternating"], rec["max_pairwise_delta"]) == (5, 6, 2)
        assert len(rec["sequential"]) == 6

    def test_oracle_orders_chain3(self, capsys):
        code, out, _ = call(capsys, "oracle", "orders", "--orders", "6", fx("chain3-cardinality.json"))
        rec = json.loads(out)
        assert code == 1 and rec["max_abs_deviation"] == 1
        assert sorted(set(rec["values"])) == [4, 5]

    def test_text_format(self, capsys):
        code, out, _ = call(capsys, "complex", "info", "--format", "text", fx("two-facet.json"))
        assert code == 0
        assert "num_faces" in out and "14" in out


class TestSolveRoundTrip:
    def test_scheme_file(self, capsys, tmp_path):
        path = tmp_path / "s.json"
        code, out, err = call(capsys, "solve", "--axiom", "simplicial", fx("two-facet.json"), "-o", str(path))
        assert code == 0 and out == ""
        assert json.loads(err)["feasible"] is True
        assert load_scheme(path).complex == load_complex(fx("two-facet.json"))
        code, out, _ = call(capsys, "check", "--scheme", str(path), "--axiom", "simplicial", "--tol", "1e-8")
        assert code == 0
        assert json.loads(out)["carrier_check"]["pass"]
        code, _, _ = call(capsys, "oracle", "characterization", "--scheme", str(path), "--axiom", "simplicial",
                          "--trials", "20", "--tol", "1e-8", fx("two-facet.json"))
        assert code == 0

    def test_values(self, capsys, tmp_path):
        path = tmp_path / "s.json"
        call(capsys, "solve", "--axiom", "traditional", fx("full3.json"), "-o", str(path))
        code, out, _ = call(capsys, "values", "--scheme", str(path), fx("full3-cardinality.json"))
        rec = json.loads(out)
        assert code == 0 and abs(rec["total"] - 3) <= 1e-9 and len(rec["values"]) == 3

    def test_probabilistic_solve(self, capsys, tmp_path):
        path = tmp_path / "s.json"
        code, _, _ = call(capsys, "solve", "--axiom", "probabilistic", "--coeffs", fx("uniform-two-facet.json"),
                          fx("two-facet.json"), "-o", str(path))
        assert code == 0
        code, _, _ = call(capsys, "check", "--scheme", str(path), "--axiom", "probabilistic",
                          "--coeffs", fx("uniform-two-facet.json"))
        assert code == 0


class TestErrors:
    def test_missing_file(self, capsys, tmp_path):
        code, _, err = call(capsys, "dcoeff", str(tmp_path / "nope.json"))
        assert code == 2 and "nope.json" in err

    def test_bad_face_in_game(self, capsys, tmp_path):
        path = tmp_path / "g.json"
        path.write_text(json.dumps({"complex": fx("two-facet.json"), "values": {"1,4": 1}}))
        code, _, err = call(capsys, "payoff", "--axiom", "simplicial", str(path))
        assert code == 2 and "1,4" in err

    def test_scheme_outside_link(self, capsys, tmp_path):
        path = tmp_path / "s.json"
        path.write_text(json.dumps({"complex": fx("two-facet.json"), "p": {"1": {"4": 0.5}}}))
        code, _, err = call(capsys, "values", "--scheme", str(path), fx("two-facet-cardinality.json"))
        assert code == 2 and "link of player 1" in err

    def test_generic_needs_coeffs(self, capsys):
        code, _, err = call(capsys, "payoff", "--axiom", "generic", fx("two-facet-cardinality.json"))
        assert code == 2 and "--coeffs" in err

    def test_probabilistic_support(self, capsys, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(json.dumps({"3": 1.0}))
        code, _, _ = call(capsys, "payoff", "--axiom", "probabilistic", "--coeffs", str(path),
                          fx("two-facet-cardinality.json"))
        assert code == 2

    def test_cap_override(self, capsys, monkeypatch):
        monkeypatch.setattr(scx.payoff, "MAX_FACETS", scx.payoff.MAX_FACETS)
        monkeypatch.setenv("SCX_FACET_CAP", "2")
        code, _, err = call(capsys, "dcoeff", fx("chain3.json"))
        assert code == 3
        assert "warning" in err

    def test_bad_cap_value(self, capsys, monkeypatch):
        monkeypatch.setenv("SCX_FACET_CAP", "many")
        code, _, _ = call(capsys, "dcoeff", fx("chain3.json"))
        assert code == 2

    def test_config_validation(self):
        with pytest.raises(InputError):
            RunConfig("check", tol=0).validate()
        assert run(RunConfig("check", tol=-1)) == 2


def test_render_text_flattens():
    assert render({"a": {"b": 1}, "c": [1, 2]}, "text").splitlines()[0].startswith("a.b")


def test_manifest_agrees_with_checker():
    manifest = json.loads((FIXTURE_DIR / "manifest.json").read_text())
    assert {m["name"] for m in manifest} == set(ALL)
    for entry in manifest:
        check = is_matroid(load_complex(FIXTURE_DIR / entry["complex"]))
        assert entry["is_matroid"] == check.is_matroid
        for g in entry["games"]:
            assert load_game(FIXTURE_DIR / g).complex == load_complex(FIXTURE_DIR / entry["complex"])
        if entry["matroid_verdict_asserted"]:
            assert entry["is_matroid"] == (entry["name"] in MATROIDS)


def test_fixtures_are_reproducible(tmp_path):
    tool = FIXTURE_DIR.parent / "tools" / "make_fixtures.py"
    subprocess.run([sys.executable, str(tool), str(tmp_path)], check=True)
    for path in FIXTURE_DIR.glob("*.json"):
        assert (tmp_path / path.name).read_text() == path.read_text(), path.name


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "scx", "dcoeff", fx("full3.json")],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out) == {"1,2,3": 1}
