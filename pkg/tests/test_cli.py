import io
import json

import pytest

from unipotent_atlas.classical import ClassRecord
from unipotent_atlas.cli import main
from unipotent_atlas.lemmas import LemmaReport
from unipotent_atlas.quartic import GaussReport, RootOfUnity4
from unipotent_atlas.spin import TwistReport
from unipotent_atlas.symbols import SymbolRecord
from unipotent_atlas.zeta import ZetaQuery


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def rows(text):
    return [json.loads(line) for line in text.splitlines()]


def test_classes():
    code, out = run("classes", "--family", "sp", "--n", "2")
    assert code == 0
    recs = [ClassRecord.from_json(r) for r in rows(out)]
    assert len(recs) == 4
    code, out = run("classes", "--family", "sp", "--n", "1", "--format", "tsv")
    assert code == 0 and len(out.splitlines()) == 3
    assert out.splitlines()[0].split("\t")[0] == "partition"


@pytest.mark.parametrize("argv", [
    ("classes", "--family", "so", "--n", "0"),
    ("classes", "--family", "e8", "--n", "2"),
    ("classes", "--family", "sp"),
    ("spin", "--parts", "2,4"),
    ("spin", "--parts", "1,3,5", "--flips", "1"),
    ("spin", "--parts", "1,x"),
    ("spin", "--parts", "1,3,5,7", "--flips", "100", "--half-spin"),
    ("symbols", "--k", "13"),
    ("zeta", "--family", "sp", "--n", "4", "--p", "3", "--a", "1"),
    ("zeta", "--family", "so", "--n", "2", "--p", "9"),
    ("gauss", "--p", "4"),
    ("verify", "--suite", "bogus"),
    ("frobnicate",),
    (),
])
def test_usage_errors_exit_2(argv, capsys):
    code, out = run(*argv)
    assert code == 2 and out == ""
    assert "usage error" in capsys.readouterr().err


def test_spin():
    code, out = run("spin", "--parts", "1,3,5,7", "--flips", "100", "--family", "d")
    assert code == 0
    (row,) = rows(out)
    assert row["well_chosen"] and not row["inner"] and row["case"] == "b"
    TwistReport.from_json(row)
    code, out = run("spin", "--parts", "1,3", "--flips", "0")
    assert code == 0 and rows(out)[0]["inner"]


def test_symbols():
    code, out = run("symbols", "--k", "2")
    assert code == 0
    data = rows(out)
    assert data[-1] == {"parity_counts": [2, 2]}
    assert [SymbolRecord.from_json(r).m for r in data[:-1]] == [3, 0, 0, 1]
    code, out = run("symbols", "--k", "1", "--format", "tsv")
    assert code == 0 and len(out.splitlines()) == 4


def test_zeta():
    code, out = run("zeta", "--family", "sp", "--n", "3", "--p", "3", "--a", "1", "--oracle")
    assert code == 0
    (row,) = rows(out)
    assert (row["zeta_prime"], row["survivors"], row["pass"]) == ("j", ["j"], True)
    assert ZetaQuery.from_json(row).k == 2
    assert all(RootOfUnity4.parse(t["zeta"]) for t in row["terms"])
    code, out = run("zeta", "--family", "so", "--n", "2", "--p", "5", "--a", "1")
    assert code == 0 and rows(out)[0]["zeta_prime"] == "1"


def test_gauss():
    code, out = run("gauss", "--p", "13")
    assert code == 0
    rep = GaussReport.from_json(rows(out)[0])
    assert rep.verdict == "real-positive"
    code, out = run("gauss", "--p", "3", "--s", "2", "--format", "tsv")
    assert code == 0 and "matches_law" in out


def test_verify():
    code, out = run("verify", "--suite", "exceptional")
    assert code == 0
    reports = [LemmaReport.from_json(r) for r in rows(out)]
    assert [r.lemma_id for r in reports] == ["comps-E6", "comps-E7-a5", "comps-E7-abelian"]


def test_verify_failure_exits_1(monkeypatch):
    from unipotent_atlas import lemmas

    def broken():
        return LemmaReport("broken", 1, counterexamples=[{"x": 1}])

    monkeypatch.setitem(lemmas.SUITES, "groups", (broken,))
    code, out = run("verify", "--suite", "groups")
    assert code == 1 and rows(out)[0]["verdict"] == "fail"


def test_output_is_deterministic():
    assert run("classes", "--family", "so", "--n", "9") == run("classes", "--family", "so", "--n", "9")
