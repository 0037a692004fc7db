import json

import pytest

import qaffine


def test_drinfeld_two_singletons():
    d = qaffine.drinfeld("1@0:1,1@4:1", 2)
    assert d["factored"] == ["(u - 1)(u - q^-2)", "1"]
    assert d["degrees"] == [2, 0]


def test_bad_segment_raises():
    with pytest.raises(qaffine.UsageError, match="column 5"):
        qaffine.drinfeld("1@0:0", 2)


def test_check_reports():
    [r] = qaffine.check("eq-12", n=[2], ell=[1, 2, 3])
    assert r["id"] == "eq-12" and r["pass"]
    assert "thm-7.6" in qaffine.check_ids()


def test_cli_round_trip():
    code, out, _ = qaffine.run_cli(["build", "--n", "2", "--segments", "1@0:2"])
    assert code == 0
    doc = json.loads(out)
    assert doc["hecke"]["dim"] == 1
    assert doc["quantum"]["dim"] == 3
    code, _, err = qaffine.run_cli(["check", "nope"])
    assert code == 2 and "unknown check" in err
