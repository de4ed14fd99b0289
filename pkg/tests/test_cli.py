import json

import pytest

from nilcomm.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_dmap_text(capsys):
    rc, out, err = run(capsys, "dmap", "3,1,1")
    assert rc == 0
    assert "D(3,1,1) = (4,1)" in out
    assert "formula-r2" in out


def test_dmap_json(capsys):
    rc, out, _ = run(capsys, "dmap", "2^3,1", "--json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["lambda"] == [2, 2, 2, 1]
    assert doc["d"] == [7]
    assert doc["method"] == "formula-r1"
    assert "seed" in doc


def test_dinv_text_and_json(capsys):
    rc, out, _ = run(capsys, "dinv", "6,2")
    assert rc == 0
    assert "(3,3,1,1)" in out and "(6,2)" in out
    rc, out, _ = run(capsys, "dinv", "4,1", "--json")
    doc = json.loads(out)
    assert doc["mu"] == [4, 1]
    assert doc["size"] == len(doc["fiber"]) == 2
    assert [3, 1, 1] in doc["fiber"]
    assert doc["methods"]["formula"] + doc["methods"]["monte-carlo"] == 2


def test_dinv_guard_and_force(capsys):
    rc, out, err = run(capsys, "dinv", "18,2")
    assert rc == 2
    assert out == ""
    assert "--force" in err
    rc, out, err = run(capsys, "dinv", "6,2", "--max-n", "4")
    assert rc == 2
    rc, out, err = run(capsys, "dinv", "6,2", "--max-n", "4", "--force")
    assert rc == 0
    rc, out, err = run(capsys, "dinv", "6,2", "--max-n", "8")
    assert rc == 0


def test_sample_is_deterministic(capsys):
    rc1, out1, _ = run(capsys, "sample", "4,2", "--count", "3", "--json")
    rc2, out2, _ = run(capsys, "sample", "4,2", "--count", "3", "--json")
    assert rc1 == rc2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["lambda"] == [4, 2]
    assert len(doc["samples"]) == 3
    rc3, out3, _ = run(capsys, "sample", "4,2", "--count", "3", "--json", "--seed", "9")
    assert out3 != out1


def test_sample_dump_matrix(capsys):
    rc, out, _ = run(capsys, "sample", "3,1", "--dump-matrix")
    assert rc == 0
    assert "type" in out or "(" in out


def test_construct_squarezero(capsys):
    rc, out, _ = run(capsys, "construct", "squarezero", "3,3,1", "--rank", "3")
    assert rc == 0
    rc, out, _ = run(capsys, "construct", "squarezero", "3,3,1", "--rank", "3", "--json")
    doc = json.loads(out)
    assert doc["jordan"] == [2, 2, 2, 1]
    assert doc["square_zero"] is True and doc["commutes"] is True
    assert doc["rank"] == 3
    rc, _, err = run(capsys, "construct", "squarezero", "3,1", "--rank", "5")
    assert rc == 2


def test_construct_antidiagonal(capsys):
    rc, out, _ = run(capsys, "construct", "antidiagonal", "5", "3", "0", "1")
    assert rc == 0
    assert "predicted: (3,3,2)" in out and "case: a" in out
    rc, out, _ = run(capsys, "construct", "antidiagonal", "7", "5", "0", "2", "--json")
    doc = json.loads(out)
    assert doc["case"] == "b"
    assert doc["predicted"] == [4, 3, 3, 2]
    assert doc["jordan"] == [4, 3, 3, 2]
    assert doc["commutes"] is True


def test_construct_lemmas(capsys):
    rc, out, _ = run(capsys, "construct", "lemma-eq2", "4")
    assert rc == 0
    assert "(5,3)" in out
    rc, out, _ = run(capsys, "construct", "lemma-odd", "5", "3", "4", "--json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["jordan"] == [2, 2, 2, 2]
    assert doc["square_zero"] is True


def test_check_pair(capsys):
    rc, out, _ = run(capsys, "check", "pair", "6,2", "4,4")
    assert rc == 0
    assert "forbidden" in out
    assert "nilorder" in out
    rc, out, _ = run(capsys, "check", "pair", "4,2", "3,2,1", "--json")
    doc = json.loads(out)
    assert doc["verdict"] in ("unknown", "forbidden")


def test_verify_single_suite(capsys):
    rc, out, _ = run(capsys, "verify", "--suite", "9")
    assert rc == 0
    assert "CRITERION 9" in out and "PASS" in out


def test_explore_commands(capsys):
    rc, out, _ = run(capsys, "explore", "q1", "--mu", "7", "--r", "5")
    assert rc == 0
    rc, out, _ = run(capsys, "explore", "q2", "4,2", "--json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["holds"] is True


def test_bad_partition_is_exit_2(capsys):
    rc, _, err = run(capsys, "dmap", "3,x")
    assert rc == 2
    assert err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err
    with pytest.raises(SystemExit):
        main(["construct"])
    assert "construction" in capsys.readouterr().err
    with pytest.raises(SystemExit):
        main(["dmap"])
    assert "partition" in capsys.readouterr().err
