import json

import pytest

from totrefl import serialize as io
from totrefl.algebra import Ring
from totrefl.cli import main
from totrefl.field import QQ
from totrefl.linmat import random_invertible
from totrefl.seeding import make_rng
from totrefl.tuples import random_tuple


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(path, doc):
    path.write_text(io.dumps(doc))
    return path


def test_zerodivisor(capsys):
    assert run(capsys, "zerodivisor", "x+y1") == (0, "x-y1\n", "")
    code, out, _ = run(capsys, "zerodivisor", "y1+y2")
    assert code == 1 and out == "not exact\n"
    code, _, err = run(capsys, "zerodivisor", "1+x")
    assert code == 2 and "error" in err
    assert run(capsys, "zerodivisor", "x+2*y1", "--field", "GF(5)")[1] == "x+3*y1\n"


def test_random_is_byte_identical(capsys):
    a = run(capsys, "random", "--n", 3, "--i", 3, "--field", "GF(5)", "--seed", 4, "--count", 2)
    b = run(capsys, "random", "--n", 3, "--i", 3, "--field", "GF(5)", "--seed", 4, "--count", 2)
    assert a == b and a[0] == 0
    docs = json.loads(a[1])["tuples"]
    assert io.tuple_from_json(docs[0]) == random_tuple(Ring(3, io.FieldSpec(5)), 3, 4, 3, 0)


def test_check_scramble_normalize_pipeline(tmp_path, capsys):
    t = random_tuple(Ring(2), 2, 11)
    f = write(tmp_path / "t.json", io.tuple_to_json(t))
    code, out, _ = run(capsys, "check", f, "--oracle", "--depth", 3)
    assert code == 0 and json.loads(out)["oracle_agrees"]
    code, out, _ = run(capsys, "scramble", f, "--seed", 3)
    assert code == 0
    s = write(tmp_path / "s.json", json.loads(out))
    code, out, _ = run(capsys, "normalize", s, "--factors")
    assert code == 0
    doc = json.loads(out)
    n = write(tmp_path / "n.json", doc["tuple"])
    code, out, _ = run(capsys, "conjugate", f, n)
    assert code == 0 and json.loads(out)["status"] == "yes"


def test_conjugate_exit_codes(tmp_path, capsys):
    R = Ring(2)
    a = random_tuple(R, 2, 0)
    b = a.conjugate(random_invertible(QQ, 2, make_rng(0, "p")))
    c = random_tuple(R, 2, 1)
    fa, fb, fc = (write(tmp_path / f"{k}.json", io.tuple_to_json(t)) for k, t in zip("abc", (a, b, c)))
    assert run(capsys, "conjugate", fa, fb)[0] == 0
    assert run(capsys, "conjugate", fa, fc)[0] == 1
    d = write(tmp_path / "d.json", io.tuple_to_json(random_tuple(R, 3, 0)))
    assert run(capsys, "conjugate", fa, d)[0] == 2


def test_conjugate_inconclusive(tmp_path, capsys):
    # (0, 0) and (J_2(0), 0) over F_2 share every word invariant and their
    # intertwiners are all singular; budget 1 leaves only the random search
    a = {"field": "GF(2)", "i": 2, "n": 2, "B": [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]]}
    b = {"field": "GF(2)", "i": 2, "n": 2, "B": [[["0", "1"], ["0", "0"]], [["0", "0"], ["0", "0"]]]}
    fa, fb = write(tmp_path / "a.json", a), write(tmp_path / "b.json", b)
    code, out, _ = run(capsys, "conjugate", fa, fb, "--budget", 1)
    doc = json.loads(out)
    assert code == 3 and doc["certainty"] == "high_confidence"
    assert run(capsys, "conjugate", fa, fb)[0] == 1


def test_raw_check(tmp_path, capsys):
    doc = {"schema_version": "1", "field": "Q", "i": 2, "n": 1,
           "X": [["0"]], "Y": [[["1"]], [["0"]]]}
    f = write(tmp_path / "raw.json", doc)
    code, out, _ = run(capsys, "check", f, "--raw")
    assert code == 1 and json.loads(out)["passed"] is False


def test_normalize_rejects(tmp_path, capsys):
    doc = {"schema_version": "1", "field": "Q", "i": 2, "rows": 1, "cols": 1, "entries": [["y1"]]}
    code, out, _ = run(capsys, "normalize", write(tmp_path / "m.json", doc))
    assert code == 1 and json.loads(out)["error"] == "NotNormalizable"


@pytest.mark.parametrize("doc", [
    {"field": "Q", "i": 2, "n": 1, "B": [[["1"]], [["0"]]], "schema_version": "2"},
    {"field": "Q", "i": 2, "n": 1, "B": [[[1]], [["0"]]]},
    {"field": "GF(4)", "i": 2, "n": 1, "B": [[["1"]], [["0"]]]},
    {"field": "GF(5)", "i": 2, "n": 1, "B": [[["7"]], [["0"]]]},
    {"field": "Q", "i": 2, "n": 2, "B": [[["1"]], [["0"]]]},
    {"field": "Q", "i": 1, "n": 1, "B": [[["1"]]]},
    {"field": "Q", "n": 1, "B": []},
])
def test_schema_errors_exit_2(tmp_path, capsys, doc):
    code, _, err = run(capsys, "check", write(tmp_path / "bad.json", doc))
    assert code == 2 and err.startswith("error")


def test_invalid_json_and_missing_file(tmp_path, capsys):
    bad = tmp_path / "x.json"
    bad.write_text("{")
    assert run(capsys, "check", bad)[0] == 2
    assert run(capsys, "check", tmp_path / "missing.json")[0] == 2


def test_family(tmp_path, capsys):
    code, out, _ = run(capsys, "family", "--n", 2, "--lambdas", "0,1,2", "--field", "GF(3)")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert all(m["indecomposability"]["status"] == "indecomposable" for m in doc["members"])
    assert run(capsys, "family", "--n", 2, "--lambdas", "1,1")[0] == 2
