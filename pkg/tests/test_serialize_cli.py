import json
from fractions import Fraction as F

import pytest

from syang import cli
from syang.exactmath import Polynomial, RatFun
from syang.glmn import build_irrep, vector_rep
from syang.serialize import (
    SchemaError,
    canonical_dumps,
    content_hash,
    element_to_json,
    glmodule_from_json,
    glmodule_to_json,
    ratfun_from_json,
    ratfun_to_json,
    weight_from_json,
    weight_to_json,
    ymodule_from_json,
    ymodule_to_json,
)
from syang.superalgebra import GradingContext, straighten
from syang.weights import HighestWeight, evaluation_weight
from syang.yangian_modules import evaluation_rep, shifted_tensor

C11 = GradingContext(1, 1)
C21 = GradingContext(2, 1)


@pytest.fixture(autouse=True)
def cache(tmp_path, monkeypatch):
    monkeypatch.setenv("SYANG_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def dump(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


# -- serialization --------------------------------------------------------------


def test_canonical_dumps_is_order_independent():
    assert canonical_dumps({"b": 1, "a": [1, 2]}) == canonical_dumps({"a": [1, 2], "b": 1})
    assert content_hash({"b": 1, "a": 2}) == content_hash({"a": 2, "b": 1})


def test_round_trips():
    x = Polynomial([0, 1])
    f = RatFun(x + F(1, 3), x * x - 2)
    assert ratfun_from_json(ratfun_to_json(f)) == f
    G = build_irrep(C21, 2, [2, 0, 0])
    assert glmodule_from_json(glmodule_to_json(G)).action == G.action
    E = evaluation_rep(vector_rep(C11))
    T = shifted_tensor([E, E], [0, F(1, 2)])
    back = ymodule_from_json(json.loads(canonical_dumps(ymodule_to_json(T))))
    assert back.action == T.action and back.parity == T.parity
    L = evaluation_weight(C21, [3, 1, 2])
    assert weight_from_json(weight_to_json(L)) == L


def test_schema_errors():
    with pytest.raises(SchemaError):
        ymodule_from_json({"ctx": {"M": 1, "N": 1}})
    with pytest.raises(SchemaError):
        weight_from_json({"ctx": {"M": 1, "N": 1}, "components": ["1", "1"]})


# -- command line ---------------------------------------------------------------


def test_straighten_swap(tmp_path, capsys):
    # written by hand: the factors are deliberately out of PBW order
    elem = {"ctx": {"M": 1, "N": 1}, "terms": [{"coeff": "1", "monomial": [
        {"a": 1, "b": 2, "n": 1, "k": 1}, {"a": 2, "b": 1, "n": 1, "k": 1}]}]}
    code, out = run(capsys, "straighten", dump(tmp_path, "w.json", elem))
    assert code == 0
    expected = straighten(C11, [(1, ((1, 2, 1), (2, 1, 1)))])
    assert out == json.loads(canonical_dumps(element_to_json(expected)))
    assert len(out["terms"]) == 3


def test_straighten_ordered_and_empty(tmp_path, capsys):
    x = straighten(C21, [(F(2, 3), ((3, 1, 1), (1, 2, 2)))])
    doc = element_to_json(x)
    code, out = run(capsys, "straighten", dump(tmp_path, "x.json", doc))
    assert code == 0 and out == json.loads(canonical_dumps(doc))
    code, out = run(capsys, "straighten", dump(tmp_path, "z.json", {"ctx": {"M": 1, "N": 1}, "terms": []}))
    assert code == 0 and out["terms"] == []


def test_module_pipeline(tmp_path, capsys):
    code, V = run(capsys, "eval-rep", "--ctx", "1,1")
    assert code == 0 and V["dim"] == 2
    f = dump(tmp_path, "v.json", V)
    code, T = run(capsys, "tensor", "--ctx", "1,1", "--alphas", "0,1/2", f, f)
    assert code == 0 and T["dim"] == 4
    t = dump(tmp_path, "t.json", T)
    code, hw = run(capsys, "hw", t)
    assert code == 0
    code, irr = run(capsys, "irrep", t)
    assert code == 0
    code, rep = run(capsys, "verify", "relations", "--ctx", "1,1", t)
    assert code == 0


def test_corrupted_module_fails_verification(tmp_path, capsys):
    code, V = run(capsys, "eval-rep", "--ctx", "1,1")
    ent = V["action"]["1,2"]["entries"][0]
    ent[2]["num"]["coeffs"] = [str(2 * F(c)) for c in ent[2]["num"]["coeffs"]]
    code, rep = run(capsys, "verify", "relations", "--ctx", "1,1", dump(tmp_path, "bad.json", V))
    assert code == 1


def test_check_fd_exit_codes(tmp_path, capsys):
    code, out = run(capsys, "check-fd", "--ctx", "2,1", "--mu", "3,1,-2")
    assert code == 0 and out["verdict"]["status"] == "finite-dimensional"
    code, out = run(capsys, "check-fd", "--ctx", "2,1", "--mu", "1,3,0")
    assert code == 0 and out["verdict"]["status"] == "not-finite-dimensional"
    assert out["verdict"]["witness"]["a"] == 1
    x = Polynomial([0, 1])
    lam1 = RatFun(x * x + 2, x * x + 1)
    L = HighestWeight(C21, (lam1, RatFun(1), RatFun(-1)))
    code, out = run(capsys, "check-fd", dump(tmp_path, "w.json", weight_to_json(L)))
    assert code == 3


def test_input_errors(tmp_path, capsys):
    assert cli.main(["straighten", str(tmp_path / "missing.json")]) == 2
    assert cli.main(["tensor", "--ctx", "1,1", "--alphas", "1,0"]) == 2
    assert cli.main(["check-fd", "--ctx", "x,y", "--mu", "1,0"]) == 2
    assert cli.main(["no-such-command"]) == 2
    bad = dump(tmp_path, "bad.json", {"hello": 1})
    assert cli.main(["hw", bad]) == 2


def test_induced_command(capsys):
    code, out = run(capsys, "induced", "--ctx", "1,1", "--mu", "1,0", "--cutoff", "3")
    assert code == 0
    assert out["status"] in ("stabilized", "experimental-unstabilized")
    assert out["experimental"] is True


def test_verify_suites(capsys):
    code, out = run(capsys, "verify", "hopf", "--ctx", "1,1")
    assert code == 0 and out["passed"]
    code, out = run(capsys, "verify", "pbw", "--ctx", "1,1", "--level-max", "2")
    assert code == 0 and out["passed"]


def test_cache_determinism_and_cross_check(cache, capsys):
    argv = ["check-fd", "--ctx", "2,1", "--mu", "2,0,1"]
    c1, o1 = run(capsys, *argv)
    entries = list(cache.glob("*.json"))
    assert len(entries) == 1
    record = json.loads(entries[0].read_text())
    assert record["cache_key"] == entries[0].stem
    assert set(record) >= {"manifest", "outputs", "exit_code", "timings_ms", "kernel_version"}
    c2, o2 = run(capsys, *argv)
    assert (c1, o1) == (c2, o2)
    c3, o3 = run(capsys, *argv, "--no-cache")
    assert (c3, o3) == (c1, o1)
    record["outputs"]["verdict"]["status"] = "tampered"
    entries[0].write_text(json.dumps(record))
    c4, _ = run(capsys, *argv, "--no-cache")
    assert c4 == 1


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "sub" / "v.json"
    assert cli.main(["eval-rep", "--ctx", "1,1", "--out", str(target)]) == 0
    assert json.loads(target.read_text())["dim"] == 2
