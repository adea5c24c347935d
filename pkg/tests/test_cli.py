import json
import subprocess
import sys

import pytest

from spanconfig import cli
from spanconfig import encoding as enc
from spanconfig import linalg as la
from spanconfig.combinat import Composition, OrderedSetPartition, SetSequence
from spanconfig.worked_examples import A1

ALPHA1 = "2,2,1,2"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def example_json(tmp_path):
    p = tmp_path / "a1.json"
    p.write_text(json.dumps({"alpha": [2, 2, 1, 2], "k": 4, "matrix": enc.matrix_to_json(A1)}))
    return str(p)


def test_mixed_reduce_example(capsys, example_json):
    code, out, _ = run(capsys, "mixed-reduce", "--input", example_json)
    assert code == 0
    assert out.splitlines()[0] == "seq 24|14|3|13@k=4"
    assert out.splitlines()[1] == "covering true"


def test_mixed_reduce_json_round_trip(capsys, example_json):
    code, out, _ = run(capsys, "mixed-reduce", "--input", example_json, "--format", "json")
    assert code == 0
    r = enc.mixed_result_from_json(json.loads(out))
    assert r.seq == SetSequence.from_sets([(2, 4), (1, 4), (3,), (1, 3)], 4)
    assert r.product() == A1
    assert enc.mixed_result_to_json(r) == json.loads(out)


def test_mixed_reduce_csv_input(capsys, tmp_path):
    p = tmp_path / "a.csv"
    p.write_text(enc.matrix_to_csv(A1))
    code, out, _ = run(capsys, "mixed-reduce", "--input", str(p), "--alpha", ALPHA1, "--k", "4", "--format", "csv")
    assert code == 0
    assert enc.matrix_from_csv(out) == la.mixed_reduce(la.BlockMatrix(A1, Composition((2, 2, 1, 2), 4))).b


def test_paving_outputs(capsys):
    assert run(capsys, "paving", "--alpha", "1,1", "--k", "2", "--emit", "poincare")[1] == "1 + q\n"
    assert run(capsys, "paving", "--alpha", "1,1", "--k", "2", "--emit", "betti")[1] == "1 0 1\n"
    code, out, _ = run(capsys, "paving", "--alpha", "1,1", "--k", "2", "--emit", "csv")
    assert out.splitlines()[0] == "seq,covering,dim,codim,stars_pm,stars_u"
    assert len(out.splitlines()) == 5
    code, out, _ = run(capsys, "paving", "--alpha", "1,1", "--k", "2", "--format", "json")
    cells = json.loads(out)["cells"]
    assert sorted(c["dim"] for c in cells) == [0, 1, 1, 2]
    for c in cells:
        enc.parse_set_sequence(c["seq"])


def test_combinatorics_commands(capsys):
    assert run(capsys, "code", "--partition", "34|1|2")[1] == "(1,0,0,0)\n"
    assert run(capsys, "iota", "--word", "(2,0,3,1,0,0,2,1,0)", "--k", "4")[1] == "469|18|57|23\n"
    code, out, _ = run(capsys, "enumerate-op", "--alpha", "2,1,2", "--k", "3", "--format", "json")
    obj = json.loads(out)
    assert obj["count"] == len(obj["partitions"]) == 84
    assert all(isinstance(enc.parse_partition(p), OrderedSetPartition) for p in obj["partitions"])
    assert run(capsys, "nonskip", "--alpha", "1,1", "--k", "2")[1] == "(0,0)\n(1,0)\n"
    assert run(capsys, "character", "--alpha", "1,1", "--k", "2", "--perm", "2,1")[1] == "0\n"


def test_polynomial_commands(capsys):
    assert run(capsys, "demazure", "--word", "(0,1)")[1] == "x2 + x1\n"
    code, out, _ = run(capsys, "demazure", "--word", "(0,1,2)", "--format", "json")
    f = enc.poly_from_json(json.loads(out)["poly"])
    assert f.lead() == ((0, 1, 2), 1)
    code, out, _ = run(capsys, "groebner", "--alpha", "1,1", "--k", "2", "--emit", "claimed")
    assert code == 0 and out.endswith("verified: True\n")
    assert run(capsys, "groebner", "--alpha", "1,1,1", "--k", "2", "--emit", "hilbert")[1] == "1 + 3q + 2q^2\n"
    assert run(capsys, "groebner", "--alpha", "1,1,1", "--k", "2", "--emit", "invariant-hilbert")[1] == "1 + 3q + 2q^2\n"
    code, out, _ = run(capsys, "groebner", "--alpha", "2,1", "--k", "2", "--emit", "standard-monomials", "--format", "json")
    assert json.loads(out)["count"] == 4


def test_bad_input_exits_2(capsys, tmp_path):
    assert run(capsys, "paving", "--alpha", "9", "--k", "2")[0] == 2
    assert run(capsys, "paving", "--alpha", "1,x", "--k", "2")[0] == 2
    assert run(capsys, "paving")[0] == 2
    assert run(capsys, "paving", "--alpha", "1", "--k", "2", "--emit", "nope")[0] == 2
    assert run(capsys, "code", "--partition", "12|2")[0] == 2
    assert run(capsys, "mixed-reduce", "--input", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"alpha": [2], "k": 2, "matrix": [[1, 2], [2, 4]]}')
    code, _, err = run(capsys, "mixed-reduce", "--input", str(bad))
    assert code == 2 and "error" in err
    assert run(capsys, "verify")[0] == 2


def test_max_n_bound(capsys, monkeypatch):
    assert run(capsys, "enumerate-op", "--alpha", "1,1,1", "--k", "2", "--max-n", "2")[0] == 2
    monkeypatch.setenv("SPANCONFIG_MAX_N", "2")
    assert run(capsys, "enumerate-op", "--alpha", "1,1,1", "--k", "2")[0] == 2
    assert run(capsys, "enumerate-op", "--alpha", "1,1,1", "--k", "2", "--max-n", "3")[0] == 0
    monkeypatch.setenv("SPANCONFIG_MAX_N", "3")
    assert run(capsys, "enumerate-op", "--alpha", "1,1,1", "--k", "2")[0] == 0


def test_verify_properties(capsys):
    code, out, _ = run(capsys, "verify", "--properties", "--count", "30")
    assert code == 0
    assert out.endswith("2/2 checks passed\n")


def test_verify_published_examples_reports_the_misprints(capsys):
    code, out, _ = run(capsys, "verify", "--paper-examples")
    assert code == 1
    failing = [l for l in out.splitlines() if l.startswith("FAIL")]
    assert len(failing) == 3
    assert out.endswith("36/39 checks passed\n")


def test_determinism(example_json):
    argv = [sys.executable, "-m", "spanconfig.cli", "mixed-reduce", "--input", example_json, "--format", "json"]
    a = subprocess.run(argv, capture_output=True).stdout
    b = subprocess.run(argv, capture_output=True).stdout
    assert a == b and a
    argv = [sys.executable, "-m", "spanconfig.cli", "verify", "--properties", "--count", "10", "--seed", "7"]
    assert subprocess.run(argv, capture_output=True).stdout == subprocess.run(argv, capture_output=True).stdout


def test_encoding_round_trips():
    alpha = Composition((2, 1, 2), 3)
    assert enc.parse_composition(enc.format_composition(alpha)) == alpha
    s = SetSequence.from_sets([(1, 3), (3,), (2, 3), (1,)], 3)
    assert enc.parse_set_sequence(enc.format_set_sequence(s)) == s
    big = SetSequence.from_sets([(1, 10), (3,)], 11)
    assert enc.format_set_sequence(big) == "1,10|3@k=11"
    assert enc.parse_set_sequence(enc.format_set_sequence(big)) == big
    m = la.RatMatrix([[1, "1/2"], [-3, 0]])
    assert enc.matrix_from_json(json.loads(json.dumps(enc.matrix_to_json(m)))) == m
    assert enc.matrix_to_json(m) == [["1", "1/2"], ["-3", "0"]]
    b = la.BlockMatrix(A1, Composition((2, 2, 1, 2), 4))
    assert enc.block_matrix_from_json(enc.block_matrix_to_json(b)).matrix == A1
    with pytest.raises(enc.ParseError):
        enc.parse_rat(0.5)
    with pytest.raises(enc.ParseError):
        enc.parse_composition("1,2")
