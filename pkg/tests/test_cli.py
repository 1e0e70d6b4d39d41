import io
import json
import math

import pytest

from conftest import FIXTURES
from resolv.cli import run
from resolv.resolution import load_resolution


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


@pytest.fixture
def c1(tmp_path):
    path = tmp_path / "c1.json"
    code, _ = invoke("clifford", "--m", "1", "--out", str(path))
    assert code == 0
    return str(path)


def test_clifford_writes_golden_file(c1):
    got = open(c1, encoding="utf-8").read()
    want = (FIXTURES / "clifford-m1.json").read_text(encoding="utf-8")
    assert got == want


def test_verify_passes(c1):
    code, out = invoke("verify", c1)
    assert code == 0
    assert "surjective: ✓" in out
    assert "result: PASS" in out
    assert "       2       3      3  ✓" in out
    assert "       3      11     11  ✓" in out
    assert "       4      27     27  ✓" in out


def test_verify_json(c1):
    code, out = invoke("verify", c1, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert doc["exactness"][1] == {
        "degree": 2,
        "kernel_dim": 3,
        "ideal_dim": 3,
        "equal": True,
    }


def test_verify_failure_exit_code():
    code, out = invoke("verify", str(FIXTURES / "corrupted-relation.json"))
    assert code == 1
    assert "result: FAIL" in out
    assert "relations vanish: ✗" in out


def test_verify_schema_error_exit_code(capsys):
    code, _ = invoke("verify", str(FIXTURES / "corrupted-degrees.json"))
    assert code == 2
    assert "degrees" in capsys.readouterr().err


def test_missing_file_exit_code():
    code, _ = invoke("verify", "no-such-file.json")
    assert code == 2


def test_resource_cap_exit_code(c1):
    code, _ = invoke("verify", c1, "--degree", "25", "--max-dim", "1000")
    assert code == 3


def test_score_json(c1):
    code, out = invoke("score", c1, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["raw_params"] == 21
    assert doc["bogoliubov_dim"] == 1
    assert doc["score"] == 20
    assert abs(doc["s_numbers"] - math.log(24)) < 1e-9


def test_entropy_text(c1):
    code, out = invoke("entropy", c1)
    assert code == 0
    assert "s_numbers: 3.178053830" in out


def test_params(c1):
    code, out = invoke("params", c1)
    assert code == 0
    assert "21 complex (42 real)" in out


def test_bogdim(c1):
    code, out = invoke("bogdim", c1)
    assert code == 0
    assert "bogoliubov dimension: 1" in out


def test_kernel(c1):
    code, out = invoke("kernel", c1, "--degree", "2")
    assert code == 0
    assert "dimension 3" in out
    code, doc_out = invoke("kernel", c1, "--degree", "2", "--format", "json")
    doc = json.loads(doc_out)
    assert doc["dimension"] == 3
    assert len(doc["basis"]) == 3


def test_catalog_command(tmp_path):
    out_dir = tmp_path / "cat"
    code, _ = invoke("catalog", "--out", str(out_dir))
    assert code == 0
    index = json.load(open(out_dir / "index.json"))
    assert index == {
        "entries": ["clifford-m1", "car", "quaternion", "matrix-units"]
    }
    for name in index["entries"]:
        res = load_resolution(out_dir / f"{name}.json")
        assert res.name == name


def test_compare_builtin_text():
    code, out = invoke("compare", "--builtin")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "comparison: catalog + sampled evidence, not a proof"
    # ties break by name: car lists first, all three minima flagged
    car_line = next(l for l in lines if l.startswith("car "))
    cliff_line = next(l for l in lines if l.startswith("clifford-m1 "))
    quat_line = next(l for l in lines if l.startswith("quaternion "))
    assert lines.index(car_line) < lines.index(cliff_line) < lines.index(quat_line)
    for line in (car_line, cliff_line, quat_line):
        assert line.endswith("=min")
    assert lines[-1] == "failed verification: none"


def test_compare_files_and_randoms(c1):
    code, out = invoke(
        "compare", c1, "--random", "2", "--seed", "1", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    names = [row["name"] for row in doc["ranked"]]
    assert set(names) == {"clifford-m1", "random-1", "random-2"}
    assert doc["minimum"] == ["clifford-m1"]


def test_compare_failure_exit_code(c1):
    code, out = invoke(
        "compare", c1, str(FIXTURES / "corrupted-relation.json")
    )
    assert code == 1
    assert "clifford-m1-corrupted" in out
    assert "failed verification: clifford-m1-corrupted" in out


def test_output_is_byte_deterministic(c1):
    for argv in (
        ("verify", c1),
        ("score", c1, "--format", "json"),
        ("entropy", c1, "--format", "json"),
        ("kernel", c1, "--degree", "3"),
        ("compare", "--builtin", "--random", "2"),
    ):
        _, first = invoke(*argv)
        _, second = invoke(*argv)
        assert first == second


def test_bad_arguments_exit_code():
    code, _ = invoke("clifford", "--m")
    assert code == 2
    code, _ = invoke("unknown-command")
    assert code == 2
